// qgt: design, build, run and evaluate quantitative group testing plans.
//
// Exit codes: 0 success, 1 usage / I/O / format error, 2 infeasible or
// out-of-regime parameters, 3 decode finished without recovering every node.

#include <CLI11.hpp>

#include <cstdint>
#include <iostream>
#include <random>
#include <sstream>

#include "qgt/design.hpp"
#include "qgt/io.hpp"
#include "qgt/qgt.hpp"
#include "qgt/sim.hpp"

namespace {

using nlohmann::json;

constexpr int kExitFormat = 1;
constexpr int kExitRegime = 2;
constexpr int kExitIncomplete = 3;

void emit(const std::string& out, const std::string& text) {
    if (out.empty()) std::cout << text;
    else qgt::io::write_text(out, text);
}

std::uint64_t resolve_seed(const std::optional<std::uint64_t>& seed) {
    if (seed) return *seed;
    std::random_device rd;
    const std::uint64_t s = (static_cast<std::uint64_t>(rd()) << 32) ^ rd();
    std::cerr << "seed: " << s << '\n';
    return s;
}

/// Default maximum left degree per t: the widest column of the published tables.
int default_degree(int t) { return t == 1 ? 18 : 17; }

qgt::DesignResult require_design(int t, int d) {
    auto design = qgt::optimize_psi(t, d);
    if (!design) throw qgt::OutOfRegime("no degree profile satisfies the recursion for t=" + std::to_string(t) +
                                        ", d=" + std::to_string(d));
    return *design;
}

std::string tables_csv(int t) {
    const int d_lo = 2;
    const int d_hi = t == 1 ? 18 : 17;
    std::ostringstream os;
    os.precision(6);
    os << "t,d,c,ell";
    for (int i = 2; i <= d_hi; ++i) os << ",lambda_" << i;
    os << '\n';
    for (int d = d_lo; d <= d_hi; ++d) {
        const auto design = qgt::optimize_psi(t, d);
        os << t << ',' << d << ',';
        if (!design) {
            os << "infeasible,";
            for (int i = 2; i <= d_hi; ++i) os << ',';
            os << '\n';
            continue;
        }
        os << design->c << ',' << design->average_degree();
        for (int i = 2; i <= d_hi; ++i) {
            os << ',';
            const double l = design->lambda_star.lambda(i);
            if (l > 5e-4) os << l;
        }
        os << '\n';
    }
    return os.str();
}

std::string compare_csv(double N, const std::vector<double>& ks, const std::optional<int>& d_override) {
    std::vector<qgt::DesignResult> designs;
    for (int t = 1; t <= 3; ++t) designs.push_back(require_design(t, d_override.value_or(default_degree(t))));
    std::ostringstream os;
    os.precision(10);
    os << "K,m_t1,m_t2,m_t3,m_regular,m_greedy\n";
    for (double K : ks) {
        os << K;
        for (const auto& dsg : designs) os << ',' << qgt::analytic_tests(N, K, dsg.t, dsg.c, dsg.average_degree());
        os << ',' << qgt::baseline_tests(qgt::Baseline::RegularGraph, N, K) << ','
           << qgt::baseline_tests(qgt::Baseline::Greedy, N, K) << '\n';
    }
    return os.str();
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"Quantitative group testing with irregular sparse graph codes"};
    app.require_subcommand(1);

    int t = 1, d = 3;
    std::optional<int> d_opt;
    std::uint64_t N = 0;
    double K = 0;
    std::optional<std::uint64_t> seed;
    std::optional<std::uint32_t> M_override, r_override;
    std::string out, plan_path, support_path, results_path;
    std::vector<std::uint64_t> m_values;
    std::vector<double> k_values;
    std::uint32_t trials = 100;
    int jobs = 1;
    bool as_json = false;
    int max_iterations = 0;

    auto* design = app.add_subcommand("design", "Optimize the left degree profile for (t, d)");
    design->add_option("--t", t, "BCH correction capability")->required()->check(CLI::Range(1, 4));
    design->add_option("--d", d, "Maximum left degree")->required()->check(CLI::Range(2, 32));
    design->add_option("--out", out, "Output file (default stdout)");

    auto* plan = app.add_subcommand("plan", "Derive M, r, s, m for N items and K expected defectives");
    plan->add_option("--N", N)->required()->check(CLI::PositiveNumber);
    plan->add_option("--K", K)->required()->check(CLI::PositiveNumber);
    plan->add_option("--t", t)->required()->check(CLI::Range(1, 4));
    plan->add_option("--d", d_opt)->check(CLI::Range(2, 32));
    plan->add_option("--out", out);

    auto* gen = app.add_subcommand("gen", "Sample a test plan (graph + signature) and write it as JSON");
    gen->add_option("--N", N)->required()->check(CLI::PositiveNumber);
    gen->add_option("--K", K, "Expected defectives (used by the planner)")->check(CLI::PositiveNumber);
    gen->add_option("--t", t)->required()->check(CLI::Range(1, 4));
    gen->add_option("--d", d_opt)->check(CLI::Range(2, 32));
    gen->add_option("--M", M_override, "Override the planner's right-node count");
    gen->add_option("--r", r_override, "Override the planner's right degree");
    gen->add_option("--seed", seed);
    gen->add_option("--out", out);

    auto* enc = app.add_subcommand("encode", "Compute test results for a plan and a defective set");
    enc->add_option("--plan", plan_path)->required()->check(CLI::ExistingFile);
    enc->add_option("--support", support_path, "JSON array of 1-based defective ids")->required()->check(CLI::ExistingFile);
    enc->add_option("--out", out);

    auto* dec = app.add_subcommand("decode", "Recover defectives from test results by peeling");
    dec->add_option("--plan", plan_path)->required()->check(CLI::ExistingFile);
    dec->add_option("--results", results_path)->required()->check(CLI::ExistingFile);
    dec->add_option("--max-iterations", max_iterations, "Default M + 1");
    dec->add_option("--out", out);

    auto* sim = app.add_subcommand("simulate", "Monte Carlo error probability over a sweep of m");
    sim->add_option("--N", N)->required()->check(CLI::PositiveNumber);
    sim->add_option("--K", K)->required()->check(CLI::PositiveNumber);
    sim->add_option("--t", t)->required()->check(CLI::Range(1, 4));
    sim->add_option("--d", d_opt)->check(CLI::Range(2, 32));
    sim->add_option("--m", m_values, "Test counts to evaluate (default: the planner's m)");
    sim->add_option("--trials", trials)->check(CLI::PositiveNumber);
    sim->add_option("--seed", seed);
    sim->add_option("--jobs", jobs)->check(CLI::PositiveNumber);
    sim->add_flag("--json", as_json, "Emit JSON reports instead of CSV");
    sim->add_option("--out", out);

    auto* tables = app.add_subcommand("tables", "Optimized c(t, d) and profiles over the table range of d");
    tables->add_option("--t", t)->required()->check(CLI::Range(1, 3));
    tables->add_option("--out", out);

    auto* cmp = app.add_subcommand("compare", "Analytic test counts against the two earlier schemes");
    cmp->add_option("--N", N)->required()->check(CLI::PositiveNumber);
    cmp->add_option("--K", k_values, "Defective counts (default 2^10 .. 2^20)");
    cmp->add_option("--d", d_opt)->check(CLI::Range(2, 32));
    cmp->add_option("--out", out);

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        const int code = app.exit(e);
        return code == 0 ? 0 : kExitFormat;
    }

    try {
        if (*design) {
            auto res = qgt::optimize_psi(t, d);
            if (!res) {
                std::cerr << "infeasible: no profile with max degree " << d << " drains the recursion for t=" << t << '\n';
                emit(out, json{{"version", 1}, {"t", t}, {"d", d}, {"feasible", false}}.dump(2) + "\n");
                return kExitRegime;
            }
            auto j = qgt::io::design_to_json(*res);
            j["feasible"] = true;
            emit(out, j.dump(2) + "\n");
        } else if (*plan) {
            const auto dsg = require_design(t, d_opt.value_or(default_degree(t)));
            const auto p = qgt::make_plan(N, static_cast<std::uint64_t>(std::llround(K)), dsg);
            emit(out, qgt::io::plan_summary_to_json(p).dump(2) + "\n");
        } else if (*gen) {
            const int dd = d_opt.value_or(default_degree(t));
            const auto dsg = require_design(t, dd);
            std::uint32_t M = 0, r = 0;
            if (!M_override || !r_override) {
                if (!(K > 0)) throw CLI::ValidationError("--K", "needed unless both --M and --r are given");
                const auto p = qgt::make_plan(N, static_cast<std::uint64_t>(std::llround(K)), dsg);
                M = p.M;
                r = p.r;
            }
            if (M_override) M = *M_override;
            if (r_override) r = *r_override;
            const std::uint64_t s = resolve_seed(seed);
            qgt::TestPlan tp(qgt::sample_graph(static_cast<std::uint32_t>(N), M, r, dsg.lambda_star, s), t, s);
            emit(out, qgt::io::plan_to_json(tp).dump() + "\n");
        } else if (*enc) {
            const auto tp = qgt::io::plan_from_json(qgt::io::read_json_file(plan_path));
            const auto x = qgt::io::support_from_json(qgt::io::read_json_file(support_path), tp.items());
            emit(out, qgt::io::results_to_json(qgt::encode(tp, x)).dump() + "\n");
        } else if (*dec) {
            const auto tp = qgt::io::plan_from_json(qgt::io::read_json_file(plan_path));
            const auto y = qgt::io::results_from_json(qgt::io::read_json_file(results_path), tp);
            qgt::DecodeOptions opts;
            opts.max_iterations = max_iterations;
            const auto res = qgt::peel_decode(tp, y, opts);
            emit(out, qgt::io::outcome_to_json(res).dump(2) + "\n");
            if (res.stalled || res.failed_nodes > 0) return kExitIncomplete;
        } else if (*sim) {
            const int dd = d_opt.value_or(default_degree(t));
            const auto dsg = require_design(t, dd);
            qgt::TrialConfig cfg;
            cfg.N = static_cast<std::uint32_t>(N);
            cfg.K = K;
            cfg.t = t;
            cfg.d = dd;
            cfg.trials = trials;
            cfg.seed = resolve_seed(seed);
            cfg.jobs = jobs;
            if (m_values.empty())
                m_values.push_back(qgt::make_plan(N, static_cast<std::uint64_t>(std::llround(K)), dsg).m);
            const auto reports = qgt::run_sweep(cfg, dsg.lambda_star, m_values);
            for (const auto& r : reports)
                if (r.skipped) std::cerr << "warning: skipped " << r.note << '\n';
            if (as_json) {
                json arr = json::array();
                for (const auto& r : reports) arr.push_back(qgt::io::report_to_json(r));
                emit(out, json{{"version", 1}, {"seed", cfg.seed}, {"reports", arr}}.dump(2) + "\n");
            } else {
                emit(out, qgt::sweep_csv(reports));
            }
        } else if (*tables) {
            emit(out, tables_csv(t));
        } else if (*cmp) {
            if (k_values.empty())
                for (int e = 10; e <= 20; ++e) k_values.push_back(static_cast<double>(1u << e));
            emit(out, compare_csv(static_cast<double>(N), k_values, d_opt));
        }
    } catch (const qgt::OutOfRegime& e) {
        std::cerr << "out of regime: " << e.what() << '\n';
        return kExitRegime;
    } catch (const qgt::io::FormatError& e) {
        std::cerr << "format error: " << e.what() << '\n';
        return kExitFormat;
    } catch (const CLI::Error& e) {
        std::cerr << e.what() << '\n';
        return kExitFormat;
    } catch (const std::domain_error& e) {
        std::cerr << "out of regime: " << e.what() << '\n';
        return kExitRegime;
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << '\n';
        return kExitFormat;
    }
    return 0;
}
