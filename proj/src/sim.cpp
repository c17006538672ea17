#include "qgt/sim.hpp"

#include <algorithm>
#include <atomic>
#include <chrono>
#include <cmath>
#include <limits>
#include <sstream>
#include <stdexcept>
#include <thread>

#include "qgt/random.hpp"

namespace qgt {

SupportVector sample_support(std::uint32_t N, double gamma, std::uint64_t seed) {
    if (!(gamma > 0.0) || !(gamma < 1.0)) throw std::invalid_argument("defect probability must lie in (0, 1)");
    Rng rng(seed);
    // Gaps between defectives are geometric, so sampling costs O(K) rather than O(N).
    std::geometric_distribution<std::uint64_t> gap(gamma);
    std::vector<std::uint32_t> items;
    for (std::uint64_t idx = gap(rng); idx < N; idx += 1 + gap(rng)) items.push_back(static_cast<std::uint32_t>(idx));
    return SupportVector(N, std::move(items));
}

Interval wilson_interval(std::uint64_t successes, std::uint64_t trials, double z) {
    if (trials == 0) return {0.0, 1.0};
    const double n = static_cast<double>(trials);
    const double p = static_cast<double>(successes) / n;
    const double z2 = z * z;
    const double denom = 1.0 + z2 / n;
    const double center = (p + z2 / (2.0 * n)) / denom;
    const double half = z * std::sqrt(p * (1.0 - p) / n + z2 / (4.0 * n * n)) / denom;
    return {std::max(0.0, center - half), std::min(1.0, center + half)};
}

std::optional<Geometry> geometry_for_tests(std::uint64_t m, std::uint32_t N, int t, const DegreeProfile& profile) {
    const double ell = profile.average_degree();
    const std::uint64_t d = static_cast<std::uint64_t>(profile.max_degree());
    Geometry g;
    g.s = t * 3 + 1;
    for (int round = 0; round < 32; ++round) {
        const std::uint64_t M = m / static_cast<std::uint64_t>(g.s);
        if (M < 1 || M > 0xFFFFFFFFull) return std::nullopt;
        g.M = static_cast<std::uint32_t>(M);
        const std::uint64_t cap = std::min<std::uint64_t>(d, M);
        double r = std::round(ell * N / static_cast<double>(M));
        r = std::min({r, static_cast<double>(N), std::floor(static_cast<double>(N * cap) / static_cast<double>(M))});
        r = std::max(r, 3.0);
        if (r > static_cast<double>((1u << 20) - 1)) return std::nullopt;
        g.r = static_cast<std::uint32_t>(r);
        const int s = t * field_degree_for(g.r) + 1;
        if (s == g.s) break;
        // Larger s only lowers M; take it on oscillation so M * s never exceeds m.
        if (round > 8 && s < g.s) break;
        g.s = s;
    }
    const std::uint64_t edges = static_cast<std::uint64_t>(g.M) * g.r;
    const std::uint64_t cap = std::min<std::uint64_t>(d, g.M);
    if (g.r > N || edges < N || edges > static_cast<std::uint64_t>(N) * cap) return std::nullopt;
    return g;
}

namespace {

struct TrialOutcome {
    std::uint64_t defectives = 0;
    std::uint64_t unidentified = 0;
    std::uint64_t false_positives = 0;
    int iterations = 0;
};

TrialOutcome run_one(const TrialConfig& config, const DegreeProfile& profile, std::uint32_t M, std::uint32_t r,
                     std::uint32_t trial) {
    const double gamma = config.K / config.N;
    auto graph = sample_graph(config.N, M, r, profile, mix_seed(config.seed, 2ull * trial));
    const TestPlan plan(std::move(graph), config.t);
    const auto x = sample_support(config.N, gamma, mix_seed(config.seed, 2ull * trial + 1));
    const auto y = encode(plan, x);
    const auto out = peel_decode(plan, y);

    TrialOutcome o;
    o.defectives = x.defectives.size();
    std::vector<std::uint32_t> hit;
    std::set_intersection(x.defectives.begin(), x.defectives.end(), out.identified.begin(), out.identified.end(),
                          std::back_inserter(hit));
    o.unidentified = o.defectives - hit.size();
    o.false_positives = out.identified.size() - hit.size();
    o.iterations = out.iterations;
    return o;
}

}  // namespace

SimReport run_trials(const TrialConfig& config, const DegreeProfile& profile, std::uint32_t M, std::uint32_t r) {
    if (config.trials < 1) throw std::invalid_argument("trials must be at least 1");
    const auto start = std::chrono::steady_clock::now();
    std::vector<TrialOutcome> outcomes(config.trials);
    const int jobs = std::max(1, std::min<int>(config.jobs, static_cast<int>(config.trials)));
    if (jobs == 1) {
        for (std::uint32_t i = 0; i < config.trials; ++i) outcomes[i] = run_one(config, profile, M, r, i);
    } else {
        std::atomic<std::uint32_t> next{0};
        std::vector<std::thread> pool;
        std::exception_ptr error;
        std::atomic<bool> failed{false};
        for (int j = 0; j < jobs; ++j)
            pool.emplace_back([&] {
                for (std::uint32_t i = next++; i < config.trials && !failed; i = next++) {
                    try {
                        outcomes[i] = run_one(config, profile, M, r, i);
                    } catch (...) {
                        if (!failed.exchange(true)) error = std::current_exception();
                    }
                }
            });
        for (auto& th : pool) th.join();
        if (error) std::rethrow_exception(error);
    }

    SimReport rep;
    rep.M = M;
    rep.r = r;
    rep.s = config.t * field_degree_for(r) + 1;
    rep.m = static_cast<std::uint64_t>(M) * rep.s;
    rep.trials = config.trials;
    std::uint64_t iterations = 0;
    for (const auto& o : outcomes) {
        rep.defectives += o.defectives;
        rep.unidentified += o.unidentified;
        rep.false_positives += o.false_positives;
        if (o.unidentified == 0 && o.false_positives == 0) ++rep.full_recoveries;
        iterations += static_cast<std::uint64_t>(o.iterations);
    }
    rep.error_prob = rep.defectives ? static_cast<double>(rep.unidentified) / static_cast<double>(rep.defectives) : 0.0;
    rep.ci = wilson_interval(rep.unidentified, rep.defectives);
    rep.full_recovery_rate = static_cast<double>(rep.full_recoveries) / config.trials;
    rep.mean_iterations = static_cast<double>(iterations) / config.trials;
    rep.wall_seconds = std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
    return rep;
}

std::vector<SimReport> run_sweep(const TrialConfig& config, const DegreeProfile& profile,
                                 const std::vector<std::uint64_t>& m_values) {
    std::vector<SimReport> out;
    for (std::uint64_t m : m_values) {
        const auto g = geometry_for_tests(m, config.N, config.t, profile);
        if (!g) {
            SimReport skip;
            skip.m = m;
            skip.skipped = true;
            skip.note = "m=" + std::to_string(m) + " not realizable for N=" + std::to_string(config.N);
            out.push_back(skip);
            continue;
        }
        auto rep = run_trials(config, profile, g->M, g->r);
        rep.note = "requested m=" + std::to_string(m);
        out.push_back(rep);
    }
    return out;
}

std::string sweep_csv(const std::vector<SimReport>& reports) {
    std::ostringstream os;
    os.precision(10);
    os << "m,error_prob,ci_lo,ci_hi,full_recovery,trials\n";
    for (const auto& r : reports) {
        if (r.skipped) continue;
        os << r.m << ',' << r.error_prob << ',' << r.ci.lo << ',' << r.ci.hi << ',' << r.full_recovery_rate << ','
           << r.trials << '\n';
    }
    return os.str();
}

PeelingTrace trace_peeling(const TestPlan& plan, const SupportVector& x, const DecodeOutcome& outcome,
                           int iterations) {
    constexpr std::uint32_t kNever = std::numeric_limits<std::uint32_t>::max();
    auto when = [&](std::uint32_t node) {
        const std::uint32_t j = outcome.resolved_in[node];
        return j == 0 ? kNever : j;
    };
    PeelingTrace tr;
    tr.defectives = x.defectives.size();
    tr.unidentified_items.assign(static_cast<std::size_t>(iterations) + 1, 0);
    tr.unidentified_edges.assign(static_cast<std::size_t>(iterations) + 1, 0);
    for (std::uint32_t v : x.defectives) {
        const auto inc = plan.graph.left_incidences(v);
        tr.defective_edges += inc.size();
        // Earliest and second-earliest resolution among v's neighbors.
        std::uint32_t first = kNever, second = kNever;
        for (const auto& e : inc) {
            const std::uint32_t w = when(e.node);
            if (w < first) {
                second = first;
                first = w;
            } else if (w < second) {
                second = w;
            }
        }
        for (int j = 0; j <= iterations; ++j) {
            const auto ju = static_cast<std::uint32_t>(j);
            if (first > ju) ++tr.unidentified_items[j];
            for (const auto& e : inc) {
                const std::uint32_t other = when(e.node) == first ? second : first;
                if (other > ju) ++tr.unidentified_edges[j];
            }
        }
    }
    return tr;
}

}  // namespace qgt
