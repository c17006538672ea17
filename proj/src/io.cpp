#include "qgt/io.hpp"

#include <fstream>
#include <sstream>

namespace qgt::io {

using nlohmann::json;

namespace {

template <class T>
T field(const json& j, const char* key) {
    if (!j.contains(key)) throw FormatError(std::string("missing field '") + key + "'");
    try {
        return j.at(key).get<T>();
    } catch (const json::exception& e) {
        throw FormatError(std::string("field '") + key + "': " + e.what());
    }
}

std::vector<std::uint32_t> to_zero_based(const json& arr, std::uint32_t N, const char* what) {
    if (!arr.is_array()) throw FormatError(std::string(what) + " must be an array");
    std::vector<std::uint32_t> out;
    out.reserve(arr.size());
    for (const auto& v : arr) {
        if (!v.is_number_integer()) throw FormatError(std::string(what) + " entries must be integers");
        const auto id = v.get<std::int64_t>();
        if (id < 1 || id > static_cast<std::int64_t>(N))
            throw FormatError(std::string(what) + " item " + std::to_string(id) + " outside [1, N]");
        out.push_back(static_cast<std::uint32_t>(id - 1));
    }
    return out;
}

json to_one_based(const std::vector<std::uint32_t>& items) {
    json arr = json::array();
    for (std::uint32_t v : items) arr.push_back(static_cast<std::uint64_t>(v) + 1);
    return arr;
}

}  // namespace

json plan_to_json(const TestPlan& plan) {
    json adj = json::array();
    for (std::uint32_t i = 0; i < plan.nodes(); ++i) {
        auto nb = plan.graph.right_neighbors(i);
        adj.push_back(to_one_based({nb.begin(), nb.end()}));
    }
    return json{{"version", kPlanVersion},
                {"N", plan.items()},
                {"M", plan.nodes()},
                {"r", plan.graph.right_degree()},
                {"t", plan.t()},
                {"q", plan.signature.parity_check().q()},
                {"seed", plan.seed},
                {"right_adj", std::move(adj)}};
}

TestPlan plan_from_json(const json& j) {
    if (!j.is_object()) throw FormatError("plan must be a JSON object");
    const int version = field<int>(j, "version");
    if (version != kPlanVersion) throw FormatError("unsupported plan version " + std::to_string(version));
    const auto N = field<std::uint32_t>(j, "N");
    const auto M = field<std::uint32_t>(j, "M");
    const auto r = field<std::uint32_t>(j, "r");
    const auto t = field<int>(j, "t");
    const auto q = field<int>(j, "q");
    const auto seed = j.contains("seed") ? field<std::uint64_t>(j, "seed") : 0;
    if (!j.contains("right_adj") || !j.at("right_adj").is_array()) throw FormatError("missing array 'right_adj'");
    const auto& adj = j.at("right_adj");
    if (adj.size() != M) throw FormatError("right_adj has " + std::to_string(adj.size()) + " nodes, M=" + std::to_string(M));
    std::vector<std::vector<std::uint32_t>> lists;
    lists.reserve(M);
    for (const auto& row : adj) {
        lists.push_back(to_zero_based(row, N, "right_adj"));
        if (lists.back().size() != r) throw FormatError("right node degree differs from r");
    }
    try {
        TestPlan plan(BipartiteGraph(N, std::move(lists)), t, seed);
        if (plan.signature.parity_check().q() != q)
            throw FormatError("q=" + std::to_string(q) + " inconsistent with r=" + std::to_string(r));
        return plan;
    } catch (const std::invalid_argument& e) {
        throw FormatError(std::string("invalid plan: ") + e.what());
    }
}

json support_to_json(const SupportVector& x) { return to_one_based(x.defectives); }

SupportVector support_from_json(const json& j, std::uint32_t N) {
    try {
        return SupportVector(N, to_zero_based(j, N, "support"));
    } catch (const std::invalid_argument& e) {
        throw FormatError(std::string("invalid support: ") + e.what());
    }
}

json results_to_json(const TestResults& y) { return json(y.values); }

TestResults results_from_json(const json& j, const TestPlan& plan) {
    if (!j.is_array()) throw FormatError("results must be an integer array");
    if (j.size() != plan.tests())
        throw FormatError("results have " + std::to_string(j.size()) + " entries, plan needs " +
                          std::to_string(plan.tests()));
    TestResults y;
    y.blocks = plan.nodes();
    y.block_size = plan.tests_per_node();
    y.values.reserve(j.size());
    for (const auto& v : j) {
        if (!v.is_number_integer() || v.get<std::int64_t>() < 0) throw FormatError("results must be nonnegative integers");
        y.values.push_back(v.get<std::int32_t>());
    }
    return y;
}

json outcome_to_json(const DecodeOutcome& out) {
    return json{{"identified", to_one_based(out.identified)},
                {"iterations", out.iterations},
                {"resolved_nodes", out.resolved_nodes},
                {"stalled", out.stalled},
                {"failed_nodes", out.failed_nodes},
                {"decode_failures", out.decode_failures}};
}

json design_to_json(const DesignResult& design) {
    auto lambda = design.lambda_star.lambdas();
    return json{{"version", 1},
                {"t", design.t},
                {"d", design.d},
                {"psi", design.psi_star},
                {"c", design.c},
                {"f", design.f},
                {"ell", design.average_degree()},
                {"lambda", std::vector<double>(lambda.begin(), lambda.end())}};
}

json plan_summary_to_json(const Plan& p) {
    return json{{"version", 1},     {"N", p.N},         {"K", p.K},
                {"t", p.t},         {"d", p.d},         {"c", p.c},
                {"ell", p.ell},     {"M_exact", p.M_exact}, {"r_exact", p.r_exact},
                {"M", p.M},         {"r", p.r},         {"r_clamped", p.r_clamped},
                {"q", p.q},         {"s", p.s},         {"m", p.m}};
}

json report_to_json(const SimReport& r) {
    json j{{"m", r.m},
           {"M", r.M},
           {"r", r.r},
           {"s", r.s},
           {"trials", r.trials},
           {"defectives", r.defectives},
           {"unidentified", r.unidentified},
           {"false_positives", r.false_positives},
           {"error_prob", r.error_prob},
           {"ci_lo", r.ci.lo},
           {"ci_hi", r.ci.hi},
           {"full_recovery", r.full_recovery_rate},
           {"mean_iterations", r.mean_iterations},
           {"wall_seconds", r.wall_seconds},
           {"skipped", r.skipped}};
    if (!r.note.empty()) j["note"] = r.note;
    return j;
}

json read_json_file(const std::string& path) {
    std::ifstream in(path);
    if (!in) throw FormatError("cannot open " + path);
    try {
        return json::parse(in);
    } catch (const json::parse_error& e) {
        throw FormatError(path + ": " + e.what());
    }
}

void write_text(const std::string& path, const std::string& text) {
    std::ofstream out(path);
    if (!out) throw FormatError("cannot write " + path);
    out << text;
    if (!out) throw FormatError("write failed for " + path);
}

}  // namespace qgt::io
