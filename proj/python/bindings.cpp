#include <pybind11/pybind11.h>
#include <pybind11/stl.h>

#include "qgt/design.hpp"
#include "qgt/io.hpp"
#include "qgt/qgt.hpp"
#include "qgt/sim.hpp"

namespace py = pybind11;

namespace {

qgt::TestPlan generate(const qgt::Plan& plan, const qgt::DesignResult& design, std::uint64_t seed) {
    auto graph = qgt::sample_graph(static_cast<std::uint32_t>(plan.N), plan.M, plan.r, design.lambda_star, seed);
    return qgt::TestPlan(std::move(graph), plan.t, seed);
}

qgt::SupportVector make_support(const qgt::TestPlan& plan, std::vector<std::uint32_t> items) {
    return qgt::SupportVector(plan.items(), std::move(items));
}

qgt::TestResults make_results(const qgt::TestPlan& plan, const std::vector<std::int32_t>& values) {
    return qgt::io::results_from_json(nlohmann::json(values), plan);
}

}  // namespace

PYBIND11_MODULE(_core, m) {
    m.doc() = "Quantitative group testing with sparse graphs and BCH signatures";

    py::register_exception<qgt::OutOfRegime>(m, "OutOfRegime", PyExc_ValueError);
    py::register_exception<qgt::io::FormatError>(m, "FormatError", PyExc_ValueError);

    py::class_<qgt::DegreeProfile>(m, "DegreeProfile")
        .def_property_readonly("max_degree", &qgt::DegreeProfile::max_degree)
        .def_property_readonly("average_degree", &qgt::DegreeProfile::average_degree)
        .def_property_readonly("lambdas",
                               [](const qgt::DegreeProfile& p) {
                                   const auto s = p.lambdas();
                                   return std::vector<double>(s.begin(), s.end());
                               })
        .def("node_fractions", &qgt::DegreeProfile::node_fractions)
        .def("__getitem__", &qgt::DegreeProfile::lambda);
    m.def("profile_from_lambda", [](const std::vector<double>& lambda) { return qgt::profile_from_lambda(lambda); },
          py::arg("values"));

    py::class_<qgt::DesignResult>(m, "Design")
        .def_readonly("t", &qgt::DesignResult::t)
        .def_readonly("d", &qgt::DesignResult::d)
        .def_readonly("psi", &qgt::DesignResult::psi_star)
        .def_readonly("c", &qgt::DesignResult::c)
        .def_readonly("profile", &qgt::DesignResult::lambda_star)
        .def_property_readonly("ell", &qgt::DesignResult::average_degree)
        .def("__repr__", [](const qgt::DesignResult& d) {
            return "<Design t=" + std::to_string(d.t) + " d=" + std::to_string(d.d) + " c=" + std::to_string(d.c) +
                   ">";
        });
    m.def("design", [](int t, int d) { return qgt::optimize_psi(t, d); }, py::arg("t"), py::arg("d"),
          "Optimized degree profile, or None when infeasible.");

    py::class_<qgt::Plan>(m, "Plan")
        .def_readonly("N", &qgt::Plan::N)
        .def_readonly("K", &qgt::Plan::K)
        .def_readonly("t", &qgt::Plan::t)
        .def_readonly("d", &qgt::Plan::d)
        .def_readonly("M", &qgt::Plan::M)
        .def_readonly("r", &qgt::Plan::r)
        .def_readonly("q", &qgt::Plan::q)
        .def_readonly("s", &qgt::Plan::s)
        .def_readonly("m", &qgt::Plan::m)
        .def_readonly("r_clamped", &qgt::Plan::r_clamped);
    m.def("make_plan", &qgt::make_plan, py::arg("N"), py::arg("K"), py::arg("design"));
    m.def("analytic_tests", &qgt::analytic_tests, py::arg("N"), py::arg("K"), py::arg("t"), py::arg("c"),
          py::arg("ell"));

    py::class_<qgt::TestPlan>(m, "TestPlan")
        .def_property_readonly("N", &qgt::TestPlan::items)
        .def_property_readonly("M", &qgt::TestPlan::nodes)
        .def_property_readonly("t", &qgt::TestPlan::t)
        .def_property_readonly("tests", &qgt::TestPlan::tests)
        .def_property_readonly("right_adjacency", [](const qgt::TestPlan& p) { return p.graph.right_adjacency(); })
        .def("to_json", [](const qgt::TestPlan& p) { return qgt::io::plan_to_json(p).dump(); })
        .def_static("from_json",
                    [](const std::string& text) {
                        return qgt::io::plan_from_json(nlohmann::json::parse(text, nullptr, true));
                    })
        .def_static("from_adjacency",
                    [](std::uint32_t N, std::vector<std::vector<std::uint32_t>> adj, int t) {
                        return qgt::TestPlan(qgt::BipartiteGraph(N, std::move(adj)), t);
                    },
                    py::arg("N"), py::arg("right_adjacency"), py::arg("t"));
    m.def("generate", &generate, py::arg("plan"), py::arg("design"), py::arg("seed"));

    py::class_<qgt::DecodeOutcome>(m, "DecodeOutcome")
        .def_readonly("identified", &qgt::DecodeOutcome::identified)
        .def_readonly("iterations", &qgt::DecodeOutcome::iterations)
        .def_readonly("resolved_nodes", &qgt::DecodeOutcome::resolved_nodes)
        .def_readonly("stalled", &qgt::DecodeOutcome::stalled)
        .def_readonly("failed_nodes", &qgt::DecodeOutcome::failed_nodes)
        .def_readonly("identified_after", &qgt::DecodeOutcome::identified_after);

    // Item indices are 0-based here, as in the C++ API.
    m.def("encode",
          [](const qgt::TestPlan& plan, std::vector<std::uint32_t> support) {
              return qgt::encode(plan, make_support(plan, std::move(support))).values;
          },
          py::arg("plan"), py::arg("support"));
    m.def("decode",
          [](const qgt::TestPlan& plan, const std::vector<std::int32_t>& results, int max_iterations) {
              qgt::DecodeOptions opts;
              opts.max_iterations = max_iterations;
              py::gil_scoped_release release;
              return qgt::peel_decode(plan, make_results(plan, results), opts);
          },
          py::arg("plan"), py::arg("results"), py::arg("max_iterations") = 0);

    py::class_<qgt::SimReport>(m, "SimReport")
        .def_readonly("m", &qgt::SimReport::m)
        .def_readonly("M", &qgt::SimReport::M)
        .def_readonly("r", &qgt::SimReport::r)
        .def_readonly("trials", &qgt::SimReport::trials)
        .def_readonly("error_prob", &qgt::SimReport::error_prob)
        .def_property_readonly("ci", [](const qgt::SimReport& s) { return py::make_tuple(s.ci.lo, s.ci.hi); })
        .def_readonly("full_recovery_rate", &qgt::SimReport::full_recovery_rate)
        .def_readonly("false_positives", &qgt::SimReport::false_positives)
        .def_readonly("skipped", &qgt::SimReport::skipped);
    m.def("simulate",
          [](std::uint32_t N, double K, int t, int d, std::vector<std::uint64_t> m_values, std::uint32_t trials,
             std::uint64_t seed, int jobs) {
              const auto design = qgt::optimize_psi(t, d);
              if (!design) throw qgt::OutOfRegime("no feasible degree profile for this (t, d)");
              qgt::TrialConfig cfg;
              cfg.N = N;
              cfg.K = K;
              cfg.t = t;
              cfg.d = d;
              cfg.trials = trials;
              cfg.seed = seed;
              cfg.jobs = jobs;
              py::gil_scoped_release release;
              return qgt::run_sweep(cfg, design->lambda_star, m_values);
          },
          py::arg("N"), py::arg("K"), py::arg("t"), py::arg("d"), py::arg("m_values"), py::arg("trials"),
          py::arg("seed") = 0, py::arg("jobs") = 1);
}
