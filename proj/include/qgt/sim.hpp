#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "qgt/design.hpp"
#include "qgt/qgt.hpp"

namespace qgt {

/// Each of N items is defective independently with probability gamma.
/// Throws std::invalid_argument unless 0 < gamma < 1.
SupportVector sample_support(std::uint32_t N, double gamma, std::uint64_t seed);

struct Interval {
    double lo = 0.0;
    double hi = 1.0;
};

/// Wilson score interval for `successes` out of `trials` at normal quantile z.
Interval wilson_interval(std::uint64_t successes, std::uint64_t trials, double z = 1.959963984540054);

struct TrialConfig {
    std::uint32_t N = 0;
    double K = 0.0;  // expected defectives; gamma = K / N
    int t = 1;
    int d = 3;
    std::uint32_t trials = 1;
    std::uint64_t seed = 0;
    int jobs = 1;
    /// Explicit (M, r); otherwise derived from the design via make_plan or the m sweep.
    std::optional<std::uint32_t> M;
    std::optional<std::uint32_t> r;
};

struct SimReport {
    std::uint64_t m = 0;
    std::uint32_t M = 0;
    std::uint32_t r = 0;
    int s = 0;
    std::uint32_t trials = 0;
    std::uint64_t defectives = 0;
    std::uint64_t unidentified = 0;
    std::uint64_t false_positives = 0;
    std::uint64_t full_recoveries = 0;
    double error_prob = 0.0;
    Interval ci;
    double full_recovery_rate = 0.0;
    double mean_iterations = 0.0;
    double wall_seconds = 0.0;
    bool skipped = false;
    std::string note;
};

/// Right-node geometry realizing a target test count m: M = floor(m / s) with r
/// re-derived from edge balance, iterated until s is consistent. nullopt if M < 1
/// or the graph cannot be built.
struct Geometry {
    std::uint32_t M = 0;
    std::uint32_t r = 0;
    int s = 0;
};
std::optional<Geometry> geometry_for_tests(std::uint64_t m, std::uint32_t N, int t, const DegreeProfile& profile);

/// Runs config.trials independent trials on fixed (M, r) with a fresh graph and a
/// fresh support per trial.
SimReport run_trials(const TrialConfig& config, const DegreeProfile& profile, std::uint32_t M, std::uint32_t r);

/// One report per requested m; unrealizable m values yield a skipped record.
std::vector<SimReport> run_sweep(const TrialConfig& config, const DegreeProfile& profile,
                                 const std::vector<std::uint64_t>& m_values);

std::string sweep_csv(const std::vector<SimReport>& reports);

/// Per-iteration unidentified counts for comparing a decode against density evolution.
struct PeelingTrace {
    std::uint64_t defectives = 0;
    std::uint64_t defective_edges = 0;
    /// [j] for j = 0..iterations: defective items not identified by the end of iteration j.
    std::vector<std::uint64_t> unidentified_items;
    /// [j]: defective edges (v, c) such that v is not identified through any neighbor
    /// other than c by iteration j; the quantity the edge recursion tracks.
    std::vector<std::uint64_t> unidentified_edges;
};
PeelingTrace trace_peeling(const TestPlan& plan, const SupportVector& x, const DecodeOutcome& outcome, int iterations);

}  // namespace qgt
