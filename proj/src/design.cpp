#include "qgt/design.hpp"

#include <algorithm>
#include <bit>
#include <cmath>
#include <limits>

#include "qgt/simplex.hpp"

namespace qgt {

double resolve_probability_exact(double p, int t, int r) {
    const int n = r - 1;
    double sum = 0.0;
    double binom = 1.0;
    for (int k = 0; k < t && k <= n; ++k) {
        if (k > 0) binom *= static_cast<double>(n - k + 1) / k;
        sum += binom * std::pow(p, k) * std::pow(1.0 - p, n - k);
    }
    return sum;
}

double resolve_probability_poisson(double x, int t) {
    double term = std::exp(-x);
    double sum = 0.0;
    for (int k = 0; k < t; ++k) {
        sum += term;
        term *= x / (k + 1);
    }
    return sum;
}

namespace {

double edge_sum(const DegreeProfile& profile, double unresolved) {
    // sum_i lambda_i u^{i-1}, Horner from the top degree.
    double acc = 0.0;
    for (int i = profile.max_degree(); i >= 1; --i) acc = acc * unresolved + profile.lambda(i);
    return acc;
}

}  // namespace

double de_step_exact(double p, const DEParams& params, const DegreeProfile& profile) {
    return params.gamma * edge_sum(profile, 1.0 - resolve_probability_exact(p, params.t, params.r));
}

double de_step_poisson(double phi, double psi, int t, const DegreeProfile& profile) {
    return edge_sum(profile, 1.0 - resolve_probability_poisson(psi * phi, t));
}

std::vector<double> de_trajectory(double psi, int t, const DegreeProfile& profile, int steps) {
    std::vector<double> out{1.0};
    for (int j = 0; j < steps; ++j) out.push_back(de_step_poisson(out.back(), psi, t, profile));
    return out;
}

double de_node_fraction(double phi, double psi, int t, const DegreeProfile& profile) {
    const double u = 1.0 - resolve_probability_poisson(psi * phi, t);
    const auto L = profile.node_fractions();
    double acc = 0.0;
    for (std::size_t i = 0; i < L.size(); ++i) acc += L[i] * std::pow(u, static_cast<double>(i + 1));
    return acc;
}

std::vector<double> phi_grid(int points, double phi_min) {
    if (points < 2 || !(phi_min > 0.0) || phi_min >= 1.0) throw std::invalid_argument("bad phi grid specification");
    std::vector<double> g(points);
    const double lo = std::log(phi_min);
    for (int i = 0; i < points; ++i) g[i] = std::exp(lo - lo * i / (points - 1));
    g.back() = 1.0;
    return g;
}

std::optional<ProfileSolution> lp_optimize_profile(int t, int d, double psi, std::span<const double> grid,
                                                   double margin) {
    if (!(psi > 0.0)) throw std::invalid_argument("psi must be positive");
    if (grid.empty()) throw std::invalid_argument("phi grid is empty");
    // Degree-1 items never drain the recursion to zero; with t = 1 degree-2 items
    // form undecodable cycles, so both are excluded from the search.
    const int lo = t == 1 ? 3 : 2;
    if (d < lo) return std::nullopt;
    const int vars = d - lo + 1;

    // Row g, scaled by 1/phi: sum_i lambda_i G(phi)^{i-1} / phi <= 1 - margin.
    std::vector<std::vector<double>> rows(grid.size(), std::vector<double>(vars));
    for (std::size_t g = 0; g < grid.size(); ++g) {
        const double G = 1.0 - resolve_probability_poisson(psi * grid[g], t);
        double pw = std::pow(G, lo - 1);
        for (int k = 0; k < vars; ++k) {
            rows[g][k] = pw / grid[g];
            pw *= G;
        }
    }
    const double bound = 1.0 - margin;

    lp::Problem base;
    base.objective.resize(vars);
    for (int k = 0; k < vars; ++k) base.objective[k] = -1.0 / (lo + k);
    base.rows.push_back({std::vector<double>(vars, 1.0), lp::Sense::Equal, 1.0});

    // Cutting planes: solve on a sparse subset, then add the worst violated rows.
    std::vector<std::uint8_t> active(grid.size(), 0);
    for (std::size_t g = 0; g < grid.size(); g += 25) active[g] = 1;
    active.back() = 1;

    lp::Solution sol;
    for (int round = 0; round < 200; ++round) {
        lp::Problem prob = base;
        for (std::size_t g = 0; g < grid.size(); ++g)
            if (active[g]) prob.rows.push_back({rows[g], lp::Sense::LessEqual, bound});
        sol = lp::solve(prob);
        if (sol.status == lp::Status::Infeasible) return std::nullopt;
        if (sol.status != lp::Status::Optimal) throw std::runtime_error("profile LP did not converge");

        std::vector<std::pair<double, std::size_t>> violated;
        for (std::size_t g = 0; g < grid.size(); ++g) {
            if (active[g]) continue;
            double lhs = 0.0;
            for (int k = 0; k < vars; ++k) lhs += rows[g][k] * sol.x[k];
            if (lhs > bound + 1e-12) violated.emplace_back(lhs - bound, g);
        }
        if (violated.empty()) break;
        std::sort(violated.begin(), violated.end(), std::greater<>());
        for (std::size_t k = 0; k < std::min<std::size_t>(8, violated.size()); ++k) active[violated[k].second] = 1;
    }

    std::vector<double> lambda(d, 0.0);
    double sum = 0.0;
    for (int k = 0; k < vars; ++k) {
        lambda[lo - 1 + k] = std::max(0.0, sol.x[k]);
        sum += lambda[lo - 1 + k];
    }
    for (double& v : lambda) v /= sum;
    ProfileSolution out{profile_from_lambda(lambda), 0.0};
    out.f = -psi / out.profile.average_degree();
    return out;
}

std::optional<DesignResult> optimize_psi(int t, int d, const DesignOptions& options) {
    if (t < 1 || t > 4) throw std::invalid_argument("t must lie in [1, 4]");
    if (d < 2 || d > 32) throw std::invalid_argument("d must lie in [2, 32]");
    const auto grid = phi_grid(options.grid_points, options.phi_min);
    const double psi_max = options.psi_max > 0.0 ? options.psi_max : 4.0 * t + 3.0;
    constexpr double kInf = std::numeric_limits<double>::infinity();

    auto f_at = [&](double psi) {
        auto sol = lp_optimize_profile(t, d, psi, grid, options.margin);
        return sol ? sol->f : kInf;
    };

    DesignResult res;
    res.t = t;
    res.d = d;
    double best_f = kInf, best_psi = 0.0;
    const int steps = static_cast<int>(std::floor((psi_max - options.psi_min) / options.psi_step + 1e-9));
    for (int k = 0; k <= steps; ++k) {
        const double psi = options.psi_min + k * options.psi_step;
        const double f = f_at(psi);
        res.trace.emplace_back(psi, f);
        if (f < best_f) {
            best_f = f;
            best_psi = psi;
        }
        // The recursion grows with psi for every profile, so infeasibility persists.
        if (f == kInf && best_f < kInf) break;
    }
    if (best_f == kInf) return std::nullopt;

    // Golden-section refinement; the optimum usually sits on the feasibility edge,
    // so keep the best feasible point seen rather than the bracket midpoint.
    const double ratio = (std::sqrt(5.0) - 1.0) / 2.0;
    double a = std::max(options.psi_min, best_psi - options.psi_step);
    double b = best_psi + options.psi_step;
    auto probe = [&](double psi) {
        const double f = f_at(psi);
        if (f < best_f) {
            best_f = f;
            best_psi = psi;
        }
        return f;
    };
    double x1 = b - ratio * (b - a), x2 = a + ratio * (b - a);
    double f1 = probe(x1), f2 = probe(x2);
    while (b - a > options.psi_tolerance) {
        if (f1 < f2) {
            b = x2;
            x2 = x1;
            f2 = f1;
            x1 = b - ratio * (b - a);
            f1 = probe(x1);
        } else {
            a = x1;
            x1 = x2;
            f1 = f2;
            x2 = a + ratio * (b - a);
            f2 = probe(x2);
        }
    }

    auto sol = lp_optimize_profile(t, d, best_psi, grid, options.margin);
    res.psi_star = best_psi;
    res.lambda_star = sol->profile;
    res.f = sol->f;
    res.c = -1.0 / sol->f;
    return res;
}

int field_degree_for(std::uint32_t r) { return std::max(3, static_cast<int>(std::bit_width(r))); }

Plan make_plan(std::uint64_t N, std::uint64_t K, const DesignResult& design) {
    if (K < 1 || K >= N) throw OutOfRegime("planner needs 1 <= K < N");
    Plan p;
    p.N = N;
    p.K = K;
    p.t = design.t;
    p.d = design.d;
    p.c = design.c;
    p.ell = design.average_degree();
    p.M_exact = p.c * static_cast<double>(K);
    p.r_exact = p.ell * static_cast<double>(N) / p.M_exact;
    p.M = static_cast<std::uint32_t>(std::ceil(p.M_exact - 1e-9));
    const double r_round = std::round(p.r_exact);
    if (r_round > static_cast<double>((1u << 20) - 1)) throw OutOfRegime("right degree exceeds 2^20 - 1");
    p.r = static_cast<std::uint32_t>(r_round);
    if (p.r < 3) {
        p.r = 3;
        p.r_clamped = true;
    }
    p.q = field_degree_for(p.r);
    p.s = p.t * p.q + 1;
    p.m = static_cast<std::uint64_t>(p.M) * p.s;

    const std::uint64_t edges = static_cast<std::uint64_t>(p.M) * p.r;
    const std::uint64_t cap = std::min<std::uint64_t>(static_cast<std::uint64_t>(p.d), p.M);
    if (p.r > N || edges < N || edges > N * cap)
        throw OutOfRegime("plan with M=" + std::to_string(p.M) + ", r=" + std::to_string(p.r) +
                          " cannot be realized for N=" + std::to_string(N));
    return p;
}

double analytic_tests(double N, double K, int t, double c, double ell) {
    return c * K * (t * std::log2(ell * N / (c * K) + 1.0) + 1.0);
}

double baseline_tests(Baseline scheme, double N, double K) {
    if (!(K > 1.0) || !(K < N)) throw OutOfRegime("baseline formulas need 1 < K < N");
    switch (scheme) {
        case Baseline::RegularGraph:
            return 1.19 * K * std::log2(4.74 * N / K);
        case Baseline::Greedy: {
            const double theta = std::log(K) / std::log(N);
            const double st = std::sqrt(theta);
            return (1.0 + st) / (1.0 - st) * K * std::log(N / K);
        }
    }
    throw std::invalid_argument("unknown baseline");
}

}  // namespace qgt
