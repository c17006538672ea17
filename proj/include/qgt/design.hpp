#pragma once

#include <cstdint>
#include <optional>
#include <span>
#include <stdexcept>
#include <string>
#include <vector>

#include "qgt/graph.hpp"

namespace qgt {

/// Raised when parameters fall outside the regime the scheme is defined for.
class OutOfRegime : public std::domain_error {
public:
    using std::domain_error::domain_error;
};

// ---- density evolution -------------------------------------------------------

/// Finite-r right-node parameters for the exact recursion.
struct DEParams {
    int t = 1;
    double gamma = 0.0;  // defect probability K / N
    int r = 0;           // right degree
    double psi() const { return r * gamma; }
};

/// P(node resolvable | edge item unresolved): sum_{k<t} C(r-1,k) p^k (1-p)^{r-1-k}.
double resolve_probability_exact(double p, int t, int r);
/// Poisson limit of the same: sum_{k<t} x^k e^{-x} / k!.
double resolve_probability_poisson(double x, int t);

/// p_{j+1} = gamma * sum_i lambda_i (1 - resolve_exact(p_j))^{i-1}.
double de_step_exact(double p, const DEParams& params, const DegreeProfile& profile);
/// phi_{j+1} = sum_i lambda_i (1 - resolve_poisson(psi * phi_j))^{i-1}.
double de_step_poisson(double phi, double psi, int t, const DegreeProfile& profile);
/// phi_0 = 1, phi_1, ..., phi_steps under the Poisson recursion.
std::vector<double> de_trajectory(double psi, int t, const DegreeProfile& profile, int steps);
/// Node-perspective companion of phi_{j+1}: fraction of defective items still
/// unidentified, sum_i L_i (1 - resolve_poisson(psi * phi_j))^i.
double de_node_fraction(double phi, double psi, int t, const DegreeProfile& profile);

// ---- profile optimization -----------------------------------------------------

struct DesignOptions {
    int grid_points = 500;
    double phi_min = 1e-6;
    double margin = 1e-3;  // constraint uses (1 - margin) * phi
    double psi_min = 0.05;
    double psi_step = 0.02;
    double psi_tolerance = 1e-4;
    /// Upper end of the coarse psi scan; <= 0 selects 4 t + 3.
    double psi_max = 0.0;
};

/// Ascending logarithmic grid of `points` values in [phi_min, 1].
std::vector<double> phi_grid(int points, double phi_min);

struct ProfileSolution {
    DegreeProfile profile;
    double f = 0.0;  // -psi * sum lambda_i / i
};

/// Maximizes psi / ell over profiles whose Poisson recursion contracts by
/// (1 - margin) at every grid point. lambda_1 = 0 always; lambda_2 = 0 when t = 1.
/// nullopt when no such profile exists at this psi.
std::optional<ProfileSolution> lp_optimize_profile(int t, int d, double psi, std::span<const double> grid,
                                                   double margin);

struct DesignResult {
    int t = 0;
    int d = 0;
    double psi_star = 0.0;
    DegreeProfile lambda_star;
    double f = 0.0;
    double c = 0.0;  // -1 / f(psi*)
    double average_degree() const { return lambda_star.average_degree(); }
    /// (psi, f) pairs visited by the coarse scan; f = +inf where infeasible.
    std::vector<std::pair<double, double>> trace;
};

/// Outer minimization of f(psi). nullopt when no scanned psi is feasible (t = 1, d = 2).
/// Throws std::invalid_argument unless 1 <= t <= 4 and 2 <= d <= 32.
std::optional<DesignResult> optimize_psi(int t, int d, const DesignOptions& options = {});

// ---- planning -----------------------------------------------------------------

struct Plan {
    std::uint64_t N = 0;
    std::uint64_t K = 0;
    int t = 0;
    int d = 0;
    double c = 0.0;
    double ell = 0.0;
    double M_exact = 0.0;  // c K
    double r_exact = 0.0;  // ell N / (c K)
    std::uint32_t M = 0;   // ceil(c K)
    std::uint32_t r = 0;   // round(r_exact), at least 3
    bool r_clamped = false;
    int q = 0;
    int s = 0;  // t q + 1
    std::uint64_t m = 0;
};

/// Smallest field degree whose shortened BCH code fits r columns.
int field_degree_for(std::uint32_t r);

/// Throws OutOfRegime when 1 <= K < N fails or the rounded plan cannot be realized
/// as a right-regular graph (M r outside [N, N min(d, M)], or r beyond 2^20 - 1).
Plan make_plan(std::uint64_t N, std::uint64_t K, const DesignResult& design);

/// Continuous test count m = c K (t log2(ell N / (c K) + 1) + 1).
double analytic_tests(double N, double K, int t, double c, double ell);

enum class Baseline { RegularGraph, Greedy };

/// Closed-form test counts of the two earlier non-adaptive schemes.
/// Throws OutOfRegime unless 1 < K < N.
double baseline_tests(Baseline scheme, double N, double K);

}  // namespace qgt
