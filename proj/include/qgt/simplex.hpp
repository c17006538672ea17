#pragma once

#include <cstddef>
#include <vector>

namespace qgt::lp {

enum class Sense { LessEqual, GreaterEqual, Equal };
enum class Status { Optimal, Infeasible, Unbounded, IterationLimit };

struct Constraint {
    std::vector<double> coeffs;
    Sense sense = Sense::LessEqual;
    double rhs = 0.0;
};

/// minimize objective . x  subject to rows, x >= 0.
struct Problem {
    std::vector<double> objective;
    std::vector<Constraint> rows;
};

struct Solution {
    Status status = Status::Infeasible;
    std::vector<double> x;
    double objective = 0.0;
    int pivots = 0;
};

/// Dense two-phase tableau simplex with Bland's anti-cycling rule.
/// Intended for small problems (tens of rows and columns).
Solution solve(const Problem& problem, double eps = 1e-10, int max_pivots = 100000);

}  // namespace qgt::lp
