#include "qgt/simplex.hpp"

#include <cmath>
#include <stdexcept>

namespace qgt::lp {

namespace {

class Tableau {
public:
    Tableau(std::size_t rows, std::size_t cols) : m_(rows), n_(cols), a_(rows * (cols + 1), 0.0), basis_(rows, 0) {}

    double& at(std::size_t i, std::size_t j) { return a_[i * (n_ + 1) + j]; }
    double at(std::size_t i, std::size_t j) const { return a_[i * (n_ + 1) + j]; }
    double& rhs(std::size_t i) { return at(i, n_); }
    std::size_t rows() const { return m_; }
    std::size_t cols() const { return n_; }
    std::vector<std::size_t>& basis() { return basis_; }

    void pivot(std::size_t row, std::size_t col, std::vector<double>& z) {
        const double p = at(row, col);
        for (std::size_t j = 0; j <= n_; ++j) at(row, j) /= p;
        for (std::size_t i = 0; i < m_; ++i) {
            if (i == row) continue;
            const double f = at(i, col);
            if (f == 0.0) continue;
            for (std::size_t j = 0; j <= n_; ++j) at(i, j) -= f * at(row, j);
            at(i, col) = 0.0;
        }
        const double f = z[col];
        if (f != 0.0) {
            for (std::size_t j = 0; j <= n_; ++j) z[j] -= f * at(row, j);
            z[col] = 0.0;
        }
        basis_[row] = col;
    }

    /// Bland's rule: lowest-index improving column, ties in the ratio test by lowest basic index.
    Status run(std::vector<double>& z, std::size_t allowed_cols, double eps, int& pivots, int max_pivots) {
        while (true) {
            std::size_t enter = allowed_cols;
            for (std::size_t j = 0; j < allowed_cols; ++j)
                if (z[j] < -eps) {
                    enter = j;
                    break;
                }
            if (enter == allowed_cols) return Status::Optimal;

            std::size_t leave = m_;
            double best = 0.0;
            for (std::size_t i = 0; i < m_; ++i) {
                const double a = at(i, enter);
                if (a <= eps) continue;
                const double ratio = rhs(i) / a;
                if (leave == m_ || ratio < best - eps ||
                    (std::abs(ratio - best) <= eps && basis_[i] < basis_[leave])) {
                    leave = i;
                    best = ratio;
                }
            }
            if (leave == m_) return Status::Unbounded;
            if (++pivots > max_pivots) return Status::IterationLimit;
            pivot(leave, enter, z);
        }
    }

private:
    std::size_t m_, n_;
    std::vector<double> a_;
    std::vector<std::size_t> basis_;
};

}  // namespace

Solution solve(const Problem& problem, double eps, int max_pivots) {
    const std::size_t n = problem.objective.size();
    const std::size_t m = problem.rows.size();
    for (const auto& row : problem.rows)
        if (row.coeffs.size() != n) throw std::invalid_argument("constraint width differs from objective");

    // Normalize to nonnegative right-hand sides.
    std::vector<Constraint> rows(problem.rows);
    for (auto& row : rows) {
        if (row.rhs < 0.0) {
            for (double& c : row.coeffs) c = -c;
            row.rhs = -row.rhs;
            if (row.sense == Sense::LessEqual) row.sense = Sense::GreaterEqual;
            else if (row.sense == Sense::GreaterEqual) row.sense = Sense::LessEqual;
        }
    }

    std::size_t slack_count = 0, art_count = 0;
    for (const auto& row : rows) {
        if (row.sense != Sense::Equal) ++slack_count;
        if (row.sense != Sense::LessEqual) ++art_count;
    }
    const std::size_t art_begin = n + slack_count;
    const std::size_t total = art_begin + art_count;

    Tableau tab(m, total);
    std::vector<double> z(total + 1, 0.0);
    std::size_t slack = n, art = art_begin;
    for (std::size_t i = 0; i < m; ++i) {
        const auto& row = rows[i];
        for (std::size_t j = 0; j < n; ++j) tab.at(i, j) = row.coeffs[j];
        tab.rhs(i) = row.rhs;
        if (row.sense == Sense::LessEqual) {
            tab.at(i, slack) = 1.0;
            tab.basis()[i] = slack++;
        } else {
            if (row.sense == Sense::GreaterEqual) tab.at(i, slack++) = -1.0;
            tab.at(i, art) = 1.0;
            tab.basis()[i] = art++;
            // Phase-one cost row: sum of artificials expressed in nonbasic terms.
            for (std::size_t j = 0; j <= total; ++j) z[j] -= tab.at(i, j);
            z[tab.basis()[i]] = 0.0;
        }
    }

    Solution sol;
    if (art_count > 0) {
        const Status st = tab.run(z, total, eps, sol.pivots, max_pivots);
        if (st == Status::IterationLimit) {
            sol.status = st;
            return sol;
        }
        if (-z[total] > 1e-9) {
            sol.status = Status::Infeasible;
            return sol;
        }
        for (std::size_t i = 0; i < m; ++i) {
            if (tab.basis()[i] < art_begin) continue;
            for (std::size_t j = 0; j < art_begin; ++j)
                if (std::abs(tab.at(i, j)) > eps) {
                    tab.pivot(i, j, z);
                    break;
                }
        }
    }

    std::fill(z.begin(), z.end(), 0.0);
    for (std::size_t j = 0; j < n; ++j) z[j] = problem.objective[j];
    for (std::size_t i = 0; i < m; ++i) {
        const std::size_t b = tab.basis()[i];
        const double cb = b < n ? problem.objective[b] : 0.0;
        if (cb == 0.0) continue;
        for (std::size_t j = 0; j <= total; ++j) z[j] -= cb * tab.at(i, j);
    }
    const Status st = tab.run(z, art_begin, eps, sol.pivots, max_pivots);
    sol.status = st;
    if (st != Status::Optimal) return sol;

    sol.x.assign(n, 0.0);
    for (std::size_t i = 0; i < m; ++i)
        if (tab.basis()[i] < n) sol.x[tab.basis()[i]] = tab.rhs(i);
    sol.objective = 0.0;
    for (std::size_t j = 0; j < n; ++j) sol.objective += problem.objective[j] * sol.x[j];
    return sol;
}

}  // namespace qgt::lp
