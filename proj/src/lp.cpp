#include "lgv/lp.hpp"

#include <cmath>
#include <limits>

namespace lgv {

namespace {

constexpr double kPivotTol = 1e-9;
constexpr double kFeasTol = 1e-7;

// Dense tableau over shifted variables z = x - lo, z >= 0; every constraint
// is brought to  a.z <= b  form, with upper bounds as extra rows.
class Simplex {
public:
    explicit Simplex(const LPProblem& p) : prob_(p) {
        validate();
        build_rows();
        build_tableau();
    }

    bool run_phase1() {
        optimize(phase1_obj_, /*allow_artificials=*/true);
        if (phase1_obj_.back() < -kFeasTol) return false; // artificials stuck positive
        drive_out_artificials();
        return true;
    }

    void run_phase2() { optimize(phase2_obj_, /*allow_artificials=*/false); }

    std::vector<double> extract_point() const {
        std::vector<double> z(n_, 0.0);
        for (std::size_t i = 0; i < rows_.size(); ++i) {
            if (basis_[i] >= 0 && static_cast<std::size_t>(basis_[i]) < n_)
                z[basis_[i]] = tableau_[i].back();
        }
        std::vector<double> x(n_);
        for (std::size_t j = 0; j < n_; ++j) x[j] = prob_.var_bounds[j].lo + z[j];
        return x;
    }

private:
    void validate() {
        const auto& p = prob_;
        if (p.var_bounds.size() != p.num_vars) throw LpError("lp: var_bounds size mismatch");
        for (const auto& b : p.var_bounds)
            if (!std::isfinite(b.lo) || !std::isfinite(b.hi)) throw LpError("lp: bounds must be finite");
        if (p.objective.dim() != p.num_vars) throw LpError("lp: objective dimension mismatch");
        for (const auto& c : p.constraints)
            if (c.coeffs.size() != p.num_vars) throw LpError("lp: constraint dimension mismatch");
    }

    // Collects all rows as (a, b) meaning a.z <= b.
    void build_rows() {
        const auto& p = prob_;
        n_ = p.num_vars;
        auto push = [&](std::vector<double> a, double b, bool negate) {
            if (negate) {
                for (double& v : a) v = -v;
                b = -b;
            }
            // shift by lower bounds: a.x <= b  ->  a.z <= b - a.lo
            for (std::size_t j = 0; j < n_; ++j) b -= a[j] * p.var_bounds[j].lo;
            rows_.push_back(std::move(a));
            rhs_.push_back(b);
        };
        for (const auto& c : p.constraints) {
            if (c.rel == Relation::LessEq || c.rel == Relation::Equal) push(c.coeffs, c.rhs, false);
            if (c.rel == Relation::GreaterEq || c.rel == Relation::Equal) push(c.coeffs, c.rhs, true);
        }
        for (std::size_t j = 0; j < n_; ++j) {
            std::vector<double> a(n_, 0.0);
            a[j] = 1.0;
            push(std::move(a), p.var_bounds[j].hi, false);
        }
    }

    void build_tableau() {
        const std::size_t m = rows_.size();
        // negative-rhs rows get an artificial variable
        std::size_t num_art = 0;
        for (double b : rhs_)
            if (b < 0.0) ++num_art;
        art_begin_ = n_ + m;
        ncols_ = n_ + m + num_art;
        max_iters_ = 50 * static_cast<long>(ncols_ + m);

        tableau_.assign(m, std::vector<double>(ncols_ + 1, 0.0));
        basis_.assign(m, -1);
        std::size_t art = art_begin_;
        for (std::size_t i = 0; i < m; ++i) {
            const bool neg = rhs_[i] < 0.0;
            const double sgn = neg ? -1.0 : 1.0;
            for (std::size_t j = 0; j < n_; ++j) tableau_[i][j] = sgn * rows_[i][j];
            tableau_[i][n_ + i] = sgn; // slack
            tableau_[i].back() = sgn * rhs_[i];
            if (neg) {
                tableau_[i][art] = 1.0;
                basis_[i] = static_cast<int>(art);
                ++art;
            } else {
                basis_[i] = static_cast<int>(n_ + i);
            }
        }

        // phase-1 row: maximize -(sum of artificials); stored negated so the
        // entering rule is "value < -tol", rhs slot carries the objective value
        phase1_obj_.assign(ncols_ + 1, 0.0);
        for (std::size_t j = art_begin_; j < ncols_; ++j) phase1_obj_[j] = 1.0;
        for (std::size_t i = 0; i < m; ++i) {
            if (basis_[i] >= static_cast<int>(art_begin_))
                for (std::size_t j = 0; j <= ncols_; ++j) phase1_obj_[j] -= tableau_[i][j];
        }

        // phase-2 row: real objective; initial basis (slacks/artificials) has
        // zero cost so no elimination is needed
        phase2_obj_.assign(ncols_ + 1, 0.0);
        for (std::size_t j = 0; j < n_; ++j) phase2_obj_[j] = -prob_.objective.coeffs[j];
    }

    void pivot(std::size_t row, std::size_t col) {
        auto& pr = tableau_[row];
        const double pv = pr[col];
        for (double& v : pr) v /= pv;
        auto eliminate = [&](std::vector<double>& r) {
            const double f = r[col];
            if (f == 0.0) return;
            for (std::size_t j = 0; j <= ncols_; ++j) r[j] -= f * pr[j];
        };
        for (std::size_t i = 0; i < tableau_.size(); ++i)
            if (i != row) eliminate(tableau_[i]);
        eliminate(phase1_obj_);
        eliminate(phase2_obj_);
        basis_[row] = static_cast<int>(col);
    }

    void optimize(std::vector<double>& obj, bool allow_artificials) {
        const std::size_t limit = allow_artificials ? ncols_ : art_begin_;
        for (long iter = 0; iter < max_iters_; ++iter) {
            // Bland: smallest improving column
            std::size_t col = ncols_;
            for (std::size_t j = 0; j < limit; ++j) {
                if (obj[j] < -kPivotTol) {
                    col = j;
                    break;
                }
            }
            if (col == ncols_) return; // optimal

            // ratio test, ties by smallest basis index
            std::size_t row = tableau_.size();
            double best = std::numeric_limits<double>::infinity();
            for (std::size_t i = 0; i < tableau_.size(); ++i) {
                const double a = tableau_[i][col];
                if (a <= kPivotTol) continue;
                const double ratio = tableau_[i].back() / a;
                if (ratio < best - kPivotTol ||
                    (ratio < best + kPivotTol && (row == tableau_.size() || basis_[i] < basis_[row]))) {
                    best = ratio;
                    row = i;
                }
            }
            if (row == tableau_.size())
                throw LpError("lp: unbounded direction despite finite bounds");
            pivot(row, col);
        }
        throw LpError("lp: iteration limit reached, numerical instability suspected");
    }

    void drive_out_artificials() {
        for (std::size_t i = 0; i < tableau_.size(); ++i) {
            if (basis_[i] < static_cast<int>(art_begin_)) continue;
            for (std::size_t j = 0; j < art_begin_; ++j) {
                if (std::fabs(tableau_[i][j]) > kPivotTol) {
                    pivot(i, j);
                    break;
                }
            }
            // a row with no real column is redundant; its artificial stays
            // basic at zero and never re-enters
        }
    }

    const LPProblem& prob_;
    std::size_t n_ = 0, ncols_ = 0, art_begin_ = 0;
    long max_iters_ = 0;
    std::vector<std::vector<double>> rows_;
    std::vector<double> rhs_;
    std::vector<std::vector<double>> tableau_;
    std::vector<double> phase1_obj_, phase2_obj_;
    std::vector<int> basis_;
};

} // namespace

LPOutcome solve(const LPProblem& p) {
    Simplex s(p);
    if (!s.run_phase1()) return {LPStatus::Infeasible, 0.0, {}};
    s.run_phase2();
    LPOutcome out;
    out.status = LPStatus::Optimal;
    out.point = s.extract_point();
    out.value = eval(p.objective, out.point);
    return out;
}

FeasibilityResult feasible(const LPProblem& p) {
    Simplex s(p);
    if (!s.run_phase1()) return {false, {}};
    return {true, s.extract_point()};
}

} // namespace lgv
