#pragma once

#include <cstddef>
#include <vector>

#include "lgv/interval.hpp"

namespace lgv {

// Affine expression constant + sum(coeffs[i] * v[i]) over a fixed variable set.
struct LinExpr {
    std::vector<double> coeffs;
    double constant = 0.0;

    LinExpr() = default;
    explicit LinExpr(std::size_t dim, double constant_ = 0.0)
        : coeffs(dim, 0.0), constant(constant_) {}

    static LinExpr variable(std::size_t dim, std::size_t index) {
        LinExpr e(dim);
        e.coeffs.at(index) = 1.0;
        return e;
    }

    std::size_t dim() const { return coeffs.size(); }

    LinExpr& operator+=(const LinExpr& other);
    LinExpr& operator-=(const LinExpr& other);
    LinExpr& operator*=(double c);

    // this += c * other
    void axpy(double c, const LinExpr& other);
};

LinExpr operator+(LinExpr lhs, const LinExpr& rhs);
LinExpr operator-(LinExpr lhs, const LinExpr& rhs);
LinExpr operator*(double c, LinExpr e);

double eval(const LinExpr& e, const std::vector<double>& p);

// Tightest interval of eval(e, .) over the box: each term picks the endpoint
// matching the sign of its coefficient.
Interval concretize(const LinExpr& e, const Box& box);

} // namespace lgv
