#include "lgv/linexpr.hpp"

namespace lgv {

namespace {

void check_same_dim(std::size_t a, std::size_t b, const char* what) {
    if (a != b) throw DimensionError(std::string("linexpr: dimension mismatch in ") + what);
}

} // namespace

LinExpr& LinExpr::operator+=(const LinExpr& other) {
    check_same_dim(coeffs.size(), other.coeffs.size(), "operator+=");
    for (std::size_t i = 0; i < coeffs.size(); ++i) coeffs[i] += other.coeffs[i];
    constant += other.constant;
    return *this;
}

LinExpr& LinExpr::operator-=(const LinExpr& other) {
    check_same_dim(coeffs.size(), other.coeffs.size(), "operator-=");
    for (std::size_t i = 0; i < coeffs.size(); ++i) coeffs[i] -= other.coeffs[i];
    constant -= other.constant;
    return *this;
}

LinExpr& LinExpr::operator*=(double c) {
    for (double& w : coeffs) w *= c;
    constant *= c;
    return *this;
}

void LinExpr::axpy(double c, const LinExpr& other) {
    check_same_dim(coeffs.size(), other.coeffs.size(), "axpy");
    for (std::size_t i = 0; i < coeffs.size(); ++i) coeffs[i] += c * other.coeffs[i];
    constant += c * other.constant;
}

LinExpr operator+(LinExpr lhs, const LinExpr& rhs) { lhs += rhs; return lhs; }
LinExpr operator-(LinExpr lhs, const LinExpr& rhs) { lhs -= rhs; return lhs; }
LinExpr operator*(double c, LinExpr e) { e *= c; return e; }

double eval(const LinExpr& e, const std::vector<double>& p) {
    check_same_dim(e.coeffs.size(), p.size(), "eval");
    double acc = e.constant;
    for (std::size_t i = 0; i < e.coeffs.size(); ++i) acc += e.coeffs[i] * p[i];
    return acc;
}

Interval concretize(const LinExpr& e, const Box& box) {
    check_same_dim(e.coeffs.size(), box.size(), "concretize");
    double lo = e.constant;
    double hi = e.constant;
    for (std::size_t i = 0; i < e.coeffs.size(); ++i) {
        const double w = e.coeffs[i];
        if (w >= 0.0) {
            lo += w * box[i].lo;
            hi += w * box[i].hi;
        } else {
            lo += w * box[i].hi;
            hi += w * box[i].lo;
        }
    }
    return {lo, hi};
}

} // namespace lgv
