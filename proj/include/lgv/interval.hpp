#pragma once

#include <algorithm>
#include <vector>

#include "lgv/errors.hpp"

namespace lgv {

// Closed real interval [lo, hi]. Degenerate [a,a] is fine; lo > hi is not.
struct Interval {
    double lo = 0.0;
    double hi = 0.0;

    Interval() = default;
    Interval(double lo_, double hi_) : lo(lo_), hi(hi_) {
        if (lo > hi) throw Error("interval: lower bound exceeds upper bound");
    }

    static Interval point(double v) { return {v, v}; }

    double width() const { return hi - lo; }
    bool contains(double v) const { return lo <= v && v <= hi; }
    bool contains(const Interval& other) const { return lo <= other.lo && other.hi <= hi; }
};

inline Interval add(const Interval& x, const Interval& y) {
    return {x.lo + y.lo, x.hi + y.hi};
}

inline Interval sub(const Interval& x, const Interval& y) {
    return {x.lo - y.hi, x.hi - y.lo};
}

inline Interval scale(double c, const Interval& x) {
    return c >= 0.0 ? Interval{c * x.lo, c * x.hi} : Interval{c * x.hi, c * x.lo};
}

inline Interval relu(const Interval& x) {
    return {std::max(0.0, x.lo), std::max(0.0, x.hi)};
}

// An axis-aligned box: one interval per input dimension.
using Box = std::vector<Interval>;

} // namespace lgv
