#include "lgv/ranking.hpp"

#include <algorithm>

#include "lgv/errors.hpp"

namespace lgv {

namespace {

void check_labels(std::size_t n, int original) {
    if (n < 2) throw Error("ranking: need at least two labels");
    if (original < 0 || static_cast<std::size_t>(original) >= n)
        throw Error("ranking: original label out of range");
}

void sort_by_score_desc(std::vector<std::pair<int, double>>& v) {
    std::sort(v.begin(), v.end(), [](const auto& a, const auto& b) {
        if (a.second != b.second) return a.second > b.second;
        return a.first < b.first;
    });
}

} // namespace

RankedTargets rank_targets(const std::vector<Interval>& bounds, int original) {
    check_labels(bounds.size(), original);
    const double orig_lo = bounds[original].lo;

    RankedTargets result;
    result.original = original;
    std::vector<std::pair<int, double>> kept, dropped;
    for (std::size_t j = 0; j < bounds.size(); ++j) {
        if (static_cast<int>(j) == original) continue;
        const double ub = bounds[j].hi;
        (ub < orig_lo ? dropped : kept).push_back({static_cast<int>(j), ub});
    }
    sort_by_score_desc(kept);
    sort_by_score_desc(dropped);
    result.ordered = std::move(kept);
    for (const auto& [label, score] : dropped) result.pruned.push_back(label);
    return result;
}

RankedTargets naive_rank(const std::vector<double>& out, int original) {
    check_labels(out.size(), original);
    RankedTargets result;
    result.original = original;
    for (std::size_t j = 0; j < out.size(); ++j) {
        if (static_cast<int>(j) == original) continue;
        result.ordered.push_back({static_cast<int>(j), out[j]});
    }
    sort_by_score_desc(result.ordered);
    return result;
}

RankedTargets fixed_order(std::size_t num_labels, int original) {
    check_labels(num_labels, original);
    RankedTargets result;
    result.original = original;
    for (std::size_t j = 0; j < num_labels; ++j) {
        if (static_cast<int>(j) == original) continue;
        result.ordered.push_back({static_cast<int>(j), 0.0});
    }
    return result;
}

} // namespace lgv
