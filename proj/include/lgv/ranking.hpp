#pragma once

#include <vector>

#include "lgv/interval.hpp"

namespace lgv {

// Target labels sorted by how plausible a misclassification toward them is.
// `ordered` is sorted by score descending (ties by ascending label);
// `pruned` holds labels whose output upper bound is provably below the
// original label's lower bound. ordered + pruned + {original} partition the
// label set; pruned keeps the same descending-score order.
struct RankedTargets {
    std::vector<std::pair<int, double>> ordered; // (label, score)
    std::vector<int> pruned;
    int original = 0;
};

// Rank by output-interval upper bound; prune label j when
// bounds[j].hi < bounds[original].lo (strict: a tie is an adversarial example).
RankedTargets rank_targets(const std::vector<Interval>& bounds, int original);

// Baseline: rank by the concrete output of the center input; prunes nothing.
RankedTargets naive_rank(const std::vector<double>& out, int original);

// Ascending label index, no pruning; the unguided comparison order.
RankedTargets fixed_order(std::size_t num_labels, int original);

} // namespace lgv
