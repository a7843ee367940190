#pragma once

#include "lgv/backend.hpp"
#include "lgv/ranking.hpp"

namespace lgv {

enum class BackendKind { Incomplete, Complete };
enum class RankingKind { Symbolic, Naive, FixedOrder };

struct VerifyConfig {
    BackendKind backend = BackendKind::Complete;
    RankingKind ranking = RankingKind::Symbolic;
    int split_budget = kUnlimitedBudget;
    bool clip_inputs = true;
    RelaxMode relaxation = RelaxMode::Parallel;
};

enum class Status { Robust, NonRobust, Unknown, InvalidInput };

struct RobustnessVerdict {
    Status status = Status::Unknown;
    std::optional<std::vector<double>> counterexample;
    std::vector<std::pair<int, JVerdict>> per_label; // in verification order
    std::size_t labels_pruned = 0;
    double t_sort = 0.0;   // ranking overhead, seconds
    double t_verify = 0.0; // per-label verification, seconds
};

// Per-label verification loop: validate the input, rank targets, verify in
// ranked order, stop at the first genuine counterexample; any per-label
// Unknown flags the final verdict as Unknown instead of Robust.
RobustnessVerdict verify_robustness(const Network& net, const LabeledInput& x, double eps,
                                    const VerifyConfig& cfg);

// Same loop with fixed ascending label order and no pruning; the unguided
// timing baseline.
RobustnessVerdict verify_baseline(const Network& net, const LabeledInput& x, double eps,
                                  const VerifyConfig& cfg);

const char* to_string(Status s);

} // namespace lgv
