#pragma once

#include <limits>
#include <optional>
#include <string>

#include "lgv/lp.hpp"
#include "lgv/symbolic.hpp"

namespace lgv {

// Is the network free of inputs in the eps-ball that score `target` at least
// as high as `original`?
struct JRobustnessQuery {
    const Network* net = nullptr;
    LabeledInput x;
    double eps = 0.0;
    int original = 0;
    int target = 0;
};

enum class JStatus { Robust, Falsified, Unknown };

struct VerifierStats {
    int lp_calls = 0;
    int splits = 0;
    double elapsed = 0.0; // seconds
};

struct JVerdict {
    JStatus status = JStatus::Unknown;
    std::optional<std::vector<double>> counterexample; // present iff Falsified
    VerifierStats stats;
    std::string note; // diagnostic for Unknown
};

struct BackendOptions {
    RelaxMode relaxation = RelaxMode::Parallel;
    bool clip_inputs = true;
};

// Unlimited split budget sentinel for the complete backend.
inline constexpr int kUnlimitedBudget = std::numeric_limits<int>::max();

bool validate_counterexample(const Network& net, const LabeledInput& x, double eps,
                             const std::vector<double>& cex, int target, bool clip = true);

// Relaxation-based decision: symbolic fast path, then one LP over the
// triangle-relaxed network. Never returns a false Robust.
JVerdict verify_incomplete(const JRobustnessQuery& q, const BackendOptions& opt = {},
                           const PropagationResult* root = nullptr);

// Branch-and-bound over ReLU phases; complete given enough budget. `budget`
// caps the number of splits; exceeding it yields Unknown, never a wrong
// verdict.
JVerdict verify_complete(const JRobustnessQuery& q, int budget = kUnlimitedBudget,
                         const BackendOptions& opt = {}, const PropagationResult* root = nullptr);

// LP over the input box with exact stable neurons, one variable plus triangle
// constraints per remaining unstable neuron, and phase constraints for fixed
// ones; objective is out[target] - out[original]. Exposed for tests.
LPProblem build_relaxed_lp(const Network& net, const Box& box, const PropagationResult& prop,
                           const PhaseMap& phases, RelaxMode mode, int target, int original);

} // namespace lgv
