#pragma once

#include <map>
#include <utility>
#include <vector>

#include "lgv/linexpr.hpp"
#include "lgv/network.hpp"

namespace lgv {

// How the lower-bound slope of an unstable ReLU is chosen. The upper slope is
// always u/(u-l), the tightest valid one.
enum class RelaxMode {
    Parallel, // a_lo = u/(u-l): lower plane parallel to the upper plane
    Area,     // a_lo = 1 if u >= -l else 0: minimizes the relaxation area
};

// Pair of affine bounds over the input variables, lower <= upper on the box.
struct SymbolicInterval {
    LinExpr lower;
    LinExpr upper;
};

struct BoundedNeuron {
    SymbolicInterval sym;
    Interval concrete; // hull of the two concretized bounds over the box
};

// For hidden layers: bounds before (pre) and after (post) the activation.
struct LayerBounds {
    std::vector<BoundedNeuron> pre;
    std::vector<BoundedNeuron> post;
};

struct PropagationResult {
    std::vector<LayerBounds> layers; // one entry per hidden layer
    std::vector<BoundedNeuron> output;

    Box output_box() const {
        Box b(output.size());
        for (std::size_t j = 0; j < output.size(); ++j) b[j] = output[j].concrete;
        return b;
    }
};

enum class Phase { Active, Inactive };

// (hidden layer index, neuron index) -> forced activation phase.
using PhaseMap = std::map<std::pair<int, int>, Phase>;

// Affine image of a vector of symbolic intervals: positive weights carry the
// same-side expression, negative weights swap sides.
std::vector<SymbolicInterval> affine_step(const std::vector<SymbolicInterval>& prev, const Layer& layer);

// Table-style ReLU handling on a pre-activation neuron: identity when stable
// positive, zero when stable non-positive, the two-plane relaxation otherwise.
// Concrete bounds are refreshed over the box.
BoundedNeuron relu_relax(const BoundedNeuron& n, const Box& box, RelaxMode mode);

// Full forward symbolic pass. `phases`, when given, pins listed neurons to a
// branch (identity/zero, with the pre-activation bound clamped accordingly).
PropagationResult propagate(const Network& net, const Box& box, RelaxMode mode = RelaxMode::Parallel,
                            const PhaseMap* phases = nullptr);

} // namespace lgv
