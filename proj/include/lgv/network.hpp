#pragma once

#include <optional>
#include <string>
#include <vector>

#include "lgv/interval.hpp"

namespace lgv {

// One dense layer: weights is out_size x in_size, bias has out_size entries.
struct Layer {
    std::vector<std::vector<double>> weights;
    std::vector<double> bias;

    std::size_t out_size() const { return weights.size(); }
    std::size_t in_size() const { return weights.empty() ? 0 : weights.front().size(); }
};

// Feed-forward ReLU network: every layer but the last is followed by ReLU,
// the last layer is affine only.
struct Network {
    std::vector<Layer> layers;

    std::size_t input_dim() const { return layers.empty() ? 0 : layers.front().in_size(); }
    std::size_t output_dim() const { return layers.empty() ? 0 : layers.back().out_size(); }
    std::size_t num_layers() const { return layers.size(); }

    // Throws DimensionError if layer sizes do not chain.
    void check_consistency() const;
};

struct LabeledInput {
    std::vector<double> values;
    int label = 0;
};

// Text weight-file format, line oriented, '#' starts a comment line:
//   L d0 d1 ... dL
//   then per layer: d_{k+1} weight rows (d_k reals each), one bias line.
Network load_network(const std::string& path);

// CSV, one row per input: label, then input values in [0,1].
std::vector<LabeledInput> load_dataset(const std::string& path);

std::vector<double> forward(const Network& net, const std::vector<double>& x);

// Index of the unique maximum, or nullopt on a tie (a tied argmax already
// admits an adversarial example).
std::optional<int> predict_label(const std::vector<double>& out);

// Layer-wise interval evaluation. Sound but loose (dependency problem).
Box naive_interval_forward(const Network& net, const Box& box);

// L-inf ball of radius eps around x, optionally clipped to the [0,1] domain.
Box input_box(const LabeledInput& x, double eps, bool clip = true);

} // namespace lgv
