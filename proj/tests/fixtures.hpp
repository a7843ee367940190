#pragma once

#include <cmath>
#include <cstdlib>
#include <fstream>
#include <optional>
#include <random>
#include <string>
#include <vector>

#include "lgv/backend.hpp"
#include "lgv/lp.hpp"
#include "lgv/network.hpp"

namespace fixtures {

// LG_SEED pins the RNG for the sampling-based soundness checks.
inline unsigned rng_seed() {
    if (const char* s = std::getenv("LG_SEED")) return static_cast<unsigned>(std::strtoul(s, nullptr, 10));
    return 20240817u;
}

inline std::mt19937& rng() {
    static std::mt19937 gen(rng_seed());
    return gen;
}

// The 2-2-1 worked example: hidden neurons compute 2x+y and x+2y, the output
// neuron -x+y; on box [1,3]x[2,4] naive propagation gives [-5,7], symbolic [-1,3].
inline lgv::Network demo_net() {
    lgv::Network net;
    net.layers.push_back({{{2.0, 1.0}, {1.0, 2.0}}, {0.0, 0.0}});
    net.layers.push_back({{{-1.0, 1.0}}, {0.0}});
    return net;
}

// demo plus a frozen second output pinned to -2.
inline lgv::Network demo_two_outputs() {
    lgv::Network net;
    net.layers.push_back({{{2.0, 1.0}, {1.0, 2.0}}, {0.0, 0.0}});
    net.layers.push_back({{{-1.0, 1.0}, {0.0, 0.0}}, {0.0, -2.0}});
    return net;
}

// 1 input, 2 outputs, purely affine: out0 = 1 - x, out1 = x - 0.1.
// x = 0.5 classifies to 0; x = 0.9 classifies to 1.
inline lgv::Network crossing_net() {
    lgv::Network net;
    net.layers.push_back({{{-1.0}, {1.0}}, {1.0, -0.1}});
    return net;
}

inline lgv::Network random_net(std::mt19937& gen, const std::vector<std::size_t>& widths,
                               double weight_scale = 1.0, double bias_scale = 0.2) {
    std::normal_distribution<double> wdist(0.0, weight_scale);
    std::normal_distribution<double> bdist(0.0, bias_scale);
    lgv::Network net;
    for (std::size_t k = 0; k + 1 < widths.size(); ++k) {
        lgv::Layer layer;
        for (std::size_t r = 0; r < widths[k + 1]; ++r) {
            std::vector<double> row(widths[k]);
            for (double& w : row) w = wdist(gen);
            layer.weights.push_back(std::move(row));
            layer.bias.push_back(bdist(gen));
        }
        net.layers.push_back(std::move(layer));
    }
    return net;
}

inline void save_network(const lgv::Network& net, const std::string& path) {
    std::ofstream out(path);
    out << net.layers.size();
    out << ' ' << net.input_dim();
    for (const auto& layer : net.layers) out << ' ' << layer.out_size();
    out << '\n';
    for (const auto& layer : net.layers) {
        for (const auto& row : layer.weights) {
            for (std::size_t c = 0; c < row.size(); ++c) out << (c ? " " : "") << row[c];
            out << '\n';
        }
        for (std::size_t c = 0; c < layer.bias.size(); ++c) out << (c ? " " : "") << layer.bias[c];
        out << '\n';
    }
}

// Two ReLUs share the pre-activation x - 0.5; out1 - out0 = relu1 - relu2 - 0.05
// is identically -0.05, so the instance is robust at any radius, but the
// triangle relaxation of the two (perfectly correlated) neurons leaves a gap
// of up to eps/2 at the root. Splitting both neurons closes it.
inline lgv::Network gap_net() {
    lgv::Network net;
    net.layers.push_back({{{1.0}, {1.0}}, {-0.5, -0.5}});
    net.layers.push_back({{{0.0, 0.0}, {1.0, -1.0}}, {0.0, -0.05}});
    return net;
}

// 2-4-2 fixture whose four hidden neurons are all unstable around (0.5, 0.5);
// classifies to 0 there, falsifiable toward 1 at eps 0.15.
inline lgv::Network unstable_net() {
    lgv::Network net;
    net.layers.push_back({{{2.0, -1.0}, {-1.0, 2.0}, {1.0, 1.0}, {1.0, -1.0}},
                          {-0.2, -0.3, -1.2, 0.0}});
    net.layers.push_back({{{1.0, 0.0, 1.0, -1.0}, {0.0, 1.0, -1.0, 1.0}}, {0.1, -0.05}});
    return net;
}

// One desk-scale fixture: network, inputs, radii to sweep.
struct TinyFixture {
    std::string name;
    lgv::Network net;
    std::vector<lgv::LabeledInput> inputs;
    std::vector<double> radii;
    int grid_levels = 129;
};

// Small networks whose robust/non-robust boundary is coarse enough for a
// quantized grid oracle to be decisive.
inline std::vector<TinyFixture> tiny_suite() {
    std::vector<TinyFixture> suite;

    suite.push_back({"crossing", crossing_net(), {{{0.5}, 0}, {{0.3}, 0}}, {0.05, 0.2, 0.4}, 4001});

    suite.push_back({"unstable", unstable_net(), {{{0.5, 0.5}, 0}}, {0.02, 0.05, 0.15}, 129});

    lgv::Network three_class;
    three_class.layers.push_back(
        {{{1.0, -1.0}, {1.0, 1.0}, {-1.0, 1.0}}, {0.1, -0.9, 0.05}});
    three_class.layers.push_back(
        {{{1.0, 1.0, 0.0}, {0.0, 1.0, 1.0}, {1.0, -1.0, 0.0}}, {0.3, 0.0, -0.1}});
    suite.push_back({"three_class", std::move(three_class), {{{0.5, 0.5}, 0}}, {0.03, 0.1, 0.25}, 129});

    lgv::Network three_input;
    three_input.layers.push_back({{{1.0, 1.0, -1.0}, {1.0, -1.0, 1.0}, {-1.0, 1.0, 1.0}, {1.0, 1.0, 1.0}},
                                  {-0.3, -0.3, -0.3, -1.4}});
    three_input.layers.push_back({{{1.0, 1.0, 0.0, -1.0}, {0.0, 0.0, 1.0, 1.0}}, {0.1, -0.05}});
    suite.push_back({"three_input", std::move(three_input), {{{0.5, 0.5, 0.5}, 0}}, {0.02, 0.1}, 65});

    lgv::Network six_hidden;
    six_hidden.layers.push_back({{{1.5, -0.5},
                                  {-1.2, 0.8},
                                  {0.7, 0.7},
                                  {-0.6, -0.9},
                                  {2.0, 1.0},
                                  {0.3, -1.4}},
                                 {-0.45, 0.25, -0.65, 0.8, -1.45, 0.5}});
    six_hidden.layers.push_back(
        {{{1.0, -1.0, 1.0, 0.0, 1.0, 0.0}, {0.0, 1.0, 0.0, 1.0, -1.0, 1.0}}, {0.2, 0.0}});
    suite.push_back({"six_hidden", std::move(six_hidden), {{{0.5, 0.5}, 0}}, {0.02, 0.12}, 129});

    return suite;
}

// ---- constructed speedup suite: near-identity 10-class network where each
// input's adversarial label is known and ranked first by the output bounds ----

inline lgv::Network speedup_net() {
    const std::size_t d = 10;
    lgv::Layer identity;
    for (std::size_t r = 0; r < d; ++r) {
        std::vector<double> row(d, 0.0);
        row[r] = 1.0;
        identity.weights.push_back(std::move(row));
        identity.bias.push_back(0.0);
    }
    lgv::Network net;
    net.layers.push_back(identity);
    net.layers.push_back(identity);
    return net;
}

// Input i: label 0 at 0.55, adversarial label 5 + (i % 5) at 0.5, rest 0.1.
// At eps 0.05 every other label is prunable and the adversarial one flips.
inline std::vector<lgv::LabeledInput> speedup_dataset(int n = 50) {
    std::vector<lgv::LabeledInput> data;
    for (int i = 0; i < n; ++i) {
        lgv::LabeledInput x;
        x.label = 0;
        x.values.assign(10, 0.1);
        x.values[0] = 0.55;
        x.values[5 + (i % 5)] = 0.5;
        data.push_back(std::move(x));
    }
    return data;
}

inline int speedup_target(int i) { return 5 + (i % 5); }

inline std::vector<double> random_point(std::mt19937& gen, const lgv::Box& box) {
    std::vector<double> p(box.size());
    for (std::size_t i = 0; i < box.size(); ++i) {
        std::uniform_real_distribution<double> d(box[i].lo, box[i].hi);
        p[i] = box[i].width() > 0 ? d(gen) : box[i].lo;
    }
    return p;
}

// Exhaustive grid over the box. visit(point) is called for every grid point;
// returning true stops the walk and makes the whole call return true.
template <class Visit>
bool walk_grid(const lgv::Box& box, int levels, Visit visit) {
    if (levels < 1) levels = 1;
    std::vector<double> p(box.size());
    std::vector<int> idx(box.size(), 0);
    for (;;) {
        for (std::size_t i = 0; i < box.size(); ++i) {
            p[i] = levels > 1 ? box[i].lo + box[i].width() * idx[i] / (levels - 1) : box[i].lo;
        }
        if (visit(p)) return true;
        std::size_t d = 0;
        while (d < idx.size() && ++idx[d] == levels) idx[d++] = 0;
        if (d == idx.size()) return false;
    }
}

// Grid oracle for j-robustness: any grid point scoring `target` at least as
// high as the original label?
inline std::optional<std::vector<double>> grid_violation(const lgv::Network& net,
                                                         const lgv::LabeledInput& x, double eps,
                                                         int target, int levels, bool clip = true) {
    const lgv::Box box = lgv::input_box(x, eps, clip);
    std::optional<std::vector<double>> found;
    walk_grid(box, levels, [&](const std::vector<double>& p) {
        const auto out = lgv::forward(net, p);
        if (out[target] >= out[x.label]) {
            found = p;
            return true;
        }
        return false;
    });
    return found;
}

// Any-label grid oracle for whole robustness.
inline std::optional<std::vector<double>> grid_adversarial(const lgv::Network& net,
                                                           const lgv::LabeledInput& x, double eps,
                                                           int levels, bool clip = true) {
    const lgv::Box box = lgv::input_box(x, eps, clip);
    std::optional<std::vector<double>> found;
    walk_grid(box, levels, [&](const std::vector<double>& p) {
        const auto out = lgv::forward(net, p);
        for (std::size_t j = 0; j < out.size(); ++j) {
            if (static_cast<int>(j) != x.label && out[j] >= out[x.label]) {
                found = p;
                return true;
            }
        }
        return false;
    });
    return found;
}

// ---- independent LP oracle: enumerate all vertices of the constraint set ----

struct OracleOutcome {
    bool is_feasible = false;
    double value = 0.0;
    std::vector<double> point;
};

inline std::vector<std::pair<std::vector<double>, double>> as_leq_rows(const lgv::LPProblem& p) {
    std::vector<std::pair<std::vector<double>, double>> rows;
    auto push = [&](std::vector<double> a, double b, bool neg) {
        if (neg) {
            for (double& v : a) v = -v;
            b = -b;
        }
        rows.push_back({std::move(a), b});
    };
    for (const auto& c : p.constraints) {
        if (c.rel != lgv::Relation::GreaterEq) push(c.coeffs, c.rhs, false);
        if (c.rel != lgv::Relation::LessEq) push(c.coeffs, c.rhs, true);
    }
    for (std::size_t j = 0; j < p.num_vars; ++j) {
        std::vector<double> a(p.num_vars, 0.0);
        a[j] = 1.0;
        push(a, p.var_bounds[j].hi, false);
        a[j] = 1.0;
        push(std::move(a), p.var_bounds[j].lo, true);
    }
    return rows;
}

inline bool solve_square(std::vector<std::vector<double>> A, std::vector<double> b,
                         std::vector<double>& x) {
    const std::size_t n = b.size();
    for (std::size_t col = 0; col < n; ++col) {
        std::size_t piv = col;
        for (std::size_t r = col + 1; r < n; ++r)
            if (std::fabs(A[r][col]) > std::fabs(A[piv][col])) piv = r;
        if (std::fabs(A[piv][col]) < 1e-10) return false;
        std::swap(A[piv], A[col]);
        std::swap(b[piv], b[col]);
        for (std::size_t r = 0; r < n; ++r) {
            if (r == col) continue;
            const double f = A[r][col] / A[col][col];
            for (std::size_t c = col; c < n; ++c) A[r][c] -= f * A[col][c];
            b[r] -= f * b[col];
        }
    }
    x.resize(n);
    for (std::size_t i = 0; i < n; ++i) x[i] = b[i] / A[i][i];
    return true;
}

// Brute-force maximizer: every vertex formed by n active constraints is
// checked for feasibility; the best feasible vertex wins. Bounded problems
// only (var_bounds supply the bounding rows).
inline OracleOutcome lp_oracle(const lgv::LPProblem& p) {
    const auto rows = as_leq_rows(p);
    const std::size_t n = p.num_vars;
    OracleOutcome best;

    std::vector<std::size_t> pick(n);
    auto recurse = [&](auto&& self, std::size_t start, std::size_t depth) -> void {
        if (depth == n) {
            std::vector<std::vector<double>> A(n);
            std::vector<double> b(n);
            for (std::size_t i = 0; i < n; ++i) {
                A[i] = rows[pick[i]].first;
                b[i] = rows[pick[i]].second;
            }
            std::vector<double> x;
            if (!solve_square(std::move(A), std::move(b), x)) return;
            for (const auto& [a, rhs] : rows) {
                double lhs = 0.0;
                for (std::size_t j = 0; j < n; ++j) lhs += a[j] * x[j];
                if (lhs > rhs + 1e-7) return;
            }
            const double val = lgv::eval(p.objective, x);
            if (!best.is_feasible || val > best.value) {
                best.is_feasible = true;
                best.value = val;
                best.point = x;
            }
            return;
        }
        for (std::size_t i = start; i < rows.size(); ++i) {
            pick[depth] = i;
            self(self, i + 1, depth + 1);
        }
    };
    recurse(recurse, 0, 0);
    return best;
}

} // namespace fixtures
