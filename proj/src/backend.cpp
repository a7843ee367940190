#include "lgv/backend.hpp"

#include <chrono>
#include <cmath>

namespace lgv {

namespace {

// Strictly-below-zero threshold for declaring a branch robust.
constexpr double kRobustTol = 1e-7;

using Clock = std::chrono::steady_clock;

double seconds_since(Clock::time_point t0) {
    return std::chrono::duration<double>(Clock::now() - t0).count();
}

void add_constraint(LPProblem& p, LinExpr e, Relation rel, double rhs) {
    LinConstraint c;
    c.rhs = rhs - e.constant;
    c.coeffs = std::move(e.coeffs);
    c.rel = rel;
    p.constraints.push_back(std::move(c));
}

bool is_fixed(const PhaseMap& phases, std::size_t layer, std::size_t neuron, Phase& out) {
    auto it = phases.find({static_cast<int>(layer), static_cast<int>(neuron)});
    if (it == phases.end()) return false;
    out = it->second;
    return true;
}

} // namespace

LPProblem build_relaxed_lp(const Network& net, const Box& box, const PropagationResult& prop,
                           const PhaseMap& phases, RelaxMode mode, int target, int original) {
    const std::size_t dim = box.size();

    // count free unstable neurons to size the variable set up front
    std::size_t extra = 0;
    for (std::size_t k = 0; k < prop.layers.size(); ++k) {
        for (std::size_t i = 0; i < prop.layers[k].pre.size(); ++i) {
            Phase ph;
            if (is_fixed(phases, k, i, ph)) continue;
            const Interval& c = prop.layers[k].pre[i].concrete;
            if (c.lo < 0.0 && c.hi > 0.0) ++extra;
        }
    }
    const std::size_t nvars = dim + extra;

    LPProblem p;
    p.num_vars = nvars;
    p.var_bounds.resize(nvars);
    for (std::size_t i = 0; i < dim; ++i) p.var_bounds[i] = box[i];

    // exact affine expressions over (inputs + relaxation variables)
    std::vector<LinExpr> cur(dim);
    for (std::size_t i = 0; i < dim; ++i) cur[i] = LinExpr::variable(nvars, i);

    std::size_t next_var = dim;
    for (std::size_t k = 0; k + 1 < net.layers.size(); ++k) {
        const Layer& layer = net.layers[k];
        std::vector<LinExpr> post(layer.out_size());
        for (std::size_t r = 0; r < layer.out_size(); ++r) {
            LinExpr pre(nvars, layer.bias[r]);
            for (std::size_t c = 0; c < cur.size(); ++c) {
                if (layer.weights[r][c] != 0.0) pre.axpy(layer.weights[r][c], cur[c]);
            }
            const Interval& pc = prop.layers[k].pre[r].concrete;
            Phase ph;
            if (is_fixed(phases, k, r, ph)) {
                if (ph == Phase::Active) {
                    add_constraint(p, pre, Relation::GreaterEq, 0.0);
                    post[r] = std::move(pre);
                } else {
                    add_constraint(p, pre, Relation::LessEq, 0.0);
                    post[r] = LinExpr(nvars);
                }
            } else if (pc.lo >= 0.0 && pc.hi > 0.0) {
                post[r] = std::move(pre);
            } else if (pc.hi <= 0.0) {
                post[r] = LinExpr(nvars);
            } else {
                // unstable: fresh output variable inside the triangle
                const double a_up = pc.hi / (pc.hi - pc.lo);
                LinExpr y = LinExpr::variable(nvars, next_var);
                p.var_bounds[next_var] = {0.0, pc.hi};
                add_constraint(p, y - pre, Relation::GreaterEq, 0.0);
                LinExpr upper = y;
                upper.axpy(-a_up, pre);
                add_constraint(p, std::move(upper), Relation::LessEq, -a_up * pc.lo);
                post[r] = std::move(y);
                ++next_var;
            }
        }
        cur = std::move(post);
    }

    const Layer& out_layer = net.layers.back();
    auto out_expr = [&](int j) {
        LinExpr e(nvars, out_layer.bias[j]);
        for (std::size_t c = 0; c < cur.size(); ++c) {
            if (out_layer.weights[j][c] != 0.0) e.axpy(out_layer.weights[j][c], cur[c]);
        }
        return e;
    };
    p.objective = out_expr(target) - out_expr(original);
    (void)mode; // lower plane choices only matter for the symbolic pass
    return p;
}

bool validate_counterexample(const Network& net, const LabeledInput& x, double eps,
                             const std::vector<double>& cex, int target, bool clip) {
    if (cex.size() != x.values.size())
        throw DimensionError("validate_counterexample: dimension mismatch");
    for (std::size_t i = 0; i < cex.size(); ++i) {
        if (std::fabs(cex[i] - x.values[i]) > eps + 1e-9) return false;
        if (clip && (cex[i] < -1e-9 || cex[i] > 1.0 + 1e-9)) return false;
    }
    const auto out = forward(net, cex);
    return out[target] >= out[x.label];
}

namespace {

// Shared node evaluation for both backends. Returns the verdict for this
// branch; `result` distinguishes closed/falsified/needs-split.
enum class NodeResult { ClosedRobust, Falsified, Spurious, Failed };

struct NodeOutcome {
    NodeResult result = NodeResult::ClosedRobust;
    std::vector<double> candidate;
    std::string note;
};

NodeOutcome evaluate_node(const JRobustnessQuery& q, const Box& box, const PropagationResult& prop,
                          const PhaseMap& phases, const BackendOptions& opt, VerifierStats& stats) {
    // symbolic fast path on the (possibly phase-restricted) propagation
    LinExpr diff = prop.output[q.target].sym.upper - prop.output[q.original].sym.lower;
    if (concretize(diff, box).hi < -kRobustTol) return {NodeResult::ClosedRobust, {}, {}};

    LPProblem lp = build_relaxed_lp(*q.net, box, prop, phases, opt.relaxation, q.target, q.original);
    ++stats.lp_calls;
    LPOutcome out;
    try {
        out = solve(lp);
    } catch (const LpError& e) {
        return {NodeResult::Failed, {}, e.what()};
    }
    if (out.status == LPStatus::Infeasible) return {NodeResult::ClosedRobust, {}, {}};
    if (out.value < -kRobustTol) return {NodeResult::ClosedRobust, {}, {}};

    std::vector<double> cand(out.point.begin(), out.point.begin() + box.size());
    if (validate_counterexample(*q.net, q.x, q.eps, cand, q.target, opt.clip_inputs))
        return {NodeResult::Falsified, std::move(cand), {}};
    return {NodeResult::Spurious, {}, "LP candidate is spurious"};
}

} // namespace

JVerdict verify_incomplete(const JRobustnessQuery& q, const BackendOptions& opt,
                           const PropagationResult* root) {
    const auto t0 = Clock::now();
    JVerdict v;
    const Box box = input_box(q.x, q.eps, opt.clip_inputs);
    PropagationResult local;
    if (!root) {
        local = propagate(*q.net, box, opt.relaxation);
        root = &local;
    }
    NodeOutcome node = evaluate_node(q, box, *root, {}, opt, v.stats);
    switch (node.result) {
        case NodeResult::ClosedRobust:
            v.status = JStatus::Robust;
            break;
        case NodeResult::Falsified:
            v.status = JStatus::Falsified;
            v.counterexample = std::move(node.candidate);
            break;
        case NodeResult::Spurious:
        case NodeResult::Failed:
            v.status = JStatus::Unknown;
            v.note = std::move(node.note);
            break;
    }
    v.stats.elapsed = seconds_since(t0);
    return v;
}

JVerdict verify_complete(const JRobustnessQuery& q, int budget, const BackendOptions& opt,
                         const PropagationResult* root) {
    const auto t0 = Clock::now();
    JVerdict v;
    const Box box = input_box(q.x, q.eps, opt.clip_inputs);

    struct Node {
        PhaseMap phases;
        int depth = 0;
    };
    std::vector<Node> stack;
    stack.push_back({});
    bool any_unknown = false;
    std::string note;

    while (!stack.empty()) {
        Node node = std::move(stack.back());
        stack.pop_back();

        PropagationResult local;
        const PropagationResult* prop;
        if (node.phases.empty() && root) {
            prop = root;
        } else {
            local = propagate(*q.net, box, opt.relaxation, &node.phases);
            prop = &local;
        }

        // a phase contradicted by the bounds means an empty branch
        bool contradiction = false;
        for (const auto& [key, phase] : node.phases) {
            const Interval& pc = prop->layers[key.first].pre[key.second].concrete;
            if ((phase == Phase::Active && pc.hi < 0.0) || (phase == Phase::Inactive && pc.lo > 0.0)) {
                contradiction = true;
                break;
            }
        }
        if (contradiction) continue;

        NodeOutcome out = evaluate_node(q, box, *prop, node.phases, opt, v.stats);
        if (out.result == NodeResult::ClosedRobust) continue;
        if (out.result == NodeResult::Falsified) {
            v.status = JStatus::Falsified;
            v.counterexample = std::move(out.candidate);
            v.stats.elapsed = seconds_since(t0);
            return v;
        }
        if (out.result == NodeResult::Failed) {
            any_unknown = true;
            note = out.note;
            continue;
        }

        // spurious candidate: refine by splitting the widest free unstable neuron
        int best_layer = -1, best_neuron = -1;
        double best_width = 0.0;
        for (std::size_t k = 0; k < prop->layers.size(); ++k) {
            for (std::size_t i = 0; i < prop->layers[k].pre.size(); ++i) {
                Phase ph;
                if (is_fixed(node.phases, k, i, ph)) continue;
                const Interval& pc = prop->layers[k].pre[i].concrete;
                if (pc.lo < 0.0 && pc.hi > 0.0 && pc.width() > best_width) {
                    best_width = pc.width();
                    best_layer = static_cast<int>(k);
                    best_neuron = static_cast<int>(i);
                }
            }
        }
        if (best_layer < 0) {
            // exactly linear branch, yet the optimizer's point failed to
            // validate: numerical boundary case, degrade to Unknown
            any_unknown = true;
            note = "spurious optimum on a fully split branch";
            continue;
        }
        if (v.stats.splits >= budget) {
            v.status = JStatus::Unknown;
            v.note = "split budget exhausted";
            v.stats.elapsed = seconds_since(t0);
            return v;
        }
        ++v.stats.splits;
        Node inactive{node.phases, node.depth + 1};
        inactive.phases[{best_layer, best_neuron}] = Phase::Inactive;
        Node active{std::move(node.phases), node.depth + 1};
        active.phases[{best_layer, best_neuron}] = Phase::Active;
        stack.push_back(std::move(inactive));
        stack.push_back(std::move(active));
    }

    v.status = any_unknown ? JStatus::Unknown : JStatus::Robust;
    v.note = std::move(note);
    v.stats.elapsed = seconds_since(t0);
    return v;
}

} // namespace lgv
