#include "lgv/symbolic.hpp"

namespace lgv {

std::vector<SymbolicInterval> affine_step(const std::vector<SymbolicInterval>& prev, const Layer& layer) {
    if (prev.size() != layer.in_size())
        throw DimensionError("affine_step: layer expects " + std::to_string(layer.in_size()) +
                             " inputs, got " + std::to_string(prev.size()));
    const std::size_t dim = prev.empty() ? 0 : prev.front().lower.dim();
    std::vector<SymbolicInterval> out;
    out.reserve(layer.out_size());
    for (std::size_t r = 0; r < layer.out_size(); ++r) {
        SymbolicInterval s{LinExpr(dim, layer.bias[r]), LinExpr(dim, layer.bias[r])};
        for (std::size_t c = 0; c < prev.size(); ++c) {
            const double w = layer.weights[r][c];
            if (w == 0.0) continue;
            if (w > 0.0) {
                s.lower.axpy(w, prev[c].lower);
                s.upper.axpy(w, prev[c].upper);
            } else {
                s.lower.axpy(w, prev[c].upper);
                s.upper.axpy(w, prev[c].lower);
            }
        }
        out.push_back(std::move(s));
    }
    return out;
}

double lower_slope(double l, double u, RelaxMode mode) {
    if (mode == RelaxMode::Area) return u >= -l ? 1.0 : 0.0;
    return u / (u - l);
}

BoundedNeuron relu_relax(const BoundedNeuron& n, const Box& box, RelaxMode mode) {
    const double l = n.concrete.lo;
    const double u = n.concrete.hi;
    if (l >= 0.0 && u > 0.0) return n; // stable positive, identity
    if (u <= 0.0) {
        // stable zero (covers u == l == 0 as well)
        const std::size_t dim = n.sym.lower.dim();
        return {{LinExpr(dim), LinExpr(dim)}, Interval::point(0.0)};
    }
    // unstable: l < 0 < u
    const double a_up = u / (u - l);
    const double a_lo = lower_slope(l, u, mode);
    BoundedNeuron out;
    out.sym.upper = a_up * n.sym.upper;
    out.sym.upper.constant -= a_up * l;
    out.sym.lower = a_lo * n.sym.lower;
    out.concrete = {concretize(out.sym.lower, box).lo, concretize(out.sym.upper, box).hi};
    return out;
}

namespace {

BoundedNeuron bound(SymbolicInterval s, const Box& box) {
    Interval c{concretize(s.lower, box).lo, concretize(s.upper, box).hi};
    return {std::move(s), c};
}

} // namespace

PropagationResult propagate(const Network& net, const Box& box, RelaxMode mode, const PhaseMap* phases) {
    if (box.size() != net.input_dim())
        throw DimensionError("propagate: box/network dimension mismatch");
    const std::size_t dim = box.size();

    std::vector<SymbolicInterval> cur(dim);
    for (std::size_t i = 0; i < dim; ++i) {
        LinExpr v = LinExpr::variable(dim, i);
        cur[i] = {v, v};
    }

    PropagationResult result;
    for (std::size_t k = 0; k < net.layers.size(); ++k) {
        std::vector<SymbolicInterval> pre = affine_step(cur, net.layers[k]);
        const bool last = (k + 1 == net.layers.size());
        if (last) {
            result.output.reserve(pre.size());
            for (auto& s : pre) result.output.push_back(bound(std::move(s), box));
            break;
        }
        LayerBounds lb;
        lb.pre.reserve(pre.size());
        lb.post.reserve(pre.size());
        cur.clear();
        for (std::size_t i = 0; i < pre.size(); ++i) {
            BoundedNeuron bn = bound(std::move(pre[i]), box);
            BoundedNeuron post;
            const Phase* forced = nullptr;
            if (phases) {
                auto it = phases->find({static_cast<int>(k), static_cast<int>(i)});
                if (it != phases->end()) forced = &it->second;
            }
            if (forced && *forced == Phase::Active) {
                post = bn;
                post.concrete.lo = std::max(0.0, post.concrete.lo);
                post.concrete.hi = std::max(post.concrete.hi, post.concrete.lo);
            } else if (forced && *forced == Phase::Inactive) {
                post = {{LinExpr(dim), LinExpr(dim)}, Interval::point(0.0)};
            } else {
                post = relu_relax(bn, box, mode);
            }
            cur.push_back(post.sym);
            lb.pre.push_back(std::move(bn));
            lb.post.push_back(std::move(post));
        }
        result.layers.push_back(std::move(lb));
    }
    return result;
}

} // namespace lgv
