#include "lgv/orchestrator.hpp"

#include <chrono>

namespace lgv {

namespace {

using Clock = std::chrono::steady_clock;

double seconds_since(Clock::time_point t0) {
    return std::chrono::duration<double>(Clock::now() - t0).count();
}

} // namespace

const char* to_string(Status s) {
    switch (s) {
        case Status::Robust: return "robust";
        case Status::NonRobust: return "non-robust";
        case Status::Unknown: return "unknown";
        case Status::InvalidInput: return "invalid-input";
    }
    return "?";
}

RobustnessVerdict verify_robustness(const Network& net, const LabeledInput& x, double eps,
                                    const VerifyConfig& cfg) {
    RobustnessVerdict verdict;

    const std::vector<double> out = forward(net, x.values);
    const std::optional<int> predicted = predict_label(out);
    if (!predicted || *predicted != x.label) {
        verdict.status = Status::InvalidInput;
        return verdict;
    }

    // One propagation serves both the ranking and every per-label fast path.
    // Its cost counts as sorting overhead only when the ranking uses it.
    const Box box = input_box(x, eps, cfg.clip_inputs);
    const auto t_prop0 = Clock::now();
    const PropagationResult prop = propagate(net, box, cfg.relaxation);
    const double prop_time = seconds_since(t_prop0);

    const auto t_sort0 = Clock::now();
    RankedTargets ranked;
    switch (cfg.ranking) {
        case RankingKind::Symbolic:
            ranked = rank_targets(prop.output_box(), x.label);
            break;
        case RankingKind::Naive:
            ranked = naive_rank(out, x.label);
            break;
        case RankingKind::FixedOrder:
            ranked = fixed_order(net.output_dim(), x.label);
            break;
    }
    verdict.t_sort = seconds_since(t_sort0);
    if (cfg.ranking == RankingKind::Symbolic) verdict.t_sort += prop_time;
    verdict.labels_pruned = ranked.pruned.size();

    const BackendOptions opt{cfg.relaxation, cfg.clip_inputs};
    const auto t_verify0 = Clock::now();
    bool unknown_flag = false;
    for (const auto& [label, score] : ranked.ordered) {
        JRobustnessQuery q{&net, x, eps, x.label, label};
        JVerdict jv;
        try {
            jv = cfg.backend == BackendKind::Complete
                     ? verify_complete(q, cfg.split_budget, opt, &prop)
                     : verify_incomplete(q, opt, &prop);
        } catch (const Error& e) {
            jv.status = JStatus::Unknown;
            jv.note = e.what();
        }
        verdict.per_label.push_back({label, jv});
        if (jv.status == JStatus::Falsified) {
            verdict.status = Status::NonRobust;
            verdict.counterexample = jv.counterexample;
            verdict.t_verify = seconds_since(t_verify0);
            if (cfg.ranking != RankingKind::Symbolic) verdict.t_verify += prop_time;
            return verdict;
        }
        if (jv.status == JStatus::Unknown) unknown_flag = true;
    }
    verdict.status = unknown_flag ? Status::Unknown : Status::Robust;
    verdict.t_verify = seconds_since(t_verify0);
    if (cfg.ranking != RankingKind::Symbolic) verdict.t_verify += prop_time;
    return verdict;
}

RobustnessVerdict verify_baseline(const Network& net, const LabeledInput& x, double eps,
                                  const VerifyConfig& cfg) {
    VerifyConfig baseline = cfg;
    baseline.ranking = RankingKind::FixedOrder;
    return verify_robustness(net, x, eps, baseline);
}

} // namespace lgv
