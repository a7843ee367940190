#include "lgv/bench.hpp"

#include <atomic>
#include <chrono>
#include <sstream>
#include <thread>

namespace lgv {

namespace {

using Clock = std::chrono::steady_clock;

const char* backend_name(BackendKind b) {
    return b == BackendKind::Complete ? "complete" : "incomplete";
}

std::string rst_string(int m, int n) {
    return std::to_string(m) + "/" + std::to_string(n);
}

} // namespace

nlohmann::json RunReport::to_json() const {
    nlohmann::json per = nlohmann::json::array();
    for (const auto& row : per_input) {
        per.push_back({{"index", row.index},
                       {"verdict", to_string(row.verdict)},
                       {"t_sort", row.t_sort},
                       {"t_verify", row.t_verify},
                       {"labels_checked", row.labels_checked},
                       {"labels_pruned", row.labels_pruned}});
    }
    return {{"per_input", per},
            {"summary",
             {{"total", total},
              {"valid_count", valid_count},
              {"robust_count", robust_count},
              {"rst", rst_string(robust_count, total)},
              {"total_labels_checked", total_labels_checked},
              {"mean_t_sort", mean_t_sort},
              {"total_t_sort", total_t_sort},
              {"total_t_verify", total_t_verify},
              {"total_time", total_time}}}};
}

nlohmann::json ComparisonReport::to_json() const {
    nlohmann::json rows_json = nlohmann::json::array();
    for (const auto& r : rows) {
        rows_json.push_back({{"eps", r.eps},
                             {"t_sort_total", r.t_sort_total},
                             {"T_baseline", r.t_baseline},
                             {"T_guided", r.t_guided},
                             {"ACC", r.acc},
                             {"RST_baseline", rst_string(r.robust_baseline, r.total)},
                             {"RST_guided", rst_string(r.robust_guided, r.total)},
                             {"valid", r.valid},
                             {"total", r.total},
                             {"labels_checked_baseline", r.labels_checked_baseline},
                             {"labels_checked_guided", r.labels_checked_guided},
                             {"verdict_mismatches", r.verdict_mismatches}});
    }
    return {{"rows", rows_json}, {"warnings", warnings}};
}

std::string ComparisonReport::to_csv() const {
    std::ostringstream out;
    out << "eps,t_sort,T,T*,ACC,RST,RST*\n";
    for (const auto& r : rows) {
        out << r.eps << ',' << r.t_sort_total << ',' << r.t_baseline << ',' << r.t_guided << ','
            << r.acc << ',' << rst_string(r.robust_baseline, r.total) << ','
            << rst_string(r.robust_guided, r.total) << '\n';
    }
    return out.str();
}

RunReport run_dataset(const Network& net, const std::vector<LabeledInput>& data, double eps,
                      const VerifyConfig& cfg, int workers, bool baseline) {
    RunReport report;
    report.total = static_cast<int>(data.size());
    report.per_input.resize(data.size());

    const auto t0 = Clock::now();
    std::atomic<std::size_t> next{0};
    auto worker = [&]() {
        for (;;) {
            const std::size_t i = next.fetch_add(1);
            if (i >= data.size()) return;
            PerInputRow row;
            row.index = static_cast<int>(i);
            try {
                const RobustnessVerdict v = baseline ? verify_baseline(net, data[i], eps, cfg)
                                                     : verify_robustness(net, data[i], eps, cfg);
                row.verdict = v.status;
                row.t_sort = v.t_sort;
                row.t_verify = v.t_verify;
                row.labels_checked = static_cast<int>(v.per_label.size());
                row.labels_pruned = static_cast<int>(v.labels_pruned);
            } catch (const Error&) {
                row.verdict = Status::Unknown;
            }
            report.per_input[i] = row;
        }
    };

    const int pool = std::max(1, workers);
    if (pool == 1) {
        worker();
    } else {
        std::vector<std::thread> threads;
        threads.reserve(pool);
        for (int t = 0; t < pool; ++t) threads.emplace_back(worker);
        for (auto& t : threads) t.join();
    }

    for (const auto& row : report.per_input) {
        if (row.verdict != Status::InvalidInput) ++report.valid_count;
        if (row.verdict == Status::Robust) ++report.robust_count;
        report.total_labels_checked += row.labels_checked;
        report.total_t_sort += row.t_sort;
        report.total_t_verify += row.t_verify;
    }
    if (report.total > 0) report.mean_t_sort = report.total_t_sort / report.total;
    report.total_time = std::chrono::duration<double>(Clock::now() - t0).count();
    return report;
}

ComparisonReport run_compare(const Network& net, const std::vector<LabeledInput>& data,
                             const std::vector<double>& eps_list, const VerifyConfig& cfg,
                             int workers) {
    ComparisonReport report;
    if (data.empty()) {
        report.warnings.push_back("empty dataset, nothing to compare");
        return report;
    }
    for (double eps : eps_list) {
        const RunReport base = run_dataset(net, data, eps, cfg, workers, /*baseline=*/true);
        const RunReport guided = run_dataset(net, data, eps, cfg, workers, /*baseline=*/false);

        ComparisonRow row;
        row.eps = eps;
        row.t_sort_total = guided.total_t_sort;
        row.t_baseline = base.total_t_verify;
        row.t_guided = guided.total_t_verify;
        row.acc = row.t_baseline > 0.0
                      ? (row.t_baseline - row.t_guided - row.t_sort_total) / row.t_baseline
                      : 0.0;
        row.valid = guided.valid_count;
        row.total = guided.total;
        row.robust_baseline = base.robust_count;
        row.robust_guided = guided.robust_count;
        row.labels_checked_baseline = base.total_labels_checked;
        row.labels_checked_guided = guided.total_labels_checked;
        for (std::size_t i = 0; i < data.size(); ++i) {
            if (base.per_input[i].verdict != guided.per_input[i].verdict) ++row.verdict_mismatches;
        }
        if (row.verdict_mismatches > 0) {
            std::ostringstream msg;
            msg << "eps " << eps << ": " << row.verdict_mismatches
                << " verdict mismatch(es) between guided and baseline ("
                << backend_name(cfg.backend) << " backend)";
            report.warnings.push_back(msg.str());
        }
        if (guided.valid_count == 0)
            report.warnings.push_back("eps " + std::to_string(eps) + ": no valid inputs");
        report.rows.push_back(row);
    }
    return report;
}

} // namespace lgv
