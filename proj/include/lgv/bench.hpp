#pragma once

#include <string>

#include "lgv/orchestrator.hpp"

#include "json.hpp"

namespace lgv {

struct PerInputRow {
    int index = 0;
    Status verdict = Status::Unknown;
    double t_sort = 0.0;
    double t_verify = 0.0;
    int labels_checked = 0;
    int labels_pruned = 0;
};

struct RunReport {
    std::vector<PerInputRow> per_input;
    int total = 0;       // n
    int valid_count = 0; // inputs the network classifies correctly
    int robust_count = 0; // m, the RST numerator
    long total_labels_checked = 0;
    double mean_t_sort = 0.0;
    double total_t_sort = 0.0;
    double total_t_verify = 0.0;
    double total_time = 0.0;

    nlohmann::json to_json() const;
};

// One row of the guided-vs-baseline comparison at a fixed eps.
struct ComparisonRow {
    double eps = 0.0;
    double t_sort_total = 0.0;
    double t_baseline = 0.0; // T
    double t_guided = 0.0;   // T*
    double acc = 0.0;        // (T - T* - t_sort) / T
    int valid = 0;
    int total = 0;
    int robust_baseline = 0;
    int robust_guided = 0;
    long labels_checked_baseline = 0;
    long labels_checked_guided = 0;
    int verdict_mismatches = 0;
};

struct ComparisonReport {
    std::vector<ComparisonRow> rows;
    std::vector<std::string> warnings;

    nlohmann::json to_json() const;
    // Table layout: eps, t_sort, T, T*, ACC, RST, RST*
    std::string to_csv() const;
};

// Verifies every dataset row at one eps; jobs fan out over `workers` threads,
// rows come back ordered by input index.
RunReport run_dataset(const Network& net, const std::vector<LabeledInput>& data, double eps,
                      const VerifyConfig& cfg, int workers = 1, bool baseline = false);

// Baseline then guided per eps, with the time-reduction-rate accounting.
ComparisonReport run_compare(const Network& net, const std::vector<LabeledInput>& data,
                             const std::vector<double>& eps_list, const VerifyConfig& cfg,
                             int workers = 1);

} // namespace lgv
