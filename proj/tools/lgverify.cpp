#include <fstream>
#include <iostream>

#include "CLI11.hpp"

#include "lgv/bench.hpp"

namespace {

struct CommonArgs {
    std::string net_path;
    std::string data_path;
    std::vector<double> eps;
    std::vector<double> eps_pixel;
    std::string backend = "complete";
    std::string ranking = "symbolic";
    std::string relaxation = "parallel";
    int budget = 100000;
    int workers = 1;
    bool no_clip = false;
    std::string out_path;
    std::string csv_path;
};

void add_common(CLI::App* cmd, CommonArgs& a) {
    cmd->add_option("--net", a.net_path, "network weight file")->required();
    cmd->add_option("--data", a.data_path, "dataset CSV (label,values...)")->required();
    cmd->add_option("--eps", a.eps, "perturbation radii in normalized units");
    cmd->add_option("--eps-pixel", a.eps_pixel, "perturbation radii in 8-bit pixel steps (value/255)");
    cmd->add_option("--backend", a.backend, "incomplete|complete")
        ->check(CLI::IsMember({"incomplete", "complete"}));
    cmd->add_option("--ranking", a.ranking, "symbolic|naive|fixed")
        ->check(CLI::IsMember({"symbolic", "naive", "fixed"}));
    cmd->add_option("--relaxation", a.relaxation, "parallel|area")
        ->check(CLI::IsMember({"parallel", "area"}));
    cmd->add_option("--budget", a.budget, "split budget for the complete backend");
    cmd->add_option("--workers", a.workers, "worker threads");
    cmd->add_flag("--no-clip", a.no_clip, "do not clip perturbed inputs to [0,1]");
    cmd->add_option("--out", a.out_path, "write the JSON report here")->required();
    cmd->add_option("--csv", a.csv_path, "also write the per-eps summary table as CSV");
}

std::vector<double> eps_values(const CommonArgs& a) {
    std::vector<double> eps = a.eps;
    for (double p : a.eps_pixel) eps.push_back(p / 255.0);
    return eps;
}

lgv::VerifyConfig make_config(const CommonArgs& a) {
    lgv::VerifyConfig cfg;
    cfg.backend = a.backend == "complete" ? lgv::BackendKind::Complete : lgv::BackendKind::Incomplete;
    cfg.ranking = a.ranking == "symbolic" ? lgv::RankingKind::Symbolic
                : a.ranking == "naive"    ? lgv::RankingKind::Naive
                                          : lgv::RankingKind::FixedOrder;
    cfg.relaxation = a.relaxation == "area" ? lgv::RelaxMode::Area : lgv::RelaxMode::Parallel;
    cfg.split_budget = a.budget;
    cfg.clip_inputs = !a.no_clip;
    return cfg;
}

void write_file(const std::string& path, const std::string& content) {
    std::ofstream out(path);
    if (!out) throw lgv::Error("cannot write to " + path);
    out << content;
}

nlohmann::json config_json(const CommonArgs& a, const std::vector<double>& eps) {
    return {{"net", a.net_path},   {"data", a.data_path},     {"eps", eps},
            {"backend", a.backend}, {"ranking", a.ranking},   {"relaxation", a.relaxation},
            {"budget", a.budget},  {"workers", a.workers},    {"clip", !a.no_clip}};
}

int run_verify(const CommonArgs& a) {
    const auto eps = eps_values(a);
    if (eps.empty()) {
        std::cerr << "error: no eps values given (use --eps or --eps-pixel)\n";
        return 2;
    }
    const lgv::Network net = lgv::load_network(a.net_path);
    const auto data = lgv::load_dataset(a.data_path);
    const lgv::VerifyConfig cfg = make_config(a);

    nlohmann::json runs = nlohmann::json::array();
    for (double e : eps) {
        const lgv::RunReport report = lgv::run_dataset(net, data, e, cfg, a.workers);
        nlohmann::json entry = report.to_json();
        entry["eps"] = e;
        runs.push_back(std::move(entry));
        std::cout << "eps " << e << ": RST " << report.robust_count << "/" << report.total
                  << " (valid " << report.valid_count << ")\n";
    }
    nlohmann::json doc{{"config", config_json(a, eps)}, {"runs", runs}};
    write_file(a.out_path, doc.dump(2) + "\n");
    return 0;
}

int run_compare(const CommonArgs& a) {
    const auto eps = eps_values(a);
    if (eps.empty()) {
        std::cerr << "error: no eps values given (use --eps or --eps-pixel)\n";
        return 2;
    }
    const lgv::Network net = lgv::load_network(a.net_path);
    const auto data = lgv::load_dataset(a.data_path);
    const lgv::VerifyConfig cfg = make_config(a);

    const lgv::ComparisonReport report = lgv::run_compare(net, data, eps, cfg, a.workers);
    for (const auto& w : report.warnings) std::cerr << "warning: " << w << "\n";
    nlohmann::json doc{{"config", config_json(a, eps)}, {"comparison", report.to_json()}};
    write_file(a.out_path, doc.dump(2) + "\n");
    if (!a.csv_path.empty()) write_file(a.csv_path, report.to_csv());
    std::cout << report.to_csv();
    return 0;
}

} // namespace

int main(int argc, char** argv) {
    CLI::App app{"Robustness verification of ReLU networks with target-label ranking"};
    app.require_subcommand(1);

    CommonArgs verify_args, compare_args;
    CLI::App* verify = app.add_subcommand("verify", "verify every dataset row at each eps");
    add_common(verify, verify_args);
    CLI::App* compare = app.add_subcommand("compare", "guided vs baseline timing comparison");
    add_common(compare, compare_args);

    CLI11_PARSE(app, argc, argv);

    try {
        if (verify->parsed()) return run_verify(verify_args);
        if (compare->parsed()) return run_compare(compare_args);
    } catch (const lgv::Error& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 2;
    }
    return 0;
}
