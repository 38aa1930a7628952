// etsc: benchmark runner and dataset inspection.
#include <cstdio>
#include <fstream>
#include <iostream>
#include <map>
#include <optional>

#include <CLI11.hpp>
#include <json.hpp>

#include "etsc/bench/experiment.hpp"
#include "etsc/error.hpp"

namespace {

using nlohmann::json;
using namespace etsc;

constexpr int kOk = 0;
constexpr int kFatal = 1;
constexpr int kPartial = 2;

struct Overrides {
    std::optional<std::size_t> teaser_s;
    bool teaser_znorm = false;
    std::optional<double> teaser_nu;
    std::optional<std::size_t> ecec_n;
    std::optional<double> ecec_alpha;
    std::vector<std::size_t> ecok_k;
    std::optional<double> ecok_lambda;
    std::optional<double> ecok_cost;
};

void apply(const Overrides& o, RunConfig& cfg) {
    for (auto& a : cfg.algorithms) {
        auto& p = a.params;
        if (a.id == "teaser" || a.id == "teaser-z") {
            if (o.teaser_s) p["S"] = *o.teaser_s;
            if (o.teaser_nu) p["nu"] = *o.teaser_nu;
            if (o.teaser_znorm && a.id == "teaser") p["znorm"] = true;
        } else if (a.id == "ecec") {
            if (o.ecec_n) p["N"] = *o.ecec_n;
            if (o.ecec_alpha) p["alpha"] = *o.ecec_alpha;
        } else if (a.id == "economy-k") {
            if (!o.ecok_k.empty()) p["k"] = o.ecok_k;
            if (o.ecok_lambda) p["lambda"] = *o.ecok_lambda;
            if (o.ecok_cost) p["cost"] = *o.ecok_cost;
        }
    }
}

std::string fixed(double v, int digits = 3) {
    char buf[32];
    std::snprintf(buf, sizeof buf, "%.*f", digits, v);
    return buf;
}

void print_summary(const ExperimentResult& result) {
    // Fold means per (algorithm, dataset), in record order.
    struct Row {
        double acc = 0, f1 = 0, earl = 0, hm = 0, train = 0;
        std::size_t ok = 0, failed = 0;
    };
    std::vector<std::pair<std::string, std::string>> order;
    std::map<std::pair<std::string, std::string>, Row> rows;
    for (const auto& r : result.records) {
        const auto key = std::make_pair(r.dataset, r.algorithm);
        if (!rows.count(key)) order.push_back(key);
        auto& row = rows[key];
        if (r.status != RunStatus::Ok) {
            ++row.failed;
            continue;
        }
        row.acc += r.metrics.accuracy;
        row.f1 += r.metrics.f1;
        row.earl += r.metrics.earliness;
        row.hm += r.metrics.harmonic_mean;
        row.train += r.train_seconds;
        ++row.ok;
    }
    std::printf("%-28s %-13s %8s %8s %9s %8s %10s %s\n", "dataset", "algorithm", "accuracy", "f1",
                "earliness", "hm", "train_s", "failed");
    for (const auto& key : order) {
        const auto& row = rows[key];
        if (row.ok == 0) {
            std::printf("%-28s %-13s %8s %8s %9s %8s %10s %zu\n", key.first.c_str(),
                        key.second.c_str(), "-", "-", "-", "-", "-", row.failed);
            continue;
        }
        const auto n = static_cast<double>(row.ok);
        std::printf("%-28s %-13s %8s %8s %9s %8s %10s %zu\n", key.first.c_str(), key.second.c_str(),
                    fixed(row.acc / n).c_str(), fixed(row.f1 / n).c_str(),
                    fixed(row.earl / n).c_str(), fixed(row.hm / n).c_str(),
                    fixed(row.train / n, 2).c_str(), row.failed);
    }
    for (const auto& r : result.records) {
        if (r.status != RunStatus::Ok) {
            std::fprintf(stderr, "%s/%s fold %zu: %s: %s\n", r.dataset.c_str(), r.algorithm.c_str(),
                         r.fold, to_string(r.status).c_str(), r.message.c_str());
        }
    }
}

Dataset load_for_inspection(const std::string& path, const std::string& format, std::size_t dims,
                            bool source_column) {
    LoadOptions opts;
    opts.dims = dims;
    opts.source_column = source_column;
    const DataFormat f = format.empty() ? format_from_path(path) : parse_format(format);
    return load_dataset(path, f, opts);
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"Early time-series classification benchmark"};
    app.require_subcommand(1);

    // run
    auto* run = app.add_subcommand("run", "Run the cross-validated benchmark described by a config file");
    std::string config_path, output_dir, multivariate, ragged;
    std::optional<double> timeout;
    std::optional<std::size_t> workers;
    Overrides ov;
    run->add_option("--config", config_path, "JSON run configuration")->required()->check(CLI::ExistingFile);
    run->add_option("--output-dir", output_dir, "Report directory (overrides output_dir)");
    run->add_option("--timeout", timeout, "Per-fold time budget in seconds");
    run->add_option("--workers", workers, "Concurrent fold jobs");
    run->add_option("--multivariate", multivariate, "Multivariate strategy")
        ->check(CLI::IsMember({"vote", "auto"}));
    run->add_option("--ragged", ragged, "Unequal lengths: reject or pad")
        ->check(CLI::IsMember({"reject", "pad"}));
    run->add_option("--teaser-s", ov.teaser_s, "TEASER prefix count S");
    run->add_flag("--teaser-znorm", ov.teaser_znorm, "z-normalize series for teaser");
    run->add_option("--teaser-nu", ov.teaser_nu, "TEASER one-class nu");
    run->add_option("--ecec-n", ov.ecec_n, "ECEC prefix count N");
    run->add_option("--ecec-alpha", ov.ecec_alpha, "ECEC accuracy weight alpha");
    run->add_option("--ecok-k", ov.ecok_k, "ECONOMY-K cluster counts to try")->delimiter(',');
    run->add_option("--ecok-lambda", ov.ecok_lambda, "ECONOMY-K sigmoid sharpness");
    run->add_option("--ecok-cost", ov.ecok_cost, "ECONOMY-K time cost per time-point");

    // stats
    auto* stats = app.add_subcommand("stats", "Print dataset statistics and categories");
    std::string stats_path, stats_format;
    std::size_t stats_dims = 1;
    bool stats_source = false;
    stats->add_option("dataset", stats_path, "Dataset file")->required()->check(CLI::ExistingFile);
    stats->add_option("--format", stats_format, "csv or ts (default: from extension)");
    stats->add_option("--dims", stats_dims, "CSV variable count");
    stats->add_flag("--source-column", stats_source, "CSV has a source id after the label");

    // folds
    auto* folds = app.add_subcommand("folds", "Print a stratified fold assignment");
    std::string folds_path, folds_format, folds_key = "class";
    std::size_t folds_k = 5, folds_dims = 1;
    std::uint64_t folds_seed = 0;
    bool folds_source = false;
    folds->add_option("dataset", folds_path, "Dataset file")->required()->check(CLI::ExistingFile);
    folds->add_option("--k", folds_k, "Fold count");
    folds->add_option("--seed", folds_seed, "Shuffle seed");
    folds->add_option("--key", folds_key, "Stratify by class or source")
        ->check(CLI::IsMember({"class", "source"}));
    folds->add_option("--format", folds_format, "csv or ts (default: from extension)");
    folds->add_option("--dims", folds_dims, "CSV variable count");
    folds->add_flag("--source-column", folds_source, "CSV has a source id after the label");

    CLI11_PARSE(app, argc, argv);

    try {
        if (*run) {
            std::ifstream in(config_path);
            const json j = json::parse(in);
            RunConfig cfg = RunConfig::from_json(j, std::filesystem::path(config_path).parent_path());
            if (!output_dir.empty()) cfg.output_dir = output_dir;
            if (timeout) cfg.timeout_seconds = *timeout;
            if (workers) cfg.workers = *workers;
            if (!multivariate.empty()) cfg.multivariate = parse_multivariate_mode(multivariate);
            if (!ragged.empty()) cfg.ragged = parse_ragged_policy(ragged);
            apply(ov, cfg);
            if (cfg.output_dir.empty()) cfg.output_dir = "etsc-results";

            const auto result = run_experiment(cfg);
            write_reports(result, cfg, cfg.output_dir);
            print_summary(result);
            std::printf("reports written to %s\n", cfg.output_dir.string().c_str());
            return result.partial() ? kPartial : kOk;
        }
        if (*stats) {
            const Dataset d = load_for_inspection(stats_path, stats_format, stats_dims, stats_source);
            json j = stats_to_json(dataset_stats(impute_missing(d)));
            j["name"] = d.name;
            j["equal_length"] = d.equal_length();
            j["min_length"] = d.min_length();
            j["classes"] = d.class_names;
            j["class_counts"] = d.class_counts();
            std::cout << j.dump(2) << "\n";
            return kOk;
        }
        if (*folds) {
            const Dataset d = load_for_inspection(folds_path, folds_format, folds_dims, folds_source);
            const FoldPlan plan = stratified_folds(d, folds_k, folds_seed, parse_fold_key(folds_key));
            for (const auto& w : plan.warnings) std::cerr << "warning: " << w << "\n";
            json fold_list = json::array();
            for (std::size_t f = 0; f < plan.k; ++f) {
                const auto idx = plan.test_indices(f);
                std::vector<std::size_t> counts(d.num_classes(), 0);
                for (std::size_t i : idx) ++counts[static_cast<std::size_t>(d.instances[i].label)];
                fold_list.push_back({{"fold", f}, {"size", idx.size()}, {"class_counts", counts},
                                     {"instances", idx}});
            }
            const json out = {{"dataset", d.name}, {"k", plan.k}, {"seed", folds_seed},
                              {"key", to_string(plan.key)}, {"classes", d.class_names},
                              {"folds", fold_list}};
            std::cout << out.dump(2) << "\n";
            return kOk;
        }
    } catch (const std::exception& e) {
        std::cerr << "etsc: " << e.what() << "\n";
        return kFatal;
    }
    return kOk;
}
