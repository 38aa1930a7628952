#pragma once

#include <cstdint>
#include <filesystem>
#include <optional>
#include <string>
#include <vector>

#include <json.hpp>

#include "etsc/bench/metrics.hpp"
#include "etsc/bench/registry.hpp"
#include "etsc/folds.hpp"
#include "etsc/io.hpp"
#include "etsc/preprocess.hpp"
#include "etsc/stats.hpp"

namespace etsc {

struct DatasetSpec {
    std::filesystem::path path;
    std::optional<DataFormat> format;  ///< from the extension when unset
    LoadOptions load;
    FoldKey fold_key = FoldKey::Class;
    std::string name;  ///< file stem when empty
};

struct AlgorithmSpec {
    std::string id;
    nlohmann::json params = nlohmann::json::object();
};

struct RunConfig {
    std::vector<DatasetSpec> datasets;
    std::vector<AlgorithmSpec> algorithms;
    std::size_t folds = 5;
    std::uint64_t seed = 0;
    double timeout_seconds = 86400.0;
    std::filesystem::path output_dir;
    std::size_t workers = 1;
    RaggedPolicy ragged = RaggedPolicy::Reject;
    MultivariateMode multivariate = MultivariateMode::Auto;
    /// Run every job in a forked child so the timeout can be enforced.
    bool isolate = true;

    /// Relative dataset paths resolve against base_dir.
    static RunConfig from_json(const nlohmann::json& j, const std::filesystem::path& base_dir = {});
    nlohmann::json to_json() const;
    /// Throws std::invalid_argument on an unusable configuration.
    void validate(const AlgorithmRegistry& registry) const;
};

enum class RunStatus { Ok, Timeout, Error };
std::string to_string(RunStatus s);
RunStatus parse_run_status(const std::string& s);

struct MetricRecord {
    std::string algorithm;
    std::string dataset;
    std::size_t fold = 0;
    RunStatus status = RunStatus::Ok;
    std::size_t test_size = 0;
    Metrics metrics;  ///< meaningful only when status is Ok
    double train_seconds = 0.0;
    double test_seconds = 0.0;
    std::string message;
};

nlohmann::json record_to_json(const MetricRecord& r, bool with_timings);
MetricRecord record_from_json(const nlohmann::json& j);

struct CategoryAggregate {
    std::string algorithm;
    Category category = Category::Common;
    std::size_t datasets = 0;
    double accuracy_mean = 0.0, accuracy_std = 0.0;
    double f1_mean = 0.0, f1_std = 0.0;
    double earliness_mean = 0.0, earliness_std = 0.0;
    double hm_mean = 0.0, hm_std = 0.0;
};

struct NamedStats {
    std::string dataset;
    DatasetStats stats;
};

/**
 * Per algorithm and category: mean and population standard deviation over
 * member datasets of each dataset's mean over its successful folds.
 * Datasets without a successful fold are left out.
 */
std::vector<CategoryAggregate> categorize_and_aggregate(const std::vector<MetricRecord>& records,
                                                        const std::vector<NamedStats>& stats);

struct ExperimentResult {
    std::vector<MetricRecord> records;
    std::vector<NamedStats> stats;
    std::vector<CategoryAggregate> aggregates;

    bool partial() const;
};

/// Load, impute and equalize lengths.
Dataset load_prepared(const DatasetSpec& spec, RaggedPolicy ragged);

/// Trains on every fold but `fold`, then streams the held-out instances.
MetricRecord run_fold(const AlgorithmRegistry& registry, const AlgorithmSpec& algo,
                      const Dataset& d, const FoldPlan& plan, std::size_t fold,
                      std::uint64_t seed, MultivariateMode mode);

/// Seed handed to the algorithm for one fold.
std::uint64_t fold_seed(std::uint64_t seed, std::size_t fold);

ExperimentResult run_experiment(const RunConfig& cfg,
                                const AlgorithmRegistry& registry = AlgorithmRegistry::builtin());

/**
 * report.json (deterministic, no timings), timings.json, records.csv,
 * datasets.csv and categories.csv.
 */
void write_reports(const ExperimentResult& result, const RunConfig& cfg,
                   const std::filesystem::path& dir);

nlohmann::json stats_to_json(const DatasetStats& s);

}  // namespace etsc
