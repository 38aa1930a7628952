#include <gtest/gtest.h>

#include <chrono>
#include <filesystem>
#include <fstream>
#include <sstream>
#include <thread>

#include "etsc/bench/experiment.hpp"
#include "etsc/bench/metrics.hpp"
#include "etsc/error.hpp"
#include "synthetic.hpp"

using namespace etsc;
namespace fs = std::filesystem;

namespace {

fs::path scratch_dir(const std::string& name) {
    const auto dir = fs::temp_directory_path() / ("etsc_bench_test_" + name);
    fs::remove_all(dir);
    fs::create_directories(dir);
    return dir;
}

fs::path write_dataset(const Dataset& d, const fs::path& dir, const std::string& stem) {
    const auto path = dir / (stem + ".csv");
    std::ofstream out(path);
    write_csv(d, out);
    return path;
}

std::string slurp(const fs::path& p) {
    std::ifstream in(p);
    std::stringstream ss;
    ss << in.rdbuf();
    return ss.str();
}

MetricRecord ok_record(std::string algo, std::string dataset, double acc, double earl) {
    MetricRecord r;
    r.algorithm = std::move(algo);
    r.dataset = std::move(dataset);
    r.metrics.accuracy = acc;
    r.metrics.f1 = acc;
    r.metrics.earliness = earl;
    r.metrics.harmonic_mean = harmonic_mean(acc, earl);
    return r;
}

}  // namespace

TEST(Metrics, HarmonicMeanExamples) {
    EXPECT_NEAR(harmonic_mean(1.0, 0.1), 2 * 0.9 / 1.9, 1e-12);
    EXPECT_NEAR(harmonic_mean(1.0, 0.1), 0.9473684210526315, 1e-9);
    EXPECT_DOUBLE_EQ(harmonic_mean(1.0, 0.0), 1.0);
    EXPECT_DOUBLE_EQ(harmonic_mean(0.0, 1.0), 0.0);
}

TEST(Metrics, AllCorrectAtFirstPoint) {
    std::vector<Prediction> p(4, Prediction{1, 1, 1, 10});
    p[0].truth = p[0].predicted = 0;
    const auto m = compute_metrics(p, 2);
    EXPECT_DOUBLE_EQ(m.accuracy, 1.0);
    EXPECT_DOUBLE_EQ(m.earliness, 0.1);
    EXPECT_NEAR(m.harmonic_mean, 0.9473684210526315, 1e-9);
    EXPECT_DOUBLE_EQ(m.f1, 1.0);
    ASSERT_TRUE(m.f1_positive.has_value());
}

TEST(Metrics, TwoOfThree) {
    const std::vector<Prediction> p = {{0, 0, 5, 10}, {1, 1, 5, 10}, {1, 0, 10, 10}};
    const auto m = compute_metrics(p, 2);
    EXPECT_NEAR(m.accuracy, 2.0 / 3.0, 1e-12);
    EXPECT_NEAR(m.earliness, 2.0 / 3.0, 1e-12);
    EXPECT_NEAR(m.harmonic_mean, 4.0 / 9.0, 1e-12);
    // class 0: tp 1, fp 1, fn 0 -> 2/3; class 1: tp 1, fp 0, fn 1 -> 2/3
    EXPECT_NEAR(m.f1, 2.0 / 3.0, 1e-12);
    EXPECT_NEAR(*m.f1_positive, 2.0 / 3.0, 1e-12);
}

TEST(Metrics, MacroF1SkipsAbsentClasses) {
    const std::vector<Prediction> p = {{0, 0, 1, 2}, {2, 2, 1, 2}, {2, 0, 1, 2}};
    const auto m = compute_metrics(p, 3);
    const double f0 = 2.0 / 3.0, f2 = 2.0 / 3.0;
    EXPECT_NEAR(m.f1, (f0 + f2) / 2.0, 1e-12);
    EXPECT_FALSE(m.f1_positive.has_value());
    EXPECT_DOUBLE_EQ(class_f1(p, 1), 0.0);
}

TEST(Aggregate, MeansAndPopulationStdOverDatasets) {
    std::vector<MetricRecord> recs = {
        ok_record("a", "d1", 1.0, 0.2), ok_record("a", "d1", 0.8, 0.4),  // d1 mean acc 0.9
        ok_record("a", "d2", 0.5, 0.5),                                  // d2 mean acc 0.5
    };
    MetricRecord failed = ok_record("a", "d2", 0.0, 1.0);
    failed.status = RunStatus::Timeout;
    recs.push_back(failed);
    DatasetStats s1, s2;
    s1.categories = {Category::Multiclass};
    s2.categories = {Category::Multiclass, Category::Unstable};
    const auto agg = categorize_and_aggregate(recs, {{"d1", s1}, {"d2", s2}});
    bool seen_multi = false, seen_unstable = false;
    for (const auto& a : agg) {
        if (a.category == Category::Multiclass) {
            seen_multi = true;
            EXPECT_EQ(a.datasets, 2u);
            EXPECT_NEAR(a.accuracy_mean, 0.7, 1e-12);
            EXPECT_NEAR(a.accuracy_std, 0.2, 1e-12);
            EXPECT_NEAR(a.earliness_mean, 0.4, 1e-12);
        }
        if (a.category == Category::Unstable) {
            seen_unstable = true;
            EXPECT_EQ(a.datasets, 1u);
            EXPECT_NEAR(a.accuracy_mean, 0.5, 1e-12);
            EXPECT_DOUBLE_EQ(a.accuracy_std, 0.0);
        }
        EXPECT_NE(a.category, Category::Common);
    }
    EXPECT_TRUE(seen_multi);
    EXPECT_TRUE(seen_unstable);
}

TEST(Records, JsonRoundTrip) {
    auto r = ok_record("ects", "gp", 0.75, 0.3);
    r.fold = 3;
    r.test_size = 40;
    r.metrics.f1_positive = 0.7;
    r.train_seconds = 1.5;
    const auto back = record_from_json(record_to_json(r, true));
    EXPECT_EQ(back.algorithm, "ects");
    EXPECT_EQ(back.fold, 3u);
    EXPECT_EQ(back.metrics.accuracy, 0.75);
    EXPECT_EQ(back.metrics.f1_positive, 0.7);
    EXPECT_EQ(back.train_seconds, 1.5);
    EXPECT_FALSE(record_to_json(r, false).contains("train_seconds"));
}

TEST(Config, UnknownKeysAndIdsAreRejected) {
    using nlohmann::json;
    EXPECT_THROW(RunConfig::from_json(json{{"datasets", {"x.csv"}}, {"bogus", 1}}), std::invalid_argument);
    const auto cfg = RunConfig::from_json(
        json{{"datasets", {"x.csv"}}, {"algorithms", {{{"id", "nope"}}}}, {"folds", 5}, {"seed", 1}});
    EXPECT_THROW(cfg.validate(AlgorithmRegistry::builtin()), std::invalid_argument);
    EXPECT_THROW(teaser_options(json{{"S", 10}, {"colour", 1}}, 0), std::invalid_argument);
    EXPECT_EQ(teaser_options(json{{"S", 10}}, 0).S, 10u);
}

TEST(Config, FoldSeedsDiffer) {
    EXPECT_NE(fold_seed(1, 0), fold_seed(1, 1));
    EXPECT_NE(fold_seed(1, 0), fold_seed(2, 0));
    EXPECT_EQ(fold_seed(5, 2), fold_seed(5, 2));
}

TEST(Registry, MultivariateDataIsVotedForUnivariateAlgorithms) {
    const auto base = fixtures::sine_dataset(20, 12, 1, 2);
    std::vector<TimeSeries> series;
    std::vector<std::string> labels;
    for (const auto& inst : base.instances) {
        const std::vector<double> v(inst.series.row(0).begin(), inst.series.row(0).end());
        series.push_back(TimeSeries::from_rows({v, v}));
        labels.push_back(base.class_names[static_cast<std::size_t>(inst.label)]);
    }
    const auto d = Dataset::from_named("mv", series, labels);
    const auto m = AlgorithmRegistry::builtin().train("ects", d, nlohmann::json::object(), 1);
    EXPECT_NE(dynamic_cast<VotingClassifier*>(m.get()), nullptr);
    const auto r = classify_stream(*m, d.instances[0].series);
    EXPECT_EQ(r.label, d.instances[0].label);
}

TEST(Experiment, TimeoutIsRecordedAndRunIsPartial) {
    const auto dir = scratch_dir("timeout");
    const auto data = write_dataset(fixtures::sine_dataset(20, 10, 1, 3), dir, "toy");
    auto registry = AlgorithmRegistry::builtin();
    registry.add("sleeper", {[](const Dataset& d, const nlohmann::json&, std::uint64_t) {
                                 std::this_thread::sleep_for(std::chrono::seconds(30));
                                 return std::unique_ptr<EarlyClassifier>(
                                     new FixedPrefixModel(FixedPrefixModel::train(d)));
                             },
                             true});
    RunConfig cfg;
    cfg.datasets.emplace_back().path = data;
    cfg.algorithms = {{"sleeper"}, {"ects"}};
    cfg.folds = 2;
    cfg.seed = 1;
    cfg.timeout_seconds = 1.0;
    cfg.output_dir = dir / "out";
    const auto start = std::chrono::steady_clock::now();
    const auto result = run_experiment(cfg, registry);
    EXPECT_LT(std::chrono::steady_clock::now() - start, std::chrono::seconds(20));
    ASSERT_EQ(result.records.size(), 4u);
    for (const auto& r : result.records) {
        EXPECT_EQ(r.status, r.algorithm == "sleeper" ? RunStatus::Timeout : RunStatus::Ok) << r.message;
    }
    EXPECT_TRUE(result.partial());
    write_reports(result, cfg, cfg.output_dir);
    const auto report = nlohmann::json::parse(slurp(cfg.output_dir / "report.json"));
    EXPECT_TRUE(report.at("partial").get<bool>());
}

TEST(Experiment, TrainerErrorsBecomeErrorRecords) {
    const auto dir = scratch_dir("error");
    const auto data = write_dataset(fixtures::sine_dataset(20, 10, 1, 4), dir, "toy");
    auto registry = AlgorithmRegistry::builtin();
    registry.add("broken", {[](const Dataset&, const nlohmann::json&, std::uint64_t)
                                -> std::unique_ptr<EarlyClassifier> { throw DataError("no good"); },
                            true});
    RunConfig cfg;
    cfg.datasets.emplace_back().path = data;
    cfg.algorithms = {{"broken"}};
    cfg.folds = 2;
    cfg.isolate = false;
    const auto result = run_experiment(cfg, registry);
    for (const auto& r : result.records) {
        EXPECT_EQ(r.status, RunStatus::Error);
        EXPECT_NE(r.message.find("no good"), std::string::npos);
    }
}

TEST(Experiment, IdenticalRunsWriteIdenticalReports) {
    const auto dir = scratch_dir("determinism");
    const auto data = write_dataset(fixtures::sine_dataset(30, 16, 3, 5), dir, "toy");
    RunConfig cfg;
    cfg.datasets.emplace_back().path = data;
    cfg.algorithms = {{"ects"}, {"teaser", {{"S", 4}}}, {"ecec", {{"N", 4}}}, {"economy-k"},
                      {"fixed-prefix"}};
    cfg.folds = 3;
    cfg.seed = 11;
    cfg.workers = 2;
    std::string first;
    for (int run = 0; run < 2; ++run) {
        const auto out = dir / ("out" + std::to_string(run));
        cfg.output_dir = out;
        write_reports(run_experiment(cfg), cfg, out);
        const auto text = slurp(out / "report.json");
        EXPECT_FALSE(text.empty());
        if (run == 0) {
            first = text;
        } else {
            EXPECT_EQ(text, first);
        }
        for (const char* f : {"timings.json", "records.csv", "datasets.csv", "categories.csv"}) {
            EXPECT_TRUE(fs::exists(out / f)) << f;
        }
    }
}
