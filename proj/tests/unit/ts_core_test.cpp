#include <gtest/gtest.h>

#include <cmath>
#include <set>
#include <sstream>

#include "etsc/error.hpp"
#include "etsc/folds.hpp"
#include "etsc/io.hpp"
#include "etsc/preprocess.hpp"
#include "etsc/rng.hpp"
#include "etsc/stats.hpp"
#include "synthetic.hpp"

using namespace etsc;

namespace {

const std::vector<double> kAlive = {1137, 1229, 1213, 1091, 896, 744, 681, 661};
const std::vector<double> kNecrotic = {0, 0, 11, 42, 84, 99, 103, 106};
const std::vector<double> kApoptotic = {0, 1, 17, 118, 282, 432, 509, 549};

TimeSeries running_example() { return TimeSeries::from_rows({kAlive, kNecrotic, kApoptotic}); }

Dataset parse_csv_text(const std::string& text, LoadOptions opts = {}) {
    std::istringstream in(text);
    return parse_csv(in, "inline.csv", opts);
}

Dataset parse_ts_text(const std::string& text) {
    std::istringstream in(text);
    return parse_ts(in, "inline.ts");
}

std::vector<double> values(const TimeSeries& s, std::size_t d = 0) {
    return {s.row(d).begin(), s.row(d).end()};
}

}  // namespace

TEST(Io, ParsesThreeLineCsv) {
    const auto d = parse_csv_text("1,1137,1229,1213\n0,0,0,11\n1,0,1,17\n");
    EXPECT_EQ(d.size(), 3u);
    EXPECT_EQ(d.dims(), 1u);
    EXPECT_EQ(d.max_length(), 3u);
    EXPECT_EQ(values(d.instances[0].series), (std::vector<double>{1137, 1229, 1213}));
    EXPECT_EQ(d.class_names, (std::vector<std::string>{"0", "1"}));
}

TEST(Io, NonNumericCellNamesTheLine) {
    try {
        parse_csv_text("a,1,2,3\nb,1,x,3\n");
        FAIL() << "expected a parse error";
    } catch (const ParseError& e) {
        EXPECT_EQ(e.line(), 2u);
        EXPECT_NE(std::string(e.what()).find("2"), std::string::npos);
    }
}

TEST(Io, RunningExampleAsThreeVariableCsv) {
    std::string line = "interesting";
    for (const auto* row : {&kAlive, &kNecrotic, &kApoptotic}) {
        for (double v : *row) line += "," + format_double(v);
    }
    LoadOptions opts;
    opts.dims = 3;
    const auto d = parse_csv_text(line + "\n", opts);
    ASSERT_EQ(d.size(), 1u);
    EXPECT_EQ(d.dims(), 3u);
    EXPECT_EQ(values(d.instances[0].series, 0), kAlive);
    EXPECT_EQ(values(d.instances[0].series, 2), kApoptotic);
}

TEST(Io, CsvMissingCellsAndSourceColumn) {
    LoadOptions opts;
    opts.source_column = true;
    const auto d = parse_csv_text("x,v1,1,,3\ny,v2,?,2,NaN\n", opts);
    EXPECT_EQ(d.instances[0].source_id, "v1");
    EXPECT_TRUE(is_missing(d.instances[0].series(0, 1)));
    EXPECT_TRUE(is_missing(d.instances[1].series(0, 0)));
    EXPECT_TRUE(is_missing(d.instances[1].series(0, 2)));
}

TEST(Io, TsTextWithMissingAndMultipleDims) {
    const auto d = parse_ts_text(
        "# comment\n@problemName toy\n@timeStamps false\n@univariate false\n"
        "@classLabel true up down\n@data\n1,2,3:4,?,6:up\n7,8,9:1,1,1:down\n");
    ASSERT_EQ(d.size(), 2u);
    EXPECT_EQ(d.dims(), 2u);
    EXPECT_TRUE(is_missing(d.instances[0].series(1, 1)));
    EXPECT_EQ(d.class_names[static_cast<std::size_t>(d.instances[0].label)], "up");
}

TEST(Io, TsTextInconsistentDimsIsAnError) {
    EXPECT_THROW(parse_ts_text("@classLabel true a b\n@data\n1,2:3,4:a\n1,2:b\n"), DataError);
}

TEST(Io, TsTextUndeclaredLabelIsAnError) {
    EXPECT_THROW(parse_ts_text("@classLabel true a b\n@data\n1,2:c\n"), ParseError);
}

TEST(Io, CsvRoundTripKeepsEveryBit) {
    Rng rng(5);
    std::vector<TimeSeries> series;
    for (int i = 0; i < 4; ++i) {
        std::vector<double> v(7);
        for (auto& x : v) x = rng.normal() * 1e3 / 3.0;
        series.push_back(TimeSeries::univariate(v));
    }
    const auto d = Dataset::from_named("rt", series, {"p", "q", "p", "q"});
    std::ostringstream out;
    write_csv(d, out);
    const auto back = parse_csv_text(out.str());
    ASSERT_EQ(back.size(), d.size());
    for (std::size_t i = 0; i < d.size(); ++i) {
        EXPECT_EQ(back.instances[i].series, d.instances[i].series);
        EXPECT_EQ(back.instances[i].label, d.instances[i].label);
    }
}

TEST(Io, LoadsBundledFiles) {
    const auto gp = load_dataset(ETSC_TEST_DATA_DIR "/GunPoint.ts", DataFormat::TsText);
    EXPECT_EQ(gp.name, "GunPoint");
    EXPECT_EQ(gp.size(), 200u);
    EXPECT_EQ(gp.max_length(), 150u);
    EXPECT_EQ(gp.num_classes(), 2u);

    const auto bm = load_dataset(ETSC_TEST_DATA_DIR "/BasicMotions.ts", DataFormat::TsText);
    EXPECT_EQ(bm.size(), 80u);
    EXPECT_EQ(bm.dims(), 6u);
    EXPECT_EQ(bm.num_classes(), 4u);

    const auto pg = load_dataset(ETSC_TEST_DATA_DIR "/PickupGestureWiimoteZ.ts", DataFormat::TsText);
    EXPECT_FALSE(pg.equal_length());
    EXPECT_THROW(equalize_lengths(pg, RaggedPolicy::Reject), DataError);
    const auto padded = equalize_lengths(pg, RaggedPolicy::Pad);
    EXPECT_TRUE(padded.equal_length());
    EXPECT_EQ(padded.max_length(), pg.max_length());
}

TEST(Impute, SingleGapTakesNeighbourMean) {
    const auto s = impute_missing(TimeSeries::univariate({1, kMissing, 3}));
    EXPECT_EQ(values(s), (std::vector<double>{1, 2, 3}));
}

TEST(Impute, LeadingGapReplicatesFirstValue) {
    const auto s = impute_missing(TimeSeries::univariate({kMissing, kMissing, 5, 7}));
    EXPECT_EQ(values(s), (std::vector<double>{5, 5, 5, 7}));
}

TEST(Impute, TrailingAndLongGaps) {
    const auto s = impute_missing(TimeSeries::univariate({2, kMissing, kMissing, 6, kMissing}));
    EXPECT_EQ(values(s), (std::vector<double>{2, 4, 4, 6, 6}));
}

TEST(Impute, NoGapsIsIdentity) {
    const auto s = TimeSeries::univariate({4, 4, 4});
    EXPECT_EQ(impute_missing(s), s);
}

TEST(Impute, AllMissingVariableIsAnError) {
    try {
        impute_missing(TimeSeries::from_rows({{1, 2}, {kMissing, kMissing}}));
        FAIL() << "expected DataError";
    } catch (const DataError& e) {
        EXPECT_NE(std::string(e.what()).find("1"), std::string::npos) << e.what();
    }
}

TEST(Impute, IdempotentOnRandomGaps) {
    Rng rng(11);
    for (int trial = 0; trial < 200; ++trial) {
        std::vector<double> v(1 + rng.index(20));
        for (auto& x : v) x = rng.uniform() < 0.3 ? kMissing : rng.normal();
        if (std::all_of(v.begin(), v.end(), is_missing)) v[rng.index(v.size())] = 1.0;
        const auto once = impute_missing(TimeSeries::univariate(v));
        EXPECT_FALSE(once.has_missing());
        EXPECT_EQ(impute_missing(once), once);
    }
}

TEST(Prefix, RunningExample) {
    const auto s = running_example();
    EXPECT_EQ(prefix(s, 8), s);
    const auto p3 = prefix(s, 3);
    EXPECT_EQ(p3.dims(), 3u);
    EXPECT_EQ(values(p3, 0), (std::vector<double>{1137, 1229, 1213}));
    EXPECT_EQ(prefix(s, 1).length(), 1u);
    EXPECT_THROW(prefix(s, 0), std::out_of_range);
    EXPECT_THROW(prefix(s, 9), std::out_of_range);
}

TEST(ZNormalize, ThreePoints) {
    const auto z = znormalize(TimeSeries::univariate({1, 2, 3}));
    const double expected = 1.0 / std::sqrt(2.0 / 3.0);
    EXPECT_NEAR(z(0, 0), -expected, 1e-12);
    EXPECT_NEAR(z(0, 1), 0.0, 1e-12);
    EXPECT_NEAR(z(0, 2), expected, 1e-12);
}

TEST(ZNormalize, ConstantBecomesZeros) {
    EXPECT_EQ(values(znormalize(TimeSeries::univariate({5, 5, 5}))), (std::vector<double>{0, 0, 0}));
}

TEST(ZNormalize, MomentsAndIdempotence) {
    Rng rng(3);
    for (int trial = 0; trial < 100; ++trial) {
        const std::size_t dims = 1 + rng.index(3);
        std::vector<std::vector<double>> rows(dims, std::vector<double>(2 + rng.index(30)));
        for (auto& r : rows) {
            for (auto& x : r) x = 100.0 * rng.normal() + 50.0;
        }
        const auto z = znormalize(TimeSeries::from_rows(rows));
        for (std::size_t d = 0; d < dims; ++d) {
            double mean = 0.0, sq = 0.0;
            for (double x : z.row(d)) mean += x;
            mean /= static_cast<double>(z.length());
            for (double x : z.row(d)) sq += (x - mean) * (x - mean);
            EXPECT_LT(std::abs(mean), 1e-9);
            EXPECT_LT(std::abs(std::sqrt(sq / static_cast<double>(z.length())) - 1.0), 1e-9);
        }
        const auto zz = znormalize(z);
        for (std::size_t i = 0; i < z.values().size(); ++i) {
            EXPECT_NEAR(zz.values()[i], z.values()[i], 1e-9);
        }
    }
}

namespace {

Dataset labels_only(const std::vector<std::string>& labels) {
    std::vector<TimeSeries> s(labels.size(), TimeSeries::univariate({0.0}));
    return Dataset::from_named("folds", s, labels);
}

std::vector<std::vector<std::size_t>> fold_class_counts(const Dataset& d, const FoldPlan& plan) {
    std::vector<std::vector<std::size_t>> c(plan.k, std::vector<std::size_t>(d.num_classes(), 0));
    for (std::size_t i = 0; i < d.size(); ++i) {
        ++c[plan.assignments[i]][static_cast<std::size_t>(d.instances[i].label)];
    }
    return c;
}

}  // namespace

TEST(Folds, BalancedClassesGiveOneOfEachPerFold) {
    const auto d = labels_only({"a", "a", "a", "a", "a", "b", "b", "b", "b", "b"});
    const auto plan = stratified_folds(d, 5, 1);
    for (const auto& counts : fold_class_counts(d, plan)) {
        EXPECT_EQ(counts, (std::vector<std::size_t>{1, 1}));
    }
}

TEST(Folds, SevenThreeSplit) {
    const auto d = labels_only({"a", "a", "a", "a", "a", "a", "a", "b", "b", "b"});
    const auto plan = stratified_folds(d, 5, 42);
    for (const auto& counts : fold_class_counts(d, plan)) {
        EXPECT_TRUE(counts[0] == 1 || counts[0] == 2);
        EXPECT_LE(counts[1], 1u);
    }
    EXPECT_EQ(plan.warnings.size(), 1u);  // class b has 3 < 5 instances
}

TEST(Folds, SameSeedSamePlan) {
    const auto d = fixtures::random_dataset(57, 3, 3, 8);
    EXPECT_EQ(stratified_folds(d, 5, 9).assignments, stratified_folds(d, 5, 9).assignments);
}

TEST(Folds, PartitionAndBalanceOnRandomData) {
    Rng rng(17);
    for (int trial = 0; trial < 50; ++trial) {
        const std::size_t n = 5 + rng.index(80);
        const std::size_t classes = 1 + rng.index(4);
        const auto d = fixtures::random_dataset(n, 2, std::min(classes, n), 100 + trial);
        const std::size_t k = 2 + rng.index(5);
        const auto plan = stratified_folds(d, k, trial);
        std::multiset<std::size_t> seen;
        for (std::size_t f = 0; f < k; ++f) {
            for (std::size_t i : plan.test_indices(f)) seen.insert(i);
            EXPECT_EQ(plan.test_indices(f).size() + plan.train_indices(f).size(), n);
        }
        EXPECT_EQ(seen.size(), n);
        EXPECT_EQ(std::set<std::size_t>(seen.begin(), seen.end()).size(), n);
        const auto counts = fold_class_counts(d, plan);
        for (std::size_t c = 0; c < d.num_classes(); ++c) {
            std::size_t lo = n, hi = 0;
            for (const auto& f : counts) {
                lo = std::min(lo, f[c]);
                hi = std::max(hi, f[c]);
            }
            EXPECT_LE(hi - lo, 1u);
        }
    }
}

TEST(Folds, SourceIdStratification) {
    std::vector<TimeSeries> s(12, TimeSeries::univariate({0.0}));
    std::vector<std::string> labels, sources;
    for (int i = 0; i < 12; ++i) {
        labels.push_back(i % 2 ? "x" : "y");
        sources.push_back(i < 6 ? "vessel1" : "vessel2");
    }
    const auto d = Dataset::from_named("grouped", s, labels, sources);
    const auto plan = stratified_folds(d, 3, 4, FoldKey::SourceId);
    for (std::size_t f = 0; f < 3; ++f) {
        std::size_t v1 = 0;
        for (std::size_t i : plan.test_indices(f)) v1 += d.instances[i].source_id == "vessel1";
        EXPECT_EQ(v1, 2u);
        EXPECT_EQ(plan.test_indices(f).size(), 4u);
    }
}

TEST(Stats, BiologicalLikeIsImbalancedAndUnstable) {
    // 537 vs 100 instances; values spread well past a standard deviation of 100.
    Rng rng(2);
    std::vector<TimeSeries> s;
    std::vector<std::string> labels;
    for (int i = 0; i < 637; ++i) {
        std::vector<double> v(49);
        for (auto& x : v) x = 222.93 * rng.normal() + 500.0;
        s.push_back(TimeSeries::univariate(v));
        labels.push_back(i < 537 ? "non-interesting" : "interesting");
    }
    const auto st = dataset_stats(Dataset::from_named("bio", s, labels));
    EXPECT_NEAR(st.imbalance_ratio, 5.37, 1e-12);
    EXPECT_GT(st.pooled_std_dev, 100.0);
    EXPECT_EQ(st.categories, (std::vector<Category>{Category::Unstable, Category::Imbalanced}));
}

TEST(Stats, BasicMotionsIsMulticlassOnly) {
    const auto bm = load_dataset(ETSC_TEST_DATA_DIR "/BasicMotions.ts", DataFormat::TsText);
    const auto st = dataset_stats(bm);
    EXPECT_EQ(st.height, 80u);
    EXPECT_EQ(st.length, 100u);
    EXPECT_DOUBLE_EQ(st.imbalance_ratio, 1.0);
    EXPECT_EQ(st.categories, (std::vector<Category>{Category::Multiclass}));
}

TEST(Stats, SingleClassToyIsCommon) {
    const auto st = dataset_stats(labels_only({"only", "only", "only"}));
    EXPECT_DOUBLE_EQ(st.imbalance_ratio, 1.0);
    EXPECT_EQ(st.categories, (std::vector<Category>{Category::Common}));
}

TEST(Stats, CategoryRulesOnRandomDatasets) {
    Rng rng(23);
    for (int trial = 0; trial < 60; ++trial) {
        const std::size_t n = 2 + rng.index(1200);
        const std::size_t T = 1 + rng.index(1400);
        const std::size_t classes = 1 + rng.index(4);
        const double scale = rng.uniform() < 0.5 ? 10.0 : 500.0;
        // Keep the trial cheap: few long series or many short ones.
        const std::size_t len = n * T > 300000 ? std::max<std::size_t>(1, 300000 / n) : T;
        const auto d = fixtures::random_dataset(n, len, std::min(classes, n), 500 + trial, scale);
        const auto st = dataset_stats(d);

        std::vector<std::size_t> counts(d.num_classes(), 0);
        double sum = 0.0, sq = 0.0, cnt = 0.0;
        for (const auto& inst : d.instances) {
            ++counts[static_cast<std::size_t>(inst.label)];
            for (double x : inst.series.values()) {
                sum += x;
                cnt += 1.0;
            }
        }
        const double mean = sum / cnt;
        for (const auto& inst : d.instances) {
            for (double x : inst.series.values()) sq += (x - mean) * (x - mean);
        }
        const double pooled = std::sqrt(sq / cnt);
        const double ratio = static_cast<double>(*std::max_element(counts.begin(), counts.end())) /
                             static_cast<double>(*std::min_element(counts.begin(), counts.end()));
        EXPECT_NEAR(st.pooled_std_dev, pooled, 1e-6 * pooled);
        EXPECT_DOUBLE_EQ(st.imbalance_ratio, ratio);
        EXPECT_EQ(st.in(Category::Wide), len > 1300);
        EXPECT_EQ(st.in(Category::Large), n > 1000);
        EXPECT_EQ(st.in(Category::Unstable), pooled > 100.0);
        EXPECT_EQ(st.in(Category::Imbalanced), ratio > 1.0);
        EXPECT_EQ(st.in(Category::Multiclass), d.num_classes() > 2);
        const bool other = len > 1300 || n > 1000 || pooled > 100.0 || ratio > 1.0 ||
                           d.num_classes() > 2;
        EXPECT_EQ(st.in(Category::Common), !other);
    }
}
