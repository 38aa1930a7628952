#include <gtest/gtest.h>

#include <cmath>
#include <limits>

#include "etsc/algorithms/edsc.hpp"
#include "etsc/error.hpp"
#include "etsc/preprocess.hpp"
#include "etsc/rng.hpp"
#include "synthetic.hpp"

using namespace etsc;

namespace {

// Straightforward restatements used as oracles.
double naive_min_dist(const std::vector<double>& sub, const std::vector<double>& s) {
    double best = std::numeric_limits<double>::infinity();
    for (std::size_t o = 0; o + sub.size() <= s.size(); ++o) {
        double acc = 0.0;
        for (std::size_t i = 0; i < sub.size(); ++i) acc += (sub[i] - s[o + i]) * (sub[i] - s[o + i]);
        best = std::min(best, std::sqrt(acc));
    }
    return best;
}

double naive_utility(const std::vector<double>& sub, double delta, Label label, const Dataset& d) {
    const std::size_t T = d.max_length();
    double hits = 0, fires = 0, targets = 0, weighted = 0;
    for (const auto& inst : d.instances) {
        const std::vector<double> s(inst.series.row(0).begin(), inst.series.row(0).end());
        const bool target = inst.label == label;
        targets += target;
        // The earliest prefix at which the shapelet fires.
        for (std::size_t t = sub.size(); t <= T; ++t) {
            const std::vector<double> p(s.begin(), s.begin() + static_cast<std::ptrdiff_t>(t));
            if (naive_min_dist(sub, p) <= delta) {
                fires += 1;
                if (target) {
                    hits += 1;
                    weighted += 1.0 - static_cast<double>(t - 1) / static_cast<double>(T);
                }
                break;
            }
        }
    }
    if (fires == 0) return 0.0;
    const double p = hits / fires, wr = weighted / targets;
    return p + wr > 0 ? 2 * p * wr / (p + wr) : 0.0;
}

std::vector<double> row(const Dataset& d, std::size_t i) {
    return {d.instances[i].series.row(0).begin(), d.instances[i].series.row(0).end()};
}

}  // namespace

TEST(Edsc, MinDistExamples) {
    const std::vector<double> sub = {1, 2}, s = {0, 1, 2, 5};
    EXPECT_DOUBLE_EQ(min_dist(sub, s), 0.0);
    const std::vector<double> sub2 = {3, 3}, s2 = {0, 0, 0};
    EXPECT_DOUBLE_EQ(min_dist(sub2, s2), std::sqrt(18.0));
    const std::vector<double> longer = {1, 2, 3, 4, 5};
    EXPECT_THROW(min_dist(longer, s), std::invalid_argument);
}

TEST(Edsc, FirstMatchEnd) {
    const std::vector<double> sub = {1, 1}, s = {0, 1, 1, 0, 1, 1};
    EXPECT_EQ(first_match_end(sub, s, 0.0), std::optional<std::size_t>(3));
    EXPECT_EQ(first_match_end(sub, s, 1.0), std::optional<std::size_t>(2));
    const std::vector<double> far = {9, 9};
    EXPECT_FALSE(first_match_end(far, s, 1.0).has_value());
}

TEST(Edsc, ChebyshevThreshold) {
    const std::vector<double> d = {2, 4, 6};  // mean 4, population variance 8/3
    EXPECT_NEAR(che_threshold(d, 0.5), 4.0 - 0.5 * 8.0 / 3.0, 1e-12);
    EXPECT_DOUBLE_EQ(che_threshold(d, 3.0), 0.0);
    EXPECT_DOUBLE_EQ(che_threshold_from_moments(10.0, 1.0, 3.0), 7.0);
    EXPECT_THROW(che_threshold(std::vector<double>{}, 3.0), std::invalid_argument);
}

TEST(Edsc, EarlinessWeightAndScore) {
    EXPECT_DOUBLE_EQ(earliness_weight(1, 10), 1.0);
    EXPECT_DOUBLE_EQ(earliness_weight(10, 10), 0.1);
    EXPECT_DOUBLE_EQ(utility_score(1.0, 0.5), 2.0 / 3.0);
    EXPECT_DOUBLE_EQ(utility_score(0.0, 0.0), 0.0);
}

TEST(Edsc, UtilityMatchesPrefixByPrefixOracle) {
    Rng rng(3);
    for (int trial = 0; trial < 40; ++trial) {
        const auto d = fixtures::random_dataset(8, 12, 2, 50 + trial);
        const std::size_t i = rng.index(d.size());
        const std::size_t len = 2 + rng.index(5);
        const std::size_t off = rng.index(12 - len + 1);
        const auto s = row(d, i);
        Shapelet sh;
        sh.values.assign(s.begin() + static_cast<std::ptrdiff_t>(off),
                         s.begin() + static_cast<std::ptrdiff_t>(off + len));
        sh.threshold = rng.uniform() * 0.8;
        sh.label = d.instances[i].label;
        EXPECT_NEAR(utility(sh, d), naive_utility(sh.values, sh.threshold, sh.label, d), 1e-12);
    }
}

TEST(Edsc, PoolSelectionGolden) {
    // Candidate 1 wins, candidate 0 then only adds instance 0, candidate 2
    // adds nothing new and candidate 3 has no utility.
    const std::vector<double> u = {0.5, 0.9, 0.5, 0.0};
    const std::vector<std::vector<std::size_t>> covers = {{0, 1}, {1, 2}, {2}, {3}};
    EXPECT_EQ(select_pool(u, covers, 4), (std::vector<std::size_t>{1, 0}));
    // Stops as soon as everything is covered.
    const std::vector<double> u2 = {0.9, 0.8, 0.7};
    EXPECT_EQ(select_pool(u2, {{0, 1}, {0}, {1}}, 2), (std::vector<std::size_t>{0}));
}

TEST(Edsc, TrainedPoolRespectsDefinitions) {
    const auto d = fixtures::sine_dataset(16, 24, 5, 9);
    EdscOptions opts;
    opts.min_len = 4;
    opts.max_len = 8;
    const auto m = EdscModel::train(d, opts);
    ASSERT_FALSE(m.pool().empty());
    double prev = std::numeric_limits<double>::infinity();
    for (const auto& sh : m.pool()) {
        EXPECT_GE(sh.values.size(), 4u);
        EXPECT_LE(sh.values.size(), 8u);
        EXPECT_LE(sh.utility, prev);
        prev = sh.utility;
        // Threshold from non-target distances.
        std::vector<double> nontarget;
        for (std::size_t j = 0; j < d.size(); ++j) {
            if (d.instances[j].label != sh.label) nontarget.push_back(naive_min_dist(sh.values, row(d, j)));
        }
        EXPECT_NEAR(sh.threshold, che_threshold(nontarget, 3.0), 1e-9);
        EXPECT_NEAR(sh.utility, naive_utility(sh.values, sh.threshold, sh.label, d), 1e-9);
        const auto src = row(d, sh.instance);
        for (std::size_t k = 0; k < sh.values.size(); ++k) EXPECT_EQ(sh.values[k], src[sh.offset + k]);
    }
}

TEST(Edsc, SessionAgreesWithStatelessDecision) {
    Rng rng(21);
    for (int trial = 0; trial < 30; ++trial) {
        std::vector<Shapelet> pool;
        const std::size_t k = rng.index(4);
        for (std::size_t p = 0; p < k; ++p) {
            Shapelet sh;
            sh.values.resize(1 + rng.index(4));
            for (auto& v : sh.values) v = rng.normal();
            sh.threshold = rng.uniform() * 1.5;
            sh.label = static_cast<Label>(rng.index(3));
            pool.push_back(sh);
        }
        const auto m = EdscModel::from_pool(pool, 15, 3, 1);
        std::vector<double> v(15);
        for (auto& x : v) x = rng.normal();
        const auto s = TimeSeries::univariate(v);
        auto session = m.open_session();
        for (std::size_t t = 1; t <= 15; ++t) {
            const auto p = prefix(s, t);
            const auto a = session->observe(p);
            const auto b = m.decide(p);
            EXPECT_EQ(a, b) << "trial " << trial << " t " << t;
            if (a.predict) break;
        }
    }
}

TEST(Edsc, EmptyPoolFallsBackToMajority) {
    const auto m = EdscModel::from_pool({}, 5, 2, 1);
    const auto r = classify_stream(m, TimeSeries::univariate({1, 2, 3, 4, 5}));
    EXPECT_EQ(r.label, 1);
    EXPECT_EQ(r.trigger, 5u);
}

TEST(Edsc, ClassifiesSineDataEarly) {
    const auto train = fixtures::sine_dataset(30, 40, 5, 31);
    const auto test = fixtures::sine_dataset(20, 40, 5, 32);
    const auto m = EdscModel::train(train);
    std::size_t correct = 0;
    double trig = 0;
    for (const auto& inst : test.instances) {
        const auto r = classify_stream(m, inst.series);
        correct += r.label == inst.label;
        trig += static_cast<double>(r.trigger) / 40.0;
    }
    EXPECT_GE(correct, 17u);
    EXPECT_LT(trig / 20.0, 0.8);
}

TEST(Edsc, RejectsSingleClass) {
    EXPECT_THROW(EdscModel::train(fixtures::rows_dataset({{1, 2, 3}, {2, 3, 4}}, {0, 0})), DataError);
}
