#include <gtest/gtest.h>

#include <algorithm>

#include "etsc/algorithms/ecec.hpp"
#include "etsc/rng.hpp"
#include "oracles.hpp"
#include "synthetic.hpp"

using namespace etsc;

TEST(Ecec, ConfidenceWorkedExample) {
    ReliabilityTable r(2, 2);
    r(0, 1, 1) = 0.6;
    r(1, 1, 1) = 0.7;
    const std::vector<Label> preds = {1, 1};
    EXPECT_NEAR(confidence(r, preds), 0.88, 1e-12);
}

TEST(Ecec, ConfidenceSingleCheckpoint) {
    ReliabilityTable r(1, 2);
    r(0, 0, 0) = 1.0;
    EXPECT_DOUBLE_EQ(confidence(r, std::vector<Label>{0}), 1.0);
}

TEST(Ecec, ConfidenceUsesLastPredictionAsTruth) {
    ReliabilityTable r(3, 2);
    r(0, 0, 1) = 0.2;  // checkpoint 1 said 0, the latest says 1
    r(1, 1, 1) = 0.5;
    r(2, 1, 1) = 0.9;
    EXPECT_NEAR(confidence(r, std::vector<Label>{0, 1, 1}), 1.0 - 0.8 * 0.5 * 0.1, 1e-12);
}

TEST(Ecec, ThresholdIsInclusive) {
    EXPECT_FALSE(ecec_step(0.45, 0.5, 1, false).predict);
    EXPECT_EQ(ecec_step(0.5, 0.5, 1, false), Decision::emit(1));
    EXPECT_EQ(ecec_step(0.1, 0.5, 0, true), Decision::emit(0));
}

TEST(Ecec, ReliabilityHandComputed) {
    // Checkpoint 0 predicts 0,0,1,1 for truths 0,1,1,1.
    const std::vector<std::vector<Label>> preds = {{0}, {0}, {1}, {1}};
    const std::vector<Label> truth = {0, 1, 1, 1};
    const auto r = estimate_reliability(preds, truth, 2);
    EXPECT_DOUBLE_EQ(r(0, 0, 0), 2.0 / 4.0);
    EXPECT_DOUBLE_EQ(r(0, 0, 1), 2.0 / 4.0);
    EXPECT_DOUBLE_EQ(r(0, 1, 0), 1.0 / 4.0);
    EXPECT_DOUBLE_EQ(r(0, 1, 1), 3.0 / 4.0);
}

TEST(Ecec, ReliabilityRowsSumToOne) {
    Rng rng(4);
    std::vector<std::vector<Label>> preds(30, std::vector<Label>(5));
    std::vector<Label> truth(30);
    for (std::size_t j = 0; j < 30; ++j) {
        truth[j] = static_cast<Label>(rng.index(3));
        for (auto& p : preds[j]) p = static_cast<Label>(rng.index(3));
    }
    const auto r = estimate_reliability(preds, truth, 3);
    for (std::size_t k = 0; k < 5; ++k) {
        for (Label p = 0; p < 3; ++p) {
            double s = 0;
            for (Label y = 0; y < 3; ++y) s += r(k, p, y);
            EXPECT_NEAR(s, 1.0, 1e-12);
        }
    }
}

TEST(Ecec, ConfidenceNonDecreasingForFixedLabel) {
    Rng rng(5);
    for (int trial = 0; trial < 50; ++trial) {
        ReliabilityTable r(6, 2);
        for (std::size_t k = 0; k < 6; ++k) {
            for (Label p = 0; p < 2; ++p) {
                const double a = rng.uniform();
                r(k, p, 0) = a;
                r(k, p, 1) = 1 - a;
            }
        }
        std::vector<Label> run;
        double last = 0;
        for (std::size_t t = 0; t < 6; ++t) {
            run.push_back(1);
            const double c = confidence(r, run);
            EXPECT_GE(c, last - 1e-15);
            last = c;
        }
    }
}

TEST(Ecec, CandidatesAndCost) {
    const auto c = threshold_candidates({0.9, 0.3, 0.5, 0.5});
    const std::vector<double> expected = {0.3, 0.4, 0.7, 1.0};
    ASSERT_EQ(c.size(), expected.size());
    for (std::size_t i = 0; i < c.size(); ++i) EXPECT_NEAR(c[i], expected[i], 1e-15);
    EXPECT_NEAR(ecec_cost(1.0, 0.25, 0.8), 0.05, 1e-15);
    EXPECT_DOUBLE_EQ(ecec_cost(0.5, 0.5, 1.0), 0.5);
}

TEST(Ecec, SelectThresholdMatchesExhaustiveScan) {
    Rng rng(9);
    for (int trial = 0; trial < 20; ++trial) {
        const std::size_t n = 3 + rng.index(8), K = 2 + rng.index(5), T = K * 3;
        std::vector<std::vector<double>> conf(n, std::vector<double>(K));
        std::vector<std::vector<Label>> pred(n, std::vector<Label>(K));
        std::vector<Label> truth(n);
        std::vector<std::size_t> lengths(K);
        for (std::size_t k = 0; k < K; ++k) lengths[k] = 3 * (k + 1);
        std::vector<double> all;
        for (std::size_t j = 0; j < n; ++j) {
            truth[j] = static_cast<Label>(rng.index(2));
            for (std::size_t k = 0; k < K; ++k) {
                conf[j][k] = std::round(rng.uniform() * 20) / 20;  // force ties
                pred[j][k] = static_cast<Label>(rng.index(2));
                all.push_back(conf[j][k]);
            }
        }
        const double alpha = rng.uniform();
        const auto choice = select_threshold(conf, pred, truth, lengths, T, alpha);

        const auto cands = threshold_candidates(all);
        EXPECT_NE(std::find(cands.begin(), cands.end(), choice.theta), cands.end());
        double best = 1e9, best_theta = 0;
        for (double th : cands) {
            const auto s = fixtures::simulate_ecec(conf, pred, truth, lengths, T, th);
            const double c = alpha * (1 - s.accuracy) + (1 - alpha) * s.earliness;
            if (c < best - 1e-15) {
                best = c;
                best_theta = th;
            }
        }
        EXPECT_DOUBLE_EQ(choice.theta, best_theta);
        EXPECT_NEAR(choice.cost, best, 1e-12);
        // No threshold anywhere in [0, 1] does better.
        for (int g = 0; g <= 1000; ++g) {
            const auto s = fixtures::simulate_ecec(conf, pred, truth, lengths, T, g / 1000.0);
            EXPECT_GE(alpha * (1 - s.accuracy) + (1 - alpha) * s.earliness, best - 1e-12);
        }
    }
}

TEST(Ecec, AlphaZeroTriggersAtFirstCheckpoint) {
    const std::vector<std::vector<double>> conf = {{0.2, 0.9}, {0.6, 0.7}};
    const std::vector<std::vector<Label>> pred = {{1, 0}, {1, 1}};
    const std::vector<Label> truth = {0, 1};
    const std::vector<std::size_t> lengths = {2, 4};
    const auto c = select_threshold(conf, pred, truth, lengths, 4, 0.0);
    EXPECT_DOUBLE_EQ(c.earliness, 0.5);
    EXPECT_LE(c.theta, 0.2);
}

TEST(Ecec, ClassifiesSineDataAndStreamsConsistently) {
    const auto train = fixtures::sine_dataset(60, 40, 5, 11);
    EcecOptions opts;
    opts.N = 10;
    const auto m = EcecModel::train(train, opts);
    EXPECT_EQ(m.checkpoints().size(), 10u);
    const auto test = fixtures::sine_dataset(30, 40, 5, 12);
    std::size_t correct = 0;
    for (const auto& inst : test.instances) {
        const auto r = classify_stream(m, inst.series);
        correct += r.label == inst.label;
        // Replay: confidence at the trigger reaches theta unless it is the last checkpoint.
        std::vector<Label> preds;
        const auto cps = m.checkpoints();
        for (std::size_t k = 0; k < cps.size(); ++k) {
            preds.push_back(m.predict_at(k, inst.series.row(0).first(cps[k])));
            const double c = confidence(m.reliability(), preds);
            if (cps[k] == r.trigger) {
                EXPECT_EQ(preds.back(), r.label);
                EXPECT_TRUE(c >= m.theta() || k + 1 == cps.size());
                break;
            }
            EXPECT_LT(c, m.theta());
        }
    }
    EXPECT_GE(correct, 27u);
}
