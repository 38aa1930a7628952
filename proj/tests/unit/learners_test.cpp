#include <gtest/gtest.h>

#include <algorithm>
#include <cmath>
#include <numeric>
#include <set>

#include "etsc/folds.hpp"
#include "etsc/learners/cross_validation.hpp"
#include "etsc/learners/kmeans.hpp"
#include "etsc/learners/logistic_regression.hpp"
#include "etsc/learners/naive_bayes.hpp"
#include "etsc/learners/nearest_neighbor.hpp"
#include "etsc/learners/one_class.hpp"
#include "etsc/learners/word_classifier.hpp"
#include "etsc/rng.hpp"
#include "synthetic.hpp"

using namespace etsc;

namespace {

Matrix random_matrix(std::size_t rows, std::size_t cols, Rng& rng, double scale = 1.0) {
    Matrix m(rows, cols);
    for (std::size_t r = 0; r < rows; ++r) {
        for (std::size_t c = 0; c < cols; ++c) m(r, c) = scale * rng.normal();
    }
    return m;
}

void expect_distribution(const std::vector<double>& p, std::size_t classes) {
    ASSERT_EQ(p.size(), classes);
    double sum = 0.0;
    for (double v : p) {
        EXPECT_GE(v, 0.0);
        sum += v;
    }
    EXPECT_NEAR(sum, 1.0, 1e-9);
}

}  // namespace

TEST(Argmax, TiesResolveToLowestIndex) {
    const std::vector<double> v = {0.2, 0.4, 0.4};
    EXPECT_EQ(argmax(v), 1u);
}

TEST(LogisticRegression, GradientMatchesFiniteDifferences) {
    Rng rng(1);
    const auto x = random_matrix(20, 3, rng);
    std::vector<Label> y(20);
    for (auto& l : y) l = static_cast<Label>(rng.index(3));
    std::vector<double> w(3 * 4);
    for (auto& v : w) v = 0.5 * rng.normal();
    std::vector<double> grad;
    LogisticRegression::objective(x, y, 3, 0.1, w, &grad);
    const double h = 1e-6;
    for (std::size_t j = 0; j < w.size(); ++j) {
        auto plus = w, minus = w;
        plus[j] += h;
        minus[j] -= h;
        const double fd = (LogisticRegression::objective(x, y, 3, 0.1, plus, nullptr) -
                           LogisticRegression::objective(x, y, 3, 0.1, minus, nullptr)) /
                          (2 * h);
        EXPECT_NEAR(grad[j], fd, 1e-6) << "parameter " << j;
    }
}

TEST(LogisticRegression, SeparatesOneDimensionalClasses) {
    const auto x = Matrix::from_rows({{-2}, {-1.5}, {-1}, {1}, {1.5}, {2}});
    const std::vector<Label> y = {0, 0, 0, 1, 1, 1};
    const auto m = LogisticRegression::fit(x, y, 2);
    EXPECT_TRUE(m.converged());
    for (std::size_t i = 0; i < x.rows(); ++i) EXPECT_EQ(m.predict(x.row(i)), y[i]);
    const std::vector<double> far = {10.0};
    EXPECT_GT(m.predict_proba(far)[1], 0.9);
}

TEST(LogisticRegression, SingleObservedClassPredictsIt) {
    const auto x = Matrix::from_rows({{1, 2}, {3, 4}, {5, 6}});
    const std::vector<Label> y = {2, 2, 2};
    const auto m = LogisticRegression::fit(x, y, 3);
    const std::vector<double> q = {0.0, 0.0};
    EXPECT_EQ(m.predict(q), 2);
}

TEST(LogisticRegression, ProbabilitiesFormDistributions) {
    Rng rng(4);
    const auto x = random_matrix(40, 5, rng, 3.0);
    std::vector<Label> y(40);
    for (auto& l : y) l = static_cast<Label>(rng.index(4));
    const auto m = LogisticRegression::fit(x, y, 4);
    for (int i = 0; i < 50; ++i) {
        const auto q = random_matrix(1, 5, rng, 50.0);
        expect_distribution(m.predict_proba(q.row(0)), 4);
    }
}

TEST(LogisticRegression, RejectsBadLabels) {
    const auto x = Matrix::from_rows({{1}, {2}});
    const std::vector<Label> y = {0, 3};
    EXPECT_THROW(LogisticRegression::fit(x, y, 2), std::invalid_argument);
}

TEST(GaussianNB, SeparatedMeans) {
    Rng rng(6);
    Matrix x(200, 1);
    std::vector<Label> y(200);
    for (std::size_t i = 0; i < 200; ++i) {
        y[i] = static_cast<Label>(i % 2);
        x(i, 0) = (y[i] == 0 ? -5.0 : 5.0) + rng.normal();
    }
    const auto m = GaussianNB::fit(x, y, 2);
    EXPECT_NEAR(m.class_means(0)[0], -5.0, 0.3);
    EXPECT_NEAR(m.class_means(1)[0], 5.0, 0.3);
    const std::vector<double> a = {-5.0}, b = {5.0}, mid = {0.0};
    EXPECT_GT(m.predict_proba(a)[0], 0.999);
    EXPECT_GT(m.predict_proba(b)[1], 0.999);
    // Closed-form posterior from the fitted moments and equal priors.
    auto loglik = [&](Label c) {
        const double v = m.class_variances(c)[0], mu = m.class_means(c)[0];
        return -0.5 * std::log(2 * M_PI * v) - 0.5 * mu * mu / v;
    };
    const double expected = 1.0 / (1.0 + std::exp(loglik(1) - loglik(0)));
    EXPECT_NEAR(m.predict_proba(mid)[0], expected, 1e-12);
}

TEST(GaussianNB, ConstantFeatureAndEmptyClass) {
    const auto x = Matrix::from_rows({{1, 0}, {1, 1}, {1, 5}, {1, 6}});
    const std::vector<Label> y = {0, 0, 2, 2};
    const auto m = GaussianNB::fit(x, y, 3);
    const std::vector<double> q = {1, 0.5};
    const auto p = m.predict_proba(q);
    expect_distribution(p, 3);
    EXPECT_EQ(p[1], 0.0);
    EXPECT_GT(p[0], p[2]);
}

TEST(KMeans, ObjectiveNeverIncreases) {
    Rng rng(8);
    for (int trial = 0; trial < 20; ++trial) {
        const auto x = random_matrix(60, 3, rng);
        const auto m = kmeans(x, 1 + rng.index(6), trial);
        for (std::size_t i = 1; i < m.objective_history.size(); ++i) {
            EXPECT_LE(m.objective_history[i], m.objective_history[i - 1] + 1e-9);
        }
        EXPECT_NEAR(kmeans_objective(x, m.centroids, m.assignments), m.objective_history.back(),
                    1e-9);
        for (std::size_t i = 0; i < x.rows(); ++i) {
            EXPECT_EQ(m.assignments[i], m.assign(x.row(i)));
        }
    }
}

TEST(KMeans, KEqualToDistinctPointsHasZeroObjective) {
    const auto x = Matrix::from_rows({{0, 0}, {1, 1}, {0, 0}, {5, 5}, {1, 1}});
    const auto m = kmeans(x, 3, 2);
    EXPECT_NEAR(m.objective_history.back(), 0.0, 1e-12);
    EXPECT_THROW(kmeans(x, 4, 2), std::invalid_argument);
    EXPECT_THROW(kmeans(x, 0, 2), std::invalid_argument);
}

TEST(KMeans, SameSeedSameClustering) {
    Rng rng(9);
    const auto x = random_matrix(50, 2, rng);
    EXPECT_EQ(kmeans(x, 4, 13).assignments, kmeans(x, 4, 13).assignments);
}

TEST(NearestNeighbor, PrefixColumnsSkipAndTies) {
    const auto pool = Matrix::from_rows({{0, 0, 9}, {1, 1, 0}, {0, 0, 0}, {5, 5, 5}});
    const std::vector<double> q = {0, 0};
    EXPECT_EQ(nn1(q, pool), 0u);  // rows 0 and 2 tie on the first two columns
    EXPECT_EQ(nn1(q, pool, 0), 2u);
    const std::vector<double> full = {0, 0, 0};
    EXPECT_EQ(nn1(full, pool), 2u);
}

TEST(NearestNeighbor, MatchesBruteForce) {
    Rng rng(10);
    for (int trial = 0; trial < 50; ++trial) {
        const auto pool = random_matrix(15, 6, rng);
        const std::size_t cols = 1 + rng.index(6);
        const auto q = random_matrix(1, cols, rng);
        std::size_t best = 0;
        double best_d = INFINITY;
        for (std::size_t r = 0; r < pool.rows(); ++r) {
            double d = 0.0;
            for (std::size_t c = 0; c < cols; ++c) d += (pool(r, c) - q(0, c)) * (pool(r, c) - q(0, c));
            if (d < best_d) {
                best_d = d;
                best = r;
            }
        }
        EXPECT_EQ(nn1(q.row(0), pool), best);
    }
}

TEST(OneClassBoundary, AcceptsAtLeastOneMinusNu) {
    Rng rng(12);
    for (double nu : {0.0, 0.05, 0.1, 0.3, 0.5}) {
        const auto x = random_matrix(101, 3, rng);
        const auto b = OneClassBoundary::fit(x, nu);
        std::size_t accepted = 0;
        for (std::size_t i = 0; i < x.rows(); ++i) accepted += b.accept(x.row(i));
        EXPECT_GE(static_cast<double>(accepted), (1.0 - nu) * 101.0 - 1e-9) << nu;
        const std::vector<double> far = {100, 100, 100};
        EXPECT_FALSE(b.accept(far));
        EXPECT_TRUE(b.accept(b.center()));
    }
}

TEST(OneClassBoundary, NeedsTwoVectors) {
    EXPECT_THROW(OneClassBoundary::fit(Matrix::from_rows({{1.0}}), 0.1), std::invalid_argument);
}

TEST(WordClassifier, BreakpointsAreGaussianQuantiles) {
    EXPECT_NEAR(normal_quantile(0.5), 0.0, 1e-12);
    EXPECT_NEAR(normal_quantile(0.975), 1.959963984540054, 1e-9);
    const auto b = gaussian_breakpoints(4);
    ASSERT_EQ(b.size(), 3u);
    EXPECT_NEAR(b[0], -0.6744897501960817, 1e-9);
    EXPECT_NEAR(b[1], 0.0, 1e-12);
    EXPECT_NEAR(b[2], 0.6744897501960817, 1e-9);
    EXPECT_TRUE(gaussian_breakpoints(1).empty());
}

TEST(WordClassifier, DefaultWindows) {
    EXPECT_EQ(default_windows(150), (std::vector<std::size_t>{18, 37, 75}));
    EXPECT_EQ(default_windows(8), (std::vector<std::size_t>{3, 4}));
    EXPECT_EQ(default_windows(2), (std::vector<std::size_t>{2}));
}

TEST(WordClassifier, SeparatesSineClasses) {
    const auto train = fixtures::sine_dataset(40, 48, 1, 3);
    const auto test = fixtures::sine_dataset(40, 48, 1, 4);
    const auto x = prefix_matrix(train, 48);
    const auto m = WordClassifier::fit(x, train.labels(), 2);
    std::size_t correct = 0;
    const auto xt = prefix_matrix(test, 48);
    for (std::size_t i = 0; i < test.size(); ++i) {
        expect_distribution(m.predict_proba(xt.row(i)), 2);
        correct += m.predict(xt.row(i)) == test.instances[i].label;
    }
    EXPECT_GE(correct, 36u);
}

TEST(WordClassifier, AlphabetOneFallsBackToThePrior) {
    const auto train = fixtures::sine_dataset(30, 32, 1, 5);
    auto labels = train.labels();
    labels[1] = 0;  // 16 vs 14
    WordOptions opts;
    opts.alphabet_size = 1;
    const auto m = WordClassifier::fit(prefix_matrix(train, 32), labels, 2, opts);
    const auto p = m.predict_proba(prefix_matrix(train, 32).row(3));
    EXPECT_NEAR(p[0], 16.0 / 30.0, 1e-3);
}

TEST(CrossValidation, RowsComeFromOtherFolds) {
    Rng rng(14);
    const auto d = fixtures::random_dataset(30, 4, 3, 15);
    const auto x = prefix_matrix(d, 4);
    const auto plan = stratified_folds(d, 3, 1);
    const auto y = d.labels();
    const auto p = cross_val_proba(x, y, 3, gaussian_nb_factory(), plan);
    ASSERT_EQ(p.rows(), 30u);
    for (std::size_t f = 0; f < 3; ++f) {
        const auto train = plan.train_indices(f);
        Matrix xt;
        std::vector<Label> yt;
        for (std::size_t i : train) {
            xt.append_row(x.row(i));
            yt.push_back(y[i]);
        }
        const auto m = GaussianNB::fit(xt, yt, 3);
        for (std::size_t i : plan.test_indices(f)) {
            const auto expected = m.predict_proba(x.row(i));
            for (std::size_t c = 0; c < 3; ++c) EXPECT_DOUBLE_EQ(p(i, c), expected[c]);
        }
    }
}

TEST(CrossValidation, PrefixMatrixIsVariableMajor) {
    const auto d =
        Dataset::from_named("mv", {TimeSeries::from_rows({{1, 2, 3}, {4, 5, 6}})}, {"only"});
    const auto x = prefix_matrix(d, 2);
    EXPECT_EQ(std::vector<double>(x.row(0).begin(), x.row(0).end()),
              (std::vector<double>{1, 2, 4, 5}));
}
