#pragma once

#include <cstdint>
#include <memory>
#include <vector>

#include "etsc/early_classifier.hpp"
#include "etsc/learners/prob_classifier.hpp"

namespace etsc {

struct EconomyOptions {
    std::vector<std::size_t> k_grid = {1, 2, 3};
    double lambda = 100.0;
    double time_cost = 0.001;
    /// cost(predicted, truth) row-major; empty means 0 on the diagonal and 1 elsewhere.
    std::vector<double> misclass_cost;
    double var_smoothing = 1e-9;
    std::uint64_t seed = 0;
};

/// Everything a trained model consists of; tests build these by hand.
struct EconomyParts {
    std::size_t length = 0;
    std::size_t dims = 1;
    std::size_t num_classes = 0;
    /// K rows of dims * length values, variable-major.
    Matrix centroids;
    double lambda = 100.0;
    double time_cost = 0.001;
    std::vector<double> misclass_cost;  ///< num_classes^2, cost(predicted, truth)
    /// prior[k][y] = P(y | cluster k).
    std::vector<std::vector<double>> prior;
    /// confusion[t - 1][k][y * C + yhat] = P_t(yhat | y, k).
    std::vector<std::vector<std::vector<double>>> confusion;
    /// classifier[t - 1][k]; null entries predict fallback[t - 1][k].
    std::vector<std::vector<std::shared_ptr<const ProbClassifier>>> classifier;
    std::vector<std::vector<Label>> fallback;
};

/// 1 / (1 + exp(-x)) without overflow.
double stable_sigmoid(double x);

/**
 * Normalized sigmoid memberships from distances: Delta_k is the mean
 * distance minus distance k.
 */
std::vector<double> memberships_from_distances(std::span<const double> distances, double lambda);

class EconomyKModel final : public EarlyClassifier {
public:
    /// Equal-length data; K chosen from k_grid by training harmonic mean.
    static EconomyKModel train(const Dataset& d, const EconomyOptions& options = {});
    /// Single K, no selection.
    static EconomyKModel train_k(const Dataset& d, std::size_t K, const EconomyOptions& options);
    static EconomyKModel from_parts(EconomyParts parts);

    std::string name() const override { return "economy-k"; }
    std::size_t series_length() const override { return p_.length; }
    std::size_t num_classes() const override { return p_.num_classes; }
    std::unique_ptr<DecisionSession> open_session() const override;

    std::size_t clusters() const { return p_.centroids.rows(); }
    std::vector<double> memberships(const TimeSeries& prefix) const;
    /// Expected cost of deciding tau steps after the prefix; 0 <= tau <= T - t.
    double expected_cost(const TimeSeries& prefix, std::size_t tau) const;
    /// Cost of every tau in [0, T - t] for one set of memberships at prefix length t.
    std::vector<double> expected_costs(std::span<const double> membership, std::size_t t) const;
    Decision decide(const TimeSeries& prefix) const;
    Label predict_now(const TimeSeries& prefix, std::span<const double> membership) const;

    /// Training harmonic mean per K tried, in grid order (0 for K that could not be fitted).
    std::span<const double> k_scores() const { return k_scores_; }
    const EconomyParts& parts() const { return p_; }

private:
    void precompute();

    EconomyParts p_;
    /// misclass_[(t - 1) * K + k]: expected misclassification cost at t in cluster k.
    std::vector<double> misclass_;
    std::vector<double> k_scores_;
};

}  // namespace etsc
