#pragma once

#include <cstdint>
#include <memory>
#include <vector>

#include "etsc/early_classifier.hpp"
#include "etsc/learners/word_classifier.hpp"

namespace etsc {

/// r(k, predicted, truth): probability the truth is `truth` when checkpoint k predicted `predicted`.
class ReliabilityTable {
public:
    ReliabilityTable() = default;
    ReliabilityTable(std::size_t checkpoints, std::size_t classes)
        : checkpoints_(checkpoints), classes_(classes), r_(checkpoints * classes * classes, 0.0) {}

    std::size_t checkpoints() const { return checkpoints_; }
    std::size_t classes() const { return classes_; }

    double operator()(std::size_t k, Label predicted, Label truth) const {
        return r_[index(k, predicted, truth)];
    }
    double& operator()(std::size_t k, Label predicted, Label truth) {
        return r_[index(k, predicted, truth)];
    }

private:
    std::size_t index(std::size_t k, Label p, Label t) const {
        return (k * classes_ + static_cast<std::size_t>(p)) * classes_ + static_cast<std::size_t>(t);
    }
    std::size_t checkpoints_ = 0;
    std::size_t classes_ = 0;
    std::vector<double> r_;
};

/**
 * Laplace-smoothed reliabilities from out-of-fold predictions:
 * (count(pred=p, truth=y) + 1) / (count(pred=p) + classes).
 * predictions[j][k] is the label checkpoint k gave instance j.
 */
ReliabilityTable estimate_reliability(const std::vector<std::vector<Label>>& predictions,
                                      std::span<const Label> truth, std::size_t num_classes);

/**
 * 1 - prod_{k < t} (1 - r(k, predictions[k], predictions[t - 1])) for the
 * first t = predictions.size() checkpoints.
 */
double confidence(const ReliabilityTable& r, std::span<const Label> predictions);

/// Accept the current prediction when confidence >= theta; the final checkpoint always emits.
Decision ecec_step(double confidence, double theta, Label label, bool final_checkpoint);

/// Midpoints of adjacent distinct sorted confidences, plus the smallest value and 1.
std::vector<double> threshold_candidates(std::vector<double> confidences);

/// alpha * (1 - accuracy) + (1 - alpha) * earliness.
double ecec_cost(double accuracy, double earliness, double alpha);

struct ThresholdChoice {
    double theta = 1.0;
    double cost = 0.0;
    double accuracy = 0.0;
    double earliness = 0.0;
};

/**
 * Scans every candidate threshold over the training confidences and returns
 * the one with minimal cost; ties keep the smaller threshold.
 * conf[j][k] and predictions[j][k] are per instance and checkpoint.
 */
ThresholdChoice select_threshold(const std::vector<std::vector<double>>& conf,
                                 const std::vector<std::vector<Label>>& predictions,
                                 std::span<const Label> truth,
                                 std::span<const std::size_t> prefix_lengths, std::size_t length,
                                 double alpha);

struct EcecOptions {
    std::size_t N = 20;
    double alpha = 0.8;
    std::size_t cv_folds = 5;
    std::uint64_t seed = 0;
    WordOptions words;
};

class EcecModel final : public EarlyClassifier {
public:
    /// Univariate, equal-length data; 2 <= N <= T.
    static EcecModel train(const Dataset& d, const EcecOptions& options = {});

    std::string name() const override { return "ecec"; }
    std::size_t series_length() const override { return length_; }
    std::size_t num_classes() const override { return num_classes_; }
    std::vector<std::size_t> checkpoints() const override { return prefix_lengths_; }
    std::unique_ptr<DecisionSession> open_session() const override;

    double theta() const { return theta_; }
    const ReliabilityTable& reliability() const { return reliability_; }
    Label predict_at(std::size_t k, std::span<const double> prefix) const;

private:
    std::size_t length_ = 0;
    std::size_t num_classes_ = 0;
    double theta_ = 1.0;
    std::vector<std::size_t> prefix_lengths_;
    std::vector<std::shared_ptr<const WordClassifier>> classifiers_;
    ReliabilityTable reliability_;

    friend class EcecSession;
};

}  // namespace etsc
