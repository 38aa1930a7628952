#pragma once

#include <cstdint>
#include <functional>
#include <memory>
#include <vector>

#include "etsc/early_classifier.hpp"
#include "etsc/learners/prob_classifier.hpp"

namespace etsc {

struct VoteResult {
    Label label = -1;
    std::size_t trigger = 0;  ///< latest voter trigger
};

/**
 * Modal label among the voters. Among tied labels the one first emitted by
 * the lowest-index voter wins. The trigger is the latest voter trigger.
 */
VoteResult vote(std::span<const Label> labels, std::span<const std::size_t> triggers);

using EarlyTrainer = std::function<std::unique_ptr<EarlyClassifier>(const Dataset&)>;

/// One univariate model per variable; emits once every voter has emitted.
class VotingClassifier final : public EarlyClassifier {
public:
    static VotingClassifier train(const Dataset& d, const EarlyTrainer& trainer);
    explicit VotingClassifier(std::vector<std::shared_ptr<const EarlyClassifier>> voters);

    std::string name() const override;
    std::size_t series_length() const override;
    std::size_t num_classes() const override;
    /// Union of the voters' checkpoints.
    std::vector<std::size_t> checkpoints() const override;
    TimeSeries prepare(const TimeSeries& series) const override;
    std::unique_ptr<DecisionSession> open_session() const override;

    std::size_t voters() const { return voters_.size(); }

private:
    std::vector<std::shared_ptr<const EarlyClassifier>> voters_;

    friend class VotingSession;
};

/// Mean-and-scale standardization in front of another learner.
ProbClassifierFactory standardized(ProbClassifierFactory inner);

/// "logreg", "gnb" or "words"; all but words are standardized.
ProbClassifierFactory learner_by_name(const std::string& name);

struct FixedPrefixOptions {
    std::vector<double> fractions = {0.4, 0.5, 0.6};
    double holdout = 0.25;
    std::uint64_t seed = 0;
    std::string learner = "logreg";
};

/// ceil(p * T), at least 1.
std::size_t fixed_prefix_length(double fraction, std::size_t length);

/**
 * Classifier over a fixed prefix length chosen among the fractions by
 * holdout harmonic mean (ties keep the smaller fraction), then refitted on
 * all training data. Always emits at that length.
 */
class FixedPrefixModel final : public EarlyClassifier {
public:
    static FixedPrefixModel train(const Dataset& d, const FixedPrefixOptions& options = {});

    std::string name() const override { return "fixed-prefix"; }
    std::size_t series_length() const override { return length_; }
    std::size_t num_classes() const override { return num_classes_; }
    std::vector<std::size_t> checkpoints() const override { return {prefix_length_}; }
    std::unique_ptr<DecisionSession> open_session() const override;

    double fraction() const { return fraction_; }
    std::size_t prefix_length() const { return prefix_length_; }
    /// Holdout harmonic mean per fraction, in option order.
    std::span<const double> fraction_scores() const { return scores_; }
    Label predict(const TimeSeries& prefix) const;

private:
    std::size_t length_ = 0;
    std::size_t num_classes_ = 0;
    double fraction_ = 0.0;
    std::size_t prefix_length_ = 0;
    std::shared_ptr<const ProbClassifier> classifier_;
    std::vector<double> scores_;
};

}  // namespace etsc
