#pragma once

#include <cstdint>
#include <memory>
#include <optional>
#include <vector>

#include "etsc/early_classifier.hpp"
#include "etsc/learners/one_class.hpp"
#include "etsc/learners/word_classifier.hpp"

namespace etsc {

enum class MasterFeature {
    Probabilities,  ///< the full class-probability vector
    MaxMargin,      ///< (top probability, top minus runner-up)
};

MasterFeature parse_master_feature(const std::string& name);

struct TeaserOptions {
    std::size_t S = 20;
    bool znorm = false;
    double nu = 0.1;
    MasterFeature feature = MasterFeature::Probabilities;
    /// When false a rejected prediction leaves the consistency run untouched.
    bool reset_on_reject = true;
    std::vector<int> v_grid = {1, 2, 3, 4, 5};
    std::size_t cv_folds = 5;
    std::uint64_t seed = 0;
    WordOptions words;
};

/// ceil(T * i / S) for i = 1..S.
std::vector<std::size_t> teaser_checkpoints(std::size_t length, std::size_t S);

/// Consistency run carried across checkpoints.
struct TeaserState {
    Label last = -1;
    int run = 0;
};

/**
 * One checkpoint of the TEASER rule. An accepted label extends the run if it
 * repeats the previous one and restarts it otherwise; a rejection resets the
 * run when reset_on_reject is set. Emits once the run reaches v, and always
 * at the final checkpoint.
 */
Decision teaser_step(TeaserState& state, Label label, bool accepted, int v, bool final_checkpoint,
                     bool reset_on_reject = true);

/// Index of the checkpoint at which the rule first emits, given per-checkpoint outputs.
std::size_t teaser_trigger(std::span<const Label> labels, const std::vector<bool>& accepted, int v,
                           bool reset_on_reject = true);

/// Feature vector handed to the acceptance model.
std::vector<double> master_features(std::span<const double> proba, MasterFeature feature);

class TeaserModel final : public EarlyClassifier {
public:
    /// Univariate, equal-length data; 2 <= S <= T.
    static TeaserModel train(const Dataset& d, const TeaserOptions& options = {});

    std::string name() const override { return znorm_ ? "teaser-z" : "teaser"; }
    std::size_t series_length() const override { return length_; }
    std::size_t num_classes() const override { return num_classes_; }
    std::vector<std::size_t> checkpoints() const override { return prefix_lengths_; }
    TimeSeries prepare(const TimeSeries& series) const override;
    std::unique_ptr<DecisionSession> open_session() const override;

    int v() const { return v_; }
    std::span<const std::size_t> prefix_lengths() const { return prefix_lengths_; }
    /// Slave output and master verdict at checkpoint i for a prepared prefix.
    std::pair<Label, bool> evaluate(std::size_t i, std::span<const double> prefix) const;
    /// Training harmonic mean reached by each candidate v, in grid order.
    std::span<const double> v_scores() const { return v_scores_; }

private:
    std::size_t length_ = 0;
    std::size_t num_classes_ = 0;
    bool znorm_ = false;
    bool reset_on_reject_ = true;
    MasterFeature feature_ = MasterFeature::Probabilities;
    int v_ = 1;
    std::vector<std::size_t> prefix_lengths_;
    std::vector<std::shared_ptr<const WordClassifier>> slaves_;
    /// masters_[i][c]: acceptance region of class c at checkpoint i, if trainable.
    std::vector<std::vector<std::optional<OneClassBoundary>>> masters_;
    std::vector<double> v_scores_;

    friend class TeaserSession;
};

}  // namespace etsc
