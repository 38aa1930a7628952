#include "etsc/algorithms/teaser.hpp"

#include <algorithm>
#include <stdexcept>

#include "etsc/error.hpp"
#include "etsc/folds.hpp"
#include "etsc/learners/cross_validation.hpp"
#include "etsc/preprocess.hpp"

namespace etsc {

MasterFeature parse_master_feature(const std::string& name) {
    if (name == "proba" || name == "probabilities") return MasterFeature::Probabilities;
    if (name == "max-margin" || name == "margin") return MasterFeature::MaxMargin;
    throw std::invalid_argument("unknown acceptance feature '" + name + "'");
}

std::vector<std::size_t> teaser_checkpoints(std::size_t length, std::size_t S) {
    if (S < 1 || S > length) {
        throw std::invalid_argument("prefix count " + std::to_string(S) +
                                    " must lie in [1, " + std::to_string(length) + "]");
    }
    std::vector<std::size_t> out(S);
    for (std::size_t i = 1; i <= S; ++i) out[i - 1] = (length * i + S - 1) / S;
    return out;
}

Decision teaser_step(TeaserState& state, Label label, bool accepted, int v, bool final_checkpoint,
                     bool reset_on_reject) {
    if (accepted) {
        if (label == state.last) {
            ++state.run;
        } else {
            state.last = label;
            state.run = 1;
        }
    } else if (reset_on_reject) {
        state = TeaserState{};
    }
    if ((accepted && state.run >= v) || final_checkpoint) return Decision::emit(label);
    return Decision::wait();
}

std::size_t teaser_trigger(std::span<const Label> labels, const std::vector<bool>& accepted, int v,
                           bool reset_on_reject) {
    TeaserState st;
    for (std::size_t i = 0; i < labels.size(); ++i) {
        if (teaser_step(st, labels[i], accepted[i], v, i + 1 == labels.size(), reset_on_reject)
                .predict) {
            return i;
        }
    }
    throw std::invalid_argument("empty checkpoint sequence");
}

std::vector<double> master_features(std::span<const double> proba, MasterFeature feature) {
    if (feature == MasterFeature::Probabilities) return {proba.begin(), proba.end()};
    double top = 0.0, second = 0.0;
    for (double p : proba) {
        if (p > top) {
            second = top;
            top = p;
        } else if (p > second) {
            second = p;
        }
    }
    return {top, top - second};
}

TeaserModel TeaserModel::train(const Dataset& raw, const TeaserOptions& options) {
    if (raw.dims() != 1) throw DataError("TEASER needs univariate data");
    if (!raw.equal_length()) throw DataError("TEASER needs equal-length series");
    if (options.S < 2) throw std::invalid_argument("TEASER needs at least two prefixes");
    if (options.v_grid.empty()) throw std::invalid_argument("empty consistency grid");
    const Dataset d = options.znorm ? znormalize(raw) : raw;

    TeaserModel m;
    m.length_ = d.max_length();
    m.num_classes_ = d.num_classes();
    m.znorm_ = options.znorm;
    m.reset_on_reject_ = options.reset_on_reject;
    m.feature_ = options.feature;
    m.prefix_lengths_ = teaser_checkpoints(m.length_, options.S);

    const std::size_t n = d.size();
    const auto y = d.labels();
    const std::size_t k = std::clamp<std::size_t>(options.cv_folds, 2, std::max<std::size_t>(2, n));
    const FoldPlan plan = stratified_folds(d, k, options.seed);
    const auto factory = word_classifier_factory(options.words);

    // Out-of-fold outputs per checkpoint drive both the masters and the choice of v.
    std::vector<std::vector<Label>> oof_label(n, std::vector<Label>(options.S));
    std::vector<Matrix> oof_features(options.S);
    for (std::size_t i = 0; i < options.S; ++i) {
        const Matrix x = prefix_matrix(d, m.prefix_lengths_[i]);
        m.slaves_.push_back(std::make_shared<const WordClassifier>(
            WordClassifier::fit(x, y, m.num_classes_, options.words)));
        const Matrix proba = cross_val_proba(x, y, m.num_classes_, factory, plan);

        std::vector<Matrix> correct(m.num_classes_);
        for (std::size_t j = 0; j < n; ++j) {
            const auto p = proba.row(j);
            const auto label = static_cast<Label>(argmax(p));
            oof_label[j][i] = label;
            const auto f = master_features(p, options.feature);
            oof_features[i].append_row(f);
            if (label == y[j]) correct[static_cast<std::size_t>(label)].append_row(f);
        }
        std::vector<std::optional<OneClassBoundary>> masters(m.num_classes_);
        for (std::size_t c = 0; c < m.num_classes_; ++c) {
            if (correct[c].rows() >= 2) masters[c] = OneClassBoundary::fit(correct[c], options.nu);
        }
        m.masters_.push_back(std::move(masters));
    }

    double best = -1.0;
    for (int v : options.v_grid) {
        std::size_t right = 0;
        double earliness = 0.0;
        for (std::size_t j = 0; j < n; ++j) {
            std::vector<bool> accepted(options.S);
            for (std::size_t i = 0; i < options.S; ++i) {
                const auto& master = m.masters_[i][static_cast<std::size_t>(oof_label[j][i])];
                accepted[i] = master && master->accept(oof_features[i].row(j));
            }
            const std::size_t at = teaser_trigger(oof_label[j], accepted, v, options.reset_on_reject);
            right += oof_label[j][at] == y[j] ? 1 : 0;
            earliness += static_cast<double>(m.prefix_lengths_[at]) / static_cast<double>(m.length_);
        }
        const double hm = harmonic_mean(static_cast<double>(right) / static_cast<double>(n),
                                        earliness / static_cast<double>(n));
        m.v_scores_.push_back(hm);
        if (hm > best) {
            best = hm;
            m.v_ = v;
        }
    }
    return m;
}

TimeSeries TeaserModel::prepare(const TimeSeries& series) const {
    return znorm_ ? znormalize(series) : series;
}

std::pair<Label, bool> TeaserModel::evaluate(std::size_t i, std::span<const double> prefix) const {
    const auto p = slaves_.at(i)->predict_proba(prefix);
    const auto label = static_cast<Label>(argmax(p));
    const auto& master = masters_[i][static_cast<std::size_t>(label)];
    const bool accepted = master && master->accept(master_features(p, feature_));
    return {label, accepted};
}

class TeaserSession final : public DecisionSession {
public:
    explicit TeaserSession(const TeaserModel& m) : model_(m) {}

    Decision observe(const TimeSeries& prefix) override {
        const auto& lengths = model_.prefix_lengths_;
        const auto it = std::find(lengths.begin() + static_cast<std::ptrdiff_t>(next_),
                                  lengths.end(), prefix.length());
        if (it == lengths.end()) {
            throw std::invalid_argument("TEASER consulted at non-checkpoint length " +
                                        std::to_string(prefix.length()));
        }
        const auto i = static_cast<std::size_t>(it - lengths.begin());
        next_ = i + 1;
        const auto [label, accepted] = model_.evaluate(i, prefix.row(0));
        return teaser_step(state_, label, accepted, model_.v_, next_ == lengths.size(),
                           model_.reset_on_reject_);
    }

private:
    const TeaserModel& model_;
    TeaserState state_;
    std::size_t next_ = 0;
};

std::unique_ptr<DecisionSession> TeaserModel::open_session() const {
    return std::make_unique<TeaserSession>(*this);
}

}  // namespace etsc
