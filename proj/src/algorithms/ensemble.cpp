#include "etsc/algorithms/ensemble.hpp"

#include <algorithm>
#include <cmath>
#include <map>
#include <set>
#include <stdexcept>

#include "etsc/error.hpp"
#include "etsc/folds.hpp"
#include "etsc/learners/cross_validation.hpp"
#include "etsc/learners/logistic_regression.hpp"
#include "etsc/learners/naive_bayes.hpp"
#include "etsc/learners/word_classifier.hpp"
#include "etsc/preprocess.hpp"

namespace etsc {
namespace {

TimeSeries single_variable(const TimeSeries& s, std::size_t d) {
    const auto r = s.row(d);
    return TimeSeries::univariate(std::vector<double>(r.begin(), r.end()));
}

class Standardized final : public ProbClassifier {
public:
    Standardized(std::vector<double> mean, std::vector<double> scale,
                 std::unique_ptr<ProbClassifier> inner)
        : mean_(std::move(mean)), scale_(std::move(scale)), inner_(std::move(inner)) {}

    std::size_t num_classes() const override { return inner_->num_classes(); }
    std::vector<double> predict_proba(std::span<const double> x) const override {
        std::vector<double> z(x.begin(), x.end());
        for (std::size_t j = 0; j < z.size() && j < mean_.size(); ++j) {
            z[j] = (z[j] - mean_[j]) / scale_[j];
        }
        return inner_->predict_proba(z);
    }

private:
    std::vector<double> mean_, scale_;
    std::unique_ptr<ProbClassifier> inner_;
};

}  // namespace

VoteResult vote(std::span<const Label> labels, std::span<const std::size_t> triggers) {
    if (labels.empty() || labels.size() != triggers.size()) {
        throw std::invalid_argument("vote needs one trigger per voter label");
    }
    std::map<Label, std::size_t> count;
    for (Label l : labels) ++count[l];
    VoteResult r;
    std::size_t best = 0;
    for (Label l : labels) {  // voter order, so the first voter wins ties
        if (count[l] > best) {
            best = count[l];
            r.label = l;
        }
    }
    r.trigger = *std::max_element(triggers.begin(), triggers.end());
    return r;
}

VotingClassifier::VotingClassifier(std::vector<std::shared_ptr<const EarlyClassifier>> voters)
    : voters_(std::move(voters)) {
    if (voters_.empty()) throw std::invalid_argument("voting needs at least one voter");
}

VotingClassifier VotingClassifier::train(const Dataset& d, const EarlyTrainer& trainer) {
    std::vector<std::shared_ptr<const EarlyClassifier>> voters;
    for (std::size_t v = 0; v < d.dims(); ++v) voters.push_back(trainer(d.variable(v)));
    return VotingClassifier(std::move(voters));
}

std::string VotingClassifier::name() const { return voters_.front()->name(); }
std::size_t VotingClassifier::series_length() const { return voters_.front()->series_length(); }
std::size_t VotingClassifier::num_classes() const { return voters_.front()->num_classes(); }

std::vector<std::size_t> VotingClassifier::checkpoints() const {
    std::set<std::size_t> all;
    for (const auto& v : voters_) {
        for (std::size_t t : v->checkpoints()) all.insert(t);
    }
    return {all.begin(), all.end()};
}

TimeSeries VotingClassifier::prepare(const TimeSeries& series) const {
    if (series.dims() != voters_.size()) {
        throw std::invalid_argument("series has " + std::to_string(series.dims()) +
                                    " variables for " + std::to_string(voters_.size()) + " voters");
    }
    std::vector<std::vector<double>> rows;
    for (std::size_t d = 0; d < voters_.size(); ++d) {
        const auto p = voters_[d]->prepare(single_variable(series, d));
        rows.emplace_back(p.row(0).begin(), p.row(0).end());
    }
    return TimeSeries::from_rows(rows);
}

class VotingSession final : public DecisionSession {
public:
    explicit VotingSession(const VotingClassifier& m) : model_(m) {
        for (const auto& v : m.voters_) {
            sessions_.push_back(v->open_session());
            const auto cp = v->checkpoints();
            schedule_.emplace_back(cp.begin(), cp.end());
        }
        labels_.assign(m.voters_.size(), -1);
        triggers_.assign(m.voters_.size(), 0);
    }

    Decision observe(const TimeSeries& prefix) override {
        const std::size_t t = prefix.length();
        std::size_t done = 0;
        for (std::size_t d = 0; d < sessions_.size(); ++d) {
            if (labels_[d] < 0 && schedule_[d].count(t)) {
                const Decision dec = sessions_[d]->observe(single_variable(prefix, d));
                if (dec.predict) {
                    labels_[d] = dec.label;
                    triggers_[d] = t;
                }
            }
            done += labels_[d] >= 0 ? 1 : 0;
        }
        if (done < sessions_.size()) return Decision::wait();
        return Decision::emit(vote(labels_, triggers_).label);
    }

private:
    const VotingClassifier& model_;
    std::vector<std::unique_ptr<DecisionSession>> sessions_;
    std::vector<std::set<std::size_t>> schedule_;
    std::vector<Label> labels_;
    std::vector<std::size_t> triggers_;
};

std::unique_ptr<DecisionSession> VotingClassifier::open_session() const {
    return std::make_unique<VotingSession>(*this);
}

ProbClassifierFactory standardized(ProbClassifierFactory inner) {
    return [inner](const Matrix& x, std::span<const Label> y, std::size_t num_classes) {
        const std::size_t f = x.cols();
        std::vector<double> mean(f, 0.0), scale(f, 0.0);
        const auto n = static_cast<double>(x.rows());
        for (std::size_t i = 0; i < x.rows(); ++i) {
            for (std::size_t j = 0; j < f; ++j) mean[j] += x(i, j) / n;
        }
        for (std::size_t i = 0; i < x.rows(); ++i) {
            for (std::size_t j = 0; j < f; ++j) scale[j] += (x(i, j) - mean[j]) * (x(i, j) - mean[j]) / n;
        }
        for (double& s : scale) s = s > 0.0 ? std::sqrt(s) : 1.0;
        Matrix z(x.rows(), f);
        for (std::size_t i = 0; i < x.rows(); ++i) {
            for (std::size_t j = 0; j < f; ++j) z(i, j) = (x(i, j) - mean[j]) / scale[j];
        }
        return std::make_unique<Standardized>(std::move(mean), std::move(scale),
                                              inner(z, y, num_classes));
    };
}

ProbClassifierFactory learner_by_name(const std::string& name) {
    if (name == "logreg") return standardized(logistic_regression_factory());
    if (name == "gnb") return standardized(gaussian_nb_factory());
    if (name == "words") return word_classifier_factory();
    throw std::invalid_argument("unknown learner '" + name + "'");
}

std::size_t fixed_prefix_length(double fraction, std::size_t length) {
    const auto t = static_cast<std::size_t>(std::ceil(fraction * static_cast<double>(length) - 1e-9));
    return std::clamp<std::size_t>(t, 1, length);
}

FixedPrefixModel FixedPrefixModel::train(const Dataset& d, const FixedPrefixOptions& options) {
    if (!d.equal_length()) throw DataError("fixed-prefix model needs equal-length series");
    if (options.fractions.empty()) throw std::invalid_argument("no prefix fractions given");
    const auto factory = learner_by_name(options.learner);
    const auto y = d.labels();

    FixedPrefixModel m;
    m.length_ = d.max_length();
    m.num_classes_ = d.num_classes();
    const auto [train_idx, hold_idx] = stratified_split(d, options.holdout, options.seed);
    const Dataset train = d.subset(train_idx);
    const Dataset hold = d.subset(hold_idx);

    double best = -1.0;
    for (double p : options.fractions) {
        const std::size_t L = fixed_prefix_length(p, m.length_);
        double hm = 0.0;
        if (!hold.empty()) {
            const auto model = factory(prefix_matrix(train, L), train.labels(), m.num_classes_);
            const Matrix xh = prefix_matrix(hold, L);
            std::size_t right = 0;
            for (std::size_t i = 0; i < hold.size(); ++i) {
                right += model->predict(xh.row(i)) == hold.instances[i].label ? 1 : 0;
            }
            hm = harmonic_mean(static_cast<double>(right) / static_cast<double>(hold.size()),
                               static_cast<double>(L) / static_cast<double>(m.length_));
        }
        m.scores_.push_back(hm);
        if (hm > best) {
            best = hm;
            m.fraction_ = p;
            m.prefix_length_ = L;
        }
    }
    m.classifier_ = factory(prefix_matrix(d, m.prefix_length_), y, m.num_classes_);
    return m;
}

Label FixedPrefixModel::predict(const TimeSeries& prefix) const {
    return classifier_->predict(flatten_prefix(prefix, prefix_length_));
}

namespace {

class FixedPrefixSession final : public DecisionSession {
public:
    explicit FixedPrefixSession(const FixedPrefixModel& m) : model_(m) {}
    Decision observe(const TimeSeries& prefix) override {
        if (prefix.length() < model_.prefix_length()) return Decision::wait();
        return Decision::emit(model_.predict(prefix));
    }

private:
    const FixedPrefixModel& model_;
};

}  // namespace

std::unique_ptr<DecisionSession> FixedPrefixModel::open_session() const {
    return std::make_unique<FixedPrefixSession>(*this);
}

}  // namespace etsc
