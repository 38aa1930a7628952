#include "etsc/algorithms/ecec.hpp"

#include <algorithm>
#include <stdexcept>

#include "etsc/algorithms/teaser.hpp"
#include "etsc/error.hpp"
#include "etsc/folds.hpp"
#include "etsc/learners/cross_validation.hpp"

namespace etsc {

ReliabilityTable estimate_reliability(const std::vector<std::vector<Label>>& predictions,
                                      std::span<const Label> truth, std::size_t num_classes) {
    if (predictions.empty()) throw std::invalid_argument("reliability needs predictions");
    const std::size_t K = predictions.front().size();
    ReliabilityTable r(K, num_classes);
    std::vector<double> predicted(K * num_classes, 0.0);
    for (std::size_t j = 0; j < predictions.size(); ++j) {
        for (std::size_t k = 0; k < K; ++k) {
            r(k, predictions[j][k], truth[j]) += 1.0;
            predicted[k * num_classes + static_cast<std::size_t>(predictions[j][k])] += 1.0;
        }
    }
    const auto C = static_cast<double>(num_classes);
    for (std::size_t k = 0; k < K; ++k) {
        for (std::size_t p = 0; p < num_classes; ++p) {
            for (std::size_t y = 0; y < num_classes; ++y) {
                auto& v = r(k, static_cast<Label>(p), static_cast<Label>(y));
                v = (v + 1.0) / (predicted[k * num_classes + p] + C);
            }
        }
    }
    return r;
}

double confidence(const ReliabilityTable& r, std::span<const Label> predictions) {
    if (predictions.empty()) throw std::invalid_argument("confidence needs at least one prediction");
    const Label current = predictions.back();
    double survive = 1.0;
    for (std::size_t k = 0; k < predictions.size(); ++k) {
        survive *= 1.0 - r(k, predictions[k], current);
    }
    return 1.0 - survive;
}

Decision ecec_step(double conf, double theta, Label label, bool final_checkpoint) {
    if (conf >= theta || final_checkpoint) return Decision::emit(label);
    return Decision::wait();
}

std::vector<double> threshold_candidates(std::vector<double> confidences) {
    std::sort(confidences.begin(), confidences.end());
    confidences.erase(std::unique(confidences.begin(), confidences.end()), confidences.end());
    std::vector<double> out;
    if (!confidences.empty()) out.push_back(confidences.front());
    for (std::size_t i = 1; i < confidences.size(); ++i) {
        out.push_back(0.5 * (confidences[i - 1] + confidences[i]));
    }
    out.push_back(1.0);
    std::sort(out.begin(), out.end());
    out.erase(std::unique(out.begin(), out.end()), out.end());
    return out;
}

double ecec_cost(double accuracy, double earliness, double alpha) {
    return alpha * (1.0 - accuracy) + (1.0 - alpha) * earliness;
}

ThresholdChoice select_threshold(const std::vector<std::vector<double>>& conf,
                                 const std::vector<std::vector<Label>>& predictions,
                                 std::span<const Label> truth,
                                 std::span<const std::size_t> prefix_lengths, std::size_t length,
                                 double alpha) {
    std::vector<double> all;
    for (const auto& row : conf) all.insert(all.end(), row.begin(), row.end());
    const auto candidates = threshold_candidates(std::move(all));
    const std::size_t n = conf.size();
    ThresholdChoice best;
    bool have = false;
    for (double theta : candidates) {
        std::size_t right = 0;
        double earliness = 0.0;
        for (std::size_t j = 0; j < n; ++j) {
            const std::size_t K = conf[j].size();
            std::size_t at = K - 1;
            for (std::size_t k = 0; k < K; ++k) {
                if (conf[j][k] >= theta) {
                    at = k;
                    break;
                }
            }
            right += predictions[j][at] == truth[j] ? 1 : 0;
            earliness += static_cast<double>(prefix_lengths[at]) / static_cast<double>(length);
        }
        const double acc = static_cast<double>(right) / static_cast<double>(n);
        const double earl = earliness / static_cast<double>(n);
        const double cost = ecec_cost(acc, earl, alpha);
        if (!have || cost < best.cost) {
            best = {theta, cost, acc, earl};
            have = true;
        }
    }
    return best;
}

EcecModel EcecModel::train(const Dataset& d, const EcecOptions& options) {
    if (d.dims() != 1) throw DataError("ECEC needs univariate data");
    if (!d.equal_length()) throw DataError("ECEC needs equal-length series");
    if (options.N < 2) throw std::invalid_argument("ECEC needs at least two prefixes");

    EcecModel m;
    m.length_ = d.max_length();
    m.num_classes_ = d.num_classes();
    m.prefix_lengths_ = teaser_checkpoints(m.length_, options.N);

    const std::size_t n = d.size();
    const auto y = d.labels();
    const std::size_t k = std::clamp<std::size_t>(options.cv_folds, 2, std::max<std::size_t>(2, n));
    const FoldPlan plan = stratified_folds(d, k, options.seed);
    const auto factory = word_classifier_factory(options.words);

    std::vector<std::vector<Label>> oof(n, std::vector<Label>(options.N));
    for (std::size_t i = 0; i < options.N; ++i) {
        const Matrix x = prefix_matrix(d, m.prefix_lengths_[i]);
        m.classifiers_.push_back(std::make_shared<const WordClassifier>(
            WordClassifier::fit(x, y, m.num_classes_, options.words)));
        const Matrix proba = cross_val_proba(x, y, m.num_classes_, factory, plan);
        for (std::size_t j = 0; j < n; ++j) oof[j][i] = static_cast<Label>(argmax(proba.row(j)));
    }
    m.reliability_ = estimate_reliability(oof, y, m.num_classes_);

    std::vector<std::vector<double>> conf(n, std::vector<double>(options.N));
    for (std::size_t j = 0; j < n; ++j) {
        for (std::size_t i = 0; i < options.N; ++i) {
            conf[j][i] = confidence(m.reliability_, std::span<const Label>(oof[j]).first(i + 1));
        }
    }
    m.theta_ = select_threshold(conf, oof, y, m.prefix_lengths_, m.length_, options.alpha).theta;
    return m;
}

Label EcecModel::predict_at(std::size_t k, std::span<const double> prefix) const {
    return classifiers_.at(k)->predict(prefix);
}

class EcecSession final : public DecisionSession {
public:
    explicit EcecSession(const EcecModel& m) : model_(m) {}

    Decision observe(const TimeSeries& prefix) override {
        const auto& lengths = model_.prefix_lengths_;
        const std::size_t k = predictions_.size();
        if (k >= lengths.size() || prefix.length() != lengths[k]) {
            throw std::invalid_argument("ECEC consulted at non-checkpoint length " +
                                        std::to_string(prefix.length()));
        }
        predictions_.push_back(model_.predict_at(k, prefix.row(0)));
        const double c = confidence(model_.reliability_, predictions_);
        return ecec_step(c, model_.theta_, predictions_.back(), k + 1 == lengths.size());
    }

private:
    const EcecModel& model_;
    std::vector<Label> predictions_;
};

std::unique_ptr<DecisionSession> EcecModel::open_session() const {
    return std::make_unique<EcecSession>(*this);
}

}  // namespace etsc
