#include "etsc/bench/metrics.hpp"

#include <stdexcept>

#include "etsc/early_classifier.hpp"

namespace etsc {

double class_f1(std::span<const Prediction> preds, Label c) {
    std::size_t tp = 0, fp = 0, fn = 0;
    for (const auto& p : preds) {
        if (p.predicted == c && p.truth == c) ++tp;
        if (p.predicted == c && p.truth != c) ++fp;
        if (p.predicted != c && p.truth == c) ++fn;
    }
    const std::size_t denom = 2 * tp + fp + fn;
    return denom ? 2.0 * static_cast<double>(tp) / static_cast<double>(denom) : 0.0;
}

Metrics compute_metrics(std::span<const Prediction> preds, std::size_t num_classes) {
    if (preds.empty()) throw std::invalid_argument("metrics need at least one prediction");
    Metrics m;
    std::size_t right = 0;
    double earliness = 0.0;
    std::vector<bool> seen(num_classes, false);
    for (const auto& p : preds) {
        if (p.trigger == 0 || p.trigger > p.length) {
            throw std::invalid_argument("trigger outside [1, length]");
        }
        right += p.truth == p.predicted ? 1 : 0;
        earliness += static_cast<double>(p.trigger) / static_cast<double>(p.length);
        seen.at(static_cast<std::size_t>(p.truth)) = true;
        seen.at(static_cast<std::size_t>(p.predicted)) = true;
    }
    const auto n = static_cast<double>(preds.size());
    m.accuracy = static_cast<double>(right) / n;
    m.earliness = earliness / n;
    m.harmonic_mean = harmonic_mean(m.accuracy, m.earliness);

    double f1 = 0.0;
    std::size_t classes = 0;
    for (std::size_t c = 0; c < num_classes; ++c) {
        if (!seen[c]) continue;
        f1 += class_f1(preds, static_cast<Label>(c));
        ++classes;
    }
    m.f1 = f1 / static_cast<double>(classes);
    if (num_classes == 2) m.f1_positive = class_f1(preds, 1);
    return m;
}

}  // namespace etsc
