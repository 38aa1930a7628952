#pragma once

#include <optional>
#include <span>
#include <vector>

#include "etsc/time_series.hpp"

namespace etsc {

struct Prediction {
    Label truth = 0;
    Label predicted = 0;
    std::size_t trigger = 0;  ///< prefix length at emission
    std::size_t length = 0;   ///< full series length
};

struct Metrics {
    double accuracy = 0.0;
    double f1 = 0.0;  ///< macro average over classes present in truth or predictions
    std::optional<double> f1_positive;  ///< class 1 F1, binary problems only
    double earliness = 0.0;             ///< mean trigger / length
    double harmonic_mean = 0.0;
};

/// F1 of one class; 0 when it has neither true nor predicted members.
double class_f1(std::span<const Prediction> preds, Label c);

Metrics compute_metrics(std::span<const Prediction> preds, std::size_t num_classes);

}  // namespace etsc
