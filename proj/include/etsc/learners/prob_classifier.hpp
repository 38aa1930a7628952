#pragma once

#include <cstddef>
#include <functional>
#include <memory>
#include <span>
#include <vector>

#include "etsc/learners/matrix.hpp"
#include "etsc/time_series.hpp"

namespace etsc {

/**
 * Probabilistic classifier over fixed-length feature vectors.
 *
 * predict_proba returns one non-negative entry per class of the class set
 * the model was fitted with, summing to one.
 */
class ProbClassifier {
public:
    virtual ~ProbClassifier() = default;
    virtual std::size_t num_classes() const = 0;
    virtual std::vector<double> predict_proba(std::span<const double> x) const = 0;

    Label predict(std::span<const double> x) const;
};

/// Fits a ProbClassifier on (features, labels) over num_classes classes.
using ProbClassifierFactory = std::function<std::unique_ptr<ProbClassifier>(
    const Matrix& x, std::span<const Label> y, std::size_t num_classes)>;

/// Index of the largest entry; ties resolve to the lowest index.
std::size_t argmax(std::span<const double> v);

/// In-place softmax of log-scores.
void softmax_inplace(std::span<double> scores);

}  // namespace etsc
