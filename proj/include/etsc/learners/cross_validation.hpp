#pragma once

#include "etsc/folds.hpp"
#include "etsc/learners/prob_classifier.hpp"

namespace etsc {

/**
 * Out-of-fold class probabilities: row i comes from a model fitted on every
 * fold except the one holding instance i.
 */
Matrix cross_val_proba(const Matrix& x, std::span<const Label> y, std::size_t num_classes,
                       const ProbClassifierFactory& factory, const FoldPlan& plan);

/// First t time-points of every variable of every instance, flattened variable-major.
Matrix prefix_matrix(const Dataset& d, std::size_t t);

/// First t time-points of every variable, flattened variable-major.
std::vector<double> flatten_prefix(const TimeSeries& s, std::size_t t);

}  // namespace etsc
