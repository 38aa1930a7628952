#pragma once

#include <vector>

#include "etsc/learners/matrix.hpp"

namespace etsc {

/**
 * Hypersphere acceptance region around the mean of the training vectors.
 * The radius is the smallest training distance that still accepts at least
 * a (1 - nu) fraction of the training vectors.
 */
class OneClassBoundary {
public:
    /// Needs at least two training vectors; nu in [0, 1).
    static OneClassBoundary fit(const Matrix& vectors, double nu);

    bool accept(std::span<const double> v) const;
    double distance(std::span<const double> v) const;

    std::span<const double> center() const { return center_; }
    double radius() const { return radius_; }

private:
    std::vector<double> center_;
    double radius_ = 0.0;
};

}  // namespace etsc
