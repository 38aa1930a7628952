#pragma once

#include <cstdint>
#include <vector>

#include "etsc/learners/matrix.hpp"

namespace etsc {

struct KMeansModel {
    std::size_t k = 0;
    Matrix centroids;
    std::vector<std::size_t> assignments;
    /// Sum of squared distances to the assigned centroid, one entry per iteration.
    std::vector<double> objective_history;
    int iterations = 0;
    bool converged = false;

    /// Nearest centroid; ties resolve to the lowest index.
    std::size_t assign(std::span<const double> x) const;
};

/**
 * Lloyd's algorithm seeded with k distinct training points drawn with the
 * given seed. A cluster that loses all members keeps its previous centroid.
 * Throws std::invalid_argument when k is zero or exceeds the number of
 * distinct points.
 */
KMeansModel kmeans(const Matrix& items, std::size_t k, std::uint64_t seed, int max_iter = 100);

/// Sum of squared distances of every item to its assigned centroid.
double kmeans_objective(const Matrix& items, const Matrix& centroids,
                        const std::vector<std::size_t>& assignments);

}  // namespace etsc
