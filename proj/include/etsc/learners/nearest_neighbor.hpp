#pragma once

#include <cstddef>
#include <span>

#include "etsc/learners/matrix.hpp"

namespace etsc {

/**
 * Index of the pool row nearest to query under squared Euclidean distance
 * over the first query.size() columns. Ties resolve to the lowest index.
 * skip excludes one row (pass pool.rows() to exclude none).
 */
std::size_t nn1(std::span<const double> query, const Matrix& pool, std::size_t skip);

inline std::size_t nn1(std::span<const double> query, const Matrix& pool) {
    return nn1(query, pool, pool.rows());
}

}  // namespace etsc
