#include "etsc/learners/nearest_neighbor.hpp"

#include <limits>
#include <stdexcept>

namespace etsc {

std::size_t nn1(std::span<const double> query, const Matrix& pool, std::size_t skip) {
    if (query.size() > pool.cols()) throw std::invalid_argument("query longer than pool rows");
    std::size_t best = pool.rows();
    double best_d = std::numeric_limits<double>::infinity();
    for (std::size_t i = 0; i < pool.rows(); ++i) {
        if (i == skip) continue;
        const double d = squared_distance(query, pool.row(i).first(query.size()));
        if (d < best_d) {
            best_d = d;
            best = i;
        }
    }
    if (best == pool.rows()) throw std::invalid_argument("nn1 needs a non-empty pool");
    return best;
}

}  // namespace etsc
