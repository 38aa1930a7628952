#include "etsc/learners/one_class.hpp"

#include <algorithm>
#include <cmath>
#include <stdexcept>

namespace etsc {

OneClassBoundary OneClassBoundary::fit(const Matrix& vectors, double nu) {
    if (vectors.rows() < 2) throw std::invalid_argument("one-class model needs >= 2 vectors");
    if (!(nu >= 0.0 && nu < 1.0)) throw std::invalid_argument("nu must be in [0, 1)");
    const std::size_t n = vectors.rows();
    OneClassBoundary b;
    b.center_.assign(vectors.cols(), 0.0);
    for (std::size_t i = 0; i < n; ++i) {
        const auto r = vectors.row(i);
        for (std::size_t j = 0; j < r.size(); ++j) b.center_[j] += r[j];
    }
    for (double& c : b.center_) c /= static_cast<double>(n);

    std::vector<double> dist(n);
    for (std::size_t i = 0; i < n; ++i) dist[i] = b.distance(vectors.row(i));
    std::sort(dist.begin(), dist.end());
    // The tiny relative slack keeps recomputed training distances inside.
    auto need = static_cast<std::size_t>(std::ceil((1.0 - nu) * static_cast<double>(n) - 1e-9));
    need = std::clamp<std::size_t>(need, 1, n);
    b.radius_ = dist[need - 1] * (1.0 + 1e-12);
    return b;
}

double OneClassBoundary::distance(std::span<const double> v) const {
    if (v.size() != center_.size()) throw std::invalid_argument("vector size mismatch");
    return std::sqrt(squared_distance(v, center_));
}

bool OneClassBoundary::accept(std::span<const double> v) const { return distance(v) <= radius_; }

}  // namespace etsc
