#include "etsc/learners/kmeans.hpp"

#include <algorithm>
#include <limits>
#include <stdexcept>

#include "etsc/rng.hpp"

namespace etsc {
namespace {

std::size_t nearest(const Matrix& centroids, std::span<const double> x) {
    std::size_t best = 0;
    double best_d = std::numeric_limits<double>::infinity();
    for (std::size_t c = 0; c < centroids.rows(); ++c) {
        const double d = squared_distance(centroids.row(c), x);
        if (d < best_d) {
            best_d = d;
            best = c;
        }
    }
    return best;
}

bool same_row(std::span<const double> a, std::span<const double> b) {
    return std::equal(a.begin(), a.end(), b.begin(), b.end());
}

}  // namespace

std::size_t KMeansModel::assign(std::span<const double> x) const { return nearest(centroids, x); }

double kmeans_objective(const Matrix& items, const Matrix& centroids,
                        const std::vector<std::size_t>& assignments) {
    double total = 0.0;
    for (std::size_t i = 0; i < items.rows(); ++i) {
        total += squared_distance(items.row(i), centroids.row(assignments[i]));
    }
    return total;
}

KMeansModel kmeans(const Matrix& items, std::size_t k, std::uint64_t seed, int max_iter) {
    const std::size_t n = items.rows();
    if (k == 0) throw std::invalid_argument("k-means needs k >= 1");

    // Seed with distinct points in a seeded random order.
    std::vector<std::size_t> order(n);
    for (std::size_t i = 0; i < n; ++i) order[i] = i;
    Rng rng(seed);
    rng.shuffle(std::span<std::size_t>(order));
    Matrix centroids;
    for (std::size_t i : order) {
        if (centroids.rows() == k) break;
        bool dup = false;
        for (std::size_t c = 0; c < centroids.rows() && !dup; ++c) {
            dup = same_row(centroids.row(c), items.row(i));
        }
        if (!dup) centroids.append_row(items.row(i));
    }
    if (centroids.rows() < k) {
        throw std::invalid_argument("k-means: k exceeds the number of distinct points");
    }

    KMeansModel m;
    m.k = k;
    m.assignments.assign(n, 0);
    for (std::size_t i = 0; i < n; ++i) m.assignments[i] = nearest(centroids, items.row(i));
    m.objective_history.push_back(kmeans_objective(items, centroids, m.assignments));

    const std::size_t f = items.cols();
    while (m.iterations < max_iter) {
        ++m.iterations;
        Matrix next(k, f, 0.0);
        std::vector<std::size_t> counts(k, 0);
        for (std::size_t i = 0; i < n; ++i) {
            const auto c = m.assignments[i];
            ++counts[c];
            auto row = next.row(c);
            const auto xi = items.row(i);
            for (std::size_t j = 0; j < f; ++j) row[j] += xi[j];
        }
        for (std::size_t c = 0; c < k; ++c) {
            auto row = next.row(c);
            if (counts[c] == 0) {
                std::copy(centroids.row(c).begin(), centroids.row(c).end(), row.begin());
                continue;
            }
            for (double& v : row) v /= static_cast<double>(counts[c]);
        }
        centroids = std::move(next);

        bool changed = false;
        for (std::size_t i = 0; i < n; ++i) {
            const auto c = nearest(centroids, items.row(i));
            if (c != m.assignments[i]) {
                m.assignments[i] = c;
                changed = true;
            }
        }
        m.objective_history.push_back(kmeans_objective(items, centroids, m.assignments));
        if (!changed) {
            m.converged = true;
            break;
        }
    }
    m.centroids = std::move(centroids);
    return m;
}

}  // namespace etsc
