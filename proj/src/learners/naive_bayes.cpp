#include "etsc/learners/naive_bayes.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <numbers>
#include <stdexcept>

namespace etsc {

GaussianNB GaussianNB::fit(const Matrix& x, std::span<const Label> y, std::size_t num_classes,
                           double var_smoothing) {
    if (x.rows() == 0 || x.rows() != y.size()) {
        throw std::invalid_argument("naive Bayes needs matching non-empty features and labels");
    }
    const std::size_t f = x.cols();
    GaussianNB m;
    m.num_classes_ = num_classes;
    m.num_features_ = f;
    m.mean_.assign(num_classes * f, 0.0);
    m.var_.assign(num_classes * f, 0.0);
    std::vector<std::size_t> counts(num_classes, 0);

    for (std::size_t i = 0; i < x.rows(); ++i) {
        const auto c = static_cast<std::size_t>(y[i]);
        if (c >= num_classes) throw std::invalid_argument("label outside the class set");
        ++counts[c];
        const auto xi = x.row(i);
        for (std::size_t j = 0; j < f; ++j) m.mean_[c * f + j] += xi[j];
    }
    for (std::size_t c = 0; c < num_classes; ++c) {
        if (counts[c] == 0) continue;
        for (std::size_t j = 0; j < f; ++j) m.mean_[c * f + j] /= static_cast<double>(counts[c]);
    }
    for (std::size_t i = 0; i < x.rows(); ++i) {
        const auto c = static_cast<std::size_t>(y[i]);
        const auto xi = x.row(i);
        for (std::size_t j = 0; j < f; ++j) {
            const double d = xi[j] - m.mean_[c * f + j];
            m.var_[c * f + j] += d * d;
        }
    }

    // Overall feature variance sets the smoothing scale.
    double max_var = 0.0;
    for (std::size_t j = 0; j < f; ++j) {
        double mean = 0.0, sq = 0.0;
        for (std::size_t i = 0; i < x.rows(); ++i) mean += x(i, j);
        mean /= static_cast<double>(x.rows());
        for (std::size_t i = 0; i < x.rows(); ++i) sq += (x(i, j) - mean) * (x(i, j) - mean);
        max_var = std::max(max_var, sq / static_cast<double>(x.rows()));
    }
    const double floor = var_smoothing * max_var + 1e-12;

    m.log_prior_.assign(num_classes, -std::numeric_limits<double>::infinity());
    for (std::size_t c = 0; c < num_classes; ++c) {
        if (counts[c] == 0) continue;
        m.log_prior_[c] = std::log(static_cast<double>(counts[c]) / static_cast<double>(x.rows()));
        for (std::size_t j = 0; j < f; ++j) {
            m.var_[c * f + j] = m.var_[c * f + j] / static_cast<double>(counts[c]) + floor;
        }
    }
    return m;
}

std::vector<double> GaussianNB::predict_proba(std::span<const double> x) const {
    if (x.size() != num_features_) throw std::invalid_argument("feature count mismatch");
    const double log_2pi = std::log(2.0 * std::numbers::pi);
    std::vector<double> score(num_classes_, -std::numeric_limits<double>::infinity());
    for (std::size_t c = 0; c < num_classes_; ++c) {
        if (std::isinf(log_prior_[c])) continue;
        double s = log_prior_[c];
        for (std::size_t j = 0; j < num_features_; ++j) {
            const double v = var_[c * num_features_ + j];
            const double d = x[j] - mean_[c * num_features_ + j];
            s -= 0.5 * (log_2pi + std::log(v) + d * d / v);
        }
        score[c] = s;
    }
    softmax_inplace(score);
    return score;
}

std::span<const double> GaussianNB::class_means(Label c) const {
    return std::span<const double>(mean_).subspan(static_cast<std::size_t>(c) * num_features_,
                                                  num_features_);
}

std::span<const double> GaussianNB::class_variances(Label c) const {
    return std::span<const double>(var_).subspan(static_cast<std::size_t>(c) * num_features_,
                                                 num_features_);
}

ProbClassifierFactory gaussian_nb_factory(double var_smoothing) {
    return [var_smoothing](const Matrix& x, std::span<const Label> y, std::size_t num_classes) {
        return std::make_unique<GaussianNB>(GaussianNB::fit(x, y, num_classes, var_smoothing));
    };
}

}  // namespace etsc
