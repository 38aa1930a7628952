#include "etsc/learners/logistic_regression.hpp"

#include <algorithm>
#include <cmath>
#include <deque>
#include <limits>
#include <numeric>
#include <stdexcept>

namespace etsc {
namespace {

double dot(std::span<const double> a, std::span<const double> b) {
    double s = 0.0;
    for (std::size_t i = 0; i < a.size(); ++i) s += a[i] * b[i];
    return s;
}

double norm2(std::span<const double> a) { return std::sqrt(dot(a, a)); }

struct Correction {
    std::vector<double> s;
    std::vector<double> y;
    double rho;
};

}  // namespace

double LogisticRegression::objective(const Matrix& x, std::span<const Label> y,
                                     std::size_t num_classes, double l2,
                                     std::span<const double> params, std::vector<double>* grad) {
    const std::size_t n = x.rows();
    const std::size_t f = x.cols();
    const std::size_t stride = f + 1;
    if (grad) grad->assign(params.size(), 0.0);
    std::vector<double> scores(num_classes);
    double loss = 0.0;
    const double inv_n = 1.0 / static_cast<double>(n);
    for (std::size_t i = 0; i < n; ++i) {
        const auto xi = x.row(i);
        for (std::size_t c = 0; c < num_classes; ++c) {
            const auto w = params.subspan(c * stride, f);
            scores[c] = dot(w, xi) + params[c * stride + f];
        }
        const double top = *std::max_element(scores.begin(), scores.end());
        double z = 0.0;
        for (double s : scores) z += std::exp(s - top);
        const double log_z = top + std::log(z);
        const auto yi = static_cast<std::size_t>(y[i]);
        loss += log_z - scores[yi];
        if (!grad) continue;
        for (std::size_t c = 0; c < num_classes; ++c) {
            const double residual = (std::exp(scores[c] - log_z) - (c == yi ? 1.0 : 0.0)) * inv_n;
            double* g = grad->data() + c * stride;
            for (std::size_t j = 0; j < f; ++j) g[j] += residual * xi[j];
            g[f] += residual;
        }
    }
    loss *= inv_n;
    for (std::size_t c = 0; c < num_classes; ++c) {
        for (std::size_t j = 0; j < f; ++j) {
            const double w = params[c * stride + j];
            loss += 0.5 * l2 * w * w;
            if (grad) (*grad)[c * stride + j] += l2 * w;
        }
    }
    return loss;
}

LogisticRegression LogisticRegression::fit(const Matrix& x, std::span<const Label> y,
                                           std::size_t num_classes, const LogRegOptions& options) {
    if (x.rows() == 0) throw std::invalid_argument("logistic regression needs training data");
    if (x.rows() != y.size()) {
        throw std::invalid_argument("feature rows and labels differ in count");
    }
    if (num_classes < 1) throw std::invalid_argument("need at least one class");
    for (Label l : y) {
        if (l < 0 || static_cast<std::size_t>(l) >= num_classes) {
            throw std::invalid_argument("label outside the class set");
        }
    }

    LogisticRegression model;
    model.num_classes_ = num_classes;
    model.num_features_ = x.cols();
    const std::size_t dim = num_classes * (x.cols() + 1);
    std::vector<double> w(dim, 0.0), g, w_next(dim), g_next, direction(dim);
    double fx = objective(x, y, num_classes, options.l2, w, &g);

    constexpr std::size_t kHistory = 10;
    std::deque<Correction> history;
    int it = 0;
    double gnorm = norm2(g);
    while (gnorm >= options.tol && it < options.max_iter) {
        // Two-loop recursion for the quasi-Newton direction.
        direction = g;
        std::vector<double> alpha(history.size());
        for (std::size_t k = history.size(); k-- > 0;) {
            alpha[k] = history[k].rho * dot(history[k].s, direction);
            for (std::size_t j = 0; j < dim; ++j) direction[j] -= alpha[k] * history[k].y[j];
        }
        double scale = 1.0;
        if (!history.empty()) {
            const auto& last = history.back();
            scale = dot(last.s, last.y) / dot(last.y, last.y);
        } else {
            scale = 1.0 / std::max(gnorm, 1.0);
        }
        for (double& d : direction) d *= scale;
        for (std::size_t k = 0; k < history.size(); ++k) {
            const double beta = history[k].rho * dot(history[k].y, direction);
            for (std::size_t j = 0; j < dim; ++j) direction[j] += history[k].s[j] * (alpha[k] - beta);
        }
        for (double& d : direction) d = -d;

        double slope = dot(g, direction);
        if (slope >= 0.0) {
            // Not a descent direction; fall back to steepest descent.
            history.clear();
            for (std::size_t j = 0; j < dim; ++j) direction[j] = -g[j] / std::max(gnorm, 1.0);
            slope = dot(g, direction);
        }

        // Armijo backtracking.
        double step = 1.0;
        double f_next = 0.0;
        bool accepted = false;
        for (int bt = 0; bt < 40; ++bt) {
            for (std::size_t j = 0; j < dim; ++j) w_next[j] = w[j] + step * direction[j];
            f_next = objective(x, y, num_classes, options.l2, w_next, &g_next);
            if (f_next <= fx + 1e-4 * step * slope) {
                accepted = true;
                break;
            }
            step *= 0.5;
        }
        ++it;
        if (!accepted) break;

        Correction c{std::vector<double>(dim), std::vector<double>(dim), 0.0};
        for (std::size_t j = 0; j < dim; ++j) {
            c.s[j] = w_next[j] - w[j];
            c.y[j] = g_next[j] - g[j];
        }
        const double sy = dot(c.s, c.y);
        if (sy > 1e-12 * dot(c.y, c.y)) {
            c.rho = 1.0 / sy;
            history.push_back(std::move(c));
            if (history.size() > kHistory) history.pop_front();
        }
        w.swap(w_next);
        g.swap(g_next);
        fx = f_next;
        gnorm = norm2(g);
    }

    model.params_ = std::move(w);
    model.iterations_ = it;
    model.gradient_norm_ = gnorm;
    model.converged_ = gnorm < options.tol;
    return model;
}

std::vector<double> LogisticRegression::predict_proba(std::span<const double> x) const {
    if (x.size() != num_features_) {
        throw std::invalid_argument("expected " + std::to_string(num_features_) + " features, got " +
                                    std::to_string(x.size()));
    }
    const std::size_t stride = num_features_ + 1;
    std::vector<double> scores(num_classes_);
    const std::span<const double> p(params_);
    for (std::size_t c = 0; c < num_classes_; ++c) {
        scores[c] = dot(p.subspan(c * stride, num_features_), x) + params_[c * stride + num_features_];
    }
    softmax_inplace(scores);
    return scores;
}

ProbClassifierFactory logistic_regression_factory(const LogRegOptions& options) {
    return [options](const Matrix& x, std::span<const Label> y, std::size_t num_classes) {
        return std::make_unique<LogisticRegression>(
            LogisticRegression::fit(x, y, num_classes, options));
    };
}

}  // namespace etsc
