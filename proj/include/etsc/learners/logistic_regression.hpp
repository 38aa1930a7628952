#pragma once

#include <span>
#include <vector>

#include "etsc/learners/prob_classifier.hpp"

namespace etsc {

struct LogRegOptions {
    double l2 = 1e-3;  ///< penalty on weights; intercepts are not penalized
    int max_iter = 500;
    double tol = 1e-5;  ///< stop when the gradient 2-norm falls below this
};

/**
 * Multinomial logistic regression fitted by full-batch L-BFGS on
 *
 *     mean_i[-log p(y_i | x_i)] + l2/2 * ||W||^2
 *
 * Parameters are stored class-major, each class row holding the feature
 * weights followed by the intercept.
 */
class LogisticRegression final : public ProbClassifier {
public:
    static LogisticRegression fit(const Matrix& x, std::span<const Label> y,
                                  std::size_t num_classes, const LogRegOptions& options = {});

    std::size_t num_classes() const override { return num_classes_; }
    std::vector<double> predict_proba(std::span<const double> x) const override;

    std::span<const double> parameters() const { return params_; }
    std::size_t num_features() const { return num_features_; }
    bool converged() const { return converged_; }
    int iterations() const { return iterations_; }
    double gradient_norm() const { return gradient_norm_; }

    /// Objective value at params; fills grad (same layout) when non-null.
    static double objective(const Matrix& x, std::span<const Label> y, std::size_t num_classes,
                            double l2, std::span<const double> params, std::vector<double>* grad);

private:
    std::size_t num_classes_ = 0;
    std::size_t num_features_ = 0;
    std::vector<double> params_;
    bool converged_ = false;
    int iterations_ = 0;
    double gradient_norm_ = 0.0;
};

ProbClassifierFactory logistic_regression_factory(const LogRegOptions& options = {});

}  // namespace etsc
