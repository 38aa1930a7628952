#pragma once

#include <span>
#include <vector>

#include "etsc/learners/prob_classifier.hpp"

namespace etsc {

/// Gaussian Naive Bayes with per-class diagonal variances.
class GaussianNB final : public ProbClassifier {
public:
    /**
     * Variances are floored at var_smoothing times the largest feature
     * variance (plus a tiny absolute floor) so constant features do not
     * produce infinite likelihoods. Classes without training instances
     * receive probability zero.
     */
    static GaussianNB fit(const Matrix& x, std::span<const Label> y, std::size_t num_classes,
                          double var_smoothing = 1e-9);

    std::size_t num_classes() const override { return num_classes_; }
    std::vector<double> predict_proba(std::span<const double> x) const override;

    std::span<const double> class_means(Label c) const;
    std::span<const double> class_variances(Label c) const;

private:
    std::size_t num_classes_ = 0;
    std::size_t num_features_ = 0;
    std::vector<double> log_prior_;  // -inf for empty classes
    std::vector<double> mean_;       // class-major
    std::vector<double> var_;
};

ProbClassifierFactory gaussian_nb_factory(double var_smoothing = 1e-9);

}  // namespace etsc
