#pragma once

#include <cstdint>
#include <map>
#include <utility>
#include <vector>

#include "etsc/learners/logistic_regression.hpp"

namespace etsc {

struct WordOptions {
    /// Sliding-window lengths; empty selects default_windows(series length).
    std::vector<std::size_t> window_lengths;
    std::size_t word_length = 4;
    std::size_t alphabet_size = 4;
    LogRegOptions logreg;
};

/// {L/8, L/4, L/2}, each at least 3 and at most L, duplicates removed.
std::vector<std::size_t> default_windows(std::size_t length);

/// Gaussian quantiles splitting the real line into alphabet_size equiprobable bins.
std::vector<double> gaussian_breakpoints(std::size_t alphabet_size);

/// Standard normal quantile.
double normal_quantile(double p);

/**
 * Bag-of-words classifier over univariate series.
 *
 * Every window of every configured length is z-normalized, reduced to
 * word_length piecewise means and discretized with Gaussian breakpoints.
 * Word counts (scaled by their training standard deviation) feed a
 * multinomial logistic regression. Rows passed to fit and predict_proba are
 * whole series, so the model plugs into ProbClassifierFactory.
 */
class WordClassifier final : public ProbClassifier {
public:
    static WordClassifier fit(const Matrix& series, std::span<const Label> y,
                              std::size_t num_classes, const WordOptions& options = {});

    std::size_t num_classes() const override { return logreg_.num_classes(); }
    std::vector<double> predict_proba(std::span<const double> series) const override;

    /// Scaled word-count features of one series.
    std::vector<double> features(std::span<const double> series) const;

    std::size_t series_length() const { return length_; }
    std::size_t vocabulary_size() const { return vocabulary_.size(); }
    std::span<const std::size_t> windows() const { return windows_; }
    std::span<const double> breakpoints() const { return breakpoints_; }
    const LogisticRegression& logistic_regression() const { return logreg_; }

    /// Word codes for every window position, grouped by window index.
    std::vector<std::pair<std::size_t, std::uint64_t>> words(std::span<const double> series) const;

private:
    std::size_t length_ = 0;
    std::size_t word_length_ = 0;
    std::size_t alphabet_size_ = 0;
    std::vector<std::size_t> windows_;
    std::vector<double> breakpoints_;
    std::map<std::pair<std::size_t, std::uint64_t>, std::size_t> vocabulary_;
    std::vector<double> scale_;
    LogisticRegression logreg_;
};

ProbClassifierFactory word_classifier_factory(const WordOptions& options = {});

}  // namespace etsc
