#pragma once

#include <optional>
#include <span>
#include <vector>

#include "etsc/early_classifier.hpp"

namespace etsc {

struct Shapelet {
    std::vector<double> values;
    double threshold = 0.0;  ///< delta; the shapelet fires when min_dist <= delta
    Label label = 0;
    double utility = 0.0;
    std::size_t instance = 0;  ///< source instance index
    std::size_t offset = 0;    ///< start position in the source instance
};

struct EdscOptions {
    std::size_t min_len = 5;
    std::size_t max_len = 0;  ///< 0 selects T / 2
    double k = 3.0;
    std::size_t stride = 1;  ///< offset step when enumerating candidates
};

/// Minimum Euclidean distance of sub over every alignment in s.
double min_dist(std::span<const double> sub, std::span<const double> s);

/**
 * Earliest prefix length of s at which some alignment of sub lies within
 * delta, or nullopt if none does.
 */
std::optional<std::size_t> first_match_end(std::span<const double> sub,
                                           std::span<const double> s, double delta);

/// max(mean - k * var, 0) with population variance of the distances.
double che_threshold(std::span<const double> distances, double k);
double che_threshold_from_moments(double mean, double var, double k);

/// Weight of a true positive first matched at prefix length t of T.
double earliness_weight(std::size_t t_match, std::size_t length);

/// 2 * P * WR / (P + WR), 0 when both vanish.
double utility_score(double precision, double weighted_recall);

/// Utility of a shapelet over a univariate dataset, evaluated directly.
double utility(const Shapelet& sh, const Dataset& d);

/**
 * Greedy covering over candidates sorted by descending utility (stable, so
 * equal utilities keep candidate order). A candidate joins the pool only if
 * it covers an instance not yet covered; selection stops once all
 * num_instances are covered. Returns candidate indices in pool order.
 */
std::vector<std::size_t> select_pool(std::span<const double> utilities,
                                     const std::vector<std::vector<std::size_t>>& covers,
                                     std::size_t num_instances);

class EdscModel final : public EarlyClassifier {
public:
    /// Univariate, equal-length data with at least two classes.
    static EdscModel train(const Dataset& d, const EdscOptions& options = {});

    static EdscModel from_pool(std::vector<Shapelet> pool, std::size_t length,
                               std::size_t num_classes, Label majority);

    std::string name() const override { return "edsc"; }
    std::size_t series_length() const override { return length_; }
    std::size_t num_classes() const override { return num_classes_; }
    std::unique_ptr<DecisionSession> open_session() const override;

    /// Stateless decision on one prefix; at full length always emits.
    Decision decide(const TimeSeries& prefix) const;

    const std::vector<Shapelet>& pool() const { return pool_; }
    std::size_t candidates_evaluated() const { return candidates_; }

private:
    std::vector<Shapelet> pool_;
    std::size_t length_ = 0;
    std::size_t num_classes_ = 0;
    Label majority_ = 0;
    std::size_t candidates_ = 0;

    friend class EdscSession;
};

}  // namespace etsc
