#pragma once

#include <optional>
#include <vector>

#include "etsc/early_classifier.hpp"
#include "etsc/learners/matrix.hpp"

namespace etsc {

/// Nearest neighbour of every training instance at every prefix length.
struct NnTables {
    std::size_t size = 0;
    std::size_t length = 0;
    std::vector<std::size_t> nn;  ///< nn[(t - 1) * size + i]

    std::size_t nearest(std::size_t t, std::size_t i) const { return nn[(t - 1) * size + i]; }
    /// Instances whose nearest neighbour at prefix length t is i, ascending.
    std::vector<std::size_t> rnn(std::size_t t, std::size_t i) const;
};

/// Euclidean prefix distances, self excluded, ties to the lowest index.
NnTables build_nn_tables(const Matrix& series);
NnTables build_nn_tables(const Dataset& d);

/// Smallest t from which the RNN set of i stays unchanged up to the full length.
std::size_t mpl_nn(const NnTables& tables, std::size_t i);

/**
 * RNN set of a cluster by relational division: instances outside the
 * cluster whose nearest neighbour is every member at once.
 */
std::vector<std::size_t> cluster_rnn(const NnTables& tables, std::size_t t,
                                     const std::vector<std::size_t>& members);

/**
 * Smallest t from which the cluster RNN set equals its full-length value and
 * every member's nearest neighbour lies inside the cluster, through to the
 * full length. nullopt if the conditions fail at the full length.
 */
std::optional<std::size_t> cluster_mpl(const NnTables& tables,
                                       const std::vector<std::size_t>& members);

/**
 * Single-linkage agglomerative clustering on full-length distances. Merges
 * only same-label clusters; a closest pair with different labels freezes
 * both clusters. Each instance ends with the smallest of its own MPL and
 * the MPLs of the clusters it joined.
 */
std::vector<std::size_t> cluster_and_refine(const Matrix& series, std::span<const Label> labels,
                                            const NnTables& tables);

struct EctsOptions {
    /// Instances with fewer reverse nearest neighbours at full length only
    /// predict at full length; 0 disables the filter.
    std::size_t support = 0;
};

class EctsModel final : public EarlyClassifier {
public:
    /// Univariate, equal-length data with at least two instances.
    static EctsModel train(const Dataset& d, const EctsOptions& options = {});

    static EctsModel from_parts(Matrix series, std::vector<Label> labels,
                                std::vector<std::size_t> mpl, std::size_t num_classes);

    std::string name() const override { return "ects"; }
    std::size_t series_length() const override { return series_.cols(); }
    std::size_t num_classes() const override { return num_classes_; }
    std::unique_ptr<DecisionSession> open_session() const override;

    Decision decide(const TimeSeries& prefix) const;

    std::span<const std::size_t> mpl() const { return mpl_; }
    std::span<const std::size_t> own_mpl() const { return own_mpl_; }

private:
    Matrix series_;
    std::vector<Label> labels_;
    std::vector<std::size_t> mpl_;
    std::vector<std::size_t> own_mpl_;
    std::size_t num_classes_ = 0;

    friend class EctsSession;
};

}  // namespace etsc
