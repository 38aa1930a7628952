#pragma once

#include <cstdint>
#include <string>
#include <vector>

#include "etsc/time_series.hpp"

namespace etsc {

enum class FoldKey {
    Class,     ///< stratify over class labels
    SourceId,  ///< stratify over LabeledInstance::source_id
};

FoldKey parse_fold_key(const std::string& name);
std::string to_string(FoldKey k);

struct FoldPlan {
    std::size_t k = 0;
    std::vector<std::size_t> assignments;  ///< instance index -> fold index
    FoldKey key = FoldKey::Class;
    std::vector<std::string> warnings;

    std::vector<std::size_t> test_indices(std::size_t fold) const;
    std::vector<std::size_t> train_indices(std::size_t fold) const;
};

/**
 * Stratified k-fold assignment. Each stratum is shuffled with the seed and
 * dealt round-robin, continuing the rotation from the previous stratum so
 * fold sizes stay balanced. Per-stratum counts across folds differ by at
 * most one. A stratum smaller than k only produces a warning.
 */
FoldPlan stratified_folds(const Dataset& d, std::size_t k, std::uint64_t seed,
                          FoldKey key = FoldKey::Class);

/**
 * Two-way stratified split; returns (train, holdout) index lists with about
 * holdout_fraction of every class in the holdout part.
 */
std::pair<std::vector<std::size_t>, std::vector<std::size_t>> stratified_split(
    const Dataset& d, double holdout_fraction, std::uint64_t seed);

}  // namespace etsc
