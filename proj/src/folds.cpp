#include "etsc/folds.hpp"

#include <algorithm>
#include <cmath>
#include <map>
#include <stdexcept>

#include "etsc/rng.hpp"

namespace etsc {
namespace {

std::map<std::string, std::vector<std::size_t>> strata(const Dataset& d, FoldKey key) {
    std::map<std::string, std::vector<std::size_t>> out;
    for (std::size_t i = 0; i < d.size(); ++i) {
        const auto& inst = d.instances[i];
        const std::string k = key == FoldKey::Class
                                  ? d.class_names.at(static_cast<std::size_t>(inst.label))
                                  : inst.source_id;
        out[k].push_back(i);
    }
    return out;
}

}  // namespace

FoldKey parse_fold_key(const std::string& name) {
    if (name == "class") return FoldKey::Class;
    if (name == "source" || name == "source_id") return FoldKey::SourceId;
    throw std::invalid_argument("unknown stratification key '" + name + "'");
}

std::string to_string(FoldKey k) { return k == FoldKey::Class ? "class" : "source_id"; }

std::vector<std::size_t> FoldPlan::test_indices(std::size_t fold) const {
    std::vector<std::size_t> out;
    for (std::size_t i = 0; i < assignments.size(); ++i) {
        if (assignments[i] == fold) out.push_back(i);
    }
    return out;
}

std::vector<std::size_t> FoldPlan::train_indices(std::size_t fold) const {
    std::vector<std::size_t> out;
    for (std::size_t i = 0; i < assignments.size(); ++i) {
        if (assignments[i] != fold) out.push_back(i);
    }
    return out;
}

FoldPlan stratified_folds(const Dataset& d, std::size_t k, std::uint64_t seed, FoldKey key) {
    if (k < 2) throw std::invalid_argument("fold count must be at least 2");
    FoldPlan plan;
    plan.k = k;
    plan.key = key;
    plan.assignments.assign(d.size(), 0);
    Rng rng(seed);
    std::size_t next = 0;
    for (auto& [name, members] : strata(d, key)) {
        if (members.size() < k) {
            plan.warnings.push_back("stratum '" + name + "' has " +
                                    std::to_string(members.size()) + " instances for " +
                                    std::to_string(k) + " folds");
        }
        rng.shuffle(std::span<std::size_t>(members));
        for (std::size_t idx : members) {
            plan.assignments[idx] = next;
            next = (next + 1) % k;
        }
    }
    return plan;
}

std::pair<std::vector<std::size_t>, std::vector<std::size_t>> stratified_split(
    const Dataset& d, double holdout_fraction, std::uint64_t seed) {
    if (!(holdout_fraction > 0.0 && holdout_fraction < 1.0)) {
        throw std::invalid_argument("holdout fraction must lie in (0, 1)");
    }
    Rng rng(seed);
    std::vector<std::size_t> train, holdout;
    for (auto& [name, members] : strata(d, FoldKey::Class)) {
        rng.shuffle(std::span<std::size_t>(members));
        auto n_hold = static_cast<std::size_t>(
            std::lround(holdout_fraction * static_cast<double>(members.size())));
        // Keep at least one training instance per class.
        if (n_hold >= members.size()) n_hold = members.size() - 1;
        for (std::size_t j = 0; j < members.size(); ++j) {
            (j < n_hold ? holdout : train).push_back(members[j]);
        }
    }
    std::sort(train.begin(), train.end());
    std::sort(holdout.begin(), holdout.end());
    return {train, holdout};
}

}  // namespace etsc
