#pragma once

#include <cstdint>
#include <functional>
#include <map>
#include <memory>
#include <string>
#include <vector>

#include <json.hpp>

#include "etsc/algorithms/ecec.hpp"
#include "etsc/algorithms/economy_k.hpp"
#include "etsc/algorithms/ects.hpp"
#include "etsc/algorithms/edsc.hpp"
#include "etsc/algorithms/ensemble.hpp"
#include "etsc/algorithms/teaser.hpp"

namespace etsc {

enum class MultivariateMode {
    Auto,  ///< vote for univariate-only algorithms, flatten for the others
    Vote,  ///< always one voter per variable
};

MultivariateMode parse_multivariate_mode(const std::string& name);

// Parameter objects to option structs. Unknown keys throw std::invalid_argument.
EdscOptions edsc_options(const nlohmann::json& params);
EctsOptions ects_options(const nlohmann::json& params);
TeaserOptions teaser_options(const nlohmann::json& params, std::uint64_t seed);
EcecOptions ecec_options(const nlohmann::json& params, std::uint64_t seed);
EconomyOptions economy_options(const nlohmann::json& params, std::uint64_t seed);
FixedPrefixOptions fixed_prefix_options(const nlohmann::json& params, std::uint64_t seed);

using AlgorithmTrainer = std::function<std::unique_ptr<EarlyClassifier>(
    const Dataset& train, const nlohmann::json& params, std::uint64_t seed)>;

struct AlgorithmEntry {
    AlgorithmTrainer trainer;
    /// Multivariate data is split into one voter per variable.
    bool univariate_only = true;
};

class AlgorithmRegistry {
public:
    /// edsc, ects, teaser, teaser-z, ecec, economy-k, fixed-prefix.
    static AlgorithmRegistry builtin();

    void add(const std::string& id, AlgorithmEntry entry);
    bool contains(const std::string& id) const { return entries_.count(id) > 0; }
    std::vector<std::string> ids() const;

    /// Trains id on d, wrapping it in a voting ensemble when needed.
    std::unique_ptr<EarlyClassifier> train(const std::string& id, const Dataset& d,
                                           const nlohmann::json& params, std::uint64_t seed,
                                           MultivariateMode mode = MultivariateMode::Auto) const;

private:
    std::map<std::string, AlgorithmEntry> entries_;
};

}  // namespace etsc
