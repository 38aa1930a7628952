#include "etsc/bench/registry.hpp"

#include <set>
#include <stdexcept>

namespace etsc {
namespace {

using nlohmann::json;

void check_keys(const json& params, const std::string& who, const std::set<std::string>& allowed) {
    if (params.is_null()) return;
    if (!params.is_object()) throw std::invalid_argument(who + " parameters must be an object");
    for (const auto& [key, value] : params.items()) {
        if (!allowed.count(key)) {
            std::string list;
            for (const auto& a : allowed) list += (list.empty() ? "" : ", ") + a;
            throw std::invalid_argument("unknown " + who + " parameter '" + key +
                                        "' (expected one of: " + list + ")");
        }
    }
}

template <typename T>
void read(const json& params, const char* key, T& out) {
    if (params.is_object() && params.contains(key)) out = params.at(key).get<T>();
}

void read_words(const json& params, WordOptions& w) {
    read(params, "word_length", w.word_length);
    read(params, "alphabet_size", w.alphabet_size);
    read(params, "windows", w.window_lengths);
}

}  // namespace

MultivariateMode parse_multivariate_mode(const std::string& name) {
    if (name == "auto") return MultivariateMode::Auto;
    if (name == "vote") return MultivariateMode::Vote;
    throw std::invalid_argument("unknown multivariate mode '" + name + "'");
}

EdscOptions edsc_options(const json& params) {
    check_keys(params, "edsc", {"min_len", "max_len", "k", "stride"});
    EdscOptions o;
    read(params, "min_len", o.min_len);
    read(params, "max_len", o.max_len);
    read(params, "k", o.k);
    read(params, "stride", o.stride);
    return o;
}

EctsOptions ects_options(const json& params) {
    check_keys(params, "ects", {"support"});
    EctsOptions o;
    read(params, "support", o.support);
    return o;
}

TeaserOptions teaser_options(const json& params, std::uint64_t seed) {
    check_keys(params, "teaser",
               {"S", "znorm", "nu", "feature", "reset_on_reject", "v_grid", "cv_folds",
                "word_length", "alphabet_size", "windows"});
    TeaserOptions o;
    o.seed = seed;
    read(params, "S", o.S);
    read(params, "znorm", o.znorm);
    read(params, "nu", o.nu);
    read(params, "reset_on_reject", o.reset_on_reject);
    read(params, "v_grid", o.v_grid);
    read(params, "cv_folds", o.cv_folds);
    if (params.is_object() && params.contains("feature")) {
        o.feature = parse_master_feature(params.at("feature").get<std::string>());
    }
    read_words(params, o.words);
    return o;
}

EcecOptions ecec_options(const json& params, std::uint64_t seed) {
    check_keys(params, "ecec",
               {"N", "alpha", "cv_folds", "word_length", "alphabet_size", "windows"});
    EcecOptions o;
    o.seed = seed;
    read(params, "N", o.N);
    read(params, "alpha", o.alpha);
    read(params, "cv_folds", o.cv_folds);
    read_words(params, o.words);
    return o;
}

EconomyOptions economy_options(const json& params, std::uint64_t seed) {
    check_keys(params, "economy-k", {"k", "lambda", "cost", "misclass_cost", "var_smoothing"});
    EconomyOptions o;
    o.seed = seed;
    if (params.is_object() && params.contains("k")) {
        const auto& k = params.at("k");
        o.k_grid = k.is_array() ? k.get<std::vector<std::size_t>>()
                                : std::vector<std::size_t>{k.get<std::size_t>()};
    }
    read(params, "lambda", o.lambda);
    read(params, "cost", o.time_cost);
    read(params, "misclass_cost", o.misclass_cost);
    read(params, "var_smoothing", o.var_smoothing);
    return o;
}

FixedPrefixOptions fixed_prefix_options(const json& params, std::uint64_t seed) {
    check_keys(params, "fixed-prefix", {"fractions", "holdout", "learner"});
    FixedPrefixOptions o;
    o.seed = seed;
    read(params, "fractions", o.fractions);
    read(params, "holdout", o.holdout);
    read(params, "learner", o.learner);
    return o;
}

AlgorithmRegistry AlgorithmRegistry::builtin() {
    AlgorithmRegistry r;
    r.add("edsc", {[](const Dataset& d, const json& p, std::uint64_t) {
                       return std::make_unique<EdscModel>(EdscModel::train(d, edsc_options(p)));
                   },
                   true});
    r.add("ects", {[](const Dataset& d, const json& p, std::uint64_t) {
                       return std::make_unique<EctsModel>(EctsModel::train(d, ects_options(p)));
                   },
                   true});
    r.add("teaser", {[](const Dataset& d, const json& p, std::uint64_t seed) {
                         return std::make_unique<TeaserModel>(
                             TeaserModel::train(d, teaser_options(p, seed)));
                     },
                     true});
    r.add("teaser-z", {[](const Dataset& d, const json& p, std::uint64_t seed) {
                           auto o = teaser_options(p, seed);
                           o.znorm = true;
                           return std::make_unique<TeaserModel>(TeaserModel::train(d, o));
                       },
                       true});
    r.add("ecec", {[](const Dataset& d, const json& p, std::uint64_t seed) {
                       return std::make_unique<EcecModel>(EcecModel::train(d, ecec_options(p, seed)));
                   },
                   true});
    r.add("economy-k", {[](const Dataset& d, const json& p, std::uint64_t seed) {
                            return std::make_unique<EconomyKModel>(
                                EconomyKModel::train(d, economy_options(p, seed)));
                        },
                        false});
    r.add("fixed-prefix", {[](const Dataset& d, const json& p, std::uint64_t seed) {
                               return std::make_unique<FixedPrefixModel>(
                                   FixedPrefixModel::train(d, fixed_prefix_options(p, seed)));
                           },
                           false});
    return r;
}

void AlgorithmRegistry::add(const std::string& id, AlgorithmEntry entry) {
    entries_[id] = std::move(entry);
}

std::vector<std::string> AlgorithmRegistry::ids() const {
    std::vector<std::string> out;
    for (const auto& [id, e] : entries_) out.push_back(id);
    return out;
}

std::unique_ptr<EarlyClassifier> AlgorithmRegistry::train(const std::string& id, const Dataset& d,
                                                          const json& params, std::uint64_t seed,
                                                          MultivariateMode mode) const {
    const auto it = entries_.find(id);
    if (it == entries_.end()) throw std::invalid_argument("unknown algorithm '" + id + "'");
    const auto& entry = it->second;
    const bool vote = d.dims() > 1 && (entry.univariate_only || mode == MultivariateMode::Vote);
    if (!vote) return entry.trainer(d, params, seed);
    auto voting = VotingClassifier::train(d, [&](const Dataset& var) {
        return entry.trainer(var, params, seed);
    });
    return std::make_unique<VotingClassifier>(std::move(voting));
}

}  // namespace etsc
