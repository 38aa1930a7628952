#include "etsc/algorithms/economy_k.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <optional>
#include <stdexcept>

#include "etsc/error.hpp"
#include "etsc/learners/cross_validation.hpp"
#include "etsc/learners/kmeans.hpp"
#include "etsc/learners/naive_bayes.hpp"

namespace etsc {
namespace {

std::vector<double> truncated(std::span<const double> full, std::size_t dims, std::size_t length,
                              std::size_t t) {
    std::vector<double> out;
    out.reserve(dims * t);
    for (std::size_t d = 0; d < dims; ++d) {
        out.insert(out.end(), full.begin() + static_cast<std::ptrdiff_t>(d * length),
                   full.begin() + static_cast<std::ptrdiff_t>(d * length + t));
    }
    return out;
}

}  // namespace

double stable_sigmoid(double x) {
    if (x >= 0.0) return 1.0 / (1.0 + std::exp(-x));
    const double e = std::exp(x);
    return e / (1.0 + e);
}

std::vector<double> memberships_from_distances(std::span<const double> distances, double lambda) {
    if (distances.empty()) throw std::invalid_argument("memberships need at least one cluster");
    double mean = 0.0;
    for (double d : distances) mean += d;
    mean /= static_cast<double>(distances.size());
    std::vector<double> s(distances.size());
    double total = 0.0;
    for (std::size_t k = 0; k < s.size(); ++k) {
        s[k] = stable_sigmoid(lambda * (mean - distances[k]));
        total += s[k];
    }
    for (double& v : s) v /= total;
    return s;
}

EconomyKModel EconomyKModel::from_parts(EconomyParts parts) {
    const std::size_t K = parts.centroids.rows();
    const std::size_t C = parts.num_classes;
    if (K == 0 || parts.length == 0 || C == 0) throw std::invalid_argument("empty ECONOMY-K model");
    if (parts.centroids.cols() != parts.dims * parts.length) {
        throw std::invalid_argument("centroid size does not match dims * length");
    }
    if (parts.misclass_cost.empty()) {
        parts.misclass_cost.assign(C * C, 1.0);
        for (std::size_t c = 0; c < C; ++c) parts.misclass_cost[c * C + c] = 0.0;
    }
    if (parts.misclass_cost.size() != C * C || parts.prior.size() != K ||
        parts.confusion.size() != parts.length) {
        throw std::invalid_argument("inconsistent ECONOMY-K parts");
    }
    if (parts.classifier.empty()) {
        parts.classifier.assign(parts.length, std::vector<std::shared_ptr<const ProbClassifier>>(K));
    }
    if (parts.fallback.empty()) parts.fallback.assign(parts.length, std::vector<Label>(K, 0));
    EconomyKModel m;
    m.p_ = std::move(parts);
    m.precompute();
    return m;
}

void EconomyKModel::precompute() {
    const std::size_t K = p_.centroids.rows();
    const std::size_t C = p_.num_classes;
    misclass_.assign(p_.length * K, 0.0);
    for (std::size_t t = 0; t < p_.length; ++t) {
        for (std::size_t k = 0; k < K; ++k) {
            double e = 0.0;
            for (std::size_t y = 0; y < C; ++y) {
                double inner = 0.0;
                for (std::size_t yh = 0; yh < C; ++yh) {
                    inner += p_.confusion[t][k][y * C + yh] * p_.misclass_cost[yh * C + y];
                }
                e += p_.prior[k][y] * inner;
            }
            misclass_[t * K + k] = e;
        }
    }
}

std::vector<double> EconomyKModel::memberships(const TimeSeries& prefix) const {
    const std::size_t t = prefix.length();
    if (t == 0 || t > p_.length) throw std::invalid_argument("prefix length out of range");
    const auto x = flatten_prefix(prefix, t);
    std::vector<double> dist(p_.centroids.rows());
    for (std::size_t k = 0; k < dist.size(); ++k) {
        const auto c = truncated(p_.centroids.row(k), p_.dims, p_.length, t);
        dist[k] = std::sqrt(squared_distance(x, c));
    }
    return memberships_from_distances(dist, p_.lambda);
}

std::vector<double> EconomyKModel::expected_costs(std::span<const double> membership,
                                                  std::size_t t) const {
    const std::size_t K = p_.centroids.rows();
    std::vector<double> f(p_.length - t + 1);
    for (std::size_t tau = 0; tau < f.size(); ++tau) {
        double e = 0.0;
        for (std::size_t k = 0; k < K; ++k) e += membership[k] * misclass_[(t + tau - 1) * K + k];
        f[tau] = e + p_.time_cost * static_cast<double>(t + tau);
    }
    return f;
}

double EconomyKModel::expected_cost(const TimeSeries& prefix, std::size_t tau) const {
    const std::size_t t = prefix.length();
    if (tau > p_.length - t) throw std::out_of_range("tau beyond the series length");
    return expected_costs(memberships(prefix), t)[tau];
}

Label EconomyKModel::predict_now(const TimeSeries& prefix, std::span<const double> membership) const {
    const std::size_t t = prefix.length();
    const std::size_t k = argmax(membership);
    const auto& h = p_.classifier[t - 1][k];
    if (!h) return p_.fallback[t - 1][k];
    return h->predict(flatten_prefix(prefix, t));
}

Decision EconomyKModel::decide(const TimeSeries& prefix) const {
    const std::size_t t = prefix.length();
    const auto mem = memberships(prefix);
    if (t < p_.length) {
        const auto f = expected_costs(mem, t);
        // Strict comparison keeps tau = 0 on ties.
        std::size_t best = 0;
        for (std::size_t tau = 1; tau < f.size(); ++tau) {
            if (f[tau] < f[best]) best = tau;
        }
        if (best != 0) return Decision::wait();
    }
    return Decision::emit(predict_now(prefix, mem));
}

namespace {

class EconomySession final : public DecisionSession {
public:
    explicit EconomySession(const EconomyKModel& m) : model_(m) {}
    Decision observe(const TimeSeries& prefix) override { return model_.decide(prefix); }

private:
    const EconomyKModel& model_;
};

}  // namespace

std::unique_ptr<DecisionSession> EconomyKModel::open_session() const {
    return std::make_unique<EconomySession>(*this);
}

EconomyKModel EconomyKModel::train_k(const Dataset& d, std::size_t K, const EconomyOptions& options) {
    if (!d.equal_length()) throw DataError("ECONOMY-K needs equal-length series");
    if (d.empty()) throw DataError("ECONOMY-K needs training data");
    const std::size_t T = d.max_length();
    const std::size_t D = d.dims();
    const std::size_t C = d.num_classes();
    const std::size_t n = d.size();
    const auto y = d.labels();

    const Matrix full = prefix_matrix(d, T);
    const KMeansModel km = kmeans(full, K, options.seed);

    EconomyParts p;
    p.length = T;
    p.dims = D;
    p.num_classes = C;
    p.centroids = km.centroids;
    p.lambda = options.lambda;
    p.time_cost = options.time_cost;
    p.misclass_cost = options.misclass_cost;

    std::vector<std::vector<std::size_t>> members(K);
    for (std::size_t i = 0; i < n; ++i) members[km.assignments[i]].push_back(i);
    p.prior.assign(K, std::vector<double>(C, 0.0));
    std::vector<Label> majority(K, 0);
    for (std::size_t k = 0; k < K; ++k) {
        std::vector<double> counts(C, 0.0);
        for (std::size_t i : members[k]) counts[static_cast<std::size_t>(y[i])] += 1.0;
        majority[k] = static_cast<Label>(argmax(counts));
        for (std::size_t c = 0; c < C; ++c) {
            p.prior[k][c] = (counts[c] + 1.0) / (static_cast<double>(members[k].size()) +
                                                 static_cast<double>(C));
        }
    }

    p.confusion.assign(T, std::vector<std::vector<double>>(K));
    p.classifier.assign(T, std::vector<std::shared_ptr<const ProbClassifier>>(K));
    p.fallback.assign(T, majority);
    for (std::size_t t = 1; t <= T; ++t) {
        const Matrix x = prefix_matrix(d, t);
        for (std::size_t k = 0; k < K; ++k) {
            Matrix xk;
            std::vector<Label> yk;
            for (std::size_t i : members[k]) {
                xk.append_row(x.row(i));
                yk.push_back(y[i]);
            }
            std::vector<double> present(C, 0.0);
            for (Label l : yk) present[static_cast<std::size_t>(l)] = 1.0;
            double classes = 0.0;
            for (double v : present) classes += v;
            std::shared_ptr<const ProbClassifier> h;
            if (classes >= 2.0) {
                h = std::make_shared<GaussianNB>(GaussianNB::fit(xk, yk, C, options.var_smoothing));
            }
            std::vector<double> counts(C * C, 0.0), row_total(C, 0.0);
            for (std::size_t r = 0; r < yk.size(); ++r) {
                const Label pred = h ? h->predict(xk.row(r)) : majority[k];
                counts[static_cast<std::size_t>(yk[r]) * C + static_cast<std::size_t>(pred)] += 1.0;
                row_total[static_cast<std::size_t>(yk[r])] += 1.0;
            }
            auto& conf = p.confusion[t - 1][k];
            conf.assign(C * C, 0.0);
            for (std::size_t a = 0; a < C; ++a) {
                for (std::size_t b = 0; b < C; ++b) {
                    conf[a * C + b] = (counts[a * C + b] + 1.0) / (row_total[a] + static_cast<double>(C));
                }
            }
            p.classifier[t - 1][k] = std::move(h);
        }
    }
    return from_parts(std::move(p));
}

EconomyKModel EconomyKModel::train(const Dataset& d, const EconomyOptions& options) {
    if (options.k_grid.empty()) throw std::invalid_argument("empty cluster-count grid");
    std::optional<EconomyKModel> best;
    double best_hm = -1.0;
    std::vector<double> scores;
    for (std::size_t K : options.k_grid) {
        std::optional<EconomyKModel> m;
        try {
            m = train_k(d, K, options);
        } catch (const std::invalid_argument&) {
            scores.push_back(0.0);  // more clusters than distinct series
            continue;
        }
        std::size_t right = 0;
        double earliness = 0.0;
        for (const auto& inst : d.instances) {
            const auto r = classify_stream(*m, inst.series);
            right += r.label == inst.label ? 1 : 0;
            earliness += static_cast<double>(r.trigger) / static_cast<double>(m->series_length());
        }
        const double n = static_cast<double>(d.size());
        const double hm = harmonic_mean(static_cast<double>(right) / n, earliness / n);
        scores.push_back(hm);
        if (hm > best_hm) {
            best_hm = hm;
            best = std::move(m);
        }
    }
    if (!best) throw DataError("ECONOMY-K could not fit any cluster count");
    best->k_scores_ = std::move(scores);
    return std::move(*best);
}

}  // namespace etsc
