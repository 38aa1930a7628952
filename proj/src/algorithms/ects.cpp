#include "etsc/algorithms/ects.hpp"

#include <algorithm>
#include <limits>
#include <stdexcept>

#include "etsc/error.hpp"
#include "etsc/learners/nearest_neighbor.hpp"

namespace etsc {
namespace {

Matrix univariate_matrix(const Dataset& d, const char* who) {
    if (d.dims() != 1) throw DataError(std::string(who) + " needs univariate data");
    if (!d.equal_length()) throw DataError(std::string(who) + " needs equal-length series");
    Matrix m;
    for (const auto& inst : d.instances) m.append_row(inst.series.row(0));
    return m;
}

bool contains(const std::vector<std::size_t>& sorted, std::size_t v) {
    return std::binary_search(sorted.begin(), sorted.end(), v);
}

bool cluster_ok(const NnTables& tables, std::size_t t, const std::vector<std::size_t>& members,
                const std::vector<std::size_t>& final_rnn) {
    for (std::size_t m : members) {
        if (!contains(members, tables.nearest(t, m))) return false;
    }
    return cluster_rnn(tables, t, members) == final_rnn;
}

}  // namespace

std::vector<std::size_t> NnTables::rnn(std::size_t t, std::size_t i) const {
    std::vector<std::size_t> out;
    for (std::size_t j = 0; j < size; ++j) {
        if (nearest(t, j) == i) out.push_back(j);
    }
    return out;
}

NnTables build_nn_tables(const Matrix& x) {
    const std::size_t n = x.rows();
    const std::size_t T = x.cols();
    if (n < 2) throw std::invalid_argument("nearest-neighbour tables need at least two instances");
    NnTables tab;
    tab.size = n;
    tab.length = T;
    tab.nn.assign(n * T, 0);
    // Cumulative squared distance between every pair, grown one column at a time.
    std::vector<double> acc(n * n, 0.0);
    for (std::size_t t = 1; t <= T; ++t) {
        for (std::size_t i = 0; i < n; ++i) {
            for (std::size_t j = i + 1; j < n; ++j) {
                const double d = x(i, t - 1) - x(j, t - 1);
                acc[i * n + j] += d * d;
                acc[j * n + i] = acc[i * n + j];
            }
        }
        for (std::size_t i = 0; i < n; ++i) {
            std::size_t best = n;
            double best_d = std::numeric_limits<double>::infinity();
            for (std::size_t j = 0; j < n; ++j) {
                if (j == i) continue;
                if (acc[i * n + j] < best_d) {
                    best_d = acc[i * n + j];
                    best = j;
                }
            }
            tab.nn[(t - 1) * n + i] = best;
        }
    }
    return tab;
}

NnTables build_nn_tables(const Dataset& d) { return build_nn_tables(univariate_matrix(d, "ECTS")); }

std::size_t mpl_nn(const NnTables& tables, std::size_t i) {
    const auto final_rnn = tables.rnn(tables.length, i);
    std::size_t t = tables.length;
    while (t > 1 && tables.rnn(t - 1, i) == final_rnn) --t;
    return t;
}

std::vector<std::size_t> cluster_rnn(const NnTables& tables, std::size_t t,
                                     const std::vector<std::size_t>& members) {
    std::vector<std::size_t> out;
    for (std::size_t j = 0; j < tables.size; ++j) {
        if (contains(members, j)) continue;
        const std::size_t nn = tables.nearest(t, j);
        bool all = true;
        for (std::size_t m : members) all = all && nn == m;
        if (all) out.push_back(j);
    }
    return out;
}

std::optional<std::size_t> cluster_mpl(const NnTables& tables,
                                       const std::vector<std::size_t>& members) {
    const std::size_t T = tables.length;
    const auto final_rnn = cluster_rnn(tables, T, members);
    if (!cluster_ok(tables, T, members, final_rnn)) return std::nullopt;
    std::size_t t = T;
    while (t > 1 && cluster_ok(tables, t - 1, members, final_rnn)) --t;
    return t;
}

std::vector<std::size_t> cluster_and_refine(const Matrix& x, std::span<const Label> labels,
                                            const NnTables& tables) {
    const std::size_t n = x.rows();
    std::vector<std::size_t> final_mpl(n);
    for (std::size_t i = 0; i < n; ++i) final_mpl[i] = mpl_nn(tables, i);

    std::vector<double> dist(n * n, 0.0);
    for (std::size_t i = 0; i < n; ++i) {
        for (std::size_t j = i + 1; j < n; ++j) {
            dist[i * n + j] = dist[j * n + i] = squared_distance(x.row(i), x.row(j));
        }
    }

    struct Cluster {
        std::vector<std::size_t> members;  // ascending
        Label label;
        bool active = true;
        bool frozen = false;
    };
    std::vector<Cluster> clusters;
    for (std::size_t i = 0; i < n; ++i) clusters.push_back({{i}, labels[i]});
    // Single-linkage distance between clusters, indexed by cluster id pairs.
    std::vector<std::vector<double>> link(n, std::vector<double>(n));
    for (std::size_t a = 0; a < n; ++a) {
        for (std::size_t b = 0; b < n; ++b) link[a][b] = dist[a * n + b];
    }

    std::size_t active = n;
    while (active > 1) {
        std::size_t best_a = 0, best_b = 0;
        double best = std::numeric_limits<double>::infinity();
        bool found = false;
        for (std::size_t a = 0; a < clusters.size(); ++a) {
            if (!clusters[a].active || clusters[a].frozen) continue;
            for (std::size_t b = a + 1; b < clusters.size(); ++b) {
                if (!clusters[b].active || clusters[b].frozen) continue;
                if (!found || link[a][b] < best) {
                    best = link[a][b];
                    best_a = a;
                    best_b = b;
                    found = true;
                }
            }
        }
        if (!found) break;
        if (clusters[best_a].label != clusters[best_b].label) {
            clusters[best_a].frozen = clusters[best_b].frozen = true;
            continue;
        }
        Cluster merged;
        merged.label = clusters[best_a].label;
        std::merge(clusters[best_a].members.begin(), clusters[best_a].members.end(),
                   clusters[best_b].members.begin(), clusters[best_b].members.end(),
                   std::back_inserter(merged.members));
        clusters[best_a].active = clusters[best_b].active = false;
        --active;

        const std::size_t id = clusters.size();
        for (auto& row : link) row.push_back(0.0);
        link.emplace_back(id + 1, 0.0);
        for (std::size_t c = 0; c < id; ++c) {
            link[id][c] = link[c][id] = std::min(link[best_a][c], link[best_b][c]);
        }
        clusters.push_back(std::move(merged));

        if (const auto m = cluster_mpl(tables, clusters[id].members)) {
            for (std::size_t i : clusters[id].members) final_mpl[i] = std::min(final_mpl[i], *m);
        }
    }
    return final_mpl;
}

EctsModel EctsModel::train(const Dataset& d, const EctsOptions& options) {
    Matrix x = univariate_matrix(d, "ECTS");
    const auto tables = build_nn_tables(x);
    const auto labels = d.labels();
    EctsModel m;
    m.own_mpl_.resize(x.rows());
    for (std::size_t i = 0; i < x.rows(); ++i) m.own_mpl_[i] = mpl_nn(tables, i);
    m.mpl_ = cluster_and_refine(x, labels, tables);
    if (options.support > 0) {
        for (std::size_t i = 0; i < x.rows(); ++i) {
            if (tables.rnn(tables.length, i).size() < options.support) m.mpl_[i] = tables.length;
        }
    }
    m.series_ = std::move(x);
    m.labels_ = labels;
    m.num_classes_ = d.num_classes();
    return m;
}

EctsModel EctsModel::from_parts(Matrix series, std::vector<Label> labels,
                                std::vector<std::size_t> mpl, std::size_t num_classes) {
    if (series.rows() != labels.size() || series.rows() != mpl.size()) {
        throw std::invalid_argument("ECTS parts differ in instance count");
    }
    EctsModel m;
    m.series_ = std::move(series);
    m.labels_ = std::move(labels);
    m.own_mpl_ = mpl;
    m.mpl_ = std::move(mpl);
    m.num_classes_ = num_classes;
    return m;
}

Decision EctsModel::decide(const TimeSeries& prefix) const {
    const auto s = prefix.row(0);
    const std::size_t nn = nn1(s, series_);
    if (s.size() >= series_.cols() || s.size() >= mpl_[nn]) return Decision::emit(labels_[nn]);
    return Decision::wait();
}

class EctsSession final : public DecisionSession {
public:
    explicit EctsSession(const EctsModel& m) : model_(m), acc_(m.series_.rows(), 0.0) {}

    Decision observe(const TimeSeries& prefix) override {
        const auto s = prefix.row(0);
        const Matrix& x = model_.series_;
        for (std::size_t t = seen_; t < s.size(); ++t) {
            for (std::size_t i = 0; i < x.rows(); ++i) {
                const double d = s[t] - x(i, t);
                acc_[i] += d * d;
            }
        }
        seen_ = s.size();
        const auto nn = static_cast<std::size_t>(std::min_element(acc_.begin(), acc_.end()) -
                                                 acc_.begin());
        if (s.size() >= x.cols() || s.size() >= model_.mpl_[nn]) {
            return Decision::emit(model_.labels_[nn]);
        }
        return Decision::wait();
    }

private:
    const EctsModel& model_;
    std::vector<double> acc_;
    std::size_t seen_ = 0;
};

std::unique_ptr<DecisionSession> EctsModel::open_session() const {
    return std::make_unique<EctsSession>(*this);
}

}  // namespace etsc
