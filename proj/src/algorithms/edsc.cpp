#include "etsc/algorithms/edsc.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <numeric>
#include <stdexcept>

#include "etsc/error.hpp"

namespace etsc {
namespace {

double window_sq(std::span<const double> sub, std::span<const double> s, std::size_t off) {
    double acc = 0.0;
    for (std::size_t i = 0; i < sub.size(); ++i) {
        const double d = sub[i] - s[off + i];
        acc += d * d;
    }
    return acc;
}

Label majority_label(const Dataset& d) {
    const auto counts = d.class_counts();
    return static_cast<Label>(std::max_element(counts.begin(), counts.end()) - counts.begin());
}

}  // namespace

double min_dist(std::span<const double> sub, std::span<const double> s) {
    if (sub.empty() || sub.size() > s.size()) {
        throw std::invalid_argument("subseries must be non-empty and no longer than the series");
    }
    double best = std::numeric_limits<double>::infinity();
    for (std::size_t off = 0; off + sub.size() <= s.size(); ++off) {
        best = std::min(best, window_sq(sub, s, off));
    }
    return std::sqrt(best);
}

std::optional<std::size_t> first_match_end(std::span<const double> sub,
                                           std::span<const double> s, double delta) {
    for (std::size_t off = 0; off + sub.size() <= s.size(); ++off) {
        if (std::sqrt(window_sq(sub, s, off)) <= delta) return off + sub.size();
    }
    return std::nullopt;
}

double che_threshold_from_moments(double mean, double var, double k) {
    return std::max(mean - k * var, 0.0);
}

double che_threshold(std::span<const double> distances, double k) {
    if (distances.empty()) throw std::invalid_argument("threshold needs at least one distance");
    const double n = static_cast<double>(distances.size());
    const double mean = std::accumulate(distances.begin(), distances.end(), 0.0) / n;
    double var = 0.0;
    for (double d : distances) var += (d - mean) * (d - mean);
    return che_threshold_from_moments(mean, var / n, k);
}

double earliness_weight(std::size_t t_match, std::size_t length) {
    return 1.0 - static_cast<double>(t_match - 1) / static_cast<double>(length);
}

double utility_score(double precision, double weighted_recall) {
    const double denom = precision + weighted_recall;
    return denom > 0.0 ? 2.0 * precision * weighted_recall / denom : 0.0;
}

double utility(const Shapelet& sh, const Dataset& d) {
    std::size_t matched = 0, target_matched = 0, targets = 0;
    double weighted = 0.0;
    for (const auto& inst : d.instances) {
        const auto s = inst.series.row(0);
        const bool target = inst.label == sh.label;
        if (target) ++targets;
        const auto end = first_match_end(sh.values, s, sh.threshold);
        if (!end) continue;
        ++matched;
        if (target) {
            ++target_matched;
            weighted += earliness_weight(*end, s.size());
        }
    }
    if (matched == 0 || targets == 0) return 0.0;
    const double p = static_cast<double>(target_matched) / static_cast<double>(matched);
    return utility_score(p, weighted / static_cast<double>(targets));
}

std::vector<std::size_t> select_pool(std::span<const double> utilities,
                                     const std::vector<std::vector<std::size_t>>& covers,
                                     std::size_t num_instances) {
    std::vector<std::size_t> order(utilities.size());
    std::iota(order.begin(), order.end(), 0);
    std::stable_sort(order.begin(), order.end(),
                     [&](std::size_t a, std::size_t b) { return utilities[a] > utilities[b]; });
    std::vector<bool> covered(num_instances, false);
    std::size_t remaining = num_instances;
    std::vector<std::size_t> pool;
    for (std::size_t c : order) {
        if (remaining == 0) break;
        if (utilities[c] <= 0.0) break;
        bool fresh = false;
        for (std::size_t i : covers[c]) fresh = fresh || !covered[i];
        if (!fresh) continue;
        pool.push_back(c);
        for (std::size_t i : covers[c]) {
            if (!covered[i]) {
                covered[i] = true;
                --remaining;
            }
        }
    }
    return pool;
}

EdscModel EdscModel::train(const Dataset& d, const EdscOptions& options) {
    if (d.dims() != 1) throw DataError("EDSC needs univariate data");
    if (!d.equal_length()) throw DataError("EDSC needs equal-length series");
    std::size_t present = 0;
    for (auto c : d.class_counts()) present += c > 0 ? 1 : 0;
    if (present < 2) throw DataError("EDSC needs at least two classes");

    const std::size_t n = d.size();
    const std::size_t T = d.max_length();
    std::size_t max_len = options.max_len == 0 ? T / 2 : options.max_len;
    max_len = std::clamp<std::size_t>(max_len, 1, T);
    const std::size_t min_len = std::clamp<std::size_t>(options.min_len, 1, max_len);
    const std::size_t stride = std::max<std::size_t>(1, options.stride);

    std::vector<std::span<const double>> x(n);
    std::vector<Label> y(n);
    std::vector<std::size_t> class_size(d.num_classes(), 0);
    for (std::size_t j = 0; j < n; ++j) {
        x[j] = d.instances[j].series.row(0);
        y[j] = d.instances[j].label;
        ++class_size[static_cast<std::size_t>(y[j])];
    }

    struct Candidate {
        std::size_t instance, offset, length;
        double threshold;
    };
    std::vector<Candidate> cands;
    std::vector<double> utilities;
    std::vector<std::vector<std::size_t>> covers;

    // prof[j * T + o] holds the squared distance of the growing subseries
    // to the window of instance j starting at o.
    std::vector<double> prof(n * T);
    std::vector<double> mins(n), nontarget;
    std::vector<std::size_t> hits;
    for (std::size_t i = 0; i < n; ++i) {
        for (std::size_t o = 0; o + min_len <= T; o += stride) {
            std::fill(prof.begin(), prof.end(), 0.0);
            const std::size_t top = std::min(max_len, T - o);
            for (std::size_t l = 1; l <= top; ++l) {
                const double v = x[i][o + l - 1];
                const std::size_t valid = T - l + 1;
                for (std::size_t j = 0; j < n; ++j) {
                    double* p = prof.data() + j * T;
                    const double* s = x[j].data() + (l - 1);
                    for (std::size_t a = 0; a < valid; ++a) {
                        const double diff = v - s[a];
                        p[a] += diff * diff;
                    }
                }
                if (l < min_len) continue;

                nontarget.clear();
                for (std::size_t j = 0; j < n; ++j) {
                    const double* p = prof.data() + j * T;
                    mins[j] = std::sqrt(*std::min_element(p, p + valid));
                    if (y[j] != y[i]) nontarget.push_back(mins[j]);
                }
                const double delta = che_threshold(nontarget, options.k);

                std::size_t matched = 0;
                double weighted = 0.0;
                hits.clear();
                for (std::size_t j = 0; j < n; ++j) {
                    if (mins[j] > delta) continue;
                    ++matched;
                    if (y[j] != y[i]) continue;
                    const double* p = prof.data() + j * T;
                    std::size_t a = 0;
                    while (std::sqrt(p[a]) > delta) ++a;
                    weighted += earliness_weight(a + l, T);
                    hits.push_back(j);
                }
                const double precision =
                    matched ? static_cast<double>(hits.size()) / static_cast<double>(matched) : 0.0;
                const double wr = weighted / static_cast<double>(class_size[y[i]]);
                const double u = utility_score(precision, wr);
                if (u <= 0.0) continue;
                cands.push_back({i, o, l, delta});
                utilities.push_back(u);
                covers.push_back(hits);
            }
        }
    }

    EdscModel m;
    m.length_ = T;
    m.num_classes_ = d.num_classes();
    m.majority_ = majority_label(d);
    m.candidates_ = cands.size();
    for (std::size_t c : select_pool(utilities, covers, n)) {
        const auto& cd = cands[c];
        Shapelet sh;
        sh.values.assign(x[cd.instance].begin() + static_cast<std::ptrdiff_t>(cd.offset),
                         x[cd.instance].begin() + static_cast<std::ptrdiff_t>(cd.offset + cd.length));
        sh.threshold = cd.threshold;
        sh.label = y[cd.instance];
        sh.utility = utilities[c];
        sh.instance = cd.instance;
        sh.offset = cd.offset;
        m.pool_.push_back(std::move(sh));
    }
    return m;
}

EdscModel EdscModel::from_pool(std::vector<Shapelet> pool, std::size_t length,
                               std::size_t num_classes, Label majority) {
    EdscModel m;
    m.pool_ = std::move(pool);
    m.length_ = length;
    m.num_classes_ = num_classes;
    m.majority_ = majority;
    return m;
}

Decision EdscModel::decide(const TimeSeries& prefix) const {
    const auto s = prefix.row(0);
    double best_margin = std::numeric_limits<double>::infinity();
    Label fallback = majority_;
    for (const auto& sh : pool_) {
        if (sh.values.size() > s.size()) continue;
        const double dist = min_dist(sh.values, s);
        if (dist <= sh.threshold) return Decision::emit(sh.label);
        if (dist - sh.threshold < best_margin) {
            best_margin = dist - sh.threshold;
            fallback = sh.label;
        }
    }
    if (s.size() >= length_) return Decision::emit(fallback);
    return Decision::wait();
}

class EdscSession final : public DecisionSession {
public:
    explicit EdscSession(const EdscModel& m)
        : model_(m), best_(m.pool_.size(), std::numeric_limits<double>::infinity()) {}

    Decision observe(const TimeSeries& prefix) override {
        const auto s = prefix.row(0);
        // Only alignments ending after the previously seen length are new.
        Label first = -1;
        for (std::size_t p = 0; p < model_.pool_.size(); ++p) {
            const auto& sh = model_.pool_[p];
            const std::size_t l = sh.values.size();
            if (l > s.size()) continue;
            const std::size_t start = seen_ >= l ? seen_ - l + 1 : 0;
            for (std::size_t off = start; off + l <= s.size(); ++off) {
                best_[p] = std::min(best_[p], window_sq(sh.values, s, off));
            }
            if (first < 0 && std::sqrt(best_[p]) <= sh.threshold) first = sh.label;
        }
        seen_ = s.size();
        if (first >= 0) return Decision::emit(first);
        if (s.size() < model_.length_) return Decision::wait();

        double best_margin = std::numeric_limits<double>::infinity();
        Label fallback = model_.majority_;
        for (std::size_t p = 0; p < model_.pool_.size(); ++p) {
            const double margin = std::sqrt(best_[p]) - model_.pool_[p].threshold;
            if (margin < best_margin) {
                best_margin = margin;
                fallback = model_.pool_[p].label;
            }
        }
        return Decision::emit(fallback);
    }

private:
    const EdscModel& model_;
    std::vector<double> best_;  // squared min distance so far per pool shapelet
    std::size_t seen_ = 0;
};

std::unique_ptr<DecisionSession> EdscModel::open_session() const {
    return std::make_unique<EdscSession>(*this);
}

}  // namespace etsc
