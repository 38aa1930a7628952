#pragma once

#include <algorithm>
#include <cmath>
#include <map>
#include <memory>
#include <optional>
#include <set>
#include <stdexcept>
#include <vector>

#include "etsc/early_classifier.hpp"

// Brute-force reference implementations shared by unit and acceptance tests.
namespace etsc::fixtures {

using Rows = std::vector<std::vector<double>>;

// Direct transcription of the definitions, recomputing everything from scratch.
struct EctsOracle {
    Rows xs;
    std::size_t n, T;
    std::vector<std::vector<std::size_t>> nn;  // nn[t][i], t in 1..T

    explicit EctsOracle(Rows rows) : xs(std::move(rows)), n(xs.size()), T(xs[0].size()) {
        nn.assign(T + 1, std::vector<std::size_t>(n, 0));
        for (std::size_t t = 1; t <= T; ++t) {
            for (std::size_t i = 0; i < n; ++i) {
                std::optional<double> best;
                for (std::size_t j = 0; j < n; ++j) {
                    if (j == i) continue;
                    double d = 0;
                    for (std::size_t s = 0; s < t; ++s) d += (xs[i][s] - xs[j][s]) * (xs[i][s] - xs[j][s]);
                    if (!best || d < *best) {
                        best = d;
                        nn[t][i] = j;
                    }
                }
            }
        }
    }

    std::set<std::size_t> rnn(std::size_t t, std::size_t i) const {
        std::set<std::size_t> r;
        for (std::size_t j = 0; j < n; ++j) {
            if (nn[t][j] == i) r.insert(j);
        }
        return r;
    }

    std::size_t mpl(std::size_t i) const {
        const auto final_set = rnn(T, i);
        std::size_t t = T;
        while (t > 1 && rnn(t - 1, i) == final_set) --t;
        return t;
    }

    std::set<std::size_t> crnn(std::size_t t, const std::set<std::size_t>& m) const {
        std::set<std::size_t> out;
        for (std::size_t j = 0; j < n; ++j) {
            if (m.count(j)) continue;
            bool all = true;
            for (std::size_t x : m) all = all && nn[t][j] == x;
            if (all) out.insert(j);
        }
        return out;
    }

    bool ok(std::size_t t, const std::set<std::size_t>& m, const std::set<std::size_t>& f) const {
        for (std::size_t x : m) {
            if (!m.count(nn[t][x])) return false;
        }
        return crnn(t, m) == f;
    }

    std::optional<std::size_t> cmpl(const std::set<std::size_t>& m) const {
        const auto f = crnn(T, m);
        if (!ok(T, m, f)) return std::nullopt;
        std::size_t t = T;
        while (t > 1 && ok(t - 1, m, f)) --t;
        return t;
    }

    std::vector<std::size_t> final_mpl(const std::vector<Label>& labels) const {
        std::vector<std::size_t> fin(n);
        for (std::size_t i = 0; i < n; ++i) fin[i] = mpl(i);
        std::vector<std::vector<std::size_t>> clusters;
        for (std::size_t i = 0; i < n; ++i) clusters.push_back({i});
        std::vector<bool> frozen(n, false), active(n, true);
        auto dist = [&](std::size_t a, std::size_t b) {
            double d = 0;
            for (std::size_t s = 0; s < T; ++s) d += (xs[a][s] - xs[b][s]) * (xs[a][s] - xs[b][s]);
            return d;
        };
        while (true) {
            std::vector<std::size_t> live;
            std::size_t n_active = 0;
            for (std::size_t c = 0; c < clusters.size(); ++c) {
                n_active += active[c];
                if (active[c] && !frozen[c]) live.push_back(c);
            }
            if (n_active <= 1 || live.size() < 2) break;
            std::optional<double> best;
            std::size_t ba = 0, bb = 0;
            for (std::size_t x = 0; x < live.size(); ++x) {
                for (std::size_t y = x + 1; y < live.size(); ++y) {
                    double d = 1e300;
                    for (std::size_t p : clusters[live[x]]) {
                        for (std::size_t q : clusters[live[y]]) d = std::min(d, dist(p, q));
                    }
                    if (!best || d < *best) {
                        best = d;
                        ba = live[x];
                        bb = live[y];
                    }
                }
            }
            std::set<Label> la, lb;
            for (std::size_t m : clusters[ba]) la.insert(labels[m]);
            for (std::size_t m : clusters[bb]) lb.insert(labels[m]);
            if (la != lb) {
                frozen[ba] = frozen[bb] = true;
                continue;
            }
            auto merged = clusters[ba];
            merged.insert(merged.end(), clusters[bb].begin(), clusters[bb].end());
            std::sort(merged.begin(), merged.end());
            active[ba] = active[bb] = false;
            clusters.push_back(merged);
            active.push_back(true);
            frozen.push_back(false);
            if (const auto m = cmpl({merged.begin(), merged.end()})) {
                for (std::size_t i : merged) fin[i] = std::min(fin[i], *m);
            }
        }
        return fin;
    }
};

struct EcecSim {
    double accuracy, earliness;
};

// Trigger simulation for a fixed threshold, written independently of the library.
inline EcecSim simulate_ecec(const std::vector<std::vector<double>>& conf, const std::vector<std::vector<Label>>& pred,
             const std::vector<Label>& truth, const std::vector<std::size_t>& lengths, std::size_t T,
             double theta) {
    double correct = 0, early = 0;
    for (std::size_t j = 0; j < conf.size(); ++j) {
        std::size_t k = 0;
        while (k + 1 < lengths.size() && conf[j][k] < theta) ++k;
        correct += pred[j][k] == truth[j];
        early += static_cast<double>(lengths[k]) / static_cast<double>(T);
    }
    const double n = static_cast<double>(conf.size());
    return {correct / n, early / n};
}

// Reference rule written as a plain scan over the checkpoint outputs.
inline std::size_t teaser_oracle_trigger(const std::vector<Label>& labels, const std::vector<bool>& accepted, int v,
                           bool reset) {
    int run = 0;
    Label last = -1;
    for (std::size_t i = 0; i < labels.size(); ++i) {
        if (accepted[i]) {
            run = (run > 0 && labels[i] == last) ? run + 1 : 1;
            last = labels[i];
            if (run >= v) return i;
        } else if (reset) {
            run = 0;
            last = -1;
        }
    }
    return labels.size() - 1;
}

// Emits a fixed label once the prefix reaches a fixed length.
class ScriptedVoter final : public EarlyClassifier {
public:
    ScriptedVoter(std::size_t T, Label label, std::size_t trigger, std::vector<std::size_t> cps)
        : T_(T), label_(label), trigger_(trigger), cps_(std::move(cps)) {}
    std::string name() const override { return "scripted"; }
    std::size_t series_length() const override { return T_; }
    std::size_t num_classes() const override { return 3; }
    std::vector<std::size_t> checkpoints() const override { return cps_; }
    std::unique_ptr<DecisionSession> open_session() const override {
        struct S final : DecisionSession {
            const ScriptedVoter& v;
            explicit S(const ScriptedVoter& v) : v(v) {}
            Decision observe(const TimeSeries& p) override {
                if (std::find(v.cps_.begin(), v.cps_.end(), p.length()) == v.cps_.end()) {
                    throw std::logic_error("voter consulted off its checkpoints");
                }
                return p.length() >= v.trigger_ ? Decision::emit(v.label_) : Decision::wait();
            }
        };
        return std::make_unique<S>(*this);
    }

private:
    std::size_t T_;
    Label label_;
    std::size_t trigger_;
    std::vector<std::size_t> cps_;
};

inline Label oracle_vote(const std::vector<Label>& labels) {
    std::map<Label, int> count;
    int top = 0;
    for (Label l : labels) top = std::max(top, ++count[l]);
    for (Label l : labels) {
        if (count[l] == top) return l;
    }
    return -1;
}

}  // namespace etsc::fixtures
