// Acceptance suite: one PASS/FAIL line per criterion, nonzero exit on any failure.
#include <chrono>
#include <cmath>
#include <cstdio>
#include <filesystem>
#include <fstream>
#include <functional>
#include <iostream>
#include <sstream>
#include <string>

#include "etsc/algorithms/ecec.hpp"
#include "etsc/algorithms/economy_k.hpp"
#include "etsc/algorithms/ects.hpp"
#include "etsc/algorithms/edsc.hpp"
#include "etsc/algorithms/ensemble.hpp"
#include "etsc/algorithms/teaser.hpp"
#include "etsc/bench/experiment.hpp"
#include "etsc/learners/kmeans.hpp"
#include "etsc/learners/logistic_regression.hpp"
#include "etsc/learners/naive_bayes.hpp"
#include "etsc/learners/word_classifier.hpp"
#include "etsc/learners/cross_validation.hpp"
#include "etsc/rng.hpp"
#include "oracles.hpp"
#include "synthetic.hpp"

using namespace etsc;
namespace fs = std::filesystem;
using Clock = std::chrono::steady_clock;

namespace {

const std::vector<std::string> kAlgorithms = {"edsc",      "ects", "teaser",      "teaser-z",
                                              "ecec",      "economy-k", "fixed-prefix"};

// Collects failures for one criterion; the first few are reported.
struct Check {
    std::vector<std::string> failures;
    std::string notes;
    void expect(bool ok, const std::string& what) {
        if (!ok) failures.push_back(what);
    }
    void note(const std::string& s) { notes += (notes.empty() ? "" : "; ") + s; }
};

int g_failed = 0;

void criterion(int id, const std::string& title, double budget_seconds,
               const std::function<void(Check&)>& body) {
    Check c;
    const auto start = Clock::now();
    try {
        body(c);
    } catch (const std::exception& e) {
        c.failures.push_back(std::string("exception: ") + e.what());
    }
    const double secs = std::chrono::duration<double>(Clock::now() - start).count();
    if (secs > budget_seconds) {
        c.failures.push_back("took " + std::to_string(secs) + " s, budget " +
                             std::to_string(budget_seconds) + " s");
    }
    const bool ok = c.failures.empty();
    g_failed += ok ? 0 : 1;
    std::printf("criterion %2d %s: %s (%.2f s)", id, ok ? "PASS" : "FAIL", title.c_str(), secs);
    if (!c.notes.empty()) std::printf(" [%s]", c.notes.c_str());
    std::printf("\n");
    for (std::size_t i = 0; i < c.failures.size() && i < 5; ++i) {
        std::printf("    %s\n", c.failures[i].c_str());
    }
    std::fflush(stdout);
}

std::string fmt(double v) {
    char buf[64];
    std::snprintf(buf, sizeof buf, "%.4g", v);
    return buf;
}

fs::path scratch(const std::string& name) {
    const auto dir = fs::temp_directory_path() / ("etsc_acceptance_" + name);
    fs::remove_all(dir);
    fs::create_directories(dir);
    return dir;
}

std::string slurp(const fs::path& p) {
    std::ifstream in(p, std::ios::binary);
    std::stringstream ss;
    ss << in.rdbuf();
    return ss.str();
}

void edsc_threshold(Check& c) {
    c.expect(che_threshold_from_moments(330.0, 109.0, 3.0) == 3.0, "mean 330, var 109, k 3 is not 3");
    c.expect(che_threshold_from_moments(10.0, 5.0, 3.0) == 0.0, "negative threshold not clamped");
}

void edsc_pool(Check& c) {
    // s1 covers {0, 1}, s2 covers {1, 2, 3}, s3 covers {2}.
    const std::vector<double> u = {1.3, 3.67, 0.83};
    const std::vector<std::vector<std::size_t>> covers = {{0, 1}, {1, 2, 3}, {2}};
    const auto pool = select_pool(u, covers, 4);
    c.expect(pool == std::vector<std::size_t>{1, 0}, "pool is not [s2, s1]");
}

void ects_golden(Check& c) {
    const fixtures::Rows golden = {{3, 6, 1, 3, 0, 8, 1, 3}, {6, 4, 1, 5, 6, 4, 1, 3},
                                  {4, 4, 5, 0, 4, 1, 0, 7}, {6, 3, 6, 0, 4, 6, 0, 6},
                                  {7, 3, 7, 8, 7, 1, 0, 3}, {5, 4, 3, 8, 7, 3, 7, 1}};
    const auto m = EctsModel::train(fixtures::rows_dataset(golden, {0, 0, 1, 1, 1, 0}));
    const std::vector<std::size_t> own(m.own_mpl().begin(), m.own_mpl().begin() + 5);
    const std::vector<std::size_t> fin(m.mpl().begin(), m.mpl().begin() + 5);
    c.expect(own == std::vector<std::size_t>{2, 7, 6, 4, 4}, "MPL(NN) differs from (2,7,6,4,4)");
    c.expect(fin == std::vector<std::size_t>{2, 3, 4, 4, 4}, "clustered MPL differs from (2,3,4,4,4)");
    c.note("tabulated five instances plus one auxiliary instance");

    Rng rng(2024);
    for (int trial = 0; trial < 50; ++trial) {
        fixtures::Rows rows(6, std::vector<double>(8));
        std::vector<int> labels(6);
        for (std::size_t i = 0; i < 6; ++i) {
            for (auto& v : rows[i]) v = static_cast<double>(rng.index(10));
            labels[i] = i < 2 ? static_cast<int>(i) : static_cast<int>(rng.index(2));
        }
        const auto d = fixtures::rows_dataset(rows, labels);
        const fixtures::EctsOracle o(rows);
        const auto tables = build_nn_tables(d);
        for (std::size_t t = 1; t <= 8; ++t) {
            for (std::size_t i = 0; i < 6; ++i) {
                c.expect(tables.nearest(t, i) == o.nn[t][i], "NN table mismatch");
                const auto r = tables.rnn(t, i);
                c.expect(std::set<std::size_t>(r.begin(), r.end()) == o.rnn(t, i), "RNN set mismatch");
            }
        }
        const auto model = EctsModel::train(d);
        std::vector<Label> dense(6);
        for (std::size_t i = 0; i < 6; ++i) {
            dense[i] = d.instances[i].label;
            c.expect(model.own_mpl()[i] == o.mpl(i), "MPL(NN) mismatch in trial " + std::to_string(trial));
        }
        const auto expect = o.final_mpl(dense);
        c.expect(std::vector<std::size_t>(model.mpl().begin(), model.mpl().end()) == expect,
                 "clustered MPL mismatch in trial " + std::to_string(trial));
    }
}

void ecec_arithmetic(Check& c) {
    ReliabilityTable r(2, 2);
    r(0, 0, 0) = 0.6;
    r(1, 0, 0) = 0.7;
    c.expect(std::abs(confidence(r, std::vector<Label>{0, 0}) - 0.88) <= 1e-12, "confidence is not 0.88");
    c.expect(!ecec_step(0.45, 0.5, 0, false).predict, "c=0.45 < 0.5 did not wait");
    c.expect(ecec_step(0.5, 0.5, 0, false).predict, "c=theta did not predict");

    Rng rng(99);
    for (int trial = 0; trial < 20; ++trial) {
        const std::size_t n = 3 + rng.index(6), K = 2 + rng.index(4), T = 4 * K;
        std::vector<std::vector<double>> conf(n, std::vector<double>(K));
        std::vector<std::vector<Label>> pred(n, std::vector<Label>(K));
        std::vector<Label> truth(n);
        std::vector<std::size_t> lengths(K);
        std::vector<double> all;
        for (std::size_t k = 0; k < K; ++k) lengths[k] = 4 * (k + 1);
        for (std::size_t j = 0; j < n; ++j) {
            truth[j] = static_cast<Label>(rng.index(2));
            for (std::size_t k = 0; k < K; ++k) {
                conf[j][k] = std::round(rng.uniform() * 10) / 10;
                pred[j][k] = static_cast<Label>(rng.index(2));
                all.push_back(conf[j][k]);
            }
        }
        const double alpha = rng.uniform();
        const auto choice = select_threshold(conf, pred, truth, lengths, T, alpha);
        double best = 1e9, best_theta = -1;
        for (double th : threshold_candidates(all)) {
            const auto s = fixtures::simulate_ecec(conf, pred, truth, lengths, T, th);
            const double cf = alpha * (1 - s.accuracy) + (1 - alpha) * s.earliness;
            if (cf < best - 1e-15) {
                best = cf;
                best_theta = th;
            }
        }
        c.expect(choice.theta == best_theta && std::abs(choice.cost - best) < 1e-12,
                 "threshold differs from exhaustive scan in trial " + std::to_string(trial));
    }
}

void economy_checks(Check& c) {
    const auto eq = memberships_from_distances(std::vector<double>{2.5, 2.5}, 100.0);
    c.expect(std::abs(eq[0] - 0.5) <= 1e-9 && std::abs(eq[1] - 0.5) <= 1e-9, "equidistant is not (0.5, 0.5)");

    // One cluster, uniform prior: f_0 = 0.4 + 0.1, f_1 = 1.0 + 0.2.
    EconomyParts p;
    p.length = 2;
    p.num_classes = 2;
    p.centroids = Matrix(1, 2, 0.0);
    p.time_cost = 0.1;
    p.prior = {{0.5, 0.5}};
    p.confusion = {{{0.6, 0.4, 0.4, 0.6}}, {{0.0, 1.0, 1.0, 0.0}}};
    p.classifier = {{nullptr}, {nullptr}};
    p.fallback = {{0}, {0}};
    const auto m = EconomyKModel::from_parts(p);
    const auto pre = TimeSeries::univariate({0.0});
    const double f0 = m.expected_cost(pre, 0), f1 = m.expected_cost(pre, 1);
    c.note("f = {" + fmt(f0) + ", " + fmt(f1) + "}");
    c.expect(std::abs(f0 - 0.5) < 1e-12 && std::abs(f1 - 1.2) < 1e-12, "f values are not {0.5, 1.2}");
    c.expect(m.decide(pre).predict, "did not predict now");

    const auto train = fixtures::random_dataset(40, 24, 3, 17, 5.0);
    const auto km = EconomyKModel::train_k(train, 3, EconomyOptions{});
    Rng rng(3);
    for (int i = 0; i < 1000; ++i) {
        std::vector<double> v(1 + rng.index(24));
        for (auto& x : v) x = 5.0 * rng.uniform();
        double s = 0;
        for (double x : km.memberships(TimeSeries::univariate(v))) s += x;
        c.expect(std::abs(s - 1.0) <= 1e-9, "memberships do not sum to 1");
    }
}

void teaser_consistency(Check& c) {
    TeaserState two;
    c.expect(!teaser_step(two, 1, true, 2, false).predict, "v=2 predicted at the first checkpoint");
    TeaserState one;
    c.expect(teaser_step(one, 1, true, 1, false) == Decision::emit(1), "v=1 did not predict");
    TeaserState last;
    c.expect(teaser_step(last, 0, false, 5, true).predict, "final checkpoint did not emit");

    for (int trial = 0; trial < 20; ++trial) {
        const auto train = fixtures::sine_dataset(24, 16, 1 + trial % 5, 300 + trial, 1.0, 0.8);
        TeaserOptions o;
        o.S = 4 + static_cast<std::size_t>(trial % 3) * 2;
        o.seed = static_cast<std::uint64_t>(trial);
        o.reset_on_reject = trial % 2 == 0;
        o.znorm = trial % 4 == 1;
        const auto m = TeaserModel::train(train, o);
        const auto test = fixtures::sine_dataset(10, 16, 1 + trial % 5, 400 + trial, 1.0, 0.8);
        for (const auto& inst : test.instances) {
            const auto s = m.prepare(inst.series);
            std::vector<Label> labels;
            std::vector<bool> accepted;
            for (std::size_t i = 0; i < m.prefix_lengths().size(); ++i) {
                const auto [l, a] = m.evaluate(i, s.row(0).first(m.prefix_lengths()[i]));
                labels.push_back(l);
                accepted.push_back(a);
            }
            const auto idx = fixtures::teaser_oracle_trigger(labels, accepted, m.v(), o.reset_on_reject);
            const auto r = classify_stream(m, inst.series);
            c.expect(r.trigger == m.prefix_lengths()[idx] && r.label == labels[idx],
                     "stream differs from simulation in model " + std::to_string(trial));
        }
    }
}

void metric_checks(Check& c) {
    c.expect(std::abs(harmonic_mean(1.0, 0.1) - 0.9473684210526315) <= 1e-9, "HM(1, 0.1) is wrong");

    const auto train = fixtures::sine_dataset(40, 30, 3, 8);
    const auto fp = FixedPrefixModel::train(train);
    const auto test = fixtures::sine_dataset(20, 30, 3, 9);
    for (const auto& inst : test.instances) {
        c.expect(classify_stream(fp, inst.series).trigger == fp.prefix_length(),
                 "fixed-prefix trigger varies");
    }

    Rng rng(12);
    for (int trial = 0; trial < 100; ++trial) {
        const std::size_t T = 4 + rng.index(30);
        const std::size_t n = 1 + rng.index(5);
        std::vector<std::shared_ptr<const EarlyClassifier>> voters;
        std::size_t latest = 0;
        for (std::size_t v = 0; v < n; ++v) {
            std::vector<std::size_t> cps;
            for (std::size_t t = 1 + rng.index(3); t < T; t += 1 + rng.index(3)) cps.push_back(t);
            cps.push_back(T);
            const std::size_t trig = cps[rng.index(cps.size())];
            latest = std::max(latest, trig);
            voters.push_back(std::make_shared<fixtures::ScriptedVoter>(
                T, static_cast<Label>(rng.index(3)), trig, cps));
        }
        const VotingClassifier vc(voters);
        const auto r = classify_stream(vc, TimeSeries(n, T, 0.0));
        c.expect(static_cast<double>(r.trigger) / static_cast<double>(T) ==
                     static_cast<double>(latest) / static_cast<double>(T),
                 "voting earliness is not the largest voter earliness");
    }
}

RunConfig config_for(const fs::path& data, std::size_t folds, std::uint64_t seed, double timeout) {
    RunConfig cfg;
    cfg.datasets.emplace_back().path = data;
    for (const auto& id : kAlgorithms) cfg.algorithms.push_back({id});
    cfg.folds = folds;
    cfg.seed = seed;
    cfg.timeout_seconds = timeout;
    return cfg;
}

void separable_benchmark(Check& c) {
    const auto dir = scratch("separable");
    const auto data = dir / "separable.csv";
    {
        std::ofstream out(data);
        write_csv(fixtures::sine_dataset(100, 50, 10, 2718), out);
    }
    const auto result = run_experiment(config_for(data, 5, 1, 600.0));
    for (const auto& id : kAlgorithms) {
        double acc = 0, earl = 0;
        std::size_t n = 0;
        for (const auto& r : result.records) {
            if (r.algorithm != id) continue;
            if (r.status != RunStatus::Ok) {
                c.expect(false, id + " fold " + std::to_string(r.fold) + ": " + to_string(r.status) +
                                    " " + r.message);
                continue;
            }
            acc += r.metrics.accuracy;
            earl += r.metrics.earliness;
            ++n;
        }
        if (n == 0) continue;
        acc /= static_cast<double>(n);
        earl /= static_cast<double>(n);
        c.note(id + " " + fmt(acc) + "/" + fmt(earl));
        c.expect(acc >= 0.95, id + " accuracy " + fmt(acc) + " < 0.95");
        c.expect(earl <= 0.6, id + " earliness " + fmt(earl) + " > 0.6");
    }
}

void real_data_smoke(Check& c) {
    const fs::path data = ETSC_TEST_DATA_DIR "/GunPoint.ts";
    auto cfg = config_for(data, 5, 7, 1800.0);
    const auto result = run_experiment(cfg);
    // Majority class of the training folds, scored on the test fold.
    const auto d = load_prepared(cfg.datasets[0], cfg.ragged);
    const auto plan = stratified_folds(d, 5, cfg.seed);
    std::vector<double> baseline(5);
    for (std::size_t f = 0; f < 5; ++f) {
        std::vector<std::size_t> counts(d.num_classes(), 0);
        for (std::size_t i : plan.train_indices(f)) ++counts[static_cast<std::size_t>(d.instances[i].label)];
        const auto major = static_cast<Label>(std::max_element(counts.begin(), counts.end()) - counts.begin());
        const auto test = plan.test_indices(f);
        std::size_t hit = 0;
        for (std::size_t i : test) hit += d.instances[i].label == major;
        baseline[f] = static_cast<double>(hit) / static_cast<double>(test.size());
    }
    for (const auto& id : kAlgorithms) {
        std::size_t wins = 0;
        double train_s = 0;
        for (const auto& r : result.records) {
            if (r.algorithm != id) continue;
            c.expect(r.status == RunStatus::Ok,
                     id + " fold " + std::to_string(r.fold) + " " + to_string(r.status) + " " + r.message);
            if (r.status == RunStatus::Ok && r.metrics.accuracy > baseline[r.fold]) ++wins;
            train_s += r.train_seconds;
        }
        c.note(id + " " + std::to_string(wins) + "/5");
        c.expect(wins >= 4, id + " beats the majority baseline on only " + std::to_string(wins) + " folds");
    }
}

void determinism(Check& c) {
    const auto dir = scratch("determinism");
    const auto data = dir / "toy.csv";
    {
        std::ofstream out(data);
        write_csv(fixtures::sine_dataset(40, 24, 5, 31, 1.0, 1.0), out);
    }
    auto cfg = config_for(data, 3, 5, 600.0);
    cfg.workers = 2;
    std::string first;
    for (int run = 0; run < 2; ++run) {
        const auto out = dir / ("run" + std::to_string(run));
        write_reports(run_experiment(cfg), cfg, out);
        const auto text = slurp(out / "report.json");
        c.expect(!text.empty(), "empty report");
        if (run == 0) {
            first = text;
        } else {
            c.expect(text == first, "report.json differs between runs");
        }
    }
}

void numerical_checks(Check& c) {
    Rng rng(77);
    Matrix x(25, 4);
    std::vector<Label> y(25);
    for (std::size_t i = 0; i < 25; ++i) {
        y[i] = static_cast<Label>(rng.index(3));
        for (std::size_t j = 0; j < 4; ++j) x(i, j) = rng.normal();
    }
    std::vector<double> w(3 * 5);
    for (auto& v : w) v = rng.normal();
    std::vector<double> g;
    LogisticRegression::objective(x, y, 3, 0.01, w, &g);
    double worst = 0;
    for (std::size_t j = 0; j < w.size(); ++j) {
        auto a = w, b = w;
        const double h = 1e-5;
        a[j] += h;
        b[j] -= h;
        const double fd = (LogisticRegression::objective(x, y, 3, 0.01, a, nullptr) -
                           LogisticRegression::objective(x, y, 3, 0.01, b, nullptr)) /
                          (2 * h);
        worst = std::max(worst, std::abs(fd - g[j]) / std::max(std::abs(g[j]), 1e-3));
    }
    c.note("max gradient rel. err " + fmt(worst));
    c.expect(worst < 1e-5, "gradient relative error " + fmt(worst));

    for (int trial = 0; trial < 20; ++trial) {
        Matrix pts(50, 2);
        for (std::size_t i = 0; i < 50; ++i) {
            pts(i, 0) = rng.normal();
            pts(i, 1) = rng.normal();
        }
        const auto km = kmeans(pts, 2 + rng.index(5), trial);
        for (std::size_t i = 1; i < km.objective_history.size(); ++i) {
            c.expect(km.objective_history[i] <= km.objective_history[i - 1] + 1e-12,
                     "k-means objective increased");
        }
    }

    const auto d = fixtures::sine_dataset(30, 24, 1, 5);
    const auto xs = prefix_matrix(d, 24);
    const auto labels = d.labels();
    std::vector<std::unique_ptr<ProbClassifier>> models;
    models.push_back(std::make_unique<LogisticRegression>(LogisticRegression::fit(xs, labels, 2)));
    models.push_back(std::make_unique<GaussianNB>(GaussianNB::fit(xs, labels, 2)));
    models.push_back(std::make_unique<WordClassifier>(WordClassifier::fit(xs, labels, 2)));
    for (const auto& m : models) {
        for (int q = 0; q < 200; ++q) {
            std::vector<double> v(24);
            for (auto& e : v) e = 3.0 * rng.normal();
            double s = 0;
            for (double p : m->predict_proba(v)) s += p;
            c.expect(std::abs(s - 1.0) <= 1e-9, "probabilities do not sum to 1");
        }
    }
}

}  // namespace

int main() {
    criterion(1, "EDSC Chebyshev threshold", 1.0, edsc_threshold);
    criterion(2, "EDSC pool selection order", 1.0, edsc_pool);
    criterion(3, "ECTS minimum prediction lengths", 30.0, ects_golden);
    criterion(4, "ECEC confidence and threshold", 30.0, ecec_arithmetic);
    criterion(5, "ECONOMY-K memberships and costs", 60.0, economy_checks);
    criterion(6, "TEASER consistency", 120.0, teaser_consistency);
    criterion(7, "metrics, fixed prefix and voting earliness", 60.0, metric_checks);
    criterion(8, "separable synthetic benchmark", 600.0, separable_benchmark);
    criterion(9, "GunPoint 5-fold smoke run", 1800.0, real_data_smoke);
    criterion(10, "deterministic reports", 600.0, determinism);
    criterion(11, "numerical checks", 60.0, numerical_checks);
    std::printf("%d of 11 criteria failed\n", g_failed);
    return g_failed == 0 ? 0 : 1;
}
