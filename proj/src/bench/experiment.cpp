#include "etsc/bench/experiment.hpp"

#include <poll.h>
#include <signal.h>
#include <sys/wait.h>
#include <unistd.h>

#include <cerrno>
#include <chrono>
#include <cmath>
#include <cstring>
#include <deque>
#include <fstream>
#include <map>
#include <set>
#include <stdexcept>

#include "etsc/error.hpp"

namespace etsc {

using nlohmann::json;

namespace {

using Clock = std::chrono::steady_clock;

double seconds_since(Clock::time_point start) {
    return std::chrono::duration<double>(Clock::now() - start).count();
}

json metric_value(double v) { return std::isfinite(v) ? json(v) : json(nullptr); }

}  // namespace

std::string to_string(RunStatus s) {
    switch (s) {
        case RunStatus::Ok: return "ok";
        case RunStatus::Timeout: return "timeout";
        case RunStatus::Error: return "error";
    }
    return "error";
}

RunStatus parse_run_status(const std::string& s) {
    if (s == "ok") return RunStatus::Ok;
    if (s == "timeout") return RunStatus::Timeout;
    if (s == "error") return RunStatus::Error;
    throw std::invalid_argument("unknown run status '" + s + "'");
}

RunConfig RunConfig::from_json(const json& j, const std::filesystem::path& base_dir) {
    static const std::set<std::string> kKeys = {"datasets", "algorithms", "folds", "seed",
                                                "timeout_seconds", "output_dir", "workers",
                                                "ragged", "multivariate", "isolate"};
    if (!j.is_object()) throw std::invalid_argument("config must be a JSON object");
    for (const auto& [key, v] : j.items()) {
        if (!kKeys.count(key)) throw std::invalid_argument("unknown config key '" + key + "'");
    }
    RunConfig cfg;
    for (const auto& ds : j.at("datasets")) {
        DatasetSpec spec;
        json obj = ds.is_string() ? json{{"path", ds}} : ds;
        spec.path = obj.at("path").get<std::string>();
        if (spec.path.is_relative() && !base_dir.empty()) spec.path = base_dir / spec.path;
        if (obj.contains("format")) spec.format = parse_format(obj.at("format").get<std::string>());
        if (obj.contains("dims")) spec.load.dims = obj.at("dims").get<std::size_t>();
        if (obj.contains("source_column")) spec.load.source_column = obj.at("source_column").get<bool>();
        if (obj.contains("fold_key")) spec.fold_key = parse_fold_key(obj.at("fold_key").get<std::string>());
        if (obj.contains("name")) spec.name = obj.at("name").get<std::string>();
        cfg.datasets.push_back(std::move(spec));
    }
    for (const auto& a : j.at("algorithms")) {
        AlgorithmSpec spec;
        if (a.is_string()) {
            spec.id = a.get<std::string>();
        } else {
            spec.id = a.at("id").get<std::string>();
            if (a.contains("params")) spec.params = a.at("params");
        }
        cfg.algorithms.push_back(std::move(spec));
    }
    if (j.contains("folds")) cfg.folds = j.at("folds").get<std::size_t>();
    if (j.contains("seed")) cfg.seed = j.at("seed").get<std::uint64_t>();
    if (j.contains("timeout_seconds")) cfg.timeout_seconds = j.at("timeout_seconds").get<double>();
    if (j.contains("output_dir")) cfg.output_dir = j.at("output_dir").get<std::string>();
    if (j.contains("workers")) cfg.workers = j.at("workers").get<std::size_t>();
    if (j.contains("ragged")) cfg.ragged = parse_ragged_policy(j.at("ragged").get<std::string>());
    if (j.contains("multivariate")) {
        cfg.multivariate = parse_multivariate_mode(j.at("multivariate").get<std::string>());
    }
    if (j.contains("isolate")) cfg.isolate = j.at("isolate").get<bool>();
    return cfg;
}

json RunConfig::to_json() const {
    json ds = json::array();
    for (const auto& d : datasets) {
        ds.push_back({{"path", d.path.string()},
                      {"format", to_string(d.format.value_or(format_from_path(d.path)))},
                      {"dims", d.load.dims},
                      {"source_column", d.load.source_column},
                      {"fold_key", etsc::to_string(d.fold_key)},
                      {"name", d.name}});
    }
    json algos = json::array();
    for (const auto& a : algorithms) algos.push_back({{"id", a.id}, {"params", a.params}});
    return {{"datasets", ds},
            {"algorithms", algos},
            {"folds", folds},
            {"seed", seed},
            {"timeout_seconds", timeout_seconds},
            {"workers", workers},
            {"ragged", ragged == RaggedPolicy::Pad ? "pad" : "reject"},
            {"multivariate", multivariate == MultivariateMode::Vote ? "vote" : "auto"}};
}

void RunConfig::validate(const AlgorithmRegistry& registry) const {
    if (datasets.empty()) throw std::invalid_argument("config lists no datasets");
    if (algorithms.empty()) throw std::invalid_argument("config lists no algorithms");
    if (folds < 2) throw std::invalid_argument("folds must be at least 2");
    if (!(timeout_seconds > 0.0)) throw std::invalid_argument("timeout_seconds must be positive");
    if (workers < 1) throw std::invalid_argument("workers must be at least 1");
    for (const auto& a : algorithms) {
        if (!registry.contains(a.id)) {
            std::string known;
            for (const auto& id : registry.ids()) known += (known.empty() ? "" : ", ") + id;
            throw std::invalid_argument("unknown algorithm '" + a.id + "' (known: " + known + ")");
        }
    }
}

json record_to_json(const MetricRecord& r, bool with_timings) {
    json j = {{"algorithm", r.algorithm},
              {"dataset", r.dataset},
              {"fold", r.fold},
              {"status", to_string(r.status)},
              {"test_size", r.test_size}};
    if (r.status == RunStatus::Ok) {
        j["accuracy"] = metric_value(r.metrics.accuracy);
        j["f1"] = metric_value(r.metrics.f1);
        j["f1_positive"] = r.metrics.f1_positive ? metric_value(*r.metrics.f1_positive) : json(nullptr);
        j["earliness"] = metric_value(r.metrics.earliness);
        j["harmonic_mean"] = metric_value(r.metrics.harmonic_mean);
    }
    if (!r.message.empty()) j["message"] = r.message;
    if (with_timings) {
        j["train_seconds"] = r.train_seconds;
        j["test_seconds"] = r.test_seconds;
    }
    return j;
}

MetricRecord record_from_json(const json& j) {
    MetricRecord r;
    r.algorithm = j.at("algorithm").get<std::string>();
    r.dataset = j.at("dataset").get<std::string>();
    r.fold = j.at("fold").get<std::size_t>();
    r.status = parse_run_status(j.at("status").get<std::string>());
    r.test_size = j.value("test_size", std::size_t{0});
    if (r.status == RunStatus::Ok) {
        r.metrics.accuracy = j.at("accuracy").get<double>();
        r.metrics.f1 = j.at("f1").get<double>();
        if (!j.at("f1_positive").is_null()) r.metrics.f1_positive = j.at("f1_positive").get<double>();
        r.metrics.earliness = j.at("earliness").get<double>();
        r.metrics.harmonic_mean = j.at("harmonic_mean").get<double>();
    }
    r.message = j.value("message", std::string{});
    r.train_seconds = j.value("train_seconds", 0.0);
    r.test_seconds = j.value("test_seconds", 0.0);
    return r;
}

bool ExperimentResult::partial() const {
    for (const auto& r : records) {
        if (r.status != RunStatus::Ok) return true;
    }
    return false;
}

Dataset load_prepared(const DatasetSpec& spec, RaggedPolicy ragged) {
    Dataset d = load_dataset(spec.path, spec.format.value_or(format_from_path(spec.path)), spec.load);
    if (!spec.name.empty()) d.name = spec.name;
    d = impute_missing(d);
    return equalize_lengths(d, ragged);
}

std::uint64_t fold_seed(std::uint64_t seed, std::size_t fold) {
    // splitmix64 finalizer over the combined value.
    std::uint64_t z = seed + 0x9E3779B97F4A7C15ULL * (fold + 1);
    z = (z ^ (z >> 30)) * 0xBF58476D1CE4E5B9ULL;
    z = (z ^ (z >> 27)) * 0x94D049BB133111EBULL;
    return z ^ (z >> 31);
}

MetricRecord run_fold(const AlgorithmRegistry& registry, const AlgorithmSpec& algo,
                      const Dataset& d, const FoldPlan& plan, std::size_t fold,
                      std::uint64_t seed, MultivariateMode mode) {
    MetricRecord rec;
    rec.algorithm = algo.id;
    rec.dataset = d.name;
    rec.fold = fold;
    try {
        const auto train_idx = plan.train_indices(fold);
        const auto test_idx = plan.test_indices(fold);
        rec.test_size = test_idx.size();
        if (test_idx.empty()) throw DataError("fold " + std::to_string(fold) + " has no test instances");
        const Dataset train = d.subset(train_idx);

        auto start = Clock::now();
        const auto model = registry.train(algo.id, train, algo.params, seed, mode);
        rec.train_seconds = seconds_since(start);

        start = Clock::now();
        std::vector<Prediction> preds;
        for (std::size_t i : test_idx) {
            const auto& inst = d.instances[i];
            const auto r = classify_stream(*model, inst.series);
            preds.push_back({inst.label, r.label, r.trigger, model->series_length()});
        }
        rec.test_seconds = seconds_since(start);
        rec.metrics = compute_metrics(preds, d.num_classes());
        rec.status = RunStatus::Ok;
    } catch (const std::exception& e) {
        rec.status = RunStatus::Error;
        rec.message = e.what();
    }
    return rec;
}

namespace {

struct Job {
    std::size_t slot;  // position in the final record list
    const Dataset* data;
    const FoldPlan* plan;
    const AlgorithmSpec* algo;
    std::size_t fold;
};

struct Running {
    Job job;
    pid_t pid;
    int fd;
    std::string buffer;
    Clock::time_point deadline;
};

void write_all(int fd, const std::string& s) {
    std::size_t off = 0;
    while (off < s.size()) {
        const ssize_t n = ::write(fd, s.data() + off, s.size() - off);
        if (n < 0) {
            if (errno == EINTR) continue;
            return;
        }
        off += static_cast<std::size_t>(n);
    }
}

MetricRecord failed(const Job& job, RunStatus status, std::string message) {
    MetricRecord r;
    r.algorithm = job.algo->id;
    r.dataset = job.data->name;
    r.fold = job.fold;
    r.status = status;
    r.test_size = job.plan->test_indices(job.fold).size();
    r.message = std::move(message);
    return r;
}

std::vector<MetricRecord> run_isolated(const std::vector<Job>& jobs, const RunConfig& cfg,
                                       const AlgorithmRegistry& registry) {
    std::vector<MetricRecord> out(jobs.size());
    std::deque<Job> pending(jobs.begin(), jobs.end());
    std::vector<Running> running;
    const auto budget = std::chrono::duration_cast<Clock::duration>(
        std::chrono::duration<double>(cfg.timeout_seconds));

    auto finish = [&](Running& r, bool timed_out) {
        if (timed_out) ::kill(r.pid, SIGKILL);
        int status = 0;
        while (::waitpid(r.pid, &status, 0) < 0 && errno == EINTR) {
        }
        ::close(r.fd);
        if (timed_out) {
            out[r.job.slot] = failed(r.job, RunStatus::Timeout,
                                     "exceeded the " + format_double(cfg.timeout_seconds) + " s budget");
            return;
        }
        try {
            out[r.job.slot] = record_from_json(json::parse(r.buffer));
        } catch (const std::exception&) {
            std::string why = "worker died";
            if (WIFSIGNALED(status)) why += " on signal " + std::to_string(WTERMSIG(status));
            if (WIFEXITED(status)) why += " with exit code " + std::to_string(WEXITSTATUS(status));
            out[r.job.slot] = failed(r.job, RunStatus::Error, why);
        }
    };

    while (!pending.empty() || !running.empty()) {
        while (!pending.empty() && running.size() < cfg.workers) {
            Job job = pending.front();
            pending.pop_front();
            int fds[2];
            if (::pipe(fds) != 0) throw std::runtime_error(std::string("pipe: ") + std::strerror(errno));
            const pid_t pid = ::fork();
            if (pid < 0) throw std::runtime_error(std::string("fork: ") + std::strerror(errno));
            if (pid == 0) {
                ::close(fds[0]);
                std::string payload;
                try {
                    const auto rec = run_fold(registry, *job.algo, *job.data, *job.plan, job.fold,
                                              fold_seed(cfg.seed, job.fold), cfg.multivariate);
                    payload = record_to_json(rec, true).dump();
                } catch (...) {
                    ::_exit(3);
                }
                write_all(fds[1], payload);
                ::close(fds[1]);
                ::_exit(0);
            }
            ::close(fds[1]);
            running.push_back({job, pid, fds[0], {}, Clock::now() + budget});
        }

        std::vector<pollfd> pfds;
        for (const auto& r : running) pfds.push_back({r.fd, POLLIN, 0});
        auto wait = std::chrono::milliseconds(100);
        const auto now = Clock::now();
        for (const auto& r : running) {
            const auto left = std::chrono::duration_cast<std::chrono::milliseconds>(r.deadline - now);
            wait = std::min(wait, std::max(left, std::chrono::milliseconds(0)));
        }
        const int ready = ::poll(pfds.data(), pfds.size(), static_cast<int>(wait.count()));
        if (ready < 0 && errno != EINTR) throw std::runtime_error("poll failed");

        std::vector<Running> still;
        for (std::size_t i = 0; i < running.size(); ++i) {
            auto& r = running[i];
            bool closed = false;
            if (ready > 0 && (pfds[i].revents & (POLLIN | POLLHUP | POLLERR))) {
                char buf[65536];
                const ssize_t n = ::read(r.fd, buf, sizeof buf);
                if (n > 0) {
                    r.buffer.append(buf, static_cast<std::size_t>(n));
                } else if (n == 0 || errno != EINTR) {
                    closed = true;
                }
            }
            if (closed) {
                finish(r, false);
            } else if (Clock::now() >= r.deadline) {
                finish(r, true);
            } else {
                still.push_back(std::move(r));
            }
        }
        running = std::move(still);
    }
    return out;
}

}  // namespace

std::vector<CategoryAggregate> categorize_and_aggregate(const std::vector<MetricRecord>& records,
                                                        const std::vector<NamedStats>& stats) {
    struct Sums {
        double acc = 0, f1 = 0, earl = 0, hm = 0;
        std::size_t n = 0;
    };
    // (algorithm, dataset) -> fold sums, algorithms kept in first-seen order.
    std::vector<std::string> algos;
    std::map<std::pair<std::string, std::string>, Sums> per;
    for (const auto& r : records) {
        if (std::find(algos.begin(), algos.end(), r.algorithm) == algos.end()) {
            algos.push_back(r.algorithm);
        }
        if (r.status != RunStatus::Ok) continue;
        auto& s = per[{r.algorithm, r.dataset}];
        s.acc += r.metrics.accuracy;
        s.f1 += r.metrics.f1;
        s.earl += r.metrics.earliness;
        s.hm += r.metrics.harmonic_mean;
        ++s.n;
    }

    auto mean_std = [](const std::vector<double>& v) {
        double m = 0.0;
        for (double x : v) m += x;
        m /= static_cast<double>(v.size());
        double var = 0.0;
        for (double x : v) var += (x - m) * (x - m);
        return std::pair{m, std::sqrt(var / static_cast<double>(v.size()))};
    };

    std::vector<CategoryAggregate> out;
    for (const auto& algo : algos) {
        for (Category c : kAllCategories) {
            std::vector<double> acc, f1, earl, hm;
            for (const auto& ns : stats) {
                if (!ns.stats.in(c)) continue;
                const auto it = per.find({algo, ns.dataset});
                if (it == per.end() || it->second.n == 0) continue;
                const auto n = static_cast<double>(it->second.n);
                acc.push_back(it->second.acc / n);
                f1.push_back(it->second.f1 / n);
                earl.push_back(it->second.earl / n);
                hm.push_back(it->second.hm / n);
            }
            if (acc.empty()) continue;
            CategoryAggregate a;
            a.algorithm = algo;
            a.category = c;
            a.datasets = acc.size();
            std::tie(a.accuracy_mean, a.accuracy_std) = mean_std(acc);
            std::tie(a.f1_mean, a.f1_std) = mean_std(f1);
            std::tie(a.earliness_mean, a.earliness_std) = mean_std(earl);
            std::tie(a.hm_mean, a.hm_std) = mean_std(hm);
            out.push_back(a);
        }
    }
    return out;
}

ExperimentResult run_experiment(const RunConfig& cfg, const AlgorithmRegistry& registry) {
    cfg.validate(registry);
    ExperimentResult result;
    std::vector<Dataset> data;
    std::vector<FoldPlan> plans;
    for (const auto& spec : cfg.datasets) {
        data.push_back(load_prepared(spec, cfg.ragged));
        plans.push_back(stratified_folds(data.back(), cfg.folds, cfg.seed, spec.fold_key));
        result.stats.push_back({data.back().name, dataset_stats(data.back())});
    }

    std::vector<Job> jobs;
    for (std::size_t di = 0; di < data.size(); ++di) {
        for (const auto& algo : cfg.algorithms) {
            for (std::size_t f = 0; f < cfg.folds; ++f) {
                jobs.push_back({jobs.size(), &data[di], &plans[di], &algo, f});
            }
        }
    }
    if (cfg.isolate) {
        result.records = run_isolated(jobs, cfg, registry);
    } else {
        for (const auto& job : jobs) {
            result.records.push_back(run_fold(registry, *job.algo, *job.data, *job.plan, job.fold,
                                              fold_seed(cfg.seed, job.fold), cfg.multivariate));
        }
    }
    result.aggregates = categorize_and_aggregate(result.records, result.stats);
    return result;
}

json stats_to_json(const DatasetStats& s) {
    json cats = json::array();
    for (Category c : s.categories) cats.push_back(to_string(c));
    return {{"height", s.height},
            {"length", s.length},
            {"num_variables", s.num_variables},
            {"num_classes", s.num_classes},
            {"imbalance_ratio", s.imbalance_ratio},
            {"std_dev", s.std_dev},
            {"pooled_std_dev", s.pooled_std_dev},
            {"categories", cats}};
}

namespace {

json aggregate_to_json(const CategoryAggregate& a) {
    return {{"algorithm", a.algorithm},
            {"category", to_string(a.category)},
            {"datasets", a.datasets},
            {"accuracy", {{"mean", a.accuracy_mean}, {"std", a.accuracy_std}}},
            {"f1", {{"mean", a.f1_mean}, {"std", a.f1_std}}},
            {"earliness", {{"mean", a.earliness_mean}, {"std", a.earliness_std}}},
            {"harmonic_mean", {{"mean", a.hm_mean}, {"std", a.hm_std}}}};
}

std::string csv_num(double v) { return format_double(v); }

void write_text(const std::filesystem::path& p, const std::string& text) {
    std::ofstream out(p, std::ios::binary);
    if (!out) throw std::runtime_error("cannot write " + p.string());
    out << text;
}

}  // namespace

void write_reports(const ExperimentResult& result, const RunConfig& cfg,
                   const std::filesystem::path& dir) {
    std::filesystem::create_directories(dir);

    json datasets = json::array();
    for (const auto& ns : result.stats) {
        json j = stats_to_json(ns.stats);
        j["name"] = ns.dataset;
        datasets.push_back(j);
    }
    json records = json::array(), timings = json::array();
    for (const auto& r : result.records) {
        records.push_back(record_to_json(r, false));
        timings.push_back({{"algorithm", r.algorithm},
                           {"dataset", r.dataset},
                           {"fold", r.fold},
                           {"status", to_string(r.status)},
                           {"train_seconds", r.train_seconds},
                           {"test_seconds", r.test_seconds}});
    }
    json aggregates = json::array();
    for (const auto& a : result.aggregates) aggregates.push_back(aggregate_to_json(a));
    const json report = {{"config", cfg.to_json()},
                         {"datasets", datasets},
                         {"records", records},
                         {"categories", aggregates},
                         {"partial", result.partial()}};
    write_text(dir / "report.json", report.dump(2) + "\n");
    write_text(dir / "timings.json", timings.dump(2) + "\n");

    std::string csv =
        "algorithm,dataset,fold,status,test_size,accuracy,f1,f1_positive,earliness,"
        "harmonic_mean,train_seconds,test_seconds\n";
    for (const auto& r : result.records) {
        csv += r.algorithm + "," + r.dataset + "," + std::to_string(r.fold) + "," +
               to_string(r.status) + "," + std::to_string(r.test_size) + ",";
        if (r.status == RunStatus::Ok) {
            csv += csv_num(r.metrics.accuracy) + "," + csv_num(r.metrics.f1) + "," +
                   (r.metrics.f1_positive ? csv_num(*r.metrics.f1_positive) : "") + "," +
                   csv_num(r.metrics.earliness) + "," + csv_num(r.metrics.harmonic_mean);
        } else {
            csv += ",,,,";
        }
        csv += "," + csv_num(r.train_seconds) + "," + csv_num(r.test_seconds) + "\n";
    }
    write_text(dir / "records.csv", csv);

    std::string ds_csv =
        "dataset,height,length,variables,classes,imbalance_ratio,pooled_std_dev,categories\n";
    for (const auto& ns : result.stats) {
        std::string cats;
        for (Category c : ns.stats.categories) cats += (cats.empty() ? "" : ";") + to_string(c);
        ds_csv += ns.dataset + "," + std::to_string(ns.stats.height) + "," +
                  std::to_string(ns.stats.length) + "," + std::to_string(ns.stats.num_variables) +
                  "," + std::to_string(ns.stats.num_classes) + "," +
                  csv_num(ns.stats.imbalance_ratio) + "," + csv_num(ns.stats.pooled_std_dev) +
                  "," + cats + "\n";
    }
    write_text(dir / "datasets.csv", ds_csv);

    std::string cat_csv =
        "algorithm,category,datasets,accuracy_mean,accuracy_std,f1_mean,f1_std,"
        "earliness_mean,earliness_std,hm_mean,hm_std\n";
    for (const auto& a : result.aggregates) {
        cat_csv += a.algorithm + "," + to_string(a.category) + "," + std::to_string(a.datasets) +
                   "," + csv_num(a.accuracy_mean) + "," + csv_num(a.accuracy_std) + "," +
                   csv_num(a.f1_mean) + "," + csv_num(a.f1_std) + "," +
                   csv_num(a.earliness_mean) + "," + csv_num(a.earliness_std) + "," +
                   csv_num(a.hm_mean) + "," + csv_num(a.hm_std) + "\n";
    }
    write_text(dir / "categories.csv", cat_csv);
}

}  // namespace etsc
