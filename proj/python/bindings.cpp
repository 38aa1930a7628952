#include <pybind11/pybind11.h>
#include <pybind11/stl.h>
#include <pybind11/stl/filesystem.h>

#include "etsc/bench/experiment.hpp"
#include "etsc/bench/registry.hpp"
#include "etsc/error.hpp"
#include "etsc/folds.hpp"
#include "etsc/io.hpp"
#include "etsc/preprocess.hpp"
#include "etsc/stats.hpp"

namespace py = pybind11;
using namespace etsc;

namespace {

TimeSeries to_series(const std::vector<std::vector<double>>& rows) {
    if (rows.empty()) throw std::invalid_argument("series needs at least one variable");
    return TimeSeries::from_rows(rows);
}

std::vector<std::vector<double>> to_rows(const TimeSeries& s) {
    std::vector<std::vector<double>> rows;
    for (std::size_t d = 0; d < s.dims(); ++d) rows.emplace_back(s.row(d).begin(), s.row(d).end());
    return rows;
}

Dataset make_dataset(const std::string& name, const std::vector<std::vector<std::vector<double>>>& x,
                     const std::vector<std::string>& labels) {
    if (x.size() != labels.size()) throw std::invalid_argument("one label per series expected");
    std::vector<TimeSeries> series;
    for (const auto& rows : x) series.push_back(to_series(rows));
    auto d = Dataset::from_named(name, std::move(series), labels);
    d.validate();
    return d;
}

class PyModel {
public:
    PyModel(const std::string& id, const Dataset& d, const std::string& params, std::uint64_t seed,
            const std::string& multivariate)
        : model_(AlgorithmRegistry::builtin().train(id, impute_missing(d),
                                                    nlohmann::json::parse(params), seed,
                                                    parse_multivariate_mode(multivariate))) {}

    std::string name() const { return model_->name(); }
    std::size_t length() const { return model_->series_length(); }
    std::size_t classes() const { return model_->num_classes(); }

    std::pair<Label, std::size_t> classify(const std::vector<std::vector<double>>& rows) const {
        const auto r = classify_stream(*model_, to_series(rows));
        return {r.label, r.trigger};
    }

private:
    std::shared_ptr<EarlyClassifier> model_;
};

}  // namespace

PYBIND11_MODULE(_etsc, m) {
    py::register_exception<ParseError>(m, "ParseError", PyExc_ValueError);
    py::register_exception<DataError>(m, "DataError", PyExc_ValueError);

    py::class_<Dataset>(m, "Dataset")
        .def(py::init(&make_dataset), py::arg("name"), py::arg("series"), py::arg("labels"))
        .def_readonly("name", &Dataset::name)
        .def_readonly("class_names", &Dataset::class_names)
        .def("__len__", &Dataset::size)
        .def_property_readonly("dims", &Dataset::dims)
        .def_property_readonly("length", &Dataset::max_length)
        .def("labels", &Dataset::labels)
        .def("series", [](const Dataset& d, std::size_t i) { return to_rows(d.instances.at(i).series); })
        .def("subset", [](const Dataset& d, const std::vector<std::size_t>& idx) { return d.subset(idx); });

    m.def(
        "load_dataset",
        [](const std::filesystem::path& path, const std::string& format, std::size_t dims,
           bool source_column) {
            LoadOptions opts;
            opts.dims = dims;
            opts.source_column = source_column;
            const auto f = format.empty() ? format_from_path(path) : parse_format(format);
            return load_dataset(path, f, opts);
        },
        py::arg("path"), py::arg("format") = "", py::arg("dims") = 1, py::arg("source_column") = false);

    m.def("dataset_stats", [](const Dataset& d) { return stats_to_json(dataset_stats(d)).dump(); });

    m.def(
        "stratified_folds",
        [](const Dataset& d, std::size_t k, std::uint64_t seed) {
            return stratified_folds(d, k, seed).assignments;
        },
        py::arg("dataset"), py::arg("k") = 5, py::arg("seed") = 0);

    m.def("harmonic_mean", &harmonic_mean, py::arg("accuracy"), py::arg("earliness"));
    m.def("algorithms", [] { return AlgorithmRegistry::builtin().ids(); });

    py::class_<PyModel>(m, "Model")
        .def(py::init<const std::string&, const Dataset&, const std::string&, std::uint64_t,
                      const std::string&>(),
             py::arg("algorithm"), py::arg("train"), py::arg("params") = "{}", py::arg("seed") = 0,
             py::arg("multivariate") = "auto", py::call_guard<py::gil_scoped_release>())
        .def_property_readonly("name", &PyModel::name)
        .def_property_readonly("length", &PyModel::length)
        .def_property_readonly("num_classes", &PyModel::classes)
        .def("classify", &PyModel::classify, py::arg("series"));

    m.def(
        "run_experiment",
        [](const std::string& config, const std::filesystem::path& base_dir) {
            const auto cfg = RunConfig::from_json(nlohmann::json::parse(config), base_dir);
            ExperimentResult result;
            {
                py::gil_scoped_release release;
                result = run_experiment(cfg);
                if (!cfg.output_dir.empty()) write_reports(result, cfg, cfg.output_dir);
            }
            nlohmann::json records = nlohmann::json::array();
            for (const auto& r : result.records) records.push_back(record_to_json(r, true));
            return nlohmann::json{{"partial", result.partial()}, {"records", records}}.dump();
        },
        py::arg("config"), py::arg("base_dir") = std::filesystem::path());
}
