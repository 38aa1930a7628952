#include "etsc/time_series.hpp"

#include <algorithm>
#include <map>
#include <stdexcept>

#include "etsc/error.hpp"

namespace etsc {

TimeSeries::TimeSeries(std::size_t dims, std::size_t length, double fill)
    : dims_(dims), length_(length), values_(dims * length, fill) {}

TimeSeries TimeSeries::univariate(std::vector<double> values) {
    TimeSeries s;
    s.dims_ = 1;
    s.length_ = values.size();
    s.values_ = std::move(values);
    return s;
}

TimeSeries TimeSeries::from_rows(const std::vector<std::vector<double>>& rows) {
    if (rows.empty()) return {};
    const std::size_t len = rows.front().size();
    TimeSeries s(rows.size(), len);
    for (std::size_t d = 0; d < rows.size(); ++d) {
        if (rows[d].size() != len) {
            throw DataError("variables of one series must have identical length");
        }
        std::copy(rows[d].begin(), rows[d].end(), s.row(d).begin());
    }
    return s;
}

bool TimeSeries::has_missing() const {
    return std::any_of(values_.begin(), values_.end(), [](double v) { return is_missing(v); });
}

std::size_t Dataset::max_length() const {
    std::size_t m = 0;
    for (const auto& inst : instances) m = std::max(m, inst.series.length());
    return m;
}

std::size_t Dataset::min_length() const {
    if (instances.empty()) return 0;
    std::size_t m = instances.front().series.length();
    for (const auto& inst : instances) m = std::min(m, inst.series.length());
    return m;
}

std::vector<Label> Dataset::labels() const {
    std::vector<Label> out;
    out.reserve(instances.size());
    for (const auto& inst : instances) out.push_back(inst.label);
    return out;
}

std::vector<std::size_t> Dataset::class_counts() const {
    std::vector<std::size_t> counts(class_names.size(), 0);
    for (const auto& inst : instances) ++counts.at(static_cast<std::size_t>(inst.label));
    return counts;
}

Dataset Dataset::subset(std::span<const std::size_t> indices) const {
    Dataset out;
    out.name = name;
    out.class_names = class_names;
    out.instances.reserve(indices.size());
    for (std::size_t i : indices) out.instances.push_back(instances.at(i));
    return out;
}

Dataset Dataset::variable(std::size_t d) const {
    Dataset out;
    out.name = name;
    out.class_names = class_names;
    out.instances.reserve(instances.size());
    for (const auto& inst : instances) {
        const auto row = inst.series.row(d);
        out.instances.push_back(
            {TimeSeries::univariate({row.begin(), row.end()}), inst.label, inst.source_id});
    }
    return out;
}

Dataset Dataset::from_named(std::string name, std::vector<TimeSeries> series,
                            const std::vector<std::string>& labels,
                            std::vector<std::string> source_ids) {
    if (series.size() != labels.size()) {
        throw std::invalid_argument("series and labels differ in count");
    }
    if (!source_ids.empty() && source_ids.size() != series.size()) {
        throw std::invalid_argument("source ids and series differ in count");
    }
    std::map<std::string, Label> index;
    for (const auto& l : labels) index.emplace(l, 0);
    Dataset out;
    out.name = std::move(name);
    for (auto& [cls, idx] : index) {
        idx = static_cast<Label>(out.class_names.size());
        out.class_names.push_back(cls);
    }
    out.instances.reserve(series.size());
    for (std::size_t i = 0; i < series.size(); ++i) {
        out.instances.push_back({std::move(series[i]), index.at(labels[i]),
                                 source_ids.empty() ? std::string{} : std::move(source_ids[i])});
    }
    out.validate();
    return out;
}

void Dataset::validate() const {
    const std::size_t d = dims();
    for (std::size_t i = 0; i < instances.size(); ++i) {
        const auto& inst = instances[i];
        if (inst.series.dims() != d) {
            throw DataError("instance " + std::to_string(i) + " has " +
                            std::to_string(inst.series.dims()) + " variables, expected " +
                            std::to_string(d));
        }
        if (inst.series.length() == 0) {
            throw DataError("instance " + std::to_string(i) + " is empty");
        }
        if (inst.label < 0 || static_cast<std::size_t>(inst.label) >= class_names.size()) {
            throw DataError("instance " + std::to_string(i) + " has a label outside the class set");
        }
    }
}

}  // namespace etsc
