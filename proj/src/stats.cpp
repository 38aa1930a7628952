#include "etsc/stats.hpp"

#include <algorithm>
#include <cmath>
#include <stdexcept>

namespace etsc {
namespace {

// Welford accumulator; stable for the large magnitudes seen in cell counts.
struct Moments {
    std::size_t n = 0;
    double mean = 0.0;
    double m2 = 0.0;

    void add(double x) {
        ++n;
        const double delta = x - mean;
        mean += delta / static_cast<double>(n);
        m2 += delta * (x - mean);
    }
    double std_dev() const { return n == 0 ? 0.0 : std::sqrt(m2 / static_cast<double>(n)); }
};

}  // namespace

std::pair<double, double> mean_and_std(std::span<const double> values) {
    Moments m;
    for (double v : values) {
        if (!is_missing(v)) m.add(v);
    }
    return {m.mean, m.std_dev()};
}

std::string to_string(Category c) {
    switch (c) {
        case Category::Wide: return "Wide";
        case Category::Large: return "Large";
        case Category::Unstable: return "Unstable";
        case Category::Imbalanced: return "Imbalanced";
        case Category::Multiclass: return "Multiclass";
        case Category::Common: return "Common";
    }
    return "?";
}

bool DatasetStats::in(Category c) const {
    return std::find(categories.begin(), categories.end(), c) != categories.end();
}

std::vector<Category> categorize(const DatasetStats& s, const CategoryThresholds& th) {
    std::vector<Category> out;
    if (s.length > th.wide_length) out.push_back(Category::Wide);
    if (s.height > th.large_height) out.push_back(Category::Large);
    if (s.pooled_std_dev > th.unstable_std) out.push_back(Category::Unstable);
    if (s.imbalance_ratio > th.imbalance_ratio) out.push_back(Category::Imbalanced);
    if (s.num_classes > th.multiclass_classes) out.push_back(Category::Multiclass);
    if (out.empty()) out.push_back(Category::Common);
    return out;
}

DatasetStats dataset_stats(const Dataset& d, const CategoryThresholds& th) {
    if (d.empty()) throw std::invalid_argument("dataset_stats needs a non-empty dataset");
    DatasetStats s;
    s.height = d.size();
    s.length = d.max_length();
    s.num_variables = d.dims();

    std::vector<std::size_t> counts = d.class_counts();
    counts.erase(std::remove(counts.begin(), counts.end(), 0u), counts.end());
    s.num_classes = counts.size();
    const auto [lo, hi] = std::minmax_element(counts.begin(), counts.end());
    s.imbalance_ratio = static_cast<double>(*hi) / static_cast<double>(*lo);

    std::vector<Moments> per_var(s.num_variables);
    Moments pooled;
    for (const auto& inst : d.instances) {
        for (std::size_t v = 0; v < s.num_variables; ++v) {
            for (double x : inst.series.row(v)) {
                if (is_missing(x)) continue;
                per_var[v].add(x);
                pooled.add(x);
            }
        }
    }
    for (const auto& m : per_var) s.std_dev.push_back(m.std_dev());
    s.pooled_std_dev = pooled.std_dev();
    s.categories = categorize(s, th);
    return s;
}

}  // namespace etsc
