#pragma once

#include <cmath>
#include <cstddef>
#include <limits>
#include <span>
#include <string>
#include <vector>

namespace etsc {

/// Dense class index into Dataset::class_names.
using Label = int;

inline constexpr double kMissing = std::numeric_limits<double>::quiet_NaN();

inline bool is_missing(double v) { return std::isnan(v); }

/**
 * A (possibly multivariate) sequence of real measurements.
 *
 * Stored row-major as dims() variables by length() time-points. Missing
 * entries are represented by NaN until imputation removes them.
 */
class TimeSeries {
public:
    TimeSeries() = default;
    TimeSeries(std::size_t dims, std::size_t length, double fill = 0.0);

    static TimeSeries univariate(std::vector<double> values);
    /// Every row must have the same length.
    static TimeSeries from_rows(const std::vector<std::vector<double>>& rows);

    std::size_t dims() const { return dims_; }
    std::size_t length() const { return length_; }
    bool empty() const { return length_ == 0; }

    double operator()(std::size_t d, std::size_t t) const { return values_[d * length_ + t]; }
    double& operator()(std::size_t d, std::size_t t) { return values_[d * length_ + t]; }

    std::span<const double> row(std::size_t d) const {
        return {values_.data() + d * length_, length_};
    }
    std::span<double> row(std::size_t d) { return {values_.data() + d * length_, length_}; }

    /// All values, variable-major.
    std::span<const double> values() const { return values_; }

    bool has_missing() const;

    /// Exact element-wise equality; NaN never compares equal.
    friend bool operator==(const TimeSeries& a, const TimeSeries& b) {
        return a.dims_ == b.dims_ && a.length_ == b.length_ && a.values_ == b.values_;
    }

private:
    std::size_t dims_ = 0;
    std::size_t length_ = 0;
    std::vector<double> values_;
};

struct LabeledInstance {
    TimeSeries series;
    Label label = 0;
    /// Optional grouping key, e.g. the vessel an instance was cut from.
    std::string source_id;
};

/**
 * A named collection of labeled instances sharing one variable count.
 *
 * class_names is the ordered class set; labels index into it.
 */
struct Dataset {
    std::string name;
    std::vector<LabeledInstance> instances;
    std::vector<std::string> class_names;

    std::size_t size() const { return instances.size(); }
    bool empty() const { return instances.empty(); }
    std::size_t num_classes() const { return class_names.size(); }
    std::size_t dims() const { return instances.empty() ? 0 : instances.front().series.dims(); }
    std::size_t max_length() const;
    std::size_t min_length() const;
    bool equal_length() const { return min_length() == max_length(); }

    std::vector<Label> labels() const;
    std::vector<std::size_t> class_counts() const;

    /// Instances at the given indices, same class set.
    Dataset subset(std::span<const std::size_t> indices) const;
    /// Univariate dataset holding only variable d of every instance.
    Dataset variable(std::size_t d) const;

    /**
     * Builds a dataset from raw string labels. Classes are ordered
     * lexicographically and mapped to dense indices.
     */
    static Dataset from_named(std::string name, std::vector<TimeSeries> series,
                              const std::vector<std::string>& labels,
                              std::vector<std::string> source_ids = {});

    /// Throws DataError if variable counts differ or class_set is inconsistent.
    void validate() const;
};

}  // namespace etsc
