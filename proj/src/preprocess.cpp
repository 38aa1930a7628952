#include "etsc/preprocess.hpp"

#include <algorithm>
#include <cmath>
#include <optional>
#include <stdexcept>

#include "etsc/error.hpp"
#include "etsc/stats.hpp"

namespace etsc {
namespace {

// Returns false when the row has no present value.
bool impute_row(std::span<double> row) {
    std::optional<std::size_t> last_present;
    for (std::size_t t = 0; t < row.size(); ++t) {
        if (is_missing(row[t])) continue;
        const std::size_t gap_start = last_present ? *last_present + 1 : 0;
        const double fill = last_present ? 0.5 * (row[*last_present] + row[t]) : row[t];
        for (std::size_t g = gap_start; g < t; ++g) row[g] = fill;
        last_present = t;
    }
    if (!last_present) return false;
    for (std::size_t g = *last_present + 1; g < row.size(); ++g) row[g] = row[*last_present];
    return true;
}

}  // namespace

TimeSeries impute_missing(const TimeSeries& s) {
    TimeSeries out = s;
    for (std::size_t d = 0; d < out.dims(); ++d) {
        if (!impute_row(out.row(d))) {
            throw DataError("variable " + std::to_string(d) + " has no present values");
        }
    }
    return out;
}

Dataset impute_missing(const Dataset& d) {
    Dataset out = d;
    for (std::size_t i = 0; i < out.instances.size(); ++i) {
        auto& s = out.instances[i].series;
        for (std::size_t v = 0; v < s.dims(); ++v) {
            if (!impute_row(s.row(v))) {
                throw DataError("instance " + std::to_string(i) + ", variable " +
                                std::to_string(v) + " has no present values");
            }
        }
    }
    return out;
}

TimeSeries prefix(const TimeSeries& s, std::size_t t) {
    if (t < 1 || t > s.length()) {
        throw std::out_of_range("prefix length " + std::to_string(t) + " outside [1, " +
                                std::to_string(s.length()) + "]");
    }
    if (t == s.length()) return s;
    TimeSeries out(s.dims(), t);
    for (std::size_t d = 0; d < s.dims(); ++d) {
        const auto src = s.row(d);
        std::copy(src.begin(), src.begin() + static_cast<std::ptrdiff_t>(t), out.row(d).begin());
    }
    return out;
}

TimeSeries znormalize(const TimeSeries& s) {
    TimeSeries out = s;
    for (std::size_t d = 0; d < out.dims(); ++d) {
        auto row = out.row(d);
        const auto [mean, sd] = mean_and_std(row);
        if (sd <= 0.0) {
            std::fill(row.begin(), row.end(), 0.0);
            continue;
        }
        for (double& v : row) v = (v - mean) / sd;
    }
    return out;
}

Dataset znormalize(const Dataset& d) {
    Dataset out = d;
    for (auto& inst : out.instances) inst.series = znormalize(inst.series);
    return out;
}

RaggedPolicy parse_ragged_policy(const std::string& name) {
    if (name == "reject") return RaggedPolicy::Reject;
    if (name == "pad") return RaggedPolicy::Pad;
    throw std::invalid_argument("unknown ragged policy '" + name + "' (expected reject or pad)");
}

Dataset equalize_lengths(const Dataset& d, RaggedPolicy policy) {
    const std::size_t len = d.max_length();
    if (d.min_length() == len) return d;
    if (policy == RaggedPolicy::Reject) {
        throw DataError("dataset '" + d.name + "' has series lengths between " +
                        std::to_string(d.min_length()) + " and " + std::to_string(len) +
                        "; pass the pad policy to extend shorter series");
    }
    Dataset out = d;
    for (auto& inst : out.instances) {
        const TimeSeries& s = inst.series;
        if (s.length() == len) continue;
        TimeSeries padded(s.dims(), len);
        for (std::size_t v = 0; v < s.dims(); ++v) {
            const auto src = s.row(v);
            auto dst = padded.row(v);
            std::copy(src.begin(), src.end(), dst.begin());
            std::fill(dst.begin() + static_cast<std::ptrdiff_t>(src.size()), dst.end(), src.back());
        }
        inst.series = std::move(padded);
    }
    return out;
}

}  // namespace etsc
