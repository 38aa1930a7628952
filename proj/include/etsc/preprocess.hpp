#pragma once

#include <string>

#include "etsc/time_series.hpp"

namespace etsc {

/**
 * Fills every gap with the mean of the last value before it and the first
 * value after it. Leading gaps take the first present value and trailing
 * gaps the last present value. Throws DataError if a variable has no
 * present value at all.
 */
TimeSeries impute_missing(const TimeSeries& s);
Dataset impute_missing(const Dataset& d);

/// First t columns of every variable; 1 <= t <= length.
TimeSeries prefix(const TimeSeries& s, std::size_t t);

/// Per-variable (x - mean) / std with population std; constant variables become zeros.
TimeSeries znormalize(const TimeSeries& s);
Dataset znormalize(const Dataset& d);

enum class RaggedPolicy { Reject, Pad };
RaggedPolicy parse_ragged_policy(const std::string& name);

/**
 * Makes all instances the same length. Reject throws DataError when lengths
 * differ; Pad extends shorter series by repeating their last value.
 */
Dataset equalize_lengths(const Dataset& d, RaggedPolicy policy);

}  // namespace etsc
