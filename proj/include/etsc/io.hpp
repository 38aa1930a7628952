#pragma once

#include <filesystem>
#include <iosfwd>
#include <string>

#include "etsc/time_series.hpp"

namespace etsc {

enum class DataFormat {
    Csv,     ///< label[,source],values... one instance per line
    TsText,  ///< UEA/UCR sktime .ts layout
};

struct LoadOptions {
    /// CSV only: values per line are split into this many variable-major blocks.
    std::size_t dims = 1;
    /// CSV only: the field after the label is a grouping key (source_id).
    bool source_column = false;
};

/// ".ts" selects TsText, anything else Csv.
DataFormat format_from_path(const std::filesystem::path& path);
DataFormat parse_format(const std::string& name);
std::string to_string(DataFormat f);

/**
 * Loads a dataset. Ragged lengths are kept as-is; missing values ("?",
 * "NaN" or an empty CSV cell) become NaN. Throws ParseError naming the line
 * on malformed input and DataError on an inconsistent variable count.
 */
Dataset load_dataset(const std::filesystem::path& path, DataFormat format,
                     const LoadOptions& options = {});

Dataset parse_csv(std::istream& in, const std::string& source, const LoadOptions& options = {});
Dataset parse_ts(std::istream& in, const std::string& source);

/// Writes the CSV layout read by parse_csv, with round-trip float precision.
void write_csv(const Dataset& d, std::ostream& out, bool source_column = false);

/// Shortest decimal string that parses back to exactly v; "NaN" for missing.
std::string format_double(double v);

}  // namespace etsc
