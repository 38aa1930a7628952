#include "etsc/io.hpp"

#include <algorithm>
#include <cctype>
#include <charconv>
#include <fstream>
#include <istream>
#include <optional>
#include <ostream>
#include <set>
#include <sstream>
#include <string_view>

#include "etsc/error.hpp"

namespace etsc {
namespace {

std::string_view trim(std::string_view s) {
    while (!s.empty() && std::isspace(static_cast<unsigned char>(s.front()))) s.remove_prefix(1);
    while (!s.empty() && std::isspace(static_cast<unsigned char>(s.back()))) s.remove_suffix(1);
    return s;
}

std::string lower(std::string_view s) {
    std::string out(s);
    std::transform(out.begin(), out.end(), out.begin(),
                   [](unsigned char c) { return static_cast<char>(std::tolower(c)); });
    return out;
}

std::vector<std::string_view> split(std::string_view s, char sep) {
    std::vector<std::string_view> out;
    std::size_t start = 0;
    for (std::size_t i = 0; i <= s.size(); ++i) {
        if (i == s.size() || s[i] == sep) {
            out.push_back(s.substr(start, i - start));
            start = i + 1;
        }
    }
    return out;
}

// Empty cells, "?" and NaN spellings are missing; anything else must parse fully.
std::optional<double> parse_value(std::string_view cell) {
    cell = trim(cell);
    if (cell.empty() || cell == "?") return kMissing;
    const std::string l = lower(cell);
    if (l == "nan" || l == "-nan") return kMissing;
    if (cell.front() == '+') cell.remove_prefix(1);
    double v = 0.0;
    const auto [ptr, ec] = std::from_chars(cell.data(), cell.data() + cell.size(), v);
    if (ec != std::errc() || ptr != cell.data() + cell.size()) return std::nullopt;
    return v;
}

bool skippable(std::string_view line) {
    line = trim(line);
    return line.empty() || line.front() == '#';
}

}  // namespace

DataFormat format_from_path(const std::filesystem::path& path) {
    return lower(path.extension().string()) == ".ts" ? DataFormat::TsText : DataFormat::Csv;
}

DataFormat parse_format(const std::string& name) {
    const std::string l = lower(name);
    if (l == "csv") return DataFormat::Csv;
    if (l == "ts" || l == "ts-text") return DataFormat::TsText;
    throw std::invalid_argument("unknown dataset format '" + name + "' (expected csv or ts-text)");
}

std::string to_string(DataFormat f) { return f == DataFormat::Csv ? "csv" : "ts-text"; }

Dataset load_dataset(const std::filesystem::path& path, DataFormat format,
                     const LoadOptions& options) {
    std::ifstream in(path);
    if (!in) throw Error("cannot open dataset file '" + path.string() + "'");
    Dataset d = format == DataFormat::Csv ? parse_csv(in, path.string(), options)
                                          : parse_ts(in, path.string());
    d.name = path.stem().string();
    return d;
}

Dataset parse_csv(std::istream& in, const std::string& source, const LoadOptions& options) {
    if (options.dims == 0) throw std::invalid_argument("dims must be at least 1");
    std::vector<TimeSeries> series;
    std::vector<std::string> labels;
    std::vector<std::string> sources;
    std::string line;
    std::size_t lineno = 0;
    const std::size_t header_fields = options.source_column ? 2 : 1;
    while (std::getline(in, line)) {
        ++lineno;
        if (skippable(line)) continue;
        const auto fields = split(trim(line), ',');
        if (fields.size() <= header_fields) {
            throw ParseError(source, lineno, "expected a label followed by values");
        }
        const std::size_t nvalues = fields.size() - header_fields;
        if (nvalues % options.dims != 0) {
            throw ParseError(source, lineno,
                             std::to_string(nvalues) + " values do not split into " +
                                 std::to_string(options.dims) + " variables");
        }
        const std::size_t len = nvalues / options.dims;
        TimeSeries s(options.dims, len);
        for (std::size_t k = 0; k < nvalues; ++k) {
            const auto v = parse_value(fields[header_fields + k]);
            if (!v) {
                throw ParseError(source, lineno,
                                 "non-numeric value '" + std::string(trim(fields[header_fields + k])) +
                                     "' in column " + std::to_string(header_fields + k + 1));
            }
            s(k / len, k % len) = *v;
        }
        labels.emplace_back(trim(fields[0]));
        if (options.source_column) sources.emplace_back(trim(fields[1]));
        series.push_back(std::move(s));
    }
    if (series.empty()) throw ParseError(source, lineno, "no instances found");
    return Dataset::from_named("", std::move(series), labels, std::move(sources));
}

Dataset parse_ts(std::istream& in, const std::string& source) {
    std::vector<TimeSeries> series;
    std::vector<std::string> labels;
    std::set<std::string> declared;
    bool has_labels = true;
    bool in_data = false;
    std::optional<std::size_t> dims;
    std::string problem;
    std::string line;
    std::size_t lineno = 0;

    while (std::getline(in, line)) {
        ++lineno;
        if (skippable(line)) continue;
        const std::string_view body = trim(line);
        if (!in_data) {
            if (body.front() != '@') throw ParseError(source, lineno, "expected a header line");
            const auto space = body.find_first_of(" \t");
            const std::string key = lower(body.substr(0, space));
            const std::string_view rest =
                space == std::string_view::npos ? std::string_view{} : trim(body.substr(space));
            if (key == "@data") {
                in_data = true;
            } else if (key == "@problemname") {
                problem = std::string(rest);
            } else if (key == "@timestamps") {
                if (lower(rest) == "true") {
                    throw ParseError(source, lineno, "timestamped .ts data is not supported");
                }
            } else if (key == "@classlabel") {
                std::istringstream toks{std::string(rest)};
                std::string flag;
                toks >> flag;
                has_labels = lower(flag) == "true";
                for (std::string c; toks >> c;) declared.insert(c);
            }
            // Remaining headers (@missing, @univariate, @dimensions, ...) are descriptive.
            continue;
        }

        auto parts = split(body, ':');
        if (!has_labels) throw ParseError(source, lineno, "dataset declares no class labels");
        if (parts.size() < 2) throw ParseError(source, lineno, "expected dimensions and a label");
        const std::string label(trim(parts.back()));
        parts.pop_back();
        if (!declared.empty() && !declared.count(label)) {
            throw ParseError(source, lineno, "label '" + label + "' is not declared in @classLabel");
        }
        if (dims && *dims != parts.size()) {
            throw DataError(source + ":" + std::to_string(lineno) + ": instance has " +
                            std::to_string(parts.size()) + " variables, expected " +
                            std::to_string(*dims));
        }
        dims = parts.size();
        std::vector<std::vector<double>> rows;
        std::size_t len = 0;
        for (const auto& part : parts) {
            std::vector<double> row;
            for (const auto& cell : split(part, ',')) {
                const auto v = parse_value(cell);
                if (!v) {
                    throw ParseError(source, lineno,
                                     "non-numeric value '" + std::string(trim(cell)) + "'");
                }
                row.push_back(*v);
            }
            len = std::max(len, row.size());
            rows.push_back(std::move(row));
        }
        // Shorter variables are padded with missing values; imputation fills them.
        for (auto& row : rows) row.resize(len, kMissing);
        series.push_back(TimeSeries::from_rows(rows));
        labels.push_back(label);
    }
    if (series.empty()) throw ParseError(source, lineno, "no @data instances found");
    Dataset d = Dataset::from_named(problem, std::move(series), labels);
    return d;
}

std::string format_double(double v) {
    if (is_missing(v)) return "NaN";
    char buf[64];
    const auto [ptr, ec] = std::to_chars(buf, buf + sizeof buf, v);
    return std::string(buf, ptr);
}

void write_csv(const Dataset& d, std::ostream& out, bool source_column) {
    for (const auto& inst : d.instances) {
        out << d.class_names.at(static_cast<std::size_t>(inst.label));
        if (source_column) out << ',' << inst.source_id;
        for (double v : inst.series.values()) out << ',' << format_double(v);
        out << '\n';
    }
}

}  // namespace etsc
