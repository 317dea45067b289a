#pragma once

/**
 * @file report.hpp
 * @brief Deterministic CSV/JSON serialization of results.
 *
 * Every emitted file carries a schema version and the full parameter set of
 * the command that produced it, so a run can be reproduced from the artifact
 * alone. Doubles are written in shortest round-trip form; re-running a
 * command with identical inputs produces byte-identical files.
 */

#include <charconv>
#include <istream>
#include <ostream>
#include <sstream>
#include <stdexcept>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

#include <json.hpp>

#include "pentabeam/fixed_point.hpp"
#include "pentabeam/norms.hpp"
#include "pentabeam/problem.hpp"

namespace pentabeam {

inline constexpr std::string_view kSchemaVersion = "1";

/// Shortest decimal string that parses back to the same double.
inline std::string format_double(double v) {
    char buf[64];
    const auto [end, ec] = std::to_chars(buf, buf + sizeof(buf), v);
    if (ec != std::errc()) throw std::runtime_error("failed to format double");
    return std::string(buf, end);
}

inline double parse_double(std::string_view text) {
    double v{};
    const auto [end, ec] = std::from_chars(text.data(), text.data() + text.size(), v);
    if (ec != std::errc() || end != text.data() + text.size())
        throw std::runtime_error("not a number: '" + std::string(text) + "'");
    return v;
}

/// One tabular artifact: commented metadata header, column names, rows.
struct OutputRecord {
    std::string schema_version = std::string(kSchemaVersion);
    std::string command;
    std::vector<std::pair<std::string, std::string>> parameters;
    std::vector<std::string> columns;
    std::vector<std::vector<std::string>> rows;

    void add_parameter(std::string key, std::string value) {
        parameters.emplace_back(std::move(key), std::move(value));
    }
};

/// Layout:
///   # schema_version=1
///   # command=<name>
///   # <key>=<value>        (one line per parameter, in order)
///   col1,col2,...
///   v,v,...
/// Cell values must not contain commas or newlines.
inline void write_csv(const OutputRecord& record, std::ostream& out) {
    out << "# schema_version=" << record.schema_version << "\n";
    out << "# command=" << record.command << "\n";
    for (const auto& [key, value] : record.parameters) out << "# " << key << "=" << value << "\n";
    for (std::size_t c = 0; c < record.columns.size(); ++c)
        out << record.columns[c] << (c + 1 < record.columns.size() ? "," : "");
    out << "\n";
    for (const auto& row : record.rows) {
        if (row.size() != record.columns.size()) throw std::runtime_error("row width mismatch");
        for (std::size_t c = 0; c < row.size(); ++c) out << row[c] << (c + 1 < row.size() ? "," : "");
        out << "\n";
    }
}

namespace detail {

inline std::vector<std::string> split_csv_line(const std::string& line) {
    std::vector<std::string> cells;
    std::size_t start = 0;
    while (true) {
        const std::size_t comma = line.find(',', start);
        if (comma == std::string::npos) {
            cells.push_back(line.substr(start));
            break;
        }
        cells.push_back(line.substr(start, comma - start));
        start = comma + 1;
    }
    return cells;
}

}  // namespace detail

inline OutputRecord read_csv(std::istream& in) {
    OutputRecord record;
    record.schema_version.clear();
    std::string line;
    bool header_seen = false;
    while (std::getline(in, line)) {
        if (!line.empty() && line.back() == '\r') line.pop_back();
        if (line.empty()) continue;
        if (line.front() == '#') {
            std::size_t pos = 1;
            while (pos < line.size() && line[pos] == ' ') ++pos;
            const std::size_t eq = line.find('=', pos);
            if (eq == std::string::npos) throw std::runtime_error("malformed metadata line: " + line);
            const std::string key = line.substr(pos, eq - pos);
            const std::string value = line.substr(eq + 1);
            if (key == "schema_version")
                record.schema_version = value;
            else if (key == "command")
                record.command = value;
            else
                record.add_parameter(key, value);
            continue;
        }
        if (!header_seen) {
            record.columns = detail::split_csv_line(line);
            header_seen = true;
            continue;
        }
        auto cells = detail::split_csv_line(line);
        if (cells.size() != record.columns.size())
            throw std::runtime_error("row width mismatch in line: " + line);
        record.rows.push_back(std::move(cells));
    }
    if (record.schema_version.empty()) throw std::runtime_error("missing schema_version");
    if (!header_seen) throw std::runtime_error("missing header line");
    return record;
}

/// JSON companion of a solver run: parameters, convergence data, and the full
/// diff/rate history.
inline nlohmann::json trace_to_json(const BeamProblem& problem, const IterationConfig& config,
                                    const IterationTrace& trace) {
    nlohmann::json j;
    j["schema_version"] = kSchemaVersion;
    j["bc"] = to_string(problem.bc);
    j["n"] = problem.n;
    j["k"] = problem.k;
    j["p"] = to_string(config.p);
    j["tol"] = config.tol;
    j["iterations"] = trace.iterations;
    j["converged"] = trace.converged;
    j["lipschitz"] = lipschitz(problem, config.p).value;
    j["observed_max_rate"] = trace.observed_max_rate;
    j["diffs"] = trace.diffs;
    j["rates"] = trace.rates;
    return j;
}

}  // namespace pentabeam
