#pragma once

#include "burn/burning.hpp"
#include "burn/decomposition.hpp"
#include "burn/graph.hpp"

#include <iosfwd>
#include <optional>
#include <string>
#include <string_view>
#include <variant>
#include <vector>

namespace burn::io {

// Graph files:
//
//   c <comment>
//   p burn <n> <m>
//   e <u> <v>          (m lines, 0-based ids)
//
// Decomposition files (bag ids 1-based, contiguous):
//
//   bag <id>: v1 v2 ...
//   tedge <child> <parent>
//   root <id>          (defaults to 1 when omitted)
//
// Blank lines and lines starting with '#' or 'c ' are ignored in both.
// Parse failures throw InputError naming the offending line.

Graph read_graph(std::istream& in);
void write_graph(std::ostream& out, const Graph& g);

Decomposition read_decomposition(std::istream& in);
void write_decomposition(std::ostream& out, const Decomposition& t);

Graph load_graph(const std::string& path);
Decomposition load_decomposition(const std::string& path);
void save_graph(const std::string& path, const Graph& g);
void save_decomposition(const std::string& path, const Decomposition& t);

/// Whitespace-separated vertex ids.
BurningSchedule parse_schedule(std::string_view text);

using DetailValue = std::variant<std::int64_t, double, bool, std::string>;

struct RunReport {
    std::string algorithm;
    std::size_t vertices = 0;
    std::size_t edges = 0;
    BurningSchedule schedule;
    Round completion = 0;
    Round bound = 0;     // certified upper bound on completion
    Round lower = 0;     // certified lower bound on the burning number
    /// Algorithm-specific name/value pairs, printed in order.
    std::vector<std::pair<std::string, DetailValue>> details;
    /// Per-line trace (empty unless requested).
    std::vector<std::string> trace;
    /// Only reported when timing is requested; off by default so output
    /// stays byte-identical across runs.
    std::optional<double> wall_time_ms;

    double ratio() const { return lower == 0 ? 0.0 : static_cast<double>(completion) / lower; }
};

/// Single-line JSON object; keys in a fixed order.
std::string to_json(const RunReport& report);
/// "key: value" lines.
std::string to_text(const RunReport& report);

std::string format_ratio(double r);

} // namespace burn::io
