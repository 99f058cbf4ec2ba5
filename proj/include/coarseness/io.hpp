#pragma once

#include <iosfwd>
#include <optional>
#include <stdexcept>
#include <string>
#include <vector>

#include "coarseness/islands.hpp"
#include "coarseness/rational.hpp"

namespace coarseness {

struct ParseError : std::runtime_error {
    int line;
    ParseError(int line_, const std::string& what)
        : std::runtime_error("line " + std::to_string(line_) + ": " + what), line(line_) {}
};

// One point per line: `x y C` with C in {R, B}; `#` starts a comment line.
ColoredPointSet read_instance(std::istream& in);
ColoredPointSet read_instance_file(const std::string& path);  // "-" reads stdin
void write_instance(std::ostream& out, const ColoredPointSet& ps);

// Blocks file for check-partition: one block per line, space-separated indices.
std::vector<std::vector<int>> read_blocks(std::istream& in);
std::vector<std::vector<int>> read_blocks_file(const std::string& path);

struct ReportRecord {
    std::string command;
    int n = 0, r = 0, b = 0;
    std::optional<int> disc;
    std::optional<int> d1, d2;
    std::optional<int> k, dk;
    std::optional<Rational> lower;
    std::optional<int> upper;
    std::optional<int> value;                  // exact coarseness
    std::optional<int> witness_disc;
    std::optional<std::uint64_t> partitions_examined;
    std::optional<std::vector<std::vector<int>>> partition;  // index lists
    std::optional<std::vector<int>> witness_island;
    std::optional<std::string> coloring;       // e.g. "RBRB"
    std::optional<int> certified_upper;
    std::optional<int> objective_value;
    std::optional<int> m, classes;
    std::optional<std::uint64_t> shatter_bound;
    std::optional<bool> valid;
    std::optional<std::string> violation;
    double timing_ms = 0.0;
};

std::string to_json(const ReportRecord& rec);
ReportRecord report_from_json(const std::string& text);

}  // namespace coarseness
