#pragma once

#include <string>
#include <variant>
#include <vector>

#include "invsq/config.hpp"

namespace invsq::io {

/// A cell is either text, a double (printed with 17 significant digits, so
/// values round-trip exactly), an integer, or a flag.
using Cell = std::variant<std::string, double, long long, bool>;

struct Table {
    std::vector<std::string> columns;
    std::vector<std::vector<Cell>> rows;
};

/// %.17g rendering used for every floating-point value we emit.
std::string format_double(double v);

/// Version + full config echo, used as the leading '#' comment of CSV output
/// and the "config" object of JSON output.
std::vector<std::pair<std::string, std::string>> config_echo(const SolverConfig& cfg);

/// CSV: '#' comment line with version and config, then a header line, then
/// rows, RFC-4180 quoting throughout.
std::string to_csv(const Table& table, const SolverConfig& cfg);

/// JSON: single object {"config": {...}, "rows": [...]} with stable key order.
std::string to_json(const Table& table, const SolverConfig& cfg);

std::string render(const Table& table, const SolverConfig& cfg, OutputFormat format);

}  // namespace invsq::io
