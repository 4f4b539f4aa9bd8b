#include "invsq/io.hpp"

#include <cstdio>

#include "json.hpp"

#include "invsq/version.hpp"

namespace invsq::io {

namespace {

std::string csv_quote(const std::string& field) {
    if (field.find_first_of(",\"\r\n") == std::string::npos) return field;
    std::string out = "\"";
    for (char c : field) {
        if (c == '"') out += "\"\"";
        else out += c;
    }
    out += "\"";
    return out;
}

std::string cell_text(const Cell& cell) {
    if (std::holds_alternative<std::string>(cell)) return std::get<std::string>(cell);
    if (std::holds_alternative<double>(cell)) return format_double(std::get<double>(cell));
    if (std::holds_alternative<long long>(cell))
        return std::to_string(std::get<long long>(cell));
    return std::get<bool>(cell) ? "1" : "0";
}

}  // namespace

std::string format_double(double v) {
    char buf[40];
    std::snprintf(buf, sizeof(buf), "%.17g", v);
    return buf;
}

std::vector<std::pair<std::string, std::string>> config_echo(const SolverConfig& cfg) {
    return {
        {"version", kVersion},
        {"rho0_sq", format_double(cfg.rho0_sq)},
        {"eps_over_a", format_double(cfg.eps_over_a)},
        {"n_max", std::to_string(cfg.n_max)},
        {"n_states", std::to_string(cfg.n_states)},
        {"root_tol", format_double(cfg.root_tol)},
        {"quad_rel_tol", format_double(cfg.quadrature.rel_tol)},
        {"quad_abs_tol", format_double(cfg.quadrature.abs_tol)},
        {"quad_max_subdivisions", std::to_string(cfg.quadrature.max_subdivisions)},
        {"grid_points", std::to_string(cfg.grid_points)},
        {"grid_max_x_over_eps", format_double(cfg.grid_max_x_over_eps)},
        {"format", cfg.output_format == OutputFormat::csv ? "csv" : "json"},
    };
}

std::string to_csv(const Table& table, const SolverConfig& cfg) {
    std::string out = "# invsq";
    for (const auto& [key, value] : config_echo(cfg))
        out += key == "version" ? " " + value : " " + key + "=" + value;
    out += "\n";
    for (std::size_t i = 0; i < table.columns.size(); ++i) {
        if (i) out += ",";
        out += csv_quote(table.columns[i]);
    }
    out += "\n";
    for (const auto& row : table.rows) {
        for (std::size_t i = 0; i < row.size(); ++i) {
            if (i) out += ",";
            out += csv_quote(cell_text(row[i]));
        }
        out += "\n";
    }
    return out;
}

std::string to_json(const Table& table, const SolverConfig& cfg) {
    nlohmann::ordered_json root;
    nlohmann::ordered_json config;
    config["version"] = kVersion;
    config["rho0_sq"] = cfg.rho0_sq;
    config["eps_over_a"] = cfg.eps_over_a;
    config["n_max"] = cfg.n_max;
    config["n_states"] = cfg.n_states;
    config["root_tol"] = cfg.root_tol;
    config["quad_rel_tol"] = cfg.quadrature.rel_tol;
    config["quad_abs_tol"] = cfg.quadrature.abs_tol;
    config["quad_max_subdivisions"] = cfg.quadrature.max_subdivisions;
    config["grid_points"] = cfg.grid_points;
    config["grid_max_x_over_eps"] = cfg.grid_max_x_over_eps;
    config["format"] = cfg.output_format == OutputFormat::csv ? "csv" : "json";
    root["config"] = config;

    nlohmann::ordered_json rows = nlohmann::ordered_json::array();
    for (const auto& row : table.rows) {
        nlohmann::ordered_json obj;
        for (std::size_t i = 0; i < row.size() && i < table.columns.size(); ++i) {
            const Cell& cell = row[i];
            if (std::holds_alternative<std::string>(cell))
                obj[table.columns[i]] = std::get<std::string>(cell);
            else if (std::holds_alternative<double>(cell))
                obj[table.columns[i]] = std::get<double>(cell);
            else if (std::holds_alternative<long long>(cell))
                obj[table.columns[i]] = std::get<long long>(cell);
            else
                obj[table.columns[i]] = std::get<bool>(cell);
        }
        rows.push_back(obj);
    }
    root["rows"] = rows;
    return root.dump(2) + "\n";
}

std::string render(const Table& table, const SolverConfig& cfg, OutputFormat format) {
    return format == OutputFormat::csv ? to_csv(table, cfg) : to_json(table, cfg);
}

}  // namespace invsq::io
