#include "wg/config.hpp"

#include <algorithm>
#include <fstream>
#include <sstream>

#include "wg/errors.hpp"

namespace wg {

namespace {

std::string trim(const std::string& s) {
    auto a = s.find_first_not_of(" \t\r");
    if (a == std::string::npos) return "";
    auto b = s.find_last_not_of(" \t\r");
    return s.substr(a, b - a + 1);
}

double parse_real(const std::string& key, const std::string& value, long line) {
    try {
        std::size_t used = 0;
        double v = std::stod(value, &used);
        if (used != value.size()) throw std::invalid_argument(value);
        return v;
    } catch (const std::exception&) {
        throw ParseError("config key '" + key + "': bad number '" + value + "'", line);
    }
}

int parse_int(const std::string& key, const std::string& value, long line) {
    try {
        std::size_t used = 0;
        int v = std::stoi(value, &used);
        if (used != value.size()) throw std::invalid_argument(value);
        return v;
    } catch (const std::exception&) {
        throw ParseError("config key '" + key + "': bad integer '" + value + "'", line);
    }
}

} // namespace

RunConfig parse_config(std::istream& in) {
    RunConfig cfg;
    std::string line;
    long lineno = 0;
    bool have_levels = false;
    while (std::getline(in, line)) {
        ++lineno;
        auto hash = line.find('#');
        if (hash != std::string::npos) line.erase(hash);
        if (trim(line).empty()) continue;
        auto eq = line.find('=');
        if (eq == std::string::npos)
            throw ParseError("expected 'key = value', got '" + trim(line) + "'", lineno);
        std::string key = trim(line.substr(0, eq));
        std::string value = trim(line.substr(eq + 1));
        if (key.empty()) throw ParseError("empty config key", lineno);

        if (key == "case") {
            if (value != "curved_quad" && value != "circle" && value != "annulus")
                throw ParseError("config key 'case': unknown case '" + value + "'", lineno);
            cfg.case_name = value;
        } else if (key == "variant") {
            if (value != "curved" && value != "straight")
                throw ParseError("config key 'variant': expected curved or straight, got '" +
                                     value + "'",
                                 lineno);
            cfg.variant = value;
        } else if (key == "k") {
            cfg.k = parse_int(key, value, lineno);
            if (cfg.k < 1 || cfg.k > 3)
                throw ParseError("config key 'k': order must be 1, 2, or 3", lineno);
        } else if (key == "levels") {
            std::string spaced = value;
            std::replace(spaced.begin(), spaced.end(), ',', ' ');
            std::istringstream ls(spaced);
            std::string tok;
            cfg.levels.clear();
            while (ls >> tok) cfg.levels.push_back(parse_int(key, tok, lineno));
            if (cfg.levels.empty())
                throw ParseError("config key 'levels': empty list", lineno);
            for (std::size_t i = 1; i < cfg.levels.size(); ++i)
                if (cfg.levels[i] <= cfg.levels[i - 1])
                    throw ParseError("config key 'levels': must be strictly ascending", lineno);
            have_levels = true;
        } else if (key == "solver.tol") {
            cfg.solver_tol = parse_real(key, value, lineno);
            if (!(cfg.solver_tol > 0))
                throw ParseError("config key 'solver.tol': must be positive", lineno);
        } else if (key == "solver.maxiter") {
            cfg.solver_maxiter = parse_int(key, value, lineno);
        } else if (key == "rho") {
            cfg.rho = parse_real(key, value, lineno);
            if (!(cfg.rho > 0)) throw ParseError("config key 'rho': must be positive", lineno);
        } else if (key == "output.csv") {
            cfg.output_csv = value;
        } else if (key == "output.mesh") {
            cfg.output_mesh = value;
        } else if (key == "output.samples") {
            cfg.output_samples = value;
        } else {
            throw ParseError("unknown config key '" + key + "'", lineno);
        }
    }
    if (!have_levels) throw ParseError("config is missing the 'levels' key");
    return cfg;
}

RunConfig parse_config_file(const std::string& path) {
    std::ifstream in(path);
    if (!in) throw ParseError("cannot open config file '" + path + "'");
    return parse_config(in);
}

} // namespace wg
