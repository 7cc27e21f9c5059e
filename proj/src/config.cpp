#include "nkdet/config.hpp"

#include <fstream>

namespace nkdet {

namespace {

std::string trim(const std::string& s) {
    const auto first = s.find_first_not_of(" \t\r");
    if (first == std::string::npos) return "";
    const auto last = s.find_last_not_of(" \t\r");
    return s.substr(first, last - first + 1);
}

}  // namespace

std::map<std::string, std::string> parse_config_file(const std::string& path) {
    std::ifstream in(path);
    if (!in) throw std::runtime_error("cannot read config file: " + path);
    std::map<std::string, std::string> entries;
    std::string line;
    int lineno = 0;
    while (std::getline(in, line)) {
        ++lineno;
        const auto hash = line.find('#');
        if (hash != std::string::npos) line.erase(hash);
        line = trim(line);
        if (line.empty()) continue;
        const auto eq = line.find('=');
        if (eq == std::string::npos)
            throw std::runtime_error(path + ":" + std::to_string(lineno)
                                     + ": expected key=value");
        entries[trim(line.substr(0, eq))] = trim(line.substr(eq + 1));
    }
    return entries;
}

void apply_config_entries(const std::map<std::string, std::string>& entries,
                          ReportConfig& config) {
    for (const auto& [key, value] : entries) {
        try {
            if (key == "zero-tol") {
                config.zero_tol = std::stod(value);
            } else if (key == "boundary-tol") {
                config.boundary_tol = std::stod(value);
            } else if (key == "seed") {
                config.seed = std::stoull(value);
            } else if (key == "samples") {
                config.sample_count = std::stoi(value);
            } else if (key == "exact") {
                if (value == "true" || value == "1") config.exact_mode = true;
                else if (value == "false" || value == "0") config.exact_mode = false;
                else throw std::runtime_error("expected true/false");
            } else {
                throw std::runtime_error("unknown config key: " + key);
            }
        } catch (const std::invalid_argument&) {
            throw std::runtime_error("config key '" + key + "': bad value '" + value + "'");
        }
    }
    if (!(config.zero_tol > 0) || !(config.boundary_tol > 0))
        throw std::runtime_error("tolerances must be positive");
}

}  // namespace nkdet
