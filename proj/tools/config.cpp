#include "config.hpp"

#include <cstdlib>
#include <fstream>

namespace wigsim_cli {

namespace {

std::string trim(const std::string& s) {
    const auto a = s.find_first_not_of(" \t\r");
    if (a == std::string::npos) return {};
    const auto b = s.find_last_not_of(" \t\r");
    return s.substr(a, b - a + 1);
}

}  // namespace

void Config::load_file(const std::string& path) {
    std::ifstream in(path);
    if (!in) throw ConfigError("cannot open config file: " + path);
    std::string line;
    int lineno = 0;
    while (std::getline(in, line)) {
        ++lineno;
        const std::string t = trim(line);
        if (t.empty() || t[0] == '#') continue;
        const auto eq = t.find('=');
        if (eq == std::string::npos) {
            throw ConfigError(path + ":" + std::to_string(lineno) +
                              ": expected 'key = value'");
        }
        const std::string key = trim(t.substr(0, eq));
        const std::string value = trim(t.substr(eq + 1));
        if (key.empty()) {
            throw ConfigError(path + ":" + std::to_string(lineno) + ": empty key");
        }
        kv_[key] = value;  // later lines win
    }
}

void Config::set(const std::string& key, const std::string& value) {
    kv_[key] = value;
}

bool Config::has(const std::string& key) const { return kv_.count(key) > 0; }

std::string Config::str(const std::string& key, const std::string& fallback) {
    used_.insert(key);
    const auto it = kv_.find(key);
    return it == kv_.end() ? fallback : it->second;
}

std::string Config::require_str(const std::string& key) {
    used_.insert(key);
    const auto it = kv_.find(key);
    if (it == kv_.end()) throw ConfigError("missing required key: " + key);
    return it->second;
}

double Config::num(const std::string& key, double fallback) {
    used_.insert(key);
    const auto it = kv_.find(key);
    if (it == kv_.end()) return fallback;
    char* end = nullptr;
    const double v = std::strtod(it->second.c_str(), &end);
    if (end == it->second.c_str() || *end != '\0') {
        throw ConfigError("key '" + key + "': not a number: " + it->second);
    }
    return v;
}

double Config::require_num(const std::string& key) {
    if (!has(key)) throw ConfigError("missing required key: " + key);
    return num(key, 0.0);
}

int Config::integer(const std::string& key, int fallback) {
    const double v = num(key, fallback);
    const int i = static_cast<int>(v);
    if (static_cast<double>(i) != v) {
        throw ConfigError("key '" + key + "': not an integer");
    }
    return i;
}

void Config::reject_unknown() const {
    std::string unknown;
    for (const auto& [key, value] : kv_) {
        if (!used_.count(key)) unknown += (unknown.empty() ? "" : ", ") + key;
    }
    if (!unknown.empty()) throw ConfigError("unknown key(s): " + unknown);
}

std::vector<std::string> Config::provenance() const {
    std::vector<std::string> lines;
    lines.reserve(kv_.size());
    for (const auto& [key, value] : kv_) lines.push_back(key + " = " + value);
    return lines;
}

}  // namespace wigsim_cli
