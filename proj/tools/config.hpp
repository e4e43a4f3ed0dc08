#pragma once

#include <map>
#include <set>
#include <stdexcept>
#include <string>
#include <vector>

namespace wigsim_cli {

// Thrown on malformed input, unknown keys, or missing required keys; the
// driver maps it to exit code 2.
struct ConfigError : std::runtime_error {
    using std::runtime_error::runtime_error;
};

// Line-oriented "key = value" configuration with '#' comment lines.
// Command-line flags override file keys. Every key must be consumed by the
// command that runs; leftovers are reported by name.
class Config {
public:
    void load_file(const std::string& path);
    void set(const std::string& key, const std::string& value);
    bool has(const std::string& key) const;

    std::string str(const std::string& key, const std::string& fallback);
    std::string require_str(const std::string& key);
    double num(const std::string& key, double fallback);
    double require_num(const std::string& key);
    int integer(const std::string& key, int fallback);

    void reject_unknown() const;  // throws ConfigError naming unused keys
    // resolved "key = value" lines, sorted, for provenance headers
    std::vector<std::string> provenance() const;

private:
    std::map<std::string, std::string> kv_;
    mutable std::set<std::string> used_;
};

}  // namespace wigsim_cli
