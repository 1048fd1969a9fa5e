#pragma once

#include <map>
#include <string>
#include <vector>

namespace normsim {

/// Shortest decimal that round-trips to the same double.
std::string format_double(double value);

/// Parse with full-string validation; throws ConfigError naming `context`.
double parse_double(const std::string& text, const std::string& context);
long long parse_int(const std::string& text, const std::string& context);

/// Line-oriented `key = value` file with '#' comments. Tracks line numbers and
/// which keys were consumed so unknown keys can be rejected.
class KeyValueFile {
public:
    static KeyValueFile load(const std::string& path);
    static KeyValueFile from_string(const std::string& text, const std::string& name);

    bool has(const std::string& key) const;
    std::string get_string(const std::string& key);
    std::string get_string(const std::string& key, const std::string& fallback);
    double get_double(const std::string& key);
    double get_double(const std::string& key, double fallback);
    long long get_int(const std::string& key);
    long long get_int(const std::string& key, long long fallback);
    bool get_bool(const std::string& key, bool fallback);

    /// Throws ConfigError listing any key never fetched.
    void reject_unknown_keys() const;

    const std::string& name() const { return name_; }

private:
    struct Entry {
        std::string value;
        int line = 0;
        bool consumed = false;
    };
    std::string name_;
    std::map<std::string, Entry> entries_;

    Entry& require(const std::string& key);
};

/// Minimal CSV writer: formats doubles with format_double, joins with commas.
std::string csv_row(const std::vector<std::string>& cells);

} // namespace normsim
