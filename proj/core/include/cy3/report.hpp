#pragma once

#include <string>
#include <utility>
#include <vector>

namespace cy3 {

struct Check {
    std::string name;
    std::string expected, actual;  // canonical JSON fragments
    bool pass;
    bool operator==(const Check& o) const = default;
};

/// Machine-readable run record: command, parameters, result values and a
/// list of named checks.  Values are stored as canonical JSON fragments so
/// serialization round-trips exactly; there are no timestamps, so two runs
/// with identical arguments produce byte-identical reports.
struct Report {
    std::string command;
    std::vector<std::pair<std::string, std::string>> params;
    std::vector<std::pair<std::string, std::string>> results;
    std::vector<Check> checks;

    bool all_pass() const;

    void param(const std::string& key, const std::string& json_value);
    void result(const std::string& key, const std::string& json_value);
    void check(const std::string& name, const std::string& expected, const std::string& actual);
    void check_true(const std::string& name, bool ok);

    bool operator==(const Report& o) const = default;
};

/// Canonical JSON fragments for common value types.
std::string jv(long long v);
std::string jv(int v);
std::string jv(bool v);
std::string jv(const std::string& v);
std::string jv(const char* v);
std::string jv(const std::vector<int>& v);
std::string jv(const std::vector<long long>& v);

enum class Format { json, csv, text };

Format parse_format(const std::string& name);  // throws std::invalid_argument

std::string serialize(const Report& r, Format f);
Report parse_report_json(const std::string& text);

}  // namespace cy3
