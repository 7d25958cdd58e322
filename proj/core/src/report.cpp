#include "cy3/report.hpp"

#include <sstream>
#include <stdexcept>

#include <json.hpp>

namespace cy3 {

using ordered_json = nlohmann::ordered_json;

bool Report::all_pass() const {
    for (const Check& c : checks)
        if (!c.pass) return false;
    return true;
}

void Report::param(const std::string& key, const std::string& json_value) {
    params.emplace_back(key, json_value);
}

void Report::result(const std::string& key, const std::string& json_value) {
    results.emplace_back(key, json_value);
}

void Report::check(const std::string& name, const std::string& expected,
                   const std::string& actual) {
    checks.push_back({name, expected, actual, expected == actual});
}

void Report::check_true(const std::string& name, bool ok) {
    checks.push_back({name, jv(true), jv(ok), ok});
}

std::string jv(long long v) { return ordered_json(v).dump(); }
std::string jv(int v) { return ordered_json(v).dump(); }
std::string jv(bool v) { return ordered_json(v).dump(); }
std::string jv(const std::string& v) { return ordered_json(v).dump(); }
std::string jv(const char* v) { return ordered_json(v).dump(); }
std::string jv(const std::vector<int>& v) { return ordered_json(v).dump(); }
std::string jv(const std::vector<long long>& v) { return ordered_json(v).dump(); }

Format parse_format(const std::string& name) {
    if (name == "json") return Format::json;
    if (name == "csv") return Format::csv;
    if (name == "text") return Format::text;
    throw std::invalid_argument("unknown format: " + name);
}

namespace {

std::string csv_escape(const std::string& s) {
    if (s.find_first_of(",\"\n") == std::string::npos) return s;
    std::string out = "\"";
    for (char c : s) {
        if (c == '"') out += '"';
        out += c;
    }
    out += '"';
    return out;
}

}  // namespace

std::string serialize(const Report& r, Format f) {
    switch (f) {
        case Format::json: {
            ordered_json j;
            j["command"] = r.command;
            j["params"] = ordered_json::object();
            for (const auto& [k, v] : r.params) j["params"][k] = ordered_json::parse(v);
            j["results"] = ordered_json::object();
            for (const auto& [k, v] : r.results) j["results"][k] = ordered_json::parse(v);
            j["checks"] = ordered_json::array();
            for (const Check& c : r.checks)
                j["checks"].push_back({{"name", c.name},
                                       {"expected", ordered_json::parse(c.expected)},
                                       {"actual", ordered_json::parse(c.actual)},
                                       {"pass", c.pass}});
            return j.dump(2) + "\n";
        }
        case Format::csv: {
            std::ostringstream os;
            os << "name,expected,actual,pass\n";
            for (const Check& c : r.checks)
                os << csv_escape(c.name) << ',' << csv_escape(c.expected) << ','
                   << csv_escape(c.actual) << ',' << (c.pass ? "true" : "false") << '\n';
            return os.str();
        }
        case Format::text: {
            std::ostringstream os;
            os << "# " << r.command << '\n';
            for (const auto& [k, v] : r.params) os << "param  " << k << " = " << v << '\n';
            for (const auto& [k, v] : r.results) os << "result " << k << " = " << v << '\n';
            for (const Check& c : r.checks)
                os << (c.pass ? "[PASS] " : "[FAIL] ") << c.name << ": expected " << c.expected
                   << ", got " << c.actual << '\n';
            int npass = 0;
            for (const Check& c : r.checks) npass += c.pass;
            os << "status: " << (r.all_pass() ? "PASS" : "FAIL") << " (" << npass << "/"
               << r.checks.size() << " checks)\n";
            return os.str();
        }
    }
    throw std::logic_error("serialize: bad format");
}

Report parse_report_json(const std::string& text) {
    ordered_json j = ordered_json::parse(text);
    Report r;
    r.command = j.at("command").get<std::string>();
    for (const auto& [k, v] : j.at("params").items()) r.params.emplace_back(k, v.dump());
    for (const auto& [k, v] : j.at("results").items()) r.results.emplace_back(k, v.dump());
    for (const auto& c : j.at("checks"))
        r.checks.push_back({c.at("name").get<std::string>(), c.at("expected").dump(),
                            c.at("actual").dump(), c.at("pass").get<bool>()});
    return r;
}

}  // namespace cy3
