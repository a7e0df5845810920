#include "subcone/io.hpp"

#include <cerrno>
#include <cmath>
#include <cstdio>
#include <cstdlib>
#include <fstream>
#include <sstream>
#include <vector>

#include <json.hpp>

#include "subcone/errors.hpp"

namespace subcone::io {

using nlohmann::json;

namespace {

std::string trim(std::string_view s)
{
    const auto first = s.find_first_not_of(" \t\r\n");
    if (first == std::string_view::npos) {
        return {};
    }
    const auto last = s.find_last_not_of(" \t\r\n");
    return std::string(s.substr(first, last - first + 1));
}

[[noreturn]] void fail(std::string_view source, const std::string& where, const std::string& what)
{
    throw ParseError(std::string(source) + ": " + (where.empty() ? "" : where + ": ") + what);
}

Rational rational_field(const json& obj, const char* key, std::string_view source, const std::string& where)
{
    if (!obj.is_object() || !obj.contains(key)) {
        fail(source, where, std::string("missing field '") + key + "'");
    }
    const json& v = obj.at(key);
    if (v.is_number_integer()) {
        return Rational(v.get<std::int64_t>());
    }
    if (!v.is_string()) {
        fail(source, where + "." + key, "expected a rational string \"p/q\"");
    }
    try {
        return Rational::parse(v.get<std::string>());
    } catch (const std::invalid_argument& e) {
        fail(source, where + "." + key, e.what());
    }
}

json parse_json(std::string_view text, std::string_view source)
{
    try {
        return json::parse(text);
    } catch (const json::parse_error& e) {
        fail(source, "", e.what());
    }
}

json pair_json(const Rational& t, const Rational& v) { return json{{"t", t.str()}, {"v", v.str()}}; }

}  // namespace

std::string serialize(const PLFunction& f)
{
    json pts = json::array();
    for (const auto& p : f.breakpoints()) {
        pts.push_back(pair_json(p.t, p.v));
    }
    return json{{"breakpoints", pts}}.dump() + "\n";
}

std::string serialize(const DiscreteFunction& g)
{
    json pts = json::array();
    for (const auto& p : g.support()) {
        pts.push_back(pair_json(p.t, p.a));
    }
    return json{{"rho", g.rho().str()}, {"support", pts}}.dump() + "\n";
}

PLFunction parse_pl_function(std::string_view text, std::string_view source)
{
    const json doc = parse_json(text, source);
    if (!doc.is_object() || !doc.contains("breakpoints") || !doc.at("breakpoints").is_array()) {
        fail(source, "", "expected an object with a \"breakpoints\" array");
    }
    std::vector<Breakpoint> pts;
    const json& arr = doc.at("breakpoints");
    for (std::size_t i = 0; i < arr.size(); ++i) {
        const std::string where = "breakpoints[" + std::to_string(i) + "]";
        pts.push_back({rational_field(arr[i], "t", source, where), rational_field(arr[i], "v", source, where)});
    }
    try {
        return PLFunction(std::move(pts));
    } catch (const InvariantError& e) {
        fail(source, "", e.what());
    }
}

DiscreteFunction parse_discrete_function(std::string_view text, std::string_view source)
{
    const json doc = parse_json(text, source);
    if (!doc.is_object()) {
        fail(source, "", "expected an object with \"rho\" and \"support\"");
    }
    const Rational rho = rational_field(doc, "rho", source, "");
    std::vector<SupportPoint> pts;
    if (doc.contains("support")) {
        const json& arr = doc.at("support");
        if (!arr.is_array()) {
            fail(source, "support", "expected an array");
        }
        for (std::size_t i = 0; i < arr.size(); ++i) {
            const std::string where = "support[" + std::to_string(i) + "]";
            pts.push_back({rational_field(arr[i], "t", source, where), rational_field(arr[i], "v", source, where)});
        }
    }
    try {
        return DiscreteFunction(rho, std::move(pts));
    } catch (const InvariantError& e) {
        fail(source, "", e.what());
    }
}

TreeMetric parse_tree_metric_csv(std::string_view text, std::string_view source)
{
    std::vector<std::vector<Rational>> rows;
    std::istringstream in{std::string(text)};
    std::string line;
    std::size_t line_no = 0;
    bool seen_content = false;
    while (std::getline(in, line)) {
        ++line_no;
        if (trim(line).empty()) {
            continue;
        }
        std::vector<Rational> row;
        std::size_t col = 1;
        std::size_t pos = 0;
        bool header = false;
        while (true) {
            const auto comma = line.find(',', pos);
            const std::string field = trim(std::string_view(line).substr(pos, comma - pos));
            try {
                row.push_back(Rational::parse(field));
            } catch (const std::invalid_argument& e) {
                if (!seen_content) {
                    header = true;
                    break;
                }
                throw ParseError(std::string(source) + ":" + std::to_string(line_no) + ":" + std::to_string(col) + ": " + e.what());
            }
            if (comma == std::string::npos) {
                break;
            }
            pos = comma + 1;
            ++col;
        }
        seen_content = true;
        if (!header) {
            rows.push_back(std::move(row));
        }
    }
    try {
        return TreeMetric(std::move(rows));
    } catch (const InvariantError& e) {
        fail(source, "", e.what());
    }
}

std::string serialize_csv(const TreeMetric& a)
{
    std::string out;
    for (std::size_t i = 0; i < a.size(); ++i) {
        for (std::size_t j = 0; j < a.size(); ++j) {
            out += (j ? "," : "") + a(i, j).str();
        }
        out += "\n";
    }
    return out;
}

namespace {

Real parse_real(const std::string& s, std::string_view what)
{
    if (s.empty()) {
        throw ParseError("empty " + std::string(what));
    }
    char* end = nullptr;
    errno = 0;
    const Real v = std::strtold(s.c_str(), &end);
    if (end != s.c_str() + s.size() || errno == ERANGE || !std::isfinite(v)) {
        throw ParseError("malformed " + std::string(what) + " '" + s + "'");
    }
    return v;
}

}  // namespace

PolarPoint parse_polar_literal(std::string_view text)
{
    const std::string s = trim(text);
    const auto comma = s.find(',');
    if (comma == std::string::npos) {
        throw ParseError("coordinate literal '" + s + "' must be \"rho,phi\" or \"rho,logphi:<sign>,<value>\"");
    }
    const Real rho = parse_real(trim(s.substr(0, comma)), "rho");
    const std::string rest = trim(s.substr(comma + 1));
    try {
        if (rest.rfind("logphi:", 0) == 0) {
            const std::string body = rest.substr(7);
            const auto c2 = body.find(',');
            if (c2 == std::string::npos) {
                throw ParseError("logphi literal needs <sign>,<value>");
            }
            const std::string sign = trim(body.substr(0, c2));
            int sg = 0;
            if (sign == "+" || sign == "1" || sign == "+1") {
                sg = 1;
            } else if (sign == "-" || sign == "-1") {
                sg = -1;
            } else if (sign != "0") {
                throw ParseError("logphi sign must be +, - or 0, got '" + sign + "'");
            }
            const Real lv = parse_real(trim(body.substr(c2 + 1)), "log|phi|");
            return PolarPoint::from_log_angle(rho, SignedLog::from_log(sg, lv));
        }
        return PolarPoint::from_angle(rho, parse_real(rest, "phi"));
    } catch (const DomainError& e) {
        throw ParseError(std::string("coordinate literal '") + s + "': " + e.what());
    }
}

std::string format_real(Real x)
{
    char buf[64];
    std::snprintf(buf, sizeof buf, "%.17Lg", x);
    return buf;
}

std::string read_file(const std::filesystem::path& path)
{
    std::ifstream in(path, std::ios::binary);
    if (!in) {
        throw ParseError(path.string() + ": cannot open");
    }
    std::ostringstream ss;
    ss << in.rdbuf();
    return ss.str();
}

void write_file(const std::filesystem::path& path, std::string_view content)
{
    std::ofstream out(path, std::ios::binary);
    if (!out) {
        throw std::runtime_error(path.string() + ": cannot write");
    }
    out << content;
}

}  // namespace subcone::io
