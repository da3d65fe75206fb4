/*
#include <set>
#include <map>
   Copyright 2026 the mindex authors

   Licensed under the Apache License, Version 2.0 (the "License");
   you may not use this file except in compliance with the License.
   You may obtain a copy of the License at

        http://www.apache.org/licenses/LICENSE-2.0

   Unless required by applicable law or agreed to in writing, software
   distributed under the License is distributed on an "AS IS" BASIS,
   WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
   See the License for the specific language governing permissions and
   limitations under the License.
*/

#include "mindex/cli_config.hpp"

#include <map>
#include <set>
#include <sstream>

namespace mindex {

namespace {

std::vector<Rational> parse_rational_list(const std::string& s) {
    std::vector<Rational> out;
    std::stringstream ss(s);
    std::string tok;
    while (std::getline(ss, tok, ',')) {
        if (tok.empty()) continue;
        out.push_back(Rational::from_string(tok));
    }
    return out;
}

} // namespace

PolyQ parse_eta_poly(const std::string& coeffs) {
    return PolyQ(parse_rational_list(coeffs), Var::eta);
}

FamilySpec spec_from_strings(const std::string& family, const std::string& g,
                             const std::string& h, const std::string& a, const std::string& t) {
    auto fam = family_from_string(family);
    if (!fam) throw usage_error("unknown family '" + family + "' (expect L, J, W or AW)");
    switch (*fam) {
        case Family::L:
            if (g.empty()) throw usage_error("family L requires --g");
            return FamilySpec::laguerre(Rational::from_string(g));
        case Family::J:
            if (g.empty() || h.empty()) throw usage_error("family J requires --g and --h");
            return FamilySpec::jacobi(Rational::from_string(g), Rational::from_string(h));
        case Family::W: {
            auto av = parse_rational_list(a);
            if (av.size() != 4) throw usage_error("family W requires --a a1,a2,a3,a4");
            return FamilySpec::wilson({av[0], av[1], av[2], av[3]});
        }
        case Family::AW: {
            auto av = parse_rational_list(a);
            if (av.size() != 4 || t.empty())
                throw usage_error("family AW requires --a a1,a2,a3,a4 and --t");
            return FamilySpec::askey_wilson({av[0], av[1], av[2], av[3]},
                                            Rational::from_string(t));
        }
    }
    throw usage_error("unreachable family");
}

RunConfig make_run_config(const std::string& family, const std::string& indices,
                          const std::string& g, const std::string& h, const std::string& a,
                          const std::string& t, const std::string& y, int n_max, bool checked) {
    RunConfig cfg;
    cfg.spec = spec_from_strings(family, g, h, a, t);
    cfg.indices = IndexSet::parse(indices);
    if (n_max < 0) throw usage_error("nmax must be nonnegative");
    cfg.n_max = n_max;
    cfg.checked = checked;
    if (y == "min") {
        cfg.y_is_min = true;
    } else {
        cfg.y_is_min = false;
        cfg.y_poly = PolyQ(parse_rational_list(y), Var::eta);
        if (cfg.y_poly.is_zero()) throw usage_error("--y coefficient list gives the zero Y");
    }
    return cfg;
}

nlohmann::json RunConfig::to_json() const {
    nlohmann::json j;
    j["family"] = family_name(spec.family);
    j["indices"] = indices.str();
    switch (spec.family) {
        case Family::L: j["g"] = spec.g.str(); break;
        case Family::J:
            j["g"] = spec.g.str();
            j["h"] = spec.h.str();
            break;
        case Family::AW: j["t"] = spec.t.str(); [[fallthrough]];
        case Family::W:
            j["a"] = spec.a[0].str() + "," + spec.a[1].str() + "," + spec.a[2].str() + "," +
                     spec.a[3].str();
            break;
    }
    if (y_is_min) {
        j["y"] = "min";
    } else {
        std::string ys;
        for (int k = 0; k <= y_poly.degree(); ++k) {
            if (k) ys += ",";
            ys += y_poly[static_cast<size_t>(k)].str();
        }
        j["y"] = ys;
    }
    j["nmax"] = n_max;
    j["checked"] = checked;
    return j;
}

namespace {

struct TomlValue {
    enum class Kind { string, integer, boolean } kind;
    std::string s;
    long i = 0;
    bool b = false;
};

std::string strip(const std::string& s) {
    size_t a = s.find_first_not_of(" \t\r");
    if (a == std::string::npos) return "";
    size_t b = s.find_last_not_of(" \t\r");
    return s.substr(a, b - a + 1);
}

// removes a trailing comment that is not inside a quoted string
std::string strip_comment(const std::string& line) {
    bool in_str = false;
    for (size_t i = 0; i < line.size(); ++i) {
        if (line[i] == '"') in_str = !in_str;
        if (line[i] == '#' && !in_str) return line.substr(0, i);
    }
    return line;
}

TomlValue parse_value(const std::string& raw, int lineno) {
    std::string v = strip(raw);
    if (v.empty()) throw usage_error("sweep config line " + std::to_string(lineno) + ": empty value");
    TomlValue out{};
    if (v.front() == '"') {
        if (v.size() < 2 || v.back() != '"')
            throw usage_error("sweep config line " + std::to_string(lineno) +
                              ": unterminated string");
        out.kind = TomlValue::Kind::string;
        out.s = v.substr(1, v.size() - 2);
        return out;
    }
    if (v == "true" || v == "false") {
        out.kind = TomlValue::Kind::boolean;
        out.b = (v == "true");
        return out;
    }
    try {
        size_t pos = 0;
        out.i = std::stol(v, &pos);
        if (pos != v.size()) throw std::invalid_argument(v);
        out.kind = TomlValue::Kind::integer;
        return out;
    } catch (const std::exception&) {
        throw usage_error("sweep config line " + std::to_string(lineno) + ": cannot parse value '" +
                          v + "' (supported: \"string\", integer, true/false)");
    }
}

RunConfig config_from_table(const std::map<std::string, TomlValue>& kv, int lineno) {
    auto str_of = [&](const char* key) -> std::string {
        auto it = kv.find(key);
        if (it == kv.end()) return "";
        if (it->second.kind != TomlValue::Kind::string)
            throw usage_error("sweep config: key '" + std::string(key) + "' must be a string");
        return it->second.s;
    };
    int n_max = 6;
    bool checked = false;
    if (auto it = kv.find("nmax"); it != kv.end()) {
        if (it->second.kind != TomlValue::Kind::integer)
            throw usage_error("sweep config: nmax must be an integer");
        n_max = static_cast<int>(it->second.i);
    }
    if (auto it = kv.find("checked"); it != kv.end()) {
        if (it->second.kind != TomlValue::Kind::boolean)
            throw usage_error("sweep config: checked must be a boolean");
        checked = it->second.b;
    }
    static const std::set<std::string> known = {"family", "indices", "g", "h",
                                                "a",      "t",       "y", "nmax", "checked"};
    for (const auto& [k, v] : kv)
        if (!known.count(k))
            throw usage_error("sweep config near line " + std::to_string(lineno) +
                              ": unknown key '" + k + "'");
    std::string y = str_of("y");
    return make_run_config(str_of("family"), str_of("indices").empty() ? "1I" : str_of("indices"),
                           str_of("g"), str_of("h"), str_of("a"), str_of("t"),
                           y.empty() ? "min" : y, n_max, checked);
}

} // namespace

std::vector<RunConfig> parse_sweep_toml(const std::string& text) {
    std::vector<RunConfig> out;
    std::map<std::string, TomlValue> current;
    bool have_table = false;
    int table_line = 0;
    std::istringstream is(text);
    std::string line;
    int lineno = 0;
    auto flush = [&] {
        if (have_table) out.push_back(config_from_table(current, table_line));
        current.clear();
    };
    while (std::getline(is, line)) {
        ++lineno;
        std::string t = strip(strip_comment(line));
        if (t.empty()) continue;
        if (t == "[[instance]]") {
            flush();
            have_table = true;
            table_line = lineno;
            continue;
        }
        if (t.front() == '[')
            throw usage_error("sweep config line " + std::to_string(lineno) +
                              ": only [[instance]] tables are supported");
        size_t eq = t.find('=');
        if (eq == std::string::npos)
            throw usage_error("sweep config line " + std::to_string(lineno) +
                              ": expected key = value");
        if (!have_table)
            throw usage_error("sweep config line " + std::to_string(lineno) +
                              ": key outside [[instance]]");
        std::string key = strip(t.substr(0, eq));
        current[key] = parse_value(t.substr(eq + 1), lineno);
    }
    flush();
    if (out.empty()) throw usage_error("sweep config: no [[instance]] tables found");
    return out;
}

} // namespace mindex
