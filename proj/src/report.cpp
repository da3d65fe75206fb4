/*
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

#include "mindex/report.hpp"

#include <iomanip>
#include <sstream>

namespace mindex {
namespace report {

nlohmann::json spec_to_json(const FamilySpec& spec) {
    nlohmann::json j;
    j["family"] = family_name(spec.family);
    switch (spec.family) {
        case Family::L: j["g"] = spec.g.str(); break;
        case Family::J:
            j["g"] = spec.g.str();
            j["h"] = spec.h.str();
            break;
        case Family::AW: j["t"] = spec.t.str(); [[fallthrough]];
        case Family::W:
            j["a"] = {spec.a[0].str(), spec.a[1].str(), spec.a[2].str(), spec.a[3].str()};
            break;
    }
    return j;
}

nlohmann::json poly_to_json(const PolyQ& p) {
    nlohmann::json arr = nlohmann::json::array();
    for (int k = 0; k <= p.degree(); ++k) arr.push_back(p[static_cast<size_t>(k)].str());
    return arr;
}

nlohmann::json rtable_to_json(const RecurrenceTable& t) {
    nlohmann::json j;
    j["band_L"] = t.band;
    j["n_min"] = t.n_min;
    j["n_max"] = t.n_max;
    nlohmann::json entries = nlohmann::json::array();
    for (const auto& [nk, v] : t.r)
        entries.push_back({{"n", nk.first}, {"k", nk.second}, {"r", v.str()}});
    j["entries"] = entries;
    j["consistent"] = t.consistent;
    nlohmann::json wit = nlohmann::json::array();
    for (const auto& w : t.witnesses)
        wit.push_back({{"n", w.n}, {"row", w.row}, {"residual", w.residual.str()}});
    j["witnesses"] = wit;
    return j;
}

nlohmann::json invariants_to_json(const InvariantTable& inv) {
    nlohmann::json j;
    nlohmann::json rho = nlohmann::json::array();
    for (const auto& [nk, v] : inv.rho)
        rho.push_back({{"n", nk.first}, {"k", nk.second}, {"value", v.str()}});
    j["rho"] = rho;
    nlohmann::json sig = nlohmann::json::array();
    for (const auto& [n, v] : inv.sigma) sig.push_back({{"n", n}, {"value", v.str()}});
    j["sigma"] = sig;
    nlohmann::json und = nlohmann::json::array();
    for (const auto& nk : inv.rho_undefined) und.push_back({{"n", nk.first}, {"k", nk.second}});
    j["rho_undefined"] = und;
    j["sigma_undefined"] = inv.sigma_undefined;
    return j;
}

std::string serialize(const nlohmann::json& j) { return j.dump(2) + "\n"; }

std::string content_hash(const nlohmann::json& j) {
    // FNV-1a 64 over the canonical dump; stable across runs and platforms
    const std::string s = j.dump();
    uint64_t h = 1469598103934665603ull;
    for (unsigned char c : s) {
        h ^= c;
        h *= 1099511628211ull;
    }
    std::ostringstream os;
    os << std::hex << std::setw(16) << std::setfill('0') << h;
    return os.str();
}

std::string rtable_to_csv(const RecurrenceTable& t) {
    std::ostringstream os;
    os << "n,k,r\n";
    for (const auto& [nk, v] : t.r)
        os << nk.first << "," << nk.second << "," << v.str() << "\n";
    return os.str();
}

} // namespace report
} // namespace mindex
