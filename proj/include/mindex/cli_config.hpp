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

#pragma once

#include <json.hpp>

#include "mindex/recurrence.hpp"

namespace mindex {

/**
 * One verification instance. Parameters cross the boundary as exact "p/q"
 * strings and parse losslessly; unknown keys in config files are rejected.
 */
struct RunConfig {
    FamilySpec spec;
    IndexSet indices;
    bool y_is_min = true;
    PolyQ y_poly{Var::eta};
    int n_max = 6;
    bool checked = false;

    nlohmann::json to_json() const;
};

FamilySpec spec_from_strings(const std::string& family, const std::string& g,
                             const std::string& h, const std::string& a, const std::string& t);

RunConfig make_run_config(const std::string& family, const std::string& indices,
                          const std::string& g, const std::string& h, const std::string& a,
                          const std::string& t, const std::string& y, int n_max, bool checked);

/**
 * Reads the sweep configuration: a TOML subset with [[instance]] tables,
 * `key = "value"` / integer / boolean pairs and # comments. That subset is
 * all the sweep format needs; anything else is rejected with a diagnostic.
 */
std::vector<RunConfig> parse_sweep_toml(const std::string& text);

// "c0,c1,..." -> polynomial in eta
PolyQ parse_eta_poly(const std::string& coeffs);

} // namespace mindex
