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

#include <string>

#include <json.hpp>

#include "mindex/recurrence.hpp"

namespace mindex {

// All rationals cross the I/O boundary as exact "p/q" strings; reports are
// schema-versioned JSON ("schema": 1) and round-trip bit-exactly.
namespace report {

nlohmann::json spec_to_json(const FamilySpec& spec);
nlohmann::json rtable_to_json(const RecurrenceTable& t);
nlohmann::json invariants_to_json(const InvariantTable& inv);
nlohmann::json poly_to_json(const PolyQ& p);

std::string serialize(const nlohmann::json& j);

// stable content hash of a config (names sweep output files)
std::string content_hash(const nlohmann::json& j);

std::string rtable_to_csv(const RecurrenceTable& t);

} // namespace report
} // namespace mindex
