// Copyright 2026 The fusionkit Authors
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//      http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#ifndef FUSIONKIT_IO_HPP
#define FUSIONKIT_IO_HPP

#include <memory>
#include <string>
#include <vector>

#include <json.hpp>

#include "fusionkit/char_theory.hpp"
#include "fusionkit/fusion_vg.hpp"
#include "fusionkit/group_action.hpp"
#include "fusionkit/modular_data.hpp"

// File formats (all JSON, unknown keys rejected):
//
//   datum:        {"labels": [..], "vacuum": "1", "s_matrix": [[z, ..], ..], "tolerance": 1e-9}
//   action:       {"group": G, "perm": {"g": ["0", "3", "2", "1"] | "(1 3)"}}
//   chars:        {"tables": [{"subgroup": ["e", "g"], "characters": {"triv": [z, z]}, "projective": false}]}
//   intertwiners: {"intertwiners": [{"triple": ["1", "1", "2"], "subgroup": ["e", "g"],
//                                    "character": [z, z], "inducing_subgroup": [..]}]}
//
// where z is a number or an [re, im] pair and G is {"cyclic": n} or
// {"elements": [..], "table": [[..], ..], "identity": "e"} with the table
// written in element names. Character values follow the order of the listed
// subgroup elements. Permutations may be given for generators only; an
// action without "perm" is trivial.
namespace fusionkit::io {

using Json = nlohmann::ordered_json;

/// Reads and parses a JSON file. Throws StructuralError with the path and
/// byte offset on failure.
Json read_json_file(const std::string &path);

ModularDatum datum_from_json(const Json &j);
FiniteGroup group_from_json(const Json &j);
ModuleAction action_from_json(const Json &j, std::shared_ptr<const ModularDatum> datum);
TableSet tables_from_json(const Json &j, const FiniteGroup &group);
std::vector<IntertwinerActionData> intertwiners_from_json(const Json &j, const ModuleAction &act);

/// Significant digits used for report output; 0 writes doubles exactly.
inline constexpr int kReportDigits = 12;

/// Magnitudes below this are written as 0 in reports.
inline constexpr double kReportZero = 1e-13;

/// Rounds to `digits` significant digits, flushing values below kReportZero
/// and -0 to 0.
double round_significant(double value, int digits);
Json complex_to_json(Complex value, int digits = kReportDigits);

Json datum_to_json(const ModularDatum &md, int digits = 0);
Json group_to_json(const FiniteGroup &group);
Json action_to_json(const ModuleAction &act);
Json tables_to_json(const std::vector<std::pair<Subgroup, CharacterTable>> &tables, const FiniteGroup &parent, int digits = 0);

}  // namespace fusionkit::io

#endif
