// Copyright 2026 The ffval Authors
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//     http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.
//
// JSON serialization of all public value types.  The schema (see
// docs/schema.md) is deterministic: nlohmann::json keeps object keys sorted,
// so identical values always produce byte-identical text.  Parsing failures
// raise SchemaError; semantic problems surface later as ValidationError from
// the domain constructors.

#ifndef FFVAL_JSON_IO_HPP
#define FFVAL_JSON_IO_HPP

#include <nlohmann/json.hpp>

#include "ffval/theory.hpp"

namespace ffval {

using Json = nlohmann::json;

Json field_to_json(const FieldPtr& f);
FieldPtr field_from_json(const Json& j);

Json felem_to_json(const FElem& x);
FElem felem_from_json(const Json& j, const FieldPtr& f);

Json poly_to_json(const Poly& p);
Poly poly_from_json(const Json& j, const FieldPtr& f);

Json ratfunc_to_json(const RatFunc& r);
RatFunc ratfunc_from_json(const Json& j, const FieldPtr& f);

Json place_to_json(const Place& p);
Place place_from_json(const Json& j, const FieldPtr& f);

Json divisor_to_json(const Divisor& d);

Json ruspec_to_json(const RuSpec& r);
RuSpec ruspec_from_json(const Json& j, const FieldPtr& f);

Json tower_to_json(const TowerPtr& tw);
TowerPtr tower_from_json(const Json& j);

Json tower_element_to_json(const TowerElement& x);
TowerElement tower_element_from_json(const Json& j, const TowerPtr& tw);

Json tower_place_to_json(const TowerPlace& p);
/// Reconstructs the chain by replaying the splits along the stored path.
TowerPlace tower_place_from_json(const Json& j, const TowerPtr& tw);

Json construction_config_to_json(const ConstructionConfig& cfg);
ConstructionConfig construction_config_from_json(const Json& j);

Json construction_state_to_json(const ConstructionState& st);
ConstructionState construction_state_from_json(const Json& j);

Json theory_config_to_json(const TheoryConfig& cfg);
TheoryConfig theory_config_from_json(const Json& j);

Json report_to_json(const Report& rep);

/// Parses text; malformed JSON raises SchemaError.
Json parse_json_text(const std::string& text);
/// Canonical serialization used by all artifacts (2-space indent, sorted
/// keys, trailing newline).
std::string dump_json(const Json& j);

}  // namespace ffval

#endif  // FFVAL_JSON_IO_HPP
