#pragma once

#include "json.hpp"

#include "ga/cone.hpp"
#include "ga/desirability.hpp"
#include "ga/partition.hpp"

// JSON forms. Rationals print as canonical strings ("3", "-1/2") and parse
// from strings or JSON integers; every parse re-validates invariants.
namespace ga::json_io {

using nlohmann::json;

json to_json(const Rational& q);
Rational rational_from_json(const json& j);

json to_json(const Partition& p);
Partition partition_from_json(PossibilitySpace space, const json& j);

json to_json(const Gamble& f);
Gamble gamble_from_json(PossibilitySpace space, const json& j);
std::vector<Gamble> gambles_from_json(PossibilitySpace space, const json& j);

/// {"generators": [...]}
json to_json(const ConeV& c);
ConeV cone_from_json(PossibilitySpace space, const json& j);

/// {"kind":"top"} or {"kind":"coherent","generators":[...]}, with the unit
/// indicators left implicit.
json to_json(const PhiElement& p);
PhiElement phi_from_json(PossibilitySpace space, const json& j);

}  // namespace ga::json_io
