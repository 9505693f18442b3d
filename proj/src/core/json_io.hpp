#pragma once

#include <json.hpp>

#include "core/field.hpp"
#include "core/partition.hpp"
#include "core/skew.hpp"
#include "core/subspace.hpp"
#include "core/tableau.hpp"
#include "core/tableau_algebra.hpp"

namespace schub {

using Json = nlohmann::json;

// wraps nlohmann parse errors into schub::parse_error
Json parse_json(const std::string& text);

Json tableau_json(const Tableau& t);                     // {"rows": [[...],...]}
Tableau tableau_from_json(const Json& j);                // accepts bare array too
Json tableau_set_json(const TableauSet& ts);             // canonical-order array
Json formal_sum_json(const FormalSum& s);                // [{"coeff":..,"tableau":..},...]
Json skew_json(const SkewTableau& u);                    // null padding for inner boxes
SkewTableau skew_from_json(const Json& j);

Json partition_json(const Partition& p);
Partition partition_from_json(const Json& j);

Json field_json(const FieldSpec& f);                     // {"field":"Q"} / {"field":"Fp","p":5}
FieldSpec field_from_json(const Json& j);                // accepts the string forms too

// row-major array of entry strings ("3/4" over Q, residues over F_p)
Json subspace_json(const Subspace& s);
Subspace subspace_from_json(int n, const FieldSpec& f, const Json& j);

Json flag_json(const Flag& f);                           // [F_1, ..., F_n]
Flag flag_from_json(int n, const FieldSpec& f, const Json& j);

std::string rat_to_string(const Rat& x);
Rat rat_from_string(const std::string& s);

}  // namespace schub
