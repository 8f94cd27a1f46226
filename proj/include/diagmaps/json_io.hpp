#pragma once

#include <json.hpp>
#include <string>

#include "diagmaps/fgab.hpp"
#include "diagmaps/gamma.hpp"
#include "diagmaps/spheres.hpp"

namespace diagmaps {

// Insertion-ordered JSON keeps emitted documents byte-stable.
using Json = nlohmann::ordered_json;

Json load_json_file(const std::string& path);  // ParseError on failure
Json parse_json_text(const std::string& text);

Json int_to_json(const Int& v);
Int int_from_json(const Json& j);

Json matrix_to_json(const IntMatrix& m);  // list of rows
IntMatrix matrix_from_json(const Json& j);

// {"ambient_rank": k, "relations": [[col],...]} with relations as columns.
Json group_to_json(const FgAbGroup& g);
FgAbGroup group_from_json(const Json& j);

// {"coords": [...]}
Json element_to_json(const Element& e);
Element element_from_json(const Json& j, const FgAbGroup& group);

// {"matrix": [[row],...]}
Json hom_to_json(const Homomorphism& h);
Homomorphism hom_from_json(const Json& j, const FgAbGroup& source, const FgAbGroup& target);

// {"pi2": group, "pi3": group, "eta_square": homomorphism}
Json quadratic_to_json(const QuadraticMap& q);
QuadraticMap quadratic_from_json(const Json& j);

// {"n", "pi_n", "pi_n1", "pi_2n", "pi_2n1", "P1n", "Pnn", "tau_sign"}
Json target_to_json(const TargetData& t);
TargetData target_from_json(const Json& j);

}  // namespace diagmaps
