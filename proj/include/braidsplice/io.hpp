#pragma once

#include <string>

#include "json.hpp"

#include "braidsplice/cluster.hpp"
#include "braidsplice/latticeiso.hpp"
#include "braidsplice/splice.hpp"

namespace bsp {

using Json = nlohmann::ordered_json;

// Key order is fixed by construction order. Rationals and rational
// functions are strings ("p/q", "z1*z2 - 1").

Json to_json(const Rational& r);
Json to_json(const Point& p);
Json to_json(const SymMatrix& m);
Json to_json(const Permutation& w);  // one-line notation

// {"n": N, "frozen": [...], "arrows": [[i, j, mult], ...]}
Json to_json(const Quiver& q);
// {"quiver": {...}, "variables": [...]}
Json to_json(const Seed& s);
// {"row_labels": [...], "n_mutable": n, "matrix": [[...], ...]}
Json to_json(const ExtendedExchangeMatrix& e);
// {"n": n, "m": m, "R": [[...]], "det_Q": "..."}
Json to_json(const WitnessMatrix& w);
// {"check": ..., "instances": N, "failures": [...], "witness": {...}}
Json to_json(const CheckReport& r);
Json to_json(const SpliceWitness& w);

// Readers throw ParseError naming the JSON path of the offending value.
Quiver quiver_from_json(const Json& j, const std::string& path = "$");
Seed seed_from_json(const Json& j, const std::string& path = "$");
ExtendedExchangeMatrix exchange_matrix_from_json(const Json& j, const std::string& path = "$");
WitnessMatrix witness_from_json(const Json& j, const std::string& path = "$");
Rational rational_from_json(const Json& j, const std::string& path = "$");

Json read_json_file(const std::string& file);

}  // namespace bsp
