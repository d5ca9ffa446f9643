#pragma once

#include <json.hpp>

#include "symdet/cyclecount.hpp"
#include "symdet/gadgets.hpp"
#include "symdet/vnpred.hpp"

namespace symdet::io {

using json = nlohmann::json;

// All parse failures surface as input_error. Emitted documents re-parse to
// equal in-memory values; object keys come out sorted.

json load_json_file(const std::string& path);
json parse_json_text(const std::string& text);

json rational_to_json(const Rational& r); // "p/q" string
Rational rational_from_json(const json& j);

json permutation_to_json(const Permutation& p); // 1-indexed array
Permutation permutation_from_json(const json& j);

json graph_to_json(const Graph& g);
Graph graph_from_json(const json& j);

// Builtin algebras serialize as their name; structure-constant algebras as
// { "dim", "labels"?, "unit": {label: coef}, "mul": [[i, j, [[k, coef]..]]..] }
// with omitted pairs multiplying to zero and indices into the label list.
json algebra_to_json(const AlgebraHandle& a);
AlgebraHandle algebra_from_json(const json& j);

json element_to_json(const AlgElement<Rational>& e); // {label: coef}
AlgElement<Rational> element_from_json(const json& j, AlgebraHandle algebra);

// { "algebra": <name or spec>, "n": n, "entries": [[{label: coef}..]..] }
json matrix_to_json(const AlgMatrix<Rational>& m);
AlgMatrix<Rational> matrix_from_json(const json& j);

json ncpoly_to_json(const NCPoly& p); // [[coef, [var..]]..] in canonical order
NCPoly ncpoly_from_json(const json& j);

json cpoly_to_json(const CPoly& p); // same shape, variables with repetition
CPoly cpoly_from_json(const json& j);

// {"op":"add"/"mul","args":[..]} | {"var":"x"} | {"const":"p/q"}
json formula_to_json(const Formula& f);
Formula formula_from_json(const json& j);

// Graph format extended with "weights" keyed "u,v" (1-indexed), "start",
// "sink", and optional "layers".
json digraph_to_json(const WeightedDigraph& g);
WeightedDigraph digraph_from_json(const json& j);

json family_grid_to_json(const FamilyGrid& grid);

} // namespace symdet::io
