#pragma once

// JSON documents read and written by the CLI and the Python module.
//
//   vector     {"kind": "f"|"h"|"g", "d": int?, "entries": [int, ...]}
//   Betti      {"n": int, "entries": [{"i": int, "j": int, "value": int}, ...]}
//   report     {"d", "g", "per_degree", "per_dimension", "cumulative",
//               "total", "vanishing_range"}
//   complex    {"n": int, "facets": [[int, ...], ...]}   (1-based vertices)
//   ideal      {"n": int, "gens": [[e_1, ..., e_n], ...]}
//
// Integers are JSON numbers when they fit in 64 bits and decimal strings
// otherwise; both forms are accepted on input.

#include <esb/betti.hpp>
#include <esb/complex.hpp>
#include <esb/empty_simplices.hpp>
#include <esb/monomial_ideal.hpp>
#include <esb/vectors.hpp>

#include <json.hpp>

#include <optional>

namespace esb {

using json = nlohmann::json;

json integer_to_json(const Integer& x);
Integer integer_from_json(const json& j);

json to_json(const FVector& f);
json to_json(const HVector& h);
json to_json(const GVector& g);

struct VectorDocument {
  char kind = 'h';
  std::optional<long> d;
  IntVector entries;
};
VectorDocument vector_from_json(const json& j);

json to_json(const BettiTable& table);
BettiTable betti_table_from_json(const json& j);

json to_json(const EmptySimplexBoundReport& report);

json to_json(const SimplicialComplex& c);
SimplicialComplex complex_from_json(const json& j);

json to_json(const MonomialIdeal& ideal);
MonomialIdeal ideal_from_json(const json& j);

}  // namespace esb
