#include <esb/json_io.hpp>

#include <esb/errors.hpp>

#include <limits>

namespace esb {
namespace {

json integers_to_json(const IntVector& v) {
  json out = json::array();
  for (const auto& x : v) out.push_back(integer_to_json(x));
  return out;
}

json map_to_json(const std::map<long, Integer>& m) {
  json out = json::object();
  for (const auto& [key, value] : m) out[std::to_string(key)] = integer_to_json(value);
  return out;
}

const json& field(const json& j, const char* name) {
  if (!j.is_object() || !j.contains(name)) throw ValidationError(std::string("JSON document lacks \"") + name + "\"");
  return j.at(name);
}

}  // namespace

json integer_to_json(const Integer& x) {
  if (x >= std::numeric_limits<std::int64_t>::min() && x <= std::numeric_limits<std::int64_t>::max())
    return x.convert_to<std::int64_t>();
  return x.str();
}

Integer integer_from_json(const json& j) {
  if (j.is_number_integer()) return j.get<std::int64_t>();
  if (j.is_string()) {
    try {
      return Integer(j.get<std::string>());
    } catch (const std::exception&) {
      throw ValidationError("not an integer: \"" + j.get<std::string>() + "\"");
    }
  }
  throw ValidationError("expected an integer, got " + j.dump());
}

json to_json(const FVector& f) { return {{"kind", "f"}, {"d", f.d()}, {"entries", integers_to_json(f.entries())}}; }
json to_json(const HVector& h) { return {{"kind", "h"}, {"d", h.d()}, {"entries", integers_to_json(h.entries())}}; }
json to_json(const GVector& g) { return {{"kind", "g"}, {"entries", integers_to_json(g.entries())}}; }

VectorDocument vector_from_json(const json& j) {
  VectorDocument doc;
  const auto kind = field(j, "kind").get<std::string>();
  if (kind != "f" && kind != "h" && kind != "g") throw ValidationError("vector kind must be f, h or g");
  doc.kind = kind[0];
  if (j.contains("d") && !j.at("d").is_null()) doc.d = j.at("d").get<long>();
  for (const auto& x : field(j, "entries")) doc.entries.push_back(integer_from_json(x));
  return doc;
}

json to_json(const BettiTable& table) {
  json entries = json::array();
  for (const auto& [key, value] : table.entries())
    entries.push_back({{"i", key.first}, {"j", key.second}, {"value", integer_to_json(value)}});
  return {{"n", table.n()}, {"entries", entries}};
}

BettiTable betti_table_from_json(const json& j) {
  BettiTable table(field(j, "n").get<long>());
  for (const auto& e : field(j, "entries"))
    table.add(field(e, "i").get<long>(), field(e, "j").get<long>(), integer_from_json(field(e, "value")));
  return table;
}

json to_json(const EmptySimplexBoundReport& report) {
  json out = {{"d", report.d},
              {"g", integers_to_json(report.g.entries())},
              {"per_degree", map_to_json(report.per_degree)},
              {"per_dimension", map_to_json(report.per_dimension())},
              {"cumulative", map_to_json(report.cumulative)},
              {"total", integer_to_json(report.total)}};
  if (report.vanishing_range)
    out["vanishing_range"] = {report.vanishing_range->first, report.vanishing_range->second};
  else
    out["vanishing_range"] = nullptr;
  return out;
}

json to_json(const SimplicialComplex& c) {
  json facets = json::array();
  for (auto facet : c.facet_lists()) {
    for (int& v : facet) ++v;
    facets.push_back(facet);
  }
  return {{"n", c.n_vertices()}, {"facets", facets}};
}

SimplicialComplex complex_from_json(const json& j) {
  const int n = field(j, "n").get<int>();
  std::vector<std::vector<int>> facets;
  for (const auto& facet : field(j, "facets")) {
    std::vector<int> vertices;
    for (const auto& v : facet) {
      const int one_based = v.get<int>();
      if (one_based < 1 || one_based > n)
        throw ValidationError("vertex " + std::to_string(one_based) + " outside 1.." + std::to_string(n));
      vertices.push_back(one_based - 1);
    }
    facets.push_back(std::move(vertices));
  }
  return SimplicialComplex(n, facets);
}

json to_json(const MonomialIdeal& ideal) { return {{"n", ideal.n_vars()}, {"gens", ideal.generators()}}; }

MonomialIdeal ideal_from_json(const json& j) {
  return MonomialIdeal(field(j, "n").get<int>(), field(j, "gens").get<std::vector<Monomial>>());
}

}  // namespace esb
