#include <doctest.h>

#include <esb/errors.hpp>
#include <esb/json_io.hpp>

using esb::Integer;
using esb::IntVector;
using esb::json;

TEST_CASE("integers are numbers when small and strings when large") {
  CHECK(esb::integer_to_json(Integer(42)) == json(42));
  const Integer big("123456789012345678901234567890");
  CHECK(esb::integer_to_json(big) == json("123456789012345678901234567890"));
  CHECK(esb::integer_from_json(json("123456789012345678901234567890")) == big);
  CHECK(esb::integer_from_json(json(-7)) == -7);
  CHECK_THROWS_AS(esb::integer_from_json(json("12x")), esb::ValidationError);
  CHECK_THROWS_AS(esb::integer_from_json(json(1.5)), esb::ValidationError);
}

TEST_CASE("vector documents") {
  const esb::HVector h(IntVector{1, 3, 3, 1});
  const auto doc = esb::to_json(h);
  CHECK(doc["kind"] == "h");
  CHECK(doc["d"] == 3);
  const auto back = esb::vector_from_json(json::parse(doc.dump()));
  CHECK(back.kind == 'h');
  CHECK(back.entries == h.entries());

  const esb::GVector g(IntVector{1, 2, 3});
  CHECK(esb::vector_from_json(esb::to_json(g)).entries == g.entries());
  CHECK_THROWS_AS(esb::vector_from_json(json::parse(R"({"kind": "q", "entries": [1]})")), esb::ValidationError);
}

TEST_CASE("Betti tables round trip") {
  esb::BettiTable t(3);
  t.add(0, 0, 1);
  t.add(1, 2, Integer("99999999999999999999999"));
  t.add(2, 4, 3);
  const auto text = esb::to_json(t).dump();
  CHECK(esb::betti_table_from_json(json::parse(text)) == t);
  CHECK(esb::to_json(esb::betti_table_from_json(json::parse(text))).dump() == text);
}

TEST_CASE("complexes and ideals round trip") {
  const esb::SimplicialComplex c(4, {{0, 1}, {1, 2}, {2, 3}, {3, 0}});
  const auto doc = esb::to_json(c);
  CHECK(doc["facets"][0] == json::array({1, 2}));
  CHECK(esb::complex_from_json(doc).facets() == c.facets());
  CHECK_THROWS_AS(esb::complex_from_json(json::parse(R"({"n": 2, "facets": [[0, 1]]})")), esb::ValidationError);

  const esb::MonomialIdeal ideal(2, {{2, 0}, {1, 1}, {0, 3}});
  CHECK(esb::ideal_from_json(esb::to_json(ideal)) == ideal);
}

TEST_CASE("reports round trip") {
  const auto report = esb::bound_report(esb::GVector(IntVector{1, 2, 3}), 4);
  const auto doc = esb::to_json(report);
  CHECK(doc["total"] == 7);
  CHECK(json::parse(doc.dump()) == doc);
  CHECK(doc["vanishing_range"].is_null());
  const auto wide = esb::to_json(esb::bound_report(esb::GVector(IntVector{1, 2}), 5));
  CHECK(wide["vanishing_range"] == json::array({2, 3}));
}
