#include <doctest.h>

#include <esb/betti.hpp>
#include <esb/binomial.hpp>
#include <esb/complex.hpp>
#include <esb/errors.hpp>
#include <esb/homology.hpp>
#include <esb/monomial_ideal.hpp>

#include "support/oracles.hpp"

using esb::Integer;
using esb::IntVector;

namespace {

IntVector iv(std::initializer_list<long> xs) {
  IntVector out;
  for (long x : xs) out.emplace_back(x);
  return out;
}

esb::SimplicialComplex real_projective_plane() {
  return esb::SimplicialComplex(6, {{0, 1, 2}, {0, 2, 3}, {0, 3, 4}, {0, 4, 5}, {0, 5, 1},
                                    {1, 2, 4}, {2, 3, 5}, {3, 4, 1}, {4, 5, 2}, {5, 1, 3}});
}

std::vector<esb::SimplicialComplex> small_spheres() {
  std::vector<esb::SimplicialComplex> out;
  for (int n = 4; n <= 8; ++n) out.push_back(esb::polygon_boundary(n));
  for (int d = 2; d <= 4; ++d) out.push_back(esb::cross_polytope_boundary(d));
  for (int d = 2; d <= 5; ++d)
    for (int n = d + 1; n <= 8; ++n) out.push_back(esb::cyclic_polytope_boundary(n, d));
  return out;
}

}  // namespace

TEST_CASE("cyclic polytopes by Gale evenness") {
  const auto pentagon = esb::cyclic_polytope_boundary(5, 2);
  CHECK(pentagon.facets().size() == 5);
  CHECK(esb::f_vector(pentagon).entries() == iv({1, 5, 5}));
  const auto c74 = esb::cyclic_polytope_boundary(7, 4);
  CHECK(c74.facets().size() == 14);
  CHECK(esb::f_vector(c74).entries() == iv({1, 7, 21, 28, 14}));
  for (int d = 2; d <= 6; ++d) {
    const auto s = esb::cyclic_polytope_boundary(d + 1, d);
    CHECK(s.facets().size() == static_cast<std::size_t>(d + 1));
    CHECK(esb::minimal_nonfaces(s).size() == 1);
  }
  CHECK_THROWS_AS(esb::cyclic_polytope_boundary(4, 4), esb::ValidationError);
}

TEST_CASE("f-vectors and non-faces of standard complexes") {
  const auto octahedron = esb::cross_polytope_boundary(3);
  CHECK(esb::f_vector(octahedron).entries() == iv({1, 6, 12, 8}));
  CHECK(esb::f_vector(esb::polygon_boundary(5)).entries() == iv({1, 5, 5}));
  CHECK(esb::f_vector(esb::full_simplex(4)).entries() == iv({1, 4, 6, 4, 1}));
  const auto diagonals = esb::minimal_nonfaces(octahedron);
  CHECK(diagonals.size() == 3);
  for (const auto& s : diagonals) {
    CHECK(s.size() == 2);
    CHECK(s[1] - s[0] == 3);
  }
  CHECK(esb::minimal_nonfaces(esb::cyclic_polytope_boundary(7, 4)).size() == 7);
  CHECK(esb::minimal_nonfaces(esb::full_simplex(5)).empty());
}

TEST_CASE("non-faces agree with subset scanning") {
  for (const auto& c : small_spheres()) {
    auto expected = oracle::minimal_nonfaces(c.n_vertices(), c.facet_lists());
    auto got = esb::minimal_nonfaces(c);
    std::sort(expected.begin(), expected.end());
    std::sort(got.begin(), got.end());
    CHECK(got == expected);
  }
}

TEST_CASE("complex construction normalizes facets") {
  const esb::SimplicialComplex c(4, {{0, 1, 2}, {0, 1}, {2, 3}, {3, 2}});
  CHECK(c.facets().size() == 2);
  CHECK(c.dimension() == 2);
  CHECK(c.is_face(esb::to_vertex_set({0, 2})));
  CHECK_FALSE(c.is_face(esb::to_vertex_set({1, 3})));
  CHECK_THROWS_AS(esb::SimplicialComplex(3, {{0, 5}}), esb::ValidationError);
  CHECK_THROWS_AS(esb::SimplicialComplex(3, {}), esb::ValidationError);
}

TEST_CASE("reduced homology of spheres and friends") {
  using Ranks = std::map<int, long>;
  CHECK(esb::reduced_homology_ranks(esb::polygon_boundary(5)) == Ranks{{1, 1}});
  CHECK(esb::reduced_homology_ranks(esb::cross_polytope_boundary(3)) == Ranks{{2, 1}});
  CHECK(esb::reduced_homology_ranks(esb::SimplicialComplex(2, {{0}, {1}})) == Ranks{{0, 1}});
  CHECK(esb::reduced_homology_ranks(esb::full_simplex(4)).empty());
  CHECK(esb::reduced_homology_ranks(esb::SimplicialComplex(3, {{}})) == Ranks{{-1, 1}});
  CHECK(esb::reduced_homology_ranks(real_projective_plane()).empty());
  esb::HomologyOptions mod2;
  mod2.characteristic = 2;
  CHECK(esb::reduced_homology_ranks(real_projective_plane(), mod2) == Ranks{{1, 1}, {2, 1}});
  mod2.characteristic = 3;
  CHECK(esb::reduced_homology_ranks(real_projective_plane(), mod2).empty());
  CHECK_THROWS_AS(esb::validate_characteristic(4), esb::ValidationError);
  CHECK_THROWS_AS(esb::validate_characteristic(1), esb::ValidationError);
}

TEST_CASE("matrix rank over Q and F_p") {
  CHECK(esb::matrix_rank({{1, 1}, {1, -1}}, 0) == 2);
  CHECK(esb::matrix_rank({{1, 1}, {1, -1}}, 2) == 1);
  CHECK(esb::matrix_rank({{2, 4}, {1, 2}}, 0) == 1);
  CHECK(esb::matrix_rank({}, 0) == 0);
  // entries whose elimination overflows 64 bits
  const long big = 3037000493L;
  CHECK(esb::matrix_rank({{big, big - 1, 1}, {big - 1, big, 1}, {1, 1, big}}, 0) == 3);
}

TEST_CASE("Hochster tables of small complexes") {
  esb::BettiTable square(4);
  square.add(0, 0, 1);
  square.add(1, 2, 2);
  square.add(2, 4, 1);
  CHECK(esb::hochster_betti(esb::polygon_boundary(4)) == square);

  esb::BettiTable trivial(5);
  trivial.add(0, 0, 1);
  CHECK(esb::hochster_betti(esb::full_simplex(5)) == trivial);

  const auto c74 = esb::hochster_betti(esb::cyclic_polytope_boundary(7, 4));
  CHECK(c74.at(1, 3) == 7);
  CHECK(c74.at(2, 4) == 7);
  CHECK(c74.at(3, 7) == 1);

  esb::HomologyOptions small;
  small.vertex_limit = 6;
  CHECK_THROWS_AS(esb::hochster_betti(esb::cyclic_polytope_boundary(7, 4), small), esb::SizeLimitError);
}

TEST_CASE("first Betti row counts empty simplices in every characteristic") {
  for (const auto& c : small_spheres()) {
    const auto counts = oracle::nonface_counts(c.n_vertices(), c.facet_lists());
    for (long p : {0L, 2L, 3L}) {
      esb::HomologyOptions options;
      options.characteristic = p;
      const auto table = esb::hochster_betti(c, options);
      for (long j = 1; j <= c.n_vertices(); ++j) {
        const long expected = counts.count(j) ? counts.at(j) : 0;
        CHECK(table.at(1, j) == expected);
      }
    }
  }
}

TEST_CASE("Betti numbers can depend on the characteristic") {
  esb::HomologyOptions mod2;
  mod2.characteristic = 2;
  const auto q = esb::hochster_betti(real_projective_plane());
  const auto f2 = esb::hochster_betti(real_projective_plane(), mod2);
  CHECK(q != f2);
  CHECK(f2.at(3, 6) == 1);
  CHECK(q.at(3, 6) == 0);
  for (long j = 0; j <= 6; ++j) CHECK(q.at(1, j) == f2.at(1, j));
}

TEST_CASE("threaded Hochster matches the sequential result") {
  esb::HomologyOptions threaded;
  threaded.threads = 4;
  for (const auto& c : small_spheres()) CHECK(esb::hochster_betti(c, threaded) == esb::hochster_betti(c));
}

TEST_CASE("polytope boundaries are Gorenstein and obey the Betti bound") {
  for (const auto& c : small_spheres()) {
    const auto f = esb::f_vector(c);
    const long d = f.d();
    const auto h = esb::f_to_h(f);
    for (long i = 0; i <= d; ++i) CHECK(h[static_cast<std::size_t>(i)] == h[static_cast<std::size_t>(d - i)]);
    const long h1 = c.n_vertices() - d;
    const auto table = esb::hochster_betti(c);
    CHECK(table.at(h1, h1 + d) == 1);
    for (const auto& [key, value] : table.entries()) {
      CHECK(table.at(h1 - key.first, h1 + d - key.second) == value);
      CHECK(value <= esb::gorenstein_wlp_bound(h, c.n_vertices(), d, key.first - 1, key.second - key.first + 1));
    }
    const auto bound = esb::gorenstein_wlp_table(h, c.n_vertices(), d);
    for (const auto& [key, value] : table.entries()) CHECK(value <= bound.at(key.first, key.second));
  }
}

TEST_CASE("Betti bound with more variables than the polytope has vertices") {
  // an extra vertex outside the complex contributes a linear generator
  for (const auto& sphere : small_spheres()) {
    if (sphere.n_vertices() > 7) continue;
    const esb::SimplicialComplex c(sphere.n_vertices() + 1, sphere.facet_lists());
    const auto h = esb::f_to_h(esb::f_vector(sphere));
    const long d = h.d();
    const auto table = esb::hochster_betti(c);
    const auto bound = esb::gorenstein_wlp_table(h, c.n_vertices(), d);
    CHECK(table.at(1, 1) == 1);
    for (const auto& [key, value] : table.entries()) CHECK(value <= bound.at(key.first, key.second));
  }
}

TEST_CASE("lex-segment ideals") {
  using M = esb::Monomial;
  const auto i121 = esb::lex_segment_ideal(esb::OSequence(iv({1, 2, 1})), 2);
  CHECK(i121.generators() == std::vector<M>{{2, 0}, {1, 1}, {0, 3}});
  CHECK(esb::is_stable(i121));
  const auto i1111 = esb::lex_segment_ideal(esb::OSequence(iv({1, 1, 1, 1})), 2);
  CHECK(i1111.generators() == std::vector<M>{{1, 0}, {0, 4}});
  CHECK(esb::lex_segment_ideal(esb::OSequence(iv({1, 2, 3}), true), 2).generators().empty());
  CHECK_FALSE(esb::is_stable(esb::MonomialIdeal(2, {{0, 1}})));
  CHECK_THROWS_AS(esb::lex_segment_ideal(esb::OSequence(iv({1, 3})), 2), esb::ValidationError);
  CHECK_THROWS_AS(esb::lex_segment_ideal(esb::OSequence(iv({1, 3, 6, 10, 15, 1})), 3, 10), esb::SizeLimitError);
}

TEST_CASE("lex ideals have the prescribed Hilbert function") {
  for (int n = 1; n <= 3; ++n) {
    std::vector<IntVector> seqs{iv({1})};
    for (int deg = 1; deg <= 4; ++deg) {
      std::vector<IntVector> next;
      for (const auto& h : seqs) {
        if (static_cast<int>(h.size()) != deg) continue;
        const long cap = deg == 1 ? n : esb::macaulay_upper(h.back(), deg - 1).convert_to<long>();
        for (long v = 0; v <= cap; ++v) {
          IntVector longer = h;
          longer.emplace_back(v);
          next.push_back(longer);
        }
      }
      seqs.insert(seqs.end(), next.begin(), next.end());
    }
    for (const auto& h : seqs) {
      const esb::OSequence hs(h);
      const auto ideal = esb::lex_segment_ideal(hs, n);
      CHECK(esb::is_stable(ideal));
      for (int deg = 0; deg <= 6; ++deg) {
        long outside = 0;
        for (const auto& m : oracle::monomials(n, deg))
          if (!ideal.contains(m)) ++outside;
        CHECK(outside == hs(deg));
      }
    }
  }
}

TEST_CASE("Eliahou-Kervaire tables") {
  esb::BettiTable expected(2);
  expected.add(0, 0, 1);
  expected.add(1, 2, 2);
  expected.add(1, 3, 1);
  expected.add(2, 3, 1);
  expected.add(2, 4, 1);
  CHECK(esb::eliahou_kervaire_betti(esb::MonomialIdeal(2, {{2, 0}, {1, 1}, {0, 3}})) == expected);

  for (int n = 1; n <= 4; ++n)
    for (int d = 1; d <= 4; ++d) {
      const auto power = esb::MonomialIdeal(n, esb::monomials_of_degree(n, d));
      const auto table = esb::eliahou_kervaire_betti(power);
      for (long i = 0; i < n; ++i)
        CHECK(table.total(i + 1) == oracle::binom(d + i - 1, i) * oracle::binom(n + d - 1, d + i));
    }

  for (int d = 1; d <= 5; ++d) {
    esb::BettiTable principal(3);
    principal.add(0, 0, 1);
    principal.add(1, d, 1);
    CHECK(esb::eliahou_kervaire_betti(esb::MonomialIdeal(3, {{d, 0, 0}})) == principal);
  }
  CHECK_THROWS_AS(esb::eliahou_kervaire_betti(esb::MonomialIdeal(2, {{0, 1}})), esb::ValidationError);
}

TEST_CASE("Eliahou-Kervaire agrees with Hochster on squarefree stable ideals") {
  // (x_1, ..., x_k) is the Stanley-Reisner ideal of a simplex on the remaining vertices
  for (int n = 2; n <= 6; ++n)
    for (int k = 1; k < n; ++k) {
      std::vector<esb::Monomial> gens;
      for (int v = 0; v < k; ++v) {
        esb::Monomial m(static_cast<std::size_t>(n), 0);
        m[static_cast<std::size_t>(v)] = 1;
        gens.push_back(m);
      }
      std::vector<int> facet;
      for (int v = k; v < n; ++v) facet.push_back(v);
      const esb::SimplicialComplex c(n, {facet});
      CHECK(esb::eliahou_kervaire_betti(esb::MonomialIdeal(n, gens)) == esb::hochster_betti(c));
    }
}
