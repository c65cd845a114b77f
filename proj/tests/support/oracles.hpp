#pragma once

// Slow reference implementations used only by the test suites. Nothing here
// calls into the library's binomial or expansion code.

#include <esb/integer.hpp>

#include <algorithm>
#include <cstdint>
#include <functional>
#include <map>
#include <vector>

namespace oracle {

using esb::Integer;
using esb::IntVector;

// Pascal's triangle for a >= 0, upper negation for a < 0.
inline Integer binom(long a, long j) {
  if (j < 0) return 0;
  if (j == 0) return 1;
  if (a < 0) {
    Integer v = binom(-a + j - 1, j);
    return (j % 2) ? Integer(-v) : v;
  }
  if (j > a) return 0;
  static std::vector<std::vector<Integer>> rows{{Integer(1)}};
  while (static_cast<long>(rows.size()) <= a) {
    const auto& prev = rows.back();
    std::vector<Integer> row(prev.size() + 1, Integer(1));
    for (std::size_t k = 1; k < prev.size(); ++k) row[k] = prev[k - 1] + prev[k];
    rows.push_back(std::move(row));
  }
  return rows[static_cast<std::size_t>(a)][static_cast<std::size_t>(j)];
}

// Every way to write b = sum binom(m_k, k), k = d, d-1, ..., s >= 1 with
// m_d > m_{d-1} > ... > m_s >= s. Each decomposition is a list of (m_k, k).
inline std::vector<std::vector<std::pair<long, long>>> all_decompositions(long b, long d) {
  std::vector<std::vector<std::pair<long, long>>> out;
  std::vector<std::pair<long, long>> current;
  std::function<void(long, long, long)> go = [&](long rest, long k, long top_bound) {
    if (rest == 0) {
      if (!current.empty() || b == 0) out.push_back(current);
      return;
    }
    if (k < 1) return;
    for (long m = k; m < top_bound; ++m) {
      const long value = binom(m, k).convert_to<long>();
      if (value > rest) break;
      current.emplace_back(m, k);
      go(rest - value, k - 1, m);
      current.pop_back();
    }
  };
  go(b, d, b + d + 2);
  return out;
}

// Exponent vectors of degree deg in n variables, lex-descending with x_1 > ... > x_n.
inline std::vector<std::vector<int>> monomials(int n, int deg) {
  std::vector<std::vector<int>> out;
  std::vector<int> e(static_cast<std::size_t>(n), 0);
  std::function<void(int, int)> go = [&](int var, int left) {
    if (var == n - 1) {
      e[static_cast<std::size_t>(var)] = left;
      out.push_back(e);
      return;
    }
    for (int a = left; a >= 0; --a) {
      e[static_cast<std::size_t>(var)] = a;
      go(var + 1, left - a);
    }
  };
  if (n > 0) go(0, deg);
  return out;
}

inline bool divides(const std::vector<int>& a, const std::vector<int>& b) {
  for (std::size_t i = 0; i < a.size(); ++i)
    if (a[i] > b[i]) return false;
  return true;
}

// Macaulay growth read off a lex ideal: keep the last b degree-deg monomials
// out of the ideal and count the degree deg+j monomials the ideal misses.
inline long lex_growth(long b, int deg, int j, int n) {
  const auto base = monomials(n, deg);
  const std::vector<std::vector<int>> gens(base.begin(), base.end() - b);
  long missed = 0;
  for (const auto& m : monomials(n, deg + j)) {
    bool in = false;
    for (const auto& g : gens)
      if (divides(g, m)) {
        in = true;
        break;
      }
    if (!in) ++missed;
  }
  return missed;
}

// b_{<deg>}: how many of the last b lex monomials are divisible by x_n.
inline long lex_lower(long b, int deg, int n) {
  const auto base = monomials(n, deg);
  long count = 0;
  for (auto it = base.end() - b; it != base.end(); ++it)
    if (it->back() > 0) ++count;
  return count;
}

// Coefficients of sum_j f_{j-1} z^j (1-z)^{d-j} by explicit polynomial products.
inline IntVector f_to_h_poly(const IntVector& f, long d) {
  IntVector h(static_cast<std::size_t>(d + 1), Integer(0));
  for (long j = 0; j <= d; ++j) {
    IntVector p{f[static_cast<std::size_t>(j)]};
    for (long t = 0; t < j; ++t) p.insert(p.begin(), Integer(0));
    for (long t = 0; t < d - j; ++t) {
      IntVector q(p.size() + 1, Integer(0));
      for (std::size_t s = 0; s < p.size(); ++s) {
        q[s] += p[s];
        q[s + 1] -= p[s];
      }
      p = q;
    }
    for (std::size_t s = 0; s < p.size(); ++s) h[s] += p[s];
  }
  return h;
}

// Minimal non-faces by scanning all vertex subsets against the facet list.
inline std::vector<std::vector<int>> minimal_nonfaces(int n, const std::vector<std::vector<int>>& facets) {
  std::vector<std::uint64_t> masks;
  for (const auto& f : facets) {
    std::uint64_t m = 0;
    for (int v : f) m |= std::uint64_t{1} << v;
    masks.push_back(m);
  }
  auto is_face = [&](std::uint64_t s) {
    return std::any_of(masks.begin(), masks.end(), [&](std::uint64_t f) { return (s & ~f) == 0; });
  };
  std::vector<std::vector<int>> out;
  for (std::uint64_t s = 1; s < (std::uint64_t{1} << n); ++s) {
    if (is_face(s)) continue;
    bool minimal = true;
    for (int v = 0; v < n && minimal; ++v)
      if ((s >> v & 1) && !is_face(s & ~(std::uint64_t{1} << v))) minimal = false;
    if (!minimal) continue;
    std::vector<int> vs;
    for (int v = 0; v < n; ++v)
      if (s >> v & 1) vs.push_back(v);
    out.push_back(vs);
  }
  return out;
}

// Counts of minimal non-faces keyed by cardinality.
inline std::map<long, long> nonface_counts(int n, const std::vector<std::vector<int>>& facets) {
  std::map<long, long> out;
  for (const auto& s : minimal_nonfaces(n, facets)) ++out[static_cast<long>(s.size())];
  return out;
}

}  // namespace oracle
