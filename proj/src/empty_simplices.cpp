#include <esb/empty_simplices.hpp>

#include <esb/binomial.hpp>
#include <esb/errors.hpp>

#include <algorithm>

namespace esb {
namespace {

void require_dimension(const GVector& g, long d) {
  if (2 * g.u() > d)
    throw ValidationError("dimension too small: g-vector with u = " + std::to_string(g.u()) + " needs d >= " +
                          std::to_string(2 * g.u()) + ", got d = " + std::to_string(d));
}

// g_j^{<j>} and (g_j)_{<j>} with g_j = 0 past u.
Integer up(const GVector& g, long j) { return macaulay_upper(g.at(j), j); }
Integer low(const GVector& g, long j) { return macaulay_lower(g.at(j), j); }

}  // namespace

Integer generator_degree_bound(const GVector& g, long d, long j) {
  require_dimension(g, d);
  const long u = g.u();
  if (u == 0) return j == d + 1 ? 1 : 0;  // boundary of a simplex: one non-face, all d+1 vertices
  if (d == 2 * u && j == u + 1) return up(g, u) + g.at(u);
  if (2 <= j && j <= u + 1) return up(g, j - 1) - g.at(j);
  if (d - u + 1 <= j && j <= d) return g.at(d + 1 - j) - low(g, d + 2 - j);
  return 0;
}

Integer empty_dimension_bound(const GVector& g, long d, long dim) { return generator_degree_bound(g, d, dim + 1); }

Integer cumulative_bound(const GVector& g, long d, long k) {
  require_dimension(g, d);
  if (k < 1 || k >= d)
    throw PreconditionError("N(k) needs 1 <= k < d, got k = " + std::to_string(k) + ", d = " + std::to_string(d));
  const long u = g.u();
  if (u == 0) return 0;
  if (k <= std::min(u, d - u - 1)) {
    Integer sum = g.g1();
    for (long j = 1; j <= k; ++j) sum += up(g, j) - g.at(j);
    return sum - g.at(k + 1);
  }
  if (k < d - u) return cumulative_bound(g, d, u);
  Integer sum = g.g1() + up(g, d - k);
  for (long j = 1; j <= d - k - 1; ++j) sum += up(g, j) - g.at(j);
  for (long j = d - k + 1; j <= u; ++j) sum += up(g, j) - low(g, j);
  return sum;
}

Integer total_bound(const GVector& g) {
  if (g.u() == 0) return 1;
  Integer sum = binom(g.g1() + 2, 2) - 1;
  for (long j = 2; j <= g.u(); ++j) sum += up(g, j) - low(g, j);
  return sum;
}

Integer vertex_count_bound(const Integer& g1, long d, long k) {
  if (g1 < 1) throw PreconditionError("polytope must not be a simplex: need g_1 >= 1, got " + g1.str());
  if (k < 1 || k >= d)
    throw PreconditionError("N(k) needs 1 <= k < d, got k = " + std::to_string(k) + ", d = " + std::to_string(d));
  const long g1_minus = (g1 - 1).convert_to<long>();
  if (2 * k < d) return binom(g1 + k, g1_minus);
  const long half = d / 2;
  return binom(g1 + half, g1_minus) + binom(g1 + half - 1, g1_minus);
}

Integer dimension_free_bound(const Integer& g1, long k) {
  if (g1 < 1) throw PreconditionError("polytope must not be a simplex: need g_1 >= 1, got " + g1.str());
  const long g1_minus = (g1 - 1).convert_to<long>();
  return binom(g1 + k, g1_minus) + binom(g1 + k - 1, g1_minus);
}

Integer gk_bound(const Integer& b, long k, long j, long d) {
  if (k < 1 || j < k)
    throw PreconditionError("requires j >= k >= 1, got j = " + std::to_string(j) + ", k = " + std::to_string(k));
  if (b < 0) throw PreconditionError("requires b >= 0, got " + b.str());
  if (d < j + k)
    throw PreconditionError("requires d >= j + k (no bound in terms of g_k exists otherwise), got d = " +
                            std::to_string(d) + ", j + k = " + std::to_string(j + k));
  if (2 * j < d) return macaulay_shift(b, k, j - k + 1);
  if (2 * j == d) return macaulay_shift(b, k, j - k + 1) + macaulay_shift(b, k, j - k);
  return macaulay_shift(b, k, d - j - k);
}

Integer gk_dimension_free_bound(const Integer& b, long k, long j) {
  if (k < 1 || j < k)
    throw PreconditionError("requires j >= k >= 1, got j = " + std::to_string(j) + ", k = " + std::to_string(k));
  if (b < 0) throw PreconditionError("requires b >= 0, got " + b.str());
  return macaulay_shift(b, k, j - k + 1) + macaulay_shift(b, k, j - k);
}

std::map<long, Integer> EmptySimplexBoundReport::per_dimension() const {
  std::map<long, Integer> out;
  for (const auto& [degree, value] : per_degree) out[degree - 1] = value;
  return out;
}

EmptySimplexBoundReport bound_report(const GVector& g, long d) {
  require_dimension(g, d);
  EmptySimplexBoundReport report;
  report.d = d;
  report.g = g;
  for (long j = 1; j <= d + 1; ++j) report.per_degree[j] = generator_degree_bound(g, d, j);
  const long lo = g.u() + 1;
  const long hi = d - g.u() - 1;
  if (lo <= hi) report.vanishing_range = std::make_pair(lo, hi);
  for (long k = 1; k < d; ++k) report.cumulative[k] = cumulative_bound(g, d, k);
  report.total = total_bound(g);
  return report;
}

}  // namespace esb
