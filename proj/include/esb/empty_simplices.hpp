#pragma once

// Bounds on the number of empty simplices (minimal non-faces) of a
// simplicial d-polytope. An empty simplex of dimension k has k+1 vertices
// and is a minimal generator of degree k+1 of the Stanley-Reisner ideal;
// functions taking a "degree" use the generator degree, functions taking a
// "dim" use the simplex dimension.

#include <esb/integer.hpp>
#include <esb/vectors.hpp>

#include <map>
#include <optional>
#include <utility>

namespace esb {

/// Bound on the number of minimal generators of degree j (empty
/// (j-1)-simplices) for a d-polytope with g-vector g. Requires 2u <= d.
/// For the simplex (u == 0) the only non-zero value is 1 at j = d + 1.
Integer generator_degree_bound(const GVector& g, long d, long j);

/// generator_degree_bound(g, d, dim + 1).
Integer empty_dimension_bound(const GVector& g, long d, long dim);

/// N(k): bound on empty simplices of dimension <= k, 1 <= k < d, u >= 1.
Integer cumulative_bound(const GVector& g, long d, long k);

/// Bound on all empty simplices; independent of d. Requires u >= 1.
Integer total_bound(const GVector& g);

/// N(k) bound for a non-simplex d-polytope with d + g1 + 1 vertices.
Integer vertex_count_bound(const Integer& g1, long d, long k);

/// Bound on empty simplices of dimension <= k valid in every dimension.
Integer dimension_free_bound(const Integer& g1, long k);

/// Empty j-simplices of a d-polytope with g_k <= b. Throws
/// PreconditionError unless j >= k >= 1, b >= 0 and d >= j + k.
Integer gk_bound(const Integer& b, long k, long j, long d);

/// b^{<k,j-k+1>} + b^{<k,j-k>}; dominates gk_bound for every d >= j + k.
Integer gk_dimension_free_bound(const Integer& b, long k, long j);

/// Everything known about one (g, d) pair.
struct EmptySimplexBoundReport {
  long d = 0;
  GVector g{IntVector{1}};
  /// generator degree j (1 <= j <= d+1) -> bound on beta_{1,j}
  std::map<long, Integer> per_degree;
  /// closed interval of simplex dimensions whose bound is zero, if non-empty
  std::optional<std::pair<long, long>> vanishing_range;
  /// k -> N(k) for 1 <= k < d
  std::map<long, Integer> cumulative;
  Integer total = 0;

  /// per_degree re-indexed by simplex dimension (degree - 1).
  std::map<long, Integer> per_dimension() const;
};

EmptySimplexBoundReport bound_report(const GVector& g, long d);

}  // namespace esb
