#pragma once

// Exact reduced homology and Hochster's formula for Stanley-Reisner rings.

#include <esb/betti.hpp>
#include <esb/complex.hpp>

#include <map>

namespace esb {

inline constexpr int kDefaultVertexLimit = 12;

struct HomologyOptions {
  /// 0 for the rationals, otherwise a prime p.
  long characteristic = 0;
  int vertex_limit = kDefaultVertexLimit;
  /// Worker threads for the sum over vertex subsets; results do not depend on it.
  unsigned threads = 1;
};

/// Throws ValidationError unless p is 0 or prime.
void validate_characteristic(long p);

/// Rank of an integer matrix over Q (p == 0) or F_p.
long matrix_rank(std::vector<std::vector<long>> rows, long characteristic);

/// Dimension k (from -1 up to dim) -> rank of reduced homology; only
/// non-zero ranks are stored.
std::map<int, long> reduced_homology_ranks(const SimplicialComplex& c, const HomologyOptions& options = {});

/// Graded Betti numbers of K[c] over a field of the given characteristic:
/// beta_{i,j} = sum over |W| = j of dim H~_{j-i-1}(c|_W).
/// Throws SizeLimitError if c has more than options.vertex_limit vertices.
BettiTable hochster_betti(const SimplicialComplex& c, const HomologyOptions& options = {});

}  // namespace esb
