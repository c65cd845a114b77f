#pragma once

// Closed-form graded Betti numbers of lex-segment ideals and the upper
// bounds they give for arbitrary, Cohen-Macaulay and Gorenstein algebras.
//
// Indexing: a table entry (i, j) is beta_{i,j}, homological index i and
// internal degree j, of the cyclic module R/I. The "row" functions below
// take (i, d) and return beta_{i+1, i+d}, the generator-degree-d strand.

#include <esb/integer.hpp>
#include <esb/vectors.hpp>

#include <functional>
#include <map>
#include <span>
#include <utility>

namespace esb {

class BettiTable {
 public:
  BettiTable() = default;
  explicit BettiTable(long n) : n_(n) {}

  long n() const { return n_; }
  /// Stored entries are non-zero and ordered by (i, j).
  const std::map<std::pair<long, long>, Integer>& entries() const { return entries_; }

  Integer at(long i, long j) const;
  /// Adds `value` to entry (i, j); entries that reach zero are erased.
  void add(long i, long j, const Integer& value);
  /// Sum over j of beta_{i,j}.
  Integer total(long i) const;
  long max_homological_index() const;

  friend bool operator==(const BettiTable&, const BettiTable&) = default;

 private:
  long n_ = 0;
  std::map<std::pair<long, long>, Integer> entries_;
};

/// i-th total Betti number sum_{j=0}^{i} (-1)^j h_M(d+j) C(n, i-j) of a
/// module with a d-linear resolution. Throws ValidationError if negative.
Integer linear_resolution_betti(const std::function<Integer(long)>& hilbert, long d, long n, long i);

/// beta_{i+1,i+d}(R/I) for the lex ideal I generated in degree d with
/// h_{R/I}(d) = b. Requires d >= 1, i >= 0 and 0 <= b <= C(n+d-1, d).
Integer lex_betti_single_degree(const Integer& b, long d, long n, long i);

/// beta_{i+1,i+d}(h, n): the Betti number of the lex-segment ideal with
/// Hilbert function h in n variables. Zero for d <= 0, C(n - h(1), i+1) for
/// d == 1; for i <= -1 it is 1 exactly at beta_{0,0}.
/// Throws ValidationError if h(1) > n.
Integer betti_bound(const OSequence& h, long n, long i, long d);

/// Same number addressed by table position: beta_{i,j}(h, n).
Integer betti_at(const OSequence& h, long n, long i, long j);

/// Full table of betti_at over all non-zero positions.
BettiTable betti_table_bound(const OSequence& h, long n);

/// Bound for a Cohen-Macaulay algebra of Krull dimension `dim` in n
/// variables whose Artinian reduction has h-vector `hvec`:
/// betti_bound(hvec, n - dim, i, d).
Integer cm_betti_bound(const OSequence& hvec, long n, long dim, long i, long d);

/// Parameters of an SI-sequence h = (h_0..h_r) with plateau start u.
struct SiData {
  long r = 0;
  long u = 0;
  GVector g{IntVector{1}};
  Integer h1 = 0;
};
SiData si_data(const HVector& h);

/// Bound on beta_{i+1,i+j} of a Gorenstein algebra with the Weak Lefschetz
/// property, h-vector h, Krull dimension `dim`, in n variables.
/// Requires n - dim - 1 >= g_1.
Integer gorenstein_wlp_bound(const HVector& h, long n, long dim, long i, long j);

/// All non-zero gorenstein_wlp_bound values as a table over R.
BettiTable gorenstein_wlp_table(const HVector& h, long n, long dim);

}  // namespace esb
