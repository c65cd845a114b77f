#pragma once

// Binomial coefficients with the extended convention and Macaulay
// expansions b = C(m_d, d) + C(m_{d-1}, d-1) + ... + C(m_s, s).

#include <esb/integer.hpp>

#include <string>
#include <vector>

namespace esb {

/// C(a, j) = a(a-1)...(a-j+1)/j! for j > 0, 1 for j == 0, 0 for j < 0.
/// Defined for every integer a, including negative a.
Integer binom(const Integer& a, long j);

struct BinomialTerm {
  Integer top;  // m_k
  long bottom;  // k

  friend bool operator==(const BinomialTerm&, const BinomialTerm&) = default;
};

/// Greedy d-binomial expansion of a non-negative integer. Terms are stored
/// with strictly decreasing tops and bottoms d, d-1, ..., s >= 1. The
/// expansion of zero has no terms.
class BinomialExpansion {
 public:
  BinomialExpansion() = default;
  BinomialExpansion(Integer value, long degree, std::vector<BinomialTerm> terms);

  const Integer& value() const { return value_; }
  long degree() const { return degree_; }
  const std::vector<BinomialTerm>& terms() const { return terms_; }
  bool empty() const { return terms_.empty(); }

  /// Sum of C(m_k + j, k + j) over all terms.
  Integer shifted(long j) const;

  std::string to_string() const;

 private:
  Integer value_ = 0;
  long degree_ = 1;
  std::vector<BinomialTerm> terms_;
};

/// Throws ValidationError if b < 0 or d < 1.
BinomialExpansion binomial_expansion(const Integer& b, long d);

/// b^{<d,j>}: shift every term of the d-expansion of b by j. Zero for b == 0.
Integer macaulay_shift(const Integer& b, long d, long j);

/// b^{<d>} = b^{<d,1>}, the Macaulay growth bound.
inline Integer macaulay_upper(const Integer& b, long d) { return macaulay_shift(b, d, 1); }

/// b_{<d>} = b^{<d,-1>}.
inline Integer macaulay_lower(const Integer& b, long d) { return macaulay_shift(b, d, -1); }

}  // namespace esb
