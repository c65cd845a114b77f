#pragma once

// Face-count vectors of simplicial polytopes and the sequence classes that
// characterize them.

#include <esb/integer.hpp>

#include <cstddef>
#include <optional>
#include <span>
#include <string>

namespace esb {

/// Outcome of a sequence check. `index` names the first offending entry.
struct CheckResult {
  bool ok = true;
  std::optional<std::size_t> index;
  std::string reason;

  explicit operator bool() const { return ok; }
  static CheckResult pass() { return {}; }
  static CheckResult fail(std::optional<std::size_t> index, std::string reason) {
    return {false, index, std::move(reason)};
  }
};

/// (h_0, h_1, ...) with h_0 = 1, entries >= 0 and h_{j+1} <= h_j^{<j>} for j >= 1.
CheckResult is_o_sequence(std::span<const Integer> seq);

/// h_i = h_{d-i} for all i, and (h_0, h_1 - h_0, ..., h_{d/2} - h_{d/2-1}) is
/// an O-sequence, where d = size - 1.
CheckResult is_si_sequence(std::span<const Integer> h);

/// f = (f_{-1}, f_0, ..., f_{d-1}) with f_{-1} = 1 and all entries positive.
class FVector {
 public:
  FVector(long d, IntVector entries);

  long d() const { return d_; }
  const IntVector& entries() const { return entries_; }
  /// f_i for -1 <= i <= d-1.
  const Integer& f(long i) const { return entries_.at(static_cast<std::size_t>(i + 1)); }

  friend bool operator==(const FVector&, const FVector&) = default;

 private:
  long d_;
  IntVector entries_;
};

/// h = (h_0, ..., h_d) with h_0 = 1 and non-negative entries.
class HVector {
 public:
  explicit HVector(IntVector entries);

  long d() const { return static_cast<long>(entries_.size()) - 1; }
  const IntVector& entries() const { return entries_; }
  const Integer& operator[](std::size_t i) const { return entries_[i]; }

  friend bool operator==(const HVector&, const HVector&) = default;

 private:
  IntVector entries_;
};

/// g = (g_0, ..., g_u): positive O-sequence with g_0 = 1, stored without
/// trailing zeros. Reads past u return 0.
class GVector {
 public:
  explicit GVector(IntVector entries);

  long u() const { return static_cast<long>(entries_.size()) - 1; }
  const IntVector& entries() const { return entries_; }
  /// g_j, zero for j < 0 or j > u.
  Integer at(long j) const;
  const Integer& g1() const;

  friend bool operator==(const GVector&, const GVector&) = default;

 private:
  IntVector entries_;
};

/// Validated Hilbert function of a standard graded algebra. Values past the
/// stored prefix are zero (Artinian) or continue by maximal Macaulay growth.
class OSequence {
 public:
  explicit OSequence(IntVector entries, bool maximal_growth_tail = false);

  const IntVector& entries() const { return entries_; }
  bool maximal_growth_tail() const { return maximal_growth_tail_; }

  /// h(j); zero for j < 0.
  Integer operator()(long j) const;

  /// Last degree with h(j) > 0 for Artinian sequences; for growth tails the
  /// last stored degree, past which no new lex generators appear.
  long last_degree() const;

 private:
  IntVector entries_;
  bool maximal_growth_tail_;
};

/// Coefficients of sum_j f_{j-1} z^j (1-z)^{d-j}. Pure algebra: accepts any
/// integer vector of length d+1.
IntVector f_to_h_coefficients(std::span<const Integer> f, long d);

/// f_{j-1} = sum_{i<=j} C(d-i, j-i) h_i. Inverse of f_to_h_coefficients.
IntVector h_to_f_coefficients(std::span<const Integer> h, long d);

/// Throws ValidationError if some h-entry is negative (input is not polytopal).
HVector f_to_h(const FVector& f);
/// Throws ValidationError unless h has length d+1.
FVector h_to_f(const HVector& h, long d);
/// Throws ValidationError naming the first violated SI condition.
GVector h_to_g(const HVector& h);
/// Throws ValidationError if 2u > d.
HVector g_to_h(const GVector& g, long d);

}  // namespace esb
