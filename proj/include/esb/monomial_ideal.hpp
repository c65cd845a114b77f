#pragma once

// Monomial ideals, lex-segment ideals and the Eliahou-Kervaire resolution
// of stable ideals.

#include <esb/betti.hpp>
#include <esb/vectors.hpp>

#include <cstddef>
#include <vector>

namespace esb {

/// Exponent vector (e_1, ..., e_n) of x_1^{e_1} ... x_n^{e_n}.
using Monomial = std::vector<int>;

inline constexpr std::size_t kDefaultGeneratorLimit = 200;

int degree(const Monomial& m);
/// Largest index k (1-based) with e_k > 0; 0 for the constant monomial.
int max_index(const Monomial& m);
bool divides(const Monomial& a, const Monomial& b);

/// Monomials of the given degree in n variables, lex-descending with
/// x_1 > x_2 > ... > x_n.
std::vector<Monomial> monomials_of_degree(int n, int deg);

class MonomialIdeal {
 public:
  /// Reduces `generators` to the minimal generating set. Throws
  /// ValidationError on length mismatch, negative exponents or the unit ideal.
  MonomialIdeal(int n_vars, std::vector<Monomial> generators);

  int n_vars() const { return n_vars_; }
  /// Minimal generators sorted by degree, then lex-descending.
  const std::vector<Monomial>& generators() const { return generators_; }
  bool contains(const Monomial& m) const;

  friend bool operator==(const MonomialIdeal&, const MonomialIdeal&) = default;

 private:
  int n_vars_;
  std::vector<Monomial> generators_;
};

/// The lex-segment ideal I in n variables with h_{R/I} = h. Throws
/// ValidationError if h(1) > n and SizeLimitError past `generator_limit`.
MonomialIdeal lex_segment_ideal(const OSequence& h, int n, std::size_t generator_limit = kDefaultGeneratorLimit);

/// For each generator m and i < max(m): m x_i / x_{max(m)} lies in I.
bool is_stable(const MonomialIdeal& ideal);

/// beta_{i+1, i+deg u}(R/I) = sum over generators u of C(max(u)-1, i).
/// Throws ValidationError if the ideal is not stable.
BettiTable eliahou_kervaire_betti(const MonomialIdeal& ideal);

}  // namespace esb
