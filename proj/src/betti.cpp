#include <esb/betti.hpp>

#include <esb/binomial.hpp>
#include <esb/errors.hpp>

#include <algorithm>

namespace esb {

Integer BettiTable::at(long i, long j) const {
  auto it = entries_.find({i, j});
  return it == entries_.end() ? Integer(0) : it->second;
}

void BettiTable::add(long i, long j, const Integer& value) {
  if (value == 0) return;
  auto& slot = entries_[{i, j}];
  slot += value;
  if (slot == 0) entries_.erase({i, j});
}

Integer BettiTable::total(long i) const {
  Integer sum = 0;
  for (const auto& [key, value] : entries_)
    if (key.first == i) sum += value;
  return sum;
}

long BettiTable::max_homological_index() const {
  long top = -1;
  for (const auto& [key, value] : entries_) top = std::max(top, key.first);
  return top;
}

Integer linear_resolution_betti(const std::function<Integer(long)>& hilbert, long d, long n, long i) {
  if (i < 0) throw ValidationError("homological index must be >= 0");
  Integer sum = 0;
  for (long j = 0; j <= i; ++j) {
    Integer term = hilbert(d + j) * binom(n, i - j);
    if (j % 2) sum -= term;
    else sum += term;
  }
  if (sum < 0)
    throw ValidationError("alternating sum is negative (" + sum.str() + "): not the Hilbert function of a " +
                          std::to_string(d) + "-linear module");
  return sum;
}

namespace {

// sum_{k} sum_{j=0}^{m_k-k} C(m_k - j + top_shift, k + bottom_shift) C(n-1-j, i)
Integer strand_sum(const BinomialExpansion& e, long n, long i, long top_shift, long bottom_shift) {
  Integer sum = 0;
  for (const auto& t : e.terms()) {
    const long span = (t.top - t.bottom).convert_to<long>();
    for (long j = 0; j <= span; ++j) sum += binom(t.top - j + top_shift, t.bottom + bottom_shift) * binom(n - 1 - j, i);
  }
  return sum;
}

}  // namespace

Integer lex_betti_single_degree(const Integer& b, long d, long n, long i) {
  if (d < 1) throw ValidationError("generator degree must be >= 1");
  if (n < 1) throw ValidationError("need at least one variable");
  if (i < 0) throw ValidationError("homological index must be >= 0");
  const Integer all = binom(n + d - 1, d);
  if (b < 0 || b > all)
    throw ValidationError("h(" + std::to_string(d) + ") = " + b.str() + " is not a Hilbert value in " +
                          std::to_string(n) + " variables (must lie in [0, " + all.str() + "])");
  Integer full = binom(n + d - 1, d + i) * binom(d + i - 1, d - 1);
  return full - strand_sum(binomial_expansion(b, d), n, i, -1, -1);
}

Integer betti_bound(const OSequence& h, long n, long i, long d) {
  if (h(1) > n)
    throw ValidationError("too few variables: h(1) = " + h(1).str() + " exceeds n = " + std::to_string(n));
  if (i <= -1) return (i == -1 && d == 1) ? 1 : 0;
  if (d <= 0) return 0;
  if (d == 1) return binom(n - h(1), i + 1);
  const Integer upper = strand_sum(binomial_expansion(h(d - 1), d - 1), n, i, 0, 0);
  const Integer lower = strand_sum(binomial_expansion(h(d), d), n, i, -1, -1);
  return upper - lower;
}

Integer betti_at(const OSequence& h, long n, long i, long j) { return betti_bound(h, n, i - 1, j - i + 1); }

BettiTable betti_table_bound(const OSequence& h, long n) {
  if (h(1) > n)
    throw ValidationError("too few variables: h(1) = " + h(1).str() + " exceeds n = " + std::to_string(n));
  BettiTable table(n);
  table.add(0, 0, 1);
  const long top_degree = h.last_degree() + 1;
  for (long d = 1; d <= top_degree; ++d)
    for (long i = 0; i < n; ++i) table.add(i + 1, i + d, betti_bound(h, n, i, d));
  return table;
}

Integer cm_betti_bound(const OSequence& hvec, long n, long dim, long i, long d) {
  if (dim < 0) throw ValidationError("Krull dimension must be >= 0");
  if (n - dim < hvec(1))
    throw ValidationError("inconsistent input: n - dim = " + std::to_string(n - dim) + " < h(1) = " + hvec(1).str());
  return betti_bound(hvec, n - dim, i, d);
}

SiData si_data(const HVector& h) {
  SiData data;
  data.g = h_to_g(h);
  data.r = h.d();
  data.u = data.g.u();
  if (data.r < 1) throw ValidationError("SI-sequence needs socle degree r >= 1");
  data.h1 = h[1];
  return data;
}

namespace {

// Bound in exactly g_1 + 1 = h_1 variables modulo dim general forms,
// where the three ranges apply as stated.
Integer gorenstein_core(const SiData& s, const OSequence& g, long m, long i, long j) {
  const long g1 = s.g.g1().convert_to<long>();
  const long h1 = s.h1.convert_to<long>();
  auto first = [&] { return betti_at(g, m, i + 1, i + j); };
  auto dual = [&] { return betti_at(g, m, g1 - i, s.r + h1 - i - j); };
  if (s.r - s.u + 1 <= j && j <= s.u + 1) return first() + dual();
  if (j <= s.r - s.u) return first();
  return dual();
}

}  // namespace

Integer gorenstein_wlp_bound(const HVector& h, long n, long dim, long i, long j) {
  const SiData s = si_data(h);
  const long m = n - dim - 1;
  const long g1 = s.g.g1().convert_to<long>();
  if (m < g1)
    throw ValidationError("need n - dim - 1 >= g_1, got n - dim - 1 = " + std::to_string(m) +
                          " and g_1 = " + std::to_string(g1));
  const OSequence g(s.g.entries());
  // e = m - g_1 linear forms lie in the ideal; they contribute a Koszul factor.
  const long e = m - g1;
  Integer sum = 0;
  for (long k = 0; k <= e; ++k) sum += binom(e, k) * gorenstein_core(s, g, g1, i - k, j);
  return sum;
}

BettiTable gorenstein_wlp_table(const HVector& h, long n, long dim) {
  const SiData s = si_data(h);
  BettiTable table(n);
  for (long i = -1; i < n; ++i)
    for (long deg = std::max(0L, i + 1); deg <= n + s.r + 1; ++deg)
      table.add(i + 1, deg, gorenstein_wlp_bound(h, n, dim, i, deg - i));
  return table;
}

}  // namespace esb
