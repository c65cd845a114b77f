#include <esb/binomial.hpp>

#include <esb/errors.hpp>

#include <array>
#include <cstdint>

namespace esb {
namespace {

constexpr int kTableRows = 63;

// Pascal triangle for 0 <= a < 63; every entry fits in int64.
const std::array<std::array<std::int64_t, kTableRows>, kTableRows>& pascal() {
  static const auto table = [] {
    std::array<std::array<std::int64_t, kTableRows>, kTableRows> t{};
    for (int a = 0; a < kTableRows; ++a) {
      t[a][0] = 1;
      for (int j = 1; j <= a; ++j) t[a][j] = t[a - 1][j - 1] + (j < a ? t[a - 1][j] : 0);
    }
    return t;
  }();
  return table;
}

}  // namespace

Integer binom(const Integer& a, long j) {
  if (j < 0) return 0;
  if (j == 0) return 1;
  if (a >= 0) {
    if (a < j) return 0;
    if (a < kTableRows) return pascal()[a.convert_to<int>()][j];
    Integer other = a - j;
    if (other < j) j = other.convert_to<long>();
  }
  Integer falling = 1;
  Integer factorial = 1;
  for (long k = 0; k < j; ++k) {
    falling *= a - k;
    factorial *= k + 1;
  }
  return falling / factorial;
}

BinomialExpansion::BinomialExpansion(Integer value, long degree, std::vector<BinomialTerm> terms)
    : value_(std::move(value)), degree_(degree), terms_(std::move(terms)) {}

Integer BinomialExpansion::shifted(long j) const {
  Integer sum = 0;
  for (const auto& t : terms_) sum += binom(t.top + j, t.bottom + j);
  return sum;
}

std::string BinomialExpansion::to_string() const {
  if (terms_.empty()) return "0";
  std::string out;
  for (const auto& t : terms_) {
    if (!out.empty()) out += " + ";
    out += "C(" + t.top.str() + "," + std::to_string(t.bottom) + ")";
  }
  return out;
}

BinomialExpansion binomial_expansion(const Integer& b, long d) {
  if (d < 1) throw ValidationError("binomial expansion needs degree d >= 1, got " + std::to_string(d));
  if (b < 0) throw ValidationError("binomial expansion needs b >= 0, got " + b.str());

  std::vector<BinomialTerm> terms;
  Integer rest = b;
  for (long k = d; k >= 1 && rest > 0; --k) {
    // Largest m with C(m, k) <= rest; C(k, k) = 1 <= rest so m >= k.
    Integer lo = k;
    Integer hi = k + 1;
    while (binom(hi, k) <= rest) {
      lo = hi;
      hi *= 2;
    }
    while (hi - lo > 1) {
      Integer mid = (lo + hi) / 2;
      if (binom(mid, k) <= rest)
        lo = mid;
      else
        hi = mid;
    }
    rest -= binom(lo, k);
    terms.push_back({lo, k});
  }
  return BinomialExpansion(b, d, std::move(terms));
}

Integer macaulay_shift(const Integer& b, long d, long j) {
  if (b == 0) return 0;
  return binomial_expansion(b, d).shifted(j);
}

}  // namespace esb
