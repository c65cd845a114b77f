#include <esb/vectors.hpp>

#include <esb/binomial.hpp>
#include <esb/errors.hpp>

namespace esb {

CheckResult is_o_sequence(std::span<const Integer> seq) {
  if (seq.empty()) return CheckResult::fail(std::nullopt, "empty sequence");
  if (seq[0] != 1) return CheckResult::fail(0, "h_0 = " + seq[0].str() + " but must be 1");
  for (std::size_t i = 1; i < seq.size(); ++i)
    if (seq[i] < 0) return CheckResult::fail(i, "negative entry h_" + std::to_string(i) + " = " + seq[i].str());
  for (std::size_t j = 1; j + 1 < seq.size(); ++j) {
    Integer growth = macaulay_upper(seq[j], static_cast<long>(j));
    if (seq[j + 1] > growth) {
      return CheckResult::fail(j + 1, "h_" + std::to_string(j + 1) + " = " + seq[j + 1].str() +
                                          " exceeds Macaulay bound h_" + std::to_string(j) + "^<" +
                                          std::to_string(j) + "> = " + growth.str());
    }
  }
  return CheckResult::pass();
}

CheckResult is_si_sequence(std::span<const Integer> h) {
  if (h.empty()) return CheckResult::fail(std::nullopt, "empty sequence");
  const std::size_t d = h.size() - 1;
  for (std::size_t i = 0; i <= d / 2; ++i) {
    if (h[i] != h[d - i]) {
      return CheckResult::fail(i, "not symmetric: h_" + std::to_string(i) + " = " + h[i].str() + " but h_" +
                                      std::to_string(d - i) + " = " + h[d - i].str());
    }
  }
  IntVector diffs;
  for (std::size_t i = 0; i <= d / 2; ++i) diffs.push_back(i == 0 ? h[0] : h[i] - h[i - 1]);
  auto diff_check = is_o_sequence(diffs);
  if (!diff_check) {
    return CheckResult::fail(diff_check.index, "first differences (" + join(diffs) +
                                                   ") are not an O-sequence: " + diff_check.reason);
  }
  return CheckResult::pass();
}

FVector::FVector(long d, IntVector entries) : d_(d), entries_(std::move(entries)) {
  if (d_ < 0) throw ValidationError("f-vector dimension must be >= 0");
  if (entries_.size() != static_cast<std::size_t>(d_ + 1))
    throw ValidationError("f-vector of a " + std::to_string(d_) + "-polytope needs " + std::to_string(d_ + 1) +
                          " entries (f_{-1}..f_{d-1}), got " + std::to_string(entries_.size()));
  if (entries_[0] != 1) throw ValidationError("f_{-1} must be 1, got " + entries_[0].str());
  for (std::size_t i = 1; i < entries_.size(); ++i)
    if (entries_[i] <= 0)
      throw ValidationError("f_" + std::to_string(static_cast<long>(i) - 1) + " = " + entries_[i].str() +
                            " is not positive");
}

HVector::HVector(IntVector entries) : entries_(std::move(entries)) {
  if (entries_.empty()) throw ValidationError("h-vector is empty");
  if (entries_[0] != 1) throw ValidationError("h_0 must be 1, got " + entries_[0].str());
  for (std::size_t i = 0; i < entries_.size(); ++i)
    if (entries_[i] < 0)
      throw ValidationError("h_" + std::to_string(i) + " = " + entries_[i].str() +
                            " is negative; input is not polytopal");
}

GVector::GVector(IntVector entries) : entries_(std::move(entries)) {
  if (entries_.empty()) throw ValidationError("g-vector is empty");
  for (std::size_t i = 0; i < entries_.size(); ++i)
    if (entries_[i] <= 0)
      throw ValidationError("g_" + std::to_string(i) + " = " + entries_[i].str() +
                            " is not positive (g-vectors are stored without trailing zeros)");
  auto check = is_o_sequence(entries_);
  if (!check) throw ValidationError("g-vector is not an O-sequence: " + check.reason);
}

Integer GVector::at(long j) const {
  if (j < 0 || j > u()) return 0;
  return entries_[static_cast<std::size_t>(j)];
}

const Integer& GVector::g1() const {
  static const Integer zero = 0;
  return entries_.size() > 1 ? entries_[1] : zero;
}

OSequence::OSequence(IntVector entries, bool maximal_growth_tail)
    : entries_(std::move(entries)), maximal_growth_tail_(maximal_growth_tail) {
  auto check = is_o_sequence(entries_);
  if (!check) throw ValidationError("not an O-sequence: " + check.reason);
  if (maximal_growth_tail_ && entries_.size() < 2)
    throw ValidationError("a maximal-growth tail needs h(1) to be given");
}

Integer OSequence::operator()(long j) const {
  if (j < 0) return 0;
  const long last = static_cast<long>(entries_.size()) - 1;
  if (j <= last) return entries_[static_cast<std::size_t>(j)];
  if (!maximal_growth_tail_) return 0;
  Integer value = entries_.back();
  for (long k = last; k < j; ++k) value = macaulay_upper(value, k);
  return value;
}

long OSequence::last_degree() const {
  long last = static_cast<long>(entries_.size()) - 1;
  if (maximal_growth_tail_) return last;
  while (last > 0 && entries_[static_cast<std::size_t>(last)] == 0) --last;
  return last;
}

IntVector f_to_h_coefficients(std::span<const Integer> f, long d) {
  if (f.size() != static_cast<std::size_t>(d + 1))
    throw ValidationError("expected " + std::to_string(d + 1) + " f-entries, got " + std::to_string(f.size()));
  IntVector h(f.size(), 0);
  // coefficient of z^k in z^j (1-z)^{d-j} is (-1)^{k-j} C(d-j, k-j)
  for (long k = 0; k <= d; ++k)
    for (long j = 0; j <= k; ++j) {
      Integer term = f[j] * binom(d - j, k - j);
      if ((k - j) % 2) h[k] -= term;
      else h[k] += term;
    }
  return h;
}

IntVector h_to_f_coefficients(std::span<const Integer> h, long d) {
  if (h.size() != static_cast<std::size_t>(d + 1))
    throw ValidationError("expected " + std::to_string(d + 1) + " h-entries, got " + std::to_string(h.size()));
  IntVector f(h.size(), 0);
  for (long j = 0; j <= d; ++j)
    for (long i = 0; i <= j; ++i) f[j] += binom(d - i, j - i) * h[i];
  return f;
}

HVector f_to_h(const FVector& f) {
  IntVector h = f_to_h_coefficients(f.entries(), f.d());
  for (std::size_t i = 0; i < h.size(); ++i)
    if (h[i] < 0)
      throw ValidationError("h_" + std::to_string(i) + " = " + h[i].str() +
                            " is negative; f-vector is not that of a simplicial polytope");
  return HVector(std::move(h));
}

FVector h_to_f(const HVector& h, long d) {
  if (h.d() != d)
    throw ValidationError("h-vector of a " + std::to_string(d) + "-polytope needs " + std::to_string(d + 1) +
                          " entries, got " + std::to_string(h.entries().size()));
  return FVector(d, h_to_f_coefficients(h.entries(), d));
}

GVector h_to_g(const HVector& h) {
  auto check = is_si_sequence(h.entries());
  if (!check) throw ValidationError("not an SI-sequence: " + check.reason);
  const long half = h.d() / 2;
  long u = 0;
  for (long i = 1; i <= half; ++i)
    if (h[i] > h[i - 1]) u = i;
  IntVector g{1};
  for (long i = 1; i <= u; ++i) g.push_back(h[i] - h[i - 1]);
  return GVector(std::move(g));
}

HVector g_to_h(const GVector& g, long d) {
  if (2 * g.u() > d)
    throw ValidationError("dimension too small: g-vector with u = " + std::to_string(g.u()) +
                          " needs d >= 2u = " + std::to_string(2 * g.u()) + ", got d = " + std::to_string(d));
  IntVector h(static_cast<std::size_t>(d + 1), 0);
  Integer partial = 0;
  for (long i = 0; i <= d / 2; ++i) {
    partial += g.at(i);
    h[i] = partial;
    h[d - i] = partial;
  }
  return HVector(std::move(h));
}

}  // namespace esb
