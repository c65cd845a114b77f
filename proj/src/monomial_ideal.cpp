#include <esb/monomial_ideal.hpp>

#include <esb/binomial.hpp>
#include <esb/errors.hpp>

#include <algorithm>
#include <functional>
#include <numeric>
#include <set>
#include <stdexcept>

namespace esb {
namespace {

bool degree_lex_before(const Monomial& a, const Monomial& b) {
  const int da = degree(a), db = degree(b);
  return da != db ? da < db : a > b;
}

}  // namespace

int degree(const Monomial& m) { return std::accumulate(m.begin(), m.end(), 0); }

int max_index(const Monomial& m) {
  for (int k = static_cast<int>(m.size()); k >= 1; --k)
    if (m[k - 1] > 0) return k;
  return 0;
}

bool divides(const Monomial& a, const Monomial& b) {
  for (std::size_t i = 0; i < a.size(); ++i)
    if (a[i] > b[i]) return false;
  return true;
}

std::vector<Monomial> monomials_of_degree(int n, int deg) {
  std::vector<Monomial> out;
  if (n < 1 || deg < 0) return out;
  Monomial current(static_cast<std::size_t>(n), 0);
  // exponent of x_1 descending first gives lex-descending order
  std::function<void(int, int)> fill = [&](int var, int left) {
    if (var == n - 1) {
      current[var] = left;
      out.push_back(current);
      return;
    }
    for (int e = left; e >= 0; --e) {
      current[var] = e;
      fill(var + 1, left - e);
    }
  };
  fill(0, deg);
  return out;
}

MonomialIdeal::MonomialIdeal(int n_vars, std::vector<Monomial> generators) : n_vars_(n_vars) {
  if (n_vars < 1) throw ValidationError("a monomial ideal needs at least one variable");
  for (const auto& g : generators) {
    if (g.size() != static_cast<std::size_t>(n_vars))
      throw ValidationError("exponent vector of length " + std::to_string(g.size()) + " in " +
                            std::to_string(n_vars) + " variables");
    if (std::any_of(g.begin(), g.end(), [](int e) { return e < 0; }))
      throw ValidationError("negative exponent in generator");
    if (degree(g) == 0) throw ValidationError("the unit ideal is not allowed");
  }
  std::sort(generators.begin(), generators.end(), degree_lex_before);
  generators.erase(std::unique(generators.begin(), generators.end()), generators.end());
  for (const auto& g : generators) {
    const bool redundant =
        std::any_of(generators_.begin(), generators_.end(), [&](const Monomial& kept) { return divides(kept, g); });
    if (!redundant) generators_.push_back(g);
  }
}

bool MonomialIdeal::contains(const Monomial& m) const {
  return std::any_of(generators_.begin(), generators_.end(), [&](const Monomial& g) { return divides(g, m); });
}

MonomialIdeal lex_segment_ideal(const OSequence& h, int n, std::size_t generator_limit) {
  if (n < 1) throw ValidationError("need at least one variable");
  if (h(1) > n)
    throw ValidationError("too few variables: h(1) = " + h(1).str() + " exceeds n = " + std::to_string(n));
  std::vector<Monomial> generators;
  std::set<Monomial> previous;  // I_{D-1}
  const long top = h.last_degree() + 1;
  for (long deg = 1; deg <= top; ++deg) {
    auto monomials = monomials_of_degree(n, static_cast<int>(deg));
    const Integer in_ideal = Integer(monomials.size()) - h(deg);
    if (in_ideal < 0) throw ValidationError("h(" + std::to_string(deg) + ") exceeds the number of monomials");
    monomials.resize(in_ideal.convert_to<std::size_t>());
    std::set<Monomial> current(monomials.begin(), monomials.end());
    for (const auto& m : monomials) {
      bool minimal = true;
      for (int k = 0; k < n && minimal; ++k) {
        if (m[k] == 0) continue;
        Monomial below = m;
        --below[k];
        minimal = previous.count(below) == 0;
      }
      if (minimal) {
        generators.push_back(m);
        if (generators.size() > generator_limit)
          throw SizeLimitError("lex-segment ideal has more than " + std::to_string(generator_limit) + " generators");
      }
    }
    // x_k * I_{D-1} must lie in the lex segment of degree D
    for (const auto& m : previous)
      for (int k = 0; k < n; ++k) {
        Monomial up = m;
        ++up[k];
        if (!current.count(up)) throw std::logic_error("lex segments do not form an ideal");
      }
    previous = std::move(current);
  }
  return MonomialIdeal(n, std::move(generators));
}

bool is_stable(const MonomialIdeal& ideal) {
  for (const auto& g : ideal.generators()) {
    const int top = max_index(g);
    for (int i = 1; i < top; ++i) {
      Monomial moved = g;
      --moved[top - 1];
      ++moved[i - 1];
      if (!ideal.contains(moved)) return false;
    }
  }
  return true;
}

BettiTable eliahou_kervaire_betti(const MonomialIdeal& ideal) {
  if (!is_stable(ideal)) throw ValidationError("Eliahou-Kervaire resolution needs a stable ideal");
  BettiTable table(ideal.n_vars());
  table.add(0, 0, 1);
  for (const auto& g : ideal.generators()) {
    const int top = max_index(g);
    const long deg = degree(g);
    for (long i = 0; i < top; ++i) table.add(i + 1, i + deg, binom(top - 1, i));
  }
  return table;
}

}  // namespace esb
