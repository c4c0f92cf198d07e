#pragma once
// Test helpers: literal ideals, and brute-force oracles that decide
// membership straight from the definitions, without the library's
// generator arithmetic.

#include <algorithm>
#include <cstdint>
#include <functional>
#include <initializer_list>
#include <set>
#include <sstream>
#include <string>
#include <vector>

#include "dkit/decomposition.hpp"
#include "dkit/error.hpp"
#include "dkit/ideal.hpp"
#include "dkit/monomial.hpp"
#include "dkit/ring.hpp"

namespace testing_support {

using dkit::Exponent;
using dkit::ExponentVector;
using dkit::Monomial;
using dkit::MonomialIdeal;
using dkit::PrimeSupport;
using dkit::RingContext;

/// "x1^2*x3" or "1".
inline ExponentVector exps(const RingContext& R, const std::string& text) {
  ExponentVector e(R.num_vars(), 0);
  if (text == "1") return e;
  std::stringstream ss(text);
  std::string factor;
  while (std::getline(ss, factor, '*')) {
    auto caret = factor.find('^');
    auto name = factor.substr(0, caret);
    Exponent k = caret == std::string::npos ? 1 : static_cast<Exponent>(std::stoul(factor.substr(caret + 1)));
    auto i = R.index_of(name);
    if (!i) throw std::invalid_argument("no variable " + name);
    e[*i] += k;
  }
  return e;
}

inline Monomial mono(const RingContext& R, const std::string& text) { return Monomial(R, exps(R, text)); }

inline MonomialIdeal ideal(const RingContext& R, std::initializer_list<std::string> gens) {
  dkit::kernels::Generators g;
  for (const auto& s : gens) g.push_back(exps(R, s));
  return MonomialIdeal(R, std::move(g));
}

inline PrimeSupport prime(const RingContext& R, std::initializer_list<std::string> names) {
  std::vector<std::size_t> v;
  for (const auto& s : names) v.push_back(*R.index_of(s));
  return PrimeSupport(R, v);
}

inline std::vector<std::string> strings(const MonomialIdeal& I) {
  std::vector<std::string> out;
  for (const auto& g : I.generators()) out.push_back(g.to_string());
  return out;
}

// ---------------------------------------------------------------------------
// Membership oracles. A "set" is a predicate on exponent vectors.
// ---------------------------------------------------------------------------

using Member = std::function<bool(const ExponentVector&)>;

inline bool divides(const ExponentVector& a, const ExponentVector& b) {
  for (std::size_t i = 0; i < a.size(); ++i)
    if (a[i] > b[i]) return false;
  return true;
}

/// u ∈ (gens) iff some listed generator divides u; the list need not be minimal.
inline Member generated_by(const std::vector<ExponentVector>& gens) {
  return [gens](const ExponentVector& u) {
    return std::any_of(gens.begin(), gens.end(), [&](const ExponentVector& g) { return divides(g, u); });
  };
}

inline Member member(const MonomialIdeal& I) { return generated_by(I.exponents()); }

/// Every divisor of u.
inline void for_each_divisor(const ExponentVector& u, const std::function<void(const ExponentVector&)>& f) {
  ExponentVector d(u.size(), 0);
  while (true) {
    f(d);
    std::size_t i = 0;
    while (i < u.size() && d[i] == u[i]) d[i++] = 0;
    if (i == u.size()) return;
    ++d[i];
  }
}

/// u ∈ AB iff u = a·b with a ∈ A, b ∈ B; for monomial ideals it suffices to
/// search divisors a of u.
inline Member product(Member a, Member b) {
  return [a, b](const ExponentVector& u) {
    bool found = false;
    for_each_divisor(u, [&](const ExponentVector& d) {
      if (found || !a(d)) return;
      ExponentVector rest(u.size());
      for (std::size_t i = 0; i < u.size(); ++i) rest[i] = u[i] - d[i];
      if (b(rest)) found = true;
    });
    return found;
  };
}

inline Member power(const Member& a, unsigned k, std::size_t n) {
  if (k == 0) return [](const ExponentVector&) { return true; };
  Member p = a;
  for (unsigned i = 1; i < k; ++i) p = product(p, a);
  (void)n;
  return p;
}

/// All exponent vectors of total degree ≤ d in n variables.
inline std::vector<ExponentVector> monomials_up_to(std::size_t n, unsigned d) {
  std::vector<ExponentVector> out;
  ExponentVector e(n, 0);
  std::function<void(std::size_t, unsigned)> rec = [&](std::size_t i, unsigned left) {
    if (i == n) {
      out.push_back(e);
      return;
    }
    for (unsigned k = 0; k <= left; ++k) {
      e[i] = k;
      rec(i + 1, left - k);
    }
    e[i] = 0;
  };
  rec(0, d);
  return out;
}

/// The ideal agrees with the oracle on every monomial of degree ≤ d.
inline bool agrees(const MonomialIdeal& I, const Member& oracle, unsigned d) {
  const auto in = member(I);
  for (const auto& u : monomials_up_to(I.ring().num_vars(), d))
    if (in(u) != oracle(u)) return false;
  return true;
}

/// Minimal vertex covers of the generators' supports, by subset enumeration.
inline std::vector<std::vector<std::size_t>> minimal_covers(const MonomialIdeal& I) {
  const std::size_t n = I.ring().num_vars();
  std::vector<std::uint32_t> covers;
  for (std::uint32_t s = 1; s < (1u << n); ++s) {
    bool ok = true;
    for (const auto& g : I.exponents()) {
      bool hit = false;
      for (std::size_t i = 0; i < n; ++i)
        if (g[i] && (s >> i & 1)) hit = true;
      if (!hit) ok = false;
    }
    if (ok) covers.push_back(s);
  }
  std::vector<std::vector<std::size_t>> out;
  for (auto s : covers) {
    bool minimal = std::none_of(covers.begin(), covers.end(), [&](std::uint32_t t) { return t != s && (t & s) == t; });
    if (!minimal) continue;
    std::vector<std::size_t> v;
    for (std::size_t i = 0; i < n; ++i)
      if (s >> i & 1) v.push_back(i);
    out.push_back(v);
  }
  return out;
}

/// Ass(R/I) from the definition: p ∈ Ass iff p = I : u for a monomial u. The
/// search box is [0, max exponent of x_i in G(I)] per variable, which holds
/// every standard witness.
inline std::set<std::vector<std::size_t>> associated_by_colon(const MonomialIdeal& I) {
  const std::size_t n = I.ring().num_vars();
  ExponentVector top(n, 0);
  for (const auto& g : I.exponents())
    for (std::size_t i = 0; i < n; ++i) top[i] = std::max(top[i], g[i]);
  const auto in = member(I);
  std::set<std::vector<std::size_t>> out;
  for_each_divisor(top, [&](const ExponentVector& u) {
    if (in(u)) return;
    std::vector<std::size_t> p;
    for (std::size_t i = 0; i < n; ++i) {
      auto v = u;
      ++v[i];
      if (in(v)) p.push_back(i);
    }
    if (p.empty()) return;
    // I : u ⊆ p iff no monomial supported off p moves u into I; the largest
    // such monomial that matters is (∏_{j ∉ p} x_j)^(top_j + 1).
    auto v = u;
    for (std::size_t j = 0; j < n; ++j)
      if (!std::binary_search(p.begin(), p.end(), j)) v[j] += top[j] + 1;
    if (!in(v)) out.insert(p);
  });
  return out;
}

inline std::set<std::vector<std::size_t>> var_sets(const std::vector<PrimeSupport>& ps) {
  std::set<std::vector<std::size_t>> out;
  for (const auto& p : ps) out.insert(p.vars());
  return out;
}

}  // namespace testing_support
