#include "dkit/properties.hpp"

#include <algorithm>
#include <functional>
#include <map>
#include <numeric>
#include <sstream>

#include "dkit/error.hpp"
#include "dkit/random.hpp"
#include "dkit/transforms.hpp"
#include "dkit/verify.hpp"

namespace dkit::properties {

namespace {

using random::Rng;
using random::uniform;

struct Case {
  bool exercised = true;
  std::optional<std::string> failure;
};

using Law = std::function<Case(Rng&)>;

std::string show(std::initializer_list<std::pair<const char*, const MonomialIdeal*>> items) {
  std::ostringstream os;
  bool first = true;
  for (auto [name, I] : items) {
    os << (first ? "" : ", ") << name << " = " << I->to_string();
    first = false;
  }
  return os.str();
}

Case fail(std::string why) { return Case{true, std::move(why)}; }
Case skip() { return Case{false, std::nullopt}; }
Case pass() { return Case{}; }

// --- brute-force membership ------------------------------------------------

void all_monomials(std::size_t n, unsigned max_degree, ExponentVector& cur, std::vector<ExponentVector>& out) {
  if (cur.size() == n) {
    out.push_back(cur);
    return;
  }
  unsigned used = static_cast<unsigned>(exps::degree(cur));
  for (unsigned e = 0; e + used <= max_degree; ++e) {
    cur.push_back(e);
    all_monomials(n, max_degree, cur, out);
    cur.pop_back();
  }
}

bool member(const MonomialIdeal& I, const ExponentVector& u) {
  return std::any_of(I.exponents().begin(), I.exponents().end(),
                     [&](const ExponentVector& g) { return exps::divides(g, u); });
}

// u ∈ I^k: some generator divides u and the quotient lies in I^{k-1}.
bool member_power(const MonomialIdeal& I, const ExponentVector& u, unsigned k) {
  if (k == 0) return true;
  for (const auto& g : I.exponents()) {
    if (!exps::divides(g, u)) continue;
    ExponentVector q(u.size());
    for (std::size_t i = 0; i < u.size(); ++i) q[i] = u[i] - g[i];
    if (member_power(I, q, k - 1)) return true;
  }
  return false;
}

bool member_product(const MonomialIdeal& I, const MonomialIdeal& J, const ExponentVector& u) {
  for (const auto& g : I.exponents()) {
    if (!exps::divides(g, u)) continue;
    ExponentVector q(u.size());
    for (std::size_t i = 0; i < u.size(); ++i) q[i] = u[i] - g[i];
    if (member(J, q)) return true;
  }
  return false;
}

bool member_colon(const MonomialIdeal& I, const MonomialIdeal& J, const ExponentVector& u) {
  return std::all_of(J.exponents().begin(), J.exponents().end(), [&](const ExponentVector& g) {
    ExponentVector p(u.size());
    for (std::size_t i = 0; i < u.size(); ++i) p[i] = u[i] + g[i];
    return member(I, p);
  });
}

Case law_oracle(Rng& rng) {
  auto n = uniform(rng, 1, 4);
  auto R = RingContext::with_vars(n);
  auto I = random::ideal(rng, R, 3, 3);
  auto J = random::ideal(rng, R, 3, 3);
  const unsigned k = static_cast<unsigned>(uniform(rng, 0, 3));
  std::vector<ExponentVector> mons;
  ExponentVector cur;
  all_monomials(n, 9, cur, mons);

  auto sum = ideal_sum(I, J), prod = ideal_product(I, J), inter = ideal_intersection(I, J);
  auto colon = ideal_colon(I, J), pow = ideal_power(I, k);
  for (const auto& u : mons) {
    auto where = [&](const char* op) {
      return fail(std::string(op) + " disagrees at " + format_monomial(R, u) + " for " + show({{"I", &I}, {"J", &J}}));
    };
    if (member(sum, u) != (member(I, u) || member(J, u))) return where("sum");
    if (member(prod, u) != member_product(I, J, u)) return where("product");
    if (member(inter, u) != (member(I, u) && member(J, u))) return where("intersection");
    if (member(colon, u) != member_colon(I, J, u)) return where("colon");
    if (member(pow, u) != member_power(I, u, k)) return where("power");
  }
  return pass();
}

// --- ideal-core laws -------------------------------------------------------

Case law_distributivity(Rng& rng) {
  auto R = RingContext::with_vars(uniform(rng, 1, 5));
  auto I = random::ideal(rng, R, 4, 4), J = random::ideal(rng, R, 4, 4), L = random::ideal(rng, R, 4, 4);
  if (!(ideal_intersection(I, ideal_sum(J, L)) == ideal_sum(ideal_intersection(I, J), ideal_intersection(I, L))))
    return fail("I∩(J+L) ≠ (I∩J)+(I∩L) for " + show({{"I", &I}, {"J", &J}, {"L", &L}}));
  if (!(ideal_sum(I, ideal_intersection(J, L)) == ideal_intersection(ideal_sum(I, J), ideal_sum(I, L))))
    return fail("I+(J∩L) ≠ (I+J)∩(I+L) for " + show({{"I", &I}, {"J", &J}, {"L", &L}}));
  return pass();
}

Case law_scaling(Rng& rng) {
  auto R = RingContext::with_vars(uniform(rng, 1, 5));
  auto f = random::monomial(rng, R, 0, 4);
  std::vector<MonomialIdeal> parts, scaled;
  for (std::size_t i = 0, k = uniform(rng, 1, 3); i < k; ++i) {
    parts.push_back(random::ideal(rng, R, 4, 4));
    scaled.push_back(multiply_by_monomial(f, parts.back()));
  }
  auto lhs = multiply_by_monomial(f, ideal_intersection(parts));
  if (!(lhs == ideal_intersection(scaled)))
    return fail("f(∩J_i) ≠ ∩(fJ_i) for f = " + f.to_string() + ", J_1 = " + parts[0].to_string());
  return pass();
}

Case law_symbolic_intersection(Rng& rng) {
  auto R = RingContext::with_vars(uniform(rng, 2, 5));
  auto I = random::ideal(rng, R, 4, 3, true), J = random::ideal(rng, R, 4, 3, true);
  auto k = uniform(rng, 1, 3);
  auto lhs = symbolic_power(ideal_intersection(I, J), k);
  if (!(lhs == ideal_intersection(symbolic_power(I, k), symbolic_power(J, k))))
    return fail("(I∩J)^(k) ≠ I^(k)∩J^(k) at k = " + std::to_string(k) + " for " + show({{"I", &I}, {"J", &J}}));
  return pass();
}

Case law_decomposition(Rng& rng) {
  auto R = RingContext::with_vars(uniform(rng, 1, 5));
  const bool sf = uniform(rng, 0, 1);
  auto I = random::ideal(rng, R, 4, 4, sf);
  auto d = irreducible_decomposition(I);
  if (!(d.intersection() == I)) return fail("components do not intersect to I = " + I.to_string());
  for (std::size_t i = 0; d.components.size() > 1 && i < d.components.size(); ++i) {
    std::vector<MonomialIdeal> rest;
    for (std::size_t j = 0; j < d.components.size(); ++j)
      if (j != i) rest.push_back(d.components[j].ideal());
    if (ideal_intersection(rest) == I) return fail("redundant component in decomposition of " + I.to_string());
  }
  if (sf) {
    if (associated_primes(I) != minimal_primes(I)) return fail("Ass ≠ Min for square-free " + I.to_string());
    for (unsigned k = 1; k <= 4; ++k)
      if (!symbolic_power(I, k).contains(ideal_power(I, k)))
        return fail("I^k ⊄ I^(k) at k = " + std::to_string(k) + " for " + I.to_string());
  }
  return pass();
}

// --- demotion laws ---------------------------------------------------------

Case law_self_demotion(Rng& rng) {
  auto R = RingContext::with_vars(uniform(rng, 1, 4));
  auto I = random::ideal(rng, R, 3, 3);
  if (!check_demotion(I, I, 3, 3).certified()) return fail("I is not a demotion of itself: " + I.to_string());
  return pass();
}

Case law_prime_in_prime(Rng& rng) {
  auto R = RingContext::with_vars(uniform(rng, 1, 5));
  auto p = random::prime(rng, R);
  std::vector<std::size_t> sub;
  for (auto i : p.vars())
    if (uniform(rng, 0, 1)) sub.push_back(i);
  if (sub.empty()) sub.push_back(p.vars()[uniform(rng, 0, p.size() - 1)]);
  PrimeSupport q(R, sub);
  auto c = demote_prime_in_prime(p, q);
  if (!check_demotion(p.ideal(), q.ideal(), 3, 3).certified())
    return fail("q = " + q.to_string() + " not a bounded demotion of p = " + p.to_string());
  if (c.certificate->self_check != true) return fail("self-check failed for " + p.to_string());
  return pass();
}

Case law_frobenius(Rng& rng) {
  unsigned m = static_cast<unsigned>(uniform(rng, 2, 3));
  auto R = RingContext::with_vars(uniform(rng, m, 4));
  auto c = demote_frobenius_of_prime(R, m);
  if (!c.certificate->proper) return fail("m > 1 not marked proper");
  if (!check_demotion(c.ideal, c.demotion, 2, 2).certified())
    return fail("Frobenius pair fails at (2,2) for m = " + std::to_string(m));
  return pass();
}

Case law_bounded_sum_split(Rng& rng) {
  std::vector<std::uint64_t> f(uniform(rng, 0, 5));
  for (auto& v : f) v = uniform(rng, 0, 4);
  auto total = std::accumulate(f.begin(), f.end(), std::uint64_t{0});
  auto t = uniform(rng, 0, total);
  auto c = bounded_sum_split(f, t);
  if (c.size() != f.size()) return fail("length changed");
  for (std::size_t i = 0; i < f.size(); ++i)
    if (c[i] > f[i]) return fail("c_i > f_i");
  if (std::accumulate(c.begin(), c.end(), std::uint64_t{0}) != t) return fail("sum(c) ≠ t");
  return pass();
}

// A certified pair (I, J) with both ideals on the first three variables of R.
struct Pair {
  MonomialIdeal I, J;
  DemotionCertificate cert;
};

Pair random_pair(Rng& rng, const RingContext& R) {
  switch (uniform(rng, 0, 3)) {
    case 0: {
      auto p = random::prime(rng, R, 3);
      std::vector<std::size_t> sub{p.vars().front()};
      for (auto i : p.vars())
        if (uniform(rng, 0, 1)) sub.push_back(i);
      auto c = demote_prime_in_prime(p, PrimeSupport(R, sub));
      return {c.ideal, c.demotion, *c.certificate};
    }
    case 1: {
      auto m = random::monomial(rng, R, 1, 2, false, 3);
      kernels::Generators us;
      for (std::size_t i = 0, k = uniform(rng, 1, 3); i < k; ++i) {
        auto u = random::monomial(rng, R, 0, 2, false, 3);
        us.push_back((m * u).exponents());
      }
      auto c = principal_demotion_check(m, MonomialIdeal(R, us));
      return {c.ideal, c.demotion, *c.certificate};
    }
    default: {
      auto I = random::ideal(rng, R, 3, 2, uniform(rng, 0, 1), 3);
      auto J = ideal_intersection(I, random::prime(rng, R, 3).ideal());
      return {I, J, check_demotion(I, J, 3, 3)};
    }
  }
}

Case law_power_closure(Rng& rng) {
  auto R = RingContext::with_vars(uniform(rng, 2, 4));
  auto pair = random_pair(rng, R);
  if (!check_demotion(pair.I, pair.J, 3, 3).certified()) return skip();
  for (unsigned k = 2; k <= 3; ++k) {
    unsigned b = std::max(3u / k, 1u);
    if (!check_demotion(ideal_power(pair.I, k), ideal_power(pair.J, k), b, b).certified())
      return fail("J^" + std::to_string(k) + " not a demotion of I^" + std::to_string(k) + " for " +
                  show({{"I", &pair.I}, {"J", &pair.J}}));
  }
  return pass();
}

Case law_transport(Rng& rng) {
  auto R = RingContext::with_vars(5);
  auto pair = random_pair(rng, R);
  const auto& I = pair.I;
  const auto& J = pair.J;
  const bool holds = check_demotion(I, J, 3, 3).certified();
  const std::string ctx = show({{"I", &I}, {"J", &J}});

  std::vector<std::pair<std::string, TransportedPair>> images;
  images.emplace_back("multiple", transport_multiple(I, J, pair.cert,
                                                        Monomial::variable(R, 3, static_cast<Exponent>(uniform(rng, 1, 2))) *
                                                            Monomial::variable(R, 4, static_cast<Exponent>(uniform(rng, 0, 2)))));
  {
    std::vector<std::size_t> mult(5, 1);
    for (auto i : I.support()) mult[i] = uniform(rng, 1, 2);
    images.emplace_back("expand", transport_expand(I, J, pair.cert, ExpansionSpec{mult}));
  }
  {
    WeightSpec w{std::vector<Exponent>(5, 1)};
    for (auto& x : w.weights) x = static_cast<Exponent>(uniform(rng, 1, 3));
    images.emplace_back("weight", transport_weight(I, J, pair.cert, w));
  }
  if (I.is_squarefree() && J.is_squarefree()) {
    auto supp = I.support();
    auto image = supp;
    std::shuffle(image.begin(), image.end(), rng);
    std::vector<std::pair<std::size_t, std::size_t>> m;
    for (std::size_t i = 0; i < supp.size(); ++i) m.emplace_back(supp[i], image[i]);
    images.emplace_back("permute", transport_permute(I, J, pair.cert, Permutation(m)));
  }

  if (holds) {
    // One-way transforms only matter for certified pairs.
    auto mins = minimal_primes(I);
    std::vector<std::size_t> pv = mins[uniform(rng, 0, mins.size() - 1)].vars();
    for (std::size_t i = 0; i < 5; ++i)
      if (uniform(rng, 0, 3) == 0) pv.push_back(i);
    images.emplace_back("localize", transport_localize(I, J, pair.cert, PrimeSupport(R, pv)));
    images.emplace_back("contract", transport_contract(I, J, pair.cert, uniform(rng, 0, 4)));
    images.emplace_back("delete", transport_delete(I, J, pair.cert, uniform(rng, 0, 4)));
    auto c2 = demote_prime_in_prime(PrimeSupport(R, {3, 4}), PrimeSupport(R, {uniform(rng, 3, 4)}));
    images.emplace_back("sum", sum_disjoint(I, J, pair.cert, c2.ideal, c2.demotion, *c2.certificate));
  }

  for (const auto& [name, t] : images) {
    if (!t.certificate) return fail(name + ": transport gave no conclusion (" + t.note + ") for " + ctx);
    auto again = check_demotion(t.ideal, t.demotion, 3, 3);
    if (holds) {
      if (!t.certificate->certified() || !again.certified())
        return fail(name + " lost certification for " + ctx);
    } else {
      if (t.certificate->certified() || again.certified()) return fail(name + " lost the refutation for " + ctx);
      const auto& w = *t.certificate->witness;
      if (!is_demotion_witness(t.ideal, t.demotion, w.r, w.s, w.monomial))
        return fail(name + ": mapped witness " + w.monomial.to_string() + " does not re-verify for " + ctx);
    }
  }
  return pass();
}

Case law_transform_laws(Rng& rng) {
  auto R = RingContext::with_vars(uniform(rng, 2, 4));
  auto I = random::ideal(rng, R, 3, 3), J = random::ideal(rng, R, 3, 3);
  const std::string ctx = show({{"I", &I}, {"J", &J}});

  auto check4 = [&](const char* name, auto f) -> std::optional<std::string> {
    if (!(f(ideal_sum(I, J)) == ideal_sum(f(I), f(J)))) return std::string(name) + ": sum law fails for " + ctx;
    if (!(f(ideal_product(I, J)) == ideal_product(f(I), f(J))))
      return std::string(name) + ": product law fails for " + ctx;
    if (!(f(ideal_intersection(I, J)) == ideal_intersection(f(I), f(J))))
      return std::string(name) + ": intersection law fails for " + ctx;
    return std::nullopt;
  };
  auto p = random::prime(rng, R);
  auto loc = [&](const MonomialIdeal& X) { return localize(X, p); };
  if (auto e = check4("localize", loc)) return fail(*e);
  if (!(loc(ideal_colon(I, J)) == ideal_colon(loc(I), loc(J)))) return fail("localize: colon law fails for " + ctx);

  auto j = uniform(rng, 0, R.num_vars() - 1);
  auto del = [&](const MonomialIdeal& X) { return delete_variable(X, j); };
  if (auto e = check4("delete", del)) return fail(*e);
  if (!(radical(del(I)) == del(radical(I)))) return fail("delete: radical law fails for " + ctx);

  ExpansionSpec spec{std::vector<std::size_t>(R.num_vars())};
  for (auto& m : spec.multiplicities) m = uniform(rng, 1, 2);
  auto ex = [&](const MonomialIdeal& X) { return expand(X, spec); };
  if (auto e = check4("expand", ex)) return fail(*e);
  if (!(ex(ideal_colon(I, J)) == ideal_colon(ex(I), ex(J)))) return fail("expand: colon law fails for " + ctx);
  if (!(radical(ex(I)) == ex(radical(I)))) return fail("expand: radical law fails for " + ctx);

  WeightSpec w{std::vector<Exponent>(R.num_vars())};
  for (auto& x : w.weights) x = static_cast<Exponent>(uniform(rng, 1, 3));
  auto wt = [&](const MonomialIdeal& X) { return weight(X, w); };
  if (auto e = check4("weight", wt)) return fail(*e);
  if (!(wt(ideal_colon(I, J)) == ideal_colon(wt(I), wt(J)))) return fail("weight: colon law fails for " + ctx);
  return pass();
}

Case law_reduction_radical(Rng& rng) {
  auto R = RingContext::with_vars(uniform(rng, 1, 3));
  auto I = random::ideal(rng, R, 4, 3);
  // J: a random subset of G(I), plus a few multiples, so that reductions occur.
  kernels::Generators gens;
  for (const auto& g : I.exponents())
    if (uniform(rng, 0, 2)) gens.push_back(g);
  if (gens.empty()) gens.push_back(I.exponents().back());
  MonomialIdeal J(R, gens);
  auto c = check_reduction(J, I, 4);
  if (c.verdict != ReductionVerdict::Reduction) return skip();
  if (!(radical(I) == radical(J)) || minimal_primes(I) != minimal_primes(J) || height(I) != height(J))
    return fail("reduction with different radicals: " + show({{"I", &I}, {"J", &J}}));
  return pass();
}

Case law_one_variable(Rng&) {
  auto R = RingContext::with_vars(1);
  for (Exponent a = 1; a <= 6; ++a)
    for (Exponent b = a + 1; b <= 6; ++b) {
      MonomialIdeal I(R, {{a}}), J(R, {{b}});
      if (check_demotion(I, J, 2, 2).certified())
        return fail("proper demotion in one variable: " + show({{"I", &I}, {"J", &J}}));
    }
  return pass();
}

const std::vector<std::pair<std::string, Law>>& table() {
  static const std::vector<std::pair<std::string, Law>> t{
      {"distributivity", law_distributivity},
      {"scaling", law_scaling},
      {"symbolic_intersection", law_symbolic_intersection},
      {"oracle", law_oracle},
      {"decomposition", law_decomposition},
      {"self_demotion", law_self_demotion},
      {"prime_in_prime", law_prime_in_prime},
      {"frobenius", law_frobenius},
      {"bounded_sum_split", law_bounded_sum_split},
      {"power_closure", law_power_closure},
      {"transport", law_transport},
      {"transform_laws", law_transform_laws},
      {"reduction_radical", law_reduction_radical},
      {"one_variable", law_one_variable},
  };
  return t;
}

}  // namespace

const std::vector<std::string>& laws() {
  static const std::vector<std::string> names = [] {
    std::vector<std::string> v;
    for (const auto& [n, f] : table()) v.push_back(n);
    return v;
  }();
  return names;
}

PropertyResult run(const std::string& law, std::size_t cases, std::uint64_t seed) {
  auto it = std::find_if(table().begin(), table().end(), [&](const auto& e) { return e.first == law; });
  if (it == table().end()) throw PreconditionError("unknown property law '" + law + "'");
  // Each law gets its own stream so that adding a law does not shift others.
  Rng rng(seed ^ std::hash<std::string>{}(law));
  PropertyResult res{law, 0, 0, 0, std::nullopt};
  for (std::size_t i = 0; i < cases; ++i) {
    auto c = it->second(rng);
    ++res.cases;
    if (c.exercised) ++res.exercised;
    if (c.failure) {
      ++res.failures;
      if (!res.counterexample) res.counterexample = *c.failure;
    }
  }
  return res;
}

}  // namespace dkit::properties
