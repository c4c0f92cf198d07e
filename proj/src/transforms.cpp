#include "dkit/transforms.hpp"

#include <algorithm>
#include <set>

#include "dkit/error.hpp"

namespace dkit {

RingContext ExpansionSpec::target(const RingContext& base) const {
  if (multiplicities.size() != base.num_vars())
    throw PreconditionError("expansion: spec length " + std::to_string(multiplicities.size()) +
                            " does not match " + std::to_string(base.num_vars()) + " variables");
  std::vector<std::string> names;
  for (std::size_t j = 0; j < multiplicities.size(); ++j) {
    if (multiplicities[j] == 0) throw PreconditionError("expansion: multiplicities must be positive");
    for (std::size_t k = 1; k <= multiplicities[j]; ++k) names.push_back(base.name(j) + "_" + std::to_string(k));
  }
  return RingContext(std::move(names));
}

std::size_t ExpansionSpec::first_clone(std::size_t j) const {
  std::size_t idx = 0;
  for (std::size_t i = 0; i < j; ++i) idx += multiplicities.at(i);
  return idx;
}

Permutation::Permutation(std::vector<std::pair<std::size_t, std::size_t>> mapping) : mapping_(std::move(mapping)) {
  std::sort(mapping_.begin(), mapping_.end());
  std::vector<std::size_t> src, dst;
  for (auto [a, b] : mapping_) {
    src.push_back(a);
    dst.push_back(b);
  }
  std::sort(dst.begin(), dst.end());
  if (std::adjacent_find(src.begin(), src.end()) != src.end())
    throw PreconditionError("permutation: an index is mapped twice");
  if (src != dst) throw PreconditionError("permutation: not a bijection of its domain");
}

Permutation Permutation::cycle(const std::vector<std::size_t>& elements) {
  std::vector<std::pair<std::size_t, std::size_t>> m;
  for (std::size_t i = 0; i < elements.size(); ++i) m.emplace_back(elements[i], elements[(i + 1) % elements.size()]);
  return Permutation(std::move(m));
}

std::size_t Permutation::operator()(std::size_t i) const {
  auto it = std::lower_bound(mapping_.begin(), mapping_.end(), std::make_pair(i, std::size_t{0}));
  return it != mapping_.end() && it->first == i ? it->second : i;
}

std::vector<std::size_t> Permutation::domain() const {
  std::vector<std::size_t> d;
  for (auto [a, b] : mapping_)
    if (a != b) d.push_back(a);
  return d;
}

// ---------------------------------------------------------------------------

namespace {

ExponentVector pick(const ExponentVector& v, const std::vector<std::size_t>& keep) {
  ExponentVector out;
  out.reserve(keep.size());
  for (auto i : keep) out.push_back(v[i]);
  return out;
}

MonomialIdeal restrict_to(const MonomialIdeal& I, const std::vector<std::size_t>& keep) {
  auto ring = I.ring().restricted(keep);
  kernels::Generators gens;
  for (const auto& g : I.exponents()) gens.push_back(pick(g, keep));
  return MonomialIdeal(ring, std::move(gens));
}

void check_index(const RingContext& ring, std::size_t j, const char* op) {
  if (j >= ring.num_vars()) throw PreconditionError(std::string(op) + ": variable index out of range");
}

// All exponent vectors of total degree `a` over `parts` variables.
void compositions(std::size_t parts, Exponent a, ExponentVector& cur, std::vector<ExponentVector>& out) {
  if (cur.size() + 1 == parts) {
    cur.push_back(a);
    out.push_back(cur);
    cur.pop_back();
    return;
  }
  for (Exponent e = a + 1; e-- > 0;) {
    cur.push_back(e);
    compositions(parts, a - e, cur, out);
    cur.pop_back();
  }
}

}  // namespace

MonomialIdeal localize(const MonomialIdeal& I, const PrimeSupport& p) {
  require_same_ring(I.ring(), p.ring(), "localize");
  return restrict_to(I, p.vars());
}

Monomial localize(const Monomial& u, const PrimeSupport& p) {
  require_same_ring(u.ring(), p.ring(), "localize");
  return Monomial(u.ring().restricted(p.vars()), pick(u.exponents(), p.vars()));
}

MonomialIdeal contract(const MonomialIdeal& I, std::size_t j) {
  check_index(I.ring(), j, "contract");
  if (I.ring().num_vars() < 2) throw PreconditionError("contract: the ring has no other variable");
  std::vector<std::size_t> keep;
  for (std::size_t i = 0; i < I.ring().num_vars(); ++i)
    if (i != j) keep.push_back(i);
  return localize(I, PrimeSupport(I.ring(), keep));
}

MonomialIdeal delete_variable(const MonomialIdeal& I, std::size_t j) {
  check_index(I.ring(), j, "delete");
  kernels::Generators gens;
  for (const auto& g : I.exponents())
    if (g[j] == 0) gens.push_back(g);
  return make_canonical(I.ring(), std::move(gens));
}

Monomial permute(const Monomial& u, const Permutation& sigma) {
  ExponentVector v(u.ring().num_vars(), 0);
  for (std::size_t i = 0; i < v.size(); ++i) {
    auto t = sigma(i);
    if (t >= v.size()) throw PreconditionError("permute: index out of range");
    v[t] = u[i];
  }
  return Monomial(u.ring(), std::move(v));
}

MonomialIdeal permute(const MonomialIdeal& I, const Permutation& sigma) {
  if (!I.is_squarefree()) throw PreconditionError("permute: ideal is not square-free");
  auto supp = I.support();
  for (auto i : sigma.domain())
    if (!std::binary_search(supp.begin(), supp.end(), i))
      throw PreconditionError("permute: σ moves " + I.ring().name(i) + ", which is outside supp(I)");
  kernels::Generators gens;
  for (const auto& g : I.exponents()) gens.push_back(permute(Monomial(I.ring(), g), sigma).exponents());
  return MonomialIdeal(I.ring(), std::move(gens));
}

MonomialIdeal monomial_multiple(const MonomialIdeal& I, const Monomial& h) { return multiply_by_monomial(h, I); }

MonomialIdeal expand(const MonomialIdeal& I, const ExpansionSpec& spec) {
  auto target = spec.target(I.ring());
  const auto n = I.ring().num_vars();
  kernels::Generators all;
  for (const auto& g : I.exponents()) {
    kernels::Generators partial{ExponentVector{}};
    for (std::size_t j = 0; j < n; ++j) {
      std::vector<ExponentVector> parts;
      ExponentVector cur;
      compositions(spec.multiplicities[j], g[j], cur, parts);
      kernels::Generators next;
      next.reserve(partial.size() * parts.size());
      for (const auto& head : partial)
        for (const auto& tail : parts) {
          auto v = head;
          v.insert(v.end(), tail.begin(), tail.end());
          next.push_back(std::move(v));
        }
      partial = std::move(next);
    }
    all.insert(all.end(), partial.begin(), partial.end());
  }
  return MonomialIdeal(target, std::move(all));
}

Monomial expand_first_clone(const Monomial& u, const ExpansionSpec& spec) {
  auto target = spec.target(u.ring());
  ExponentVector v(target.num_vars(), 0);
  for (std::size_t j = 0; j < u.ring().num_vars(); ++j) v[spec.first_clone(j)] = u[j];
  return Monomial(target, std::move(v));
}

Monomial weight(const Monomial& u, const WeightSpec& spec) {
  if (spec.weights.size() != u.ring().num_vars()) throw PreconditionError("weight: spec length mismatch");
  ExponentVector v = u.exponents();
  for (std::size_t i = 0; i < v.size(); ++i) {
    if (spec.weights[i] == 0) throw PreconditionError("weight: weights must be positive");
    if (__builtin_mul_overflow(v[i], spec.weights[i], &v[i])) throw OverflowError("weight: exponent overflow");
  }
  return Monomial(u.ring(), std::move(v));
}

MonomialIdeal weight(const MonomialIdeal& I, const WeightSpec& spec) {
  kernels::Generators gens;
  for (const auto& g : I.exponents()) gens.push_back(weight(Monomial(I.ring(), g), spec).exponents());
  return MonomialIdeal(I.ring(), std::move(gens));
}

// ---------------------------------------------------------------------------

namespace {

std::string nest(const std::string& tag, const DemotionCertificate& c) {
  return c.theorem_tag.empty() ? tag : tag + "(" + c.theorem_tag + ")";
}

template <class MapWitness>
TransportedPair carry(MonomialIdeal I2, MonomialIdeal J2, const DemotionCertificate& c, const std::string& tag,
                      bool iff, MapWitness map) {
  TransportedPair out{std::move(I2), std::move(J2), std::nullopt, {}};
  DemotionCertificate t;
  t.proper = !(out.ideal == out.demotion);
  t.ntf_bound = c.ntf_bound;
  switch (c.verdict) {
    case DemotionVerdict::CertifiedStructural:
      t.verdict = DemotionVerdict::CertifiedStructural;
      t.theorem_tag = nest(tag, c);
      out.note = "transported by " + tag;
      break;
    case DemotionVerdict::CertifiedBounded:
      t.verdict = DemotionVerdict::CertifiedBounded;
      t.r_max = c.r_max;
      t.s_max = c.s_max;
      t.theorem_tag = nest(tag, c);
      out.note = "transported by " + tag + " pair by pair; bounds unchanged";
      break;
    case DemotionVerdict::Refuted:
      if (!iff) {
        out.note = tag + " only transports demotions; no conclusion for a refuted pair";
        return out;
      }
      t.verdict = DemotionVerdict::Refuted;
      t.r_max = c.r_max;
      t.s_max = c.s_max;
      t.theorem_tag = tag;
      for (const auto& f : c.failures) {
        PairFailure g{f.r, f.s, {}};
        for (const auto& w : f.witnesses) g.witnesses.push_back(map(w, f.r, f.s));
        t.failures.push_back(std::move(g));
      }
      if (c.witness) t.witness = DemotionWitness{c.witness->r, c.witness->s, map(c.witness->monomial, c.witness->r, c.witness->s)};
      out.note = "refutation transported by " + tag + " with mapped witnesses";
      break;
  }
  out.certificate = std::move(t);
  return out;
}

auto no_map = [](const Monomial& w, unsigned, unsigned) { return w; };

void require_pair(const MonomialIdeal& I, const MonomialIdeal& J, const char* op) {
  require_same_ring(I.ring(), J.ring(), op);
  if (!I.contains(J)) throw PreconditionError(std::string(op) + ": J is not contained in I");
}

}  // namespace

TransportedPair transport_localize(const MonomialIdeal& I, const MonomialIdeal& J, const DemotionCertificate& c,
                                   const PrimeSupport& p) {
  require_pair(I, J, "transport_localize");
  auto out = carry(localize(I, p), localize(J, p), c, "Prop5.4", false, no_map);
  if (!p.ideal().contains(I)) {
    out.certificate.reset();
    out.note = "p is not in V*(I); Prop5.4 does not apply";
  }
  return out;
}

TransportedPair transport_contract(const MonomialIdeal& I, const MonomialIdeal& J, const DemotionCertificate& c,
                                   std::size_t j) {
  require_pair(I, J, "transport_contract");
  return carry(contract(I, j), contract(J, j), c, "Cor5.5", false, no_map);
}

TransportedPair transport_delete(const MonomialIdeal& I, const MonomialIdeal& J, const DemotionCertificate& c,
                                 std::size_t j) {
  require_pair(I, J, "transport_delete");
  return carry(delete_variable(I, j), delete_variable(J, j), c, "Prop5.7", false, no_map);
}

TransportedPair transport_permute(const MonomialIdeal& I, const MonomialIdeal& J, const DemotionCertificate& c,
                                  const Permutation& sigma) {
  require_pair(I, J, "transport_permute");
  if (!J.is_squarefree()) throw PreconditionError("permute: J is not square-free");
  kernels::Generators gens;
  for (const auto& g : J.exponents()) gens.push_back(permute(Monomial(J.ring(), g), sigma).exponents());
  MonomialIdeal J2(J.ring(), std::move(gens));
  return carry(permute(I, sigma), std::move(J2), c, "Prop5.9", true,
               [&](const Monomial& w, unsigned, unsigned) { return permute(w, sigma); });
}

TransportedPair transport_multiple(const MonomialIdeal& I, const MonomialIdeal& J, const DemotionCertificate& c,
                                   const Monomial& h) {
  require_pair(I, J, "transport_multiple");
  require_same_ring(I.ring(), h.ring(), "transport_multiple");
  auto out = carry(monomial_multiple(I, h), monomial_multiple(J, h), c, "Prop5.10", true,
                   [&](const Monomial& w, unsigned r, unsigned s) { return h.pow(r + s) * w; });
  std::set<std::size_t> used;
  for (auto i : I.support()) used.insert(i);
  for (auto i : J.support()) used.insert(i);
  for (auto i : h.support())
    if (used.count(i)) {
      out.certificate.reset();
      out.note = "supp(h) meets supp(I) ∪ supp(J) at " + I.ring().name(i) + "; Prop5.10 does not apply";
      break;
    }
  return out;
}

TransportedPair transport_expand(const MonomialIdeal& I, const MonomialIdeal& J, const DemotionCertificate& c,
                                 const ExpansionSpec& spec) {
  require_pair(I, J, "transport_expand");
  return carry(expand(I, spec), expand(J, spec), c, "Prop5.12", true,
               [&](const Monomial& w, unsigned, unsigned) { return expand_first_clone(w, spec); });
}

TransportedPair transport_weight(const MonomialIdeal& I, const MonomialIdeal& J, const DemotionCertificate& c,
                                 const WeightSpec& spec) {
  require_pair(I, J, "transport_weight");
  return carry(weight(I, spec), weight(J, spec), c, "Prop5.15", true,
               [&](const Monomial& w, unsigned, unsigned) { return weight(w, spec); });
}

TransportedPair sum_disjoint(const MonomialIdeal& I1, const MonomialIdeal& J1, const DemotionCertificate& c1,
                             const MonomialIdeal& I2, const MonomialIdeal& J2, const DemotionCertificate& c2) {
  require_pair(I1, J1, "sum_disjoint");
  require_pair(I2, J2, "sum_disjoint");
  require_same_ring(I1.ring(), I2.ring(), "sum_disjoint");
  if (!c1.certified() || !c2.certified()) throw PreconditionError("sum_disjoint: an input pair is refuted");
  std::set<std::size_t> first;
  for (auto i : I1.support()) first.insert(i);
  for (auto i : J1.support()) first.insert(i);
  auto overlaps = [&](const MonomialIdeal& X) {
    for (auto i : X.support())
      if (first.count(i)) return true;
    return false;
  };
  if (overlaps(I2) || overlaps(J2)) throw PreconditionError("sum_disjoint: the two pairs share variables");

  TransportedPair out{ideal_sum(I1, I2), ideal_sum(J1, J2), std::nullopt, {}};
  if (c1.verdict == DemotionVerdict::CertifiedStructural && c2.verdict == DemotionVerdict::CertifiedStructural) {
    DemotionCertificate t;
    t.verdict = DemotionVerdict::CertifiedStructural;
    t.theorem_tag = "Prop5.2(" + c1.theorem_tag + "," + c2.theorem_tag + ")";
    t.proper = !(out.ideal == out.demotion);
    t.ntf_bound = std::max(c1.ntf_bound, c2.ntf_bound);
    out.certificate = std::move(t);
    out.note = "both summands structural";
    return out;
  }
  unsigned r = 0, s = 0;
  for (const auto* c : {&c1, &c2})
    if (c->verdict == DemotionVerdict::CertifiedBounded) {
      r = r ? std::min(r, c->r_max) : c->r_max;
      s = s ? std::min(s, c->s_max) : c->s_max;
    }
  out.certificate = check_demotion(out.ideal, out.demotion, r, s);
  out.note = "bounded re-check of the sum";
  return out;
}

TransportedPair infinite_family(std::size_t k, std::size_t a, std::size_t b, const std::optional<WeightSpec>& weights) {
  if (a < 1 || b < 1) throw PreconditionError("infinite_family: both primes need at least one variable");
  if (k < 1) throw PreconditionError("infinite_family: k must be at least 1");
  RingContext base(std::vector<std::string>{"x", "y"});
  MonomialIdeal I(base, {{1, 0}});
  MonomialIdeal J(base, {{1, 1}});
  auto base_cert = principal_demotion_check(Monomial(base, {1, 0}), J).certificate.value();

  ExpansionSpec spec{{a, b}};
  auto expanded = transport_expand(I, J, base_cert, spec);
  WeightSpec w;
  if (weights) {
    w = *weights;
  } else {
    w.weights.assign(a + b, 1);
    w.weights[0] = static_cast<Exponent>(k);
  }
  auto out = transport_weight(expanded.ideal, expanded.demotion, *expanded.certificate, w);
  out.certificate->theorem_tag = "Thm5.13(" + out.certificate->theorem_tag + ")";
  out.note = "(x), (xy) expanded by (" + std::to_string(a) + "," + std::to_string(b) + ") and weighted";
  return out;
}

}  // namespace dkit
