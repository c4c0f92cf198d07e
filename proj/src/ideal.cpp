#include "dkit/ideal.hpp"

#include <algorithm>

#include "dkit/error.hpp"

namespace dkit {

namespace {

void check_lengths(const RingContext& ring, const kernels::Generators& gens) {
  for (const auto& g : gens)
    if (g.size() != ring.num_vars()) throw PreconditionError("generator length does not match the ring");
}

}  // namespace

MonomialIdeal::MonomialIdeal(RingContext ring, kernels::Generators gens) : ring_(std::move(ring)) {
  check_lengths(ring_, gens);
  gens_ = kernels::minimalize(std::move(gens));
}

MonomialIdeal::MonomialIdeal(RingContext ring, kernels::Generators gens, Canonical)
    : ring_(std::move(ring)), gens_(std::move(gens)) {}

MonomialIdeal make_canonical(RingContext ring, kernels::Generators gens) {
  return MonomialIdeal(std::move(ring), std::move(gens), MonomialIdeal::Canonical{});
}

MonomialIdeal MonomialIdeal::zero(RingContext ring) { return make_canonical(std::move(ring), {}); }

MonomialIdeal MonomialIdeal::unit(RingContext ring) {
  auto n = ring.num_vars();
  return make_canonical(std::move(ring), {ExponentVector(n, 0)});
}

MonomialIdeal MonomialIdeal::principal(const Monomial& m) { return make_canonical(m.ring(), {m.exponents()}); }

MonomialIdeal MonomialIdeal::prime(RingContext ring, std::span<const std::size_t> vars) {
  kernels::Generators gens;
  for (auto i : vars) {
    if (i >= ring.num_vars()) throw PreconditionError("variable index out of range");
    ExponentVector v(ring.num_vars(), 0);
    v[i] = 1;
    gens.push_back(std::move(v));
  }
  return MonomialIdeal(std::move(ring), std::move(gens));
}

std::vector<Monomial> MonomialIdeal::generators() const {
  std::vector<Monomial> out;
  out.reserve(gens_.size());
  for (const auto& g : gens_) out.emplace_back(ring_, g);
  return out;
}

bool MonomialIdeal::is_unit() const { return gens_.size() == 1 && exps::degree(gens_.front()) == 0; }

bool MonomialIdeal::is_squarefree() const {
  return std::all_of(gens_.begin(), gens_.end(), [](const ExponentVector& g) {
    return std::all_of(g.begin(), g.end(), [](Exponent e) { return e <= 1; });
  });
}

std::uint64_t MonomialIdeal::max_degree() const {
  std::uint64_t d = 0;
  for (const auto& g : gens_) d = std::max(d, exps::degree(g));
  return d;
}

std::vector<std::size_t> MonomialIdeal::support() const {
  std::vector<std::size_t> s;
  for (std::size_t i = 0; i < ring_.num_vars(); ++i)
    if (std::any_of(gens_.begin(), gens_.end(), [i](const ExponentVector& g) { return g[i] > 0; })) s.push_back(i);
  return s;
}

bool MonomialIdeal::contains(std::span<const Exponent> u) const {
  return std::any_of(gens_.begin(), gens_.end(), [u](const ExponentVector& g) { return exps::divides(g, u); });
}

bool MonomialIdeal::contains(const Monomial& u) const {
  require_same_ring(ring_, u.ring(), "contains");
  return contains(std::span<const Exponent>(u.exponents()));
}

bool MonomialIdeal::contains(const MonomialIdeal& other) const {
  require_same_ring(ring_, other.ring_, "containment");
  return std::all_of(other.gens_.begin(), other.gens_.end(),
                     [this](const ExponentVector& g) { return contains(std::span<const Exponent>(g)); });
}

std::string MonomialIdeal::to_string() const {
  if (gens_.empty()) return "(0)";
  std::string out = "(";
  for (std::size_t i = 0; i < gens_.size(); ++i) {
    if (i) out += ", ";
    out += format_monomial(ring_, gens_[i]);
  }
  return out + ")";
}

std::ostream& operator<<(std::ostream& os, const MonomialIdeal& I) { return os << I.to_string(); }

MonomialIdeal minimalize(const RingContext& ring, std::span<const Monomial> gens) {
  kernels::Generators raw;
  raw.reserve(gens.size());
  for (const auto& m : gens) {
    require_same_ring(ring, m.ring(), "minimalize");
    raw.push_back(m.exponents());
  }
  return MonomialIdeal(ring, std::move(raw));
}

MonomialIdeal ideal_sum(const MonomialIdeal& I, const MonomialIdeal& J) {
  require_same_ring(I.ring(), J.ring(), "ideal_sum");
  kernels::Generators all = I.exponents();
  all.insert(all.end(), J.exponents().begin(), J.exponents().end());
  return MonomialIdeal(I.ring(), std::move(all));
}

MonomialIdeal ideal_product(const MonomialIdeal& I, const MonomialIdeal& J) {
  require_same_ring(I.ring(), J.ring(), "ideal_product");
  return make_canonical(I.ring(), kernels::minimalize(kernels::products(I.exponents(), J.exponents())));
}

MonomialIdeal ideal_power(const MonomialIdeal& I, std::uint64_t k) {
  MonomialIdeal result = MonomialIdeal::unit(I.ring());
  MonomialIdeal base = I;
  while (k > 0) {
    if (k & 1) result = ideal_product(result, base);
    k >>= 1;
    if (k > 0) base = ideal_product(base, base);
  }
  return result;
}

MonomialIdeal ideal_intersection(const MonomialIdeal& I, const MonomialIdeal& J) {
  require_same_ring(I.ring(), J.ring(), "ideal_intersection");
  return make_canonical(I.ring(), kernels::minimalize(kernels::lcms(I.exponents(), J.exponents())));
}

MonomialIdeal ideal_intersection(std::span<const MonomialIdeal> ideals) {
  if (ideals.empty()) throw PreconditionError("intersection of an empty family");
  MonomialIdeal acc = ideals.front();
  for (std::size_t i = 1; i < ideals.size(); ++i) acc = ideal_intersection(acc, ideals[i]);
  return acc;
}

MonomialIdeal ideal_colon(const MonomialIdeal& I, const Monomial& v) {
  require_same_ring(I.ring(), v.ring(), "ideal_colon");
  kernels::Generators out;
  out.reserve(I.size());
  for (const auto& u : I.exponents()) out.push_back(exps::colon(u, v.exponents()));
  return MonomialIdeal(I.ring(), std::move(out));
}

MonomialIdeal ideal_colon(const MonomialIdeal& I, const MonomialIdeal& J) {
  require_same_ring(I.ring(), J.ring(), "ideal_colon");
  if (J.is_zero()) throw PreconditionError("colon by the zero ideal");
  std::vector<MonomialIdeal> parts;
  parts.reserve(J.size());
  for (const auto& v : J.exponents()) parts.push_back(ideal_colon(I, Monomial(J.ring(), v)));
  return ideal_intersection(parts);
}

MonomialIdeal radical(const MonomialIdeal& I) {
  kernels::Generators out;
  out.reserve(I.size());
  for (auto g : I.exponents()) {
    for (auto& e : g) e = e > 0 ? 1 : 0;
    out.push_back(std::move(g));
  }
  return MonomialIdeal(I.ring(), std::move(out));
}

bool is_squarefree(const MonomialIdeal& I) { return I.is_squarefree(); }

MonomialIdeal multiply_by_monomial(const Monomial& f, const MonomialIdeal& I) {
  require_same_ring(f.ring(), I.ring(), "multiply_by_monomial");
  kernels::Generators out;
  out.reserve(I.size());
  for (const auto& g : I.exponents()) out.push_back(exps::multiply(g, f.exponents()));
  // Scaling by a fixed monomial preserves divisibility and the canonical order.
  return make_canonical(I.ring(), std::move(out));
}

}  // namespace dkit
