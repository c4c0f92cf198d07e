#include "dkit/monomial.hpp"

#include <algorithm>

#include "dkit/error.hpp"

namespace dkit {

Monomial::Monomial(RingContext ring, ExponentVector exponents)
    : ring_(std::move(ring)), exps_(std::move(exponents)) {
  if (exps_.size() != ring_.num_vars())
    throw PreconditionError("exponent vector length does not match the ring");
}

Monomial Monomial::one(RingContext ring) {
  auto n = ring.num_vars();
  return Monomial(std::move(ring), ExponentVector(n, 0));
}

Monomial Monomial::variable(RingContext ring, std::size_t index, Exponent e) {
  if (index >= ring.num_vars()) throw PreconditionError("variable index out of range");
  ExponentVector v(ring.num_vars(), 0);
  v[index] = e;
  return Monomial(std::move(ring), std::move(v));
}

std::vector<std::size_t> Monomial::support() const {
  std::vector<std::size_t> s;
  for (std::size_t i = 0; i < exps_.size(); ++i)
    if (exps_[i] > 0) s.push_back(i);
  return s;
}

bool Monomial::is_one() const {
  return std::all_of(exps_.begin(), exps_.end(), [](Exponent e) { return e == 0; });
}

bool Monomial::is_squarefree() const {
  return std::all_of(exps_.begin(), exps_.end(), [](Exponent e) { return e <= 1; });
}

bool Monomial::divides(const Monomial& other) const {
  require_same_ring(ring_, other.ring_, "divides");
  return exps::divides(exps_, other.exps_);
}

Monomial Monomial::pow(std::uint64_t k) const { return Monomial(ring_, exps::power(exps_, k)); }

Monomial operator*(const Monomial& a, const Monomial& b) {
  require_same_ring(a.ring_, b.ring_, "monomial product");
  return Monomial(a.ring_, exps::multiply(a.exps_, b.exps_));
}

Monomial lcm(const Monomial& a, const Monomial& b) {
  require_same_ring(a.ring_, b.ring_, "lcm");
  return Monomial(a.ring_, exps::lcm(a.exps_, b.exps_));
}

Monomial gcd(const Monomial& a, const Monomial& b) {
  require_same_ring(a.ring_, b.ring_, "gcd");
  return Monomial(a.ring_, exps::gcd(a.exps_, b.exps_));
}

std::string format_monomial(const RingContext& ring, std::span<const Exponent> exps) {
  std::string out;
  for (std::size_t i = 0; i < exps.size(); ++i) {
    if (exps[i] == 0) continue;
    if (!out.empty()) out += '*';
    out += ring.name(i);
    if (exps[i] > 1) out += '^' + std::to_string(exps[i]);
  }
  return out.empty() ? "1" : out;
}

std::string Monomial::to_string() const { return format_monomial(ring_, exps_); }

std::ostream& operator<<(std::ostream& os, const Monomial& m) { return os << m.to_string(); }

}  // namespace dkit
