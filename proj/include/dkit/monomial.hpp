#pragma once

#include <cstdint>
#include <ostream>
#include <span>
#include <string>
#include <vector>

#include "dkit/exponents.hpp"
#include "dkit/ring.hpp"

namespace dkit {

/// x^a for a dense exponent vector a in a fixed ring.
class Monomial {
 public:
  Monomial(RingContext ring, ExponentVector exponents);

  static Monomial one(RingContext ring);
  static Monomial variable(RingContext ring, std::size_t index, Exponent e = 1);

  const RingContext& ring() const { return ring_; }
  const ExponentVector& exponents() const { return exps_; }
  Exponent operator[](std::size_t i) const { return exps_[i]; }

  std::uint64_t degree() const { return exps::degree(exps_); }
  /// Indices i with a_i > 0; empty for 1.
  std::vector<std::size_t> support() const;
  bool is_one() const;
  bool is_squarefree() const;

  bool divides(const Monomial& other) const;
  Monomial pow(std::uint64_t k) const;

  friend Monomial operator*(const Monomial& a, const Monomial& b);
  friend Monomial lcm(const Monomial& a, const Monomial& b);
  friend Monomial gcd(const Monomial& a, const Monomial& b);

  /// "x1^2*x3", or "1".
  std::string to_string() const;

  friend bool operator==(const Monomial& a, const Monomial& b) {
    return a.exps_ == b.exps_ && a.ring_ == b.ring_;
  }
  /// Canonical (graded, then lex-descending) order within one ring.
  friend bool operator<(const Monomial& a, const Monomial& b) {
    return exps::canonical_less(a.exps_, b.exps_);
  }

 private:
  RingContext ring_;
  ExponentVector exps_;
};

std::ostream& operator<<(std::ostream& os, const Monomial& m);

/// Renders an exponent vector against `ring`'s names.
std::string format_monomial(const RingContext& ring, std::span<const Exponent> exps);

}  // namespace dkit
