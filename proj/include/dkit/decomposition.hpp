#pragma once

#include <cstddef>
#include <ostream>
#include <string>
#include <utility>
#include <vector>

#include "dkit/ideal.hpp"

namespace dkit {

/// The monomial prime ideal (x_i : i in vars).
class PrimeSupport {
 public:
  /// `vars` must be nonempty and in range; it is sorted and deduplicated.
  PrimeSupport(RingContext ring, std::vector<std::size_t> vars);

  const RingContext& ring() const { return ring_; }
  const std::vector<std::size_t>& vars() const { return vars_; }
  std::size_t size() const { return vars_.size(); }

  MonomialIdeal ideal() const { return MonomialIdeal::prime(ring_, vars_); }
  bool subset_of(const PrimeSupport& other) const;

  /// "(x1, x3)".
  std::string to_string() const;

  friend bool operator==(const PrimeSupport& a, const PrimeSupport& b) {
    return a.vars_ == b.vars_ && a.ring_ == b.ring_;
  }
  /// Canonical order: fewer variables first, then lexicographic on indices.
  friend bool operator<(const PrimeSupport& a, const PrimeSupport& b);

 private:
  RingContext ring_;
  std::vector<std::size_t> vars_;
};

std::ostream& operator<<(std::ostream& os, const PrimeSupport& p);

/// The irreducible ideal (x_i^{e_i} : i in domain).
class IrreducibleComponent {
 public:
  using Power = std::pair<std::size_t, Exponent>;

  IrreducibleComponent(RingContext ring, std::vector<Power> powers);

  const RingContext& ring() const { return ring_; }
  const std::vector<Power>& powers() const { return powers_; }

  MonomialIdeal ideal() const;
  PrimeSupport radical() const;
  /// Ideal containment *this ⊆ other.
  bool subset_of(const IrreducibleComponent& other) const;
  bool is_prime() const;

  std::string to_string() const { return ideal().to_string(); }

  friend bool operator==(const IrreducibleComponent& a, const IrreducibleComponent& b) {
    return a.powers_ == b.powers_ && a.ring_ == b.ring_;
  }
  friend bool operator<(const IrreducibleComponent& a, const IrreducibleComponent& b);

 private:
  RingContext ring_;
  std::vector<Power> powers_;
};

struct Decomposition {
  std::vector<IrreducibleComponent> components;
  bool irredundant = false;

  /// Intersection of the components.
  MonomialIdeal intersection() const;
};

/// Irredundant irreducible decomposition of a proper nonzero monomial ideal.
///
/// Splits the canonically first generator u = x_i^a·v (v ≠ 1, coprime to x_i)
/// into I + (x_i^a) and I + (v) until only pure powers remain, then prunes
/// every component that contains another. Irreducible monomial ideals are
/// meet-irreducible, so pairwise pruning leaves the unique irredundant set.
Decomposition irreducible_decomposition(const MonomialIdeal& I,
                                        kernels::Backend backend = kernels::Backend::Auto);

/// Inclusion-minimal radicals of the irreducible components, canonically ordered.
std::vector<PrimeSupport> minimal_primes(const MonomialIdeal& I);
/// Least cardinality of a minimal prime.
std::size_t height(const MonomialIdeal& I);
/// Ass(R/I): radicals of the irredundant irreducible components, each once.
std::vector<PrimeSupport> associated_primes(const MonomialIdeal& I);

/// I^(k) = ∩_{p ∈ Min(I)} p^k for a square-free proper nonzero I.
MonomialIdeal symbolic_power(const MonomialIdeal& I, std::uint64_t k);

/// True iff (∩_{p ∈ Min(I)} p) ∩ q has no component containing the
/// intersection of the others. I must be square-free and proper.
bool is_minimal_primary_decomposition(const MonomialIdeal& I, const PrimeSupport& q);

}  // namespace dkit
