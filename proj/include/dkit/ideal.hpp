#pragma once

#include <cstddef>
#include <cstdint>
#include <ostream>
#include <span>
#include <string>
#include <vector>

#include "dkit/kernels.hpp"
#include "dkit/monomial.hpp"
#include "dkit/ring.hpp"

namespace dkit {

/// A monomial ideal stored as its unique minimal generating set G(I),
/// canonically ordered. Equal ideals are structurally equal.
///
/// No generators encodes the zero ideal; the single generator 1 encodes the
/// unit ideal.
class MonomialIdeal {
 public:
  /// Minimalizes `gens`; every vector must have the ring's length.
  MonomialIdeal(RingContext ring, kernels::Generators gens);

  static MonomialIdeal zero(RingContext ring);
  static MonomialIdeal unit(RingContext ring);
  static MonomialIdeal principal(const Monomial& m);
  /// (x_i : i in vars).
  static MonomialIdeal prime(RingContext ring, std::span<const std::size_t> vars);

  const RingContext& ring() const { return ring_; }
  const kernels::Generators& exponents() const { return gens_; }
  std::size_t size() const { return gens_.size(); }
  Monomial generator(std::size_t i) const { return Monomial(ring_, gens_[i]); }
  std::vector<Monomial> generators() const;

  bool is_zero() const { return gens_.empty(); }
  bool is_unit() const;
  bool is_proper() const { return !is_unit(); }
  bool is_principal() const { return gens_.size() == 1; }
  bool is_squarefree() const;
  std::uint64_t max_degree() const;
  /// supp(I): the union of the generators' supports, sorted.
  std::vector<std::size_t> support() const;

  bool contains(const Monomial& u) const;
  bool contains(std::span<const Exponent> u) const;
  /// other ⊆ *this.
  bool contains(const MonomialIdeal& other) const;

  /// "(x3, x1*x2, x4*x5*x6)"; "(0)" for the zero ideal.
  std::string to_string() const;

  friend bool operator==(const MonomialIdeal& a, const MonomialIdeal& b) {
    return a.gens_ == b.gens_ && a.ring_ == b.ring_;
  }

 private:
  struct Canonical {};
  MonomialIdeal(RingContext ring, kernels::Generators gens, Canonical);

  RingContext ring_;
  kernels::Generators gens_;

  friend MonomialIdeal multiply_by_monomial(const Monomial& f, const MonomialIdeal& I);
  friend MonomialIdeal make_canonical(RingContext ring, kernels::Generators gens);
};

std::ostream& operator<<(std::ostream& os, const MonomialIdeal& I);

/// Wraps generators already known to be minimal and canonically sorted.
MonomialIdeal make_canonical(RingContext ring, kernels::Generators gens);

/// The ideal generated by `gens`; an empty list gives the zero ideal.
MonomialIdeal minimalize(const RingContext& ring, std::span<const Monomial> gens);

MonomialIdeal ideal_sum(const MonomialIdeal& I, const MonomialIdeal& J);
MonomialIdeal ideal_product(const MonomialIdeal& I, const MonomialIdeal& J);
/// I^0 is the unit ideal; computed by binary powering.
MonomialIdeal ideal_power(const MonomialIdeal& I, std::uint64_t k);
MonomialIdeal ideal_intersection(const MonomialIdeal& I, const MonomialIdeal& J);
/// Folds pairwise, minimalizing after every step. Requires a nonempty list.
MonomialIdeal ideal_intersection(std::span<const MonomialIdeal> ideals);
/// (I : J) = ∩_{v in G(J)} (I : v). J must be nonzero.
MonomialIdeal ideal_colon(const MonomialIdeal& I, const MonomialIdeal& J);
MonomialIdeal ideal_colon(const MonomialIdeal& I, const Monomial& v);
/// Generated by the square-free parts of the generators.
MonomialIdeal radical(const MonomialIdeal& I);
bool is_squarefree(const MonomialIdeal& I);
/// f·I; the scaled generators stay minimal.
MonomialIdeal multiply_by_monomial(const Monomial& f, const MonomialIdeal& I);

}  // namespace dkit
