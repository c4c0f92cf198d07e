#pragma once

#include <cstddef>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "dkit/decomposition.hpp"
#include "dkit/ideal.hpp"
#include "dkit/verify.hpp"

namespace dkit {

/// Clone counts (i_1, ..., i_n): x_j becomes x_{j,1}, ..., x_{j,i_j}.
struct ExpansionSpec {
  std::vector<std::size_t> multiplicities;

  /// Variables "<base>_<clone>" in base order; throws on a length mismatch or
  /// a zero multiplicity.
  RingContext target(const RingContext& base) const;
  /// Index of x_{j,1} in the target ring.
  std::size_t first_clone(std::size_t j) const;
};

/// x_i ↦ x_i^{w_i}.
struct WeightSpec {
  std::vector<Exponent> weights;
};

/// A bijection of a set of variable indices onto itself, identity elsewhere.
class Permutation {
 public:
  /// `mapping` lists (i, σ(i)). Throws unless σ maps its domain bijectively
  /// onto the same set.
  explicit Permutation(std::vector<std::pair<std::size_t, std::size_t>> mapping);
  /// The cycle notation (a b c) as a mapping a→b→c→a.
  static Permutation cycle(const std::vector<std::size_t>& elements);

  std::size_t operator()(std::size_t i) const;
  std::vector<std::size_t> domain() const;
  const std::vector<std::pair<std::size_t, std::size_t>>& mapping() const { return mapping_; }

 private:
  std::vector<std::pair<std::size_t, std::size_t>> mapping_;  // sorted by source
};

// ---------------------------------------------------------------------------
// The operations
// ---------------------------------------------------------------------------

/// I(p): variables outside p set to 1, in the ring R(p) on p's variables.
MonomialIdeal localize(const MonomialIdeal& I, const PrimeSupport& p);
Monomial localize(const Monomial& u, const PrimeSupport& p);

/// I / x_j: x_j set to 1, in the ring without x_j. Needs at least two variables.
MonomialIdeal contract(const MonomialIdeal& I, std::size_t j);

/// I \ x_j: x_j set to 0, same ring.
MonomialIdeal delete_variable(const MonomialIdeal& I, std::size_t j);

/// σ(I) for square-free I; σ must be a permutation of supp(I).
MonomialIdeal permute(const MonomialIdeal& I, const Permutation& sigma);
Monomial permute(const Monomial& u, const Permutation& sigma);

MonomialIdeal monomial_multiple(const MonomialIdeal& I, const Monomial& h);

/// I* = Σ_{u ∈ G(I)} ∏_j p_j^{deg_{x_j} u} in spec.target(ring).
MonomialIdeal expand(const MonomialIdeal& I, const ExpansionSpec& spec);
/// Image of u under x_j ↦ x_{j,1}.
Monomial expand_first_clone(const Monomial& u, const ExpansionSpec& spec);

MonomialIdeal weight(const MonomialIdeal& I, const WeightSpec& spec);
Monomial weight(const Monomial& u, const WeightSpec& spec);

// ---------------------------------------------------------------------------
// Transport of demotion certificates
// ---------------------------------------------------------------------------

/// The image (I', J') of a pair and what the transport theorem says about it.
/// `certificate` is empty when the theorem gives no conclusion (a refuted
/// pair under a one-way transform) or when its hypothesis fails; `note`
/// says which.
struct TransportedPair {
  MonomialIdeal ideal;
  MonomialIdeal demotion;
  std::optional<DemotionCertificate> certificate;
  std::string note;
};

TransportedPair transport_localize(const MonomialIdeal& I, const MonomialIdeal& J, const DemotionCertificate& c,
                                   const PrimeSupport& p);
TransportedPair transport_contract(const MonomialIdeal& I, const MonomialIdeal& J, const DemotionCertificate& c,
                                   std::size_t j);
TransportedPair transport_delete(const MonomialIdeal& I, const MonomialIdeal& J, const DemotionCertificate& c,
                                 std::size_t j);
TransportedPair transport_permute(const MonomialIdeal& I, const MonomialIdeal& J, const DemotionCertificate& c,
                                  const Permutation& sigma);
TransportedPair transport_multiple(const MonomialIdeal& I, const MonomialIdeal& J, const DemotionCertificate& c,
                                   const Monomial& h);
TransportedPair transport_expand(const MonomialIdeal& I, const MonomialIdeal& J, const DemotionCertificate& c,
                                 const ExpansionSpec& spec);
TransportedPair transport_weight(const MonomialIdeal& I, const MonomialIdeal& J, const DemotionCertificate& c,
                                 const WeightSpec& spec);

/// (I1 + I2, J1 + J2) for pairs on disjoint variables. Structural when both
/// inputs are; otherwise the sum is re-checked at the smallest input bounds.
/// Throws if the supports overlap or an input is refuted.
TransportedPair sum_disjoint(const MonomialIdeal& I1, const MonomialIdeal& J1, const DemotionCertificate& c1,
                             const MonomialIdeal& I2, const MonomialIdeal& J2, const DemotionCertificate& c2);

/// The k-th member of the family built from I = (x), J = (xy): expand by
/// (a, b), then weight with w = (k, 1, ..., 1) unless `weights` is given.
/// Distinct k give distinct pairs.
TransportedPair infinite_family(std::size_t k, std::size_t a, std::size_t b,
                                const std::optional<WeightSpec>& weights = std::nullopt);

}  // namespace dkit
