#pragma once

#include <cstddef>
#include <cstdint>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "dkit/decomposition.hpp"
#include "dkit/ideal.hpp"

namespace dkit {

/// Default search bounds for the bounded checkers.
struct Bounds {
  unsigned r_max = 4;
  unsigned s_max = 4;
  unsigned n_max = 6;
  unsigned k_max = 4;
};

// ---------------------------------------------------------------------------
// Certificates
// ---------------------------------------------------------------------------

enum class DemotionVerdict { CertifiedBounded, CertifiedStructural, Refuted };
const char* to_string(DemotionVerdict v);

/// A pair (r, s) at which I^r J^s ≠ I^{r+s} ∩ J^s, with every minimal
/// generator of I^{r+s} ∩ J^s that lies outside I^r J^s.
struct PairFailure {
  unsigned r = 0;
  unsigned s = 0;
  std::vector<Monomial> witnesses;
};

struct DemotionWitness {
  unsigned r = 0;
  unsigned s = 0;
  Monomial monomial;
};

struct HypothesisCheck {
  std::string name;
  bool passed = false;
  std::string detail;
};

/// Outcome of a demotion check or construction.
///
/// A bounded certificate only speaks for 1 ≤ r ≤ r_max, 1 ≤ s ≤ s_max and is
/// never promoted to a structural one. Structural certificates carry the tag
/// of the result that guarantees all r, s; transported certificates nest the
/// tags, e.g. "Prop5.12(Prop4.2)".
struct DemotionCertificate {
  DemotionVerdict verdict = DemotionVerdict::CertifiedBounded;
  unsigned r_max = 0;
  unsigned s_max = 0;
  std::string theorem_tag;
  /// Lexicographically first failing (r, s) and its canonically first witness.
  std::optional<DemotionWitness> witness;
  /// All failing pairs in lexicographic order (REFUTED only).
  std::vector<PairFailure> failures;
  /// J ≠ I, when known.
  bool proper = false;
  /// Bound used for normally-torsion-free hypotheses; 0 when none were bounded.
  unsigned ntf_bound = 0;
  /// Result of a bounded cross-check run alongside a structural certificate.
  std::optional<bool> self_check;

  bool certified() const { return verdict != DemotionVerdict::Refuted; }
};

enum class ReductionVerdict { Reduction, NotReductionUpTo };
const char* to_string(ReductionVerdict v);

struct ReductionCertificate {
  ReductionVerdict verdict = ReductionVerdict::NotReductionUpTo;
  /// Reduction number for REDUCTION, the searched bound otherwise.
  unsigned n = 0;
  /// witnesses[n] ∈ I^{n+1} \ J·I^n for every failed n, in order.
  std::vector<Monomial> witnesses;
  /// √J ≠ √I, which rules out every n at once.
  bool radical_obstruction = false;
};

enum class NtfVerdict { NtfBounded, NtfStructural, NotNtf };
enum class NtfMethod { SymbolicEquality, AssContainment, Bipartite };
const char* to_string(NtfVerdict v);
const char* to_string(NtfMethod m);

struct NtfCertificate {
  NtfVerdict verdict = NtfVerdict::NtfBounded;
  NtfMethod method = NtfMethod::SymbolicEquality;
  /// Largest power checked (NtfBounded); 0 for NtfStructural.
  unsigned k_max = 0;
  std::optional<unsigned> failing_power;
  /// A prime of Ass(R/I^k) \ Ass(R/I).
  std::optional<PrimeSupport> offending_prime;
  /// For SymbolicEquality refutations: a generator of I^(k) outside I^k.
  std::optional<Monomial> witness;

  bool ntf() const { return verdict != NtfVerdict::NotNtf; }
};

// ---------------------------------------------------------------------------
// Bounded checkers
// ---------------------------------------------------------------------------

/// Checks I^r J^s = I^{r+s} ∩ J^s on the grid 1 ≤ r ≤ r_max, 1 ≤ s ≤ s_max.
/// Requires J ⊆ I. The grid is evaluated in parallel when OpenMP is present.
DemotionCertificate check_demotion(const MonomialIdeal& I, const MonomialIdeal& J, unsigned r_max,
                                   unsigned s_max, kernels::Backend backend = kernels::Backend::Auto);

/// The single pair (r, s); nullopt when the equality holds.
std::optional<PairFailure> check_demotion_pair(const MonomialIdeal& I, const MonomialIdeal& J, unsigned r,
                                               unsigned s);

/// w ∈ I^{r+s}, w ∈ J^s and w ∉ I^r J^s, by plain membership.
bool is_demotion_witness(const MonomialIdeal& I, const MonomialIdeal& J, unsigned r, unsigned s,
                         const Monomial& w);

/// Smallest n ≤ n_max with I^{n+1} = J·I^n. Requires J ⊆ I.
ReductionCertificate check_reduction(const MonomialIdeal& J, const MonomialIdeal& I, unsigned n_max);

/// Normally torsion-free check up to I^{k_max}; see NtfMethod for the route.
NtfCertificate check_ntf(const MonomialIdeal& I, unsigned k_max);

/// Edges {a, b} when every generator is a square-free quadratic x_a x_b.
std::optional<std::vector<std::pair<std::size_t, std::size_t>>> edge_graph(const MonomialIdeal& I);
/// BFS 2-colouring.
bool is_bipartite(std::size_t num_vertices, const std::vector<std::pair<std::size_t, std::size_t>>& edges);

/// Greedy split c_i = min(f_i, remaining) with 0 ≤ c_i ≤ f_i and Σc = t.
std::vector<std::uint64_t> bounded_sum_split(const std::vector<std::uint64_t>& f, std::uint64_t t);

// ---------------------------------------------------------------------------
// Certified constructions
// ---------------------------------------------------------------------------

/// A pair J ⊆ I together with the hypotheses that were checked for it.
/// A refused construction has no certificate; `refusal()` names the first
/// hypothesis that failed.
struct DemotionConstruction {
  MonomialIdeal ideal;
  MonomialIdeal demotion;
  std::vector<HypothesisCheck> transcript;
  std::optional<DemotionCertificate> certificate;

  bool refused() const { return !certificate.has_value(); }
  std::string refusal() const;
};

/// q ⊆ p as primes; the bounded (3, 3) check runs as a self-test.
DemotionConstruction demote_prime_in_prime(const PrimeSupport& p, const PrimeSupport& q);

/// I = (x1..xm)^m and J = (x1^m, ..., xm^m) in `ring`; proper iff m > 1.
DemotionConstruction demote_frobenius_of_prime(const RingContext& ring, unsigned m);

/// Demotions of the principal ideal (m): structural iff every u_i = g_i / m
/// has support disjoint from m; otherwise refuted at (1, 1) by
/// lcm(m², m·u_i). Requires J ⊆ (m).
DemotionConstruction principal_demotion_check(const Monomial& m, const MonomialIdeal& J);

/// J = I ∩ q for square-free I with I and J normally torsion-free (checked up
/// to k_max) and (∩ Min(I)) ∩ q irredundant.
DemotionConstruction demote_by_prime_intersection(const MonomialIdeal& I, const PrimeSupport& q,
                                                  unsigned k_max = 4);

/// I = J + (x_a x_b) for square-free normally torsion-free J with x_a x_b ∉ J.
DemotionConstruction demote_edge_extension(const MonomialIdeal& J, std::size_t a, std::size_t b,
                                           unsigned k_max = 4);

struct NtfConstruction {
  MonomialIdeal ideal;
  std::vector<HypothesisCheck> transcript;
  std::optional<NtfCertificate> certificate;
  std::string theorem_tag;
  /// Ass(R/L) as computed, and the predicted Min(I) ∪ Γ (product route only).
  std::vector<PrimeSupport> associated;
  std::vector<PrimeSupport> predicted;

  bool refused() const { return !certificate.has_value(); }
  std::string refusal() const;
};

/// L = I^r J^s for square-free normally torsion-free I ⊇ J with J a demotion
/// of I and every q ∈ Ass(J) \ Ass(I) outside all p ∈ Ass(I). When
/// `demotion` is empty the demotion hypothesis is checked at `bounds`.
NtfConstruction build_ntf_product(const MonomialIdeal& I, const MonomialIdeal& J, unsigned r, unsigned s,
                                  unsigned k_max = 4,
                                  const std::optional<DemotionCertificate>& demotion = std::nullopt,
                                  Bounds bounds = {});

/// L = J·S + h·x_a·x_b·S in S = R[m new variables], h their product.
NtfConstruction build_ntf_sum_extension(const MonomialIdeal& J, std::size_t a, std::size_t b, unsigned m,
                                        unsigned k_max = 4);

}  // namespace dkit
