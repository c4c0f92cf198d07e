#pragma once
// Random monomials, ideals and primes for property checks. Everything draws
// from a caller-owned std::mt19937_64, so a fixed seed reproduces a run.

#include <cstddef>
#include <random>

#include "dkit/decomposition.hpp"
#include "dkit/ideal.hpp"

namespace dkit::random {

using Rng = std::mt19937_64;

std::size_t uniform(Rng& rng, std::size_t lo, std::size_t hi);

/// A monomial of total degree in [min_degree, max_degree] over the first
/// `vars` variables (all variables when vars is 0).
Monomial monomial(Rng& rng, const RingContext& ring, unsigned min_degree, unsigned max_degree,
                  bool squarefree = false, std::size_t vars = 0);

/// A proper nonzero ideal with 1..max_gens generators of degree 1..max_degree.
MonomialIdeal ideal(Rng& rng, const RingContext& ring, std::size_t max_gens, unsigned max_degree,
                    bool squarefree = false, std::size_t vars = 0);

/// A monomial prime on a nonempty random subset of the first `vars` variables.
PrimeSupport prime(Rng& rng, const RingContext& ring, std::size_t vars = 0);

}  // namespace dkit::random
