#include "dkit/random.hpp"

#include <algorithm>

namespace dkit::random {

std::size_t uniform(Rng& rng, std::size_t lo, std::size_t hi) {
  return std::uniform_int_distribution<std::size_t>(lo, hi)(rng);
}

Monomial monomial(Rng& rng, const RingContext& ring, unsigned min_degree, unsigned max_degree, bool squarefree,
                  std::size_t vars) {
  const std::size_t n = vars ? std::min(vars, ring.num_vars()) : ring.num_vars();
  if (squarefree) max_degree = std::min<unsigned>(max_degree, static_cast<unsigned>(n));
  min_degree = std::min(min_degree, max_degree);
  auto degree = uniform(rng, min_degree, max_degree);
  ExponentVector e(ring.num_vars(), 0);
  for (std::size_t placed = 0; placed < degree;) {
    auto i = uniform(rng, 0, n - 1);
    if (squarefree && e[i]) continue;
    ++e[i];
    ++placed;
  }
  return Monomial(ring, std::move(e));
}

MonomialIdeal ideal(Rng& rng, const RingContext& ring, std::size_t max_gens, unsigned max_degree, bool squarefree,
                    std::size_t vars) {
  auto count = uniform(rng, 1, max_gens);
  kernels::Generators gens;
  for (std::size_t i = 0; i < count; ++i)
    gens.push_back(monomial(rng, ring, 1, max_degree, squarefree, vars).exponents());
  return MonomialIdeal(ring, std::move(gens));
}

PrimeSupport prime(Rng& rng, const RingContext& ring, std::size_t vars) {
  const std::size_t n = vars ? std::min(vars, ring.num_vars()) : ring.num_vars();
  std::vector<std::size_t> chosen;
  while (chosen.empty())
    for (std::size_t i = 0; i < n; ++i)
      if (uniform(rng, 0, 1)) chosen.push_back(i);
  return PrimeSupport(ring, std::move(chosen));
}

}  // namespace dkit::random
