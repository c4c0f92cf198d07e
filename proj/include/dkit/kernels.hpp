#pragma once

// Generator-set kernels behind every ideal operation.
//
// Each kernel exists twice: a plain serial loop kept as the reference, and an
// OpenMP version over the same index space. Both write into pre-sized slots
// and finish with the same canonical sort, so their outputs are bit-identical
// regardless of thread count or schedule.

#include <cstddef>
#include <span>
#include <vector>

#include "dkit/exponents.hpp"

namespace dkit::kernels {

using Generators = std::vector<ExponentVector>;

enum class Backend { Serial, Parallel, Auto };

/// True when the library was compiled with OpenMP.
bool parallel_available();
int max_threads();

/// Process-wide default for `Backend::Auto` dispatch; Auto picks Parallel
/// above a work threshold.
void set_default_backend(Backend b);
Backend default_backend();

namespace serial {
/// Sort canonically, drop duplicates and every element divisible by another.
Generators minimalize(Generators gens);
/// All pairwise products a*b, not minimalized. Throws OverflowError.
Generators products(std::span<const ExponentVector> a, std::span<const ExponentVector> b);
/// All pairwise lcm(a, b), not minimalized.
Generators lcms(std::span<const ExponentVector> a, std::span<const ExponentVector> b);
}  // namespace serial

namespace parallel {
Generators minimalize(Generators gens);
Generators products(std::span<const ExponentVector> a, std::span<const ExponentVector> b);
Generators lcms(std::span<const ExponentVector> a, std::span<const ExponentVector> b);
}  // namespace parallel

Generators minimalize(Generators gens, Backend b = Backend::Auto);
Generators products(std::span<const ExponentVector> a, std::span<const ExponentVector> b,
                    Backend backend = Backend::Auto);
Generators lcms(std::span<const ExponentVector> a, std::span<const ExponentVector> b,
                Backend backend = Backend::Auto);

}  // namespace dkit::kernels
