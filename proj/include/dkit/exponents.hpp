#pragma once

#include <cstdint>
#include <span>
#include <vector>

namespace dkit {

using Exponent = std::uint32_t;
using ExponentVector = std::vector<Exponent>;

namespace exps {

bool divides(std::span<const Exponent> a, std::span<const Exponent> b);
std::uint64_t degree(std::span<const Exponent> a);

/// Component-wise sum. Throws OverflowError instead of wrapping.
ExponentVector multiply(std::span<const Exponent> a, std::span<const Exponent> b);
/// Same as multiply but reports overflow through the return flag; safe inside
/// OpenMP regions where exceptions must not escape.
bool multiply_into(std::span<const Exponent> a, std::span<const Exponent> b, ExponentVector& out);
ExponentVector lcm(std::span<const Exponent> a, std::span<const Exponent> b);
ExponentVector gcd(std::span<const Exponent> a, std::span<const Exponent> b);
/// a / gcd(a, b), the generator of ((a) : (b)).
ExponentVector colon(std::span<const Exponent> a, std::span<const Exponent> b);
ExponentVector power(std::span<const Exponent> a, std::uint64_t k);

/// Canonical generator order: total degree ascending, then exponent vectors
/// lexicographically descending (x1^2 < x1*x2 < x2^2).
bool canonical_less(std::span<const Exponent> a, std::span<const Exponent> b);

}  // namespace exps
}  // namespace dkit
