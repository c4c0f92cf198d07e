#include "dkit/exponents.hpp"

#include <limits>

#include "dkit/error.hpp"

namespace dkit::exps {

bool divides(std::span<const Exponent> a, std::span<const Exponent> b) {
  for (std::size_t i = 0; i < a.size(); ++i)
    if (a[i] > b[i]) return false;
  return true;
}

std::uint64_t degree(std::span<const Exponent> a) {
  std::uint64_t d = 0;
  for (auto e : a) d += e;
  return d;
}

bool multiply_into(std::span<const Exponent> a, std::span<const Exponent> b, ExponentVector& out) {
  out.resize(a.size());
  bool ok = true;
  for (std::size_t i = 0; i < a.size(); ++i) ok &= !__builtin_add_overflow(a[i], b[i], &out[i]);
  return ok;
}

ExponentVector multiply(std::span<const Exponent> a, std::span<const Exponent> b) {
  ExponentVector out;
  if (!multiply_into(a, b, out)) throw OverflowError("exponent overflow in monomial product");
  return out;
}

ExponentVector lcm(std::span<const Exponent> a, std::span<const Exponent> b) {
  ExponentVector out(a.size());
  for (std::size_t i = 0; i < a.size(); ++i) out[i] = a[i] > b[i] ? a[i] : b[i];
  return out;
}

ExponentVector gcd(std::span<const Exponent> a, std::span<const Exponent> b) {
  ExponentVector out(a.size());
  for (std::size_t i = 0; i < a.size(); ++i) out[i] = a[i] < b[i] ? a[i] : b[i];
  return out;
}

ExponentVector colon(std::span<const Exponent> a, std::span<const Exponent> b) {
  ExponentVector out(a.size());
  for (std::size_t i = 0; i < a.size(); ++i) out[i] = a[i] > b[i] ? a[i] - b[i] : 0;
  return out;
}

ExponentVector power(std::span<const Exponent> a, std::uint64_t k) {
  ExponentVector out(a.size());
  for (std::size_t i = 0; i < a.size(); ++i) {
    std::uint64_t e = static_cast<std::uint64_t>(a[i]) * k;
    if ((k != 0 && e / k != a[i]) || e > std::numeric_limits<Exponent>::max())
      throw OverflowError("exponent overflow in monomial power");
    out[i] = static_cast<Exponent>(e);
  }
  return out;
}

bool canonical_less(std::span<const Exponent> a, std::span<const Exponent> b) {
  auto da = degree(a), db = degree(b);
  if (da != db) return da < db;
  for (std::size_t i = 0; i < a.size(); ++i)
    if (a[i] != b[i]) return a[i] > b[i];
  return false;
}

}  // namespace dkit::exps
