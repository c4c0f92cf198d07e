#include "dkit/kernels.hpp"

#include <algorithm>
#include <atomic>

#include "dkit/error.hpp"

#ifdef DKIT_HAVE_OPENMP
#include <omp.h>
#endif

namespace dkit::kernels {

namespace {

std::atomic<Backend> g_default{Backend::Auto};

// Below this many candidate pairs the thread start-up costs more than it saves.
constexpr std::size_t kParallelPairThreshold = 4096;
constexpr std::size_t kParallelMinimalizeThreshold = 512;

void sort_unique(Generators& gens) {
  std::sort(gens.begin(), gens.end(),
            [](const ExponentVector& a, const ExponentVector& b) { return exps::canonical_less(a, b); });
  gens.erase(std::unique(gens.begin(), gens.end()), gens.end());
}

// After sort_unique any proper divisor of gens[i] has strictly smaller degree
// and therefore sits at a smaller index.
bool redundant_at(const Generators& gens, std::size_t i) {
  const auto di = exps::degree(gens[i]);
  for (std::size_t j = 0; j < i; ++j) {
    if (exps::degree(gens[j]) >= di) break;
    if (exps::divides(gens[j], gens[i])) return true;
  }
  return false;
}

Generators compact(Generators gens, const std::vector<char>& drop) {
  Generators out;
  out.reserve(gens.size());
  for (std::size_t i = 0; i < gens.size(); ++i)
    if (!drop[i]) out.push_back(std::move(gens[i]));
  return out;
}

bool use_parallel(Backend b, std::size_t work, std::size_t threshold) {
  if (b == Backend::Auto) b = g_default.load();
  if (b == Backend::Serial || !parallel_available()) return false;
  if (b == Backend::Parallel) return true;
  return work >= threshold;
}

}  // namespace

bool parallel_available() {
#ifdef DKIT_HAVE_OPENMP
  return true;
#else
  return false;
#endif
}

int max_threads() {
#ifdef DKIT_HAVE_OPENMP
  return omp_get_max_threads();
#else
  return 1;
#endif
}

void set_default_backend(Backend b) { g_default.store(b); }
Backend default_backend() { return g_default.load(); }

namespace serial {

Generators minimalize(Generators gens) {
  sort_unique(gens);
  std::vector<char> drop(gens.size(), 0);
  for (std::size_t i = 0; i < gens.size(); ++i) drop[i] = redundant_at(gens, i) ? 1 : 0;
  return compact(std::move(gens), drop);
}

Generators products(std::span<const ExponentVector> a, std::span<const ExponentVector> b) {
  Generators out;
  out.reserve(a.size() * b.size());
  for (const auto& u : a)
    for (const auto& v : b) out.push_back(exps::multiply(u, v));
  return out;
}

Generators lcms(std::span<const ExponentVector> a, std::span<const ExponentVector> b) {
  Generators out;
  out.reserve(a.size() * b.size());
  for (const auto& u : a)
    for (const auto& v : b) out.push_back(exps::lcm(u, v));
  return out;
}

}  // namespace serial

namespace parallel {

Generators minimalize(Generators gens) {
  sort_unique(gens);
  const auto n = static_cast<std::ptrdiff_t>(gens.size());
  std::vector<char> drop(gens.size(), 0);
#pragma omp parallel for schedule(dynamic, 16)
  for (std::ptrdiff_t i = 0; i < n; ++i) drop[i] = redundant_at(gens, static_cast<std::size_t>(i)) ? 1 : 0;
  return compact(std::move(gens), drop);
}

Generators products(std::span<const ExponentVector> a, std::span<const ExponentVector> b) {
  const auto na = static_cast<std::ptrdiff_t>(a.size());
  const auto nb = b.size();
  Generators out(a.size() * nb);
  std::atomic<bool> overflow{false};
#pragma omp parallel for schedule(static)
  for (std::ptrdiff_t i = 0; i < na; ++i)
    for (std::size_t j = 0; j < nb; ++j)
      if (!exps::multiply_into(a[i], b[j], out[static_cast<std::size_t>(i) * nb + j]))
        overflow.store(true, std::memory_order_relaxed);
  if (overflow) throw OverflowError("exponent overflow in monomial product");
  return out;
}

Generators lcms(std::span<const ExponentVector> a, std::span<const ExponentVector> b) {
  const auto na = static_cast<std::ptrdiff_t>(a.size());
  const auto nb = b.size();
  Generators out(a.size() * nb);
#pragma omp parallel for schedule(static)
  for (std::ptrdiff_t i = 0; i < na; ++i)
    for (std::size_t j = 0; j < nb; ++j) out[static_cast<std::size_t>(i) * nb + j] = exps::lcm(a[i], b[j]);
  return out;
}

}  // namespace parallel

Generators minimalize(Generators gens, Backend b) {
  if (use_parallel(b, gens.size(), kParallelMinimalizeThreshold)) return parallel::minimalize(std::move(gens));
  return serial::minimalize(std::move(gens));
}

Generators products(std::span<const ExponentVector> a, std::span<const ExponentVector> b, Backend backend) {
  if (use_parallel(backend, a.size() * b.size(), kParallelPairThreshold)) return parallel::products(a, b);
  return serial::products(a, b);
}

Generators lcms(std::span<const ExponentVector> a, std::span<const ExponentVector> b, Backend backend) {
  if (use_parallel(backend, a.size() * b.size(), kParallelPairThreshold)) return parallel::lcms(a, b);
  return serial::lcms(a, b);
}

}  // namespace dkit::kernels
