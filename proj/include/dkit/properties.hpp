#pragma once
// Randomized law checks behind `property <law> cases=N`.

#include <cstddef>
#include <cstdint>
#include <optional>
#include <string>
#include <vector>

namespace dkit::properties {

struct PropertyResult {
  std::string law;
  std::size_t cases = 0;
  std::size_t failures = 0;
  /// Cases where a conditional law's premise held (equal to `cases` otherwise).
  std::size_t exercised = 0;
  std::optional<std::string> counterexample;

  bool passed() const { return failures == 0; }
};

/// Names accepted by run(), in a fixed order.
const std::vector<std::string>& laws();

/// Runs `cases` random instances of `law` from `seed`. Throws
/// PreconditionError for an unknown law.
PropertyResult run(const std::string& law, std::size_t cases, std::uint64_t seed);

}  // namespace dkit::properties
