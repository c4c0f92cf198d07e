#pragma once

#include <cstddef>
#include <memory>
#include <optional>
#include <span>
#include <string>
#include <string_view>
#include <vector>

namespace dkit {

/// A polynomial ring K[x_1, ..., x_n] identified by its ordered variable names.
///
/// The coefficient field is not modelled. Two contexts are the same ring iff
/// they list the same names in the same order; copies share storage.
class RingContext {
 public:
  /// Names must be nonempty identifiers ([A-Za-z_][A-Za-z0-9_]*) and unique.
  explicit RingContext(std::vector<std::string> names);

  /// x1, ..., xn (or `<prefix>1` ... `<prefix>n`).
  static RingContext with_vars(std::size_t n, std::string_view prefix = "x");

  std::size_t num_vars() const { return names_->size(); }
  const std::string& name(std::size_t i) const { return (*names_)[i]; }
  const std::vector<std::string>& names() const { return *names_; }
  std::optional<std::size_t> index_of(std::string_view name) const;

  /// This ring with `extra` variables appended after the existing ones.
  RingContext extended(std::span<const std::string> extra) const;
  /// The subring on the listed variable indices, in increasing index order.
  RingContext restricted(std::span<const std::size_t> keep) const;

  friend bool operator==(const RingContext& a, const RingContext& b);

 private:
  std::shared_ptr<const std::vector<std::string>> names_;
};

bool is_identifier(std::string_view s);

/// Throws ContextMismatch unless both contexts denote the same ring.
void require_same_ring(const RingContext& a, const RingContext& b, std::string_view op);

}  // namespace dkit
