#include "dkit/ring.hpp"

#include <algorithm>
#include <cctype>
#include <set>

#include "dkit/error.hpp"

namespace dkit {

bool is_identifier(std::string_view s) {
  if (s.empty()) return false;
  auto head = static_cast<unsigned char>(s.front());
  if (!(std::isalpha(head) || head == '_')) return false;
  return std::all_of(s.begin() + 1, s.end(), [](char c) {
    auto u = static_cast<unsigned char>(c);
    return std::isalnum(u) || u == '_';
  });
}

RingContext::RingContext(std::vector<std::string> names) {
  if (names.empty()) throw PreconditionError("a ring needs at least one variable");
  std::set<std::string_view> seen;
  for (const auto& n : names) {
    if (!is_identifier(n)) throw PreconditionError("invalid variable name '" + n + "'");
    if (!seen.insert(n).second) throw PreconditionError("duplicate variable name '" + n + "'");
  }
  names_ = std::make_shared<const std::vector<std::string>>(std::move(names));
}

RingContext RingContext::with_vars(std::size_t n, std::string_view prefix) {
  std::vector<std::string> names;
  names.reserve(n);
  for (std::size_t i = 1; i <= n; ++i) names.push_back(std::string(prefix) + std::to_string(i));
  return RingContext(std::move(names));
}

std::optional<std::size_t> RingContext::index_of(std::string_view name) const {
  const auto& v = *names_;
  auto it = std::find(v.begin(), v.end(), name);
  if (it == v.end()) return std::nullopt;
  return static_cast<std::size_t>(it - v.begin());
}

RingContext RingContext::extended(std::span<const std::string> extra) const {
  std::vector<std::string> names = *names_;
  names.insert(names.end(), extra.begin(), extra.end());
  return RingContext(std::move(names));
}

RingContext RingContext::restricted(std::span<const std::size_t> keep) const {
  std::vector<std::size_t> idx(keep.begin(), keep.end());
  std::sort(idx.begin(), idx.end());
  idx.erase(std::unique(idx.begin(), idx.end()), idx.end());
  std::vector<std::string> names;
  for (auto i : idx) {
    if (i >= num_vars()) throw PreconditionError("variable index out of range");
    names.push_back(name(i));
  }
  return RingContext(std::move(names));
}

bool operator==(const RingContext& a, const RingContext& b) {
  return a.names_ == b.names_ || *a.names_ == *b.names_;
}

void require_same_ring(const RingContext& a, const RingContext& b, std::string_view op) {
  if (!(a == b)) throw ContextMismatch(std::string(op) + ": operands live in different rings");
}

}  // namespace dkit
