#include "dkit/decomposition.hpp"

#include <algorithm>
#include <exception>
#include <set>

#include "dkit/error.hpp"

namespace dkit {

PrimeSupport::PrimeSupport(RingContext ring, std::vector<std::size_t> vars)
    : ring_(std::move(ring)), vars_(std::move(vars)) {
  std::sort(vars_.begin(), vars_.end());
  vars_.erase(std::unique(vars_.begin(), vars_.end()), vars_.end());
  if (vars_.empty()) throw PreconditionError("a monomial prime needs at least one variable");
  if (vars_.back() >= ring_.num_vars()) throw PreconditionError("variable index out of range");
}

bool PrimeSupport::subset_of(const PrimeSupport& other) const {
  require_same_ring(ring_, other.ring_, "prime comparison");
  return std::includes(other.vars_.begin(), other.vars_.end(), vars_.begin(), vars_.end());
}

std::string PrimeSupport::to_string() const {
  std::string out = "(";
  for (std::size_t i = 0; i < vars_.size(); ++i) {
    if (i) out += ", ";
    out += ring_.name(vars_[i]);
  }
  return out + ")";
}

bool operator<(const PrimeSupport& a, const PrimeSupport& b) {
  if (a.vars_.size() != b.vars_.size()) return a.vars_.size() < b.vars_.size();
  return a.vars_ < b.vars_;
}

std::ostream& operator<<(std::ostream& os, const PrimeSupport& p) { return os << p.to_string(); }

IrreducibleComponent::IrreducibleComponent(RingContext ring, std::vector<Power> powers)
    : ring_(std::move(ring)), powers_(std::move(powers)) {
  std::sort(powers_.begin(), powers_.end());
  if (powers_.empty()) throw PreconditionError("an irreducible component needs at least one variable");
  for (std::size_t i = 0; i < powers_.size(); ++i) {
    if (powers_[i].first >= ring_.num_vars()) throw PreconditionError("variable index out of range");
    if (powers_[i].second == 0) throw PreconditionError("pure powers must have positive exponents");
    if (i && powers_[i].first == powers_[i - 1].first) throw PreconditionError("repeated variable in component");
  }
}

MonomialIdeal IrreducibleComponent::ideal() const {
  kernels::Generators gens;
  for (auto [i, e] : powers_) {
    ExponentVector v(ring_.num_vars(), 0);
    v[i] = e;
    gens.push_back(std::move(v));
  }
  return MonomialIdeal(ring_, std::move(gens));
}

PrimeSupport IrreducibleComponent::radical() const {
  std::vector<std::size_t> vars;
  for (auto [i, e] : powers_) vars.push_back(i);
  return PrimeSupport(ring_, std::move(vars));
}

bool IrreducibleComponent::subset_of(const IrreducibleComponent& other) const {
  // Each x_i^{e_i} must be divisible by some x_i^{f_i} of `other`.
  auto it = other.powers_.begin();
  for (auto [i, e] : powers_) {
    while (it != other.powers_.end() && it->first < i) ++it;
    if (it == other.powers_.end() || it->first != i || it->second > e) return false;
  }
  return true;
}

bool IrreducibleComponent::is_prime() const {
  return std::all_of(powers_.begin(), powers_.end(), [](const Power& p) { return p.second == 1; });
}

bool operator<(const IrreducibleComponent& a, const IrreducibleComponent& b) {
  auto ra = a.radical(), rb = b.radical();
  if (!(ra == rb)) return ra < rb;
  return a.powers_ < b.powers_;
}

MonomialIdeal Decomposition::intersection() const {
  if (components.empty()) throw PreconditionError("empty decomposition");
  std::vector<MonomialIdeal> parts;
  for (const auto& c : components) parts.push_back(c.ideal());
  return ideal_intersection(parts);
}

namespace {

using Leaf = std::vector<IrreducibleComponent::Power>;

// Index of the first generator with two or more support variables, or npos.
std::size_t find_mixed(const kernels::Generators& gens) {
  for (std::size_t g = 0; g < gens.size(); ++g) {
    int nz = 0;
    for (auto e : gens[g])
      if (e > 0 && ++nz > 1) return g;
  }
  return static_cast<std::size_t>(-1);
}

Leaf to_leaf(const kernels::Generators& gens) {
  Leaf leaf;
  for (const auto& g : gens)
    for (std::size_t i = 0; i < g.size(); ++i)
      if (g[i] > 0) leaf.emplace_back(i, g[i]);
  std::sort(leaf.begin(), leaf.end());
  return leaf;
}

std::pair<kernels::Generators, kernels::Generators> split(const kernels::Generators& gens, std::size_t at) {
  const auto& u = gens[at];
  std::size_t i = 0;
  while (u[i] == 0) ++i;
  ExponentVector pure(u.size(), 0);
  pure[i] = u[i];
  ExponentVector rest = u;
  rest[i] = 0;
  kernels::Generators left = gens, right = gens;
  left.push_back(std::move(pure));
  right.push_back(std::move(rest));
  return {kernels::serial::minimalize(std::move(left)), kernels::serial::minimalize(std::move(right))};
}

void split_serial(const kernels::Generators& gens, std::vector<Leaf>& out) {
  auto at = find_mixed(gens);
  if (at == static_cast<std::size_t>(-1)) {
    out.push_back(to_leaf(gens));
    return;
  }
  auto [left, right] = split(gens, at);
  split_serial(left, out);
  split_serial(right, out);
}

#ifdef DKIT_HAVE_OPENMP
// Branches above `depth_left` become OpenMP tasks; each task owns its output
// vector, and the leaves are canonically sorted afterwards.
void split_tasks(const kernels::Generators& gens, std::vector<Leaf>& out, int depth_left) {
  auto at = find_mixed(gens);
  if (at == static_cast<std::size_t>(-1)) {
    out.push_back(to_leaf(gens));
    return;
  }
  auto halves = split(gens, at);
  kernels::Generators left = std::move(halves.first);
  kernels::Generators right = std::move(halves.second);
  if (depth_left <= 0) {
    split_serial(left, out);
    split_serial(right, out);
    return;
  }
  std::vector<Leaf> left_out, right_out;
#pragma omp task shared(left, left_out)
  split_tasks(left, left_out, depth_left - 1);
  split_tasks(right, right_out, depth_left - 1);
#pragma omp taskwait
  out.insert(out.end(), std::make_move_iterator(left_out.begin()), std::make_move_iterator(left_out.end()));
  out.insert(out.end(), std::make_move_iterator(right_out.begin()), std::make_move_iterator(right_out.end()));
}
#endif

void require_decomposable(const MonomialIdeal& I, const char* op) {
  if (I.is_zero()) throw PreconditionError(std::string(op) + ": the zero ideal has no decomposition here");
  if (I.is_unit()) throw PreconditionError(std::string(op) + ": the unit ideal has no decomposition");
}

}  // namespace

Decomposition irreducible_decomposition(const MonomialIdeal& I, kernels::Backend backend) {
  require_decomposable(I, "irreducible_decomposition");
  std::vector<Leaf> leaves;
  bool parallel = kernels::parallel_available() &&
                  (backend == kernels::Backend::Parallel ||
                   (backend == kernels::Backend::Auto && kernels::default_backend() != kernels::Backend::Serial &&
                    I.size() >= 16));
#ifdef DKIT_HAVE_OPENMP
  if (parallel) {
    std::exception_ptr failure;
#pragma omp parallel
#pragma omp single
    {
      try {
        split_tasks(I.exponents(), leaves, 8);
      } catch (...) {
        failure = std::current_exception();
      }
    }
    if (failure) std::rethrow_exception(failure);
  } else {
    split_serial(I.exponents(), leaves);
  }
#else
  (void)parallel;
  split_serial(I.exponents(), leaves);
#endif

  std::sort(leaves.begin(), leaves.end());
  leaves.erase(std::unique(leaves.begin(), leaves.end()), leaves.end());
  std::vector<IrreducibleComponent> comps;
  comps.reserve(leaves.size());
  for (auto& l : leaves) comps.emplace_back(I.ring(), std::move(l));

  Decomposition d;
  for (std::size_t a = 0; a < comps.size(); ++a) {
    bool redundant = false;
    for (std::size_t b = 0; b < comps.size() && !redundant; ++b)
      redundant = a != b && comps[b].subset_of(comps[a]);
    if (!redundant) d.components.push_back(comps[a]);
  }
  std::sort(d.components.begin(), d.components.end());
  d.irredundant = true;
  return d;
}

std::vector<PrimeSupport> associated_primes(const MonomialIdeal& I) {
  auto d = irreducible_decomposition(I);
  std::vector<PrimeSupport> primes;
  for (const auto& c : d.components) primes.push_back(c.radical());
  std::sort(primes.begin(), primes.end());
  primes.erase(std::unique(primes.begin(), primes.end()), primes.end());
  return primes;
}

std::vector<PrimeSupport> minimal_primes(const MonomialIdeal& I) {
  auto ass = associated_primes(I);
  std::vector<PrimeSupport> out;
  for (const auto& p : ass) {
    bool minimal = std::none_of(ass.begin(), ass.end(), [&](const PrimeSupport& q) {
      return !(q == p) && q.subset_of(p);
    });
    if (minimal) out.push_back(p);
  }
  return out;
}

std::size_t height(const MonomialIdeal& I) {
  auto mins = minimal_primes(I);
  std::size_t h = mins.front().size();
  for (const auto& p : mins) h = std::min(h, p.size());
  return h;
}

MonomialIdeal symbolic_power(const MonomialIdeal& I, std::uint64_t k) {
  if (!I.is_squarefree())
    throw PreconditionError("symbolic_power: only square-free monomial ideals are supported");
  require_decomposable(I, "symbolic_power");
  if (k == 0) throw PreconditionError("symbolic_power: k must be positive");
  std::vector<MonomialIdeal> parts;
  for (const auto& p : minimal_primes(I)) parts.push_back(ideal_power(p.ideal(), k));
  return ideal_intersection(parts);
}

bool is_minimal_primary_decomposition(const MonomialIdeal& I, const PrimeSupport& q) {
  require_same_ring(I.ring(), q.ring(), "is_minimal_primary_decomposition");
  if (!I.is_squarefree()) throw PreconditionError("is_minimal_primary_decomposition: I must be square-free");
  require_decomposable(I, "is_minimal_primary_decomposition");
  std::vector<MonomialIdeal> comps;
  for (const auto& p : minimal_primes(I)) comps.push_back(p.ideal());
  comps.push_back(q.ideal());
  for (std::size_t c = 0; c < comps.size(); ++c) {
    std::vector<MonomialIdeal> others;
    for (std::size_t o = 0; o < comps.size(); ++o)
      if (o != c) others.push_back(comps[o]);
    if (!others.empty() && comps[c].contains(ideal_intersection(others))) return false;
  }
  return true;
}

}  // namespace dkit
