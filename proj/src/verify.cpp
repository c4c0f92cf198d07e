#include "dkit/verify.hpp"

#include <algorithm>
#include <exception>
#include <limits>
#include <queue>

#include "dkit/error.hpp"

namespace dkit {

const char* to_string(DemotionVerdict v) {
  switch (v) {
    case DemotionVerdict::CertifiedBounded: return "CERTIFIED_BOUNDED";
    case DemotionVerdict::CertifiedStructural: return "CERTIFIED_STRUCTURAL";
    case DemotionVerdict::Refuted: return "REFUTED";
  }
  return "?";
}

const char* to_string(ReductionVerdict v) {
  return v == ReductionVerdict::Reduction ? "REDUCTION" : "NOT_REDUCTION_UP_TO";
}

const char* to_string(NtfVerdict v) {
  switch (v) {
    case NtfVerdict::NtfBounded: return "NTF_BOUNDED";
    case NtfVerdict::NtfStructural: return "NTF_STRUCTURAL";
    case NtfVerdict::NotNtf: return "NOT_NTF";
  }
  return "?";
}

const char* to_string(NtfMethod m) {
  switch (m) {
    case NtfMethod::SymbolicEquality: return "SYMBOLIC_EQUALITY";
    case NtfMethod::AssContainment: return "ASS_CONTAINMENT";
    case NtfMethod::Bipartite: return "BIPARTITE";
  }
  return "?";
}

namespace {

constexpr unsigned kMaxBound = 1u << 12;

std::vector<MonomialIdeal> powers_up_to(const MonomialIdeal& I, unsigned k) {
  std::vector<MonomialIdeal> out;
  out.reserve(k + 1);
  out.push_back(MonomialIdeal::unit(I.ring()));
  for (unsigned i = 1; i <= k; ++i) out.push_back(ideal_product(out.back(), I));
  return out;
}

std::vector<Monomial> outside(const MonomialIdeal& gens_of, const MonomialIdeal& target) {
  std::vector<Monomial> out;
  for (const auto& g : gens_of.exponents())
    if (!target.contains(std::span<const Exponent>(g))) out.emplace_back(gens_of.ring(), g);
  return out;
}

void require_subideal(const MonomialIdeal& I, const MonomialIdeal& J, const char* op) {
  require_same_ring(I.ring(), J.ring(), op);
  if (!I.contains(J)) throw PreconditionError(std::string(op) + ": J is not contained in I");
}

std::optional<PairFailure> compare_pair(const MonomialIdeal& ir, const MonomialIdeal& irs, const MonomialIdeal& js,
                                        unsigned r, unsigned s) {
  auto lhs = ideal_product(ir, js);
  auto rhs = ideal_intersection(irs, js);
  if (lhs == rhs) return std::nullopt;
  return PairFailure{r, s, outside(rhs, lhs)};
}

MonomialIdeal squarefree_part(const Monomial& m) {
  ExponentVector v = m.exponents();
  for (auto& e : v) e = e > 0 ? 1 : 0;
  return MonomialIdeal::principal(Monomial(m.ring(), std::move(v)));
}

}  // namespace

DemotionCertificate check_demotion(const MonomialIdeal& I, const MonomialIdeal& J, unsigned r_max,
                                   unsigned s_max, kernels::Backend backend) {
  require_subideal(I, J, "check_demotion");
  if (r_max < 1 || s_max < 1) throw PreconditionError("check_demotion: bounds must be at least 1");
  if (r_max > kMaxBound || s_max > kMaxBound) throw OverflowError("check_demotion: bounds too large");

  const auto ipow = powers_up_to(I, r_max + s_max);
  const auto jpow = powers_up_to(J, s_max);

  const auto cells = static_cast<std::ptrdiff_t>(r_max) * s_max;
  std::vector<std::optional<PairFailure>> results(static_cast<std::size_t>(cells));
  std::exception_ptr failure;
  const bool parallel = kernels::parallel_available() && backend != kernels::Backend::Serial &&
                        !(backend == kernels::Backend::Auto &&
                          kernels::default_backend() == kernels::Backend::Serial) &&
                        cells > 1;

  // Row-major over (r, s); the first failure is chosen by index, not by
  // completion order.
#pragma omp parallel for schedule(dynamic, 1) if (parallel)
  for (std::ptrdiff_t c = 0; c < cells; ++c) {
    unsigned r = static_cast<unsigned>(c / s_max) + 1;
    unsigned s = static_cast<unsigned>(c % s_max) + 1;
    try {
      results[static_cast<std::size_t>(c)] = compare_pair(ipow[r], ipow[r + s], jpow[s], r, s);
    } catch (...) {
#pragma omp critical(dkit_check_demotion)
      if (!failure) failure = std::current_exception();
    }
  }
  if (failure) std::rethrow_exception(failure);

  DemotionCertificate cert;
  cert.r_max = r_max;
  cert.s_max = s_max;
  cert.proper = !(I == J);
  for (auto& res : results)
    if (res) cert.failures.push_back(std::move(*res));
  if (cert.failures.empty()) {
    cert.verdict = DemotionVerdict::CertifiedBounded;
  } else {
    cert.verdict = DemotionVerdict::Refuted;
    const auto& first = cert.failures.front();
    cert.witness = DemotionWitness{first.r, first.s, first.witnesses.front()};
  }
  return cert;
}

std::optional<PairFailure> check_demotion_pair(const MonomialIdeal& I, const MonomialIdeal& J, unsigned r,
                                               unsigned s) {
  require_subideal(I, J, "check_demotion_pair");
  return compare_pair(ideal_power(I, r), ideal_power(I, r + s), ideal_power(J, s), r, s);
}

bool is_demotion_witness(const MonomialIdeal& I, const MonomialIdeal& J, unsigned r, unsigned s,
                         const Monomial& w) {
  return ideal_power(I, r + s).contains(w) && ideal_power(J, s).contains(w) &&
         !ideal_product(ideal_power(I, r), ideal_power(J, s)).contains(w);
}

ReductionCertificate check_reduction(const MonomialIdeal& J, const MonomialIdeal& I, unsigned n_max) {
  require_subideal(I, J, "check_reduction");
  if (n_max > kMaxBound) throw OverflowError("check_reduction: bound too large");
  ReductionCertificate cert;

  // A reduction forces √J = √I. When the radicals differ, any generator g of
  // I outside √J gives g^{n+1} ∈ I^{n+1} \ J·I^n for every n.
  const auto rad_j = radical(J);
  if (!(rad_j == radical(I))) {
    cert.radical_obstruction = true;
    cert.verdict = ReductionVerdict::NotReductionUpTo;
    cert.n = n_max;
    for (const auto& g : I.generators()) {
      if (rad_j.contains(squarefree_part(g))) continue;
      for (unsigned n = 0; n <= n_max; ++n) cert.witnesses.push_back(g.pow(n + 1));
      break;
    }
    return cert;
  }

  MonomialIdeal i_n = MonomialIdeal::unit(I.ring());
  for (unsigned n = 0; n <= n_max; ++n) {
    auto i_next = ideal_product(i_n, I);
    auto j_in = ideal_product(J, i_n);
    if (i_next == j_in) {
      cert.verdict = ReductionVerdict::Reduction;
      cert.n = n;
      return cert;
    }
    cert.witnesses.push_back(outside(i_next, j_in).front());
    i_n = std::move(i_next);
  }
  cert.verdict = ReductionVerdict::NotReductionUpTo;
  cert.n = n_max;
  return cert;
}

std::optional<std::vector<std::pair<std::size_t, std::size_t>>> edge_graph(const MonomialIdeal& I) {
  std::vector<std::pair<std::size_t, std::size_t>> edges;
  for (const auto& g : I.exponents()) {
    std::vector<std::size_t> supp;
    for (std::size_t i = 0; i < g.size(); ++i) {
      if (g[i] > 1) return std::nullopt;
      if (g[i] == 1) supp.push_back(i);
    }
    if (supp.size() != 2) return std::nullopt;
    edges.emplace_back(supp[0], supp[1]);
  }
  if (edges.empty()) return std::nullopt;
  return edges;
}

bool is_bipartite(std::size_t num_vertices, const std::vector<std::pair<std::size_t, std::size_t>>& edges) {
  std::vector<std::vector<std::size_t>> adj(num_vertices);
  for (auto [a, b] : edges) {
    adj.at(a).push_back(b);
    adj.at(b).push_back(a);
  }
  std::vector<int> colour(num_vertices, -1);
  for (std::size_t start = 0; start < num_vertices; ++start) {
    if (colour[start] != -1) continue;
    colour[start] = 0;
    std::queue<std::size_t> q;
    q.push(start);
    while (!q.empty()) {
      auto v = q.front();
      q.pop();
      for (auto w : adj[v]) {
        if (colour[w] == -1) {
          colour[w] = 1 - colour[v];
          q.push(w);
        } else if (colour[w] == colour[v]) {
          return false;
        }
      }
    }
  }
  return true;
}

NtfCertificate check_ntf(const MonomialIdeal& I, unsigned k_max) {
  if (I.is_zero() || I.is_unit()) throw PreconditionError("check_ntf: I must be proper and nonzero");
  if (k_max < 1) throw PreconditionError("check_ntf: k_max must be at least 1");
  NtfCertificate cert;

  if (I.is_squarefree()) {
    if (auto edges = edge_graph(I); edges && is_bipartite(I.ring().num_vars(), *edges)) {
      cert.verdict = NtfVerdict::NtfStructural;
      cert.method = NtfMethod::Bipartite;
      return cert;
    }
    cert.method = NtfMethod::SymbolicEquality;
    const auto ass = associated_primes(I);
    MonomialIdeal ik = I;
    for (unsigned k = 2; k <= k_max; ++k) {
      ik = ideal_product(ik, I);
      auto sym = symbolic_power(I, k);
      if (ik == sym) continue;
      cert.verdict = NtfVerdict::NotNtf;
      cert.failing_power = k;
      cert.witness = outside(sym, ik).front();
      for (const auto& p : associated_primes(ik))
        if (std::find(ass.begin(), ass.end(), p) == ass.end()) {
          cert.offending_prime = p;
          break;
        }
      return cert;
    }
    cert.verdict = NtfVerdict::NtfBounded;
    cert.k_max = k_max;
    return cert;
  }

  cert.method = NtfMethod::AssContainment;
  const auto ass = associated_primes(I);
  MonomialIdeal ik = I;
  for (unsigned k = 2; k <= k_max; ++k) {
    ik = ideal_product(ik, I);
    for (const auto& p : associated_primes(ik)) {
      if (std::find(ass.begin(), ass.end(), p) != ass.end()) continue;
      cert.verdict = NtfVerdict::NotNtf;
      cert.failing_power = k;
      cert.offending_prime = p;
      return cert;
    }
  }
  cert.verdict = NtfVerdict::NtfBounded;
  cert.k_max = k_max;
  return cert;
}

std::vector<std::uint64_t> bounded_sum_split(const std::vector<std::uint64_t>& f, std::uint64_t t) {
  std::uint64_t total = 0;
  for (auto v : f) {
    if (__builtin_add_overflow(total, v, &total)) total = std::numeric_limits<std::uint64_t>::max();
  }
  if (total < t) throw PreconditionError("bounded_sum_split: sum(f) < t");
  std::vector<std::uint64_t> c(f.size(), 0);
  std::uint64_t remaining = t;
  for (std::size_t i = 0; i < f.size(); ++i) {
    c[i] = std::min(f[i], remaining);
    remaining -= c[i];
  }
  return c;
}

// ---------------------------------------------------------------------------

namespace {

std::string first_failure(const std::vector<HypothesisCheck>& transcript) {
  for (const auto& h : transcript)
    if (!h.passed) return h.name;
  return {};
}

bool all_passed(const std::vector<HypothesisCheck>& transcript) {
  return std::all_of(transcript.begin(), transcript.end(), [](const HypothesisCheck& h) { return h.passed; });
}

DemotionCertificate structural(std::string tag, bool proper, unsigned ntf_bound = 0) {
  DemotionCertificate c;
  c.verdict = DemotionVerdict::CertifiedStructural;
  c.theorem_tag = std::move(tag);
  c.proper = proper;
  c.ntf_bound = ntf_bound;
  return c;
}

HypothesisCheck ntf_hypothesis(const std::string& name, const MonomialIdeal& I, unsigned k_max) {
  auto c = check_ntf(I, k_max);
  std::string detail = std::string(to_string(c.verdict)) + " via " + to_string(c.method);
  if (c.verdict == NtfVerdict::NtfBounded) detail += " (k <= " + std::to_string(c.k_max) + ")";
  if (c.failing_power) detail += " at k = " + std::to_string(*c.failing_power);
  return {name, c.ntf(), detail};
}

}  // namespace

std::string DemotionConstruction::refusal() const { return first_failure(transcript); }
std::string NtfConstruction::refusal() const { return first_failure(transcript); }

DemotionConstruction demote_prime_in_prime(const PrimeSupport& p, const PrimeSupport& q) {
  if (!q.subset_of(p)) throw PreconditionError("demote_prime_in_prime: q is not contained in p");
  DemotionConstruction out{p.ideal(), q.ideal(), {}, std::nullopt};
  out.transcript.push_back({"q subset of p", true, q.to_string() + " ⊆ " + p.to_string()});
  auto cert = structural("Prop4.2", !(p == q));
  cert.self_check = check_demotion(out.ideal, out.demotion, 3, 3).certified();
  out.certificate = std::move(cert);
  return out;
}

DemotionConstruction demote_frobenius_of_prime(const RingContext& ring, unsigned m) {
  if (m < 1 || m > ring.num_vars())
    throw PreconditionError("demote_frobenius_of_prime: m must satisfy 1 <= m <= num_vars");
  std::vector<std::size_t> vars(m);
  kernels::Generators pure;
  for (std::size_t i = 0; i < m; ++i) {
    vars[i] = i;
    ExponentVector v(ring.num_vars(), 0);
    v[i] = m;
    pure.push_back(std::move(v));
  }
  auto I = ideal_power(MonomialIdeal::prime(ring, vars), m);
  MonomialIdeal J(ring, std::move(pure));
  DemotionConstruction out{I, J, {}, std::nullopt};
  out.transcript.push_back({"1 <= m <= n", true, "m = " + std::to_string(m)});
  out.certificate = structural("Prop4.3", m > 1);
  return out;
}

DemotionConstruction principal_demotion_check(const Monomial& m, const MonomialIdeal& J) {
  auto I = MonomialIdeal::principal(m);
  require_subideal(I, J, "principal_demotion_check");
  DemotionConstruction out{I, J, {}, std::nullopt};

  const auto m_supp = m.support();
  // Offending variable: the first x_j of supp(m) appearing in some quotient
  // u_i = g_i / m.
  std::optional<std::size_t> offending_var;
  for (auto j : m_supp) {
    for (const auto& g : J.exponents())
      if (g[j] > m[j]) offending_var = j;
    if (offending_var) break;
  }
  out.transcript.push_back({"J subset of (m)", true, J.to_string() + " ⊆ " + I.to_string()});
  out.transcript.push_back({"supp(u_i) disjoint from supp(m)", !offending_var.has_value(),
                            offending_var ? "x shares " + m.ring().name(*offending_var) : "all quotients coprime"});

  if (!offending_var) {
    out.certificate = structural("Prop4.4", !(I == J));
    return out;
  }

  // Among generators whose quotient involves x_j, take the least x_j-degree;
  // then M = lcm(m^2, m·u_i) lies in I^2 ∩ J but not in I·J.
  const auto j = *offending_var;
  const ExponentVector* best = nullptr;
  for (const auto& g : J.exponents())
    if (g[j] > m[j] && (!best || g[j] < (*best)[j])) best = &g;
  Monomial witness = lcm(m * m, Monomial(m.ring(), *best));
  if (!is_demotion_witness(I, J, 1, 1, witness)) {
    auto pair = check_demotion_pair(I, J, 1, 1);
    witness = pair->witnesses.front();
  }
  DemotionCertificate cert;
  cert.verdict = DemotionVerdict::Refuted;
  cert.r_max = 1;
  cert.s_max = 1;
  cert.theorem_tag = "Prop4.4";
  cert.proper = !(I == J);
  cert.witness = DemotionWitness{1, 1, witness};
  cert.failures.push_back(PairFailure{1, 1, {witness}});
  out.certificate = std::move(cert);
  return out;
}

DemotionConstruction demote_by_prime_intersection(const MonomialIdeal& I, const PrimeSupport& q, unsigned k_max) {
  require_same_ring(I.ring(), q.ring(), "demote_by_prime_intersection");
  if (I.is_zero() || I.is_unit()) throw PreconditionError("demote_by_prime_intersection: I must be proper and nonzero");
  auto J = ideal_intersection(I, q.ideal());
  DemotionConstruction out{I, J, {}, std::nullopt};
  auto& t = out.transcript;

  t.push_back({"I square-free", I.is_squarefree(), I.to_string()});
  if (!t.back().passed) return out;
  t.push_back({"minimal primary decomposition of I ∩ q", is_minimal_primary_decomposition(I, q),
               "(∩ Min(I)) ∩ " + q.to_string()});
  t.push_back(ntf_hypothesis("I normally torsion-free", I, k_max));
  t.push_back(ntf_hypothesis("I ∩ q normally torsion-free", J, k_max));
  if (all_passed(t)) out.certificate = structural("Prop6.1", !(I == J), k_max);
  return out;
}

DemotionConstruction demote_edge_extension(const MonomialIdeal& J, std::size_t a, std::size_t b, unsigned k_max) {
  const auto& ring = J.ring();
  if (a >= ring.num_vars() || b >= ring.num_vars())
    throw PreconditionError("demote_edge_extension: variable index out of range");
  if (J.is_zero() || J.is_unit()) throw PreconditionError("demote_edge_extension: J must be proper and nonzero");
  ExponentVector edge(ring.num_vars(), 0);
  edge[a] += 1;
  edge[b] += 1;
  Monomial xab(ring, edge);
  auto I = ideal_sum(J, MonomialIdeal::principal(xab));
  DemotionConstruction out{I, J, {}, std::nullopt};
  auto& t = out.transcript;
  t.push_back({"J square-free", J.is_squarefree(), J.to_string()});
  t.push_back({"a != b", a != b, ring.name(a) + ", " + ring.name(b)});
  t.push_back({"x_a x_b not in J", !J.contains(xab), xab.to_string()});
  if (!all_passed(t)) return out;
  t.push_back(ntf_hypothesis("J normally torsion-free", J, k_max));
  if (all_passed(t)) out.certificate = structural("Thm6.3i", true, k_max);
  return out;
}

NtfConstruction build_ntf_product(const MonomialIdeal& I, const MonomialIdeal& J, unsigned r, unsigned s,
                                  unsigned k_max, const std::optional<DemotionCertificate>& demotion,
                                  Bounds bounds) {
  require_same_ring(I.ring(), J.ring(), "build_ntf_product");
  if (r < 1 || s < 1) throw PreconditionError("build_ntf_product: r and s must be at least 1");
  NtfConstruction out{ideal_product(ideal_power(I, r), ideal_power(J, s)), {}, std::nullopt, "Thm6.2", {}, {}};
  auto& t = out.transcript;
  t.push_back({"I square-free", I.is_squarefree() && I.is_proper() && !I.is_zero(), I.to_string()});
  t.push_back({"J square-free", J.is_squarefree() && J.is_proper() && !J.is_zero(), J.to_string()});
  t.push_back({"J subset of I", I.contains(J), ""});
  if (!all_passed(t)) return out;
  t.push_back(ntf_hypothesis("I normally torsion-free", I, k_max));
  t.push_back(ntf_hypothesis("J normally torsion-free", J, k_max));

  if (demotion) {
    t.push_back({"J demotion of I", demotion->certified(),
                 std::string(to_string(demotion->verdict)) +
                     (demotion->theorem_tag.empty() ? "" : " " + demotion->theorem_tag)});
  } else {
    auto c = check_demotion(I, J, bounds.r_max, bounds.s_max);
    t.push_back({"J demotion of I", c.certified(),
                 std::string(to_string(c.verdict)) + " (r <= " + std::to_string(bounds.r_max) +
                     ", s <= " + std::to_string(bounds.s_max) + ")"});
  }

  const auto ass_i = associated_primes(I);
  const auto ass_j = associated_primes(J);
  std::vector<PrimeSupport> gamma;
  for (const auto& q : ass_j)
    if (std::find(ass_i.begin(), ass_i.end(), q) == ass_i.end()) gamma.push_back(q);
  bool gamma_ok = true;
  std::string gamma_detail = "Γ = {";
  for (std::size_t i = 0; i < gamma.size(); ++i) {
    gamma_detail += (i ? ", " : "") + gamma[i].to_string();
    for (const auto& p : ass_i)
      if (gamma[i].subset_of(p)) gamma_ok = false;
  }
  gamma_detail += "}";
  t.push_back({"Γ primes not contained in any p of Ass(I)", gamma_ok, gamma_detail});
  if (!all_passed(t)) return out;

  out.predicted = minimal_primes(I);
  out.predicted.insert(out.predicted.end(), gamma.begin(), gamma.end());
  std::sort(out.predicted.begin(), out.predicted.end());
  out.associated = associated_primes(out.ideal);
  t.push_back({"Ass(L) = Min(I) ∪ Γ", out.associated == out.predicted,
               std::to_string(out.associated.size()) + " primes"});
  auto cert = check_ntf(out.ideal, k_max);
  t.push_back({"L normally torsion-free", cert.ntf(), std::string(to_string(cert.verdict))});
  if (all_passed(t)) out.certificate = cert;
  return out;
}

NtfConstruction build_ntf_sum_extension(const MonomialIdeal& J, std::size_t a, std::size_t b, unsigned m,
                                        unsigned k_max) {
  const auto& ring = J.ring();
  if (a >= ring.num_vars() || b >= ring.num_vars())
    throw PreconditionError("build_ntf_sum_extension: variable index out of range");
  if (m < 1) throw PreconditionError("build_ntf_sum_extension: m must be at least 1");

  std::vector<std::string> fresh;
  for (std::size_t i = 1; i <= m; ++i) {
    std::string name = "x" + std::to_string(ring.num_vars() + i);
    while (ring.index_of(name) || std::find(fresh.begin(), fresh.end(), name) != fresh.end()) name += "_";
    fresh.push_back(name);
  }
  auto S = ring.extended(fresh);
  const auto n = ring.num_vars();

  kernels::Generators gens;
  for (auto g : J.exponents()) {
    g.resize(S.num_vars(), 0);
    gens.push_back(std::move(g));
  }
  ExponentVector hx(S.num_vars(), 0);
  hx[a] += 1;
  hx[b] += 1;
  for (std::size_t i = n; i < S.num_vars(); ++i) hx[i] = 1;
  gens.push_back(hx);
  NtfConstruction out{MonomialIdeal(S, std::move(gens)), {}, std::nullopt, "Thm6.3ii", {}, {}};

  ExponentVector edge(n, 0);
  edge[a] += 1;
  edge[b] += 1;
  auto I = ideal_sum(J, MonomialIdeal::principal(Monomial(ring, edge)));
  auto& t = out.transcript;
  t.push_back({"J square-free", J.is_squarefree() && J.is_proper() && !J.is_zero(), J.to_string()});
  t.push_back({"a != b", a != b, ""});
  t.push_back({"I = J + (x_a x_b) square-free", I.is_squarefree(), I.to_string()});
  if (!all_passed(t)) return out;
  t.push_back(ntf_hypothesis("I normally torsion-free", I, k_max));
  t.push_back(ntf_hypothesis("J normally torsion-free", J, k_max));
  if (!all_passed(t)) return out;
  auto cert = check_ntf(out.ideal, k_max);
  t.push_back({"L normally torsion-free", cert.ntf(), std::string(to_string(cert.verdict))});
  if (all_passed(t)) out.certificate = cert;
  return out;
}

}  // namespace dkit
