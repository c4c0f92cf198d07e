// One PASS/FAIL line per acceptance criterion. Exit status is nonzero when
// any criterion fails.

#include <chrono>
#include <functional>
#include <iostream>
#include <set>
#include <sstream>

#include "dkit/properties.hpp"
#include "dkit/transforms.hpp"
#include "dkit/verify.hpp"
#include "support.hpp"

using namespace dkit;
using namespace testing_support;

namespace {

struct Outcome {
  bool ok = true;
  std::ostringstream detail;

  void require(bool cond, const std::string& what) {
    if (!cond) {
      ok = false;
      detail << (detail.tellp() > 0 ? "; " : "") << what;
    }
  }
};

double seconds_since(std::chrono::steady_clock::time_point t) {
  return std::chrono::duration<double>(std::chrono::steady_clock::now() - t).count();
}

std::string join(const std::vector<std::string>& xs) {
  std::string s;
  for (const auto& x : xs) s += (s.empty() ? "" : ", ") + x;
  return s;
}

std::vector<std::string> prime_strings(const std::vector<PrimeSupport>& ps) {
  std::vector<std::string> out;
  for (const auto& p : ps) out.push_back(p.to_string());
  return out;
}

void criterion1(Outcome& o) {
  auto R = RingContext({"x", "y", "z"});
  auto I = ideal(R, {"x^3", "y^3", "z^3", "x^2*y", "x*y^2", "y^2*z", "y*z^2", "x^2*z", "x*z^2"});
  auto J = ideal(R, {"x^3", "y^3", "z^3"});
  o.require(ideal_power(I, 3) == ideal_product(J, ideal_power(I, 2)), "I^3 != J*I^2");
  auto red = check_reduction(J, I, 6);
  o.require(red.verdict == ReductionVerdict::Reduction && red.n == 2, "reduction number is not 2");
  o.require(ideal_product(I, ideal_power(J, 3)) != ideal_intersection(ideal_power(I, 4), ideal_power(J, 3)),
            "I*J^3 == I^4 cap J^3");
  o.require(check_demotion_pair(I, J, 1, 3).has_value(), "check_demotion_pair(1,3) found no failure");
  o.detail << "reduction number " << red.n;
}

void criterion2(Outcome& o) {
  auto R = RingContext::with_vars(7);
  auto J = ideal(R, {"x2*x4", "x2*x5", "x1*x4", "x5*x6", "x4*x7"});
  auto I = ideal_sum(J, ideal(R, {"x1*x3"}));
  auto c = check_demotion(I, J, 4, 4);
  o.require(c.verdict == DemotionVerdict::CertifiedBounded, "demotion not certified at (4,4)");
  auto red = check_reduction(J, I, 6);
  o.require(red.verdict == ReductionVerdict::NotReductionUpTo, "reported as a reduction");
  o.require(red.witnesses.size() == 7, "expected witnesses for n = 0..6");
  for (unsigned n = 0; n < red.witnesses.size() && n <= 6; ++n) {
    auto w = mono(R, "x1*x3").pow(n + 1);
    o.require(red.witnesses[n] == w, "witness for n=" + std::to_string(n) + " is " + red.witnesses[n].to_string());
    o.require(ideal_power(I, n + 1).contains(w) && !ideal_product(J, ideal_power(I, n)).contains(w),
              "witness for n=" + std::to_string(n) + " does not verify");
  }
  o.detail << "certified (4,4); witnesses (x1*x3)^(n+1), n <= 6";
}

void criterion3(Outcome& o) {
  auto R = RingContext::with_vars(8);
  auto I = ideal(R, {"x3", "x1*x2", "x4*x5*x6"});
  auto J = ideal_intersection(I, ideal(R, {"x1", "x7"}));
  auto L = ideal_intersection(J, ideal(R, {"x4", "x8"}));
  o.require(check_demotion(I, J, 4, 4).verdict == DemotionVerdict::CertifiedBounded, "(I,J) not certified");
  o.require(check_demotion(J, L, 4, 4).verdict == DemotionVerdict::CertifiedBounded, "(J,L) not certified");
  auto c = check_demotion(I, L, 2, 2);
  o.require(c.verdict == DemotionVerdict::Refuted, "(I,L) not refuted");
  auto printed = mono(R, "x1*x2*x4*x5*x6").pow(2);
  bool reported = false;
  for (const auto& f : c.failures)
    if (f.r == 2 && f.s == 2)
      reported = std::find(f.witnesses.begin(), f.witnesses.end(), printed) != f.witnesses.end();
  o.require(reported, printed.to_string() + " not among the reported witnesses at (2,2)");
  o.require(is_demotion_witness(I, L, 2, 2, printed), printed.to_string() + " is not a witness");
  std::vector<std::string> comps;
  for (const auto& comp : irreducible_decomposition(I).components) comps.push_back(comp.to_string());
  o.require(comps == std::vector<std::string>{"(x1, x3, x4)", "(x1, x3, x5)", "(x1, x3, x6)", "(x2, x3, x4)",
                                              "(x2, x3, x5)", "(x2, x3, x6)"},
            "decomposition is " + join(comps));
  if (c.witness)
    o.detail << "refuted; " << printed << " verified at (2,2); first failure " << c.witness->monomial << " at ("
             << c.witness->r << "," << c.witness->s << ")";
}

void criterion4(Outcome& o) {
  auto R = RingContext::with_vars(7);
  auto I = ideal(R, {"x3", "x1*x2", "x4*x5*x6"});
  auto J = ideal_intersection(I, ideal(R, {"x4", "x5", "x7"}));
  auto L = ideal_intersection(I, ideal(R, {"x4", "x7"}));
  auto w = mono(R, "x3^3*x4*x5*x6");
  o.require(ideal_power(I, 4).contains(w) && ideal_power(J, 2).contains(w), "witness not in I^4 cap J^2");
  o.require(!ideal_product(ideal_power(I, 2), ideal_power(J, 2)).contains(w), "witness in I^2 J^2");
  o.require(check_demotion(I, L, 3, 3).verdict == DemotionVerdict::CertifiedBounded, "(I,L) not certified at (3,3)");
  o.detail << w << " verified; (I,L) certified at (3,3)";
}

void criterion5(Outcome& o) {
  auto R = RingContext::with_vars(7);
  auto J = ideal(R, {"x2*x4", "x2*x5", "x1*x4", "x5*x6", "x4*x7"});
  auto I = ideal_sum(J, ideal(R, {"x1*x3"}));
  auto ass_j = prime_strings(associated_primes(J));
  auto ass_i = prime_strings(associated_primes(I));
  auto as_set = [&](std::initializer_list<std::initializer_list<std::string>> ps) {
    std::set<std::string> out;
    for (auto p : ps) out.insert(prime(R, p).to_string());
    return out;
  };
  auto want_j = as_set({{"x5", "x4"}, {"x6", "x4", "x2"}, {"x7", "x5", "x2", "x1"}, {"x7", "x6", "x2", "x1"}});
  auto want_i = as_set({{"x5", "x4", "x1"},
                        {"x5", "x4", "x3"},
                        {"x6", "x4", "x2", "x1"},
                        {"x7", "x5", "x2", "x1"},
                        {"x7", "x6", "x2", "x1"},
                        {"x6", "x4", "x3", "x2"}});
  o.require(ass_j.size() == 4 && std::set<std::string>(ass_j.begin(), ass_j.end()) == want_j, "Ass(J) = " + join(ass_j));
  o.require(ass_i.size() == 6 && std::set<std::string>(ass_i.begin(), ass_i.end()) == want_i, "Ass(I) = " + join(ass_i));
  o.require(height(J) == 2, "ht(J) != 2");
  o.require(height(I) == 3, "ht(I) != 3");
  o.require(radical(I) != radical(J), "radicals agree");
  o.detail << "|Ass(J)|=4, |Ass(I)|=6, ht 2 and 3";
}

void criterion6(Outcome& o) {
  auto R = RingContext::with_vars(7);
  auto J = ideal(R, {"x2*x4", "x2*x5", "x1*x4", "x5*x6", "x4*x7"});
  auto I = ideal_sum(J, ideal(R, {"x1*x3"}));
  auto L = ideal(R, {"x2^2*x4^2", "x2^2*x5^2", "x1^2*x4^2", "x5^2*x6^2", "x4^2*x7^2"});
  auto w = mono(R, "x1*x3*x2^2*x4^2");
  o.require(ideal_power(I, 3).contains(w), "witness not in I^3");
  o.require(L.contains(w), "witness not in L");
  o.require(!ideal_product(ideal_power(I, 2), L).contains(w), "witness in I^2 L");
  o.detail << w << " in I^3 cap L \\ I^2 L";
}

void criterion7(Outcome& o) {
  auto R = RingContext::with_vars(4);
  auto I = ideal(R, {"x1^2*x2", "x1*x3", "x2*x4^2"});
  auto E = expand(I, ExpansionSpec{{2, 3, 1, 2}});
  const auto& T = E.ring();
  auto printed = ideal(T, {"x1_1^2*x2_1", "x1_1^2*x2_2", "x1_1^2*x2_3", "x1_2^2*x2_1", "x1_2^2*x2_2",
                           "x1_2^2*x2_3", "x1_1*x3_1", "x1_2*x3_1", "x2_1*x4_1^2", "x2_1*x4_1*x4_2",
                           "x2_1*x4_2^2", "x2_2*x4_1^2", "x2_2*x4_1*x4_2", "x2_2*x4_2^2", "x2_3*x4_1^2",
                           "x2_3*x4_1*x4_2", "x2_3*x4_2^2"});
  std::vector<std::string> extra;
  for (const auto& g : E.generators())
    if (!printed.contains(g)) extra.push_back(g.to_string());
  o.require(strings(E) == strings(printed),
            "expansion has " + std::to_string(E.size()) + " generators, the printed list " +
                std::to_string(printed.size()) + "; not in the printed list: " + join(extra));
  auto W = weight(ideal(R, {"x1^2*x2", "x2^3*x3^2", "x1*x3*x4^2"}), WeightSpec{{2, 3, 1, 4}});
  o.require(W == ideal(R, {"x1^4*x2^3", "x2^9*x3^2", "x1^2*x3*x4^8"}), "weighting gives " + W.to_string());
  if (o.ok) o.detail << "expansion and weighting match";
  else o.detail << "; weighting " << (W.size() == 3 ? "matches" : "differs");
}

void criterion8(Outcome& o) {
  auto start = std::chrono::steady_clock::now();
  std::size_t total = 0;
  for (const auto& law : properties::laws()) {
    auto r = properties::run(law, 200, 42);
    total += r.cases;
    o.require(r.passed(), law + ": " + std::to_string(r.failures) + " failures, e.g. " + r.counterexample.value_or(""));
  }
  double secs = seconds_since(start);
  o.require(secs < 60, "took " + std::to_string(secs) + " s");
  o.detail << properties::laws().size() << " laws, " << total << " cases, " << secs << " s";
}

void criterion9(Outcome& o) {
  auto start = std::chrono::steady_clock::now();
  auto R = RingContext::with_vars(8);
  auto I = ideal(R, {"x3", "x1*x2", "x4*x5*x6"});
  auto q = prime(R, {"x1", "x7"});
  auto J = ideal_intersection(I, q.ideal());
  auto want = minimal_primes(I);
  want.push_back(q);
  std::sort(want.begin(), want.end());
  for (unsigned r = 1; r <= 2; ++r)
    for (unsigned s = 1; s <= 2; ++s) {
      auto got = associated_primes(ideal_product(ideal_power(I, r), ideal_power(J, s)));
      o.require(got == want, "r=" + std::to_string(r) + ", s=" + std::to_string(s) + ": " + join(prime_strings(got)));
    }
  double secs = seconds_since(start);
  o.require(secs < 10, "took " + std::to_string(secs) + " s");
  o.detail << "Ass = Min(I) + (x1, x7) for r, s <= 2 in " << secs << " s";
}

void criterion10(Outcome& o) {
  auto R4 = RingContext::with_vars(4);
  auto square = check_ntf(ideal(R4, {"x1*x2", "x2*x3", "x3*x4", "x1*x4"}), 4);
  o.require(square.verdict == NtfVerdict::NtfStructural && square.method == NtfMethod::Bipartite,
            "4-cycle not certified by bipartiteness");
  auto R3 = RingContext::with_vars(3);
  auto T = ideal(R3, {"x1*x2", "x2*x3", "x1*x3"});
  auto tri = check_ntf(T, 4);
  o.require(tri.verdict == NtfVerdict::NotNtf && tri.failing_power == 2u, "triangle not refuted at k=2");
  o.require(tri.witness && tri.witness->to_string() == "x1*x2*x3", "triangle witness is not x1*x2*x3");
  o.require(tri.witness && symbolic_power(T, 2).contains(*tri.witness) && !ideal_power(T, 2).contains(*tri.witness),
            "triangle witness does not verify");
  auto R1 = RingContext({"x"});
  std::size_t pairs = 0;
  for (unsigned a = 1; a <= 6; ++a)
    for (unsigned b = a; b <= 6; ++b) {
      auto I = MonomialIdeal::principal(Monomial::variable(R1, 0, a));
      auto J = MonomialIdeal::principal(Monomial::variable(R1, 0, b));
      ++pairs;
      bool certified = check_demotion(I, J, 3, 3).certified();
      o.require(certified == (a == b), "x^" + std::to_string(a) + " / x^" + std::to_string(b));
    }
  o.detail << "C4 bipartite, triangle fails at k=2, " << pairs << " one-variable pairs";
}

}  // namespace

int main() {
  const std::vector<std::pair<int, std::function<void(Outcome&)>>> criteria{
      {1, criterion1}, {2, criterion2}, {3, criterion3}, {4, criterion4},  {5, criterion5},
      {6, criterion6}, {7, criterion7}, {8, criterion8}, {9, criterion9}, {10, criterion10}};
  int failed = 0;
  for (const auto& [id, check] : criteria) {
    Outcome o;
    try {
      check(o);
    } catch (const std::exception& e) {
      o.require(false, std::string("exception: ") + e.what());
    }
    std::cout << (o.ok ? "PASS " : "FAIL ") << id << ": " << o.detail.str() << std::endl;
    failed += !o.ok;
  }
  std::cout << (10 - failed) << "/10 criteria passed" << std::endl;
  return failed ? 1 : 0;
}
