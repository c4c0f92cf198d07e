#include <gtest/gtest.h>

#include "dkit/random.hpp"
#include "dkit/verify.hpp"
#include "support.hpp"

using namespace dkit;
using namespace testing_support;

namespace {

/// I^r J^s = I^{r+s} ∩ J^s, decided on all monomials of degree ≤ d.
bool demotion_equality_by_oracle(const MonomialIdeal& I, const MonomialIdeal& J, unsigned r, unsigned s, unsigned d) {
  const std::size_t n = I.ring().num_vars();
  auto lhs = product(power(member(I), r, n), power(member(J), s, n));
  auto ir = power(member(I), r + s, n);
  auto js = power(member(J), s, n);
  for (const auto& u : monomials_up_to(n, d))
    if (lhs(u) != (ir(u) && js(u))) return false;
  return true;
}

struct EdgeExample {
  RingContext R = RingContext::with_vars(7);
  MonomialIdeal J = ideal(R, {"x2*x4", "x2*x5", "x1*x4", "x5*x6", "x4*x7"});
  MonomialIdeal I = ideal_sum(J, ideal(R, {"x1*x3"}));
};

struct SixPrimeExample {
  RingContext R = RingContext::with_vars(8);
  MonomialIdeal I = ideal(R, {"x3", "x1*x2", "x4*x5*x6"});
  MonomialIdeal J = ideal_intersection(I, ideal(R, {"x1", "x7"}));
  MonomialIdeal L = ideal_intersection(J, ideal(R, {"x4", "x8"}));
};

}  // namespace

TEST(Demotion, GridAgreesWithOracleOnSmallPairs) {
  random::Rng rng(31);
  auto R = RingContext::with_vars(3);
  int refuted = 0;
  for (int round = 0; round < 60; ++round) {
    auto I = random::ideal(rng, R, 3, 2);
    auto J = ideal_intersection(I, random::ideal(rng, R, 3, 2));
    if (J.is_zero()) continue;
    auto c = check_demotion(I, J, 2, 2);
    bool oracle = true;
    for (unsigned r = 1; r <= 2; ++r)
      for (unsigned s = 1; s <= 2; ++s) oracle = oracle && demotion_equality_by_oracle(I, J, r, s, 9);
    EXPECT_EQ(c.certified(), oracle) << I.to_string() << " " << J.to_string();
    if (!c.certified()) {
      ++refuted;
      for (const auto& f : c.failures)
        for (const auto& w : f.witnesses) EXPECT_TRUE(is_demotion_witness(I, J, f.r, f.s, w));
    }
  }
  EXPECT_GT(refuted, 0);
}

TEST(Demotion, RequiresContainment) {
  auto R = RingContext::with_vars(2);
  EXPECT_THROW(check_demotion(ideal(R, {"x1"}), ideal(R, {"x2"}), 2, 2), PreconditionError);
}

TEST(Demotion, EdgeExampleCertifiesButIsNotAReduction) {
  EdgeExample e;
  auto c = check_demotion(e.I, e.J, 4, 4);
  EXPECT_EQ(c.verdict, DemotionVerdict::CertifiedBounded);
  EXPECT_TRUE(c.proper);
  auto red = check_reduction(e.J, e.I, 6);
  EXPECT_EQ(red.verdict, ReductionVerdict::NotReductionUpTo);
  ASSERT_EQ(red.witnesses.size(), 7u);
  for (unsigned n = 0; n <= 6; ++n) {
    auto w = mono(e.R, "x1*x3").pow(n + 1);
    EXPECT_EQ(red.witnesses[n], w);
    EXPECT_TRUE(ideal_power(e.I, n + 1).contains(w));
    EXPECT_FALSE(ideal_product(e.J, ideal_power(e.I, n)).contains(w));
  }
}

TEST(Demotion, CubicExampleIsAReductionButNotADemotion) {
  auto R = RingContext({"x", "y", "z"});
  auto I = ideal(R, {"x^3", "y^3", "z^3", "x^2*y", "x*y^2", "y^2*z", "y*z^2", "x^2*z", "x*z^2"});
  auto J = ideal(R, {"x^3", "y^3", "z^3"});
  auto red = check_reduction(J, I, 6);
  EXPECT_EQ(red.verdict, ReductionVerdict::Reduction);
  EXPECT_EQ(red.n, 2u);
  EXPECT_EQ(ideal_power(I, 3), ideal_product(J, ideal_power(I, 2)));
  EXPECT_NE(ideal_power(I, 2), ideal_product(J, I));
  EXPECT_NE(ideal_product(I, ideal_power(J, 3)), ideal_intersection(ideal_power(I, 4), ideal_power(J, 3)));
  EXPECT_TRUE(check_demotion_pair(I, J, 1, 3));
  EXPECT_EQ(check_demotion(I, J, 1, 3).verdict, DemotionVerdict::Refuted);
}

TEST(Demotion, SixPrimeExampleIsNotTransitive) {
  SixPrimeExample e;
  EXPECT_EQ(check_demotion(e.I, e.J, 4, 4).verdict, DemotionVerdict::CertifiedBounded);
  EXPECT_EQ(check_demotion(e.J, e.L, 2, 2).verdict, DemotionVerdict::CertifiedBounded);
  auto c = check_demotion(e.I, e.L, 2, 2);
  ASSERT_EQ(c.verdict, DemotionVerdict::Refuted);
  ASSERT_TRUE(c.witness);
  EXPECT_EQ(c.witness->r, 1u);
  EXPECT_EQ(c.witness->s, 1u);
  EXPECT_EQ(c.witness->monomial.to_string(), "x1*x2*x4*x5*x6");
  auto printed = mono(e.R, "x1*x2*x4*x5*x6").pow(2);
  EXPECT_TRUE(is_demotion_witness(e.I, e.L, 2, 2, printed));
  const auto& last = c.failures.back();
  EXPECT_EQ(last.r, 2u);
  EXPECT_EQ(last.s, 2u);
  EXPECT_NE(std::find(last.witnesses.begin(), last.witnesses.end(), printed), last.witnesses.end());
}

TEST(Demotion, MiddleIdealNeedNotBeADemotion) {
  auto R = RingContext::with_vars(7);
  auto I = ideal(R, {"x3", "x1*x2", "x4*x5*x6"});
  auto J = ideal_intersection(I, ideal(R, {"x4", "x5", "x7"}));
  auto L = ideal_intersection(I, ideal(R, {"x4", "x7"}));
  EXPECT_TRUE(J.contains(L));
  EXPECT_TRUE(is_demotion_witness(I, J, 2, 2, mono(R, "x3^3*x4*x5*x6")));
  EXPECT_EQ(check_demotion(I, L, 3, 3).verdict, DemotionVerdict::CertifiedBounded);
  EXPECT_EQ(check_demotion(I, J, 2, 2).verdict, DemotionVerdict::Refuted);
}

TEST(Demotion, SquaredGeneratorsWitness) {
  EdgeExample e;
  auto L = ideal(e.R, {"x2^2*x4^2", "x2^2*x5^2", "x1^2*x4^2", "x5^2*x6^2", "x4^2*x7^2"});
  auto w = mono(e.R, "x1*x3*x2^2*x4^2");
  EXPECT_TRUE(ideal_power(e.I, 3).contains(w));
  EXPECT_TRUE(L.contains(w));
  EXPECT_FALSE(ideal_product(ideal_power(e.I, 2), L).contains(w));
  EXPECT_TRUE(is_demotion_witness(e.I, L, 2, 1, w));
}

TEST(Demotion, SelfPairIsCertifiedAndNotProper) {
  auto R = RingContext::with_vars(3);
  auto I = ideal(R, {"x1*x2", "x3^2"});
  auto c = check_demotion(I, I, 3, 3);
  EXPECT_TRUE(c.certified());
  EXPECT_FALSE(c.proper);
}

TEST(Reduction, RadicalObstruction) {
  auto R = RingContext::with_vars(3);
  auto I = ideal(R, {"x1", "x2"});
  auto J = ideal(R, {"x1"});
  auto c = check_reduction(J, I, 4);
  EXPECT_EQ(c.verdict, ReductionVerdict::NotReductionUpTo);
  EXPECT_TRUE(c.radical_obstruction);
  for (unsigned n = 0; n < c.witnesses.size(); ++n) {
    EXPECT_TRUE(ideal_power(I, n + 1).contains(c.witnesses[n]));
    EXPECT_FALSE(ideal_product(J, ideal_power(I, n)).contains(c.witnesses[n]));
  }
  EXPECT_EQ(check_reduction(I, I, 4).n, 0u);
}

TEST(Ntf, FourCycleIsBipartite) {
  auto R = RingContext::with_vars(4);
  auto c = check_ntf(ideal(R, {"x1*x2", "x2*x3", "x3*x4", "x1*x4"}), 4);
  EXPECT_EQ(c.verdict, NtfVerdict::NtfStructural);
  EXPECT_EQ(c.method, NtfMethod::Bipartite);
}

TEST(Ntf, TriangleFailsAtTwo) {
  auto R = RingContext::with_vars(3);
  auto T = ideal(R, {"x1*x2", "x2*x3", "x1*x3"});
  auto c = check_ntf(T, 4);
  EXPECT_EQ(c.verdict, NtfVerdict::NotNtf);
  ASSERT_TRUE(c.failing_power && c.witness);
  EXPECT_EQ(*c.failing_power, 2u);
  EXPECT_EQ(c.witness->to_string(), "x1*x2*x3");
  EXPECT_TRUE(symbolic_power(T, 2).contains(*c.witness));
  EXPECT_FALSE(ideal_power(T, 2).contains(*c.witness));
  ASSERT_TRUE(c.offending_prime);
  EXPECT_EQ(c.offending_prime->to_string(), "(x1, x2, x3)");
  EXPECT_EQ(var_sets(associated_primes(ideal_power(T, 2))).count({0, 1, 2}), 1u);
}

TEST(Ntf, AgreesWithSymbolicPowerOracle) {
  random::Rng rng(32);
  auto R = RingContext::with_vars(5);
  for (int round = 0; round < 40; ++round) {
    auto I = random::ideal(rng, R, 4, 3, true);
    auto c = check_ntf(I, 3);
    bool oracle = true;
    for (unsigned k = 2; k <= 3; ++k) oracle = oracle && ideal_power(I, k) == symbolic_power(I, k);
    EXPECT_EQ(c.ntf(), oracle) << I.to_string();
  }
}

TEST(Ntf, NonSquarefreeUsesAssociatedPrimes) {
  auto R = RingContext({"x", "y"});
  auto c = check_ntf(ideal(R, {"x^2", "x*y"}), 3);
  EXPECT_EQ(c.method, NtfMethod::AssContainment);
  EXPECT_TRUE(c.ntf());
}

TEST(Graphs, EdgeGraphAndBipartite) {
  auto R = RingContext::with_vars(4);
  auto g = edge_graph(ideal(R, {"x1*x2", "x2*x3"}));
  ASSERT_TRUE(g);
  EXPECT_EQ(g->size(), 2u);
  EXPECT_FALSE(edge_graph(ideal(R, {"x1^2"})));
  EXPECT_TRUE(is_bipartite(4, {{0, 1}, {1, 2}, {2, 3}, {3, 0}}));
  EXPECT_FALSE(is_bipartite(3, {{0, 1}, {1, 2}, {2, 0}}));
}

TEST(BoundedSumSplit, Properties) {
  random::Rng rng(33);
  for (int round = 0; round < 200; ++round) {
    std::vector<std::uint64_t> f(random::uniform(rng, 1, 5));
    std::uint64_t total = 0;
    for (auto& x : f) total += x = random::uniform(rng, 0, 6);
    auto t = random::uniform(rng, 0, total);
    auto c = bounded_sum_split(f, t);
    std::uint64_t sum = 0;
    for (std::size_t i = 0; i < f.size(); ++i) {
      EXPECT_LE(c[i], f[i]);
      sum += c[i];
    }
    EXPECT_EQ(sum, t);
  }
  EXPECT_THROW(bounded_sum_split({1, 2}, 4), PreconditionError);
}

TEST(OneVariable, NoProperDemotionUpToDegreeSix) {
  auto R = RingContext({"x"});
  for (unsigned a = 1; a <= 6; ++a)
    for (unsigned b = a + 1; b <= 6; ++b) {
      auto I = ideal(R, {"x^" + std::to_string(a)});
      auto J = ideal(R, {"x^" + std::to_string(b)});
      EXPECT_EQ(check_demotion(I, J, 3, 3).verdict, DemotionVerdict::Refuted) << a << " " << b;
    }
}

TEST(Constructions, PrimeInPrime) {
  auto R = RingContext::with_vars(4);
  auto d = demote_prime_in_prime(prime(R, {"x1", "x2", "x3"}), prime(R, {"x1", "x2"}));
  ASSERT_FALSE(d.refused());
  EXPECT_EQ(d.certificate->verdict, DemotionVerdict::CertifiedStructural);
  EXPECT_EQ(d.certificate->theorem_tag, "Prop4.2");
  EXPECT_EQ(d.certificate->self_check, true);
  EXPECT_TRUE(check_demotion(d.ideal, d.demotion, 3, 3).certified());
  EXPECT_THROW(demote_prime_in_prime(prime(R, {"x1"}), prime(R, {"x1", "x2"})), PreconditionError);
}

TEST(Constructions, Frobenius) {
  auto R = RingContext::with_vars(3);
  for (unsigned m : {2u, 3u}) {
    auto d = demote_frobenius_of_prime(R, m);
    ASSERT_FALSE(d.refused());
    EXPECT_EQ(d.certificate->theorem_tag, "Prop4.3");
    EXPECT_TRUE(d.certificate->proper);
    EXPECT_TRUE(check_demotion(d.ideal, d.demotion, 2, 2).certified());
  }
}

TEST(Constructions, Principal) {
  auto R = RingContext::with_vars(4);
  auto ok = principal_demotion_check(mono(R, "x1"), ideal(R, {"x1*x2", "x1*x3"}));
  ASSERT_FALSE(ok.refused());
  EXPECT_EQ(ok.certificate->verdict, DemotionVerdict::CertifiedStructural);
  EXPECT_EQ(ok.certificate->theorem_tag, "Prop4.4");
  auto bad = principal_demotion_check(mono(R, "x1"), ideal(R, {"x1^2"}));
  ASSERT_TRUE(bad.certificate);
  EXPECT_EQ(bad.certificate->verdict, DemotionVerdict::Refuted);
  EXPECT_TRUE(is_demotion_witness(bad.ideal, bad.demotion, bad.certificate->witness->r, bad.certificate->witness->s,
                                  bad.certificate->witness->monomial));
}

TEST(Constructions, PrimeIntersection) {
  SixPrimeExample e;
  auto d = demote_by_prime_intersection(e.I, prime(e.R, {"x1", "x7"}), 3);
  ASSERT_FALSE(d.refused()) << d.refusal();
  EXPECT_EQ(d.demotion, e.J);
  EXPECT_EQ(d.certificate->theorem_tag, "Prop6.1");
  auto refused = demote_by_prime_intersection(e.I, prime(e.R, {"x1", "x3", "x4", "x7"}), 3);
  EXPECT_TRUE(refused.refused());
}

TEST(Constructions, EdgeExtension) {
  auto R = RingContext::with_vars(6);
  auto J = ideal(R, {"x1*x2", "x2*x3", "x3*x4", "x4*x5", "x5*x6"});
  auto d = demote_edge_extension(J, 5, 0);
  ASSERT_FALSE(d.refused()) << d.refusal();
  EXPECT_EQ(d.certificate->theorem_tag, "Thm6.3i");
  EXPECT_TRUE(check_demotion(d.ideal, J, 3, 3).certified());
  auto path = demote_edge_extension(ideal(R, {"x1*x2", "x2*x3"}), 0, 2);
  ASSERT_FALSE(path.refused());
  EXPECT_TRUE(check_demotion(path.ideal, path.demotion, 3, 3).certified());
  auto triangle = ideal(R, {"x1*x2", "x2*x3", "x1*x3"});
  EXPECT_TRUE(demote_edge_extension(triangle, 0, 3).refused());
}

TEST(Constructions, NtfProductAssociatedPrimes) {
  SixPrimeExample e;
  auto d = build_ntf_product(e.I, e.J, 1, 1, 2);
  ASSERT_FALSE(d.refused()) << d.refusal();
  EXPECT_EQ(d.theorem_tag, "Thm6.2");
  auto want = var_sets(minimal_primes(e.I));
  want.insert({0, 6});
  EXPECT_EQ(associated_by_colon(ideal_product(e.I, e.J)), want);
  EXPECT_EQ(var_sets(d.associated), want);
}

TEST(Constructions, NtfSumExtension) {
  auto R = RingContext::with_vars(4);
  auto d = build_ntf_sum_extension(ideal(R, {"x1*x2"}), 2, 3, 2, 3);
  ASSERT_FALSE(d.refused()) << d.refusal();
  EXPECT_EQ(d.ideal.ring().num_vars(), 6u);
  EXPECT_EQ(d.ideal.to_string(), "(x1*x2, x3*x4*x5*x6)");
  EXPECT_EQ(d.theorem_tag, "Thm6.3ii");
  EXPECT_TRUE(check_ntf(d.ideal, 3).ntf());
}
