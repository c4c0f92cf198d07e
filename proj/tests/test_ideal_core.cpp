#include <gtest/gtest.h>

#include <random>

#include "dkit/error.hpp"
#include "dkit/ideal.hpp"
#include "dkit/random.hpp"
#include "support.hpp"

using namespace dkit;
using namespace testing_support;

TEST(Ring, NamesAndEquality) {
  auto R = RingContext::with_vars(3);
  EXPECT_EQ(R.names(), (std::vector<std::string>{"x1", "x2", "x3"}));
  EXPECT_EQ(R, RingContext({"x1", "x2", "x3"}));
  EXPECT_FALSE(R == RingContext({"x1", "x3", "x2"}));
  EXPECT_EQ(R.index_of("x2"), 1u);
  EXPECT_FALSE(R.index_of("y"));
  EXPECT_THROW(RingContext({"x", "x"}), Error);
  EXPECT_THROW(RingContext({"1x"}), Error);
  std::vector<std::string> extra{"y"};
  EXPECT_EQ(R.extended(extra).names().back(), "y");
  std::vector<std::size_t> keep{0, 2};
  EXPECT_EQ(R.restricted(keep).names(), (std::vector<std::string>{"x1", "x3"}));
}

TEST(Monomial, FormattingAndArithmetic) {
  auto R = RingContext::with_vars(4);
  auto u = mono(R, "x1^2*x3");
  EXPECT_EQ(u.to_string(), "x1^2*x3");
  EXPECT_EQ(Monomial::one(R).to_string(), "1");
  EXPECT_TRUE(mono(R, "x1").divides(u));
  EXPECT_FALSE(mono(R, "x2").divides(u));
  EXPECT_EQ(u.pow(3).to_string(), "x1^6*x3^3");
  EXPECT_EQ(u.support(), (std::vector<std::size_t>{0, 2}));
  EXPECT_FALSE(u.is_squarefree());
}

TEST(Exponents, CheckedArithmetic) {
  ExponentVector big{std::numeric_limits<Exponent>::max(), 0};
  ExponentVector one{1, 0};
  EXPECT_THROW(exps::multiply(big, one), OverflowError);
  EXPECT_THROW(exps::power(ExponentVector{1u << 20, 0}, 1u << 13), OverflowError);
  EXPECT_EQ(exps::lcm(ExponentVector{2, 0}, ExponentVector{1, 3}), (ExponentVector{2, 3}));
  EXPECT_EQ(exps::gcd(ExponentVector{2, 0}, ExponentVector{1, 3}), (ExponentVector{1, 0}));
  EXPECT_EQ(exps::colon(ExponentVector{2, 1}, ExponentVector{1, 3}), (ExponentVector{1, 0}));
}

TEST(Ideal, CanonicalOrderIsGradedThenLexDescending) {
  auto R = RingContext::with_vars(6);
  auto I = ideal(R, {"x4*x5*x6", "x1*x2", "x3", "x1*x2*x3"});
  EXPECT_EQ(I.to_string(), "(x3, x1*x2, x4*x5*x6)");
  EXPECT_EQ(I.size(), 3u);
  auto J = ideal(R, {"x2*x3", "x1*x4", "x1*x3"});
  EXPECT_EQ(strings(J), (std::vector<std::string>{"x1*x3", "x1*x4", "x2*x3"}));
}

TEST(Ideal, ZeroAndUnit) {
  auto R = RingContext::with_vars(2);
  auto Z = MonomialIdeal::zero(R);
  auto U = MonomialIdeal::unit(R);
  auto I = ideal(R, {"x1"});
  EXPECT_EQ(Z.to_string(), "(0)");
  EXPECT_EQ(U.to_string(), "(1)");
  EXPECT_EQ(ideal_sum(I, Z), I);
  EXPECT_EQ(ideal_product(I, Z), Z);
  EXPECT_EQ(ideal_product(I, U), I);
  EXPECT_EQ(ideal_intersection(I, U), I);
  EXPECT_EQ(ideal_power(I, 0), U);
  EXPECT_EQ(ideal_colon(I, I), U);
  EXPECT_TRUE(U.contains(I));
  EXPECT_FALSE(Z.contains(I));
}

TEST(Ideal, ContextMismatchIsAnError) {
  auto R = RingContext::with_vars(2);
  auto S = RingContext({"x1", "x2", "x3"});
  EXPECT_THROW(ideal_sum(ideal(R, {"x1"}), ideal(S, {"x1"})), ContextMismatch);
  EXPECT_THROW(MonomialIdeal(R, {ExponentVector{1, 0, 0}}), Error);
}

TEST(Ideal, SmallExamples) {
  auto R = RingContext({"x", "y"});
  auto I = ideal(R, {"x"});
  auto J = ideal(R, {"x*y"});
  EXPECT_EQ(ideal_product(I, J).to_string(), "(x^2*y)");
  EXPECT_EQ(ideal_intersection(ideal(R, {"x^2"}), ideal(R, {"x*y"})).to_string(), "(x^2*y)");
  EXPECT_EQ(ideal_colon(J, I).to_string(), "(y)");
  EXPECT_EQ(radical(ideal(R, {"x^3*y", "y^2"})).to_string(), "(y)");
  EXPECT_EQ(ideal_power(ideal(R, {"x", "y"}), 2).to_string(), "(x^2, x*y, y^2)");
}

namespace {

struct Pair {
  MonomialIdeal I, J;
};

Pair draw(random::Rng& rng, const RingContext& R) {
  return {random::ideal(rng, R, 3, 3), random::ideal(rng, R, 3, 3)};
}

}  // namespace

// Every operation is compared with its definition on all monomials of
// degree ≤ 8 in 4 variables.
class IdealOracle : public ::testing::TestWithParam<int> {};

TEST_P(IdealOracle, ArithmeticMatchesDefinitions) {
  random::Rng rng(1000 + GetParam());
  auto R = RingContext::with_vars(4);
  for (int round = 0; round < 25; ++round) {
    auto [I, J] = draw(rng, R);
    const auto a = member(I), b = member(J);
    SCOPED_TRACE(I.to_string() + " , " + J.to_string());
    EXPECT_TRUE(agrees(ideal_sum(I, J), [&](const ExponentVector& u) { return a(u) || b(u); }, 8));
    EXPECT_TRUE(agrees(ideal_intersection(I, J), [&](const ExponentVector& u) { return a(u) && b(u); }, 8));
    EXPECT_TRUE(agrees(ideal_product(I, J), product(a, b), 8));
    EXPECT_TRUE(agrees(ideal_power(I, 2), power(a, 2, 4), 8));
    EXPECT_TRUE(agrees(
        ideal_colon(I, J),
        [&](const ExponentVector& u) {
          for (const auto& g : J.exponents()) {
            ExponentVector v(u.size());
            for (std::size_t i = 0; i < u.size(); ++i) v[i] = u[i] + g[i];
            if (!a(v)) return false;
          }
          return true;
        },
        8));
    EXPECT_TRUE(agrees(
        radical(I),
        [&](const ExponentVector& u) {
          ExponentVector v(u.size());
          for (std::size_t i = 0; i < u.size(); ++i) v[i] = u[i] * 4;
          return a(v);
        },
        6));
    EXPECT_EQ(I.contains(J), std::all_of(J.exponents().begin(), J.exponents().end(), a));
  }
}

INSTANTIATE_TEST_SUITE_P(Seeds, IdealOracle, ::testing::Range(0, 8));

TEST(Ideal, GeneratorsAreMinimal) {
  random::Rng rng(7);
  auto R = RingContext::with_vars(5);
  for (int round = 0; round < 200; ++round) {
    auto I = ideal_product(random::ideal(rng, R, 4, 3), random::ideal(rng, R, 4, 3));
    const auto& g = I.exponents();
    for (std::size_t i = 0; i < g.size(); ++i) {
      if (i) {
        EXPECT_TRUE(exps::canonical_less(g[i - 1], g[i]));
      }
      for (std::size_t j = 0; j < g.size(); ++j)
        if (i != j) {
          EXPECT_FALSE(divides(g[i], g[j]));
        }
    }
  }
}

TEST(Ideal, MultiplyByMonomial) {
  auto R = RingContext::with_vars(3);
  auto I = ideal(R, {"x1", "x2^2"});
  EXPECT_EQ(multiply_by_monomial(mono(R, "x3"), I).to_string(), "(x1*x3, x2^2*x3)");
  EXPECT_EQ(ideal_colon(I, mono(R, "x2")).to_string(), "(x1, x2)");
}
