#include <gtest/gtest.h>

#include <random>
#include <string>
#include <vector>

#include "eqdeg/parse.hpp"
#include "eqdeg/polynomial.hpp"
#include "test_support.hpp"

namespace eqdeg {
namespace {

using testing::qq;
using testing::vars;

TEST(Parse, ReadsTermsInCanonicalOrder) {
  auto p = qq("x1^2*x2 - 3");
  ASSERT_EQ(p.size(), 2u);
  EXPECT_EQ(p.terms()[0].coefficient, 1);
  EXPECT_EQ(p.terms()[0].exponent, (ExponentVector{2, 1}));
  EXPECT_EQ(p.terms()[1].coefficient, -3);
  EXPECT_EQ(p.terms()[1].exponent, (ExponentVector{0, 0}));
}

TEST(Parse, ZeroAndLikeTerms) {
  EXPECT_TRUE(qq("0").is_zero());
  auto p = qq("x1 + x1");
  ASSERT_EQ(p.size(), 1u);
  EXPECT_EQ(p.terms()[0].coefficient, 2);
  EXPECT_EQ(p.terms()[0].exponent, (ExponentVector{1, 0}));
  EXPECT_TRUE(qq("x1*x2 - x2*x1").is_zero());
}

TEST(Parse, RationalCoefficientsAreReduced) {
  auto p = qq("6/4*x1 + 2/1");
  EXPECT_EQ(p.terms()[0].coefficient, mpq_class(3, 2));
  EXPECT_EQ(p.to_string(vars(2)), "3/2*x1 + 2");
}

TEST(Parse, WhitespaceIsInsignificant) {
  EXPECT_EQ(qq("  x1 ^ 2 *x2-3  "), qq("x1^2*x2 - 3"));
}

TEST(Parse, Errors) {
  try {
    qq("x1 + y");
    FAIL() << "expected UnknownVariable";
  } catch (const UnknownVariable& e) {
    EXPECT_EQ(e.position(), 5u);
  }
  EXPECT_THROW(qq("x1 +"), ParseError);
  EXPECT_THROW(qq("x1 ** x2"), ParseError);
  EXPECT_THROW(qq("3/0*x1"), ParseError);
  EXPECT_THROW(qq("x1^"), ParseError);
  EXPECT_THROW(qq(""), ParseError);
  EXPECT_THROW(qq("x1 x2"), ParseError);
  EXPECT_THROW(qq("x1^99999999999"), ParseError);
  PrimeField f(1048583);
  EXPECT_THROW(parse_polynomial("1/1048583*x1", vars(1), f), ParseError);
}

TEST(Parse, ExponentOverflowIsAnError) {
  EXPECT_THROW(qq("x1^4294967295*x1"), ExponentOverflow);
  auto big = qq("x1^4294967295");
  EXPECT_THROW(big * qq("x1"), ExponentOverflow);
}

TEST(Arithmetic, Examples) {
  EXPECT_TRUE((qq("x1") + qq("-x1")).is_zero());
  EXPECT_EQ(qq("x1 + 1") * qq("x1 - 1"), qq("x1^2 - 1"));
  PrimeField f5_sized(1048583);
  auto two = parse_polynomial("2*x1", vars(1), f5_sized);
  auto inv2 = parse_polynomial("1/2*x1", vars(1), f5_sized);
  EXPECT_EQ(two * inv2, parse_polynomial("x1^2", vars(1), f5_sized));
}

TEST(Arithmetic, PrimeFieldReduction) {
  // F_5 is below the supported characteristic range; emulate 6 = 1 with a
  // large prime by using p + 1.
  PrimeField f(1048583);
  auto a = parse_polynomial("2*x1", vars(1), f);
  auto b = parse_polynomial("524292*x1", vars(1), f);  // 2 * 524292 = p + 1
  EXPECT_EQ(a * b, parse_polynomial("x1^2", vars(1), f));
}

TEST(Arithmetic, MismatchedRingsThrow) {
  PrimeField f(1048583);
  PrimeField g(1048589);
  EXPECT_THROW(parse_polynomial("x1", vars(1), f) + parse_polynomial("x1", vars(1), g), RingMismatch);
  EXPECT_THROW(qq("x1", 2) * qq("x1", 3), RingMismatch);
  EXPECT_THROW(PrimeField(5), PreconditionError);
  EXPECT_THROW(PrimeField(1048584), PreconditionError);
}

TEST(Arithmetic, ScaleAndMonic) {
  auto p = qq("2*x1 + 4");
  EXPECT_EQ(p.scale(mpq_class(1, 2)), qq("x1 + 2"));
  EXPECT_EQ(p.monic(), qq("x1 + 2"));
  EXPECT_EQ(qq("-2/3*x1 + 4/5").primitive(), qq("5*x1 - 6"));
  EXPECT_TRUE(p.scale(0).is_zero());
}

TEST(MonomialOrder, Examples) {
  auto lex = MonomialOrder::lex();
  auto grevlex = MonomialOrder::degrevlex();
  EXPECT_TRUE((lex.compare({1, 0}, {0, 5})) > 0);
  EXPECT_TRUE((grevlex.compare({1, 1}, {2, 0})) < 0);
  EXPECT_EQ(testing::sign(lex.compare({3, 1}, {3, 1})), 0);
  EXPECT_EQ(testing::sign(grevlex.compare({3, 1}, {3, 1})), 0);
  EXPECT_THROW(lex.compare({1}, {1, 0}), RingMismatch);
}

TEST(MonomialOrder, DegRevLexMatchesHandEnumeration) {
  // Degree-2 monomials of K[x1,x2,x3] in descending degrevlex order,
  // enumerated by hand from the definition.
  std::vector<ExponentVector> expected{{2, 0, 0}, {1, 1, 0}, {0, 2, 0}, {1, 0, 1}, {0, 1, 1}, {0, 0, 2}};
  auto order = MonomialOrder::degrevlex();
  for (std::size_t i = 0; i < expected.size(); ++i) {
    for (std::size_t j = 0; j < expected.size(); ++j) {
      EXPECT_EQ(testing::sign(order.compare(expected[i], expected[j])), testing::sign(j <=> i)) << i << " vs " << j;
    }
  }
}

TEST(MonomialOrder, BlockOrderEliminatesLeadingVariables) {
  auto block = MonomialOrder::block(1);
  // Anything with x1 beats anything without it, regardless of degree.
  EXPECT_TRUE((block.compare({1, 0, 0}, {0, 7, 7})) > 0);
  EXPECT_TRUE((block.compare({0, 2, 0}, {0, 1, 0})) > 0);
  EXPECT_THROW(MonomialOrder::block(0), PreconditionError);
}

TEST(MonomialOrder, TotalAndMultiplicative) {
  std::mt19937_64 rng(7);
  for (auto order : {MonomialOrder::lex(), MonomialOrder::degrevlex(), MonomialOrder::block(2)}) {
    for (int trial = 0; trial < 1000; ++trial) {
      auto a = testing::random_exponents(rng, 4, 3);
      auto b = testing::random_exponents(rng, 4, 3);
      auto c = testing::random_exponents(rng, 4, 3);
      auto ab = order.compare(a, b);
      EXPECT_EQ(testing::sign(ab), -testing::sign(order.compare(b, a))) << "antisymmetry";
      EXPECT_EQ(ab == 0, a == b);
      EXPECT_EQ(testing::sign(order.compare(a * c, b * c)), testing::sign(ab)) << "multiplicative";
      EXPECT_TRUE((order.compare(ExponentVector(4), a)) <= 0) << "1 is minimal";
      if (ab < 0 && order.compare(b, c) < 0) {
        EXPECT_TRUE((order.compare(a, c)) < 0) << "transitivity";
      }
    }
  }
}

TEST(PolynomialProperties, RingAxioms) {
  std::mt19937_64 rng(11);
  Rationals qq_field;
  for (int trial = 0; trial < 200; ++trial) {
    std::size_t n = 1 + trial % 4;
    auto p = testing::random_polynomial(rng, qq_field, n, 4, 8);
    auto q = testing::random_polynomial(rng, qq_field, n, 4, 8);
    auto r = testing::random_polynomial(rng, qq_field, n, 4, 8);
    EXPECT_EQ((p + q) + r, p + (q + r));
    EXPECT_EQ(p * (q + r), p * q + p * r);
    EXPECT_EQ(p * q, q * p);
    EXPECT_TRUE((p - p).is_zero());
    auto combined = p * q - r;
    for (const auto& t : combined.terms()) {
      EXPECT_FALSE(qq_field.is_zero(t.coefficient));
      EXPECT_GT(t.coefficient.get_den(), 0);
      EXPECT_EQ(gcd(t.coefficient.get_num(), t.coefficient.get_den()), 1);
    }
  }
}

TEST(PolynomialProperties, PrintParseFixpoint) {
  std::mt19937_64 rng(13);
  Rationals qq_field;
  PrimeField fp(2147483647);
  for (int trial = 0; trial < 200; ++trial) {
    std::size_t n = 1 + trial % 4;
    auto p = testing::random_polynomial(rng, qq_field, n, 4, 8).scale(qq_field.from_fraction(trial % 5 + 1, 3));
    auto printed = p.to_string(vars(n));
    auto reparsed = parse_polynomial(printed, vars(n), qq_field);
    EXPECT_EQ(reparsed, p) << printed;
    EXPECT_EQ(reparsed.to_string(vars(n)), printed);
    auto pf = testing::random_polynomial(rng, fp, n, 4, 8);
    EXPECT_EQ(parse_polynomial(pf.to_string(vars(n)), vars(n), fp), pf);
  }
}

TEST(PolynomialProperties, TermsStayStrictlyDescending) {
  std::mt19937_64 rng(17);
  Rationals qq_field;
  for (auto order : {MonomialOrder::lex(), MonomialOrder::degrevlex()}) {
    for (int trial = 0; trial < 100; ++trial) {
      auto p = testing::random_polynomial(rng, qq_field, 3, 4, 8, 9, order);
      auto q = testing::random_polynomial(rng, qq_field, 3, 4, 8, 9, order);
      auto prod = p * q;
      for (std::size_t i = 1; i < prod.size(); ++i) {
        EXPECT_TRUE((order.compare(prod.terms()[i - 1].exponent, prod.terms()[i].exponent)) > 0);
      }
    }
  }
}

TEST(Primes, MillerRabin) {
  EXPECT_TRUE(is_prime(2));
  EXPECT_TRUE(is_prime(1048583));
  EXPECT_FALSE(is_prime(1048583ULL * 3));
  EXPECT_TRUE(is_prime(2305843009213693951ULL));
  EXPECT_FALSE(is_prime(3215031751ULL));  // strong pseudoprime to bases 2, 3, 5, 7
  EXPECT_EQ(next_prime(1048577), 1048583u);
}

}  // namespace
}  // namespace eqdeg
