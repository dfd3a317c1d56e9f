#include <gtest/gtest.h>

#include <random>
#include <string>
#include <vector>

#include "eqdeg/hilbert.hpp"
#include "test_support.hpp"

namespace eqdeg {
namespace {

using testing::qq;
using testing::qq_ideal;
using testing::vars;

// Test oracle: number of degree-s monomials in n variables outside the
// monomial ideal, by enumeration.
std::int64_t hilbert_function(const std::vector<ExponentVector>& gens, std::size_t n, std::uint32_t s) {
  std::int64_t count = 0;
  ExponentVector cur(n);
  auto walk = [&](auto&& self, std::size_t var, std::uint32_t left) -> void {
    if (var + 1 == n) {
      cur.set(var, left);
      bool inside = std::any_of(gens.begin(), gens.end(), [&](const ExponentVector& g) { return g.divides(cur); });
      count += inside ? 0 : 1;
      return;
    }
    for (std::uint32_t e = 0; e <= left; ++e) {
      cur.set(var, e);
      self(self, var + 1, left - e);
    }
    cur.set(var, 0);
  };
  walk(walk, 0, s);
  return count;
}

// Coefficient of t^s in h(t)/(1-t)^n.
std::int64_t series_coefficient(const SeriesNumerator& h, std::size_t n, std::uint32_t s) {
  auto binom = [](std::int64_t top, std::int64_t k) {
    if (k < 0 || top < k) return std::int64_t{0};
    std::int64_t r = 1;
    for (std::int64_t i = 1; i <= k; ++i) r = r * (top - k + i) / i;
    return r;
  };
  std::int64_t total = 0;
  for (std::size_t i = 0; i < h.size() && i <= s; ++i) {
    total += h[i] * binom(static_cast<std::int64_t>(s - i + n - 1), static_cast<std::int64_t>(n - 1));
  }
  return total;
}

TEST(Homogenize, Examples) {
  auto names = vars(2);
  auto lifted = [&](const std::vector<std::string>& gens) {
    auto h = homogenize_basis(buchberger(qq_ideal(gens)), names);
    std::vector<std::string> out;
    for (const auto& g : h.generators()) out.push_back(g.to_string(h.var_names()));
    return out;
  };
  EXPECT_EQ(lifted({"x1^2 - 1"}), (std::vector<std::string>{"x1^2 - x0^2"}));
  EXPECT_EQ(lifted({"x1^3", "x1^2*x2"}), (std::vector<std::string>{"x1^2*x2", "x1^3"}));
  EXPECT_EQ(lifted({"x2 - x1^2"}), (std::vector<std::string>{"x1^2 - x2*x0"}));
  auto h = homogenize_basis(buchberger(qq_ideal({"x1"})), names);
  EXPECT_EQ(h.var_names(), (std::vector<std::string>{"x1", "x2", "x0"}));
}

TEST(Homogenize, RejectsNonDegreeOrders) {
  auto gb = buchberger(qq_ideal({"x1^2 - x2"}), MonomialOrder::lex());
  EXPECT_THROW(homogenize_basis(gb, vars(2)), PreconditionError);
}

TEST(Homogenize, FreshNameAvoidsClashes) {
  EXPECT_EQ(homogenizing_name({"x0", "x1"}), "x0_");
}

TEST(Homogenize, ResultIsAGroebnerBasis) {
  for (const auto& gens : std::vector<std::vector<std::string>>{
           {"x1^2 + x2^2 - 1", "x1*x2 - 1"}, {"x2 - x1^2", "x3 - x1^3"}, {"x1*x2*x3 - 1", "x1 + x2"}}) {
    auto h = homogenize_basis(buchberger(qq_ideal(gens, 3)), vars(3));
    auto direct = buchberger(h);
    std::vector<Polynomial<Rationals>> els;
    for (const auto& g : h.generators()) els.push_back(g.monic());
    GroebnerBasis<Rationals> candidate(Rationals{}, 4, MonomialOrder::degrevlex(), els);
    EXPECT_TRUE(satisfies_buchberger_criterion(candidate));
    EXPECT_EQ(direct.staircase().leading_exponents, candidate.staircase().leading_exponents);
  }
}

TEST(HilbertNumerator, Examples) {
  Staircase cex{3, {{0, 3, 0}, {0, 2, 1}}};
  EXPECT_EQ(hilbert_numerator(cex), (SeriesNumerator{1, 0, 0, -2, 1}));
  EXPECT_EQ(hilbert_numerator(Staircase{3, {}}), (SeriesNumerator{1}));
  EXPECT_EQ(hilbert_numerator(Staircase{2, {{1, 0}}}), (SeriesNumerator{1, -1}));
}

TEST(HilbertNumerator, MatchesEnumeratedHilbertFunction) {
  std::mt19937_64 rng(41);
  for (int trial = 0; trial < 60; ++trial) {
    std::size_t n = 2 + trial % 3;
    std::vector<ExponentVector> gens;
    int count = 1 + trial % 5;
    for (int k = 0; k < count; ++k) {
      auto e = testing::random_exponents(rng, n, 3);
      if (!e.is_one()) gens.push_back(e);
    }
    auto h = hilbert_numerator(Staircase{n, gens});
    for (std::uint32_t s = 0; s <= 10; ++s) {
      EXPECT_EQ(series_coefficient(h, n, s), hilbert_function(gens, n, s)) << "trial " << trial << " degree " << s;
    }
  }
}

TEST(HilbertNumerator, VanishesAtOneForPositiveDimension) {
  // (x1^2, x1*x2) in 3 variables has a 2-dimensional quotient.
  auto h = hilbert_numerator(Staircase{3, {{2, 0, 0}, {1, 1, 0}}});
  std::int64_t at_one = 0;
  for (auto c : h) at_one += c;
  EXPECT_EQ(at_one, 0);
  auto data = hilbert_data(h, 2);
  EXPECT_EQ(data.projective_dimension, 1);
}

TEST(HilbertData, FactorisationInvariant) {
  std::mt19937_64 rng(43);
  for (int trial = 0; trial < 40; ++trial) {
    std::size_t n = 2 + trial % 3;
    std::vector<ExponentVector> gens;
    for (int k = 0; k < 3; ++k) {
      auto e = testing::random_exponents(rng, n + 1, 3);
      if (!e.is_one()) gens.push_back(e);
    }
    auto data = hilbert_data(hilbert_numerator(Staircase{n + 1, gens}), n);
    SeriesNumerator rebuilt = data.reduced_numerator;
    for (long k = 0; k < static_cast<long>(n) - data.projective_dimension; ++k) {
      rebuilt = detail::times_one_minus_power(rebuilt, 1);
    }
    detail::trim(rebuilt);
    EXPECT_EQ(rebuilt, data.numerator);
    EXPECT_GT(data.degree, 0);
  }
}

TEST(Oracle, Examples) {
  auto r = hilbert_degree_oracle(qq_ideal({"x1^2"}));
  EXPECT_EQ(r.affine_dimension, 1);
  EXPECT_EQ(r.degree, 2);
  EXPECT_EQ(r.hilbert.numerator, (SeriesNumerator{1, 0, -1}));

  r = hilbert_degree_oracle(qq_ideal({"x1^3", "x1^2*x2"}));
  EXPECT_EQ(r.affine_dimension, 1);
  EXPECT_EQ(r.degree, 2);
  EXPECT_EQ(r.hilbert.numerator, (SeriesNumerator{1, 0, 0, -2, 1}));
  EXPECT_EQ(r.hilbert.reduced_numerator, (SeriesNumerator{1, 1, 1, -1}));

  r = hilbert_degree_oracle(qq_ideal({"x1^2 - 1", "x2^2 - 1"}));
  EXPECT_EQ(r.affine_dimension, 0);
  EXPECT_EQ(r.degree, 4);

  EXPECT_THROW(hilbert_degree_oracle(qq_ideal({"x1", "x1 - 1"})), PreconditionError);
}

TEST(Oracle, PrincipalIdealDegreeIsTotalDegree) {
  std::mt19937_64 rng(47);
  Rationals field;
  int checked = 0;
  while (checked < 20) {
    std::size_t n = 1 + checked % 3;
    auto g = testing::random_polynomial(rng, field, n, 4, 6, 7);
    if (g.total_degree() < 1) continue;
    auto r = hilbert_degree_oracle(IdealPresentation<Rationals>(vars(n), {g}));
    EXPECT_EQ(r.degree, g.total_degree()) << g.to_string(vars(n));
    EXPECT_EQ(r.affine_dimension, static_cast<long>(n) - 1);
    ++checked;
  }
}

}  // namespace
}  // namespace eqdeg
