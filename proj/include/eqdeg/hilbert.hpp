#pragma once

// Hilbert-series degree oracle: homogenize a degree-compatible Gröbner
// basis, take its leading-term ideal, and read dimension and degree off the
// numerator of the Hilbert series. Shares nothing with the random-cut
// degree computation except the Gröbner basis itself.

#include <algorithm>
#include <cstddef>
#include <cstdint>
#include <string>
#include <vector>

#include "eqdeg/errors.hpp"
#include "eqdeg/groebner.hpp"
#include "eqdeg/ideal.hpp"
#include "eqdeg/polynomial.hpp"

namespace eqdeg {

/// Integer polynomial in t, lowest degree first.
using SeriesNumerator = std::vector<std::int64_t>;

struct HilbertData {
  SeriesNumerator numerator;          ///< h(t), over (1-t)^(n+1) in the homogenized ring
  SeriesNumerator reduced_numerator;  ///< g(t) = h(t) / (1-t)^(n-d), g(1) != 0
  long projective_dimension = 0;      ///< d
  std::int64_t degree = 0;            ///< g(1)
};

/// Name for the homogenizing variable that does not clash with `names`.
inline std::string homogenizing_name(const std::vector<std::string>& names) {
  std::string h = "x0";
  while (std::find(names.begin(), names.end(), h) != names.end()) h += "_";
  return h;
}

/// Homogenizes each basis element with a fresh variable appended last.
/// Under DegRevLex with that variable smallest, leading monomials are
/// unchanged and the result is a Gröbner basis of the homogenized ideal.
template <class Field>
IdealPresentation<Field> homogenize_basis(const GroebnerBasis<Field>& gb, const std::vector<std::string>& var_names) {
  if (!gb.order().is_degree_compatible()) {
    throw PreconditionError("homogenization needs a basis under a degree-compatible order, got " + gb.order().name());
  }
  if (var_names.size() != gb.num_vars()) throw RingMismatch("variable name count differs from the basis");
  const std::size_t n = gb.num_vars();
  std::vector<std::string> names = var_names;
  names.push_back(homogenizing_name(var_names));
  std::vector<Polynomial<Field>> gens;
  for (const auto& g : gb.elements()) {
    const auto top = static_cast<std::uint64_t>(g.total_degree());
    std::vector<Term<Field>> terms;
    for (const auto& t : g.terms()) {
      std::vector<std::uint64_t> e(t.exponent.begin(), t.exponent.end());
      e.push_back(top - t.exponent.total_degree());
      terms.push_back({t.coefficient, ExponentVector::from_range(e)});
    }
    gens.push_back(Polynomial<Field>::from_terms(gb.field(), n + 1, std::move(terms), MonomialOrder::degrevlex()));
  }
  if (gens.empty()) gens.push_back(Polynomial<Field>(gb.field(), n + 1));
  return IdealPresentation<Field>(std::move(names), std::move(gens));
}

namespace detail {

inline std::vector<ExponentVector> minimalize(std::vector<ExponentVector> gens) {
  std::sort(gens.begin(), gens.end(),
            [](const ExponentVector& a, const ExponentVector& b) { return a.total_degree() < b.total_degree(); });
  std::vector<ExponentVector> out;
  for (auto& g : gens) {
    bool redundant = std::any_of(out.begin(), out.end(), [&](const ExponentVector& m) { return m.divides(g); });
    if (!redundant) out.push_back(std::move(g));
  }
  return out;
}

inline SeriesNumerator series_add(SeriesNumerator a, const SeriesNumerator& b, std::size_t shift) {
  if (a.size() < b.size() + shift) a.resize(b.size() + shift, 0);
  for (std::size_t i = 0; i < b.size(); ++i) a[i + shift] += b[i];
  return a;
}

// Multiplies by (1 - t^a).
inline SeriesNumerator times_one_minus_power(const SeriesNumerator& h, std::size_t a) {
  SeriesNumerator r = h;
  r.resize(h.size() + a, 0);
  for (std::size_t i = 0; i < h.size(); ++i) r[i + a] -= h[i];
  return r;
}

inline void trim(SeriesNumerator& h) {
  while (h.size() > 1 && h.back() == 0) h.pop_back();
}

inline SeriesNumerator monomial_numerator(std::vector<ExponentVector> gens, std::size_t num_vars) {
  if (gens.empty()) return {1};
  for (const auto& g : gens) {
    if (g.is_one()) return {0};
  }
  bool pairwise_coprime = true;
  for (std::size_t i = 0; i < gens.size() && pairwise_coprime; ++i) {
    for (std::size_t j = i + 1; j < gens.size() && pairwise_coprime; ++j) {
      pairwise_coprime = coprime(gens[i], gens[j]);
    }
  }
  if (pairwise_coprime) {
    SeriesNumerator h{1};
    for (const auto& g : gens) h = times_one_minus_power(h, g.total_degree());
    return h;
  }
  // Pivot on the variable occurring in the most generators.
  std::size_t pivot = 0;
  std::size_t best = 0;
  for (std::size_t v = 0; v < num_vars; ++v) {
    std::size_t freq = 0;
    for (const auto& g : gens) freq += g[v] != 0 ? 1 : 0;
    if (freq > best) {
      best = freq;
      pivot = v;
    }
  }
  // The smallest positive exponent of the pivot keeps x^a outside the ideal
  // whenever the pivot occurs in two or more minimal generators.
  std::uint32_t a = 0;
  for (const auto& g : gens) {
    if (g[pivot] != 0 && (a == 0 || g[pivot] < a)) a = g[pivot];
  }
  auto power = ExponentVector::unit(num_vars, pivot, a);

  std::vector<ExponentVector> sum = gens;
  sum.push_back(power);
  std::vector<ExponentVector> colon;
  for (const auto& g : gens) {
    ExponentVector c = g;
    c.set(pivot, g[pivot] > a ? g[pivot] - a : 0);
    colon.push_back(c);
  }
  // h(M) = h(M + (x^a)) + t^a h(M : x^a)
  auto h = series_add(monomial_numerator(minimalize(std::move(sum)), num_vars),
                      monomial_numerator(minimalize(std::move(colon)), num_vars), a);
  trim(h);
  return h;
}

}  // namespace detail

/// Numerator h(t) of the Hilbert series h(t)/(1-t)^num_vars of the quotient
/// by a monomial ideal.
inline SeriesNumerator hilbert_numerator(const Staircase& staircase) {
  for (const auto& g : staircase.leading_exponents) {
    if (g.size() != staircase.num_vars) throw RingMismatch("staircase exponent length differs from num_vars");
  }
  auto h = detail::monomial_numerator(detail::minimalize(staircase.leading_exponents), staircase.num_vars);
  detail::trim(h);
  return h;
}

/// Splits h(t) = g(t) (1-t)^k with g(1) != 0 and fills in dimension/degree
/// for a ring in `num_vars` affine variables (num_vars + 1 homogeneous ones).
inline HilbertData hilbert_data(SeriesNumerator numerator, std::size_t num_vars) {
  HilbertData data;
  data.numerator = numerator;
  SeriesNumerator g = std::move(numerator);
  long k = 0;
  auto value_at_one = [](const SeriesNumerator& s) {
    std::int64_t v = 0;
    for (auto c : s) v += c;
    return v;
  };
  if (std::all_of(g.begin(), g.end(), [](std::int64_t c) { return c == 0; })) {
    throw PreconditionError("the Hilbert series of the unit ideal has no degree");
  }
  while (value_at_one(g) == 0) {
    // Synthetic division by (1 - t): q_i = sum_{j<=i} g_j.
    SeriesNumerator q(g.size() - 1);
    std::int64_t acc = 0;
    for (std::size_t i = 0; i + 1 < g.size(); ++i) {
      acc += g[i];
      q[i] = acc;
    }
    g = std::move(q);
    detail::trim(g);
    ++k;
  }
  data.reduced_numerator = g;
  data.projective_dimension = static_cast<long>(num_vars) - k;
  data.degree = value_at_one(g);
  return data;
}

struct OracleResult {
  long affine_dimension = 0;
  std::int64_t degree = 0;
  HilbertData hilbert;
};

/// Dimension and degree of the ideal from the Hilbert series of its
/// homogenization.
template <class Field>
OracleResult hilbert_degree_oracle(const IdealPresentation<Field>& ideal) {
  auto gb = buchberger(ideal, MonomialOrder::degrevlex());
  if (gb.is_unit()) throw PreconditionError("the unit ideal has no degree");
  auto homogenized = homogenize_basis(gb, ideal.var_names());
  Staircase staircase{ideal.num_vars() + 1, {}};
  for (const auto& g : homogenized.generators()) {
    if (!g.is_zero()) staircase.leading_exponents.push_back(g.leading_monomial());
  }
  auto data = hilbert_data(hilbert_numerator(staircase), ideal.num_vars());
  return {data.projective_dimension, data.degree, data};
}

}  // namespace eqdeg
