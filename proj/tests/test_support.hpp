#pragma once

#include <compare>
#include <cstdint>
#include <ostream>
#include <random>
#include <string>
#include <vector>

#include "eqdeg/parse.hpp"
#include "eqdeg/polynomial.hpp"

namespace eqdeg::testing {

inline int sign(std::strong_ordering o) { return o < 0 ? -1 : (o > 0 ? 1 : 0); }

inline std::vector<std::string> vars(std::size_t n) {
  std::vector<std::string> v;
  for (std::size_t i = 1; i <= n; ++i) v.push_back("x" + std::to_string(i));
  return v;
}

inline Polynomial<Rationals> qq(const std::string& text, std::size_t n = 2,
                                MonomialOrder order = MonomialOrder::degrevlex()) {
  return parse_polynomial(text, vars(n), Rationals{}, order);
}

inline IdealPresentation<Rationals> qq_ideal(const std::vector<std::string>& gens, std::size_t n = 2,
                                             std::optional<std::size_t> dim = std::nullopt) {
  std::vector<Polynomial<Rationals>> polys;
  for (const auto& g : gens) polys.push_back(qq(g, n));
  return IdealPresentation<Rationals>(vars(n), polys, dim);
}

template <class Field>
Polynomial<Field> random_polynomial(std::mt19937_64& rng, const Field& field, std::size_t n, unsigned max_degree,
                                    unsigned max_terms, long coeff_bound = 9,
                                    MonomialOrder order = MonomialOrder::degrevlex()) {
  std::uniform_int_distribution<unsigned> term_count(0, max_terms);
  std::uniform_int_distribution<long> coeff(-coeff_bound, coeff_bound);
  std::uniform_int_distribution<unsigned> var(0, static_cast<unsigned>(n - 1));
  std::uniform_int_distribution<unsigned> degree(0, max_degree);
  std::vector<Term<Field>> terms;
  unsigned count = term_count(rng);
  for (unsigned k = 0; k < count; ++k) {
    ExponentVector e(n);
    unsigned d = degree(rng);
    for (unsigned s = 0; s < d; ++s) {
      auto v = var(rng);
      e.set(v, e[v] + 1);
    }
    terms.push_back({field.from_int(coeff(rng)), e});
  }
  return Polynomial<Field>::from_terms(field, n, std::move(terms), order);
}

inline ExponentVector random_exponents(std::mt19937_64& rng, std::size_t n, unsigned max_exp) {
  std::uniform_int_distribution<unsigned> d(0, max_exp);
  ExponentVector e(n);
  for (std::size_t i = 0; i < n; ++i) e.set(i, d(rng));
  return e;
}

}  // namespace eqdeg::testing

namespace eqdeg {

template <class Field>
void PrintTo(const Polynomial<Field>& p, std::ostream* os) {
  *os << p.to_string(testing::vars(p.num_vars()));
}

}  // namespace eqdeg
