#pragma once

// Elimination, ideal quotients and ideal equality on top of Buchberger.

#include <cstddef>
#include <string>
#include <vector>

#include "eqdeg/errors.hpp"
#include "eqdeg/groebner.hpp"
#include "eqdeg/ideal.hpp"
#include "eqdeg/polynomial.hpp"

namespace eqdeg {

/// Embeds `p` into a ring with `extra` new variables placed first.
template <class Field>
Polynomial<Field> prepend_variables(const Polynomial<Field>& p, std::size_t extra, MonomialOrder order) {
  std::vector<Term<Field>> terms;
  terms.reserve(p.size());
  for (const auto& t : p.terms()) {
    std::vector<std::uint32_t> e(extra, 0);
    e.insert(e.end(), t.exponent.begin(), t.exponent.end());
    terms.push_back({t.coefficient, ExponentVector::from_range(e)});
  }
  return Polynomial<Field>::from_terms(p.field(), p.num_vars() + extra, std::move(terms), order);
}

/// Restricts `p` to the variables after the first `k`; they must not occur.
template <class Field>
Polynomial<Field> drop_leading_variables(const Polynomial<Field>& p, std::size_t k, MonomialOrder order) {
  std::vector<Term<Field>> terms;
  terms.reserve(p.size());
  for (const auto& t : p.terms()) {
    for (std::size_t i = 0; i < k; ++i) {
      if (t.exponent[i] != 0) throw PreconditionError("polynomial involves an eliminated variable");
    }
    std::vector<std::uint32_t> e(t.exponent.begin() + static_cast<std::ptrdiff_t>(k), t.exponent.end());
    terms.push_back({t.coefficient, ExponentVector::from_range(e)});
  }
  return Polynomial<Field>::from_terms(p.field(), p.num_vars() - k, std::move(terms), order);
}

/// Generators of the intersection of the ideal with the subring in the last
/// n-k variables, read off a Block(k) Gröbner basis.
template <class Field>
IdealPresentation<Field> eliminate(const IdealPresentation<Field>& ideal, std::size_t k) {
  const std::size_t n = ideal.num_vars();
  if (k < 1 || k >= n) {
    throw PreconditionError("elimination needs 1 <= k < n, got k=" + std::to_string(k) + ", n=" + std::to_string(n));
  }
  auto gb = buchberger(ideal, MonomialOrder::block(k));
  std::vector<Polynomial<Field>> kept;
  for (const auto& g : gb.elements()) {
    const auto& lm = g.leading_monomial();
    bool involves = false;
    for (std::size_t i = 0; i < k; ++i) involves = involves || lm[i] != 0;
    if (!involves) kept.push_back(drop_leading_variables(g, k, MonomialOrder::degrevlex()));
  }
  std::vector<std::string> names(ideal.var_names().begin() + static_cast<std::ptrdiff_t>(k), ideal.var_names().end());
  if (kept.empty()) kept.push_back(Polynomial<Field>(ideal.field(), n - k));
  return IdealPresentation<Field>(std::move(names), std::move(kept));
}

/// Exact quotient h / f; throws if f does not divide h.
template <class Field>
Polynomial<Field> exact_divide(const Polynomial<Field>& h, const Polynomial<Field>& f) {
  if (f.is_zero()) throw PreconditionError("division by the zero polynomial");
  const Field& field = h.field();
  Polynomial<Field> rest = h.with_order(f.order());
  std::vector<Term<Field>> quotient;
  while (!rest.is_zero()) {
    const auto& lt = rest.leading_term();
    if (!f.leading_monomial().divides(lt.exponent)) throw Error("exact division failed: divisor does not divide");
    auto c = field.div(lt.coefficient, f.leading_coefficient());
    auto e = f.leading_monomial().quotient_of(lt.exponent);
    quotient.push_back({c, e});
    rest = rest.reduce_by(field.one(), c, e, f);
  }
  return Polynomial<Field>::from_terms(field, f.num_vars(), std::move(quotient), f.order());
}

/// (a : f) = {g : g*f in a}. Computes a ∩ (f) by eliminating t from
/// t*a + (1-t)*f, then divides each generator by f.
template <class Field>
IdealPresentation<Field> ideal_quotient(const IdealPresentation<Field>& a, const Polynomial<Field>& f) {
  if (f.is_zero()) throw PreconditionError("ideal quotient by the zero polynomial");
  if (f.num_vars() != a.num_vars() || !(f.field() == a.field())) {
    throw RingMismatch("quotient polynomial lives in a different ring");
  }
  const Field& field = a.field();
  const std::size_t n = a.num_vars();
  const auto order = MonomialOrder::degrevlex();
  auto t = Polynomial<Field>::variable(field, n + 1, 0, order);
  auto one = Polynomial<Field>::constant(field, n + 1, field.one(), order);

  std::vector<Polynomial<Field>> gens;
  for (const auto& g : a.generators()) {
    if (!g.is_zero()) gens.push_back(t * prepend_variables(g, 1, order));
  }
  if (gens.empty()) return IdealPresentation<Field>(a.var_names(), {Polynomial<Field>(field, n)});
  gens.push_back((one - t) * prepend_variables(f, 1, order));

  std::vector<std::string> names{"_t"};
  names.insert(names.end(), a.var_names().begin(), a.var_names().end());
  auto intersection = eliminate(IdealPresentation<Field>(std::move(names), std::move(gens)), 1);

  std::vector<Polynomial<Field>> quotient;
  auto f_sorted = f.with_order(order);
  for (const auto& h : intersection.generators()) {
    if (h.is_zero()) continue;
    quotient.push_back(exact_divide(h, f_sorted));
  }
  if (quotient.empty()) quotient.push_back(Polynomial<Field>(field, n));
  return IdealPresentation<Field>(a.var_names(), std::move(quotient));
}

/// Equality of ideals via their reduced DegRevLex bases.
template <class Field>
bool ideal_equal(const IdealPresentation<Field>& a, const IdealPresentation<Field>& b) {
  if (a.var_names() != b.var_names()) throw RingMismatch("ideals over different variables");
  if (!(a.field() == b.field())) throw RingMismatch("ideals over different fields");
  const auto order = MonomialOrder::degrevlex();
  return buchberger(a, order) == buchberger(b, order);
}

template <class Field>
IdealPresentation<Field> to_ideal(const GroebnerBasis<Field>& gb, std::vector<std::string> var_names) {
  std::vector<Polynomial<Field>> gens = gb.elements();
  if (gens.empty()) gens.push_back(Polynomial<Field>(gb.field(), gb.num_vars(), gb.order()));
  return IdealPresentation<Field>(std::move(var_names), std::move(gens));
}

}  // namespace eqdeg
