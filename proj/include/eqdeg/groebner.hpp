#pragma once

// Buchberger's algorithm with Gebauer-Möller pair pruning and the normal
// selection strategy, plus the combinatorial queries on the resulting
// leading-term ideal.

#include <algorithm>
#include <cstddef>
#include <cstdint>
#include <optional>
#include <span>
#include <utility>
#include <vector>

#include "eqdeg/errors.hpp"
#include "eqdeg/ideal.hpp"
#include "eqdeg/monomial.hpp"
#include "eqdeg/polynomial.hpp"

namespace eqdeg {

/// Minimal generators of a monomial ideal, an antichain under divisibility.
struct Staircase {
  std::size_t num_vars = 0;
  std::vector<ExponentVector> leading_exponents;
};

/// Reduced Gröbner basis: monic, inter-reduced, sorted by ascending
/// leading monomial. The unit ideal is {1}; the zero ideal has no elements.
template <class Field>
class GroebnerBasis {
public:
  using Poly = Polynomial<Field>;

  GroebnerBasis(Field field, std::size_t num_vars, MonomialOrder order, std::vector<Poly> elements)
      : field_(std::move(field)), num_vars_(num_vars), order_(order), elements_(std::move(elements)) {
    std::sort(elements_.begin(), elements_.end(), [this](const Poly& a, const Poly& b) {
      return order_.less(a.leading_monomial(), b.leading_monomial());
    });
  }

  const Field& field() const { return field_; }
  std::size_t num_vars() const { return num_vars_; }
  const MonomialOrder& order() const { return order_; }
  const std::vector<Poly>& elements() const { return elements_; }
  std::size_t size() const { return elements_.size(); }

  bool is_unit() const { return elements_.size() == 1 && elements_.front().is_constant(); }
  bool is_zero_ideal() const { return elements_.empty(); }

  Staircase staircase() const {
    Staircase s{num_vars_, {}};
    for (const auto& g : elements_) s.leading_exponents.push_back(g.leading_monomial());
    return s;
  }

  friend bool operator==(const GroebnerBasis& a, const GroebnerBasis& b) {
    return a.field_ == b.field_ && a.num_vars_ == b.num_vars_ && a.order_ == b.order_ &&
           a.elements_ == b.elements_;
  }

private:
  Field field_;
  std::size_t num_vars_;
  MonomialOrder order_;
  std::vector<Poly> elements_;
};

namespace detail {

inline void remove_common_content(Polynomial<Rationals>& a, Polynomial<Rationals>& b) {
  mpz_class g = 0;
  for (const auto* p : {&a, &b}) {
    for (const auto& t : p->terms()) {
      if (t.coefficient.get_den() != 1) return;
      g = gcd(g, t.coefficient.get_num());
      if (g == 1) return;
    }
  }
  if (g <= 1) return;
  mpq_class factor(mpz_class(1), g);
  a = a.scale(factor);
  b = b.scale(factor);
}

/// Full reduction of `p` by `divisors`. With `fraction_free` set (rationals
/// only) the result is a nonzero scalar multiple of the normal form.
template <class Field>
Polynomial<Field> reduce(const Polynomial<Field>& p, std::span<const Polynomial<Field>* const> divisors,
                         bool fraction_free) {
  const Field& field = p.field();
  Polynomial<Field> cur = p;
  Polynomial<Field> rem(field, p.num_vars(), p.order());
  while (!cur.is_zero()) {
    const auto& lt = cur.leading_term();
    const Polynomial<Field>* hit = nullptr;
    for (const auto* g : divisors) {
      if (g->leading_monomial().divides(lt.exponent)) {
        hit = g;
        break;
      }
    }
    if (hit == nullptr) {
      rem.append_lower_term(lt);
      cur = cur.tail();
      continue;
    }
    auto quotient = hit->leading_monomial().quotient_of(lt.exponent);
    if (fraction_free) {
      auto [a, b] = field.reduction_multipliers(hit->leading_coefficient(), lt.coefficient);
      cur = cur.reduce_by(a, b, quotient, *hit);
      if (!field.is_one(a)) {
        rem = rem.scale(a);
        if constexpr (std::is_same_v<Field, Rationals>) remove_common_content(cur, rem);
      }
    } else {
      auto b = field.div(lt.coefficient, hit->leading_coefficient());
      cur = cur.reduce_by(field.one(), b, quotient, *hit);
    }
  }
  return rem;
}

template <class Field>
Polynomial<Field> spolynomial_raw(const Polynomial<Field>& f, const Polynomial<Field>& g) {
  const Field& field = f.field();
  auto l = lcm(f.leading_monomial(), g.leading_monomial());
  auto uf = f.leading_monomial().quotient_of(l);
  auto ug = g.leading_monomial().quotient_of(l);
  auto left = f.mul_term(g.leading_coefficient(), uf);
  return left.reduce_by(field.one(), f.leading_coefficient(), ug, g);
}

template <class Field>
void check_ring(const Polynomial<Field>& p, const GroebnerBasis<Field>& gb) {
  if (!(p.field() == gb.field())) throw RingMismatch("polynomial and basis over different fields");
  if (p.num_vars() != gb.num_vars()) throw RingMismatch("polynomial and basis in different numbers of variables");
}

}  // namespace detail

/// Remainder of `p` on division by the basis; no term of the result is
/// divisible by a leading monomial of `gb`. The result uses the basis order.
template <class Field>
Polynomial<Field> normal_form(const Polynomial<Field>& p, const GroebnerBasis<Field>& gb) {
  detail::check_ring(p, gb);
  std::vector<const Polynomial<Field>*> divisors;
  for (const auto& g : gb.elements()) divisors.push_back(&g);
  return detail::reduce<Field>(p.with_order(gb.order()), divisors, false);
}

template <class Field>
bool contains(const GroebnerBasis<Field>& gb, const Polynomial<Field>& p) {
  return normal_form(p, gb).is_zero();
}

/// S-polynomial of two nonzero polynomials sorted under the same order.
template <class Field>
Polynomial<Field> spolynomial(const Polynomial<Field>& f, const Polynomial<Field>& g) {
  f.check_compatible(g);
  return detail::spolynomial_raw(f.monic(), g.monic());
}

/// Buchberger's criterion checked directly: every S-polynomial of the basis
/// reduces to zero.
template <class Field>
bool satisfies_buchberger_criterion(const GroebnerBasis<Field>& gb) {
  const auto& els = gb.elements();
  for (std::size_t i = 0; i < els.size(); ++i) {
    for (std::size_t j = i + 1; j < els.size(); ++j) {
      if (!normal_form(spolynomial(els[i], els[j]), gb).is_zero()) return false;
    }
  }
  return true;
}

namespace detail {

template <class Field>
class BuchbergerState {
public:
  using Poly = Polynomial<Field>;

  BuchbergerState(const Field& field, std::size_t num_vars, MonomialOrder order)
      : field_(field), num_vars_(num_vars), order_(order) {}

  // Returns false once a constant is found (the unit ideal).
  bool insert(const Poly& p) {
    Poly h = reduce_active(p);
    if (h.is_zero()) return true;
    if (h.is_constant()) return false;
    update(std::move(h));
    return true;
  }

  bool run() {
    while (!pairs_.empty()) {
      auto best = std::min_element(pairs_.begin(), pairs_.end(),
                                   [this](const Pair& a, const Pair& b) { return selects_before(a, b); });
      Pair pair = *best;
      pairs_.erase(best);
      Poly s = spolynomial_raw(polys_[pair.i], polys_[pair.j]);
      if (!insert(s)) return false;
    }
    return true;
  }

  std::vector<Poly> reduced_basis() const {
    std::vector<Poly> basis;
    for (std::size_t idx : active_) basis.push_back(polys_[idx]);
    for (std::size_t k = 0; k < basis.size(); ++k) {
      std::vector<const Poly*> others;
      for (std::size_t l = 0; l < basis.size(); ++l) {
        if (l != k) others.push_back(&basis[l]);
      }
      basis[k] = reduce<Field>(basis[k], others, false).monic();
    }
    return basis;
  }

private:
  struct Pair {
    std::size_t i;
    std::size_t j;
    ExponentVector lcm;
  };

  bool selects_before(const Pair& a, const Pair& b) const {
    if (a.lcm.total_degree() != b.lcm.total_degree()) return a.lcm.total_degree() < b.lcm.total_degree();
    auto c = order_.compare(a.lcm, b.lcm);
    if (c != 0) return c < 0;
    return std::pair(a.i, a.j) < std::pair(b.i, b.j);
  }

  Poly reduce_active(const Poly& p) const {
    std::vector<const Poly*> divisors;
    for (std::size_t idx : active_) divisors.push_back(&polys_[idx]);
    return reduce<Field>(p, divisors, Field::kFractionFree).primitive();
  }

  // Gebauer-Möller update for a new basis element h.
  void update(Poly h) {
    const std::size_t hi = polys_.size();
    polys_.push_back(std::move(h));
    const ExponentVector& lh = polys_[hi].leading_monomial();

    std::vector<Pair> candidates;
    for (std::size_t g : active_) candidates.push_back({g, hi, lcm(polys_[g].leading_monomial(), lh)});

    std::vector<Pair> kept;
    for (std::size_t c = 0; c < candidates.size(); ++c) {
      const Pair& p = candidates[c];
      bool keep = coprime(polys_[p.i].leading_monomial(), lh);
      if (!keep) {
        keep = true;
        for (std::size_t d = c + 1; d < candidates.size() && keep; ++d) {
          if (candidates[d].lcm.divides(p.lcm)) keep = false;
        }
        for (const Pair& q : kept) {
          if (q.lcm.divides(p.lcm)) {
            keep = false;
            break;
          }
        }
      }
      if (keep) kept.push_back(p);
    }

    std::vector<Pair> next;
    for (const Pair& p : pairs_) {
      bool drop = lh.divides(p.lcm) && !(lcm(polys_[p.i].leading_monomial(), lh) == p.lcm) &&
                  !(lcm(polys_[p.j].leading_monomial(), lh) == p.lcm);
      if (!drop) next.push_back(p);
    }
    for (const Pair& p : kept) {
      if (!coprime(polys_[p.i].leading_monomial(), lh)) next.push_back(p);
    }
    pairs_ = std::move(next);

    std::vector<std::size_t> active;
    for (std::size_t g : active_) {
      if (!lh.divides(polys_[g].leading_monomial())) active.push_back(g);
    }
    active.push_back(hi);
    active_ = std::move(active);
  }

  Field field_;
  std::size_t num_vars_;
  MonomialOrder order_;
  std::vector<Poly> polys_;
  std::vector<std::size_t> active_;
  std::vector<Pair> pairs_;
};

}  // namespace detail

/// Reduced Gröbner basis of the ideal under `order`. The unit ideal gives
/// {1} and the zero ideal gives the empty basis.
template <class Field>
GroebnerBasis<Field> buchberger(const IdealPresentation<Field>& ideal,
                                MonomialOrder order = MonomialOrder::degrevlex()) {
  const Field& field = ideal.field();
  const std::size_t n = ideal.num_vars();
  std::vector<Polynomial<Field>> gens;
  for (const auto& g : ideal.generators()) {
    if (!g.is_zero()) gens.push_back(g.with_order(order).primitive());
  }
  std::sort(gens.begin(), gens.end(), [&](const auto& a, const auto& b) {
    return order.less(a.leading_monomial(), b.leading_monomial());
  });
  auto unit = [&] {
    return GroebnerBasis<Field>(field, n, order,
                                {Polynomial<Field>::constant(field, n, field.one(), order)});
  };
  detail::BuchbergerState<Field> state(field, n, order);
  for (const auto& g : gens) {
    if (!state.insert(g)) return unit();
  }
  if (!state.run()) return unit();
  return GroebnerBasis<Field>(field, n, order, state.reduced_basis());
}

/// True iff every variable has a pure power among the leading monomials.
/// The unit ideal counts as zero-dimensional (with an empty quotient).
template <class Field>
bool is_zero_dimensional(const GroebnerBasis<Field>& gb) {
  if (gb.is_unit()) return true;
  std::vector<bool> seen(gb.num_vars(), false);
  for (const auto& g : gb.elements()) {
    std::size_t v = g.leading_monomial().pure_power_variable();
    if (v < gb.num_vars()) seen[v] = true;
  }
  return std::all_of(seen.begin(), seen.end(), [](bool b) { return b; });
}

/// Number of monomials outside a monomial ideal, or nullopt when infinite.
inline std::optional<std::uint64_t> standard_monomial_count(const Staircase& staircase) {
  const std::size_t n = staircase.num_vars;
  const auto& gens = staircase.leading_exponents;
  for (const auto& g : gens) {
    if (g.is_one()) return 0;
  }
  std::vector<std::uint32_t> bound(n, 0);
  for (const auto& g : gens) {
    std::size_t v = g.pure_power_variable();
    if (v < n && (bound[v] == 0 || g[v] < bound[v])) bound[v] = g[v];
  }
  for (auto b : bound) {
    if (b == 0) return std::nullopt;
  }
  std::uint64_t count = 0;
  ExponentVector cur(n);
  auto divisible = [&] {
    return std::any_of(gens.begin(), gens.end(), [&](const ExponentVector& g) { return g.divides(cur); });
  };
  // Depth-first over the bounding box; once x^e is in the ideal, so is
  // every larger power in the same position.
  auto walk = [&](auto&& self, std::size_t var) -> void {
    if (var == n) {
      ++count;
      return;
    }
    for (std::uint32_t e = 0; e < bound[var]; ++e) {
      cur.set(var, e);
      if (divisible()) break;
      self(self, var + 1);
    }
    cur.set(var, 0);
  };
  walk(walk, 0);
  return count;
}

/// K-dimension of the quotient ring; nullopt when it is infinite.
template <class Field>
std::optional<std::uint64_t> standard_monomial_count(const GroebnerBasis<Field>& gb) {
  if (gb.is_unit()) return 0;
  return standard_monomial_count(gb.staircase());
}

/// Krull dimension of the quotient of a monomial ideal: the size of the
/// largest variable set containing the support of no generator. Returns -1
/// when the ideal is the whole ring.
inline long krull_dimension(const Staircase& staircase) {
  const std::size_t n = staircase.num_vars;
  if (n > 64) throw PreconditionError("dimension queries support at most 64 variables");
  std::vector<std::uint64_t> supports;
  for (const auto& g : staircase.leading_exponents) {
    if (g.is_one()) return -1;
    std::uint64_t mask = 0;
    for (std::size_t i = 0; i < n; ++i) {
      if (g[i] != 0) mask |= std::uint64_t{1} << i;
    }
    supports.push_back(mask);
  }
  long best = 0;
  auto independent = [&](std::uint64_t set) {
    return std::none_of(supports.begin(), supports.end(), [&](std::uint64_t s) { return (s & ~set) == 0; });
  };
  auto search = [&](auto&& self, std::size_t var, std::uint64_t set, long size) -> void {
    if (size + static_cast<long>(n - var) <= best) return;
    if (var == n) {
      best = size;
      return;
    }
    std::uint64_t with = set | (std::uint64_t{1} << var);
    if (independent(with)) self(self, var + 1, with, size + 1);
    self(self, var + 1, set, size);
  };
  search(search, 0, 0, 0);
  return best;
}

template <class Field>
long dimension(const GroebnerBasis<Field>& gb) {
  if (gb.is_unit()) return -1;
  return krull_dimension(gb.staircase());
}

}  // namespace eqdeg
