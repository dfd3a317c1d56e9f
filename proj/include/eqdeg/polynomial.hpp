#pragma once

#include <algorithm>
#include <cstddef>
#include <string>
#include <unordered_map>
#include <utility>
#include <vector>

#include "eqdeg/errors.hpp"
#include "eqdeg/field.hpp"
#include "eqdeg/monomial.hpp"

namespace eqdeg {

template <class Field>
struct Term {
  typename Field::Element coefficient;
  ExponentVector exponent;
};

/// Sparse multivariate polynomial over `Field`.
///
/// Terms are stored strictly descending under the polynomial's monomial
/// order, with no zero coefficients; the zero polynomial has no terms. The
/// leading term is therefore always `terms().front()`.
template <class Field>
class Polynomial {
public:
  using Element = typename Field::Element;
  using TermType = Term<Field>;

  Polynomial(Field field, std::size_t num_vars, MonomialOrder order = MonomialOrder::degrevlex())
      : field_(std::move(field)), num_vars_(num_vars), order_(order) {
    if (num_vars == 0) throw PreconditionError("polynomial ring needs at least one variable");
  }

  static Polynomial constant(Field field, std::size_t num_vars, const Element& c,
                             MonomialOrder order = MonomialOrder::degrevlex()) {
    Polynomial p(std::move(field), num_vars, order);
    if (!p.field_.is_zero(c)) p.terms_.push_back({c, ExponentVector(num_vars)});
    return p;
  }

  static Polynomial monomial(Field field, const Element& c, ExponentVector exp,
                             MonomialOrder order = MonomialOrder::degrevlex()) {
    Polynomial p(std::move(field), exp.size(), order);
    if (!p.field_.is_zero(c)) p.terms_.push_back({c, std::move(exp)});
    return p;
  }

  static Polynomial variable(Field field, std::size_t num_vars, std::size_t var,
                             MonomialOrder order = MonomialOrder::degrevlex()) {
    auto one = field.one();
    return monomial(std::move(field), one, ExponentVector::unit(num_vars, var), order);
  }

  /// Builds a canonical polynomial from terms in any order, collecting
  /// like terms and dropping zeros.
  static Polynomial from_terms(Field field, std::size_t num_vars, std::vector<TermType> terms,
                               MonomialOrder order = MonomialOrder::degrevlex()) {
    Polynomial p(std::move(field), num_vars, order);
    for (const auto& t : terms) {
      if (t.exponent.size() != num_vars) throw RingMismatch("term arity differs from the ring");
    }
    p.terms_ = std::move(terms);
    p.canonicalize();
    return p;
  }

  const Field& field() const { return field_; }
  std::size_t num_vars() const { return num_vars_; }
  const MonomialOrder& order() const { return order_; }
  const std::vector<TermType>& terms() const { return terms_; }
  std::size_t size() const { return terms_.size(); }

  bool is_zero() const { return terms_.empty(); }
  bool is_constant() const { return terms_.empty() || (terms_.size() == 1 && terms_.front().exponent.is_one()); }

  const TermType& leading_term() const {
    if (is_zero()) throw PreconditionError("leading term of the zero polynomial");
    return terms_.front();
  }
  const ExponentVector& leading_monomial() const { return leading_term().exponent; }
  const Element& leading_coefficient() const { return leading_term().coefficient; }

  /// Total degree; -1 for the zero polynomial.
  long total_degree() const {
    long d = -1;
    for (const auto& t : terms_) d = std::max(d, static_cast<long>(t.exponent.total_degree()));
    return d;
  }

  /// The same polynomial re-sorted under another order.
  Polynomial with_order(MonomialOrder order) const {
    if (order == order_) return *this;
    Polynomial p = *this;
    p.order_ = order;
    p.sort_terms();
    return p;
  }

  Polynomial operator-() const {
    Polynomial p = *this;
    for (auto& t : p.terms_) t.coefficient = field_.neg(t.coefficient);
    return p;
  }

  friend Polynomial operator+(const Polynomial& p, const Polynomial& q) {
    p.check_compatible(q);
    return p.merge(q, p.field_.one(), q.field_.one());
  }

  friend Polynomial operator-(const Polynomial& p, const Polynomial& q) {
    p.check_compatible(q);
    return p.merge(q, p.field_.one(), p.field_.neg(p.field_.one()));
  }

  friend Polynomial operator*(const Polynomial& p, const Polynomial& q) {
    p.check_compatible(q);
    std::unordered_map<ExponentVector, Element, ExponentVectorHash> acc;
    acc.reserve(p.size() * q.size());
    for (const auto& a : p.terms_) {
      for (const auto& b : q.terms_) {
        auto c = p.field_.mul(a.coefficient, b.coefficient);
        auto [it, inserted] = acc.try_emplace(a.exponent * b.exponent, c);
        if (!inserted) it->second = p.field_.add(it->second, c);
      }
    }
    Polynomial r(p.field_, p.num_vars_, p.order_);
    r.terms_.reserve(acc.size());
    for (auto& [e, c] : acc) {
      if (!p.field_.is_zero(c)) r.terms_.push_back({std::move(c), e});
    }
    r.sort_terms();
    return r;
  }

  Polynomial& operator+=(const Polynomial& q) { return *this = *this + q; }
  Polynomial& operator-=(const Polynomial& q) { return *this = *this - q; }
  Polynomial& operator*=(const Polynomial& q) { return *this = *this * q; }

  Polynomial scale(const Element& c) const {
    if (field_.is_zero(c)) return Polynomial(field_, num_vars_, order_);
    Polynomial p = *this;
    for (auto& t : p.terms_) t.coefficient = field_.mul(t.coefficient, c);
    return p;
  }

  /// c * x^exp * this. Multiplying by a monomial preserves term order.
  Polynomial mul_term(const Element& c, const ExponentVector& exp) const {
    if (field_.is_zero(c)) return Polynomial(field_, num_vars_, order_);
    Polynomial p(field_, num_vars_, order_);
    p.terms_.reserve(terms_.size());
    for (const auto& t : terms_) p.terms_.push_back({field_.mul(t.coefficient, c), t.exponent * exp});
    return p;
  }

  /// a*this - b*x^exp*g, the elementary reduction step.
  Polynomial reduce_by(const Element& a, const Element& b, const ExponentVector& exp,
                       const Polynomial& g) const {
    return merge(g.mul_term(b, exp), a, field_.neg(field_.one()));
  }

  /// Appends a term below every existing term; callers guarantee the order.
  void append_lower_term(TermType t) {
    if (!terms_.empty() && !order_.less(t.exponent, terms_.back().exponent)) {
      throw PreconditionError("appended term is not below the current trailing term");
    }
    if (!field_.is_zero(t.coefficient)) terms_.push_back(std::move(t));
  }

  /// Drops the leading term.
  Polynomial tail() const {
    Polynomial p(field_, num_vars_, order_);
    if (!terms_.empty()) p.terms_.assign(terms_.begin() + 1, terms_.end());
    return p;
  }

  Polynomial monic() const {
    if (is_zero()) return *this;
    return scale(field_.inv(leading_coefficient()));
  }

  /// Over the rationals: the primitive integer multiple with positive
  /// leading coefficient. Over prime fields: the monic multiple.
  Polynomial primitive() const {
    if (is_zero()) return *this;
    if constexpr (Field::kFractionFree) {
      mpz_class den_lcm = 1;
      mpz_class num_gcd = 0;
      for (const auto& t : terms_) {
        den_lcm = lcm(den_lcm, t.coefficient.get_den());
        num_gcd = gcd(num_gcd, t.coefficient.get_num());
      }
      Element factor(den_lcm, num_gcd);
      factor.canonicalize();
      if (field_.is_negative(leading_coefficient())) factor = -factor;
      if (factor == 1) return *this;
      return scale(factor);
    } else {
      return monic();
    }
  }

  std::string to_string(const std::vector<std::string>& var_names) const {
    if (var_names.size() != num_vars_) throw RingMismatch("variable name count differs from the ring");
    if (is_zero()) return "0";
    std::string out;
    bool first = true;
    for (const auto& t : terms_) {
      bool negative = field_.is_negative(t.coefficient);
      Element magnitude = negative ? field_.neg(t.coefficient) : t.coefficient;
      if (first) {
        if (negative) out += "-";
      } else {
        out += negative ? " - " : " + ";
      }
      first = false;
      std::string mono = monomial_string(t.exponent, var_names);
      if (mono.empty()) {
        out += field_.to_string(magnitude);
      } else if (field_.is_one(magnitude)) {
        out += mono;
      } else {
        out += field_.to_string(magnitude) + "*" + mono;
      }
    }
    return out;
  }

  static std::string monomial_string(const ExponentVector& e, const std::vector<std::string>& var_names) {
    std::string out;
    for (std::size_t i = 0; i < e.size(); ++i) {
      if (e[i] == 0) continue;
      if (!out.empty()) out += "*";
      out += var_names[i];
      if (e[i] > 1) out += "^" + std::to_string(e[i]);
    }
    return out;
  }

  friend bool operator==(const Polynomial& p, const Polynomial& q) {
    if (!(p.field_ == q.field_) || p.num_vars_ != q.num_vars_ || p.terms_.size() != q.terms_.size()) {
      return false;
    }
    if (!(p.order_ == q.order_)) return p.with_order(q.order_) == q;
    for (std::size_t i = 0; i < p.terms_.size(); ++i) {
      if (!(p.terms_[i].exponent == q.terms_[i].exponent) ||
          !p.field_.equal(p.terms_[i].coefficient, q.terms_[i].coefficient)) {
        return false;
      }
    }
    return true;
  }

  void check_compatible(const Polynomial& q) const {
    if (!(field_ == q.field_)) throw RingMismatch("polynomials over different coefficient fields");
    if (num_vars_ != q.num_vars_) {
      throw RingMismatch("polynomials in different numbers of variables: " + std::to_string(num_vars_) +
                         " vs " + std::to_string(q.num_vars_));
    }
    if (!(order_ == q.order_)) throw RingMismatch("polynomials sorted under different monomial orders");
  }

private:
  // a*this + b*q, merging the two sorted term lists.
  Polynomial merge(const Polynomial& q, const Element& a, const Element& b) const {
    Polynomial r(field_, num_vars_, order_);
    r.terms_.reserve(terms_.size() + q.terms_.size());
    bool a_one = field_.is_one(a);
    bool b_one = field_.is_one(b);
    auto i = terms_.begin();
    auto j = q.terms_.begin();
    while (i != terms_.end() || j != q.terms_.end()) {
      if (j == q.terms_.end() || (i != terms_.end() && order_.less(j->exponent, i->exponent))) {
        r.terms_.push_back({a_one ? i->coefficient : field_.mul(a, i->coefficient), i->exponent});
        ++i;
      } else if (i == terms_.end() || order_.less(i->exponent, j->exponent)) {
        r.terms_.push_back({b_one ? j->coefficient : field_.mul(b, j->coefficient), j->exponent});
        ++j;
      } else {
        auto c = field_.add(a_one ? i->coefficient : field_.mul(a, i->coefficient),
                            b_one ? j->coefficient : field_.mul(b, j->coefficient));
        if (!field_.is_zero(c)) r.terms_.push_back({std::move(c), i->exponent});
        ++i;
        ++j;
      }
    }
    return r;
  }

  void sort_terms() {
    std::sort(terms_.begin(), terms_.end(),
              [this](const TermType& x, const TermType& y) { return order_.less(y.exponent, x.exponent); });
  }

  void canonicalize() {
    sort_terms();
    std::vector<TermType> out;
    out.reserve(terms_.size());
    for (auto& t : terms_) {
      if (!out.empty() && out.back().exponent == t.exponent) {
        out.back().coefficient = field_.add(out.back().coefficient, t.coefficient);
      } else {
        if (!out.empty() && field_.is_zero(out.back().coefficient)) out.pop_back();
        out.push_back(std::move(t));
      }
    }
    if (!out.empty() && field_.is_zero(out.back().coefficient)) out.pop_back();
    terms_ = std::move(out);
  }

  Field field_;
  std::size_t num_vars_;
  MonomialOrder order_;
  std::vector<TermType> terms_;
};

}  // namespace eqdeg
