#pragma once

// Coefficient fields. A field is a small value object that owns the
// arithmetic on its Element type; polynomials carry their field and refuse
// to mix with polynomials over a different one.

#include <gmpxx.h>

#include <cstdint>
#include <optional>
#include <string>
#include <string_view>
#include <utility>

#include "eqdeg/errors.hpp"

namespace eqdeg {

namespace detail {

inline std::uint64_t mul_mod(std::uint64_t a, std::uint64_t b, std::uint64_t m) {
  return static_cast<std::uint64_t>(static_cast<unsigned __int128>(a) * b % m);
}

inline std::uint64_t pow_mod(std::uint64_t base, std::uint64_t exp, std::uint64_t m) {
  std::uint64_t result = 1 % m;
  base %= m;
  while (exp != 0) {
    if (exp & 1U) result = mul_mod(result, base, m);
    base = mul_mod(base, base, m);
    exp >>= 1U;
  }
  return result;
}

}  // namespace detail

/// Deterministic Miller-Rabin; exact for every 64-bit input.
inline bool is_prime(std::uint64_t n) {
  if (n < 2) return false;
  for (std::uint64_t small : {2ULL, 3ULL, 5ULL, 7ULL, 11ULL, 13ULL, 17ULL, 19ULL, 23ULL, 29ULL, 31ULL, 37ULL}) {
    if (n % small == 0) return n == small;
  }
  std::uint64_t d = n - 1;
  int s = 0;
  while ((d & 1U) == 0) {
    d >>= 1U;
    ++s;
  }
  for (std::uint64_t a : {2ULL, 3ULL, 5ULL, 7ULL, 11ULL, 13ULL, 17ULL, 19ULL, 23ULL, 29ULL, 31ULL, 37ULL}) {
    std::uint64_t x = detail::pow_mod(a, d, n);
    if (x == 1 || x == n - 1) continue;
    bool composite = true;
    for (int r = 1; r < s; ++r) {
      x = detail::mul_mod(x, x, n);
      if (x == n - 1) {
        composite = false;
        break;
      }
    }
    if (composite) return false;
  }
  return true;
}

inline std::uint64_t next_prime(std::uint64_t n) {
  while (!is_prime(n)) ++n;
  return n;
}

/// The rationals, with GMP rationals kept in lowest terms.
///
/// Gröbner computations over this field run fraction-free on primitive
/// integer polynomials (see `kFractionFree`); only final results are made
/// monic.
class Rationals {
public:
  using Element = mpq_class;
  static constexpr bool kFractionFree = true;

  Element zero() const { return Element(0); }
  Element one() const { return Element(1); }
  Element from_int(long v) const { return Element(v); }

  Element from_fraction(const mpz_class& num, const mpz_class& den) const {
    if (den == 0) throw Error("zero denominator");
    Element r(num, den);
    r.canonicalize();
    return r;
  }

  bool is_zero(const Element& a) const { return sgn(a) == 0; }
  bool is_one(const Element& a) const { return a == 1; }
  bool equal(const Element& a, const Element& b) const { return a == b; }

  Element add(const Element& a, const Element& b) const { return a + b; }
  Element sub(const Element& a, const Element& b) const { return a - b; }
  Element mul(const Element& a, const Element& b) const { return a * b; }
  Element neg(const Element& a) const { return -a; }
  Element inv(const Element& a) const {
    if (is_zero(a)) throw Error("division by zero");
    return 1 / a;
  }
  Element div(const Element& a, const Element& b) const { return mul(a, inv(b)); }

  bool is_negative(const Element& a) const { return sgn(a) < 0; }
  std::string to_string(const Element& a) const { return a.get_str(); }

  /// Multipliers (a, b) with a*coeff == b*divisor for cancelling `coeff`
  /// against a term led by `divisor`. Integer inputs stay integral.
  std::pair<Element, Element> reduction_multipliers(const Element& divisor, const Element& coeff) const {
    if (divisor.get_den() == 1 && coeff.get_den() == 1) {
      mpz_class g = gcd(divisor.get_num(), coeff.get_num());
      Element a(divisor.get_num() / g);
      Element b(coeff.get_num() / g);
      if (sgn(a) < 0) {
        a = -a;
        b = -b;
      }
      return {a, b};
    }
    return {one(), div(coeff, divisor)};
  }

  std::string_view name() const { return "QQ"; }
  std::optional<std::uint64_t> prime() const { return std::nullopt; }

  friend bool operator==(const Rationals&, const Rationals&) { return true; }
};

/// The prime field F_p for a prime 2^20 < p < 2^63.
class PrimeField {
public:
  using Element = std::uint64_t;
  static constexpr bool kFractionFree = false;
  static constexpr std::uint64_t kMinimumPrime = std::uint64_t{1} << 20;

  explicit PrimeField(std::uint64_t p) : p_(p) {
    if (p <= kMinimumPrime || p >= (std::uint64_t{1} << 63) || !is_prime(p)) {
      throw PreconditionError("field characteristic must be a prime in (2^20, 2^63): " +
                              std::to_string(p));
    }
  }

  std::uint64_t characteristic() const { return p_; }

  Element zero() const { return 0; }
  Element one() const { return 1; }
  Element from_int(long v) const {
    auto m = static_cast<long long>(p_);
    long long r = static_cast<long long>(v) % m;
    return static_cast<Element>(r < 0 ? r + m : r);
  }

  Element from_mpz(const mpz_class& v) const {
    return static_cast<Element>(mpz_fdiv_ui(v.get_mpz_t(), p_));
  }

  Element from_fraction(const mpz_class& num, const mpz_class& den) const {
    Element d = from_mpz(den);
    if (d == 0) throw Error("zero denominator");
    return div(from_mpz(num), d);
  }

  bool is_zero(Element a) const { return a == 0; }
  bool is_one(Element a) const { return a == 1; }
  bool equal(Element a, Element b) const { return a == b; }

  Element add(Element a, Element b) const {
    Element s = a + b;
    return s >= p_ ? s - p_ : s;
  }
  Element sub(Element a, Element b) const { return a >= b ? a - b : a + (p_ - b); }
  Element mul(Element a, Element b) const { return detail::mul_mod(a, b, p_); }
  Element neg(Element a) const { return a == 0 ? 0 : p_ - a; }
  Element inv(Element a) const {
    if (a == 0) throw Error("division by zero");
    return detail::pow_mod(a, p_ - 2, p_);
  }
  Element div(Element a, Element b) const { return mul(a, inv(b)); }

  bool is_negative(Element) const { return false; }
  std::string to_string(Element a) const { return std::to_string(a); }

  std::pair<Element, Element> reduction_multipliers(Element divisor, Element coeff) const {
    return {one(), div(coeff, divisor)};
  }

  std::string_view name() const { return "Fp"; }
  std::optional<std::uint64_t> prime() const { return p_; }

  friend bool operator==(const PrimeField& a, const PrimeField& b) { return a.p_ == b.p_; }

private:
  std::uint64_t p_;
};

}  // namespace eqdeg
