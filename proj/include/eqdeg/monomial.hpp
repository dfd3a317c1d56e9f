#pragma once

#include <boost/container/small_vector.hpp>

#include <algorithm>
#include <compare>
#include <cstddef>
#include <cstdint>
#include <initializer_list>
#include <limits>
#include <string>

#include "eqdeg/errors.hpp"

namespace eqdeg {

/// Exponents of a monomial over a fixed number of variables, with the total
/// degree cached. The length never changes after construction.
class ExponentVector {
public:
  using value_type = std::uint32_t;
  static constexpr std::uint64_t kMaxExponent = std::numeric_limits<value_type>::max();

  ExponentVector() = default;
  explicit ExponentVector(std::size_t num_vars) : exps_(num_vars, 0) {}
  ExponentVector(std::initializer_list<value_type> exps) : exps_(exps.begin(), exps.end()) {
    for (auto e : exps_) total_ += e;
  }

  template <class Range>
  static ExponentVector from_range(const Range& r) {
    ExponentVector v;
    for (auto e : r) {
      if (static_cast<std::uint64_t>(e) > kMaxExponent) throw ExponentOverflow("exponent overflow");
      v.exps_.push_back(static_cast<value_type>(e));
      v.total_ += static_cast<std::uint64_t>(e);
    }
    return v;
  }

  static ExponentVector unit(std::size_t num_vars, std::size_t var, value_type power = 1) {
    ExponentVector v(num_vars);
    v.exps_[var] = power;
    v.total_ = power;
    return v;
  }

  std::size_t size() const { return exps_.size(); }
  value_type operator[](std::size_t i) const { return exps_[i]; }
  std::uint64_t total_degree() const { return total_; }
  bool is_one() const { return total_ == 0; }

  auto begin() const { return exps_.begin(); }
  auto end() const { return exps_.end(); }

  void set(std::size_t i, value_type e) {
    total_ = total_ - exps_[i] + e;
    exps_[i] = e;
  }

  /// Product of monomials; throws on exponent overflow.
  friend ExponentVector operator*(const ExponentVector& a, const ExponentVector& b) {
    check_same_length(a, b);
    ExponentVector r;
    r.exps_.resize(a.size());
    for (std::size_t i = 0; i < a.size(); ++i) {
      std::uint64_t e = std::uint64_t{a.exps_[i]} + b.exps_[i];
      if (e > kMaxExponent) throw ExponentOverflow("exponent overflow in monomial product");
      r.exps_[i] = static_cast<value_type>(e);
    }
    r.total_ = a.total_ + b.total_;
    return r;
  }

  /// True when this monomial divides `other`.
  bool divides(const ExponentVector& other) const {
    if (total_ > other.total_) return false;
    for (std::size_t i = 0; i < exps_.size(); ++i) {
      if (exps_[i] > other.exps_[i]) return false;
    }
    return true;
  }

  /// other / this; requires divides(other).
  ExponentVector quotient_of(const ExponentVector& other) const {
    ExponentVector r;
    r.exps_.resize(exps_.size());
    for (std::size_t i = 0; i < exps_.size(); ++i) r.exps_[i] = other.exps_[i] - exps_[i];
    r.total_ = other.total_ - total_;
    return r;
  }

  friend ExponentVector lcm(const ExponentVector& a, const ExponentVector& b) {
    check_same_length(a, b);
    ExponentVector r;
    r.exps_.resize(a.size());
    for (std::size_t i = 0; i < a.size(); ++i) {
      r.exps_[i] = std::max(a.exps_[i], b.exps_[i]);
      r.total_ += r.exps_[i];
    }
    return r;
  }

  friend bool coprime(const ExponentVector& a, const ExponentVector& b) {
    for (std::size_t i = 0; i < a.size(); ++i) {
      if (a.exps_[i] != 0 && b.exps_[i] != 0) return false;
    }
    return true;
  }

  /// Index of the single variable of a pure power, or size() if the
  /// monomial is 1 or involves two or more variables.
  std::size_t pure_power_variable() const {
    std::size_t found = exps_.size();
    for (std::size_t i = 0; i < exps_.size(); ++i) {
      if (exps_[i] == 0) continue;
      if (found != exps_.size()) return exps_.size();
      found = i;
    }
    return found;
  }

  friend bool operator==(const ExponentVector& a, const ExponentVector& b) {
    return a.total_ == b.total_ && std::equal(a.exps_.begin(), a.exps_.end(), b.exps_.begin(), b.exps_.end());
  }

  static void check_same_length(const ExponentVector& a, const ExponentVector& b) {
    if (a.size() != b.size()) {
      throw RingMismatch("exponent vectors of different lengths: " + std::to_string(a.size()) +
                         " vs " + std::to_string(b.size()));
    }
  }

private:
  boost::container::small_vector<value_type, 8> exps_;
  std::uint64_t total_ = 0;
};

struct ExponentVectorHash {
  std::size_t operator()(const ExponentVector& v) const noexcept {
    std::size_t h = 0xcbf29ce484222325ULL;
    for (auto e : v) h = (h ^ e) * 0x100000001b3ULL;
    return h;
  }
};

/// A monomial order: Lex, DegRevLex, or a two-block elimination order
/// whose blocks are each compared by DegRevLex.
class MonomialOrder {
public:
  enum class Kind { Lex, DegRevLex, Block };

  static MonomialOrder lex() { return MonomialOrder(Kind::Lex, 0); }
  static MonomialOrder degrevlex() { return MonomialOrder(Kind::DegRevLex, 0); }
  /// Eliminates the first `k` variables.
  static MonomialOrder block(std::size_t k) {
    if (k == 0) throw PreconditionError("block order needs at least one leading variable");
    return MonomialOrder(Kind::Block, k);
  }

  Kind kind() const { return kind_; }
  std::size_t block_size() const { return block_; }
  bool is_degree_compatible() const { return kind_ == Kind::DegRevLex; }

  std::string name() const {
    switch (kind_) {
      case Kind::Lex: return "lex";
      case Kind::DegRevLex: return "degrevlex";
      case Kind::Block: return "block(" + std::to_string(block_) + ")";
    }
    return {};
  }

  std::strong_ordering compare(const ExponentVector& a, const ExponentVector& b) const {
    ExponentVector::check_same_length(a, b);
    switch (kind_) {
      case Kind::Lex:
        for (std::size_t i = 0; i < a.size(); ++i) {
          if (a[i] != b[i]) return a[i] <=> b[i];
        }
        return std::strong_ordering::equal;
      case Kind::DegRevLex:
        return degrevlex_range(a, b, 0, a.size());
      case Kind::Block: {
        if (block_ >= a.size()) throw PreconditionError("block order larger than the variable count");
        auto first = degrevlex_range(a, b, 0, block_);
        if (first != 0) return first;
        return degrevlex_range(a, b, block_, a.size());
      }
    }
    return std::strong_ordering::equal;
  }

  bool less(const ExponentVector& a, const ExponentVector& b) const { return compare(a, b) < 0; }

  friend bool operator==(const MonomialOrder&, const MonomialOrder&) = default;

private:
  MonomialOrder(Kind kind, std::size_t block) : kind_(kind), block_(block) {}

  static std::strong_ordering degrevlex_range(const ExponentVector& a, const ExponentVector& b,
                                              std::size_t lo, std::size_t hi) {
    std::uint64_t da = 0;
    std::uint64_t db = 0;
    if (lo == 0 && hi == a.size()) {
      da = a.total_degree();
      db = b.total_degree();
    } else {
      for (std::size_t i = lo; i < hi; ++i) {
        da += a[i];
        db += b[i];
      }
    }
    if (da != db) return da <=> db;
    for (std::size_t i = hi; i-- > lo;) {
      // A smaller exponent in the last differing variable makes the monomial larger.
      if (a[i] != b[i]) return b[i] <=> a[i];
    }
    return std::strong_ordering::equal;
  }

  Kind kind_;
  std::size_t block_;
};

}  // namespace eqdeg
