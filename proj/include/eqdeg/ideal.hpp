#pragma once

#include <algorithm>
#include <cstddef>
#include <optional>
#include <set>
#include <string>
#include <utility>
#include <vector>

#include "eqdeg/errors.hpp"
#include "eqdeg/polynomial.hpp"

namespace eqdeg {

/// An ideal given by named variables, a list of generators, and optionally
/// the dimension the caller asserts for it.
///
/// The zero ideal is presented as a single zero generator.
template <class Field>
class IdealPresentation {
public:
  using Poly = Polynomial<Field>;

  IdealPresentation(std::vector<std::string> var_names, std::vector<Poly> generators,
                    std::optional<std::size_t> asserted_dimension = std::nullopt)
      : var_names_(std::move(var_names)),
        generators_(std::move(generators)),
        asserted_dimension_(asserted_dimension) {
    if (var_names_.empty()) throw PreconditionError("an ideal needs at least one variable");
    std::set<std::string> seen(var_names_.begin(), var_names_.end());
    if (seen.size() != var_names_.size()) throw PreconditionError("variable names must be distinct");
    if (generators_.empty()) throw PreconditionError("an ideal needs at least one generator");
    for (const auto& g : generators_) {
      if (g.num_vars() != var_names_.size()) throw RingMismatch("generator arity differs from the variable list");
      if (!(g.field() == generators_.front().field())) throw RingMismatch("generators over different fields");
    }
    if (asserted_dimension_ && *asserted_dimension_ > var_names_.size()) {
      throw PreconditionError("asserted dimension exceeds the number of variables");
    }
  }

  const std::vector<std::string>& var_names() const { return var_names_; }
  const std::vector<Poly>& generators() const { return generators_; }
  const std::optional<std::size_t>& asserted_dimension() const { return asserted_dimension_; }
  std::size_t num_vars() const { return var_names_.size(); }
  const Field& field() const { return generators_.front().field(); }

  bool is_zero_ideal() const {
    return std::all_of(generators_.begin(), generators_.end(), [](const Poly& g) { return g.is_zero(); });
  }

  /// The ideal plus the given polynomials; drops the dimension assertion.
  IdealPresentation plus(const std::vector<Poly>& extra) const {
    std::vector<Poly> gens = generators_;
    for (const auto& f : extra) {
      if (f.num_vars() != num_vars() || !(f.field() == field())) {
        throw RingMismatch("added polynomial lives in a different ring");
      }
      gens.push_back(f);
    }
    return IdealPresentation(var_names_, std::move(gens));
  }

  IdealPresentation with_generators(std::vector<Poly> gens) const {
    return IdealPresentation(var_names_, std::move(gens), asserted_dimension_);
  }

  IdealPresentation with_asserted_dimension(std::optional<std::size_t> m) const {
    return IdealPresentation(var_names_, generators_, m);
  }

private:
  std::vector<std::string> var_names_;
  std::vector<Poly> generators_;
  std::optional<std::size_t> asserted_dimension_;
};

}  // namespace eqdeg
