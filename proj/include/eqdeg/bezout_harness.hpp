#pragma once

// Randomized instances for the Bézout check. The base ideal is generated
// by powers and products of linear or quadratic polynomials in pairwise
// disjoint sets of variables, so it is a complete intersection and hence
// equidimensional of known dimension; cutting sequences are random and
// kept only once certified regular.

#include <cstddef>
#include <cstdint>
#include <optional>
#include <random>
#include <string>
#include <vector>

#include "eqdeg/bezout.hpp"
#include "eqdeg/degree.hpp"
#include "eqdeg/ideal.hpp"
#include "eqdeg/polynomial.hpp"

namespace eqdeg {

struct BezoutInstance {
  IdealPresentation<Rationals> ideal;
  std::size_t dimension = 0;
  std::vector<Polynomial<Rationals>> sequence;
};

namespace detail {

inline std::uint64_t draw_below(std::mt19937_64& rng, std::uint64_t n) {
  return static_cast<std::uint64_t>(draw_symmetric(rng, n) + static_cast<long long>(n)) % n;
}

// Random polynomial of exact total degree `degree` in the variables listed,
// with coefficients in [-3, 3].
inline Polynomial<Rationals> random_in_variables(std::mt19937_64& rng, std::size_t n,
                                                 const std::vector<std::size_t>& variables, unsigned degree) {
  Rationals field;
  for (;;) {
    std::vector<Term<Rationals>> terms;
    std::size_t count = 2 + draw_below(rng, 3);
    for (std::size_t t = 0; t < count; ++t) {
      ExponentVector e(n);
      unsigned d = t == 0 ? degree : static_cast<unsigned>(draw_below(rng, degree + 1));
      for (unsigned s = 0; s < d; ++s) {
        std::size_t v = variables[draw_below(rng, variables.size())];
        e.set(v, e[v] + 1);
      }
      terms.push_back({field.from_int(draw_symmetric(rng, 3)), e});
    }
    auto p = Polynomial<Rationals>::from_terms(field, n, std::move(terms));
    if (p.total_degree() == static_cast<long>(degree)) return p;
  }
}

}  // namespace detail

/// Draws one instance with n <= 4 variables and generators of degree <= 3.
inline BezoutInstance random_bezout_instance(std::uint64_t seed) {
  std::mt19937_64 rng(detail::splitmix64(seed));
  for (;;) {
    const std::size_t n = 2 + detail::draw_below(rng, 3);
    const std::size_t r = 1 + detail::draw_below(rng, n - 1);
    std::vector<std::vector<std::size_t>> blocks(r);
    for (std::size_t v = 0; v < n; ++v) {
      if (v < r) {
        blocks[v].push_back(v);
      } else if (detail::draw_below(rng, 2) == 0) {
        blocks[detail::draw_below(rng, r)].push_back(v);
      }
    }
    std::vector<Polynomial<Rationals>> gens;
    for (const auto& block : blocks) {
      switch (detail::draw_below(rng, 4)) {
        case 0: gens.push_back(detail::random_in_variables(rng, n, block, 1)); break;
        case 1: {
          auto l = detail::random_in_variables(rng, n, block, 1);
          gens.push_back(l * l);
          break;
        }
        case 2: gens.push_back(detail::random_in_variables(rng, n, block, 2)); break;
        default:
          gens.push_back(detail::random_in_variables(rng, n, block, 1) * detail::random_in_variables(rng, n, block, 1));
          break;
      }
    }
    std::vector<std::string> names;
    for (std::size_t i = 1; i <= n; ++i) names.push_back("x" + std::to_string(i));
    IdealPresentation<Rationals> ideal(names, gens, n - r);
    const std::size_t m = n - r;
    std::vector<std::size_t> all(n);
    for (std::size_t v = 0; v < n; ++v) all[v] = v;

    for (int attempt = 0; attempt < 10; ++attempt) {
      const std::size_t k = 1 + detail::draw_below(rng, m);
      std::vector<Polynomial<Rationals>> seq;
      for (std::size_t j = 0; j < k; ++j) {
        unsigned degree = 1 + static_cast<unsigned>(detail::draw_below(rng, n <= 3 ? 3 : 2));
        seq.push_back(detail::random_in_variables(rng, n, all, degree));
      }
      if (is_regular_sequence(ideal, seq).ok) return {ideal, m, seq};
    }
  }
}

struct HarnessRecord {
  BezoutInstance instance;
  BezoutCheckReport<Rationals> report;
};

/// Runs `count` instances; instance i is drawn from trial_seed(seed, 0, i).
/// Instances run concurrently and the records come back in index order.
inline std::vector<HarnessRecord> run_bezout_harness(std::size_t count, std::uint64_t seed,
                                                     const DegreeConfig& config = {}, unsigned threads = 0) {
  std::vector<std::optional<HarnessRecord>> slots(count);
  detail::parallel_for(count, threads, [&](std::size_t i) {
    auto instance = random_bezout_instance(trial_seed(seed, 0, i));
    DegreeConfig serial = config;
    serial.threads = 1;
    auto report = check_bezout_regular(instance.ideal, instance.dimension, instance.sequence, serial);
    slots[i] = HarnessRecord{std::move(instance), std::move(report)};
  });
  std::vector<HarnessRecord> out;
  out.reserve(count);
  for (auto& s : slots) out.push_back(std::move(*s));
  return out;
}

}  // namespace eqdeg
