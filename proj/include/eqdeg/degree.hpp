#pragma once

// Degree of an equidimensional ideal of dimension m: the dimension of the
// quotient after cutting with m degree-one polynomials in general position.
// General position is approximated by random integer coefficients drawn
// from [-B, B]; a strict majority over independent trials is reported, and
// disagreement escalates B and the trial count.

#include <algorithm>
#include <atomic>
#include <cstddef>
#include <cstdint>
#include <exception>
#include <limits>
#include <map>
#include <mutex>
#include <optional>
#include <random>
#include <string>
#include <thread>
#include <vector>

#include <gmpxx.h>

#include "eqdeg/errors.hpp"
#include "eqdeg/groebner.hpp"
#include "eqdeg/ideal.hpp"
#include "eqdeg/polynomial.hpp"

namespace eqdeg {

/// a_1 x_1 + ... + a_n x_n + a_0 with (a_1, ..., a_n) not all zero.
template <class Field>
struct LinearForm {
  std::vector<typename Field::Element> coefficients;
  typename Field::Element constant;

  Polynomial<Field> to_polynomial(const Field& field, MonomialOrder order = MonomialOrder::degrevlex()) const {
    const std::size_t n = coefficients.size();
    std::vector<Term<Field>> terms;
    for (std::size_t i = 0; i < n; ++i) terms.push_back({coefficients[i], ExponentVector::unit(n, i)});
    terms.push_back({constant, ExponentVector(n)});
    return Polynomial<Field>::from_terms(field, n, std::move(terms), order);
  }

  friend bool operator==(const LinearForm&, const LinearForm&) = default;
};

template <class Field>
struct TrialOutcome {
  std::vector<LinearForm<Field>> forms;
  std::optional<std::uint64_t> count;  ///< set iff the cut ideal was zero-dimensional
  bool empty_variety = false;          ///< the cut ideal was the unit ideal

  bool succeeded() const { return count.has_value(); }
};

struct DegreeConfig {
  std::size_t trials = 5;
  std::uint64_t seed = 0;
  std::uint64_t coefficient_bound = 65536;
  MonomialOrder order = MonomialOrder::degrevlex();
  std::size_t max_escalations = 3;
  std::size_t threads = 0;  ///< 0 picks the hardware concurrency
};

template <class Field>
struct DegreeReport {
  std::uint64_t degree = 0;
  std::vector<TrialOutcome<Field>> trials;  ///< trials of the round that reached consensus
  std::uint64_t seed = 0;
  std::uint64_t coefficient_bound = 0;  ///< bound used in the final round
  Field field;
  mpq_class agreement_ratio;  ///< agreeing trials / successful trials
  std::size_t escalations = 0;
  std::size_t failed_trials = 0;  ///< NotZeroDimensional trials in the final round
};

namespace detail {

inline std::uint64_t splitmix64(std::uint64_t x) {
  x += 0x9e3779b97f4a7c15ULL;
  x = (x ^ (x >> 30U)) * 0xbf58476d1ce4e5b9ULL;
  x = (x ^ (x >> 27U)) * 0x94d049bb133111ebULL;
  return x ^ (x >> 31U);
}

/// Portable uniform draw from [-bound, bound] by rejection sampling, so
/// that outputs do not depend on the standard library's distributions.
inline long long draw_symmetric(std::mt19937_64& rng, std::uint64_t bound) {
  const std::uint64_t range = 2 * bound + 1;
  const std::uint64_t limit = std::numeric_limits<std::uint64_t>::max() - std::numeric_limits<std::uint64_t>::max() % range;
  std::uint64_t x = 0;
  do {
    x = rng();
  } while (x >= limit);
  return static_cast<long long>(x % range) - static_cast<long long>(bound);
}

}  // namespace detail

/// Seed for trial `index` of escalation round `round`.
inline std::uint64_t trial_seed(std::uint64_t seed, std::size_t round, std::size_t index) {
  std::uint64_t h = detail::splitmix64(seed);
  h = detail::splitmix64(h ^ (0x51ed270b27d2f3a5ULL * (round + 1)));
  return detail::splitmix64(h ^ index);
}

/// m degree-one polynomials in n variables with coefficients uniform in
/// [-bound, bound], mapped into the field. Forms whose homogeneous part
/// vanishes are redrawn. Deterministic in (n, m, seed, bound, field).
template <class Field>
std::vector<LinearForm<Field>> random_linear_forms(std::size_t n, std::size_t m, std::uint64_t seed,
                                                   std::uint64_t bound, const Field& field) {
  if (m < 1 || m > n) throw PreconditionError("need 1 <= m <= n linear forms, got m=" + std::to_string(m));
  if (bound < 2) throw PreconditionError("coefficient bound must be at least 2");
  if (bound > (std::uint64_t{1} << 62)) throw PreconditionError("coefficient bound too large");
  std::mt19937_64 rng(seed);
  std::vector<LinearForm<Field>> forms;
  while (forms.size() < m) {
    LinearForm<Field> form;
    bool homogeneous_part_zero = true;
    for (std::size_t j = 0; j < n; ++j) {
      auto c = field.from_int(detail::draw_symmetric(rng, bound));
      homogeneous_part_zero = homogeneous_part_zero && field.is_zero(c);
      form.coefficients.push_back(c);
    }
    form.constant = field.from_int(detail::draw_symmetric(rng, bound));
    if (!homogeneous_part_zero) forms.push_back(std::move(form));
  }
  return forms;
}

/// Cuts the ideal with the given forms and counts standard monomials.
template <class Field>
TrialOutcome<Field> degree_trial(const IdealPresentation<Field>& ideal, std::size_t m,
                                 std::vector<LinearForm<Field>> forms, MonomialOrder order = MonomialOrder::degrevlex()) {
  if (forms.size() != m) throw PreconditionError("expected one linear form per dimension");
  for (const auto& f : forms) {
    if (f.coefficients.size() != ideal.num_vars()) throw RingMismatch("linear form arity differs from the ideal");
  }
  std::vector<Polynomial<Field>> cuts;
  for (const auto& f : forms) cuts.push_back(f.to_polynomial(ideal.field()));
  auto gb = buchberger(ideal.plus(cuts), order);
  TrialOutcome<Field> outcome{std::move(forms), std::nullopt, false};
  if (gb.is_unit()) {
    outcome.empty_variety = true;
  } else if (is_zero_dimensional(gb)) {
    outcome.count = standard_monomial_count(gb);
  }
  return outcome;
}

namespace detail {

template <class Fn>
void parallel_for(std::size_t count, std::size_t threads, Fn&& fn) {
  if (threads == 0) threads = std::max(1U, std::thread::hardware_concurrency());
  threads = std::min(threads, count);
  if (threads <= 1) {
    for (std::size_t i = 0; i < count; ++i) fn(i);
    return;
  }
  std::atomic<std::size_t> next{0};
  std::exception_ptr failure;
  std::mutex failure_mutex;
  std::vector<std::thread> pool;
  for (std::size_t w = 0; w < threads; ++w) {
    pool.emplace_back([&] {
      for (std::size_t i = next++; i < count; i = next++) {
        try {
          fn(i);
        } catch (...) {
          std::lock_guard lock(failure_mutex);
          if (!failure) failure = std::current_exception();
        }
      }
    });
  }
  for (auto& t : pool) t.join();
  if (failure) std::rethrow_exception(failure);
}

}  // namespace detail

/// Degree of an equidimensional ideal of asserted dimension m.
///
/// Throws DimensionMismatch when the Krull dimension is not m,
/// AllTrialsFailed when no trial ever produced a zero-dimensional cut, and
/// NoConsensus when trials never reached a strict majority.
template <class Field>
DegreeReport<Field> degree_equidimensional(const IdealPresentation<Field>& ideal, std::size_t m,
                                           const DegreeConfig& config = {}) {
  if (config.trials < 1) throw PreconditionError("at least one trial is required");
  if (config.coefficient_bound < 2) throw PreconditionError("coefficient bound must be at least 2");
  const Field& field = ideal.field();
  auto gb = buchberger(ideal, config.order);
  long dim = dimension(gb);
  if (dim != static_cast<long>(m)) throw DimensionMismatch(static_cast<long>(m), dim);

  DegreeReport<Field> report{0, {}, config.seed, config.coefficient_bound, field, mpq_class(1), 0, 0};
  if (m == 0) {
    // No cut needed: the degree is the quotient dimension itself.
    auto count = standard_monomial_count(gb);
    report.degree = *count;
    report.trials.push_back({{}, count, false});
    return report;
  }

  bool any_success = false;
  std::uint64_t bound = config.coefficient_bound;
  std::size_t trials = config.trials;
  for (std::size_t round = 0; round <= config.max_escalations; ++round) {
    std::vector<TrialOutcome<Field>> outcomes(trials);
    detail::parallel_for(trials, config.threads, [&](std::size_t i) {
      auto forms = random_linear_forms(ideal.num_vars(), m, trial_seed(config.seed, round, i), bound, field);
      outcomes[i] = degree_trial(ideal, m, std::move(forms), config.order);
    });

    std::map<std::uint64_t, std::size_t> tally;
    std::size_t successes = 0;
    for (const auto& o : outcomes) {
      if (!o.succeeded()) continue;
      ++successes;
      ++tally[*o.count];
    }
    any_success = any_success || successes > 0;
    for (const auto& [value, votes] : tally) {
      if (2 * votes > successes) {
        report.degree = value;
        report.trials = std::move(outcomes);
        report.coefficient_bound = bound;
        report.agreement_ratio = mpq_class(votes, successes);
        report.agreement_ratio.canonicalize();
        report.escalations = round;
        report.failed_trials = trials - successes;
        return report;
      }
    }
    if (round == config.max_escalations) break;
    if (bound > (std::uint64_t{1} << 61) || trials > (std::size_t{1} << 20)) break;
    bound *= 2;
    trials *= 2;
  }
  if (!any_success) throw AllTrialsFailed("no trial produced a zero-dimensional cut");
  throw NoConsensus("trials did not reach a strict majority after escalation");
}

}  // namespace eqdeg
