#pragma once

// Secant and regular sequence certification, and checks of the Bézout-type
// inequality deg(a + (f_1..f_k)) <= deg(a) * prod deg(f_i) for regular
// sequences and of the Masser-Wüstholz-type bound deg(Q_k) <= D_1...D_k.

#include <algorithm>
#include <cstddef>
#include <cstdint>
#include <optional>
#include <set>
#include <string>
#include <vector>

#include "eqdeg/degree.hpp"
#include "eqdeg/errors.hpp"
#include "eqdeg/groebner.hpp"
#include "eqdeg/ideal.hpp"
#include "eqdeg/ideal_ops.hpp"

namespace eqdeg {

enum class SequenceKind { Secant, Regular };

struct SequenceStep {
  std::size_t index = 0;              ///< 1-based position j in the sequence
  std::optional<long> dimension;      ///< dim(a + (f_1..f_j)), secant checks only
  bool zero_divisor = false;          ///< f_j is a zero divisor modulo a + (f_1..f_{j-1})
  bool unit_ideal = false;            ///< a + (f_1..f_j) is the whole ring
};

struct SequenceCheckReport {
  SequenceKind kind = SequenceKind::Secant;
  bool ok = true;
  std::optional<std::size_t> failing_index;
  std::vector<SequenceStep> steps;
};

/// Refusal of the Bézout check on a sequence that is not regular.
class NotRegular : public Refusal {
public:
  explicit NotRegular(SequenceCheckReport report)
      : Refusal("sequence is not regular (fails at position " +
                std::to_string(report.failing_index.value_or(0)) + ")"),
        report_(std::move(report)) {}

  const SequenceCheckReport& report() const { return report_; }

private:
  SequenceCheckReport report_;
};

/// Checks that each prefix f_1..f_j drops the dimension of a to m - j.
template <class Field>
SequenceCheckReport is_secant_sequence(const IdealPresentation<Field>& a, std::size_t m,
                                       const std::vector<Polynomial<Field>>& fs) {
  if (fs.size() > m) throw PreconditionError("a secant sequence has at most m elements");
  long base = dimension(buchberger(a));
  if (base != static_cast<long>(m)) throw DimensionMismatch(static_cast<long>(m), base);
  SequenceCheckReport report{SequenceKind::Secant, true, std::nullopt, {}};
  std::vector<Polynomial<Field>> prefix;
  for (std::size_t j = 1; j <= fs.size(); ++j) {
    prefix.push_back(fs[j - 1]);
    auto gb = buchberger(a.plus(prefix));
    SequenceStep step;
    step.index = j;
    step.dimension = dimension(gb);
    step.unit_ideal = gb.is_unit();
    report.steps.push_back(step);
    if (*step.dimension != static_cast<long>(m) - static_cast<long>(j)) {
      report.ok = false;
      report.failing_index = j;
      break;
    }
  }
  return report;
}

/// Checks that each f_j is a non-zero-divisor modulo a + (f_1..f_{j-1}),
/// i.e. (b : f_j) = b, and that every a + (f_1..f_j) stays proper.
template <class Field>
SequenceCheckReport is_regular_sequence(const IdealPresentation<Field>& a, const std::vector<Polynomial<Field>>& fs) {
  if (buchberger(a).is_unit()) throw PreconditionError("regular sequences need a proper ideal");
  SequenceCheckReport report{SequenceKind::Regular, true, std::nullopt, {}};
  IdealPresentation<Field> current = a.with_asserted_dimension(std::nullopt);
  for (std::size_t j = 1; j <= fs.size(); ++j) {
    const auto& f = fs[j - 1];
    SequenceStep step;
    step.index = j;
    if (f.is_zero()) {
      step.zero_divisor = true;
    } else {
      step.zero_divisor = !ideal_equal(ideal_quotient(current, f), current);
    }
    current = current.plus({f});
    step.unit_ideal = !step.zero_divisor && buchberger(current).is_unit();
    report.steps.push_back(step);
    if (step.zero_divisor || step.unit_ideal) {
      report.ok = false;
      report.failing_index = j;
      break;
    }
  }
  return report;
}

template <class Field>
struct BezoutCheckReport {
  std::uint64_t lhs = 0;  ///< deg(a + (f_1..f_k))
  std::uint64_t rhs = 0;  ///< deg(a) * prod deg(f_i)
  bool holds = false;
  SequenceCheckReport regularity;
  DegreeReport<Field> sum_degree;
  DegreeReport<Field> base_degree;
};

namespace detail {

inline std::uint64_t checked_mul(std::uint64_t a, std::uint64_t b) {
  std::uint64_t r = 0;
  if (__builtin_mul_overflow(a, b, &r)) throw Error("degree bound overflows 64 bits");
  return r;
}

}  // namespace detail

/// Verifies the Bézout inequality for a regular sequence. Refuses with
/// NotRegular when the sequence is not regular for a, since the inequality
/// is only claimed for regular sequences.
template <class Field>
BezoutCheckReport<Field> check_bezout_regular(const IdealPresentation<Field>& a, std::size_t m,
                                              const std::vector<Polynomial<Field>>& fs,
                                              const DegreeConfig& config = {}) {
  const std::size_t k = fs.size();
  if (k < 1 || k > m) throw PreconditionError("need 1 <= k <= m polynomials in the sequence");
  auto regularity = is_regular_sequence(a, fs);
  if (!regularity.ok) throw NotRegular(std::move(regularity));

  auto base = degree_equidimensional(a, m, config);
  auto sum = degree_equidimensional(a.plus(fs), m - k, config);
  std::uint64_t rhs = base.degree;
  for (const auto& f : fs) rhs = detail::checked_mul(rhs, static_cast<std::uint64_t>(f.total_degree()));
  return {sum.degree, rhs, sum.degree <= rhs, std::move(regularity), std::move(sum), std::move(base)};
}

/// Degree data of the isolated components of one height: deg(Q_k) = degree.
struct ComponentDegree {
  std::size_t height = 0;
  std::uint64_t degree = 0;
};

struct ComponentBound {
  std::size_t height = 0;
  std::uint64_t degree = 0;
  std::uint64_t bound = 0;  ///< D_1 * ... * D_height
  bool holds = false;
};

struct MasserWustholzReport {
  std::vector<ComponentBound> components;
  std::uint64_t total_degree = 0;  ///< sum of the component degrees
  std::uint64_t total_bound = 0;   ///< sum over the heights present of D_1...D_k
  bool holds = false;              ///< every per-height bound and the total bound hold
};

/// Pure arithmetic check of deg(Q_k) <= D_1...D_k for every supplied
/// height k and of the summed bound. Degrees must be sorted descending.
inline MasserWustholzReport masser_wustholz_check(const std::vector<ComponentDegree>& components,
                                                  const std::vector<std::uint64_t>& generator_degrees) {
  if (!std::is_sorted(generator_degrees.begin(), generator_degrees.end(), std::greater<>())) {
    throw PreconditionError("generator degrees must be sorted in descending order");
  }
  if (components.empty()) throw PreconditionError("no component data supplied");
  std::set<std::size_t> heights;
  MasserWustholzReport report;
  report.holds = true;
  for (const auto& c : components) {
    if (c.height < 1 || c.height > generator_degrees.size()) {
      throw PreconditionError("component height " + std::to_string(c.height) +
                              " outside 1.." + std::to_string(generator_degrees.size()));
    }
    if (!heights.insert(c.height).second) {
      throw PreconditionError("height " + std::to_string(c.height) + " listed twice");
    }
    std::uint64_t bound = 1;
    for (std::size_t i = 0; i < c.height; ++i) bound = detail::checked_mul(bound, generator_degrees[i]);
    bool holds = c.degree <= bound;
    report.components.push_back({c.height, c.degree, bound, holds});
    report.total_degree += c.degree;
    report.total_bound += bound;
    report.holds = report.holds && holds;
  }
  report.holds = report.holds && report.total_degree <= report.total_bound;
  return report;
}

/// Total degrees of the nonzero generators, sorted descending.
template <class Field>
std::vector<std::uint64_t> generator_degrees(const IdealPresentation<Field>& a) {
  std::vector<std::uint64_t> ds;
  for (const auto& g : a.generators()) {
    if (!g.is_zero()) ds.push_back(static_cast<std::uint64_t>(g.total_degree()));
  }
  std::sort(ds.begin(), ds.end(), std::greater<>());
  return ds;
}

template <class Field>
MasserWustholzReport masser_wustholz_check(const IdealPresentation<Field>& a,
                                           const std::vector<ComponentDegree>& components) {
  return masser_wustholz_check(components, generator_degrees(a));
}

}  // namespace eqdeg
