#pragma once

#include <cstdint>
#include <string>
#include <string_view>
#include <vector>

#include "pcx/group.hpp"
#include "pcx/indicator.hpp"
#include "pcx/laws.hpp"
#include "pcx/metric.hpp"

namespace pcx {

// --- ratio-scale family (positive reals under multiplication) -------------

/// v(x) = 1 - min{x, 1/x}, valued in the additive reals.
GAbsoluteValue ki_absolute_value();

/// The distance induced by ki_absolute_value: 1 - min{x/y, y/x}.
GMetric ki_metric();

/// The classic ratio-scale inconsistency indicator
/// ki(a, b, c) = 1 - min{ b/(ac), ac/b }, bounded by 1.
IndicatorMap ki_indicator();

// --- exponential family (reals under addition; base a > 0, a != 1) --------

/// w_a(x) = 1 - min{a^x, a^-x}.
GAbsoluteValue w_absolute_value(double base);

/// rho_a(x, y) = 1 - min{a^(x-y), a^(y-x)}.
GMetric rho_metric(double base);

/// s_a(x, y, z) = 1 - min{a^(x+z-y), a^(y-x-z)}: the image of
/// ki_indicator under x -> log_a(x), bounded by 1.
IndicatorMap s_a_indicator(double base);

// --- three-level metric ----------------------------------------------------

/**
 * The coarse distance that only remembers which side of the identity its
 * arguments lie on: a for two distinct values at or above the identity,
 * b for two below, c across, identity on the diagonal.  Requires
 * identity < a < b < c.
 */
GMetric three_level_metric(const AloGroup& g, const Elem& a, const Elem& b,
                           const Elem& c);

/// Default parameters (1, 2, 3) over the additive reals.
GMetric three_level_metric();

IndicatorMap three_level_indicator(const AloGroup& g, const Elem& a, const Elem& b,
                                   const Elem& c);
IndicatorMap three_level_indicator();

// --- finite groups ---------------------------------------------------------

/// The group {e, a, b, c} in which every element squares to the identity.
Group klein_four_group();

/// All six permutations of three points, labelled in cycle notation.
/// The smallest noncommutative group.
Group symmetric_group_3();

// --- discrete family -------------------------------------------------------

/// d(x, y) = 0 when x = y and 1 otherwise, into the additive reals.
GMetric discrete_metric(const Group& domain);

/// v(x) = 0 at the identity and 1 elsewhere, into the additive reals.
GAbsoluteValue discrete_absolute_value(const Group& domain);

/// The indicator induced by discrete_metric: 0 on consistent triples,
/// 1 on everything else.
IndicatorMap discrete_indicator(const Group& domain);

// --- scale changes ---------------------------------------------------------

/// x -> base^x from the additive onto the multiplicative reals, with
/// logarithm as the inverse direction.  Requires base > 0, base != 1.
GroupHom exp_isomorphism(double base);

// --- selectors -------------------------------------------------------------

/**
 * Builds an indicator from a textual selector:
 *   ki
 *   sa:<base>                  (base e spelled "e" is accepted)
 *   three-level                (defaults 1, 2, 3)
 *   three-level:<a>,<b>,<c>
 *   product:<sel>,<sel>
 *   symmetrized:<sel>
 * Throws parse_error on anything else, including degenerate parameters.
 */
IndicatorMap parse_indicator(std::string_view selector);

// --- catalog ---------------------------------------------------------------

/**
 * The named registry of every construction shipped with the library.
 * Building the catalog re-verifies the algebraic laws of each entry on a
 * fixed 200-sample pass (exhaustive for the finite domains) and throws
 * law_violation if anything is off, so a constructed catalog is a
 * certificate.  law_suite() re-runs the checks at any sample count.
 */
class InstanceCatalog {
 public:
  InstanceCatalog();

  struct AloEntry {
    std::string name;
    AloGroup alo;
  };
  struct MetricEntry {
    std::string name;
    GMetric metric;
  };
  struct AbsEntry {
    std::string name;
    GAbsoluteValue value;
  };
  struct IndicatorEntry {
    std::string name;
    IndicatorMap map;
  };
  struct TernaryEntry {
    std::string name;
    G3Metric metric;
  };
  struct BoundEntry {
    std::string name;
    IndicatorMap map;
    Elem bound;
  };

  const std::vector<AloEntry>& alo_groups() const { return alos_; }
  const std::vector<MetricEntry>& metrics() const { return metrics_; }
  const std::vector<AbsEntry>& absolute_values() const { return absvalues_; }
  const std::vector<IndicatorEntry>& indicators() const { return indicators_; }
  const std::vector<TernaryEntry>& ternary_metrics() const { return ternaries_; }
  const std::vector<BoundEntry>& bounds() const { return bounds_; }

  std::vector<LawReport> law_suite(std::size_t samples,
                                   std::uint64_t seed = default_seed) const;

 private:
  std::vector<AloEntry> alos_;
  std::vector<MetricEntry> metrics_;
  std::vector<AbsEntry> absvalues_;
  std::vector<IndicatorEntry> indicators_;
  std::vector<TernaryEntry> ternaries_;
  std::vector<BoundEntry> bounds_;
};

/// Deliberately broken structures (a non-metric, a constant indicator, a
/// signed "absolute value").  Their law reports must fail with witnesses;
/// used to prove the checkers can detect violations.
std::vector<LawReport> negative_control_reports(std::size_t samples,
                                                std::uint64_t seed = default_seed);

}  // namespace pcx
