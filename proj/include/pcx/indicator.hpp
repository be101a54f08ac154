#pragma once

#include <functional>
#include <memory>
#include <string>

#include "pcx/group.hpp"
#include "pcx/laws.hpp"
#include "pcx/metric.hpp"
#include "pcx/sampling.hpp"

namespace pcx {

enum class IndicatorProvenance {
  from_metric,
  from_absolute_value,
  combinator,
  transport,
  symmetrization,
  custom,
};

/**
 * An inconsistency indicator map on a group X, valued in an alo-group G.
 * T(a, b, c) measures how far the triple is from the consistency relation
 * a c = b:
 *   (i)   T(a, b, c) = identity  iff  a c = b,
 *   (ii)  T(a, b, c) = T(b, a c, identity),
 *   (iii) T(a, d e, c) <= T(a, b, c) (.) T(d, b, e).
 *
 * absolute_value_induced() marks maps of the form
 * T(a, b, c) = max{ v(a c b^-1), v(b (a c)^-1) }; some matrix-level
 * shortcuts are only valid for that family and test this flag.
 */
class IndicatorMap {
 public:
  using Eval = std::function<Elem(const Elem&, const Elem&, const Elem&)>;

  const Group& domain() const;
  const AloGroup& codomain() const;
  const std::string& name() const;
  IndicatorProvenance provenance() const;
  bool absolute_value_induced() const;

  Elem operator()(const Elem& a, const Elem& b, const Elem& c) const;

  static IndicatorMap custom(Group domain, AloGroup codomain, Eval eval,
                             std::string name,
                             CheckOptions opts = {.checked = true});

  static IndicatorMap unchecked(Group domain, AloGroup codomain, Eval eval,
                                std::string name, IndicatorProvenance provenance,
                                bool absolute_value_induced);

 private:
  struct Impl;
  explicit IndicatorMap(std::shared_ptr<const Impl> impl);
  std::shared_ptr<const Impl> impl_;
};

/**
 * A ternary distance on a group X valued in an alo-group G:
 * g(x, x, x) = identity, g(x, x, y) > identity for x != y, g is
 * symmetric in its three arguments, g(x, x, y) <= g(x, y, z) whenever
 * z != y, and g(x, y, z) <= g(x, a, a) (.) g(a, y, z).
 */
class G3Metric {
 public:
  using Eval = std::function<Elem(const Elem&, const Elem&, const Elem&)>;

  const Group& domain() const;
  const AloGroup& codomain() const;
  const std::string& name() const;

  Elem operator()(const Elem& x, const Elem& y, const Elem& z) const;

  static G3Metric custom(Group domain, AloGroup codomain, Eval eval,
                         std::string name,
                         CheckOptions opts = {.checked = true});

  static G3Metric unchecked(Group domain, AloGroup codomain, Eval eval,
                            std::string name);

 private:
  struct Impl;
  explicit G3Metric(std::shared_ptr<const Impl> impl);
  std::shared_ptr<const Impl> impl_;
};

/// T(a, b, c) = d(a c, b).  Metric laws are spot-checked first.
IndicatorMap indicator_from_metric(const GMetric& d, const CheckOptions& opts = {});

/// d(x, y) = T(x, y, identity).  Indicator laws are spot-checked first.
GMetric metric_from_indicator(const IndicatorMap& t, const CheckOptions& opts = {});

/// Pointwise max of two indicators over the same domain and codomain.
IndicatorMap combine_max(const IndicatorMap& t1, const IndicatorMap& t2,
                         const CheckOptions& opts = {});

/// Pointwise group product of two indicators (same domain and codomain).
IndicatorMap combine_odot(const IndicatorMap& t1, const IndicatorMap& t2,
                             const CheckOptions& opts = {});

/// Pointwise min{t, bound}; requires bound > identity in the codomain.
IndicatorMap cap_at(const IndicatorMap& t, const Elem& bound,
                    const CheckOptions& opts = {});

/**
 * Indicator on the direct product of the two domains (same codomain),
 * evaluating each component and taking the max.
 */
IndicatorMap product_indicator(const IndicatorMap& t1, const IndicatorMap& t2,
                               const CheckOptions& opts = {});

/**
 * The argument-reversed map (a, b, c) -> t(c, b, a).  This is an
 * indicator exactly when the domain is commutative, so a noncommutative
 * domain (detected exactly for finite groups, by sampling otherwise)
 * throws abelian_required with a noncommuting pair.
 */
IndicatorMap reverse_indicator(const IndicatorMap& t, const CheckOptions& opts = {});

/// (a, b, c) -> t(c^-1, b^-1, a^-1); an indicator over any domain.
IndicatorMap inverse_indicator(const IndicatorMap& t, const CheckOptions& opts = {});

/// max{ t(a, b, c), t(c^-1, b^-1, a^-1) }: symmetric under the pairing
/// (a, b, c) <-> (c^-1, b^-1, a^-1) and still an indicator.
IndicatorMap pairwise_symmetrization(const IndicatorMap& t,
                                     const CheckOptions& opts = {});

/// Pulls an indicator back along a homomorphism (spot-checked):
/// s(a, b, c) = t(phi(a), phi(b), phi(c)).
IndicatorMap transport_indicator(const GroupHom& phi, const IndicatorMap& t,
                                 const CheckOptions& opts = {});

/**
 * Max of t over all six orderings of (a, b, c).  The result is symmetric
 * but usually fails the indicator laws: whenever some x has x x !=
 * identity, the consistent triple (x, x x, x) already evaluates above the
 * identity under one of the reorderings.  The verdict carries the law
 * report; valid_indicator stays true only on domains where every element
 * is its own inverse.
 */
struct FullSymmetrization {
  IndicatorMap candidate;
  bool valid_indicator = false;
  LawReport report;
};

FullSymmetrization full_symmetrization(const IndicatorMap& t,
                                       const CheckOptions& opts = {});

/// g(x, y, z) = max of t(., ., identity) over the three unordered pairs.
G3Metric ternary_metric_from_indicator(const IndicatorMap& t,
                                       const CheckOptions& opts = {});

/// T(a, b, c) = max{ g(a c, b, b), g(a c, a c, b) }: recovers an
/// indicator from a ternary distance.
IndicatorMap indicator_from_ternary_metric(const G3Metric& g,
                                           const CheckOptions& opts = {});

}  // namespace pcx
