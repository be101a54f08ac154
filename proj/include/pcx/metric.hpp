#pragma once

#include <functional>
#include <memory>
#include <string>

#include "pcx/group.hpp"
#include "pcx/sampling.hpp"

namespace pcx {

/// How a metric came to be; useful for tooling and for the fast paths
/// that only apply to absolute-value-induced constructions.
enum class MetricProvenance {
  norm_induced,
  from_absolute_value,
  from_indicator,
  transported,
  custom,
};

/**
 * A distance on a group X with values in an abelian linearly ordered
 * group G: d(x, y) = identity iff x = y, d is symmetric, and
 * d(x, y) <= d(x, z) (.) d(z, y).  Instances are immutable handles.
 */
class GMetric {
 public:
  using Eval = std::function<Elem(const Elem&, const Elem&)>;

  const Group& domain() const;
  const AloGroup& codomain() const;
  const std::string& name() const;
  MetricProvenance provenance() const;

  /// Evaluates the metric; ownership-checked on both sides.
  Elem operator()(const Elem& x, const Elem& y) const;

  /**
   * Wraps a user evaluation function.  With opts.checked (the default
   * here) the metric axioms are verified on samples before the handle is
   * returned; a failure throws law_violation with a witness.
   */
  static GMetric custom(Group domain, AloGroup codomain, Eval eval,
                        std::string name,
                        CheckOptions opts = {.checked = true});

  /// Library-internal: wrap without the verification pass.
  static GMetric unchecked(Group domain, AloGroup codomain, Eval eval,
                           std::string name, MetricProvenance provenance);

 private:
  struct Impl;
  explicit GMetric(std::shared_ptr<const Impl> impl);
  std::shared_ptr<const Impl> impl_;
};

/**
 * An absolute value on a group X, valued in an alo-group G:
 * v(x) >= identity, v(x) = identity iff x = identity, and
 * v(x y) <= v(x) (.) v(y).
 */
class GAbsoluteValue {
 public:
  using Eval = std::function<Elem(const Elem&)>;

  const Group& domain() const;
  const AloGroup& codomain() const;
  const std::string& name() const;

  Elem operator()(const Elem& x) const;

  static GAbsoluteValue custom(Group domain, AloGroup codomain, Eval eval,
                               std::string name,
                               CheckOptions opts = {.checked = true});

  static GAbsoluteValue unchecked(Group domain, AloGroup codomain, Eval eval,
                                  std::string name);

 private:
  struct Impl;
  explicit GAbsoluteValue(std::shared_ptr<const Impl> impl);
  std::shared_ptr<const Impl> impl_;
};

/// The canonical distance of an alo-group: d(x, y) = ||x (.) y^-1||.
GMetric norm_induced_metric(const AloGroup& g);

/**
 * d_v(x, y) = max{ v(x y^-1), v(y x^-1) }.  The absolute-value laws are
 * spot-checked on opts.samples tuples before construction (always), and
 * the resulting metric is fully checked when opts.checked is set.
 */
GMetric metric_from_absolute_value(const GAbsoluteValue& v,
                                   const CheckOptions& opts = {});

/**
 * Pulls a metric back along an injective homomorphism:
 * d'(x, y) = d(phi(x), phi(y)) on phi's domain.  Injectivity is
 * spot-checked on samples; a collision throws law_violation.
 */
GMetric transport_metric(const GroupHom& phi, const GMetric& d,
                         const CheckOptions& opts = {});

/// v' = v o phi.  The homomorphism law is spot-checked on samples.
GAbsoluteValue transport_absolute_value(const GroupHom& phi,
                                        const GAbsoluteValue& v,
                                        const CheckOptions& opts = {});

}  // namespace pcx
