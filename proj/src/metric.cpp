#include "pcx/metric.hpp"

#include <utility>

#include "pcx/detail/transport_checks.hpp"
#include "pcx/errors.hpp"
#include "pcx/laws.hpp"

namespace pcx {

// ---------------------------------------------------------------------------
// GMetric
// ---------------------------------------------------------------------------

struct GMetric::Impl {
  Group domain;
  AloGroup codomain;
  Eval eval;
  std::string name;
  MetricProvenance provenance;
};

GMetric::GMetric(std::shared_ptr<const Impl> impl) : impl_(std::move(impl)) {}

const Group& GMetric::domain() const { return impl_->domain; }
const AloGroup& GMetric::codomain() const { return impl_->codomain; }
const std::string& GMetric::name() const { return impl_->name; }
MetricProvenance GMetric::provenance() const { return impl_->provenance; }

Elem GMetric::operator()(const Elem& x, const Elem& y) const {
  impl_->domain.require_owned(x);
  impl_->domain.require_owned(y);
  Elem r = impl_->eval(x, y);
  impl_->codomain.group().require_owned(r);
  return r;
}

GMetric GMetric::unchecked(Group domain, AloGroup codomain, Eval eval,
                           std::string name, MetricProvenance provenance) {
  return GMetric(std::make_shared<const Impl>(Impl{
      std::move(domain), std::move(codomain), std::move(eval), std::move(name),
      provenance}));
}

GMetric GMetric::custom(Group domain, AloGroup codomain, Eval eval,
                        std::string name, CheckOptions opts) {
  GMetric d = unchecked(std::move(domain), std::move(codomain), std::move(eval),
                        std::move(name), MetricProvenance::custom);
  if (opts.checked) require_passed(check_metric_axioms(d, opts.samples, opts.seed));
  return d;
}

// ---------------------------------------------------------------------------
// GAbsoluteValue
// ---------------------------------------------------------------------------

struct GAbsoluteValue::Impl {
  Group domain;
  AloGroup codomain;
  Eval eval;
  std::string name;
};

GAbsoluteValue::GAbsoluteValue(std::shared_ptr<const Impl> impl)
    : impl_(std::move(impl)) {}

const Group& GAbsoluteValue::domain() const { return impl_->domain; }
const AloGroup& GAbsoluteValue::codomain() const { return impl_->codomain; }
const std::string& GAbsoluteValue::name() const { return impl_->name; }

Elem GAbsoluteValue::operator()(const Elem& x) const {
  impl_->domain.require_owned(x);
  Elem r = impl_->eval(x);
  impl_->codomain.group().require_owned(r);
  return r;
}

GAbsoluteValue GAbsoluteValue::unchecked(Group domain, AloGroup codomain, Eval eval,
                                         std::string name) {
  return GAbsoluteValue(std::make_shared<const Impl>(Impl{
      std::move(domain), std::move(codomain), std::move(eval), std::move(name)}));
}

GAbsoluteValue GAbsoluteValue::custom(Group domain, AloGroup codomain, Eval eval,
                                      std::string name, CheckOptions opts) {
  GAbsoluteValue v = unchecked(std::move(domain), std::move(codomain),
                               std::move(eval), std::move(name));
  if (opts.checked) require_passed(check_absvalue_axioms(v, opts.samples, opts.seed));
  return v;
}

// ---------------------------------------------------------------------------
// constructions
// ---------------------------------------------------------------------------

GMetric norm_induced_metric(const AloGroup& g) {
  AloGroup G = g;
  return GMetric::unchecked(
      G.group(), G,
      [G](const Elem& x, const Elem& y) {
        return gnorm(G, G.op(x, G.inverse(y)));
      },
      "d[" + g.name() + "]", MetricProvenance::norm_induced);
}

GMetric metric_from_absolute_value(const GAbsoluteValue& v, const CheckOptions& opts) {
  // The construction only yields a metric when v really is an absolute
  // value, so those laws are gated on a spot check regardless of opts.
  require_passed(check_absvalue_axioms(v, opts.samples, opts.seed));

  GAbsoluteValue vv = v;
  Group X = v.domain();
  AloGroup G = v.codomain();
  GMetric d = GMetric::unchecked(
      X, G,
      [vv, X, G](const Elem& x, const Elem& y) {
        Elem a = vv(X.op(x, X.inverse(y)));
        Elem b = vv(X.op(y, X.inverse(x)));
        return G.max(a, b);
      },
      "d_v[" + v.name() + "]", MetricProvenance::from_absolute_value);
  if (opts.checked) require_passed(check_metric_axioms(d, opts.samples, opts.seed));
  return d;
}

namespace {

/// Sampled (or exhaustive, for small finite domains) injectivity check.
void require_injective(const GroupHom& phi, const GMetric& d, std::size_t samples,
                       std::uint64_t seed) {
  const Group& X = phi.domain;
  auto offend = [&](const Elem& x, const Elem& y) {
    return !X.eq(x, y) && d.domain().eq(phi(x), phi(y));
  };
  auto fail = [&](const Elem& x, const Elem& y) {
    throw law_violation(
        "transport[" + phi.name + "]: map identifies distinct elements " +
            X.format(x) + " and " + X.format(y),
        "transport.injectivity", X.format(x) + " ~ " + X.format(y));
  };
  if (X.is_finite() && X.order() * X.order() <= 200'000) {
    auto elems = X.carrier();
    for (const Elem& x : elems)
      for (const Elem& y : elems)
        if (offend(x, y)) fail(x, y);
    return;
  }
  Rng rng(seed);
  auto sample = X.default_sampler();
  for (std::size_t i = 0; i < samples; ++i) {
    Elem x = sample(rng), y = sample(rng);
    if (offend(x, y)) fail(x, y);
  }
}

}  // namespace

/// Sampled homomorphism check shared by the transport constructions.
void detail::require_homomorphism(const GroupHom& phi, std::size_t samples,
                                  std::uint64_t seed) {
  const Group& X = phi.domain;
  const Group& Y = phi.codomain;
  auto offend = [&](const Elem& x, const Elem& y) {
    return !Y.eq(phi(X.op(x, y)), Y.op(phi(x), phi(y)));
  };
  auto fail = [&](const Elem& x, const Elem& y) {
    throw law_violation(
        "transport[" + phi.name + "]: map does not respect the operation at (" +
            X.format(x) + ", " + X.format(y) + ")",
        "transport.homomorphism", X.format(x) + ", " + X.format(y));
  };
  if (X.is_finite() && X.order() * X.order() <= 200'000) {
    auto elems = X.carrier();
    for (const Elem& x : elems)
      for (const Elem& y : elems)
        if (offend(x, y)) fail(x, y);
    return;
  }
  Rng rng(seed);
  auto sample = X.default_sampler();
  for (std::size_t i = 0; i < samples; ++i) {
    Elem x = sample(rng), y = sample(rng);
    if (offend(x, y)) fail(x, y);
  }
}

GMetric transport_metric(const GroupHom& phi, const GMetric& d,
                         const CheckOptions& opts) {
  if (!phi.codomain.same(d.domain()))
    throw structure_mismatch("transport_metric: homomorphism lands in " +
                             phi.codomain.name() + " but the metric lives on " +
                             d.domain().name());
  detail::require_homomorphism(phi, opts.samples, opts.seed);
  require_injective(phi, d, opts.samples, opts.seed);

  GroupHom f = phi;
  GMetric dd = d;
  GMetric out = GMetric::unchecked(
      phi.domain, d.codomain(),
      [f, dd](const Elem& x, const Elem& y) { return dd(f(x), f(y)); },
      "transport[" + d.name() + " via " + phi.name + "]",
      MetricProvenance::transported);
  if (opts.checked) require_passed(check_metric_axioms(out, opts.samples, opts.seed));
  return out;
}

GAbsoluteValue transport_absolute_value(const GroupHom& phi, const GAbsoluteValue& v,
                                        const CheckOptions& opts) {
  if (!phi.codomain.same(v.domain()))
    throw structure_mismatch("transport_absolute_value: homomorphism lands in " +
                             phi.codomain.name() +
                             " but the absolute value lives on " + v.domain().name());
  detail::require_homomorphism(phi, opts.samples, opts.seed);

  GroupHom f = phi;
  GAbsoluteValue vv = v;
  GAbsoluteValue out = GAbsoluteValue::unchecked(
      phi.domain, v.codomain(),
      [f, vv](const Elem& x) { return vv(f(x)); },
      "transport[" + v.name() + " via " + phi.name + "]");
  if (opts.checked)
    require_passed(check_absvalue_axioms(out, opts.samples, opts.seed));
  return out;
}

}  // namespace pcx
