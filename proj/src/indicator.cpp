#include "pcx/indicator.hpp"

#include <array>
#include <utility>

#include "pcx/detail/transport_checks.hpp"
#include "pcx/errors.hpp"

namespace pcx {

// ---------------------------------------------------------------------------
// IndicatorMap
// ---------------------------------------------------------------------------

struct IndicatorMap::Impl {
  Group domain;
  AloGroup codomain;
  Eval eval;
  std::string name;
  IndicatorProvenance provenance;
  bool absolute_value_induced;
};

IndicatorMap::IndicatorMap(std::shared_ptr<const Impl> impl) : impl_(std::move(impl)) {}

const Group& IndicatorMap::domain() const { return impl_->domain; }
const AloGroup& IndicatorMap::codomain() const { return impl_->codomain; }
const std::string& IndicatorMap::name() const { return impl_->name; }
IndicatorProvenance IndicatorMap::provenance() const { return impl_->provenance; }
bool IndicatorMap::absolute_value_induced() const {
  return impl_->absolute_value_induced;
}

Elem IndicatorMap::operator()(const Elem& a, const Elem& b, const Elem& c) const {
  impl_->domain.require_owned(a);
  impl_->domain.require_owned(b);
  impl_->domain.require_owned(c);
  Elem r = impl_->eval(a, b, c);
  impl_->codomain.group().require_owned(r);
  return r;
}

IndicatorMap IndicatorMap::unchecked(Group domain, AloGroup codomain, Eval eval,
                                     std::string name, IndicatorProvenance provenance,
                                     bool absolute_value_induced) {
  return IndicatorMap(std::make_shared<const Impl>(Impl{
      std::move(domain), std::move(codomain), std::move(eval), std::move(name),
      provenance, absolute_value_induced}));
}

IndicatorMap IndicatorMap::custom(Group domain, AloGroup codomain, Eval eval,
                                  std::string name, CheckOptions opts) {
  IndicatorMap t = unchecked(std::move(domain), std::move(codomain), std::move(eval),
                             std::move(name), IndicatorProvenance::custom, false);
  if (opts.checked) require_passed(check_indicator_axioms(t, opts.samples, opts.seed));
  return t;
}

// ---------------------------------------------------------------------------
// G3Metric
// ---------------------------------------------------------------------------

struct G3Metric::Impl {
  Group domain;
  AloGroup codomain;
  Eval eval;
  std::string name;
};

G3Metric::G3Metric(std::shared_ptr<const Impl> impl) : impl_(std::move(impl)) {}

const Group& G3Metric::domain() const { return impl_->domain; }
const AloGroup& G3Metric::codomain() const { return impl_->codomain; }
const std::string& G3Metric::name() const { return impl_->name; }

Elem G3Metric::operator()(const Elem& x, const Elem& y, const Elem& z) const {
  impl_->domain.require_owned(x);
  impl_->domain.require_owned(y);
  impl_->domain.require_owned(z);
  Elem r = impl_->eval(x, y, z);
  impl_->codomain.group().require_owned(r);
  return r;
}

G3Metric G3Metric::unchecked(Group domain, AloGroup codomain, Eval eval,
                             std::string name) {
  return G3Metric(std::make_shared<const Impl>(Impl{
      std::move(domain), std::move(codomain), std::move(eval), std::move(name)}));
}

G3Metric G3Metric::custom(Group domain, AloGroup codomain, Eval eval,
                          std::string name, CheckOptions opts) {
  G3Metric g = unchecked(std::move(domain), std::move(codomain), std::move(eval),
                         std::move(name));
  if (opts.checked) require_passed(check_g3_axioms(g, opts.samples, opts.seed));
  return g;
}

// ---------------------------------------------------------------------------
// metric <-> indicator
// ---------------------------------------------------------------------------

IndicatorMap indicator_from_metric(const GMetric& d, const CheckOptions& opts) {
  require_passed(check_metric_axioms(d, opts.samples, opts.seed));

  GMetric dd = d;
  Group X = d.domain();
  const bool av = d.provenance() == MetricProvenance::norm_induced ||
                  d.provenance() == MetricProvenance::from_absolute_value;
  IndicatorMap t = IndicatorMap::unchecked(
      X, d.codomain(),
      [dd, X](const Elem& a, const Elem& b, const Elem& c) {
        return dd(X.op(a, c), b);
      },
      "T[" + d.name() + "]",
      av ? IndicatorProvenance::from_absolute_value : IndicatorProvenance::from_metric,
      av);
  if (opts.checked) require_passed(check_indicator_axioms(t, opts.samples, opts.seed));
  return t;
}

GMetric metric_from_indicator(const IndicatorMap& t, const CheckOptions& opts) {
  require_passed(check_indicator_axioms(t, opts.samples, opts.seed));

  IndicatorMap tt = t;
  Group X = t.domain();
  GMetric d = GMetric::unchecked(
      X, t.codomain(),
      [tt, X](const Elem& x, const Elem& y) { return tt(x, y, X.identity()); },
      "d_T[" + t.name() + "]", MetricProvenance::from_indicator);
  if (opts.checked) require_passed(check_metric_axioms(d, opts.samples, opts.seed));
  return d;
}

// ---------------------------------------------------------------------------
// combinators
// ---------------------------------------------------------------------------

namespace {

void require_compatible(const IndicatorMap& t1, const IndicatorMap& t2,
                        const char* what) {
  if (!t1.domain().same(t2.domain()))
    throw structure_mismatch(std::string(what) + ": domains differ (" +
                             t1.domain().name() + " vs " + t2.domain().name() + ")");
  if (!t1.codomain().same(t2.codomain()))
    throw structure_mismatch(std::string(what) + ": codomains differ (" +
                             t1.codomain().name() + " vs " + t2.codomain().name() + ")");
}

}  // namespace

IndicatorMap combine_max(const IndicatorMap& t1, const IndicatorMap& t2,
                         const CheckOptions& opts) {
  require_compatible(t1, t2, "combine_max");
  IndicatorMap a = t1, b = t2;
  AloGroup G = t1.codomain();
  IndicatorMap t = IndicatorMap::unchecked(
      t1.domain(), G,
      [a, b, G](const Elem& x, const Elem& y, const Elem& z) {
        return G.max(a(x, y, z), b(x, y, z));
      },
      "max[" + t1.name() + ", " + t2.name() + "]", IndicatorProvenance::combinator,
      t1.absolute_value_induced() && t2.absolute_value_induced());
  if (opts.checked) require_passed(check_indicator_axioms(t, opts.samples, opts.seed));
  return t;
}

IndicatorMap combine_odot(const IndicatorMap& t1, const IndicatorMap& t2,
                             const CheckOptions& opts) {
  require_compatible(t1, t2, "combine_odot");
  IndicatorMap a = t1, b = t2;
  AloGroup G = t1.codomain();
  IndicatorMap t = IndicatorMap::unchecked(
      t1.domain(), G,
      [a, b, G](const Elem& x, const Elem& y, const Elem& z) {
        return G.op(a(x, y, z), b(x, y, z));
      },
      "odot[" + t1.name() + ", " + t2.name() + "]", IndicatorProvenance::combinator,
      t1.absolute_value_induced() && t2.absolute_value_induced());
  if (opts.checked) require_passed(check_indicator_axioms(t, opts.samples, opts.seed));
  return t;
}

IndicatorMap cap_at(const IndicatorMap& t, const Elem& bound,
                    const CheckOptions& opts) {
  AloGroup G = t.codomain();
  G.group().require_owned(bound);
  if (G.cmp(G.identity(), bound) != Ord::lt)
    throw precondition_error("cap_at: the cap " + G.format(bound) +
                             " must lie strictly above the identity");
  IndicatorMap inner = t;
  Elem cap = bound;
  IndicatorMap out = IndicatorMap::unchecked(
      t.domain(), G,
      [inner, cap, G](const Elem& x, const Elem& y, const Elem& z) {
        return G.min(inner(x, y, z), cap);
      },
      "cap[" + t.name() + " at " + G.format(bound) + "]",
      IndicatorProvenance::combinator, t.absolute_value_induced());
  if (opts.checked)
    require_passed(check_indicator_axioms(out, opts.samples, opts.seed));
  return out;
}

IndicatorMap product_indicator(const IndicatorMap& t1, const IndicatorMap& t2,
                               const CheckOptions& opts) {
  if (!t1.codomain().same(t2.codomain()))
    throw structure_mismatch("product_indicator: codomains differ (" +
                             t1.codomain().name() + " vs " + t2.codomain().name() + ")");
  Group P = Group::direct_product(t1.domain(), t2.domain());
  IndicatorMap a = t1, b = t2;
  AloGroup G = t1.codomain();
  IndicatorMap t = IndicatorMap::unchecked(
      P, G,
      [P, a, b, G](const Elem& x, const Elem& y, const Elem& z) {
        auto [x1, x2] = P.split(x);
        auto [y1, y2] = P.split(y);
        auto [z1, z2] = P.split(z);
        return G.max(a(x1, y1, z1), b(x2, y2, z2));
      },
      "product[" + t1.name() + ", " + t2.name() + "]", IndicatorProvenance::combinator,
      t1.absolute_value_induced() && t2.absolute_value_induced());
  if (opts.checked) require_passed(check_indicator_axioms(t, opts.samples, opts.seed));
  return t;
}

IndicatorMap reverse_indicator(const IndicatorMap& t, const CheckOptions& opts) {
  const Group& X = t.domain();
  if (auto pair = find_noncommuting_pair(X, opts.samples, opts.seed)) {
    const Elem &a = pair->first, &b = pair->second;
    throw abelian_required(
        "reverse_indicator[" + t.name() + "]: domain " + X.name() +
            " is not commutative (" + X.format(a) + " and " + X.format(b) +
            " do not commute), so the reversed map sends the consistent triple (b, ab, a) "
            "to the value at the inconsistent (a, ab, b) and misses the identity",
        a, b);
  }
  IndicatorMap inner = t;
  IndicatorMap out = IndicatorMap::unchecked(
      X, t.codomain(),
      [inner](const Elem& x, const Elem& y, const Elem& z) { return inner(z, y, x); },
      "rev[" + t.name() + "]", IndicatorProvenance::combinator,
      t.absolute_value_induced());
  if (opts.checked)
    require_passed(check_indicator_axioms(out, opts.samples, opts.seed));
  return out;
}

IndicatorMap inverse_indicator(const IndicatorMap& t, const CheckOptions& opts) {
  IndicatorMap inner = t;
  Group X = t.domain();
  IndicatorMap out = IndicatorMap::unchecked(
      X, t.codomain(),
      [inner, X](const Elem& x, const Elem& y, const Elem& z) {
        return inner(X.inverse(z), X.inverse(y), X.inverse(x));
      },
      "inv[" + t.name() + "]", IndicatorProvenance::combinator,
      t.absolute_value_induced());
  if (opts.checked)
    require_passed(check_indicator_axioms(out, opts.samples, opts.seed));
  return out;
}

IndicatorMap pairwise_symmetrization(const IndicatorMap& t, const CheckOptions& opts) {
  IndicatorMap inner = t;
  Group X = t.domain();
  AloGroup G = t.codomain();
  IndicatorMap out = IndicatorMap::unchecked(
      X, G,
      [inner, X, G](const Elem& x, const Elem& y, const Elem& z) {
        return G.max(inner(x, y, z),
                     inner(X.inverse(z), X.inverse(y), X.inverse(x)));
      },
      "sym[" + t.name() + "]", IndicatorProvenance::symmetrization,
      t.absolute_value_induced());
  if (opts.checked)
    require_passed(check_indicator_axioms(out, opts.samples, opts.seed));
  return out;
}

IndicatorMap transport_indicator(const GroupHom& phi, const IndicatorMap& t,
                                 const CheckOptions& opts) {
  if (!phi.codomain.same(t.domain()))
    throw structure_mismatch("transport_indicator: homomorphism lands in " +
                             phi.codomain.name() + " but the indicator lives on " +
                             t.domain().name());
  detail::require_homomorphism(phi, opts.samples, opts.seed);

  GroupHom f = phi;
  IndicatorMap inner = t;
  IndicatorMap out = IndicatorMap::unchecked(
      phi.domain, t.codomain(),
      [f, inner](const Elem& a, const Elem& b, const Elem& c) {
        return inner(f(a), f(b), f(c));
      },
      "transport[" + t.name() + " via " + phi.name + "]",
      IndicatorProvenance::transport, t.absolute_value_induced());
  if (opts.checked)
    require_passed(check_indicator_axioms(out, opts.samples, opts.seed));
  return out;
}

FullSymmetrization full_symmetrization(const IndicatorMap& t, const CheckOptions& opts) {
  IndicatorMap inner = t;
  Group X = t.domain();
  AloGroup G = t.codomain();
  IndicatorMap candidate = IndicatorMap::unchecked(
      X, G,
      [inner, G](const Elem& a, const Elem& b, const Elem& c) {
        Elem best = inner(a, b, c);
        const std::array<std::array<const Elem*, 3>, 5> rest = {{
            {&a, &c, &b}, {&b, &a, &c}, {&b, &c, &a}, {&c, &a, &b}, {&c, &b, &a}}};
        for (const auto& p : rest)
          best = G.max(best, inner(*p[0], *p[1], *p[2]));
        return best;
      },
      "fullsym[" + t.name() + "]", IndicatorProvenance::symmetrization, false);

  FullSymmetrization result{candidate, false,
                            check_indicator_axioms(candidate, opts.samples, opts.seed)};

  // Directed probe: (x, x, identity) is consistent, yet the symmetrized
  // value dominates t(x, identity, x) which measures how far x x is from
  // the identity.  Any x with x x != identity is therefore a witness.
  {
    LawResult probe;
    probe.law = "symmetrization.self-inverse-probe";
    auto consider = [&](const Elem& x) {
      if (X.eq(X.op(x, x), X.identity())) return;
      ++probe.samples;
      Elem val = candidate(x, x, X.identity());
      if (!G.eq(val, G.identity())) {
        ++probe.failure_count;
        if (probe.witnesses.size() < 8) {
          probe.witnesses.push_back(Witness{
              {x},
              "(" + X.format(x) + ", " + X.format(x) + ", identity) -> " +
                  G.format(val) +
                  ": consistent triple maps above the identity because x x != identity"});
        }
      }
    };
    if (X.is_finite()) {
      probe.exhaustive = true;
      for (const Elem& x : X.carrier()) consider(x);
    } else {
      Rng rng(opts.seed);
      auto sample = X.default_sampler();
      for (std::size_t i = 0; i < opts.samples; ++i) consider(sample(rng));
    }
    result.report.laws.push_back(std::move(probe));
  }

  result.valid_indicator = result.report.passed();
  return result;
}

// ---------------------------------------------------------------------------
// ternary metrics
// ---------------------------------------------------------------------------

G3Metric ternary_metric_from_indicator(const IndicatorMap& t, const CheckOptions& opts) {
  require_passed(check_indicator_axioms(t, opts.samples, opts.seed));

  IndicatorMap tt = t;
  Group X = t.domain();
  AloGroup G = t.codomain();
  G3Metric g = G3Metric::unchecked(
      X, G,
      [tt, X, G](const Elem& x, const Elem& y, const Elem& z) {
        Elem e = X.identity();
        return G.max(tt(x, y, e), G.max(tt(x, z, e), tt(y, z, e)));
      },
      "g[" + t.name() + "]");
  if (opts.checked) require_passed(check_g3_axioms(g, opts.samples, opts.seed));
  return g;
}

IndicatorMap indicator_from_ternary_metric(const G3Metric& g, const CheckOptions& opts) {
  require_passed(check_g3_axioms(g, opts.samples, opts.seed));

  G3Metric gg = g;
  Group X = g.domain();
  AloGroup G = g.codomain();
  IndicatorMap t = IndicatorMap::unchecked(
      X, G,
      [gg, X, G](const Elem& a, const Elem& b, const Elem& c) {
        Elem ac = X.op(a, c);
        return G.max(gg(ac, b, b), gg(ac, ac, b));
      },
      "T[" + g.name() + "]", IndicatorProvenance::custom, false);
  if (opts.checked) require_passed(check_indicator_axioms(t, opts.samples, opts.seed));
  return t;
}

}  // namespace pcx
