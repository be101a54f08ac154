#include "pcx/laws.hpp"

#include <optional>
#include <utility>

#include "pcx/errors.hpp"
#include "pcx/indicator.hpp"
#include "pcx/metric.hpp"

namespace pcx {

namespace {

constexpr std::size_t max_exhaustive_tuples = 200'000;
constexpr std::size_t max_witnesses = 8;

using LawFn = std::function<std::optional<Witness>(const std::vector<Elem>&)>;

bool exhaustive_feasible(const Group& g, std::size_t arity) {
  if (!g.is_finite()) return false;
  const std::size_t n = g.order();
  std::size_t total = 1;
  for (std::size_t i = 0; i < arity; ++i) {
    if (total > max_exhaustive_tuples / n) return false;
    total *= n;
  }
  return true;
}

/// Evaluates one law over the whole domain (finite and small) or over
/// `samples` tuples drawn from `sampler`, then over the extra probe
/// tuples.  Collects up to max_witnesses counterexamples.
LawResult run_law(std::string law, const Group& domain, const ElemSampler& sampler,
                  std::size_t arity, std::size_t samples, std::uint64_t seed,
                  const std::vector<std::vector<Elem>>& probes, const LawFn& fn) {
  LawResult res;
  res.law = std::move(law);

  auto consider = [&](const std::vector<Elem>& tuple) {
    ++res.samples;
    if (auto w = fn(tuple)) {
      ++res.failure_count;
      if (res.witnesses.size() < max_witnesses) res.witnesses.push_back(std::move(*w));
    }
  };

  if (exhaustive_feasible(domain, arity)) {
    res.exhaustive = true;
    const std::vector<Elem> elems = domain.carrier();
    std::vector<std::size_t> idx(arity, 0);
    std::vector<Elem> tuple(arity, domain.identity());
    while (true) {
      for (std::size_t i = 0; i < arity; ++i) tuple[i] = elems[idx[i]];
      consider(tuple);
      std::size_t k = 0;
      while (k < arity && ++idx[k] == elems.size()) {
        idx[k] = 0;
        ++k;
      }
      if (k == arity) break;
    }
  } else {
    Rng rng(seed);
    std::vector<Elem> tuple;
    for (std::size_t s = 0; s < samples; ++s) {
      tuple.clear();
      for (std::size_t i = 0; i < arity; ++i) tuple.push_back(sampler(rng));
      consider(tuple);
    }
  }
  for (const auto& p : probes) consider(p);
  return res;
}

std::string tuple_text(const Group& g, const std::vector<Elem>& es) {
  std::string out = "(";
  for (std::size_t i = 0; i < es.size(); ++i) {
    if (i) out += ", ";
    out += g.format(es[i]);
  }
  return out + ")";
}

}  // namespace

// ---------------------------------------------------------------------------
// alo-group laws
// ---------------------------------------------------------------------------

LawReport check_alo_axioms(const AloGroup& g, const ElemSampler& sampler,
                           std::size_t samples, std::uint64_t seed) {
  const Group& X = g.group();
  auto wit = [&X](const std::vector<Elem>& es, std::string msg) {
    return Witness{es, tuple_text(X, es) + ": " + std::move(msg)};
  };

  LawReport report;
  report.subject = "alo:" + g.name();

  report.laws.push_back(run_law(
      "group.identity", X, sampler, 1, samples, seed, {},
      [&](const std::vector<Elem>& t) -> std::optional<Witness> {
        const Elem& x = t[0];
        if (g.eq(g.op(g.identity(), x), x) && g.eq(g.op(x, g.identity()), x))
          return std::nullopt;
        return wit(t, "identity element does not fix x");
      }));

  report.laws.push_back(run_law(
      "group.inverse", X, sampler, 1, samples, seed, {},
      [&](const std::vector<Elem>& t) -> std::optional<Witness> {
        const Elem& x = t[0];
        if (g.eq(g.op(x, g.inverse(x)), g.identity()) &&
            g.eq(g.op(g.inverse(x), x), g.identity()))
          return std::nullopt;
        return wit(t, "x combined with its inverse misses the identity");
      }));

  report.laws.push_back(run_law(
      "group.associativity", X, sampler, 3, samples, seed, {},
      [&](const std::vector<Elem>& t) -> std::optional<Witness> {
        if (g.eq(g.op(g.op(t[0], t[1]), t[2]), g.op(t[0], g.op(t[1], t[2]))))
          return std::nullopt;
        return wit(t, "(ab)c != a(bc)");
      }));

  report.laws.push_back(run_law(
      "group.commutativity", X, sampler, 2, samples, seed, {},
      [&](const std::vector<Elem>& t) -> std::optional<Witness> {
        if (g.eq(g.op(t[0], t[1]), g.op(t[1], t[0]))) return std::nullopt;
        return wit(t, "ab != ba");
      }));

  report.laws.push_back(run_law(
      "eq.equivalence", X, sampler, 3, samples, seed, {},
      [&](const std::vector<Elem>& t) -> std::optional<Witness> {
        const Elem &a = t[0], &b = t[1], &c = t[2];
        if (!g.eq(a, a)) return wit(t, "eq is not reflexive at a");
        if (g.eq(a, b) != g.eq(b, a)) return wit(t, "eq is not symmetric on (a, b)");
        if (g.eq(a, b) && g.eq(b, c) && !g.eq(a, c))
          return wit(t, "eq is not transitive on (a, b, c)");
        return std::nullopt;
      }));

  report.laws.push_back(run_law(
      "order.consistency", X, sampler, 2, samples, seed, {},
      [&](const std::vector<Elem>& t) -> std::optional<Witness> {
        const Elem &a = t[0], &b = t[1];
        const Ord ab = g.cmp(a, b), ba = g.cmp(b, a);
        if ((ab == Ord::lt) != (ba == Ord::gt))
          return wit(t, "cmp(a, b) and cmp(b, a) disagree");
        if ((ab == Ord::eq) != g.eq(a, b))
          return wit(t, "cmp equality disagrees with eq");
        return std::nullopt;
      }));

  report.laws.push_back(run_law(
      "order.transitivity", X, sampler, 3, samples, seed, {},
      [&](const std::vector<Elem>& t) -> std::optional<Witness> {
        if (g.leq(t[0], t[1]) && g.leq(t[1], t[2]) && !g.leq(t[0], t[2]))
          return wit(t, "a <= b <= c but a > c");
        return std::nullopt;
      }));

  report.laws.push_back(run_law(
      "order.translation-invariance", X, sampler, 3, samples, seed, {},
      [&](const std::vector<Elem>& t) -> std::optional<Witness> {
        const Elem &a = t[0], &b = t[1], &c = t[2];
        if (!g.leq(a, b)) return std::nullopt;
        if (g.leq(g.op(a, c), g.op(b, c)) && g.leq(g.op(c, a), g.op(c, b)))
          return std::nullopt;
        return wit(t, "a <= b but translating by c flips the order");
      }));

  return report;
}

LawReport check_alo_axioms(const AloGroup& g, std::size_t samples, std::uint64_t seed) {
  return check_alo_axioms(g, g.default_sampler(), samples, seed);
}

// ---------------------------------------------------------------------------
// metric laws
// ---------------------------------------------------------------------------

LawReport check_metric_axioms(const GMetric& d, const ElemSampler& sampler,
                              std::size_t samples, std::uint64_t seed) {
  const Group& X = d.domain();
  const AloGroup& G = d.codomain();
  const Elem one = G.identity();
  auto wit = [&X, &G](const std::vector<Elem>& es, const Elem& val, std::string msg) {
    return Witness{es, tuple_text(X, es) + " -> " + G.format(val) + ": " + std::move(msg)};
  };

  LawReport report;
  report.subject = "metric:" + d.name();

  report.laws.push_back(run_law(
      "metric.diagonal", X, sampler, 1, samples, seed, {},
      [&](const std::vector<Elem>& t) -> std::optional<Witness> {
        Elem v = d(t[0], t[0]);
        if (G.eq(v, one)) return std::nullopt;
        return wit(t, v, "d(x, x) is not the identity");
      }));

  report.laws.push_back(run_law(
      "metric.identity-of-indiscernibles", X, sampler, 2, samples, seed, {},
      [&](const std::vector<Elem>& t) -> std::optional<Witness> {
        Elem v = d(t[0], t[1]);
        if (X.eq(t[0], t[1]) == G.eq(v, one)) return std::nullopt;
        return wit(t, v, "d(x, y) hits the identity exactly when x = y; this pair disagrees");
      }));

  report.laws.push_back(run_law(
      "metric.symmetry", X, sampler, 2, samples, seed, {},
      [&](const std::vector<Elem>& t) -> std::optional<Witness> {
        Elem a = d(t[0], t[1]), b = d(t[1], t[0]);
        if (G.eq(a, b)) return std::nullopt;
        return wit(t, a, "d(x, y) != d(y, x) = " + G.format(b));
      }));

  report.laws.push_back(run_law(
      "metric.nonnegativity", X, sampler, 2, samples, seed, {},
      [&](const std::vector<Elem>& t) -> std::optional<Witness> {
        Elem v = d(t[0], t[1]);
        if (G.leq(one, v)) return std::nullopt;
        return wit(t, v, "d(x, y) is below the identity");
      }));

  report.laws.push_back(run_law(
      "metric.triangle", X, sampler, 3, samples, seed, {},
      [&](const std::vector<Elem>& t) -> std::optional<Witness> {
        Elem lhs = d(t[0], t[1]);
        Elem rhs = G.op(d(t[0], t[2]), d(t[2], t[1]));
        if (G.leq(lhs, rhs)) return std::nullopt;
        return wit(t, lhs, "d(x, y) exceeds d(x, z) (.) d(z, y) = " + G.format(rhs));
      }));

  return report;
}

LawReport check_metric_axioms(const GMetric& d, std::size_t samples, std::uint64_t seed) {
  return check_metric_axioms(d, d.domain().default_sampler(), samples, seed);
}

// ---------------------------------------------------------------------------
// absolute-value laws
// ---------------------------------------------------------------------------

LawReport check_absvalue_axioms(const GAbsoluteValue& v, const ElemSampler& sampler,
                                std::size_t samples, std::uint64_t seed) {
  const Group& X = v.domain();
  const AloGroup& G = v.codomain();
  const Elem one = G.identity();
  auto wit = [&X, &G](const std::vector<Elem>& es, const Elem& val, std::string msg) {
    return Witness{es, tuple_text(X, es) + " -> " + G.format(val) + ": " + std::move(msg)};
  };

  LawReport report;
  report.subject = "absvalue:" + v.name();

  report.laws.push_back(run_law(
      "absvalue.nonnegativity", X, sampler, 1, samples, seed, {},
      [&](const std::vector<Elem>& t) -> std::optional<Witness> {
        Elem val = v(t[0]);
        if (G.leq(one, val)) return std::nullopt;
        return wit(t, val, "v(x) is below the identity");
      }));

  report.laws.push_back(run_law(
      "absvalue.definiteness", X, sampler, 1, samples, seed,
      {{X.identity()}},
      [&](const std::vector<Elem>& t) -> std::optional<Witness> {
        Elem val = v(t[0]);
        if (X.eq(t[0], X.identity()) == G.eq(val, one)) return std::nullopt;
        return wit(t, val, "v hits the identity exactly at the identity; x disagrees");
      }));

  report.laws.push_back(run_law(
      "absvalue.subadditivity", X, sampler, 2, samples, seed, {},
      [&](const std::vector<Elem>& t) -> std::optional<Witness> {
        Elem lhs = v(X.op(t[0], t[1]));
        Elem rhs = G.op(v(t[0]), v(t[1]));
        if (G.leq(lhs, rhs)) return std::nullopt;
        return wit(t, lhs, "v(xy) exceeds v(x) (.) v(y) = " + G.format(rhs));
      }));

  return report;
}

LawReport check_absvalue_axioms(const GAbsoluteValue& v, std::size_t samples,
                                std::uint64_t seed) {
  return check_absvalue_axioms(v, v.domain().default_sampler(), samples, seed);
}

// ---------------------------------------------------------------------------
// indicator laws
// ---------------------------------------------------------------------------

LawReport check_indicator_axioms(const IndicatorMap& t, const ElemSampler& sampler,
                                 std::size_t samples, std::uint64_t seed) {
  const Group& X = t.domain();
  const AloGroup& G = t.codomain();
  const Elem one = G.identity();
  auto wit = [&X, &G](const std::vector<Elem>& es, const Elem& val, std::string msg) {
    return Witness{es, tuple_text(X, es) + " -> " + G.format(val) + ": " + std::move(msg)};
  };

  // Deliberately consistent triples (a, ac, c), so the "consistent implies
  // identity" direction is exercised even on continuous domains where a
  // random triple is never consistent.
  std::vector<std::vector<Elem>> consistent_probes;
  {
    Rng rng(seed ^ 0x9e3779b97f4a7c15ull);
    const std::size_t count = std::min<std::size_t>(64, samples);
    for (std::size_t i = 0; i < count; ++i) {
      Elem a = sampler(rng), c = sampler(rng);
      consistent_probes.push_back({a, X.op(a, c), c});
    }
  }

  LawReport report;
  report.subject = "indicator:" + t.name();

  report.laws.push_back(run_law(
      "indicator.identity-of-consistency", X, sampler, 3, samples, seed,
      consistent_probes,
      [&](const std::vector<Elem>& tr) -> std::optional<Witness> {
        Elem val = t(tr[0], tr[1], tr[2]);
        const bool consistent = X.eq(X.op(tr[0], tr[2]), tr[1]);
        if (consistent == G.eq(val, one)) return std::nullopt;
        return wit(tr, val,
                   consistent ? "consistent triple (ac = b) maps away from the identity"
                              : "inconsistent triple maps to the identity");
      }));

  report.laws.push_back(run_law(
      "indicator.shift-to-identity", X, sampler, 3, samples, seed, {},
      [&](const std::vector<Elem>& tr) -> std::optional<Witness> {
        Elem lhs = t(tr[0], tr[1], tr[2]);
        Elem rhs = t(tr[1], X.op(tr[0], tr[2]), X.identity());
        if (G.eq(lhs, rhs)) return std::nullopt;
        return wit(tr, lhs, "T(a, b, c) != T(b, ac, identity) = " + G.format(rhs));
      }));

  report.laws.push_back(run_law(
      "indicator.nonnegativity", X, sampler, 3, samples, seed, {},
      [&](const std::vector<Elem>& tr) -> std::optional<Witness> {
        Elem val = t(tr[0], tr[1], tr[2]);
        if (G.leq(one, val)) return std::nullopt;
        return wit(tr, val, "T(a, b, c) is below the identity");
      }));

  report.laws.push_back(run_law(
      "indicator.compositionality", X, sampler, 5, samples, seed, {},
      [&](const std::vector<Elem>& tr) -> std::optional<Witness> {
        const Elem &a = tr[0], &b = tr[1], &c = tr[2], &d = tr[3], &e = tr[4];
        Elem lhs = t(a, X.op(d, e), c);
        Elem rhs = G.op(t(a, b, c), t(d, b, e));
        if (G.leq(lhs, rhs)) return std::nullopt;
        return wit(tr, lhs,
                   "T(a, de, c) exceeds T(a, b, c) (.) T(d, b, e) = " + G.format(rhs));
      }));

  return report;
}

LawReport check_indicator_axioms(const IndicatorMap& t, std::size_t samples,
                                 std::uint64_t seed) {
  return check_indicator_axioms(t, t.domain().default_sampler(), samples, seed);
}

// ---------------------------------------------------------------------------
// ternary-metric laws
// ---------------------------------------------------------------------------

LawReport check_g3_axioms(const G3Metric& g, const ElemSampler& sampler,
                          std::size_t samples, std::uint64_t seed) {
  const Group& X = g.domain();
  const AloGroup& G = g.codomain();
  const Elem one = G.identity();
  auto wit = [&X, &G](const std::vector<Elem>& es, const Elem& val, std::string msg) {
    return Witness{es, tuple_text(X, es) + " -> " + G.format(val) + ": " + std::move(msg)};
  };

  LawReport report;
  report.subject = "g3:" + g.name();

  report.laws.push_back(run_law(
      "g3.diagonal", X, sampler, 1, samples, seed, {},
      [&](const std::vector<Elem>& t) -> std::optional<Witness> {
        Elem v = g(t[0], t[0], t[0]);
        if (G.eq(v, one)) return std::nullopt;
        return wit(t, v, "g(x, x, x) is not the identity");
      }));

  report.laws.push_back(run_law(
      "g3.distinct-positivity", X, sampler, 2, samples, seed, {},
      [&](const std::vector<Elem>& t) -> std::optional<Witness> {
        if (X.eq(t[0], t[1])) return std::nullopt;
        Elem v = g(t[0], t[0], t[1]);
        if (G.lt(one, v)) return std::nullopt;
        return wit(t, v, "x != y but g(x, x, y) is not above the identity");
      }));

  report.laws.push_back(run_law(
      "g3.pair-dominates", X, sampler, 3, samples, seed, {},
      [&](const std::vector<Elem>& t) -> std::optional<Witness> {
        const Elem &x = t[0], &y = t[1], &z = t[2];
        if (X.eq(z, y)) return std::nullopt;
        Elem lhs = g(x, x, y), rhs = g(x, y, z);
        if (G.leq(lhs, rhs)) return std::nullopt;
        return wit(t, lhs, "g(x, x, y) exceeds g(x, y, z) = " + G.format(rhs));
      }));

  report.laws.push_back(run_law(
      "g3.total-symmetry", X, sampler, 3, samples, seed, {},
      [&](const std::vector<Elem>& t) -> std::optional<Witness> {
        const Elem &x = t[0], &y = t[1], &z = t[2];
        Elem ref = g(x, y, z);
        const Elem perms[5] = {g(x, z, y), g(y, x, z), g(y, z, x), g(z, x, y),
                               g(z, y, x)};
        for (const Elem& p : perms)
          if (!G.eq(ref, p))
            return wit(t, ref, "g is not symmetric under reordering (" +
                                   G.format(p) + " elsewhere)");
        return std::nullopt;
      }));

  report.laws.push_back(run_law(
      "g3.rectangle", X, sampler, 4, samples, seed, {},
      [&](const std::vector<Elem>& t) -> std::optional<Witness> {
        const Elem &x = t[0], &y = t[1], &z = t[2], &a = t[3];
        Elem lhs = g(x, y, z);
        Elem rhs = G.op(g(x, a, a), g(a, y, z));
        if (G.leq(lhs, rhs)) return std::nullopt;
        return wit(t, lhs, "g(x, y, z) exceeds g(x, a, a) (.) g(a, y, z) = " + G.format(rhs));
      }));

  return report;
}

LawReport check_g3_axioms(const G3Metric& g, std::size_t samples, std::uint64_t seed) {
  return check_g3_axioms(g, g.domain().default_sampler(), samples, seed);
}

// ---------------------------------------------------------------------------
// bounds
// ---------------------------------------------------------------------------

LawReport is_bounded_by(const IndicatorMap& t, const Elem& bound,
                        const ElemSampler& sampler, std::size_t samples,
                        std::uint64_t seed) {
  const Group& X = t.domain();
  const AloGroup& G = t.codomain();
  G.group().require_owned(bound);
  auto wit = [&X, &G](const std::vector<Elem>& es, const Elem& val, std::string msg) {
    return Witness{es, tuple_text(X, es) + " -> " + G.format(val) + ": " + std::move(msg)};
  };

  LawReport report;
  report.subject = "bound:" + t.name() + " <= " + G.format(bound);
  report.laws.push_back(run_law(
      "indicator.bounded", X, sampler, 3, samples, seed, {},
      [&](const std::vector<Elem>& tr) -> std::optional<Witness> {
        Elem val = t(tr[0], tr[1], tr[2]);
        if (G.leq(val, bound)) return std::nullopt;
        return wit(tr, val, "value exceeds the bound " + G.format(bound));
      }));
  return report;
}

LawReport is_bounded_by(const IndicatorMap& t, const Elem& bound,
                        std::size_t samples, std::uint64_t seed) {
  return is_bounded_by(t, bound, t.domain().default_sampler(), samples, seed);
}

void require_passed(const LawReport& report) {
  for (const auto& law : report.laws) {
    if (!law.passed()) {
      const std::string witness =
          law.witnesses.empty() ? std::string("no witness recorded")
                                : law.witnesses.front().text;
      throw law_violation(report.subject + ": law '" + law.law + "' failed (" +
                              std::to_string(law.failure_count) + " of " +
                              std::to_string(law.samples) + " tuples); e.g. " + witness,
                          law.law, witness);
    }
  }
}

}  // namespace pcx
