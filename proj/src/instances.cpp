#include "pcx/instances.hpp"

#include <algorithm>
#include <array>
#include <cctype>
#include <cmath>
#include <cstdio>
#include <cstdlib>
#include <optional>

#include "pcx/errors.hpp"

namespace pcx {

namespace {

std::string short_number(double v) {
  char buf[40];
  std::snprintf(buf, sizeof(buf), "%.12g", v);
  return buf;
}

void require_base(double base, const char* what) {
  if (!std::isfinite(base) || base <= 0.0)
    throw precondition_error(std::string(what) + ": base must be a finite positive real");
  if (base == 1.0)
    throw precondition_error(std::string(what) +
                             ": base 1 collapses the family to a constant map");
}

double log_base(double value, double base) {
  if (base == 2.0) return std::log2(value);
  if (base == 10.0) return std::log10(value);
  static const double euler = std::exp(1.0);
  if (base == euler) return std::log(value);
  return std::log(value) / std::log(base);
}

}  // namespace

// ---------------------------------------------------------------------------
// ratio-scale family
// ---------------------------------------------------------------------------

GAbsoluteValue ki_absolute_value() {
  static const GAbsoluteValue v = [] {
    AloGroup G = AloGroup::additive_reals();
    return GAbsoluteValue::unchecked(
        Group::reals_multiplicative(), G,
        [G](const Elem& x) {
          const double t = x.real();
          return G.element(1.0 - std::min(t, 1.0 / t));
        },
        "ki-v");
  }();
  return v;
}

GMetric ki_metric() {
  static const GMetric d = metric_from_absolute_value(ki_absolute_value());
  return d;
}

IndicatorMap ki_indicator() {
  static const IndicatorMap t = [] {
    AloGroup G = AloGroup::additive_reals();
    return IndicatorMap::unchecked(
        Group::reals_multiplicative(), G,
        [G](const Elem& a, const Elem& b, const Elem& c) {
          const double r = b.real() / (a.real() * c.real());
          return G.element(1.0 - std::min(r, 1.0 / r));
        },
        "ki", IndicatorProvenance::from_absolute_value, true);
  }();
  return t;
}

// ---------------------------------------------------------------------------
// exponential family
// ---------------------------------------------------------------------------

GAbsoluteValue w_absolute_value(double base) {
  require_base(base, "w_absolute_value");
  AloGroup G = AloGroup::additive_reals();
  return GAbsoluteValue::unchecked(
      Group::reals_additive(), G,
      [G, base](const Elem& x) {
        const double t = x.real();
        return G.element(1.0 - std::min(std::pow(base, t), std::pow(base, -t)));
      },
      "w:" + short_number(base));
}

GMetric rho_metric(double base) {
  require_base(base, "rho_metric");
  return metric_from_absolute_value(w_absolute_value(base));
}

IndicatorMap s_a_indicator(double base) {
  require_base(base, "s_a_indicator");
  AloGroup G = AloGroup::additive_reals();
  return IndicatorMap::unchecked(
      Group::reals_additive(), G,
      [G, base](const Elem& x, const Elem& y, const Elem& z) {
        const double e = x.real() + z.real() - y.real();
        return G.element(1.0 - std::min(std::pow(base, e), std::pow(base, -e)));
      },
      "sa:" + short_number(base), IndicatorProvenance::from_absolute_value, true);
}

// ---------------------------------------------------------------------------
// three-level metric
// ---------------------------------------------------------------------------

GMetric three_level_metric(const AloGroup& g, const Elem& a, const Elem& b,
                           const Elem& c) {
  g.group().require_owned(a);
  g.group().require_owned(b);
  g.group().require_owned(c);
  const Elem one = g.identity();
  if (!(g.lt(one, a) && g.lt(a, b) && g.lt(b, c)))
    throw precondition_error(
        "three_level_metric: parameters must satisfy identity < a < b < c, got (" +
        g.format(a) + ", " + g.format(b) + ", " + g.format(c) + ")");

  AloGroup G = g;
  Elem la = a, lb = b, lc = c;
  return GMetric::unchecked(
      g.group(), G,
      [G, la, lb, lc](const Elem& x, const Elem& y) {
        if (G.eq(x, y)) return G.identity();
        const bool x_upper = G.leq(G.identity(), x);
        const bool y_upper = G.leq(G.identity(), y);
        if (x_upper && y_upper) return la;
        if (!x_upper && !y_upper) return lb;
        return lc;
      },
      "three-level(" + g.format(a) + ", " + g.format(b) + ", " + g.format(c) + ")",
      MetricProvenance::custom);
}

GMetric three_level_metric() {
  static const GMetric d = [] {
    AloGroup g = AloGroup::additive_reals();
    return three_level_metric(g, g.element(1.0), g.element(2.0), g.element(3.0));
  }();
  return d;
}

IndicatorMap three_level_indicator(const AloGroup& g, const Elem& a, const Elem& b,
                                   const Elem& c) {
  return indicator_from_metric(three_level_metric(g, a, b, c));
}

IndicatorMap three_level_indicator() {
  static const IndicatorMap t = indicator_from_metric(three_level_metric());
  return t;
}

// ---------------------------------------------------------------------------
// finite groups
// ---------------------------------------------------------------------------

Group klein_four_group() {
  static const Group g = Group::cayley(
      "klein-four", {"e", "a", "b", "c"},
      {{0, 1, 2, 3}, {1, 0, 3, 2}, {2, 3, 0, 1}, {3, 2, 1, 0}});
  return g;
}

Group symmetric_group_3() {
  static const Group g = [] {
    // One-line notation: perms[p][i] is the image of point i.
    const std::array<std::array<int, 3>, 6> perms = {{{0, 1, 2},
                                                      {1, 0, 2},
                                                      {2, 1, 0},
                                                      {0, 2, 1},
                                                      {1, 2, 0},
                                                      {2, 0, 1}}};
    const std::vector<std::string> labels = {"e",     "(01)",  "(02)",
                                             "(12)",  "(012)", "(021)"};
    auto index_of = [&](const std::array<int, 3>& p) {
      for (std::size_t i = 0; i < perms.size(); ++i)
        if (perms[i] == p) return static_cast<int>(i);
      throw error("symmetric_group_3: composition left the carrier");
    };
    std::vector<std::vector<int>> table(6, std::vector<int>(6));
    for (std::size_t s = 0; s < 6; ++s) {
      for (std::size_t t = 0; t < 6; ++t) {
        std::array<int, 3> composed;  // (s then after t)(i) = s[t[i]]
        for (int i = 0; i < 3; ++i) composed[i] = perms[s][perms[t][i]];
        table[s][t] = index_of(composed);
      }
    }
    return Group::cayley("s3", labels, std::move(table));
  }();
  return g;
}

// ---------------------------------------------------------------------------
// discrete family
// ---------------------------------------------------------------------------

GAbsoluteValue discrete_absolute_value(const Group& domain) {
  AloGroup G = AloGroup::additive_reals();
  Group X = domain;
  return GAbsoluteValue::unchecked(
      X, G,
      [X, G](const Elem& x) {
        return G.element(X.eq(x, X.identity()) ? 0.0 : 1.0);
      },
      "disc-v[" + domain.name() + "]");
}

GMetric discrete_metric(const Group& domain) {
  return metric_from_absolute_value(discrete_absolute_value(domain));
}

IndicatorMap discrete_indicator(const Group& domain) {
  return indicator_from_metric(discrete_metric(domain));
}

// ---------------------------------------------------------------------------
// scale changes
// ---------------------------------------------------------------------------

GroupHom exp_isomorphism(double base) {
  require_base(base, "exp_isomorphism");
  Group add = Group::reals_additive();
  Group mul = Group::reals_multiplicative();
  return GroupHom{
      add, mul,
      [mul, base](const Elem& x) { return mul.element(std::pow(base, x.real())); },
      [add, base](const Elem& y) { return add.element(log_base(y.real(), base)); },
      "exp:" + short_number(base)};
}

// ---------------------------------------------------------------------------
// selectors
// ---------------------------------------------------------------------------

namespace {

std::string_view trim(std::string_view s) {
  while (!s.empty() && std::isspace(static_cast<unsigned char>(s.front())))
    s.remove_prefix(1);
  while (!s.empty() && std::isspace(static_cast<unsigned char>(s.back())))
    s.remove_suffix(1);
  return s;
}

std::optional<double> parse_number(std::string_view s) {
  s = trim(s);
  if (s.empty()) return std::nullopt;
  if (s == "e" || s == "E") return std::exp(1.0);
  std::string copy(s);
  char* end = nullptr;
  const double v = std::strtod(copy.c_str(), &end);
  if (end != copy.c_str() + copy.size()) return std::nullopt;
  if (!std::isfinite(v)) return std::nullopt;
  return v;
}

std::optional<IndicatorMap> try_parse(std::string_view s);

std::optional<IndicatorMap> try_parse_product(std::string_view body) {
  // The two sub-selectors may themselves contain commas, so take the
  // leftmost split at which both sides parse.
  for (std::size_t i = 0; i < body.size(); ++i) {
    if (body[i] != ',') continue;
    auto left = try_parse(body.substr(0, i));
    if (!left) continue;
    auto right = try_parse(body.substr(i + 1));
    if (!right) continue;
    return product_indicator(*left, *right);
  }
  return std::nullopt;
}

std::optional<IndicatorMap> try_parse(std::string_view s) {
  s = trim(s);
  if (s == "ki") return ki_indicator();
  if (s == "three-level") return three_level_indicator();

  constexpr std::string_view sa_prefix = "sa:";
  if (s.substr(0, sa_prefix.size()) == sa_prefix) {
    auto base = parse_number(s.substr(sa_prefix.size()));
    if (!base) return std::nullopt;
    try {
      return s_a_indicator(*base);
    } catch (const precondition_error&) {
      return std::nullopt;
    }
  }

  constexpr std::string_view tl_prefix = "three-level:";
  if (s.substr(0, tl_prefix.size()) == tl_prefix) {
    std::string_view body = s.substr(tl_prefix.size());
    const std::size_t c1 = body.find(',');
    if (c1 == std::string_view::npos) return std::nullopt;
    const std::size_t c2 = body.find(',', c1 + 1);
    if (c2 == std::string_view::npos) return std::nullopt;
    auto a = parse_number(body.substr(0, c1));
    auto b = parse_number(body.substr(c1 + 1, c2 - c1 - 1));
    auto c = parse_number(body.substr(c2 + 1));
    if (!a || !b || !c) return std::nullopt;
    try {
      AloGroup g = AloGroup::additive_reals();
      return three_level_indicator(g, g.element(*a), g.element(*b), g.element(*c));
    } catch (const precondition_error&) {
      return std::nullopt;
    }
  }

  constexpr std::string_view prod_prefix = "product:";
  if (s.substr(0, prod_prefix.size()) == prod_prefix)
    return try_parse_product(s.substr(prod_prefix.size()));

  constexpr std::string_view sym_prefix = "symmetrized:";
  if (s.substr(0, sym_prefix.size()) == sym_prefix) {
    auto inner = try_parse(s.substr(sym_prefix.size()));
    if (!inner) return std::nullopt;
    return pairwise_symmetrization(*inner);
  }

  return std::nullopt;
}

}  // namespace

IndicatorMap parse_indicator(std::string_view selector) {
  if (auto t = try_parse(selector)) return *t;
  throw parse_error("unknown indicator selector '" + std::string(selector) +
                    "'; expected ki | sa:<base> | three-level[:<a>,<b>,<c>] | "
                    "product:<sel>,<sel> | symmetrized:<sel>");
}

// ---------------------------------------------------------------------------
// catalog
// ---------------------------------------------------------------------------

InstanceCatalog::InstanceCatalog() {
  const double euler = std::exp(1.0);
  AloGroup add = AloGroup::additive_reals();
  AloGroup mul = AloGroup::multiplicative_reals();

  alos_.push_back({"additive-reals", add});
  alos_.push_back({"multiplicative-reals", mul});

  metrics_.push_back({"norm[additive-reals]", norm_induced_metric(add)});
  metrics_.push_back({"norm[multiplicative-reals]", norm_induced_metric(mul)});
  metrics_.push_back({"ki", ki_metric()});
  metrics_.push_back({"rho:2", rho_metric(2.0)});
  metrics_.push_back({"three-level", three_level_metric()});
  metrics_.push_back({"discrete[klein-four]", discrete_metric(klein_four_group())});
  metrics_.push_back({"discrete[s3]", discrete_metric(symmetric_group_3())});

  absvalues_.push_back({"ki", ki_absolute_value()});
  absvalues_.push_back({"w:2", w_absolute_value(2.0)});
  absvalues_.push_back({"discrete[klein-four]",
                        discrete_absolute_value(klein_four_group())});

  indicators_.push_back({"ki", ki_indicator()});
  indicators_.push_back({"sa:2", s_a_indicator(2.0)});
  indicators_.push_back({"sa:e", s_a_indicator(euler)});
  indicators_.push_back({"sa:10", s_a_indicator(10.0)});
  indicators_.push_back({"three-level", three_level_indicator()});
  indicators_.push_back({"symmetrized[three-level]",
                         pairwise_symmetrization(three_level_indicator())});
  indicators_.push_back({"inverse[three-level]",
                         inverse_indicator(three_level_indicator())});
  indicators_.push_back({"product[ki, sa:2]",
                         product_indicator(ki_indicator(), s_a_indicator(2.0))});
  indicators_.push_back({"discrete[klein-four]",
                         discrete_indicator(klein_four_group())});
  indicators_.push_back({"discrete[s3]", discrete_indicator(symmetric_group_3())});

  ternaries_.push_back({"g[ki]", ternary_metric_from_indicator(ki_indicator())});
  ternaries_.push_back({"g[three-level]",
                        ternary_metric_from_indicator(three_level_indicator())});

  bounds_.push_back({"ki <= 1", ki_indicator(), add.element(1.0)});
  bounds_.push_back({"sa:2 <= 1", s_a_indicator(2.0), add.element(1.0)});

  // Registration gate: nothing enters the catalog without passing its laws.
  for (const auto& report : law_suite(200, default_seed)) require_passed(report);
}

std::vector<LawReport> InstanceCatalog::law_suite(std::size_t samples,
                                                  std::uint64_t seed) const {
  std::vector<LawReport> reports;
  // Reports carry the stable registry names, not the construction names.
  for (const auto& e : alos_) {
    reports.push_back(check_alo_axioms(e.alo, samples, seed));
    reports.back().subject = "alo:" + e.name;
  }
  for (const auto& e : metrics_) {
    reports.push_back(check_metric_axioms(e.metric, samples, seed));
    reports.back().subject = "metric:" + e.name;
  }
  for (const auto& e : absvalues_) {
    reports.push_back(check_absvalue_axioms(e.value, samples, seed));
    reports.back().subject = "absvalue:" + e.name;
  }
  for (const auto& e : indicators_) {
    reports.push_back(check_indicator_axioms(e.map, samples, seed));
    reports.back().subject = "indicator:" + e.name;
  }
  for (const auto& e : ternaries_) {
    reports.push_back(check_g3_axioms(e.metric, samples, seed));
    reports.back().subject = "g3:" + e.name;
  }
  for (const auto& e : bounds_) {
    reports.push_back(is_bounded_by(e.map, e.bound, samples, seed));
    reports.back().subject = "bound:" + e.name;
  }
  return reports;
}

std::vector<LawReport> negative_control_reports(std::size_t samples,
                                                std::uint64_t seed) {
  AloGroup add = AloGroup::additive_reals();
  std::vector<LawReport> reports;

  // A symmetric positive map that is not a distance: d(x, y) = x + y.
  GMetric sum_metric = GMetric::unchecked(
      Group::reals_additive(), add,
      [add](const Elem& x, const Elem& y) { return add.op(x, y); },
      "negative-control:sum", MetricProvenance::custom);
  reports.push_back(check_metric_axioms(sum_metric, samples, seed));

  // A constant map cannot separate consistent from inconsistent triples.
  IndicatorMap zero_indicator = IndicatorMap::unchecked(
      Group::reals_multiplicative(), add,
      [add](const Elem&, const Elem&, const Elem&) { return add.identity(); },
      "negative-control:zero", IndicatorProvenance::custom, false);
  reports.push_back(check_indicator_axioms(zero_indicator, samples, seed));

  // The raw value of x is signed, so it cannot be an absolute value.
  GAbsoluteValue signed_value = GAbsoluteValue::unchecked(
      Group::reals_additive(), add, [](const Elem& x) { return x; },
      "negative-control:signed");
  reports.push_back(check_absvalue_axioms(signed_value, samples, seed));

  return reports;
}

}  // namespace pcx
