#include <doctest.h>

#include <cmath>

#include "pcx/errors.hpp"
#include "pcx/instances.hpp"
#include "pcx/laws.hpp"
#include "pcx/metric.hpp"

#include "helpers.hpp"

using namespace pcx;
using pcx::test::close;

TEST_SUITE("algebra") {

TEST_CASE("norm-induced distance of the two real alo-groups") {
  GMetric da = norm_induced_metric(AloGroup::additive_reals());
  Group add = Group::reals_additive();
  CHECK(da.codomain().value(da(add.element(3.0), add.element(5.0))) == 2.0);
  CHECK(da.codomain().value(da(add.element(5.0), add.element(3.0))) == 2.0);
  CHECK(da.provenance() == MetricProvenance::norm_induced);

  GMetric dm = norm_induced_metric(AloGroup::multiplicative_reals());
  Group mul = Group::reals_multiplicative();
  CHECK(dm.codomain().value(dm(mul.element(2.0), mul.element(8.0))) == 4.0);
  CHECK(dm.codomain().value(dm(mul.element(8.0), mul.element(2.0))) == 4.0);
  CHECK(check_metric_axioms(da, 500).passed());
  CHECK(check_metric_axioms(dm, 500).passed());
}

TEST_CASE("ratio-scale absolute value and its distance") {
  GAbsoluteValue v = ki_absolute_value();
  Group mul = Group::reals_multiplicative();
  CHECK(v.codomain().value(v(mul.element(2.0))) == 0.5);
  CHECK(v.codomain().value(v(mul.element(0.5))) == 0.5);
  CHECK(v.codomain().value(v(mul.element(1.0))) == 0.0);
  CHECK(v.codomain().group().same(Group::reals_additive()));

  GMetric d = ki_metric();
  CHECK(d.codomain().value(d(mul.element(2.0), mul.element(1.0))) == 0.5);
  CHECK(d.codomain().value(d(mul.element(4.0), mul.element(1.0))) == 0.75);
  CHECK(d.codomain().value(d(mul.element(3.0), mul.element(3.0))) == 0.0);
  CHECK(check_absvalue_axioms(v, 1000).passed());
  CHECK(check_metric_axioms(d, 1000).passed());
}

TEST_CASE("ratio-scale distance never exceeds one") {
  GMetric d = ki_metric();
  Group mul = Group::reals_multiplicative();
  ElemSampler sample = mul.default_sampler();
  Rng rng(11);
  for (int i = 0; i < 2000; ++i) {
    double value = d.codomain().value(d(sample(rng), sample(rng)));
    CHECK(value >= 0.0);
    CHECK(value < 1.0);
  }
}

TEST_CASE("exponential-family absolute value and distance") {
  GAbsoluteValue w = w_absolute_value(2.0);
  Group add = Group::reals_additive();
  CHECK(w.codomain().value(w(add.element(1.0))) == 0.5);
  CHECK(w.codomain().value(w(add.element(-1.0))) == 0.5);
  CHECK(w.codomain().value(w(add.element(0.0))) == 0.0);

  GMetric rho = rho_metric(2.0);
  CHECK(rho.codomain().value(rho(add.element(1.0), add.element(0.0))) == 0.5);
  CHECK(check_absvalue_axioms(w, 1000).passed());
  CHECK(check_metric_axioms(rho, 1000).passed());

  CHECK_THROWS_AS(w_absolute_value(1.0), precondition_error);
  CHECK_THROWS_AS(rho_metric(0.0), precondition_error);
  CHECK_THROWS_AS(rho_metric(-2.0), precondition_error);
}

TEST_CASE("the exponential-family distance is the ratio-scale one in logarithms") {
  GMetric rho = rho_metric(2.0);
  GMetric viaTransport = transport_metric(exp_isomorphism(2.0), ki_metric());
  Group add = Group::reals_additive();
  ElemSampler sample = add.default_sampler();
  Rng rng(5);
  for (int i = 0; i < 500; ++i) {
    Elem x = sample(rng), y = sample(rng);
    CHECK(close(rho.codomain().value(rho(x, y)),
                viaTransport.codomain().value(viaTransport(x, y)), 1e-12));
  }
}

TEST_CASE("three-level distance: values by region") {
  GMetric rho = three_level_metric();  // additive reals, (1, 2, 3)
  Group add = Group::reals_additive();
  auto at = [&](double x, double y) {
    return rho.codomain().value(rho(add.element(x), add.element(y)));
  };
  CHECK(at(0.5, 7.0) == 1.0);    // both at or above the identity
  CHECK(at(0.0, 2.0) == 1.0);    // the identity itself counts as upper
  CHECK(at(-1.0, -2.0) == 2.0);  // both strictly below
  CHECK(at(1.0, -1.0) == 3.0);   // across
  CHECK(at(-1.0, 1.0) == 3.0);
  CHECK(at(4.0, 4.0) == 0.0);    // diagonal
  CHECK(at(-4.0, -4.0) == 0.0);
  CHECK(check_metric_axioms(rho, 2000).passed());
}

TEST_CASE("three-level distance over a custom alo-group and parameters") {
  AloGroup mul = AloGroup::multiplicative_reals();
  GMetric rho = three_level_metric(mul, mul.element(2.0), mul.element(3.0),
                                   mul.element(4.0));
  Group g = mul.group();
  CHECK(rho.codomain().value(rho(g.element(0.5), g.element(2.0))) == 4.0);
  CHECK(rho.codomain().value(rho(g.element(2.0), g.element(5.0))) == 2.0);
  CHECK(rho.codomain().value(rho(g.element(0.5), g.element(0.25))) == 3.0);
  CHECK(check_metric_axioms(rho, 1000).passed());
}

TEST_CASE("three-level distance requires strictly increasing parameters") {
  AloGroup g = AloGroup::additive_reals();
  auto make = [&](double a, double b, double c) {
    return three_level_metric(g, g.element(a), g.element(b), g.element(c));
  };
  CHECK_THROWS_AS(make(0.0, 2.0, 3.0), precondition_error);   // a not above identity
  CHECK_THROWS_AS(make(-1.0, 2.0, 3.0), precondition_error);
  CHECK_THROWS_AS(make(1.0, 1.0, 3.0), precondition_error);   // a = b
  CHECK_THROWS_AS(make(1.0, 3.0, 2.0), precondition_error);   // b > c
}

TEST_CASE("discrete 0/1 distance on finite groups") {
  for (const Group& g : {klein_four_group(), symmetric_group_3()}) {
    GMetric d = discrete_metric(g);
    const auto elems = g.carrier();
    CHECK(d.codomain().value(d(elems[0], elems[0])) == 0.0);
    CHECK(d.codomain().value(d(elems[0], elems[1])) == 1.0);
    CHECK(d.codomain().value(d(elems[1], elems[2])) == 1.0);
    LawReport report = check_metric_axioms(d, 10);
    CHECK(report.passed());
    // small finite domains are enumerated, whatever the sample budget
    for (const auto& law : report.laws) CHECK(law.exhaustive);
  }
}

TEST_CASE("a broken absolute value is rejected at the gate") {
  AloGroup add = AloGroup::additive_reals();
  // The raw payload is negative half the time: not an absolute value.
  GAbsoluteValue signedValue = GAbsoluteValue::unchecked(
      add.group(), add, [](const Elem& x) { return x; }, "signed");
  CHECK_THROWS_AS(metric_from_absolute_value(signedValue), law_violation);
  CHECK_FALSE(check_absvalue_axioms(signedValue, 200).passed());
}

TEST_CASE("a broken metric surfaces a witness") {
  AloGroup add = AloGroup::additive_reals();
  LawReport report = check_metric_axioms(
      GMetric::unchecked(
          add.group(), add,
          [&add](const Elem& x, const Elem& y) { return add.op(x, y); }, "sum",
          MetricProvenance::custom),
      200);
  CHECK_FALSE(report.passed());
  const LawResult* diagonal = report.find("metric.diagonal");
  REQUIRE(diagonal != nullptr);
  CHECK_FALSE(diagonal->passed());
  CHECK_FALSE(diagonal->witnesses.empty());
  CHECK_FALSE(diagonal->witnesses.front().text.empty());
}

TEST_CASE("constructing a checked metric from a broken evaluation throws") {
  AloGroup add = AloGroup::additive_reals();
  CHECK_THROWS_AS(GMetric::custom(
                      add.group(), add,
                      [&add](const Elem& x, const Elem& y) { return add.op(x, y); },
                      "sum"),
                  law_violation);
}

TEST_CASE("transporting a metric requires injectivity") {
  Group add = Group::reals_additive();
  GroupHom collapse{add, add, [&add](const Elem&) { return add.identity(); },
                    nullptr, "collapse"};
  CHECK_THROWS_AS(transport_metric(collapse, norm_induced_metric(AloGroup::additive_reals())),
                  law_violation);
}

TEST_CASE("transporting an absolute value along the scale change") {
  GAbsoluteValue w = transport_absolute_value(exp_isomorphism(2.0), ki_absolute_value());
  GAbsoluteValue closed = w_absolute_value(2.0);
  Group add = Group::reals_additive();
  Rng rng(3);
  ElemSampler sample = add.default_sampler();
  for (int i = 0; i < 300; ++i) {
    Elem x = sample(rng);
    CHECK(close(w.codomain().value(w(x)), closed.codomain().value(closed(x)), 1e-12));
  }
}

TEST_CASE("a non-homomorphism is rejected by the transport gate") {
  Group add = Group::reals_additive();
  GroupHom shift{add, add,
                 [&add](const Elem& x) { return add.op(x, add.element(1.0)); },
                 nullptr, "shift"};
  CHECK_THROWS_AS(transport_absolute_value(shift, w_absolute_value(2.0)), law_violation);
}

}  // TEST_SUITE
