// Acceptance gate: one checked claim per line, [PASS]/[FAIL] verdicts,
// nonzero exit when anything fails.  Each check freezes independently
// computed reference values or re-derives them on the spot, so a
// regression in any layer of the library turns a line red.

#include <cmath>
#include <cstdio>
#include <string>
#include <vector>

#include "pcx/errors.hpp"
#include "pcx/indicator.hpp"
#include "pcx/instances.hpp"
#include "pcx/laws.hpp"
#include "pcx/metric.hpp"
#include "pcx/pcmatrix.hpp"

using namespace pcx;

namespace {

int failures = 0;

void verdict(int number, const char* title, bool ok, const std::string& detail = "") {
  std::printf("[%s] %2d. %s%s%s\n", ok ? "PASS" : "FAIL", number, title,
              detail.empty() ? "" : " -- ", detail.c_str());
  if (!ok) ++failures;
}

PCMatrix random_pc_matrix(const Group& g, std::size_t n, Rng& rng) {
  ElemSampler sample = g.default_sampler();
  std::vector<Elem> entries(n * n, g.identity());
  for (std::size_t i = 0; i < n; ++i) {
    for (std::size_t j = i + 1; j < n; ++j) {
      Elem e = sample(rng);
      entries[i * n + j] = e;
      entries[j * n + i] = g.inverse(e);
    }
  }
  return PCMatrix(g, n, std::move(entries));
}

// 1. The coarse three-level indicator on the worked 3x3 matrix over the
//    additive reals: the three distinguished triples land exactly on the
//    three levels and the matrix value is the top one.
void criterion_1() {
  bool ok = true;
  std::string detail;
  try {
    Group add = Group::reals_additive();
    IndicatorMap t = three_level_indicator();
    Elem a = add.element(1.0), ai = add.element(-1.0);
    const double taaa = t.codomain().value(t(a, a, a));
    const double tiii = t.codomain().value(t(ai, ai, ai));
    const double tiia = t.codomain().value(t(ai, ai, a));

    PCMatrix m = PCMatrix::from_rows(add, {{0, 1, 1}, {-1, 0, 1}, {-1, -1, 0}});
    const double full =
        t.codomain().value(inconsistency_indicator(t, m).indicator_value);

    ok = taaa == 1.0 && tiii == 2.0 && tiia == 3.0 && full == 3.0;
    char buf[128];
    std::snprintf(buf, sizeof(buf),
                  "T(a,a,a)=%g T(a^-1,a^-1,a^-1)=%g T(a^-1,a^-1,a)=%g value=%g",
                  taaa, tiii, tiia, full);
    detail = buf;
  } catch (const std::exception& e) {
    ok = false;
    detail = e.what();
  }
  verdict(1, "worked example: levels 1/2/3 and matrix value 3, exact", ok, detail);
}

// 2. The indicator induced by the ratio-scale absolute value coincides
//    with the closed form on 10^5 seeded triples spanning (1e-3, 1e3).
void criterion_2() {
  bool ok = true;
  std::string detail;
  try {
    Group mul = Group::reals_multiplicative();
    IndicatorMap closed = ki_indicator();
    IndicatorMap induced =
        indicator_from_metric(metric_from_absolute_value(ki_absolute_value()));

    Rng rng(default_seed);
    ElemSampler sample = mul.default_sampler();  // log-uniform on (1e-3, 1e3)
    double worst = 0.0;
    for (int i = 0; i < 100000; ++i) {
      Elem a = sample(rng), b = sample(rng), c = sample(rng);
      double x = closed.codomain().value(closed(a, b, c));
      double y = induced.codomain().value(induced(a, b, c));
      worst = std::max(worst, std::fabs(x - y));
    }
    ok = worst <= 1e-12;
    char buf[64];
    std::snprintf(buf, sizeof(buf), "max discrepancy %.3g over 100000 triples", worst);
    detail = buf;
  } catch (const std::exception& e) {
    ok = false;
    detail = e.what();
  }
  verdict(2, "closed-form ratio-scale indicator equals the induced one", ok, detail);
}

// 3. Every registered construction passes its law suite on 1000 seeded
//    samples; the deliberately broken fixtures fail with witnesses.
void criterion_3() {
  bool ok = true;
  std::string detail;
  try {
    InstanceCatalog catalog;
    std::size_t checked = 0;
    for (const LawReport& report : catalog.law_suite(1000, default_seed)) {
      ++checked;
      if (!report.passed()) {
        ok = false;
        detail = "registry failure in " + report.subject;
      }
    }
    std::size_t failing = 0, witnessed = 0;
    for (const LawReport& report : negative_control_reports(1000, default_seed)) {
      if (!report.passed()) ++failing;
      for (const auto& law : report.laws)
        if (!law.passed() && !law.witnesses.empty()) {
          ++witnessed;
          break;
        }
    }
    if (failing != 3 || witnessed != 3) {
      ok = false;
      detail = "negative controls did not all fail with witnesses";
    }
    if (ok)
      detail = std::to_string(checked) +
               " registry suites green, 3 negative controls red with witnesses";
  } catch (const std::exception& e) {
    ok = false;
    detail = e.what();
  }
  verdict(3, "law suites at 1000 samples; negative controls refuted", ok, detail);
}

// 4. Round-trips through the induced distance and the induced ternary
//    distance restore each indicator pointwise.
void criterion_4() {
  bool ok = true;
  std::string detail;
  try {
    double worst = 0.0;
    for (const IndicatorMap& t :
         {ki_indicator(), s_a_indicator(2.0), three_level_indicator()}) {
      IndicatorMap viaMetric = indicator_from_metric(metric_from_indicator(t));
      IndicatorMap viaTernary =
          indicator_from_ternary_metric(ternary_metric_from_indicator(t));
      Rng rng(default_seed);
      ElemSampler sample = t.domain().default_sampler();
      for (int i = 0; i < 1000; ++i) {
        Elem a = sample(rng), b = sample(rng), c = sample(rng);
        double ref = t.codomain().value(t(a, b, c));
        worst = std::max(worst,
                         std::fabs(ref - t.codomain().value(viaMetric(a, b, c))));
        worst = std::max(worst,
                         std::fabs(ref - t.codomain().value(viaTernary(a, b, c))));
      }
    }
    ok = worst <= 1e-12;
    char buf[80];
    std::snprintf(buf, sizeof(buf),
                  "max drift %.3g over 3 indicators x 1000 triples x 2 paths", worst);
    detail = buf;
  } catch (const std::exception& e) {
    ok = false;
    detail = e.what();
  }
  verdict(4, "distance and ternary-distance round-trips are pointwise identities",
          ok, detail);
}

// 5. Symmetrizing the indicator never changes a matrix scan: 100 random
//    matrices for each size in {3, 4, 5}, both families.
void criterion_5() {
  bool ok = true;
  std::string detail;
  try {
    IndicatorMap ki = ki_indicator();
    IndicatorMap kis = pairwise_symmetrization(ki);
    IndicatorMap tl = three_level_indicator();
    IndicatorMap tls = pairwise_symmetrization(tl);
    Rng rng(default_seed);
    std::size_t scanned = 0;
    for (std::size_t n : {std::size_t(3), std::size_t(4), std::size_t(5)}) {
      for (int rep = 0; rep < 100 && ok; ++rep) {
        PCMatrix a = random_pc_matrix(Group::reals_multiplicative(), n, rng);
        Elem base = inconsistency_indicator(ki, a, 0).indicator_value;
        Elem sym = inconsistency_indicator(kis, a, 0).indicator_value;
        if (ki.codomain().cmp(base, sym) != Ord::eq) {
          ok = false;
          detail = "ratio-scale mismatch at n=" + std::to_string(n);
        }
        PCMatrix b = random_pc_matrix(Group::reals_additive(), n, rng);
        Elem tbase = inconsistency_indicator(tl, b, 0).indicator_value;
        Elem tsym = inconsistency_indicator(tls, b, 0).indicator_value;
        if (tl.codomain().cmp(tbase, tsym) != Ord::eq) {
          ok = false;
          detail = "three-level mismatch at n=" + std::to_string(n);
        }
        scanned += 2;
      }
    }
    if (ok) detail = std::to_string(scanned) + " matrix scans compared equal";
  } catch (const std::exception& e) {
    ok = false;
    detail = e.what();
  }
  verdict(5, "symmetrized scans equal plain scans on random matrices", ok, detail);
}

// 6. For 3x3 matrices over the positive reals with the ratio-scale
//    indicator, the single-triple shortcut equals the full 27-triple
//    scan.  Equality is taken in the codomain's ordering (the two float
//    paths may differ in the last bits), with a 1e-12 guard on top.
void criterion_6() {
  bool ok = true;
  std::string detail;
  try {
    IndicatorMap ki = ki_indicator();
    Rng rng(default_seed);
    double worstGap = 0.0;
    for (int rep = 0; rep < 100 && ok; ++rep) {
      PCMatrix a = random_pc_matrix(Group::reals_multiplicative(), 3, rng);
      Elem quick = indicator_3x3_shortcut(ki, a);
      Elem full = inconsistency_indicator(ki, a, 0).indicator_value;
      double gap =
          std::fabs(ki.codomain().value(quick) - ki.codomain().value(full));
      worstGap = std::max(worstGap, gap);
      if (ki.codomain().cmp(quick, full) != Ord::eq || gap > 1e-12) ok = false;
    }
    char buf[64];
    std::snprintf(buf, sizeof(buf), "largest float-path gap %.3g", worstGap);
    detail = buf;
  } catch (const std::exception& e) {
    ok = false;
    detail = e.what();
  }
  verdict(6, "single-triple shortcut equals the brute-force 3x3 scan", ok, detail);
}

// 7. Scanning the log2 image of a multiplicative matrix with the base-2
//    exponential indicator reproduces the ratio-scale value within 1e-9.
void criterion_7() {
  bool ok = true;
  std::string detail;
  try {
    IndicatorMap ki = ki_indicator();
    Rng rng(default_seed);
    double worst = 0.0;
    for (int rep = 0; rep < 100; ++rep) {
      PCMatrix m = random_pc_matrix(Group::reals_multiplicative(), 4, rng);
      PCMatrix logs = to_additive_scale(m, 2.0);
      double direct =
          ki.codomain().value(inconsistency_indicator(ki, m, 0).indicator_value);
      double viaLogs =
          ki.codomain().value(additive_indicator(logs, 2.0, 0).indicator_value);
      worst = std::max(worst, std::fabs(direct - viaLogs));
    }
    ok = worst <= 1e-9;
    char buf[64];
    std::snprintf(buf, sizeof(buf), "max gap %.3g over 100 matrices", worst);
    detail = buf;
  } catch (const std::exception& e) {
    ok = false;
    detail = e.what();
  }
  verdict(7, "log-scale scans reproduce the multiplicative value", ok, detail);
}

// 8. Full symmetrization: on the Klein four-group (every element its own
//    inverse) the symmetrized indicator is the original on all 64
//    triples; on the positive reals the candidate violates the laws,
//    with the consistent triple (2, 2, 1) as a witness.
void criterion_8() {
  bool ok = true;
  std::string detail;
  try {
    Group k = klein_four_group();
    IndicatorMap t = discrete_indicator(k);
    FullSymmetrization involutive = full_symmetrization(t);
    std::size_t triples = 0;
    bool equal = involutive.valid_indicator;
    for (const Elem& a : k.carrier())
      for (const Elem& b : k.carrier())
        for (const Elem& c : k.carrier()) {
          ++triples;
          if (t.codomain().value(t(a, b, c)) !=
              involutive.candidate.codomain().value(involutive.candidate(a, b, c)))
            equal = false;
        }

    FullSymmetrization real = full_symmetrization(ki_indicator());
    Group mul = Group::reals_multiplicative();
    double probe = real.candidate.codomain().value(
        real.candidate(mul.element(2.0), mul.element(2.0), mul.element(1.0)));
    bool witnessed = false;
    for (const auto& law : real.report.laws)
      if (!law.passed() && !law.witnesses.empty()) witnessed = true;

    ok = equal && triples == 64 && !real.valid_indicator && witnessed &&
         probe == 0.75;
    char buf[96];
    std::snprintf(buf, sizeof(buf),
                  "64/64 triples equal; reals refused, probe T^f(2,2,1)=%g", probe);
    detail = buf;
  } catch (const std::exception& e) {
    ok = false;
    detail = e.what();
  }
  verdict(8, "full symmetrization: lawful on involutive domains only", ok, detail);
}

// 9. Noncommutative domain: exhaustive search over the permutation group
//    finds a triple whose reversal changes the indicator, and the
//    reversal combinator refuses the domain outright.
void criterion_9() {
  bool ok = true;
  std::string detail;
  try {
    Group s3 = symmetric_group_3();
    IndicatorMap t = discrete_indicator(s3);
    bool found = false;
    std::string witness;
    for (const Elem& x : s3.carrier()) {
      for (const Elem& y : s3.carrier()) {
        for (const Elem& z : s3.carrier()) {
          if (!t.codomain().eq(t(x, y, z), t(z, y, x))) {
            found = true;
            witness = "T(" + s3.format(x) + ", " + s3.format(y) + ", " +
                      s3.format(z) + ") != reversed";
          }
          if (found) break;
        }
        if (found) break;
      }
      if (found) break;
    }

    bool refused = false;
    try {
      reverse_indicator(t);
    } catch (const abelian_required& e) {
      refused = !s3.eq(s3.op(e.left(), e.right()), s3.op(e.right(), e.left()));
    }
    ok = found && refused;
    detail = found ? witness + "; reversal refused with a noncommuting pair"
                   : "no asymmetric triple found";
  } catch (const std::exception& e) {
    ok = false;
    detail = e.what();
  }
  verdict(9, "noncommutative domain: asymmetric triple found, reversal refused",
          ok, detail);
}

// 10. Paired matrices: the indicator of the componentwise product matrix
//     is exactly the max of the two component values, 100 random pairs.
void criterion_10() {
  bool ok = true;
  std::string detail;
  try {
    IndicatorMap ki = ki_indicator();
    IndicatorMap sa = s_a_indicator(2.0);
    Rng rng(default_seed);
    std::size_t held = 0;
    for (int rep = 0; rep < 100; ++rep) {
      PCMatrix a = random_pc_matrix(Group::reals_multiplicative(), 4, rng);
      PCMatrix b = random_pc_matrix(Group::reals_additive(), 4, rng);
      ProductMatrixResult r = product_matrix_indicator(ki, a, sa, b);
      const double combined = ki.codomain().value(r.combined_value);
      const double expected = std::max(ki.codomain().value(r.left_value),
                                       sa.codomain().value(r.right_value));
      if (!r.max_law_holds || combined != expected) {
        ok = false;
        detail = "max rule broke at repetition " + std::to_string(rep);
        break;
      }
      ++held;
    }
    if (ok) detail = std::to_string(held) + "/100 paired scans equal, bit for bit";
  } catch (const std::exception& e) {
    ok = false;
    detail = e.what();
  }
  verdict(10, "paired-matrix scans obey the max rule exactly", ok, detail);
}

}  // namespace

int main() {
  std::printf("acceptance: inconsistency analysis library\n");
  criterion_1();
  criterion_2();
  criterion_3();
  criterion_4();
  criterion_5();
  criterion_6();
  criterion_7();
  criterion_8();
  criterion_9();
  criterion_10();
  if (failures == 0) {
    std::printf("all 10 criteria hold\n");
    return 0;
  }
  std::printf("%d criterion(s) failed\n", failures);
  return 1;
}
