#include "pcx/pcmatrix.hpp"

#include <algorithm>
#include <utility>

#include "pcx/errors.hpp"
#include "pcx/instances.hpp"

namespace pcx {

PCMatrix::PCMatrix(Group group, std::size_t n, std::vector<Elem> entries,
                   std::vector<std::string> labels)
    : group_(std::move(group)), n_(n), entries_(std::move(entries)),
      labels_(std::move(labels)) {
  if (n_ == 0) throw precondition_error("matrix needs at least one alternative");
  if (entries_.size() != n_ * n_)
    throw structure_mismatch("matrix of order " + std::to_string(n_) + " needs " +
                             std::to_string(n_ * n_) + " entries, got " +
                             std::to_string(entries_.size()));
  for (const Elem& e : entries_) group_.require_owned(e);
  if (!labels_.empty() && labels_.size() != n_)
    throw structure_mismatch("expected " + std::to_string(n_) + " labels, got " +
                             std::to_string(labels_.size()));
}

PCMatrix PCMatrix::from_rows(const Group& group,
                             const std::vector<std::vector<double>>& rows,
                             std::vector<std::string> labels) {
  const std::size_t n = rows.size();
  std::vector<Elem> entries;
  entries.reserve(n * n);
  for (const auto& row : rows) {
    if (row.size() != n)
      throw structure_mismatch("matrix rows must all have length " + std::to_string(n));
    for (double v : row) entries.push_back(group.element(v));
  }
  return PCMatrix(group, n, std::move(entries), std::move(labels));
}

const Elem& PCMatrix::at(std::size_t i, std::size_t j) const {
  if (i >= n_ || j >= n_)
    throw precondition_error("matrix index (" + std::to_string(i) + ", " +
                             std::to_string(j) + ") out of range for order " +
                             std::to_string(n_));
  return entries_[i * n_ + j];
}

std::vector<std::vector<double>> PCMatrix::rows() const {
  std::vector<std::vector<double>> out(n_);
  for (std::size_t i = 0; i < n_; ++i) {
    out[i].reserve(n_);
    for (std::size_t j = 0; j < n_; ++j) out[i].push_back(group_.value(at(i, j)));
  }
  return out;
}

std::vector<PCViolation> validate_pc(const PCMatrix& a) {
  const Group& g = a.group();
  std::vector<PCViolation> out;
  const std::size_t n = a.order();
  for (std::size_t i = 0; i < n; ++i) {
    if (!g.eq(a.at(i, i), g.identity())) {
      out.push_back({PCViolation::Kind::diagonal, i, i,
                     "diagonal entry (" + std::to_string(i) + ", " + std::to_string(i) +
                         ") = " + g.format(a.at(i, i)) + " is not the identity"});
    }
  }
  for (std::size_t i = 0; i < n; ++i) {
    for (std::size_t j = i + 1; j < n; ++j) {
      if (!g.eq(a.at(j, i), g.inverse(a.at(i, j)))) {
        out.push_back({PCViolation::Kind::reciprocity, i, j,
                       "entry (" + std::to_string(j) + ", " + std::to_string(i) +
                           ") = " + g.format(a.at(j, i)) + " is not the inverse of (" +
                           std::to_string(i) + ", " + std::to_string(j) + ") = " +
                           g.format(a.at(i, j))});
      }
    }
  }
  return out;
}

bool is_pc_matrix(const PCMatrix& a) { return validate_pc(a).empty(); }

PCMatrix repair_reciprocal_upper(const PCMatrix& a) {
  const Group& g = a.group();
  const std::size_t n = a.order();
  std::vector<Elem> entries(a.entries());
  for (std::size_t i = 0; i < n; ++i) entries[i * n + i] = g.identity();
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = i + 1; j < n; ++j)
      entries[j * n + i] = g.inverse(a.at(i, j));
  return PCMatrix(g, n, std::move(entries), a.labels());
}

std::optional<Triad> find_inconsistent_triple(const PCMatrix& a) {
  const Group& g = a.group();
  const std::size_t n = a.order();
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t k = 0; k < n; ++k)
      for (std::size_t j = 0; j < n; ++j)
        if (!g.eq(g.op(a.at(i, k), a.at(k, j)), a.at(i, j)))
          return Triad{i, j, k};
  return std::nullopt;
}

bool is_consistent(const PCMatrix& a) { return !find_inconsistent_triple(a); }

PCMatrix relabel(const PCMatrix& a, std::span<const std::size_t> perm) {
  const std::size_t n = a.order();
  if (perm.size() != n)
    throw precondition_error("permutation length " + std::to_string(perm.size()) +
                             " does not match matrix order " + std::to_string(n));
  std::vector<bool> seen(n, false);
  for (std::size_t p : perm) {
    if (p >= n || seen[p])
      throw precondition_error("index map is not a permutation of 0.." +
                               std::to_string(n - 1));
    seen[p] = true;
  }
  std::vector<Elem> entries;
  entries.reserve(n * n);
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = 0; j < n; ++j) entries.push_back(a.at(perm[i], perm[j]));
  std::vector<std::string> labels;
  if (!a.labels().empty()) {
    labels.reserve(n);
    for (std::size_t i = 0; i < n; ++i) labels.push_back(a.labels()[perm[i]]);
  }
  return PCMatrix(a.group(), n, std::move(entries), std::move(labels));
}

namespace {

void require_domain(const IndicatorMap& t, const PCMatrix& a) {
  if (!t.domain().same(a.group()))
    throw structure_mismatch("indicator '" + t.name() + "' works over " +
                             t.domain().name() + " but the matrix lives in " +
                             a.group().name());
}

void require_pc(const PCMatrix& a) {
  auto violations = validate_pc(a);
  if (!violations.empty())
    throw precondition_error("not a pairwise-comparisons matrix: " +
                             violations.front().message);
}

}  // namespace

Elem indicator_of_set(const IndicatorMap& t, const PCMatrix& a,
                      std::span<const Triad> triads) {
  require_domain(t, a);
  if (triads.empty())
    throw precondition_error("indicator_of_set needs at least one triple");
  const AloGroup& g = t.codomain();
  Elem best;
  bool first = true;
  for (const Triad& tr : triads) {
    Elem v = t(a.at(tr.i, tr.k), a.at(tr.i, tr.j), a.at(tr.k, tr.j));
    best = first ? v : g.max(best, v);
    first = false;
  }
  return best;
}

TriadReport inconsistency_indicator(const IndicatorMap& t, const PCMatrix& a,
                                    std::size_t top) {
  require_domain(t, a);
  require_pc(a);

  const AloGroup& g = t.codomain();
  const std::size_t n = a.order();
  TriadReport report;
  report.n = n;

  Elem best;
  bool first = true;
  std::vector<TriadValue> proper;
  for (std::size_t i = 0; i < n; ++i) {
    for (std::size_t j = 0; j < n; ++j) {
      for (std::size_t k = 0; k < n; ++k) {
        Elem v = t(a.at(i, k), a.at(i, j), a.at(k, j));
        best = first ? v : g.max(best, v);
        first = false;
        // Only actual offenders are worth ranking: triples whose value is
        // the codomain identity are consistent and would just be noise.
        if (i != j && j != k && i != k && !g.eq(v, g.identity()))
          proper.push_back({i, j, k, v});
      }
    }
  }
  // Scan-order-stable descending sort by the raw codomain order, so the
  // ranking is deterministic and ties keep their first appearance.
  std::stable_sort(proper.begin(), proper.end(),
                   [&g](const TriadValue& x, const TriadValue& y) {
                     return g.value(y.value) < g.value(x.value);
                   });
  if (proper.size() > top) proper.resize(top);

  report.indicator_value = best;
  report.consistent = g.eq(best, g.identity());
  report.worst = std::move(proper);
  return report;
}

LawReport indicator_symmetrized_equality(const IndicatorMap& t, const PCMatrix& a) {
  require_domain(t, a);
  require_pc(a);
  if (a.order() < 3)
    throw precondition_error(
        "symmetrization equality concerns matrices with at least 3 alternatives");

  const AloGroup& g = t.codomain();
  IndicatorMap ts = pairwise_symmetrization(t);
  const Elem base = inconsistency_indicator(t, a, 0).indicator_value;
  const Elem sym = inconsistency_indicator(ts, a, 0).indicator_value;

  LawReport report;
  report.subject = "matrix[" + std::to_string(a.order()) + "]:" + t.name();

  LawResult invariance;
  invariance.law = "matrix.symmetrization-invariance";
  invariance.samples = 1;
  if (!g.eq(base, sym)) {
    invariance.failure_count = 1;
    invariance.witnesses.push_back(Witness{
        {base, sym}, "full scan " + g.format(base) +
                         " != symmetrized scan " + g.format(sym)});
  }
  report.laws.push_back(std::move(invariance));

  if (a.order() == 3) {
    // On 3x3 matrices the symmetrized scan reduces to three evaluations
    // on the upper triangle.
    Elem v1 = ts(a.at(0, 1), a.at(0, 2), a.at(1, 2));
    Elem v2 = ts(a.at(1, 0), a.at(1, 2), a.at(0, 2));
    Elem v3 = ts(a.at(0, 2), a.at(0, 1), a.at(2, 1));
    Elem three_term = g.max(v1, g.max(v2, v3));

    LawResult decomposition;
    decomposition.law = "matrix.symmetrized-three-term";
    decomposition.samples = 1;
    if (!g.eq(three_term, base)) {
      decomposition.failure_count = 1;
      decomposition.witnesses.push_back(Witness{
          {base, three_term}, "full scan " + g.format(base) +
                                  " != three-term form " + g.format(three_term)});
    }
    report.laws.push_back(std::move(decomposition));
  }
  return report;
}

Elem indicator_3x3_shortcut(const IndicatorMap& t, const PCMatrix& a) {
  require_domain(t, a);
  if (a.order() != 3)
    throw precondition_error("the 3x3 shortcut only applies to matrices of order 3");
  if (!t.absolute_value_induced())
    throw precondition_error(
        "the 3x3 shortcut needs an indicator induced by an absolute value; '" +
        t.name() + "' is not known to be one");
  if (!is_abelian(t.domain()))
    throw precondition_error("the 3x3 shortcut needs a commutative domain");
  require_pc(a);
  return t(a.at(0, 1), a.at(0, 2), a.at(1, 2));
}

ProductMatrixResult product_matrix_indicator(const IndicatorMap& t1,
                                             const PCMatrix& a,
                                             const IndicatorMap& t2,
                                             const PCMatrix& b) {
  if (a.order() != b.order())
    throw structure_mismatch("paired matrices must have the same order (" +
                             std::to_string(a.order()) + " vs " +
                             std::to_string(b.order()) + ")");
  require_domain(t1, a);
  require_domain(t2, b);
  if (!t1.codomain().same(t2.codomain()))
    throw structure_mismatch("paired indicators must share a codomain");

  IndicatorMap combined = product_indicator(t1, t2);
  const Group& p = combined.domain();
  const std::size_t n = a.order();
  std::vector<Elem> entries;
  entries.reserve(n * n);
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = 0; j < n; ++j)
      entries.push_back(p.pair(a.at(i, j), b.at(i, j)));
  PCMatrix paired(p, n, std::move(entries), a.labels());

  const AloGroup& g = t1.codomain();
  Elem left = inconsistency_indicator(t1, a, 0).indicator_value;
  Elem right = inconsistency_indicator(t2, b, 0).indicator_value;
  Elem comb = inconsistency_indicator(combined, paired, 0).indicator_value;
  const bool holds = g.eq(comb, g.max(left, right));
  return ProductMatrixResult{std::move(paired), std::move(comb), std::move(left),
                             std::move(right), holds};
}

PCMatrix transport_matrix(const GroupHom& phi, const PCMatrix& a) {
  if (!phi.domain.same(a.group()))
    throw structure_mismatch("homomorphism '" + phi.name + "' starts from " +
                             phi.domain.name() + " but the matrix lives in " +
                             a.group().name());
  const std::size_t n = a.order();
  std::vector<Elem> entries;
  entries.reserve(n * n);
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = 0; j < n; ++j) entries.push_back(phi(a.at(i, j)));
  return PCMatrix(phi.codomain, n, std::move(entries), a.labels());
}

PCMatrix to_additive_scale(const PCMatrix& a, double base) {
  if (!a.group().same(Group::reals_multiplicative()))
    throw precondition_error("to_additive_scale expects a multiplicative-scale matrix");
  return transport_matrix(inverted(exp_isomorphism(base)), a);
}

PCMatrix to_multiplicative_scale(const PCMatrix& a, double base) {
  if (!a.group().same(Group::reals_additive()))
    throw precondition_error("to_multiplicative_scale expects an additive-scale matrix");
  return transport_matrix(exp_isomorphism(base), a);
}

TriadReport additive_indicator(const PCMatrix& a, double base, std::size_t top) {
  if (!a.group().same(Group::reals_additive()))
    throw precondition_error("additive_indicator expects an additive-scale matrix");
  return inconsistency_indicator(s_a_indicator(base), a, top);
}

}  // namespace pcx
