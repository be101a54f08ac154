#pragma once

#include <cstddef>
#include <optional>
#include <span>
#include <string>
#include <vector>

#include "pcx/group.hpp"
#include "pcx/indicator.hpp"

namespace pcx {

/**
 * A square matrix of group elements used for pairwise comparisons:
 * entry (i, j) records how strongly alternative i is preferred over
 * alternative j.  The constructor checks shape and ownership only; the
 * pairwise-comparisons structure (identity diagonal, reciprocal entries)
 * is queried with validate_pc and required by the analysis operations.
 */
class PCMatrix {
 public:
  PCMatrix(Group group, std::size_t n, std::vector<Elem> entries,
           std::vector<std::string> labels = {});

  /// Convenience for real-carrier groups: one vector per row.
  static PCMatrix from_rows(const Group& group,
                            const std::vector<std::vector<double>>& rows,
                            std::vector<std::string> labels = {});

  const Group& group() const { return group_; }
  std::size_t order() const { return n_; }
  const Elem& at(std::size_t i, std::size_t j) const;
  const std::vector<Elem>& entries() const { return entries_; }
  const std::vector<std::string>& labels() const { return labels_; }

  /// Payloads as rows; only for real-carrier groups.
  std::vector<std::vector<double>> rows() const;

 private:
  Group group_;
  std::size_t n_;
  std::vector<Elem> entries_;  // row-major
  std::vector<std::string> labels_;
};

/// One defect of the pairwise-comparisons structure.
struct PCViolation {
  enum class Kind { diagonal, reciprocity };
  Kind kind;
  std::size_t i = 0;
  std::size_t j = 0;
  std::string message;
};

/// Structural defects: diagonal entries away from the identity, and pairs
/// (i, j) with a_ji != a_ij^-1.  Empty result means the matrix qualifies.
std::vector<PCViolation> validate_pc(const PCMatrix& a);

bool is_pc_matrix(const PCMatrix& a);

/// Rebuilds the diagonal and the lower triangle from the strict upper
/// triangle (identity diagonal, a_ji = a_ij^-1).  Always yields a valid
/// pairwise-comparisons matrix.
PCMatrix repair_reciprocal_upper(const PCMatrix& a);

/// Index triple for the consistency relation a_ik a_kj = a_ij.
struct Triad {
  std::size_t i = 0;
  std::size_t j = 0;
  std::size_t k = 0;
};

/// First triple violating a_ik a_kj = a_ij in scan order, if any.
std::optional<Triad> find_inconsistent_triple(const PCMatrix& a);

/// True when every triple satisfies a_ik a_kj = a_ij.  A consistent
/// matrix is automatically a pairwise-comparisons matrix, so no
/// structural precondition applies here.
bool is_consistent(const PCMatrix& a);

/// Reindexed copy: entry (i, j) of the result is a(perm[i], perm[j]).
/// perm must be a permutation of 0..n-1.  Labels follow the entries.
PCMatrix relabel(const PCMatrix& a, std::span<const std::size_t> perm);

/// Max of t(a_ik, a_ij, a_kj) over the given triples (non-empty).
Elem indicator_of_set(const IndicatorMap& t, const PCMatrix& a,
                      std::span<const Triad> triads);

/// One evaluated triple of the full scan.
struct TriadValue {
  std::size_t i = 0;
  std::size_t j = 0;
  std::size_t k = 0;
  Elem value;
};

/// Result of scanning every index triple of a matrix.
struct TriadReport {
  Elem indicator_value;          ///< max over all n^3 triples
  bool consistent = false;       ///< indicator_value equals the codomain identity
  std::vector<TriadValue> worst; ///< inconsistent distinct-index triples, worst first
  std::size_t n = 0;
};

/**
 * The inconsistency indicator of a matrix: max of t(a_ik, a_ij, a_kj)
 * over all index triples (i, j, k), including repeated indices.  The
 * matrix must pass validate_pc.  `top` bounds the size of `worst`.
 */
TriadReport inconsistency_indicator(const IndicatorMap& t, const PCMatrix& a,
                                    std::size_t top = 10);

/**
 * Confirms that symmetrizing the indicator does not change the matrix
 * value (needs at least three alternatives).  The report carries one law
 * comparing the two full scans and, for 3x3 matrices, a second law
 * checking the three-term upper-triangle form of the symmetrized scan.
 */
LawReport indicator_symmetrized_equality(const IndicatorMap& t, const PCMatrix& a);

/**
 * For a 3x3 matrix over a commutative domain and an indicator induced by
 * an absolute value, the full scan collapses to the single value
 * t(a_01, a_02, a_12).  Refuses (precondition_error) when any of those
 * hypotheses is missing, since the collapse does not hold in general.
 */
Elem indicator_3x3_shortcut(const IndicatorMap& t, const PCMatrix& a);

/// Componentwise pairing of two matrices with the combined indicator.
struct ProductMatrixResult {
  PCMatrix matrix;       ///< entries (a_ij, b_ij) over the product group
  Elem combined_value;   ///< indicator of the paired matrix
  Elem left_value;
  Elem right_value;
  bool max_law_holds = false;  ///< combined == max(left, right)
};

ProductMatrixResult product_matrix_indicator(const IndicatorMap& t1,
                                             const PCMatrix& a,
                                             const IndicatorMap& t2,
                                             const PCMatrix& b);

/// Entrywise image of a matrix under a group homomorphism.
PCMatrix transport_matrix(const GroupHom& phi, const PCMatrix& a);

/// Rewrites a multiplicative-scale matrix as logarithms (base `base`).
PCMatrix to_additive_scale(const PCMatrix& a, double base);

/// Rewrites an additive-scale matrix as powers of `base`.
PCMatrix to_multiplicative_scale(const PCMatrix& a, double base);

/// Full scan of an additive-scale matrix under the exponential-family
/// indicator with the given base; the value equals the multiplicative
/// indicator of the corresponding powers matrix.
TriadReport additive_indicator(const PCMatrix& a, double base, std::size_t top = 10);

}  // namespace pcx
