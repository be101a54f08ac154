#pragma once

#include <cstdint>
#include <functional>
#include <memory>
#include <optional>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

#include "pcx/elem.hpp"
#include "pcx/sampling.hpp"

namespace pcx {

/// Outcome of a three-way comparison.
enum class Ord { lt, eq, gt };

/// Tolerances of the real-number equality used throughout the library:
/// two doubles are considered equal when
///   |x - y| <= real_abs_tol + real_rel_tol * max(|x|, |y|).
inline constexpr double real_abs_tol = 1e-9;
inline constexpr double real_rel_tol = 1e-9;

bool real_eq(double x, double y);
Ord real_cmp(double x, double y);

/**
 * A group whose elements are opaque Elem values.
 *
 * Four carriers are supported:
 *   - the reals under addition,
 *   - the strictly positive reals under multiplication,
 *   - finite groups given by a Cayley table over labelled elements,
 *   - direct products of two groups (componentwise operation).
 *
 * Group is a cheap handle (shared immutable state); copies compare equal
 * with same().  The two real groups are process-wide singletons, so
 * elements created through any copy interoperate.  All element-consuming
 * methods verify ownership and throw ownership_error on foreign elements.
 */
class Group {
 public:
  /// The reals under addition.  Identity 0.
  static Group reals_additive();

  /// The strictly positive reals under multiplication.  Identity 1.
  /// element() rejects values <= 0 and non-finite values.
  static Group reals_multiplicative();

  /**
   * A finite group from a Cayley table.  `table[i][j]` is the index of
   * labels[i] * labels[j].  The table is fully validated (identity,
   * inverses, associativity); commutativity is detected, not declared.
   * Throws precondition_error if the table is not a group.
   */
  static Group cayley(std::string name, std::vector<std::string> labels,
                      std::vector<std::vector<int>> table);

  /// Direct product with componentwise operation.  Handles are cached, so
  /// the product of the same two groups is the same structure every time.
  static Group direct_product(const Group& left, const Group& right);

  const std::string& name() const;
  std::uint64_t id() const;
  bool same(const Group& other) const { return id() == other.id(); }

  /// True when commutativity is known for sure (exact for finite and real
  /// groups, inherited for products).
  std::optional<bool> abelian_hint() const;

  Elem identity() const;
  Elem op(const Elem& a, const Elem& b) const;
  Elem inverse(const Elem& a) const;
  bool eq(const Elem& a, const Elem& b) const;

  bool is_real() const;
  bool is_finite() const;
  bool is_product() const;

  // --- real groups ---
  Elem element(double value) const;
  double value(const Elem& a) const;  ///< payload of a real-group element

  // --- finite groups ---
  std::size_t order() const;
  const std::vector<std::string>& labels() const;
  Elem element(std::string_view label) const;
  std::vector<Elem> carrier() const;  ///< every element, in label order

  // --- product groups ---
  Group left_factor() const;
  Group right_factor() const;
  Elem pair(const Elem& left, const Elem& right) const;
  std::pair<Elem, Elem> split(const Elem& a) const;

  std::string format(const Elem& a) const;
  void require_owned(const Elem& a) const;

  /// Generic sampler: uniform on [-10, 10] for the additive reals,
  /// log-uniform on [1e-3, 1e3] for the multiplicative reals, uniform
  /// over the carrier for finite groups, componentwise for products.
  ElemSampler default_sampler() const;

  struct Impl;  // opaque; defined in group.cpp

 private:
  explicit Group(std::shared_ptr<const Impl> impl) : impl_(std::move(impl)) {}

  std::shared_ptr<const Impl> impl_;
};

/// Exact answer when the group knows (finite tables, the real groups,
/// products of such); otherwise decided by sampling `samples` pairs.
bool is_abelian(const Group& g, std::size_t samples = 200,
                std::uint64_t seed = default_seed);

/// A pair a, b with ab != ba, if one is known or found by sampling.
std::optional<std::pair<Elem, Elem>> find_noncommuting_pair(
    const Group& g, std::size_t samples = 200, std::uint64_t seed = default_seed);

/**
 * An abelian linearly ordered group: a commutative Group together with a
 * translation-invariant total order.  Two instances exist, both over real
 * carriers; cmp() applies the documented tolerance, while max()/min()
 * select by the raw numeric order so that folds over many values are
 * associative and deterministic.
 */
class AloGroup {
 public:
  /// The reals under addition, usual order.
  static AloGroup additive_reals();

  /// The positive reals under multiplication, usual order.
  static AloGroup multiplicative_reals();

  const Group& group() const;
  const std::string& name() const;
  std::uint64_t id() const;
  bool same(const AloGroup& other) const { return id() == other.id(); }

  Elem identity() const;
  Elem op(const Elem& a, const Elem& b) const;
  Elem inverse(const Elem& a) const;
  bool eq(const Elem& a, const Elem& b) const;

  Ord cmp(const Elem& a, const Elem& b) const;
  bool leq(const Elem& a, const Elem& b) const;
  bool lt(const Elem& a, const Elem& b) const;
  Elem max(const Elem& a, const Elem& b) const;
  Elem min(const Elem& a, const Elem& b) const;

  Elem element(double value) const;
  double value(const Elem& a) const;
  std::string format(const Elem& a) const;

  ElemSampler default_sampler() const;

 private:
  struct Impl;
  explicit AloGroup(std::shared_ptr<const Impl> impl) : impl_(std::move(impl)) {}

  std::shared_ptr<const Impl> impl_;
};

/// The norm max{x, x^-1} of an ordered-group element.
Elem gnorm(const AloGroup& g, const Elem& x);

/**
 * A homomorphism between two groups, with an optional inverse map.
 * operator() checks ownership on the way in and on the way out.
 */
struct GroupHom {
  Group domain;
  Group codomain;
  std::function<Elem(const Elem&)> forward;
  std::function<Elem(const Elem&)> backward;  ///< may be empty
  std::string name;

  Elem operator()(const Elem& x) const;
  bool invertible() const { return static_cast<bool>(backward); }
  Elem back(const Elem& y) const;
};

/// Identity map of a group onto itself (trivially an isomorphism).
GroupHom identity_isomorphism(const Group& g);

/// Swaps the two directions of an invertible homomorphism.
GroupHom inverted(const GroupHom& phi);

}  // namespace pcx
