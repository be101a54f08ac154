#include "pcx/group.hpp"

#include <algorithm>
#include <atomic>
#include <cmath>
#include <cstdio>
#include <map>
#include <mutex>

#include "pcx/errors.hpp"

namespace pcx {

namespace {

std::uint64_t next_structure_id() {
  static std::atomic<std::uint64_t> counter{1};
  return counter.fetch_add(1);
}

std::string format_double(double v) {
  char buf[40];
  std::snprintf(buf, sizeof(buf), "%.12g", v);
  return buf;
}

}  // namespace

bool real_eq(double x, double y) {
  const double scale = std::max(std::fabs(x), std::fabs(y));
  return std::fabs(x - y) <= real_abs_tol + real_rel_tol * scale;
}

Ord real_cmp(double x, double y) {
  if (real_eq(x, y)) return Ord::eq;
  return x < y ? Ord::lt : Ord::gt;
}

// ---------------------------------------------------------------------------
// Group
// ---------------------------------------------------------------------------

struct Group::Impl {
  enum class Kind { real_additive, real_multiplicative, finite, product };

  Kind kind;
  std::uint64_t id = next_structure_id();
  std::string name;
  std::optional<bool> abelian;

  // finite
  std::vector<std::string> labels;
  std::vector<std::vector<int>> table;
  std::vector<int> inverse_of;
  int identity_index = -1;

  // product
  std::shared_ptr<const Impl> left;
  std::shared_ptr<const Impl> right;
};

namespace {

using Impl = Group::Impl;

std::shared_ptr<const Impl> additive_impl() {
  static const std::shared_ptr<const Impl> impl = [] {
    auto p = std::make_shared<Impl>();
    p->kind = Impl::Kind::real_additive;
    p->name = "additive-reals";
    p->abelian = true;
    return p;
  }();
  return impl;
}

std::shared_ptr<const Impl> multiplicative_impl() {
  static const std::shared_ptr<const Impl> impl = [] {
    auto p = std::make_shared<Impl>();
    p->kind = Impl::Kind::real_multiplicative;
    p->name = "multiplicative-reals";
    p->abelian = true;
    return p;
  }();
  return impl;
}

}  // namespace

Group Group::reals_additive() { return Group(additive_impl()); }

Group Group::reals_multiplicative() { return Group(multiplicative_impl()); }

Group Group::cayley(std::string name, std::vector<std::string> labels,
                    std::vector<std::vector<int>> table) {
  const std::size_t n = labels.size();
  if (n == 0) throw precondition_error("cayley: empty carrier");
  if (table.size() != n)
    throw precondition_error("cayley: table must have one row per element");
  for (const auto& row : table) {
    if (row.size() != n)
      throw precondition_error("cayley: table rows must have one entry per element");
    for (int v : row) {
      if (v < 0 || static_cast<std::size_t>(v) >= n)
        throw precondition_error("cayley: table entry out of range");
    }
  }
  for (std::size_t i = 0; i < n; ++i) {
    for (std::size_t j = i + 1; j < n; ++j) {
      if (labels[i] == labels[j])
        throw precondition_error("cayley: duplicate label '" + labels[i] + "'");
    }
  }

  // Locate the two-sided identity.
  int e = -1;
  for (std::size_t c = 0; c < n; ++c) {
    bool ok = true;
    for (std::size_t x = 0; x < n; ++x) {
      if (table[c][x] != static_cast<int>(x) || table[x][c] != static_cast<int>(x)) {
        ok = false;
        break;
      }
    }
    if (ok) {
      e = static_cast<int>(c);
      break;
    }
  }
  if (e < 0) throw precondition_error("cayley: table has no identity element");

  std::vector<int> inverse_of(n, -1);
  for (std::size_t x = 0; x < n; ++x) {
    for (std::size_t y = 0; y < n; ++y) {
      if (table[x][y] == e && table[y][x] == e) {
        inverse_of[x] = static_cast<int>(y);
        break;
      }
    }
    if (inverse_of[x] < 0)
      throw precondition_error("cayley: element '" + labels[x] + "' has no inverse");
  }

  for (std::size_t a = 0; a < n; ++a) {
    for (std::size_t b = 0; b < n; ++b) {
      for (std::size_t c = 0; c < n; ++c) {
        if (table[table[a][b]][c] != table[a][table[b][c]])
          throw precondition_error("cayley: table is not associative at (" +
                                   labels[a] + ", " + labels[b] + ", " + labels[c] + ")");
      }
    }
  }

  bool abelian = true;
  for (std::size_t a = 0; a < n && abelian; ++a)
    for (std::size_t b = a + 1; b < n; ++b)
      if (table[a][b] != table[b][a]) {
        abelian = false;
        break;
      }

  auto p = std::make_shared<Impl>();
  p->kind = Impl::Kind::finite;
  p->name = std::move(name);
  p->abelian = abelian;
  p->labels = std::move(labels);
  p->table = std::move(table);
  p->inverse_of = std::move(inverse_of);
  p->identity_index = e;
  return Group(std::move(p));
}

Group Group::direct_product(const Group& left, const Group& right) {
  // Cache by factor ids so that repeated products of the same groups share
  // one structure (and therefore one ownership id).
  static std::mutex mu;
  static std::map<std::pair<std::uint64_t, std::uint64_t>,
                  std::shared_ptr<const Impl>> cache;

  std::lock_guard<std::mutex> lock(mu);
  const auto key = std::make_pair(left.id(), right.id());
  if (auto it = cache.find(key); it != cache.end()) return Group(it->second);

  auto p = std::make_shared<Impl>();
  p->kind = Impl::Kind::product;
  p->name = "(" + left.name() + " x " + right.name() + ")";
  if (left.abelian_hint() && right.abelian_hint())
    p->abelian = *left.abelian_hint() && *right.abelian_hint();
  p->left = left.impl_;
  p->right = right.impl_;
  cache.emplace(key, p);
  return Group(std::move(p));
}

const std::string& Group::name() const { return impl_->name; }

std::uint64_t Group::id() const { return impl_->id; }

std::optional<bool> Group::abelian_hint() const { return impl_->abelian; }

bool Group::is_real() const {
  return impl_->kind == Impl::Kind::real_additive ||
         impl_->kind == Impl::Kind::real_multiplicative;
}

bool Group::is_finite() const { return impl_->kind == Impl::Kind::finite; }

bool Group::is_product() const { return impl_->kind == Impl::Kind::product; }

void Group::require_owned(const Elem& a) const {
  if (!a.valid())
    throw ownership_error("disengaged element passed to " + impl_->name);
  if (a.owner() != impl_->id)
    throw ownership_error("element does not belong to " + impl_->name);
}

Elem Group::identity() const {
  switch (impl_->kind) {
    case Impl::Kind::real_additive:
      return Elem(0.0, impl_->id);
    case Impl::Kind::real_multiplicative:
      return Elem(1.0, impl_->id);
    case Impl::Kind::finite:
      return Elem(static_cast<std::int32_t>(impl_->identity_index), impl_->id);
    case Impl::Kind::product: {
      std::vector<Elem> parts{Group(impl_->left).identity(),
                              Group(impl_->right).identity()};
      return Elem(std::move(parts), impl_->id);
    }
  }
  throw error("unreachable");
}

Elem Group::op(const Elem& a, const Elem& b) const {
  require_owned(a);
  require_owned(b);
  switch (impl_->kind) {
    case Impl::Kind::real_additive: {
      const double r = a.real() + b.real();
      if (!std::isfinite(r)) throw invalid_element("additive result is not finite");
      return Elem(r, impl_->id);
    }
    case Impl::Kind::real_multiplicative: {
      const double r = a.real() * b.real();
      if (!std::isfinite(r) || r <= 0.0)
        throw invalid_element("multiplicative result left the positive reals");
      return Elem(r, impl_->id);
    }
    case Impl::Kind::finite:
      return Elem(static_cast<std::int32_t>(impl_->table[a.code()][b.code()]),
                  impl_->id);
    case Impl::Kind::product: {
      const Group l(impl_->left), r(impl_->right);
      std::vector<Elem> parts{l.op(a.parts()[0], b.parts()[0]),
                              r.op(a.parts()[1], b.parts()[1])};
      return Elem(std::move(parts), impl_->id);
    }
  }
  throw error("unreachable");
}

Elem Group::inverse(const Elem& a) const {
  require_owned(a);
  switch (impl_->kind) {
    case Impl::Kind::real_additive:
      return Elem(-a.real(), impl_->id);
    case Impl::Kind::real_multiplicative: {
      const double r = 1.0 / a.real();
      if (!std::isfinite(r) || r <= 0.0)
        throw invalid_element("multiplicative inverse left the positive reals");
      return Elem(r, impl_->id);
    }
    case Impl::Kind::finite:
      return Elem(static_cast<std::int32_t>(impl_->inverse_of[a.code()]), impl_->id);
    case Impl::Kind::product: {
      const Group l(impl_->left), r(impl_->right);
      std::vector<Elem> parts{l.inverse(a.parts()[0]), r.inverse(a.parts()[1])};
      return Elem(std::move(parts), impl_->id);
    }
  }
  throw error("unreachable");
}

bool Group::eq(const Elem& a, const Elem& b) const {
  require_owned(a);
  require_owned(b);
  switch (impl_->kind) {
    case Impl::Kind::real_additive:
    case Impl::Kind::real_multiplicative:
      return real_eq(a.real(), b.real());
    case Impl::Kind::finite:
      return a.code() == b.code();
    case Impl::Kind::product:
      return Group(impl_->left).eq(a.parts()[0], b.parts()[0]) &&
             Group(impl_->right).eq(a.parts()[1], b.parts()[1]);
  }
  throw error("unreachable");
}

Elem Group::element(double value) const {
  if (!std::isfinite(value))
    throw invalid_element("non-finite value for " + impl_->name);
  switch (impl_->kind) {
    case Impl::Kind::real_additive:
      return Elem(value, impl_->id);
    case Impl::Kind::real_multiplicative:
      if (value <= 0.0)
        throw invalid_element("value " + format_double(value) +
                              " is outside the positive reals");
      return Elem(value, impl_->id);
    default:
      throw invalid_element(impl_->name + " does not take real values");
  }
}

double Group::value(const Elem& a) const {
  require_owned(a);
  if (!a.is_real())
    throw invalid_element(impl_->name + " elements have no real payload");
  return a.real();
}

std::size_t Group::order() const {
  if (!is_finite()) throw precondition_error(impl_->name + " is not finite");
  return impl_->labels.size();
}

const std::vector<std::string>& Group::labels() const {
  if (!is_finite()) throw precondition_error(impl_->name + " is not finite");
  return impl_->labels;
}

Elem Group::element(std::string_view label) const {
  if (!is_finite())
    throw invalid_element(impl_->name + " has no labelled elements");
  for (std::size_t i = 0; i < impl_->labels.size(); ++i) {
    if (impl_->labels[i] == label)
      return Elem(static_cast<std::int32_t>(i), impl_->id);
  }
  throw invalid_element("unknown label '" + std::string(label) + "' in " + impl_->name);
}

std::vector<Elem> Group::carrier() const {
  if (!is_finite()) throw precondition_error(impl_->name + " is not finite");
  std::vector<Elem> out;
  out.reserve(impl_->labels.size());
  for (std::size_t i = 0; i < impl_->labels.size(); ++i)
    out.push_back(Elem(static_cast<std::int32_t>(i), impl_->id));
  return out;
}

Group Group::left_factor() const {
  if (!is_product()) throw precondition_error(impl_->name + " is not a product");
  return Group(impl_->left);
}

Group Group::right_factor() const {
  if (!is_product()) throw precondition_error(impl_->name + " is not a product");
  return Group(impl_->right);
}

Elem Group::pair(const Elem& left, const Elem& right) const {
  if (!is_product()) throw precondition_error(impl_->name + " is not a product");
  Group(impl_->left).require_owned(left);
  Group(impl_->right).require_owned(right);
  std::vector<Elem> parts{left, right};
  return Elem(std::move(parts), impl_->id);
}

std::pair<Elem, Elem> Group::split(const Elem& a) const {
  if (!is_product()) throw precondition_error(impl_->name + " is not a product");
  require_owned(a);
  return {a.parts()[0], a.parts()[1]};
}

std::string Group::format(const Elem& a) const {
  require_owned(a);
  switch (impl_->kind) {
    case Impl::Kind::real_additive:
    case Impl::Kind::real_multiplicative:
      return format_double(a.real());
    case Impl::Kind::finite:
      return impl_->labels[a.code()];
    case Impl::Kind::product:
      return "(" + Group(impl_->left).format(a.parts()[0]) + ", " +
             Group(impl_->right).format(a.parts()[1]) + ")";
  }
  throw error("unreachable");
}

ElemSampler Group::default_sampler() const {
  switch (impl_->kind) {
    case Impl::Kind::real_additive: {
      Group self = *this;
      return [self](Rng& rng) {
        std::uniform_real_distribution<double> dist(-10.0, 10.0);
        return self.element(dist(rng));
      };
    }
    case Impl::Kind::real_multiplicative: {
      Group self = *this;
      return [self](Rng& rng) {
        std::uniform_real_distribution<double> dist(-3.0, 3.0);
        return self.element(std::pow(10.0, dist(rng)));
      };
    }
    case Impl::Kind::finite: {
      Group self = *this;
      const std::size_t n = impl_->labels.size();
      return [self, n](Rng& rng) {
        std::uniform_int_distribution<std::size_t> dist(0, n - 1);
        return Elem(static_cast<std::int32_t>(dist(rng)), self.id());
      };
    }
    case Impl::Kind::product: {
      Group self = *this;
      ElemSampler ls = Group(impl_->left).default_sampler();
      ElemSampler rs = Group(impl_->right).default_sampler();
      return [self, ls, rs](Rng& rng) {
        Elem l = ls(rng);
        Elem r = rs(rng);
        return self.pair(l, r);
      };
    }
  }
  throw error("unreachable");
}

bool is_abelian(const Group& g, std::size_t samples, std::uint64_t seed) {
  if (auto hint = g.abelian_hint()) return *hint;
  return !find_noncommuting_pair(g, samples, seed).has_value();
}

std::optional<std::pair<Elem, Elem>> find_noncommuting_pair(
    const Group& g, std::size_t samples, std::uint64_t seed) {
  if (g.is_finite()) {
    auto elems = g.carrier();
    for (const Elem& a : elems)
      for (const Elem& b : elems)
        if (!g.eq(g.op(a, b), g.op(b, a))) return std::make_pair(a, b);
    return std::nullopt;
  }
  if (auto hint = g.abelian_hint(); hint && *hint) return std::nullopt;
  Rng rng(seed);
  auto sample = g.default_sampler();
  for (std::size_t i = 0; i < samples; ++i) {
    Elem a = sample(rng);
    Elem b = sample(rng);
    if (!g.eq(g.op(a, b), g.op(b, a))) return std::make_pair(a, b);
  }
  return std::nullopt;
}

// ---------------------------------------------------------------------------
// AloGroup
// ---------------------------------------------------------------------------

struct AloGroup::Impl {
  Group group;
  std::string name;
};

AloGroup AloGroup::additive_reals() {
  static const auto impl = std::make_shared<const Impl>(
      Impl{Group::reals_additive(), "additive-reals"});
  return AloGroup(impl);
}

AloGroup AloGroup::multiplicative_reals() {
  static const auto impl = std::make_shared<const Impl>(
      Impl{Group::reals_multiplicative(), "multiplicative-reals"});
  return AloGroup(impl);
}

const Group& AloGroup::group() const { return impl_->group; }
const std::string& AloGroup::name() const { return impl_->name; }
std::uint64_t AloGroup::id() const { return impl_->group.id(); }

Elem AloGroup::identity() const { return impl_->group.identity(); }
Elem AloGroup::op(const Elem& a, const Elem& b) const { return impl_->group.op(a, b); }
Elem AloGroup::inverse(const Elem& a) const { return impl_->group.inverse(a); }
bool AloGroup::eq(const Elem& a, const Elem& b) const { return impl_->group.eq(a, b); }

Ord AloGroup::cmp(const Elem& a, const Elem& b) const {
  impl_->group.require_owned(a);
  impl_->group.require_owned(b);
  return real_cmp(a.real(), b.real());
}

bool AloGroup::leq(const Elem& a, const Elem& b) const { return cmp(a, b) != Ord::gt; }
bool AloGroup::lt(const Elem& a, const Elem& b) const { return cmp(a, b) == Ord::lt; }

Elem AloGroup::max(const Elem& a, const Elem& b) const {
  impl_->group.require_owned(a);
  impl_->group.require_owned(b);
  // Raw numeric order on purpose: keeps max-folds associative and
  // independent of evaluation order, which the tolerant cmp() is not.
  return a.real() < b.real() ? b : a;
}

Elem AloGroup::min(const Elem& a, const Elem& b) const {
  impl_->group.require_owned(a);
  impl_->group.require_owned(b);
  return b.real() < a.real() ? b : a;
}

Elem AloGroup::element(double value) const { return impl_->group.element(value); }
double AloGroup::value(const Elem& a) const { return impl_->group.value(a); }
std::string AloGroup::format(const Elem& a) const { return impl_->group.format(a); }
ElemSampler AloGroup::default_sampler() const { return impl_->group.default_sampler(); }

Elem gnorm(const AloGroup& g, const Elem& x) { return g.max(x, g.inverse(x)); }

// ---------------------------------------------------------------------------
// GroupHom
// ---------------------------------------------------------------------------

Elem GroupHom::operator()(const Elem& x) const {
  domain.require_owned(x);
  Elem y = forward(x);
  codomain.require_owned(y);
  return y;
}

Elem GroupHom::back(const Elem& y) const {
  if (!backward) throw precondition_error("homomorphism '" + name + "' has no inverse map");
  codomain.require_owned(y);
  Elem x = backward(y);
  domain.require_owned(x);
  return x;
}

GroupHom identity_isomorphism(const Group& g) {
  return GroupHom{g, g, [](const Elem& x) { return x; },
                  [](const Elem& x) { return x; }, "id[" + g.name() + "]"};
}

GroupHom inverted(const GroupHom& phi) {
  if (!phi.invertible())
    throw precondition_error("homomorphism '" + phi.name + "' has no inverse map");
  return GroupHom{phi.codomain, phi.domain, phi.backward, phi.forward,
                  "inv[" + phi.name + "]"};
}

}  // namespace pcx
