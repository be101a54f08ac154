#pragma once

#include <cstdint>
#include <variant>
#include <vector>

namespace pcx {

class Group;

/**
 * An element of some group (or of a product of groups).
 *
 * Elements are opaque value types: they remember which structure created
 * them (the owner id) and refuse to travel.  Every operation that consumes
 * an Elem checks ownership and throws ownership_error on a mismatch, so a
 * real number from the additive group can never be silently combined with
 * one from the multiplicative group even though both are doubles inside.
 *
 * Construction goes through the owning Group (Group::element, Group::pair,
 * Group::identity, ...); there is no public constructor.
 */
class Elem {
 public:
  Elem() = default;  ///< Disengaged element; owned by nothing, valid() == false.

  bool valid() const { return owner_ != 0; }
  std::uint64_t owner() const { return owner_; }

  bool is_real() const { return std::holds_alternative<double>(payload_); }
  bool is_code() const { return std::holds_alternative<std::int32_t>(payload_); }
  bool is_pair() const { return std::holds_alternative<std::vector<Elem>>(payload_); }

  /// Raw payload accessors.  They do not check ownership; the owning
  /// structure's methods are the supported way to work with elements.
  double real() const { return std::get<double>(payload_); }
  std::int32_t code() const { return std::get<std::int32_t>(payload_); }
  const std::vector<Elem>& parts() const { return std::get<std::vector<Elem>>(payload_); }

 private:
  friend class Group;

  using Payload = std::variant<std::monostate, double, std::int32_t, std::vector<Elem>>;

  Elem(Payload payload, std::uint64_t owner)
      : payload_(std::move(payload)), owner_(owner) {}

  Payload payload_;
  std::uint64_t owner_ = 0;
};

}  // namespace pcx
