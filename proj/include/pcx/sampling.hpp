#pragma once

#include <cstdint>
#include <functional>
#include <random>

#include "pcx/elem.hpp"

namespace pcx {

/// Deterministic RNG used by every sampled check in the library.
using Rng = std::mt19937_64;

/// Draws one element of some fixed structure.
using ElemSampler = std::function<Elem(Rng&)>;

inline constexpr std::uint64_t default_seed = 42;

/**
 * Options for constructions that can verify their algebraic laws.
 *
 * `checked == false` skips the optional verification pass (mandatory
 * gates, like injectivity of a transport map, always run).  `samples`
 * and `seed` drive the sampled checks; finite structures small enough
 * to enumerate are checked exhaustively instead.
 */
struct CheckOptions {
  bool checked = false;
  std::size_t samples = 200;
  std::uint64_t seed = default_seed;
};

}  // namespace pcx
