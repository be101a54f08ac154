#pragma once

#include <cstdint>

#include "pcx/group.hpp"

namespace pcx::detail {

/// Verifies phi(x y) = phi(x) phi(y) on samples (exhaustively for small
/// finite domains); throws law_violation with a witness otherwise.
void require_homomorphism(const GroupHom& phi, std::size_t samples,
                          std::uint64_t seed);

}  // namespace pcx::detail
