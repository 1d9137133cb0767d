/**
 * This code is part of cscc.
 *
 * This code is licensed under the Apache License, Version 2.0. You may obtain
 * a copy of this license at http://www.apache.org/licenses/LICENSE-2.0.
 */

#ifndef CSCC_COMPLEX_BUILDER_HPP_
#define CSCC_COMPLEX_BUILDER_HPP_

#include <array>
#include <cstdint>

#include "cscc/complex.hpp"

namespace cscc {

using Extent = std::array<uint32_t, 3>;

/// Rectangular-solid color code with boundary colors
///   left/right (x): blue, front/back (y): red, bottom (z): green, top: yellow.
/// The result passes every validate() check; ConstructionError otherwise.
ColoredComplex build_cube(const Extent &extent);

/// build_cube, then the rear vertical edge where the x+ (blue) and y+ (red)
/// boundaries meet is marked for truncation: its strip of qubits becomes
/// truncation_region and the new facet is labeled PauliZ. The projection
/// itself is applied later on the CSS data (project_z).
/// Throws PreconditionError when the extent is too small for the strip to
/// stay clear of the opposite boundaries.
ColoredComplex build_truncated_cube(const Extent &extent);

/// Smallest extent accepted by build_truncated_cube's validators.
inline constexpr Extent kMinTruncatedExtent{2, 2, 2};

}  // namespace cscc

#endif  // CSCC_COMPLEX_BUILDER_HPP_
