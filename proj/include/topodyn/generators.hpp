#ifndef TOPODYN_GENERATORS_HPP
#define TOPODYN_GENERATORS_HPP

#include "topodyn/finite_system.hpp"

namespace topodyn {

/// The Cantor-fan counterexample at desk scale: the origin plus, for each
/// fiber 2 <= n <= N, the planar points (1/n, y/n) where y runs over the
/// standard Cantor codings of the periodic binary sequences of period <= P.
/// The map fixes the origin and acts on each fiber as the coded shift.
/// Euclidean metric; named subsets "lambda" (the origin) and "fiber<n>".
/// Coordinates are exact rationals, recorded in the labels; the resolution is
/// declared as sqrt(2)/N, the norm bound of the deepest complete fiber.
FiniteSystem cantor_fan(Count fibers, Count max_period);

/// The circle-accumulation counterexample: 2^(N-1) fixed samples of the unit
/// circle plus, for 1 <= n <= N, the rotating rings z_{n,k} =
/// (1-1/n) e^{2 pi i k / 2^(n-1)}, each ring a single cyclic orbit.
/// Named subsets "circle", "rings", and "ring<n>".
FiniteSystem circle_accumulation(Count depth);

}  // namespace topodyn

#endif
