#pragma once

#include <cstdint>
#include <random>

#include "apxconv/cap.hpp"
#include "apxconv/finset.hpp"
#include "apxconv/quantale.hpp"

namespace apxconv {

using Rng = std::mt19937_64;

/// Uniform draw from {0, ..., k-1}, hand-rolled so streams are identical
/// across standard library implementations.
std::uint64_t next_below(Rng& rng, std::uint64_t k);

enum class GenFlavor {
  Raw,   ///< valid space, rows drawn freely below their lower bound
  Prap,  ///< every row forced to the meet of its singleton rows
  Ap,    ///< raw space followed by the approach reflection
};

/// Deterministic random space over points named x0..x{points-1} on the
/// lukasiewicz(chain) value set. Bounds: 1 <= points <= 6, 1 <= chain <= 8.
CapSpace gen_space(std::uint64_t seed, int points, int chain,
                   GenFlavor flavor);

/// Same scheme on the unit interval with values drawn from {i/denom}.
CapSpace gen_space_unit_rational(std::uint64_t seed, int points, int denom,
                                 GenFlavor flavor);

/// Random pointwise map into the value set (grid i/8 on the unit interval).
VFunction gen_vfunction(Rng& rng, const Carrier& carrier,
                        const QuantaleMode& mode);

PointMap gen_pointmap(Rng& rng, const Carrier& dom, const Carrier& cod);

}  // namespace apxconv
