#include "apxconv/gen.hpp"

#include <bit>
#include <sstream>
#include <stdexcept>
#include <string>
#include <vector>

namespace apxconv {

std::uint64_t next_below(Rng& rng, std::uint64_t k) {
  if (k == 0) throw std::invalid_argument("next_below: k must be positive");
  return rng() % k;
}

namespace {

Carrier indexed_carrier(int points) {
  std::vector<std::string> names;
  names.reserve(static_cast<size_t>(points));
  for (int i = 0; i < points; ++i) names.push_back("x" + std::to_string(i));
  return make_carrier(names);
}

/// Draws a grid value v with v <= bound in the value order, uniformly over
/// the grid points of the mode (integers for chains, i/denom otherwise).
QuantaleValue draw_below(Rng& rng, const QuantaleMode& mode,
                         const QuantaleValue& bound, int denom) {
  if (mode.is_lukasiewicz()) {
    // Reversed order: v <= bound means numeric v >= numeric bound.
    long long lo = bound.v.numerator();
    long long hi = mode.chain;
    long long pick =
        lo + static_cast<long long>(next_below(rng, static_cast<std::uint64_t>(hi - lo + 1)));
    return make_value(mode, Rational(pick));
  }
  // Unit interval: v <= bound numerically; bound lies on the grid.
  long long steps = boost::rational_cast<long long>(bound.v * Rational(denom));
  long long pick =
      static_cast<long long>(next_below(rng, static_cast<std::uint64_t>(steps + 1)));
  return make_value(mode, Rational(pick, denom));
}

CapSpace gen_impl(std::uint64_t seed, int points, const QuantaleMode& mode,
                  int denom, GenFlavor flavor) {
  const Carrier carrier = indexed_carrier(points);
  const int n = points;
  const Subset full_mask = carrier.full();
  Rng rng(seed);

  std::vector<QuantaleValue> table(
      static_cast<size_t>(full_mask) * static_cast<size_t>(n), bottom(mode));
  auto cell = [&](Subset b, int x) -> QuantaleValue& {
    return table[static_cast<size_t>(b - 1) * static_cast<size_t>(n) +
                 static_cast<size_t>(x)];
  };

  for (Subset b = 1; b <= full_mask; ++b) {
    if (std::popcount(b) == 1) {
      const int y = std::countr_zero(b);
      for (int x = 0; x < n; ++x)
        cell(b, x) = (x == y) ? top(mode) : draw_below(rng, mode, top(mode), denom);
      continue;
    }
    for (int x = 0; x < n; ++x) {
      // Monotonicity forces a(B, x) <= a(B \ {y}, x) for every y in B.
      QuantaleValue bound = top(mode);
      for (int y = 0; y < n; ++y)
        if (b & (1u << y)) bound = vmeet(bound, cell(b & ~(1u << y), x));
      cell(b, x) =
          (flavor == GenFlavor::Raw) ? draw_below(rng, mode, bound, denom) : bound;
    }
  }

  CapSpace space = make_cap_space(carrier, mode, table);
  if (flavor == GenFlavor::Ap) space = ap_reflection(space);
  return space;
}

}  // namespace

CapSpace gen_space(std::uint64_t seed, int points, int chain,
                   GenFlavor flavor) {
  if (points < 1 || points > 6)
    throw std::invalid_argument("gen_space: points must be in 1..6");
  if (chain < 1 || chain > 8)
    throw std::invalid_argument("gen_space: chain must be in 1..8");
  return gen_impl(seed, points, QuantaleMode::lukasiewicz(chain), /*denom=*/1, flavor);
}

CapSpace gen_space_unit_rational(std::uint64_t seed, int points, int denom,
                                 GenFlavor flavor) {
  if (points < 1 || points > 6)
    throw std::invalid_argument("gen_space_unit_rational: points must be in 1..6");
  if (denom < 1 || denom > 64)
    throw std::invalid_argument("gen_space_unit_rational: denom must be in 1..64");
  return gen_impl(seed, points, QuantaleMode::unit_rational(), denom, flavor);
}

VFunction gen_vfunction(Rng& rng, const Carrier& carrier,
                        const QuantaleMode& mode) {
  std::vector<QuantaleValue> vals;
  vals.reserve(carrier.names.size());
  for (size_t i = 0; i < carrier.names.size(); ++i) {
    if (mode.is_lukasiewicz())
      vals.push_back(make_value(
          mode, Rational(static_cast<long long>(
                    next_below(rng, static_cast<std::uint64_t>(mode.chain) + 1)))));
    else
      vals.push_back(
          make_value(mode, Rational(static_cast<long long>(next_below(rng, 9)), 8)));
  }
  return make_vfunction(carrier, mode, vals);
}

PointMap gen_pointmap(Rng& rng, const Carrier& dom, const Carrier& cod) {
  std::vector<int> img;
  img.reserve(dom.names.size());
  for (size_t i = 0; i < dom.names.size(); ++i)
    img.push_back(static_cast<int>(next_below(rng, cod.names.size())));
  return make_point_map(dom, cod, img);
}

}  // namespace apxconv
