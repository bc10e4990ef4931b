#pragma once

#include "apxconv/cap.hpp"
#include "apxconv/vspace.hpp"

namespace apxconv {

/// A convergence structure on the frame L = V^X, tabulated on principal
/// filters of L. Only the lukasiewicz presentation keeps L finite, so the
/// mode must be lukasiewicz; elements of L are ranked in mixed radix with
/// the numeric value of point i as digit i.
///
/// Conventions and contracts:
///  * lim[rank(bottom)] = rank(top): the degenerate filter is fixed to top
///    by convention (validated at construction, noted in reports);
///  * antitone contract: m <= m' implies Lim(m') <= Lim(m), because the
///    principal filter of the larger element is the coarser filter
///    (checked by validate, exhaustively over covering pairs).
struct ConvFrame {
  Carrier carrier;
  QuantaleMode mode;
  std::vector<std::uint32_t> lim;  // lim[rank(m)] = rank(Lim m)

  std::uint32_t lim_of(std::uint32_t rank) const { return lim.at(rank); }
};

/// (n+1)^|X| with the lattice guard applied: at most 10^4 elements unless
/// the APXCONV_MAX_LATTICE environment variable raises the cap.
std::uint32_t lattice_size(const Carrier& carrier, const QuantaleMode& mode);

std::uint32_t rank_of(const VFunction& m);
VFunction fn_of(const Carrier& carrier, const QuantaleMode& mode, std::uint32_t rank);

ConvFrame make_frame(Carrier carrier, QuantaleMode mode, std::vector<std::uint32_t> lim);

/// Checks the antitone contract over covering pairs.
ValidationReport validate(const ConvFrame& f);

/// Pseudocomplement in the product of chains: top where the argument is
/// bottom, bottom elsewhere. ell** is the indicator of the support.
VFunction pseudocomplement(const VFunction& ell);

struct FrameWitness {
  std::uint32_t m1 = 0;
  std::uint32_t m2 = 0;  // unused by single-element witnesses
};

std::optional<FrameWitness> star_star_violation(const ConvFrame& f);
bool is_star_star_regular(const ConvFrame& f);
std::optional<FrameWitness> centered_violation(const ConvFrame& f);
bool is_centered(const ConvFrame& f);

/// adh ell = join of Lim(m) over the m meshing ell (m and ell with meeting
/// supports); the empty join at ell = bottom is bottom.
VFunction frame_adh(const ConvFrame& f, const VFunction& ell);

/// The frame of a space: Lim(m) = lambda((supp m)^), with Lim(bottom) = top.
ConvFrame lim_from_cap(const CapSpace& s);
/// Inverse direction; requires is_vcap (throws with a witness otherwise).
/// Row B of the space is Lim(theta_B).
CapSpace cap_from_lim(const ConvFrame& f);

/// vcap frames are exactly the images of spaces: **-regular and centered.
bool is_vcap(const ConvFrame& f);

/// Pre-approach law in the frame: Lim(m1 join m2) = Lim(m1) meet Lim(m2)
/// for all pairs (finite filters intersect to the principal filter of the
/// join of their generators).
std::optional<FrameWitness> vprap_violation(const ConvFrame& f);
bool is_vprap(const ConvFrame& f);

/// Membership test for the tightest frame class: the pair law above plus the
/// adherence-residual law "for all f, g in L,
///   Lim(g) <= adh(f) (/) (join of adh(f) over supp g)   pointwise"
/// (the finite reduction of the limsup over the pushforward f*G). The residual
/// law alone is vacuous whenever every adherence is top, so the witness search
/// checks the pair law first and returns its witness when one exists.
std::optional<FrameWitness> vap_violation(const ConvFrame& f);
bool is_vap(const ConvFrame& f);

/// The pushforward family f*(g^) = {A within V : theta_A o f >= g}, i.e. all
/// supersets of f(supp g), as an explicit family over the chain carrier.
SetFamily f_star(const QuantaleMode& mode, const VFunction& f, const VFunction& g);

/// ell closed: Lim(m) <= ell for every proper m <= ell (proper principal
/// filters only, so bottom is closed vacuously). Returns sorted ranks.
std::vector<std::uint32_t> closed_elements(const ConvFrame& f);

/// The convergence on X x V whose limits read the space pointwise:
/// (x,v) in lim C^ iff lambda(proj C^)(x) > v, with equality to top required
/// at v = top. Carrier points are named "x@v".
FiniteConvergence point_space(const CapSpace& s);

}  // namespace apxconv
