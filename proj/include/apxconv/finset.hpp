#pragma once

#include "apxconv/quantale.hpp"

#include <cstdint>
#include <optional>

namespace apxconv {

/// Subsets of a carrier are bitmasks; bit i stands for carrier point i.
using Subset = std::uint32_t;

/// Guard for every 2^|X| loop in the library.
inline constexpr int kMaxPoints = 20;

/// A finite set of named points. Point order is fixed and meaningful: it is
/// the bit order of Subset masks and the index order of VFunction values.
struct Carrier {
  std::vector<std::string> names;

  int size() const { return static_cast<int>(names.size()); }
  Subset full() const { return static_cast<Subset>((1u << names.size()) - 1); }
  /// Index of a named point; throws std::invalid_argument if absent.
  int index(const std::string& name) const;
  std::string subset_to_string(Subset s) const;  // "{p,q}", carrier order

  friend bool operator==(const Carrier&, const Carrier&) = default;
};

/// Validates name uniqueness and the size guard.
Carrier make_carrier(std::vector<std::string> names);

/// Parses "{p,q}" (whitespace tolerated, "{}" allowed) against a carrier.
Subset parse_subset(const Carrier& carrier, const std::string& text);

void require_same_carrier(const Carrier& a, const Carrier& b);

/// A map between carriers, by point index.
struct PointMap {
  Carrier dom;
  Carrier cod;
  std::vector<int> img;  // img[i] = index in cod of the image of dom point i

  int apply(int i) const { return img.at(static_cast<size_t>(i)); }
};

PointMap make_point_map(Carrier dom, Carrier cod, std::vector<int> img);

Subset image_subset(const PointMap& f, Subset a);
Subset preimage_subset(const PointMap& f, Subset b);

/// Outcome of a structural validation; `violations` holds one human-readable
/// witness per broken axiom instance.
struct ValidationReport {
  std::vector<std::string> violations;
  bool ok() const { return violations.empty(); }
};

/// A V-valued function on a carrier, one value per point.
struct VFunction {
  Carrier carrier;
  QuantaleMode mode;
  std::vector<QuantaleValue> values;

  const QuantaleValue& at(int i) const { return values.at(static_cast<size_t>(i)); }
  friend bool operator==(const VFunction&, const VFunction&) = default;
};

VFunction make_vfunction(Carrier carrier, QuantaleMode mode,
                         std::vector<QuantaleValue> values);
VFunction constant_fn(const Carrier& carrier, const QuantaleValue& v);
/// Indicator of A: top on A, bottom elsewhere.
VFunction theta(const Carrier& carrier, const QuantaleMode& mode, Subset a);
/// Leveled indicator: top on A, eps elsewhere. Errors when eps = top.
VFunction theta_eps(const Carrier& carrier, const QuantaleMode& mode, Subset a,
                    const QuantaleValue& eps);

VFunction vjoin(const VFunction& f, const VFunction& g);
VFunction vmeet(const VFunction& f, const VFunction& g);
VFunction tensor(const VFunction& f, const QuantaleValue& v);
bool le(const VFunction& f, const VFunction& g);  // pointwise
/// {x : f(x) > bottom} as a mask.
Subset support(const VFunction& f);
/// Distinct values of f, sorted numerically ascending.
std::vector<QuantaleValue> range_of(const VFunction& f);
std::string to_string(const VFunction& f);  // "p=1/2 q=0 r=1"

/// A finite family of subsets, kept sorted and duplicate-free.
struct SetFamily {
  Carrier carrier;
  std::vector<Subset> members;

  friend bool operator==(const SetFamily&, const SetFamily&) = default;
};

SetFamily make_family(Carrier carrier, std::vector<Subset> members);

/// The grill F# = {B : B meets every member of F}.
SetFamily grill(const SetFamily& f);
/// Whether every member of `a` meets every member of `b`.
bool mesh(const SetFamily& a, const SetFamily& b);
/// Whether `fine` refines `coarse`: every member of `coarse` contains a
/// member of `fine`.
bool refines(const SetFamily& fine, const SetFamily& coarse);
/// Up-closure within the powerset of the carrier.
SetFamily isotone_hull(const SetFamily& f);

/// A proper principal filter B^, encoded by its nonempty base B.
struct PrincipalFilter {
  Carrier carrier;
  Subset base = 0;
};

/// Errors on an empty base.
PrincipalFilter principal(const Carrier& carrier, Subset base);
/// Canonicalizes a filter base: the generated filter is (meet of members)^.
/// Errors when the intersection is empty (degenerate family).
PrincipalFilter filter_from_base(const SetFamily& base);
/// The filter as an explicit family (all supersets of the base).
SetFamily filter_sets(const PrincipalFilter& f);

/// The ultrafilters finer than A^: exactly the point filters y^ for y in A.
/// Errors on empty A.
std::vector<PrincipalFilter> ultrafilters_over(const Carrier& carrier, Subset a);

/// liminf_F phi = join over members F of (meet of phi over F);
/// limsup_F phi = meet over members F of (join of phi over F).
/// Empty members follow the empty join/meet conventions.
QuantaleValue liminf(const SetFamily& f, const VFunction& phi);
QuantaleValue limsup(const SetFamily& f, const VFunction& phi);
/// Principal shortcuts: liminf over B^ is the meet of phi over B, limsup the
/// join over B.
QuantaleValue liminf(const PrincipalFilter& f, const VFunction& phi);
QuantaleValue limsup(const PrincipalFilter& f, const VFunction& phi);

}  // namespace apxconv
