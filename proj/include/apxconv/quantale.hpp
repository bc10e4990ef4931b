#pragma once

#include <boost/rational.hpp>

#include <span>
#include <stdexcept>
#include <string>
#include <vector>

namespace apxconv {

/// Exact rational scalar. All arithmetic in the library is exact; floating
/// point is banned throughout.
using Rational = boost::rational<long long>;

std::string to_string(const Rational& r);

/// Parses "p/q" or a plain integer "p". Throws std::invalid_argument on
/// malformed input or a zero denominator.
Rational parse_rational(const std::string& text);

/// The two presentations of the value quantale V.
///
/// * unit-rational: exact rationals in [0,1], natural order, tensor is
///   multiplication. top = 1, bottom = 0.
/// * lukasiewicz(n): the integers {0..n} under the REVERSED numeric order,
///   so 0 is top and n is bottom; tensor is truncated addition
///   (a,b) -> min(a+b, n).
enum class QuantaleKind { UnitRational, Lukasiewicz };

struct QuantaleMode {
  QuantaleKind kind = QuantaleKind::UnitRational;
  int chain = 0;  // lukasiewicz only: values live in {0..chain}

  static QuantaleMode unit_rational() { return {QuantaleKind::UnitRational, 0}; }
  static QuantaleMode lukasiewicz(int n) {
    if (n < 1) throw std::invalid_argument("lukasiewicz chain must have n >= 1");
    return {QuantaleKind::Lukasiewicz, n};
  }
  bool is_lukasiewicz() const { return kind == QuantaleKind::Lukasiewicz; }
  friend bool operator==(const QuantaleMode&, const QuantaleMode&) = default;
};

std::string to_string(const QuantaleMode& m);

/// A value of V. Carries its mode so every operation can reject mixed-mode
/// arguments. Printing is always numeric; for lukasiewicz keep in mind the
/// order is reversed (a smaller number is a larger value of V).
struct QuantaleValue {
  QuantaleMode mode;
  Rational v;

  friend bool operator==(const QuantaleValue&, const QuantaleValue&) = default;
};

/// Range-checks and returns a value: [0,1] for unit-rational, an integer in
/// {0..n} for lukasiewicz(n). Throws std::invalid_argument otherwise.
QuantaleValue make_value(const QuantaleMode& mode, const Rational& v);

QuantaleValue top(const QuantaleMode& mode);
QuantaleValue bottom(const QuantaleMode& mode);

/// Lattice order of V (for lukasiewicz this is the reversed numeric order).
bool le(const QuantaleValue& a, const QuantaleValue& b);
bool lt(const QuantaleValue& a, const QuantaleValue& b);

QuantaleValue vjoin(const QuantaleValue& a, const QuantaleValue& b);
QuantaleValue vmeet(const QuantaleValue& a, const QuantaleValue& b);

/// Join/meet of a finite set of values. The empty join is bottom and the
/// empty meet is top.
QuantaleValue join(const QuantaleMode& mode, std::span<const QuantaleValue> vals);
QuantaleValue meet(const QuantaleMode& mode, std::span<const QuantaleValue> vals);

/// The quantale tensor. Commutative, associative, unit top, distributes over
/// joins (including the empty one: v (x) bottom = bottom).
QuantaleValue tensor(const QuantaleValue& a, const QuantaleValue& b);

/// Residuation y (/) v, the right adjoint of tensoring by v:
///   v (x) x <= y  iff  x <= y (/) v.
/// unit-rational: min(y/v, 1), with y (/) 0 = 1. lukasiewicz: max(y-v, 0)
/// numerically.
QuantaleValue residuate(const QuantaleValue& y, const QuantaleValue& v);

std::string to_string(const QuantaleValue& a);

/// Parses a value literal for the given mode: "p/q" or an integer for
/// unit-rational; a decimal integer or the alias "inf" (meaning n, the
/// bottom) for lukasiewicz.
QuantaleValue parse_value(const QuantaleMode& mode, const std::string& text);

/// Throws std::invalid_argument when the two modes differ.
void require_same_mode(const QuantaleMode& a, const QuantaleMode& b);

/// All chain values top..bottom (lukasiewicz only; used by exhaustive loops).
std::vector<QuantaleValue> chain_values(const QuantaleMode& mode);

}  // namespace apxconv
