#include "apxconv/quantale.hpp"

#include <algorithm>
#include <sstream>

namespace apxconv {

std::string to_string(const Rational& r) {
  std::ostringstream os;
  os << r.numerator();
  if (r.denominator() != 1) os << '/' << r.denominator();
  return os.str();
}

Rational parse_rational(const std::string& text) {
  const auto slash = text.find('/');
  try {
    const long long num = std::stoll(text.substr(0, slash));
    long long den = 1;
    if (slash != std::string::npos) {
      size_t used = 0;
      const std::string tail = text.substr(slash + 1);
      den = std::stoll(tail, &used);
      if (used != tail.size()) throw std::invalid_argument(text);
      if (den == 0) throw std::invalid_argument("zero denominator: " + text);
    }
    return Rational(num, den);
  } catch (const std::logic_error&) {
    throw std::invalid_argument("not a rational: '" + text + "'");
  }
}

std::string to_string(const QuantaleMode& m) {
  if (m.is_lukasiewicz()) return "lukasiewicz " + std::to_string(m.chain);
  return "unit-rational";
}

QuantaleValue make_value(const QuantaleMode& mode, const Rational& v) {
  if (mode.is_lukasiewicz()) {
    if (v.denominator() != 1 || v < Rational(0) || v > Rational(mode.chain))
      throw std::invalid_argument("lukasiewicz value out of {0.." +
                                  std::to_string(mode.chain) + "}: " + to_string(v));
  } else {
    if (v < Rational(0) || v > Rational(1))
      throw std::invalid_argument("unit-rational value out of [0,1]: " + to_string(v));
  }
  return {mode, v};
}

QuantaleValue top(const QuantaleMode& mode) {
  return {mode, mode.is_lukasiewicz() ? Rational(0) : Rational(1)};
}

QuantaleValue bottom(const QuantaleMode& mode) {
  return {mode, mode.is_lukasiewicz() ? Rational(mode.chain) : Rational(0)};
}

void require_same_mode(const QuantaleMode& a, const QuantaleMode& b) {
  if (!(a == b))
    throw std::invalid_argument("mode mismatch: " + to_string(a) + " vs " + to_string(b));
}

bool le(const QuantaleValue& a, const QuantaleValue& b) {
  require_same_mode(a.mode, b.mode);
  return a.mode.is_lukasiewicz() ? a.v >= b.v : a.v <= b.v;
}

bool lt(const QuantaleValue& a, const QuantaleValue& b) { return le(a, b) && !(a == b); }

QuantaleValue vjoin(const QuantaleValue& a, const QuantaleValue& b) {
  return le(a, b) ? b : a;
}

QuantaleValue vmeet(const QuantaleValue& a, const QuantaleValue& b) {
  return le(a, b) ? a : b;
}

QuantaleValue join(const QuantaleMode& mode, std::span<const QuantaleValue> vals) {
  QuantaleValue acc = bottom(mode);
  for (const auto& v : vals) acc = vjoin(acc, v);
  return acc;
}

QuantaleValue meet(const QuantaleMode& mode, std::span<const QuantaleValue> vals) {
  QuantaleValue acc = top(mode);
  for (const auto& v : vals) acc = vmeet(acc, v);
  return acc;
}

QuantaleValue tensor(const QuantaleValue& a, const QuantaleValue& b) {
  require_same_mode(a.mode, b.mode);
  if (a.mode.is_lukasiewicz())
    return {a.mode, std::min(a.v + b.v, Rational(a.mode.chain))};
  return {a.mode, a.v * b.v};
}

QuantaleValue residuate(const QuantaleValue& y, const QuantaleValue& v) {
  require_same_mode(y.mode, v.mode);
  if (y.mode.is_lukasiewicz()) return {y.mode, std::max(y.v - v.v, Rational(0))};
  if (v.v.numerator() == 0) return top(y.mode);
  return {y.mode, std::min(y.v / v.v, Rational(1))};
}

std::string to_string(const QuantaleValue& a) { return to_string(a.v); }

QuantaleValue parse_value(const QuantaleMode& mode, const std::string& text) {
  if (mode.is_lukasiewicz() && text == "inf") return bottom(mode);
  return make_value(mode, parse_rational(text));
}

std::vector<QuantaleValue> chain_values(const QuantaleMode& mode) {
  if (!mode.is_lukasiewicz())
    throw std::invalid_argument("chain enumeration requires lukasiewicz mode");
  std::vector<QuantaleValue> out;
  for (int i = 0; i <= mode.chain; ++i) out.push_back({mode, Rational(i)});
  return out;
}

}  // namespace apxconv
