#pragma once

// Independent brute-force oracles the tests compare the library against.
// Everything here is written from the definitions, deliberately avoiding the
// optimized code paths under test.

#include <vector>

#include "apxconv/cap.hpp"

namespace apxconv::oracles {

/// All functions X -> V by mixed-radix counting (lukasiewicz only).
inline std::vector<VFunction> all_functions(const Carrier& c,
                                            const QuantaleMode& mode) {
  std::vector<VFunction> out;
  std::vector<int> digits(static_cast<size_t>(c.size()), 0);
  while (true) {
    std::vector<QuantaleValue> vals;
    vals.reserve(digits.size());
    for (int d : digits) vals.push_back(make_value(mode, Rational(d)));
    out.push_back(make_vfunction(c, mode, vals));
    size_t i = 0;
    for (; i < digits.size(); ++i) {
      if (digits[i] < mode.chain) {
        ++digits[i];
        break;
      }
      digits[i] = 0;
    }
    if (i == digits.size()) break;
  }
  return out;
}

/// Continuity straight from the definition: for every nonempty B and x,
/// at(B,x) <= f(x) (/) (join of f over B).
inline bool continuous_by_definition(const CapSpace& s, const VFunction& f) {
  for (Subset b = 1; b <= s.carrier.full(); ++b) {
    QuantaleValue sup = bottom(s.mode);
    for (int y = 0; y < s.carrier.size(); ++y)
      if (b >> y & 1u) sup = vjoin(sup, f.at(y));
    for (int x = 0; x < s.carrier.size(); ++x)
      if (!le(s.at(b, x), residuate(f.at(x), sup))) return false;
  }
  return true;
}

/// The least continuous function above f as a literal meet over the whole
/// (pre-enumerated) function space.
inline VFunction brute_hull(const CapSpace& s, const VFunction& f,
                            const std::vector<VFunction>& everything) {
  VFunction acc = constant_fn(s.carrier, top(s.mode));
  for (const auto& g : everything)
    if (le(f, g) && continuous_by_definition(s, g)) acc = vmeet(acc, g);
  return acc;
}

/// Diagonal condition quantified over the whole chain (lukasiewicz only),
/// no threshold reduction.
inline bool diagonal_full_chain(const CapSpace& s) {
  for (Subset a = 0; a <= s.carrier.full(); ++a) {
    const VFunction adh = adh_set(s, a);
    for (const auto& eps : chain_values(s.mode)) {
      Subset lvl = 0;
      for (int x = 0; x < s.carrier.size(); ++x)
        if (le(eps, adh.at(x))) lvl |= 1u << x;
      const VFunction adh_lvl = adh_set(s, lvl);
      for (int x = 0; x < s.carrier.size(); ++x)
        if (!le(tensor(adh_lvl.at(x), eps), adh.at(x))) return false;
    }
  }
  return true;
}

inline bool approach_by_definition(const CapSpace& s) {
  return is_prap(s) && diagonal_full_chain(s);
}

/// M = M (x) M for the singleton matrix, multiplied by hand.
inline bool matrix_idempotent(const CapSpace& s) {
  const auto m = singleton_matrix(s);
  const int n = s.carrier.size();
  for (int x = 0; x < n; ++x)
    for (int y = 0; y < n; ++y) {
      QuantaleValue acc = bottom(s.mode);
      for (int z = 0; z < n; ++z)
        acc = vjoin(acc, tensor(m[static_cast<size_t>(x * n + z)],
                                m[static_cast<size_t>(z * n + y)]));
      if (!(acc == m[static_cast<size_t>(x * n + y)])) return false;
    }
  return true;
}

/// Value-space adherence as the literal join of residuations.
inline QuantaleValue brute_adh_v(std::span<const QuantaleValue> a,
                                 const QuantaleValue& v) {
  QuantaleValue acc = bottom(v.mode);
  for (const auto& x : a) acc = vjoin(acc, residuate(v, x));
  return acc;
}

/// Every valid space on two points named p,q over lukasiewicz(chain): both
/// free singleton entries range over the chain, the pair row over everything
/// monotonicity allows (36 tables at chain 2, out of the 81 raw combinations).
inline std::vector<CapSpace> all_two_point_spaces(int chain) {
  const QuantaleMode mode = QuantaleMode::lukasiewicz(chain);
  const Carrier c = make_carrier({"p", "q"});
  std::vector<CapSpace> out;
  for (int qp = 0; qp <= chain; ++qp)          // at({q},p)
    for (int pq = 0; pq <= chain; ++pq)        // at({p},q)
      for (int bp = qp; bp <= chain; ++bp)     // at({p,q},p), below at({q},p)
        for (int bq = pq; bq <= chain; ++bq) { // at({p,q},q), below at({p},q)
          const auto mv = [&](int v) { return make_value(mode, Rational(v)); };
          out.push_back(make_cap_space(
              c, mode,
              {mv(0), mv(pq), mv(qp), mv(0), mv(bp), mv(bq)}));
        }
  return out;
}

}  // namespace apxconv::oracles
