#include "apxconv/cap.hpp"

#include <algorithm>
#include <bit>

namespace apxconv {

namespace {

size_t row_offset(const Carrier& c, Subset b) {
  return (static_cast<size_t>(b) - 1) * static_cast<size_t>(c.size());
}

}  // namespace

const QuantaleValue& CapSpace::at(Subset b, int x) const {
  if (b == 0) throw std::invalid_argument("rows are indexed by nonempty masks");
  if (b & ~carrier.full()) throw std::invalid_argument("mask outside carrier");
  return table[row_offset(carrier, b) + static_cast<size_t>(x)];
}

CapSpace make_cap_space(Carrier carrier, QuantaleMode mode,
                        std::vector<QuantaleValue> table) {
  const size_t expect = ((size_t{1} << carrier.names.size()) - 1) * carrier.names.size();
  if (table.size() != expect)
    throw std::invalid_argument("table must have one value per (mask, point) pair");
  for (const auto& v : table) require_same_mode(v.mode, mode);
  return CapSpace{std::move(carrier), mode, std::move(table)};
}

CapSpace from_singleton_rows(const Carrier& carrier, const QuantaleMode& mode,
                             const std::vector<QuantaleValue>& m) {
  const int n = carrier.size();
  if (m.size() != static_cast<size_t>(n) * static_cast<size_t>(n))
    throw std::invalid_argument("singleton matrix must be |X| by |X|");
  std::vector<QuantaleValue> table;
  table.reserve(((size_t{1} << n) - 1) * static_cast<size_t>(n));
  for (Subset b = 1; b <= carrier.full(); ++b)
    for (int x = 0; x < n; ++x) {
      QuantaleValue acc = top(mode);
      for (int y = 0; y < n; ++y)
        if (b >> y & 1u) acc = vmeet(acc, m[static_cast<size_t>(x * n + y)]);
      table.push_back(acc);
    }
  return make_cap_space(carrier, mode, std::move(table));
}

ValidationReport validate(const CapSpace& s) {
  ValidationReport rep;
  const int n = s.carrier.size();
  for (int x = 0; x < n; ++x)
    if (!(s.at(1u << x, x) == top(s.mode)))
      rep.violations.push_back("not centered at " + s.carrier.names[static_cast<size_t>(x)] +
                               ": " + to_string(s.at(1u << x, x)));
  for (Subset b = 1; b <= s.carrier.full(); ++b)
    for (int y = 0; y < n; ++y) {
      if (b >> y & 1u) continue;
      const Subset bigger = b | 1u << y;
      for (int x = 0; x < n; ++x)
        if (!le(s.at(bigger, x), s.at(b, x)))
          rep.violations.push_back(
              "not monotone at " + s.carrier.names[static_cast<size_t>(x)] + ": row " +
              s.carrier.subset_to_string(bigger) + " = " + to_string(s.at(bigger, x)) +
              " exceeds row " + s.carrier.subset_to_string(b) + " = " +
              to_string(s.at(b, x)));
    }
  return rep;
}

VFunction lambda(const CapSpace& s, const PrincipalFilter& f) {
  require_same_carrier(s.carrier, f.carrier);
  VFunction out{s.carrier, s.mode, {}};
  for (int x = 0; x < s.carrier.size(); ++x) out.values.push_back(s.at(f.base, x));
  return out;
}

VFunction adh_set(const CapSpace& s, Subset a) {
  VFunction out = constant_fn(s.carrier, bottom(s.mode));
  for (int y = 0; y < s.carrier.size(); ++y)
    if (a >> y & 1u)
      for (int x = 0; x < s.carrier.size(); ++x)
        out.values[static_cast<size_t>(x)] =
            vjoin(out.at(x), s.at(1u << y, x));
  return out;
}

VFunction adh_filter(const CapSpace& s, const PrincipalFilter& f) {
  require_same_carrier(s.carrier, f.carrier);
  VFunction out = constant_fn(s.carrier, bottom(s.mode));
  for (const auto& u : ultrafilters_over(s.carrier, f.base))
    out = vjoin(out, lambda(s, u));
  return out;
}

CapSpace psap_reflection(const CapSpace& s) {
  std::vector<QuantaleValue> table;
  for (Subset b = 1; b <= s.carrier.full(); ++b) {
    VFunction row = constant_fn(s.carrier, top(s.mode));
    for (const auto& u : ultrafilters_over(s.carrier, b)) row = vmeet(row, lambda(s, u));
    table.insert(table.end(), row.values.begin(), row.values.end());
  }
  return make_cap_space(s.carrier, s.mode, std::move(table));
}

CapSpace prap_reflection(const CapSpace& s) {
  std::vector<QuantaleValue> table;
  for (Subset b = 1; b <= s.carrier.full(); ++b) {
    VFunction row = constant_fn(s.carrier, top(s.mode));
    for (Subset a = 1; a <= s.carrier.full(); ++a)
      if (a & b) row = vmeet(row, adh_set(s, a));
    table.insert(table.end(), row.values.begin(), row.values.end());
  }
  return make_cap_space(s.carrier, s.mode, std::move(table));
}

namespace {

std::optional<PointWitness> table_mismatch(const CapSpace& s, const CapSpace& t) {
  for (Subset b = 1; b <= s.carrier.full(); ++b)
    for (int x = 0; x < s.carrier.size(); ++x)
      if (!(s.at(b, x) == t.at(b, x))) return PointWitness{b, x};
  return std::nullopt;
}

}  // namespace

std::optional<PointWitness> psap_violation(const CapSpace& s) {
  return table_mismatch(s, psap_reflection(s));
}

std::optional<PointWitness> prap_violation(const CapSpace& s) {
  return table_mismatch(s, prap_reflection(s));
}

bool is_psap(const CapSpace& s) { return !psap_violation(s); }
bool is_prap(const CapSpace& s) { return !prap_violation(s); }

Subset level_set(const CapSpace& s, Subset a, const QuantaleValue& eps) {
  const VFunction adh = adh_set(s, a);
  Subset out = 0;
  for (int x = 0; x < s.carrier.size(); ++x)
    if (le(eps, adh.at(x))) out |= 1u << x;
  return out;
}

std::optional<ApproachWitness> approach_violation(const CapSpace& s) {
  if (auto w = prap_violation(s)) {
    // Not even pre-approach; report the row that breaks the completion.
    return ApproachWitness{w->b, top(s.mode), w->x, s.at(w->b, w->x),
                           prap_reflection(s).at(w->b, w->x)};
  }
  for (Subset a = 1; a <= s.carrier.full(); ++a) {
    const VFunction adh = adh_set(s, a);
    std::vector<QuantaleValue> thresholds = range_of(adh);
    thresholds.push_back(top(s.mode));
    for (const auto& eps : thresholds) {
      const VFunction adh_lvl = adh_set(s, level_set(s, a, eps));
      for (int x = 0; x < s.carrier.size(); ++x) {
        const QuantaleValue rhs = tensor(adh_lvl.at(x), eps);
        if (!le(rhs, adh.at(x)))
          return ApproachWitness{a, eps, x, adh.at(x), rhs};
      }
    }
  }
  return std::nullopt;
}

bool is_approach(const CapSpace& s) { return !approach_violation(s); }

std::optional<PointWitness> continuity_violation(const CapSpace& s, const VFunction& f) {
  require_same_carrier(s.carrier, f.carrier);
  require_same_mode(s.mode, f.mode);
  for (Subset b = 1; b <= s.carrier.full(); ++b) {
    const QuantaleValue sup = limsup(principal(s.carrier, b), f);
    for (int x = 0; x < s.carrier.size(); ++x)
      if (!le(s.at(b, x), residuate(f.at(x), sup))) return PointWitness{b, x};
  }
  return std::nullopt;
}

bool is_continuous_to_V(const CapSpace& s, const VFunction& f) {
  return !continuity_violation(s, f);
}

std::vector<QuantaleValue> singleton_matrix(const CapSpace& s) {
  const int n = s.carrier.size();
  std::vector<QuantaleValue> m;
  m.reserve(static_cast<size_t>(n) * static_cast<size_t>(n));
  for (int x = 0; x < n; ++x)
    for (int y = 0; y < n; ++y) m.push_back(s.at(1u << y, x));
  return m;
}

namespace {

std::vector<QuantaleValue> matmul(const QuantaleMode& mode,
                                  const std::vector<QuantaleValue>& a,
                                  const std::vector<QuantaleValue>& b, int n) {
  std::vector<QuantaleValue> c(static_cast<size_t>(n) * static_cast<size_t>(n),
                               bottom(mode));
  for (int x = 0; x < n; ++x)
    for (int y = 0; y < n; ++y) {
      QuantaleValue acc = bottom(mode);
      for (int z = 0; z < n; ++z)
        acc = vjoin(acc, tensor(a[static_cast<size_t>(x * n + z)],
                                b[static_cast<size_t>(z * n + y)]));
      c[static_cast<size_t>(x * n + y)] = acc;
    }
  return c;
}

}  // namespace

std::vector<QuantaleValue> kleene_star(const QuantaleMode& mode,
                                       const std::vector<QuantaleValue>& m, int n) {
  // m is reflexive, so its powers increase and stabilize at exponent n-1;
  // squaring past that point is harmless.
  std::vector<QuantaleValue> p = m;
  for (int k = 1; k < n - 1; k *= 2) p = matmul(mode, p, p, n);
  return p;
}

VFunction lower_hull(const CapSpace& s, const VFunction& f) {
  require_same_carrier(s.carrier, f.carrier);
  require_same_mode(s.mode, f.mode);
  const int n = s.carrier.size();
  const std::vector<QuantaleValue> star = kleene_star(s.mode, singleton_matrix(s), n);
  VFunction out{s.carrier, s.mode, {}};
  for (int x = 0; x < n; ++x) {
    QuantaleValue acc = bottom(s.mode);
    for (int y = 0; y < n; ++y)
      acc = vjoin(acc, tensor(star[static_cast<size_t>(x * n + y)], f.at(y)));
    out.values.push_back(acc);
  }
  return out;
}

VFunction closure_fn(const CapSpace& s, Subset a) {
  return lower_hull(s, theta(s, a));
}

VFunction hull_via_development(const CapSpace& s, const VFunction& f) {
  require_same_carrier(s.carrier, f.carrier);
  VFunction out = constant_fn(s.carrier, bottom(s.mode));
  for (const auto& v : range_of(f)) {
    Subset lvl = 0;
    for (int x = 0; x < s.carrier.size(); ++x)
      if (f.at(x) == v) lvl |= 1u << x;
    out = vjoin(out, tensor(closure_fn(s, lvl), v));
  }
  return out;
}

namespace {

FiniteConvergence level_convergence(const CapSpace& s,
                                    const std::function<bool(const QuantaleValue&)>& in_lim) {
  std::vector<Subset> lim(size_t{1} << s.carrier.size(), 0);
  for (Subset b = 1; b <= s.carrier.full(); ++b) {
    Subset l = 0;
    for (int x = 0; x < s.carrier.size(); ++x)
      if (in_lim(s.at(b, x))) l |= 1u << x;
    lim[b] = l;
  }
  return make_convergence(s.carrier, std::move(lim));
}

}  // namespace

FiniteConvergence r_reflect(const CapSpace& s) {
  const QuantaleValue bot = bottom(s.mode);
  return level_convergence(s, [&](const QuantaleValue& v) { return lt(bot, v); });
}

FiniteConvergence c_coreflect(const CapSpace& s) {
  const QuantaleValue t = top(s.mode);
  return level_convergence(s, [&](const QuantaleValue& v) { return v == t; });
}

FiniteConvergence tau_eps(const CapSpace& s, const QuantaleValue& eps) {
  require_same_mode(s.mode, eps.mode);
  if (eps == top(s.mode))
    throw std::invalid_argument("tau_eps requires eps below top");
  return level_convergence(s, [&](const QuantaleValue& v) { return lt(eps, v); });
}

bool is_tau_eps_closed(const CapSpace& s, Subset a, const QuantaleValue& eps) {
  return is_closed(tau_eps(s, eps), a);
}

CapSpace ap_reflection(const CapSpace& s) {
  const int n = s.carrier.size();
  // cl{y}(x) is exactly the Kleene-closed singleton matrix at (x,y).
  std::vector<QuantaleValue> star = kleene_star(s.mode, singleton_matrix(s), n);
  return from_singleton_rows(s.carrier, s.mode, star);
}

std::optional<ContractionWitness> contraction_violation(const PointMap& f,
                                                        const CapSpace& dom,
                                                        const CapSpace& cod) {
  require_same_carrier(f.dom, dom.carrier);
  require_same_carrier(f.cod, cod.carrier);
  require_same_mode(dom.mode, cod.mode);
  for (Subset b = 1; b <= dom.carrier.full(); ++b) {
    const Subset fb = image_subset(f, b);
    for (int x = 0; x < dom.carrier.size(); ++x) {
      const QuantaleValue lhs = cod.at(fb, f.apply(x));
      const QuantaleValue rhs = dom.at(b, x);
      if (!le(rhs, lhs)) return ContractionWitness{b, x, lhs, rhs};
    }
  }
  return std::nullopt;
}

bool contraction_check(const PointMap& f, const CapSpace& dom, const CapSpace& cod) {
  return !contraction_violation(f, dom, cod);
}

ValidationReport preimage_adh_check(const PointMap& f, const CapSpace& dom,
                                    const CapSpace& cod) {
  ValidationReport rep;
  for (Subset a = 0; a <= cod.carrier.full(); ++a) {
    const VFunction lhs = adh_set(dom, preimage_subset(f, a));
    const VFunction rhs = adh_set(cod, a);
    for (int x = 0; x < dom.carrier.size(); ++x)
      if (!le(lhs.at(x), rhs.at(f.apply(x))))
        rep.violations.push_back("adh of preimage of " + cod.carrier.subset_to_string(a) +
                                 " exceeds adh at " +
                                 dom.carrier.names[static_cast<size_t>(x)]);
  }
  // Principal-filter form; the preimage filter of C^ is (f^-(C))^ when the
  // preimage is nonempty and degenerate (adh = bottom) otherwise.
  for (Subset c = 1; c <= cod.carrier.full(); ++c) {
    const Subset pre = preimage_subset(f, c);
    const VFunction lhs = adh_set(dom, pre);  // empty pre gives constant bottom
    const VFunction rhs = adh_filter(cod, principal(cod.carrier, c));
    for (int x = 0; x < dom.carrier.size(); ++x)
      if (!le(lhs.at(x), rhs.at(f.apply(x))))
        rep.violations.push_back("adh of preimage filter of " +
                                 cod.carrier.subset_to_string(c) + "^ exceeds adh at " +
                                 dom.carrier.names[static_cast<size_t>(x)]);
  }
  return rep;
}

ValidationReport preimage_closure_check(const PointMap& f, const CapSpace& dom,
                                        const CapSpace& cod) {
  ValidationReport rep;
  for (Subset a = 0; a <= cod.carrier.full(); ++a) {
    const VFunction lhs = closure_fn(dom, preimage_subset(f, a));
    const VFunction rhs = closure_fn(cod, a);
    for (int x = 0; x < dom.carrier.size(); ++x)
      if (!le(lhs.at(x), rhs.at(f.apply(x))))
        rep.violations.push_back("closure of preimage of " +
                                 cod.carrier.subset_to_string(a) + " exceeds closure at " +
                                 dom.carrier.names[static_cast<size_t>(x)]);
  }
  return rep;
}

CapSpace initial_structure(const Carrier& carrier, const QuantaleMode& mode,
                           const std::vector<std::pair<PointMap, CapSpace>>& maps) {
  for (const auto& [f, target] : maps) {
    require_same_carrier(f.dom, carrier);
    require_same_carrier(f.cod, target.carrier);
    require_same_mode(mode, target.mode);
  }
  std::vector<QuantaleValue> table;
  for (Subset b = 1; b <= carrier.full(); ++b)
    for (int x = 0; x < carrier.size(); ++x) {
      QuantaleValue acc = top(mode);
      for (const auto& [f, target] : maps)
        acc = vmeet(acc, target.at(image_subset(f, b), f.apply(x)));
      table.push_back(acc);
    }
  return make_cap_space(carrier, mode, std::move(table));
}

CapSpace from_metric(const std::vector<Rational>& points, const QuantaleMode& mode) {
  if (!mode.is_lukasiewicz())
    throw std::invalid_argument(
        "unit-rational metric spaces need an explicit decreasing transform");
  return from_metric(points, mode, [&](const Rational& d) {
    if (d.denominator() != 1 || d > Rational(mode.chain))
      throw std::invalid_argument("pairwise distance " + to_string(d) +
                                  " not an integer within the chain");
    return d;
  });
}

CapSpace from_metric(const std::vector<Rational>& points, const QuantaleMode& mode,
                     const std::function<Rational(const Rational&)>& transform) {
  if (points.empty()) throw std::invalid_argument("metric space needs at least one point");
  std::vector<std::string> names;
  for (const auto& p : points) names.push_back(to_string(p));
  const Carrier carrier = make_carrier(std::move(names));
  const int n = carrier.size();
  std::vector<QuantaleValue> m;
  m.reserve(static_cast<size_t>(n) * static_cast<size_t>(n));
  for (int x = 0; x < n; ++x)
    for (int y = 0; y < n; ++y) {
      const Rational d = boost::abs(points[static_cast<size_t>(y)] -
                                    points[static_cast<size_t>(x)]);
      m.push_back(make_value(mode, transform(d)));
    }
  CapSpace s = from_singleton_rows(carrier, mode, m);
  if (auto rep = validate(s); !rep.ok())
    throw std::invalid_argument("transform does not yield a valid space: " +
                                rep.violations.front());
  return s;
}

ValidationReport adh_filter_closure_check(const CapSpace& s) {
  if (!is_approach(s))
    throw std::invalid_argument("adherence/closure agreement is an approach-space check");
  ValidationReport rep;
  std::vector<VFunction> cl;
  cl.push_back(constant_fn(s.carrier, bottom(s.mode)));  // cl of the empty set
  for (Subset a = 1; a <= s.carrier.full(); ++a) cl.push_back(closure_fn(s, a));
  for (Subset b = 1; b <= s.carrier.full(); ++b) {
    if (!(adh_filter(s, principal(s.carrier, b)) == cl[b]))
      rep.violations.push_back("adh " + s.carrier.subset_to_string(b) +
                               "^ differs from cl " + s.carrier.subset_to_string(b));
    VFunction row = constant_fn(s.carrier, top(s.mode));
    for (Subset a = 1; a <= s.carrier.full(); ++a)
      if (a & b) row = vmeet(row, cl[a]);
    if (!(row == lambda(s, principal(s.carrier, b))))
      rep.violations.push_back("lambda " + s.carrier.subset_to_string(b) +
                               "^ differs from the meet of closures over its grill");
  }
  return rep;
}

}  // namespace apxconv
