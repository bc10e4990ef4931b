#include "apxconv/checks.hpp"

#include <algorithm>
#include <optional>

#include "apxconv/gen.hpp"
#include "apxconv/vspace.hpp"
#include "json.hpp"

namespace apxconv {

namespace {

using nlohmann::json;

std::string name_of(const Carrier& c, int x) {
  return c.names[static_cast<size_t>(x)];
}

json value_json(const QuantaleValue& v) { return to_string(v); }

void add_mode_note(Report& rep, const QuantaleMode& mode) {
  if (mode.is_lukasiewicz())
    rep.note("lukasiewicz values print numerically; the order is reversed (0 is top, " +
             std::to_string(mode.chain) + " is bottom)");
}

/// Every function X -> V when that set is small, otherwise empty.
std::vector<VFunction> all_functions(const Carrier& c, const QuantaleMode& mode,
                                     std::size_t cap) {
  if (!mode.is_lukasiewicz()) return {};
  std::size_t count = 1;
  for (int i = 0; i < c.size(); ++i) {
    count *= static_cast<std::size_t>(mode.chain) + 1;
    if (count > cap) return {};
  }
  std::vector<VFunction> out;
  out.reserve(count);
  std::vector<int> digits(static_cast<size_t>(c.size()), 0);
  while (true) {
    std::vector<QuantaleValue> vv;
    vv.reserve(digits.size());
    for (int d : digits) vv.push_back(make_value(mode, Rational(d)));
    out.push_back(make_vfunction(c, mode, vv));
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

/// Indicators of every subset plus sampled functions (or the full function
/// set when it is small enough to enumerate).
std::vector<VFunction> test_functions(const CapSpace& s, const ChecksConfig& cfg) {
  std::vector<VFunction> fns =
      all_functions(s.carrier, s.mode, cfg.exhaustive_cap);
  if (!fns.empty()) return fns;
  for (Subset a = 0; a <= s.carrier.full(); ++a)
    fns.push_back(theta(s.carrier, s.mode, a));
  Rng rng(cfg.seed);
  for (int i = 0; i < cfg.samples; ++i)
    fns.push_back(gen_vfunction(rng, s.carrier, s.mode));
  return fns;
}

/// Value sample: the whole chain for lukasiewicz, a rational grid otherwise.
std::vector<QuantaleValue> test_values(const QuantaleMode& mode) {
  if (mode.is_lukasiewicz()) return chain_values(mode);
  std::vector<QuantaleValue> vals;
  for (int i = 0; i <= 8; ++i) vals.push_back(make_value(mode, Rational(i, 8)));
  vals.push_back(make_value(mode, Rational(1, 3)));
  vals.push_back(make_value(mode, Rational(2, 3)));
  vals.push_back(make_value(mode, Rational(3, 5)));
  return vals;
}

/// Epsilon candidates strictly below top: the whole chain for lukasiewicz;
/// otherwise bottom plus every achieved singleton-row value below top.
std::vector<QuantaleValue> eps_values(const CapSpace& s) {
  std::vector<QuantaleValue> out;
  if (s.mode.is_lukasiewicz()) {
    for (const auto& v : chain_values(s.mode))
      if (!(v == top(s.mode))) out.push_back(v);
    return out;
  }
  out.push_back(bottom(s.mode));
  const auto m = singleton_matrix(s);
  for (const auto& v : m)
    if (!(v == top(s.mode)) && !(v == bottom(s.mode)) &&
        std::find(out.begin(), out.end(), v) == out.end())
      out.push_back(v);
  return out;
}

/// The diagonal condition at one set, with eps over the achieved adherence
/// values plus top (the reduction the library uses globally).
bool diagonal_holds_at(const CapSpace& s, Subset a) {
  const VFunction adh = adh_set(s, a);
  std::vector<QuantaleValue> thresholds = range_of(adh);
  thresholds.push_back(top(s.mode));
  for (const auto& eps : thresholds) {
    const VFunction lvl = adh_set(s, level_set(s, a, eps));
    for (int x = 0; x < s.carrier.size(); ++x)
      if (!le(tensor(lvl.at(x), eps), adh.at(x))) return false;
  }
  return true;
}

// ---------------------------------------------------------------- laws ----

void quantale_laws(Report& rep, const QuantaleMode& mode) {
  const auto vals = test_values(mode);

  std::optional<json> w;
  for (const auto& a : vals)
    for (const auto& b : vals)
      for (const auto& c : vals)
        if (!w && le(tensor(c, a), b) != le(c, residuate(b, a)))
          w = json{{"a", value_json(a)}, {"b", value_json(b)}, {"c", value_json(c)}};
  rep.add("law.quantale.adjunction", !w, w ? w->dump() : "-");

  w.reset();
  for (const auto& y : vals)
    for (const auto& v : vals)
      if (!w && !(le(tensor(residuate(y, v), v), y) &&
                  le(y, residuate(tensor(y, v), v))))
        w = json{{"v", value_json(v)}, {"y", value_json(y)}};
  rep.add("law.quantale.double-residuation", !w, w ? w->dump() : "-");

  w.reset();
  for (const auto& a : vals)
    for (const auto& b : vals)
      for (const auto& c : vals)
        if (!w && !le(tensor(residuate(a, b), residuate(b, c)), residuate(a, c)))
          w = json{{"a", value_json(a)}, {"b", value_json(b)}, {"c", value_json(c)}};
  rep.add("law.quantale.triangle", !w, w ? w->dump() : "-");

  // Joins: residuation by a join is the meet of residuations; tensor
  // distributes over joins (empty joins included).
  w.reset();
  const size_t k = vals.size();
  for (size_t i = 0; i + 2 < k && !w; ++i) {
    const std::vector<QuantaleValue> fam = {vals[i], vals[i + 1], vals[i + 2]};
    const QuantaleValue sup = join(mode, fam);
    for (const auto& y : vals) {
      QuantaleValue m = top(mode);
      for (const auto& a : fam) m = vmeet(m, residuate(y, a));
      if (!(residuate(y, sup) == m)) {
        w = json{{"family-first", value_json(fam[0])}, {"y", value_json(y)}};
        break;
      }
      QuantaleValue j = bottom(mode);
      for (const auto& a : fam) j = vjoin(j, tensor(a, y));
      if (!(tensor(sup, y) == j)) {
        w = json{{"family-first", value_json(fam[0])}, {"y", value_json(y)}};
        break;
      }
    }
  }
  const std::vector<QuantaleValue> empty;
  bool empty_ok = join(mode, empty) == bottom(mode) &&
                  meet(mode, empty) == top(mode) &&
                  tensor(bottom(mode), top(mode)) == bottom(mode);
  if (!empty_ok && !w) w = json{{"case", "empty family conventions"}};
  rep.add("law.quantale.join-laws", !w, w ? w->dump() : "-");
}

void limit_laws(Report& rep, const CapSpace& s, const std::vector<VFunction>& fns) {
  const Carrier& c = s.carrier;

  std::optional<json> w;
  for (Subset b = 1; b <= c.full() && !w; ++b) {
    const PrincipalFilter pf = principal(c, b);
    const SetFamily fam = filter_sets(pf);
    const SetFamily gr = grill(fam);
    for (const auto& phi : fns) {
      if (!(limsup(pf, phi) == liminf(gr, phi)) ||
          !(liminf(pf, phi) == limsup(gr, phi))) {
        w = json{{"B", c.subset_to_string(b)}, {"phi", to_string(phi)}};
        break;
      }
    }
  }
  rep.add("law.limits.grill-duality", !w, w ? w->dump() : "-");

  w.reset();
  const auto vals = test_values(s.mode);
  for (Subset b = 1; b <= c.full() && !w; ++b) {
    const PrincipalFilter pf = principal(c, b);
    for (const auto& phi : fns) {
      for (const auto& v : vals)
        if (!(limsup(pf, tensor(phi, v)) == tensor(limsup(pf, phi), v)) ||
            !(liminf(pf, tensor(phi, v)) == tensor(liminf(pf, phi), v))) {
          w = json{{"B", c.subset_to_string(b)}, {"phi", to_string(phi)},
                   {"v", value_json(v)}};
          break;
        }
      if (w) break;
    }
  }
  rep.add("law.limits.tensor-shift", !w, w ? w->dump() : "-");

  w.reset();
  for (Subset b = 1; b <= c.full() && !w; ++b) {
    const PrincipalFilter pf = principal(c, b);
    for (Subset a = 0; a <= c.full(); ++a) {
      const VFunction ind = theta(c, s.mode, a);
      const bool meets = (a & b) != 0;
      const bool contains = (b & ~a) == 0;
      if ((limsup(pf, ind) == top(s.mode)) != meets ||
          (liminf(pf, ind) == top(s.mode)) != contains) {
        w = json{{"A", c.subset_to_string(a)}, {"B", c.subset_to_string(b)}};
        break;
      }
    }
  }
  rep.add("law.limits.indicator", !w, w ? w->dump() : "-");
}

void hull_laws(Report& rep, const CapSpace& s, const std::vector<VFunction>& fns) {
  std::optional<json> w_exp, w_idem, w_fix, w_join, w_shift;
  const auto vals = test_values(s.mode);
  for (size_t i = 0; i < fns.size(); ++i) {
    const VFunction& f = fns[i];
    const VFunction cf = lower_hull(s, f);
    if (!w_exp && !le(f, cf)) w_exp = json{{"f", to_string(f)}};
    if (!w_idem && !(lower_hull(s, cf) == cf)) w_idem = json{{"f", to_string(f)}};
    if (!w_fix && (is_continuous_to_V(s, f) != (cf == f) ||
                   !is_continuous_to_V(s, cf)))
      w_fix = json{{"f", to_string(f)}};
    if (!w_join) {
      const VFunction& g = fns[(i * 7 + 3) % fns.size()];
      if (!(lower_hull(s, vjoin(f, g)) == vjoin(cf, lower_hull(s, g))))
        w_join = json{{"f", to_string(f)}, {"g", to_string(g)}};
    }
    if (!w_shift) {
      const QuantaleValue& v = vals[i % vals.size()];
      if (!(lower_hull(s, tensor(f, v)) == tensor(cf, v)))
        w_shift = json{{"f", to_string(f)}, {"v", value_json(v)}};
    }
  }
  rep.add("law.hull.expansive", !w_exp, w_exp ? w_exp->dump() : "-");
  rep.add("law.hull.idempotent", !w_idem, w_idem ? w_idem->dump() : "-");
  rep.add("law.hull.fixpoints", !w_fix, w_fix ? w_fix->dump() : "-");
  rep.add("law.hull.join", !w_join, w_join ? w_join->dump() : "-");
  rep.add("law.hull.tensor-shift", !w_shift, w_shift ? w_shift->dump() : "-");
}

void closure_laws(Report& rep, const CapSpace& s) {
  const Carrier& c = s.carrier;
  std::vector<VFunction> cl;
  cl.reserve(static_cast<size_t>(c.full()) + 1);
  for (Subset a = 0; a <= c.full(); ++a) cl.push_back(closure_fn(s, a));

  rep.add("law.closure.empty", cl[0] == constant_fn(c, bottom(s.mode)), "-");

  std::optional<json> w;
  for (Subset a = 0; a <= c.full() && !w; ++a)
    for (Subset b = a;; b = (b - 1) & a) {  // all subsets b of a
      if (!le(cl[b], cl[a]))
        w = json{{"A", c.subset_to_string(a)}, {"B", c.subset_to_string(b)}};
      if (b == 0 || w) break;
    }
  rep.add("law.closure.monotone", !w, w ? w->dump() : "-");

  w.reset();
  for (Subset a = 0; a <= c.full() && !w; ++a)
    for (Subset b = 0; b <= c.full(); ++b)
      if (!(cl[a | b] == vjoin(cl[a], cl[b]))) {
        w = json{{"A", c.subset_to_string(a)}, {"B", c.subset_to_string(b)}};
        break;
      }
  rep.add("law.closure.union", !w, w ? w->dump() : "-");

  w.reset();
  for (Subset a = 0; a <= c.full() && !w; ++a) {
    Subset atop = 0;
    for (int x = 0; x < c.size(); ++x)
      if (cl[a].at(x) == top(s.mode)) atop |= 1u << x;
    if (!(cl[atop] == cl[a])) w = json{{"A", c.subset_to_string(a)}};
  }
  rep.add("law.closure.idempotent", !w, w ? w->dump() : "-");
}

void reflection_laws(Report& rep, const CapSpace& s, const CapSpace& s0,
                     const CapSpace& spsap, const CapSpace& t) {
  const Carrier& c = s.carrier;

  std::optional<json> w;
  for (Subset b = 1; b <= c.full() && !w; ++b)
    for (int x = 0; x < c.size(); ++x)
      if (!le(s.at(b, x), s0.at(b, x)) || !le(s0.at(b, x), t.at(b, x))) {
        w = json{{"B", c.subset_to_string(b)}, {"x", name_of(c, x)}};
        break;
      }
  rep.add("law.reflect.tower", !w, w ? w->dump() : "-");

  const bool idem = prap_reflection(s0).table == s0.table &&
                    psap_reflection(spsap).table == spsap.table &&
                    ap_reflection(t).table == t.table;
  rep.add("law.reflect.idempotent", idem, "-");

  const bool lands = is_prap(s0) && is_psap(spsap) && is_approach(t);
  rep.add("law.reflect.lands", lands, "-");

  w.reset();
  for (Subset a = 0; a <= c.full() && !w; ++a)
    if (!(adh_set(s, a) == adh_set(s0, a)) || !(adh_set(s, a) == adh_set(spsap, a)))
      w = json{{"A", c.subset_to_string(a)}};
  rep.add("law.reflect.same-adh", !w, w ? w->dump() : "-");

  const bool coincide = spsap.table == s0.table && is_psap(s) == is_prap(s);
  rep.add("law.reflect.psap-eq-prap", coincide, "-");
}

void continuity_laws(Report& rep, const CapSpace& s,
                     const std::vector<VFunction>& fns) {
  const Carrier& c = s.carrier;
  std::optional<json> w;
  for (const auto& f : fns) {
    bool singleton_ok = true;
    for (int x = 0; x < c.size() && singleton_ok; ++x)
      for (int y = 0; y < c.size(); ++y)
        if (!le(tensor(s.at(1u << y, x), f.at(y)), f.at(x))) {
          singleton_ok = false;
          break;
        }
    if (is_continuous_to_V(s, f) != singleton_ok) {
      w = json{{"f", to_string(f)}};
      break;
    }
  }
  rep.add("law.continuity.singleton-reduction", !w, w ? w->dump() : "-");
}

// ------------------------------------------------------------ theorems ----

void matrix_theorem(Report& rep, const CapSpace& s) {
  const auto m = singleton_matrix(s);
  const bool transitive = kleene_star(s.mode, m, s.carrier.size()) == m;
  const bool claim = is_prap(s) && transitive;
  rep.add("thm.approach.matrix", is_approach(s) == claim,
          json{{"is-approach", is_approach(s)},
               {"prap-and-transitive", claim}}.dump());
}

void diagonal_theorems(Report& rep, const CapSpace& s) {
  const Carrier& c = s.carrier;

  if (s.mode.is_lukasiewicz()) {
    // Full-chain quantification agrees with the achieved-threshold reduction.
    bool full = is_prap(s);
    std::optional<json> w;
    for (Subset a = 0; a <= c.full() && full; ++a) {
      const VFunction adh = adh_set(s, a);
      for (const auto& eps : chain_values(s.mode)) {
        const VFunction lvl = adh_set(s, level_set(s, a, eps));
        for (int x = 0; x < c.size(); ++x)
          if (!le(tensor(lvl.at(x), eps), adh.at(x))) {
            full = false;
            w = json{{"A", c.subset_to_string(a)}, {"eps", value_json(eps)},
                     {"x", name_of(c, x)}};
            break;
          }
        if (!full) break;
      }
    }
    rep.add("thm.approach.diagonal-thresholds", full == is_approach(s),
            w ? w->dump() : "-");
  } else {
    rep.note("skipped thm.approach.diagonal-thresholds (full chain needs a "
             "finite value set)");
  }

  std::optional<json> w;
  for (Subset a = 0; a <= c.full() && !w; ++a)
    if (is_continuous_to_V(s, adh_set(s, a)) != diagonal_holds_at(s, a))
      w = json{{"A", c.subset_to_string(a)}};
  rep.add("thm.approach.adh-continuity", !w, w ? w->dump() : "-");
}

void indicator_theorems(Report& rep, const CapSpace& s) {
  const Carrier& c = s.carrier;
  const FiniteConvergence r = r_reflect(s);
  const auto eset = eps_values(s);

  std::optional<json> w_ind, w_hull, w_tau;
  for (Subset a = 0; a <= c.full(); ++a) {
    const bool cont = is_continuous_to_V(s, theta(s, a));
    const bool closed = is_closed(r, a);
    bool leveled = true;
    for (const auto& eps : eset)
      if (!is_continuous_to_V(s, theta_eps(s, a, eps))) {
        leveled = false;
        break;
      }
    if (!w_ind && (cont != closed || cont != leveled))
      w_ind = json{{"A", c.subset_to_string(a)},
                   {"closed", closed},
                   {"indicator-continuous", cont},
                   {"leveled-continuous", leveled}};
    if (!w_hull && !(closure_fn(s, a) == lower_hull(s, adh_set(s, a))))
      w_hull = json{{"A", c.subset_to_string(a)}};
    if (!w_tau)
      for (const auto& eps : eset)
        if (is_tau_eps_closed(s, a, eps) !=
            is_continuous_to_V(s, theta_eps(s, a, eps))) {
          w_tau = json{{"A", c.subset_to_string(a)}, {"eps", value_json(eps)}};
          break;
        }
  }
  rep.add("thm.closure.indicator", !w_ind, w_ind ? w_ind->dump() : "-");
  rep.add("thm.closure.hull-of-adh", !w_hull, w_hull ? w_hull->dump() : "-");
  rep.add("thm.closure.tau-eps", !w_tau, w_tau ? w_tau->dump() : "-");
}

void development_theorem(Report& rep, const CapSpace& s,
                         const std::vector<VFunction>& fns) {
  std::optional<json> w;
  for (const auto& f : fns)
    if (!(hull_via_development(s, f) == lower_hull(s, f))) {
      w = json{{"f", to_string(f)}};
      break;
    }
  rep.add("thm.hull.development", !w, w ? w->dump() : "-");
}

void minimal_hull_theorem(Report& rep, const CapSpace& s,
                          const ChecksConfig& cfg) {
  const auto all = all_functions(s.carrier, s.mode, cfg.exhaustive_cap);
  if (all.empty()) {
    rep.note("skipped thm.hull.minimal (function space too large to enumerate)");
    return;
  }
  std::vector<const VFunction*> continuous;
  for (const auto& g : all)
    if (is_continuous_to_V(s, g)) continuous.push_back(&g);
  std::optional<json> w;
  for (const auto& f : all) {
    VFunction best = constant_fn(s.carrier, top(s.mode));
    for (const VFunction* g : continuous)
      if (le(f, *g)) best = vmeet(best, *g);
    if (!(best == lower_hull(s, f))) {
      w = json{{"f", to_string(f)}};
      break;
    }
  }
  rep.add("thm.hull.minimal", !w, w ? w->dump() : "-");
}

void reflection_theorems(Report& rep, const CapSpace& s, const CapSpace& t,
                         const std::vector<VFunction>& fns) {
  std::optional<json> w;
  for (const auto& f : fns)
    if (is_continuous_to_V(s, f) != is_continuous_to_V(t, f)) {
      w = json{{"f", to_string(f)}};
      break;
    }
  rep.add("thm.reflect.same-continuity", !w, w ? w->dump() : "-");

  const CapSpace& target = is_approach(s) ? s : t;
  const ValidationReport agree = adh_filter_closure_check(target);
  if (!is_approach(s))
    rep.note("thm.reflect.closure-agreement ran on the approach reflection "
             "(the space itself is not approach)");
  rep.add("thm.reflect.closure-agreement", agree.ok(),
          agree.ok() ? "-" : json{{"violation", agree.violations.front()}}.dump());
}

void density_theorem(Report& rep, const CapSpace& s) {
  if (!s.mode.is_lukasiewicz()) {
    rep.note("skipped thm.initial.density (needs the finite chain target)");
    return;
  }
  const CapSpace t = is_approach(s) ? s : ap_reflection(s);
  const CapSpace target = v_as_cap(s.mode);
  const Carrier chain_pts = target.carrier;
  std::vector<std::pair<PointMap, CapSpace>> maps;
  for (Subset a = 1; a <= s.carrier.full(); ++a) {
    const VFunction f = closure_fn(t, a);
    std::vector<int> img;
    img.reserve(static_cast<size_t>(s.carrier.size()));
    for (int x = 0; x < s.carrier.size(); ++x)
      img.push_back(
          static_cast<int>(boost::rational_cast<long long>(f.at(x).v)));
    maps.emplace_back(make_point_map(s.carrier, chain_pts, img), target);
  }
  const CapSpace initial = initial_structure(s.carrier, s.mode, maps);
  rep.add("thm.initial.density", initial.table == t.table,
          initial.table == t.table ? "-" : "initial structure differs");
}

void frame_theorems(Report& rep, const CapSpace& s) {
  if (!s.mode.is_lukasiewicz()) {
    rep.note("skipped thm.frame.* (frames need the finite chain)");
    return;
  }
  std::uint32_t size = 0;
  try {
    size = lattice_size(s.carrier, s.mode);
  } catch (const std::invalid_argument&) {
    rep.note("skipped thm.frame.* (lattice over the configured cap)");
    return;
  }
  if (size > 4096) {
    rep.note("skipped thm.frame.* (lattice over the check budget)");
    return;
  }

  const ConvFrame f = lim_from_cap(s);
  rep.add("thm.frame.valid", validate(f).ok() && is_vcap(f), "-");

  const CapSpace back = cap_from_lim(f);
  rep.add("thm.frame.round-trip", back.table == s.table, "-");

  std::optional<json> w;
  for (Subset a = 0; a <= s.carrier.full() && !w; ++a)
    if (!(frame_adh(f, theta(s, a)) == adh_set(s, a)))
      w = json{{"A", s.carrier.subset_to_string(a)}};
  rep.add("thm.frame.adh-agree", !w, w ? w->dump() : "-");

  rep.add("thm.frame.vprap", is_vprap(f) == is_prap(s),
          json{{"frame", is_vprap(f)}, {"space", is_prap(s)}}.dump());
  rep.add("thm.frame.vap", is_vap(f) == is_approach(s),
          json{{"frame", is_vap(f)}, {"space", is_approach(s)}}.dump());

  const FiniteConvergence r = r_reflect(s);
  std::vector<std::uint32_t> expect;
  for (Subset a = 0; a <= s.carrier.full(); ++a)
    if (is_closed(r, a)) expect.push_back(rank_of(theta(s, a)));
  std::sort(expect.begin(), expect.end());
  rep.add("thm.frame.closed-elements", closed_elements(f) == expect, "-");
}

void point_space_theorem(Report& rep, const CapSpace& s) {
  if (!s.mode.is_lukasiewicz()) {
    rep.note("skipped thm.point-space (needs the finite chain)");
    return;
  }
  if (s.carrier.size() * (s.mode.chain + 1) > kMaxPoints) {
    rep.note("skipped thm.point-space (product carrier over the size guard)");
    return;
  }
  const FiniteConvergence ps = point_space(s);
  const ValidationReport v = validate(ps);
  rep.add("thm.point-space.valid", v.ok(),
          v.ok() ? "-" : json{{"violation", v.violations.front()}}.dump());
}

void vspace_theorems(Report& rep, const QuantaleMode& mode) {
  // Closed form of the value-space adherence against the defining join.
  const auto vals = test_values(mode);
  std::optional<json> w;
  const size_t k = vals.size();
  for (size_t i = 0; i < k && !w; ++i)
    for (size_t j = i; j < k && !w; ++j)
      for (size_t l = j; l < k && !w; ++l) {
        const std::vector<QuantaleValue> fam = {vals[i], vals[j], vals[l]};
        for (const auto& v : vals) {
          QuantaleValue brute = bottom(mode);
          for (const auto& a : fam) brute = vjoin(brute, residuate(v, a));
          if (!(adh_v(fam, v) == brute)) {
            w = json{{"family-first", value_json(fam[0])}, {"v", value_json(v)}};
            break;
          }
        }
      }
  rep.add("thm.vspace.adh-closed-form", !w, w ? w->dump() : "-");

  if (mode.is_lukasiewicz() && mode.chain <= 8) {
    const CapSpace v = v_as_cap(mode);
    rep.add("thm.vspace.approach", is_approach(v), "-");
  } else {
    rep.note("skipped thm.vspace.approach (no finite carrier at this mode)");
  }
}

}  // namespace

Report run_validate_checks(const NamedSpace& ns) {
  Report rep;
  add_mode_note(rep, ns.space.mode);
  const ValidationReport v = validate(ns.space);
  std::vector<std::string> centered, monotone;
  for (const auto& viol : v.violations)
    (viol.find("centered") != std::string::npos ? centered : monotone)
        .push_back(viol);
  rep.add("axiom.centered", centered.empty(),
          centered.empty() ? "-" : json{{"violation", centered.front()},
                                        {"count", centered.size()}}.dump());
  rep.add("axiom.monotone", monotone.empty(),
          monotone.empty() ? "-" : json{{"violation", monotone.front()},
                                        {"count", monotone.size()}}.dump());
  return rep;
}

Report run_law_checks(const NamedSpace& ns, const ChecksConfig& cfg) {
  Report rep;
  add_mode_note(rep, ns.space.mode);
  const CapSpace& s = ns.space;
  const auto fns = test_functions(s, cfg);
  quantale_laws(rep, s.mode);
  limit_laws(rep, s, fns);
  hull_laws(rep, s, fns);
  closure_laws(rep, s);
  reflection_laws(rep, s, prap_reflection(s), psap_reflection(s), ap_reflection(s));
  continuity_laws(rep, s, fns);
  return rep;
}

Report run_theorem_checks(const NamedSpace& ns, const ChecksConfig& cfg) {
  Report rep;
  add_mode_note(rep, ns.space.mode);
  const CapSpace& s = ns.space;
  const auto fns = test_functions(s, cfg);
  matrix_theorem(rep, s);
  diagonal_theorems(rep, s);
  indicator_theorems(rep, s);
  development_theorem(rep, s, fns);
  minimal_hull_theorem(rep, s, cfg);
  reflection_theorems(rep, s, ap_reflection(s), fns);
  density_theorem(rep, s);
  frame_theorems(rep, s);
  point_space_theorem(rep, s);
  vspace_theorems(rep, s.mode);
  return rep;
}

Report run_all_checks(const NamedSpace& ns, const ChecksConfig& cfg) {
  Report rep = run_validate_checks(ns);
  if (!rep.all_pass()) {
    rep.note("axioms failed; law and theorem checks skipped");
    return rep;
  }
  Report laws = run_law_checks(ns, cfg);
  laws.notes.clear();  // the mode note is already present
  Report thms = run_theorem_checks(ns, cfg);
  rep.merge(std::move(laws));
  rep.merge(std::move(thms));
  return rep;
}

Report run_contraction_checks(const PointMap& f, const NamedSpace& from,
                              const NamedSpace& to) {
  Report rep;
  add_mode_note(rep, from.space.mode);
  const CapSpace& dom = from.space;
  const CapSpace& cod = to.space;

  const auto w = contraction_violation(f, dom, cod);
  const bool morphism = !w.has_value();
  rep.add("contraction.morphism", morphism,
          morphism ? "-"
                   : json{{"B", dom.carrier.subset_to_string(w->b)},
                          {"x", name_of(dom.carrier, w->x)},
                          {"image-limit", value_json(w->lhs)},
                          {"source-limit", value_json(w->rhs)}}.dump());

  const ValidationReport adh_ineq = preimage_adh_check(f, dom, cod);
  const ValidationReport cl_ineq = preimage_closure_check(f, dom, cod);
  if (morphism) {
    rep.add("contraction.preimage-adh", adh_ineq.ok(),
            adh_ineq.ok() ? "-"
                          : json{{"violation", adh_ineq.violations.front()}}.dump());
    rep.add("contraction.preimage-closure", cl_ineq.ok(),
            cl_ineq.ok() ? "-"
                         : json{{"violation", cl_ineq.violations.front()}}.dump());
  } else {
    rep.note("preimage inequalities skipped (the map is not a contraction)");
  }

  if (is_prap(cod))
    rep.add("contraction.converse-prap", !(adh_ineq.ok() && !morphism),
            json{{"adh-inequality", adh_ineq.ok()}, {"morphism", morphism}}.dump());
  if (is_approach(cod))
    rep.add("contraction.converse-approach", !(cl_ineq.ok() && !morphism),
            json{{"closure-inequality", cl_ineq.ok()}, {"morphism", morphism}}.dump());
  return rep;
}

Report run_frame_checks(const ConvFrame& frame, const std::string& which) {
  Report rep;
  add_mode_note(rep, frame.mode);
  rep.note("Lim at the bottom element is pinned to top (degenerate filter "
           "convention)");

  auto fn_str = [&](std::uint32_t r) {
    return to_string(fn_of(frame.carrier, frame.mode, r));
  };

  const ValidationReport v = validate(frame);
  rep.add("frame.antitone", v.ok(),
          v.ok() ? "-" : json{{"violation", v.violations.front()}}.dump());
  const auto ss = star_star_violation(frame);
  rep.add("frame.star-star-regular", !ss,
          ss ? json{{"m", fn_str(ss->m1)}}.dump() : "-");
  const auto cw = centered_violation(frame);
  rep.add("frame.centered", !cw, cw ? json{{"ell", fn_str(cw->m1)}}.dump() : "-");

  if (which == "vcap") return rep;

  if (which == "vprap" || which == "vap") {
    const auto pw = vprap_violation(frame);
    rep.add("frame.vprap", !pw,
            pw ? json{{"m1", fn_str(pw->m1)}, {"m2", fn_str(pw->m2)}}.dump() : "-");
    if (which == "vap") {
      const auto aw = vap_violation(frame);
      rep.add("frame.vap", !aw,
              aw ? json{{"f", fn_str(aw->m1)}, {"g", fn_str(aw->m2)}}.dump() : "-");
    }
    return rep;
  }

  if (which == "closed") {
    const auto closed = closed_elements(frame);
    json list = json::array();
    for (size_t i = 0; i < closed.size() && i < 64; ++i)
      list.push_back(fn_str(closed[i]));
    rep.add("frame.closed-elements", true,
            json{{"count", closed.size()}, {"elements", list}}.dump());
    return rep;
  }

  throw std::invalid_argument("unknown frame check: " + which);
}

}  // namespace apxconv
