#include "apxconv/ptfree.hpp"

#include <cstdlib>

namespace apxconv {

namespace {

constexpr std::uint32_t kDefaultLatticeCap = 10000;

std::uint32_t lattice_cap() {
  const char* env = std::getenv("APXCONV_MAX_LATTICE");
  if (!env) return kDefaultLatticeCap;
  try {
    const long long v = std::stoll(env);
    if (v < 1 || v > (1ll << 31)) throw std::out_of_range(env);
    return static_cast<std::uint32_t>(v);
  } catch (const std::logic_error&) {
    throw std::invalid_argument(std::string("bad APXCONV_MAX_LATTICE: ") + env);
  }
}

int digit_of(const VFunction& m, int i) {
  return static_cast<int>(m.at(i).v.numerator());
}

}  // namespace

std::uint32_t lattice_size(const Carrier& carrier, const QuantaleMode& mode) {
  if (!mode.is_lukasiewicz())
    throw std::invalid_argument("frames need a finite lattice: lukasiewicz mode only");
  const std::uint32_t cap = lattice_cap();
  std::uint64_t size = 1;
  for (int i = 0; i < carrier.size(); ++i) {
    size *= static_cast<std::uint64_t>(mode.chain) + 1;
    if (size > cap)
      throw std::invalid_argument("lattice of " + std::to_string(size) +
                                  "+ elements exceeds the cap of " + std::to_string(cap) +
                                  " (set APXCONV_MAX_LATTICE to raise it)");
  }
  return static_cast<std::uint32_t>(size);
}

std::uint32_t rank_of(const VFunction& m) {
  if (!m.mode.is_lukasiewicz())
    throw std::invalid_argument("ranks are defined for lukasiewicz mode only");
  std::uint64_t rank = 0;
  std::uint64_t radix = 1;
  for (int i = 0; i < m.carrier.size(); ++i) {
    rank += radix * static_cast<std::uint64_t>(digit_of(m, i));
    radix *= static_cast<std::uint64_t>(m.mode.chain) + 1;
  }
  return static_cast<std::uint32_t>(rank);
}

VFunction fn_of(const Carrier& carrier, const QuantaleMode& mode, std::uint32_t rank) {
  const std::uint32_t size = lattice_size(carrier, mode);
  if (rank >= size) throw std::invalid_argument("rank out of range");
  VFunction out{carrier, mode, {}};
  std::uint32_t rest = rank;
  const std::uint32_t radix = static_cast<std::uint32_t>(mode.chain) + 1;
  for (int i = 0; i < carrier.size(); ++i) {
    out.values.push_back({mode, Rational(rest % radix)});
    rest /= radix;
  }
  return out;
}

ConvFrame make_frame(Carrier carrier, QuantaleMode mode, std::vector<std::uint32_t> lim) {
  const std::uint32_t size = lattice_size(carrier, mode);
  if (lim.size() != size)
    throw std::invalid_argument("limit table must have one entry per lattice element");
  for (std::uint32_t l : lim)
    if (l >= size) throw std::invalid_argument("limit rank out of range");
  const std::uint32_t bot = rank_of(constant_fn(carrier, bottom(mode)));
  const std::uint32_t top_rank = rank_of(constant_fn(carrier, top(mode)));
  if (lim[bot] != top_rank)
    throw std::invalid_argument(
        "Lim at bottom must be top (degenerate filter convention)");
  return ConvFrame{std::move(carrier), mode, std::move(lim)};
}

ValidationReport validate(const ConvFrame& f) {
  ValidationReport rep;
  const std::uint32_t size = lattice_size(f.carrier, f.mode);
  for (std::uint32_t r = 0; r < size; ++r) {
    const VFunction m = fn_of(f.carrier, f.mode, r);
    const VFunction lim_m = fn_of(f.carrier, f.mode, f.lim_of(r));
    for (int i = 0; i < f.carrier.size(); ++i) {
      if (digit_of(m, i) == 0) continue;  // already top at i
      VFunction cover = m;
      cover.values[static_cast<size_t>(i)] = {f.mode, m.at(i).v - Rational(1)};
      const VFunction lim_cover = fn_of(f.carrier, f.mode, f.lim_of(rank_of(cover)));
      if (!le(lim_cover, lim_m))
        rep.violations.push_back("antitone contract broken between ranks " +
                                 std::to_string(r) + " and " +
                                 std::to_string(rank_of(cover)));
    }
  }
  return rep;
}

VFunction pseudocomplement(const VFunction& ell) {
  const QuantaleValue t = top(ell.mode);
  const QuantaleValue b = bottom(ell.mode);
  VFunction out{ell.carrier, ell.mode, {}};
  for (int i = 0; i < ell.carrier.size(); ++i)
    out.values.push_back(ell.at(i) == b ? t : b);
  return out;
}

std::optional<FrameWitness> star_star_violation(const ConvFrame& f) {
  const std::uint32_t size = lattice_size(f.carrier, f.mode);
  for (std::uint32_t r = 0; r < size; ++r) {
    const VFunction m = fn_of(f.carrier, f.mode, r);
    const std::uint32_t rss = rank_of(pseudocomplement(pseudocomplement(m)));
    if (f.lim_of(r) != f.lim_of(rss)) return FrameWitness{r, rss};
  }
  return std::nullopt;
}

bool is_star_star_regular(const ConvFrame& f) { return !star_star_violation(f); }

VFunction frame_adh(const ConvFrame& f, const VFunction& ell) {
  require_same_carrier(f.carrier, ell.carrier);
  const std::uint32_t size = lattice_size(f.carrier, f.mode);
  const Subset supp_ell = support(ell);
  VFunction acc = constant_fn(f.carrier, bottom(f.mode));
  for (std::uint32_t r = 0; r < size; ++r) {
    const VFunction m = fn_of(f.carrier, f.mode, r);
    if (!(support(m) & supp_ell)) continue;
    acc = vjoin(acc, fn_of(f.carrier, f.mode, f.lim_of(r)));
  }
  return acc;
}

std::optional<FrameWitness> centered_violation(const ConvFrame& f) {
  const std::uint32_t size = lattice_size(f.carrier, f.mode);
  for (std::uint32_t r = 0; r < size; ++r) {
    const VFunction ell = fn_of(f.carrier, f.mode, r);
    if (!le(ell, frame_adh(f, ell))) return FrameWitness{r, r};
  }
  return std::nullopt;
}

bool is_centered(const ConvFrame& f) { return !centered_violation(f); }

ConvFrame lim_from_cap(const CapSpace& s) {
  const std::uint32_t size = lattice_size(s.carrier, s.mode);
  const std::uint32_t top_rank = rank_of(constant_fn(s.carrier, top(s.mode)));
  std::vector<std::uint32_t> lim(size, top_rank);
  for (std::uint32_t r = 0; r < size; ++r) {
    const Subset supp = support(fn_of(s.carrier, s.mode, r));
    if (supp == 0) continue;  // degenerate filter: top by convention
    lim[r] = rank_of(lambda(s, principal(s.carrier, supp)));
  }
  return make_frame(s.carrier, s.mode, std::move(lim));
}

CapSpace cap_from_lim(const ConvFrame& f) {
  if (auto w = star_star_violation(f))
    throw std::invalid_argument("frame is not **-regular at rank " + std::to_string(w->m1));
  if (auto w = centered_violation(f))
    throw std::invalid_argument("frame is not centered at rank " + std::to_string(w->m1));
  std::vector<QuantaleValue> table;
  for (Subset b = 1; b <= f.carrier.full(); ++b) {
    const VFunction row =
        fn_of(f.carrier, f.mode, f.lim_of(rank_of(theta(f.carrier, f.mode, b))));
    table.insert(table.end(), row.values.begin(), row.values.end());
  }
  CapSpace s = make_cap_space(f.carrier, f.mode, std::move(table));
  if (auto rep = validate(s); !rep.ok())
    throw std::invalid_argument("frame broke its own contract: " + rep.violations.front());
  return s;
}

bool is_vcap(const ConvFrame& f) { return is_star_star_regular(f) && is_centered(f); }

std::optional<FrameWitness> vprap_violation(const ConvFrame& f) {
  const std::uint32_t size = lattice_size(f.carrier, f.mode);
  for (std::uint32_t r1 = 0; r1 < size; ++r1) {
    const VFunction m1 = fn_of(f.carrier, f.mode, r1);
    const VFunction lim1 = fn_of(f.carrier, f.mode, f.lim_of(r1));
    for (std::uint32_t r2 = r1; r2 < size; ++r2) {
      const VFunction m2 = fn_of(f.carrier, f.mode, r2);
      const VFunction lhs = fn_of(f.carrier, f.mode, f.lim_of(rank_of(vjoin(m1, m2))));
      const VFunction rhs = vmeet(lim1, fn_of(f.carrier, f.mode, f.lim_of(r2)));
      if (!(lhs == rhs)) return FrameWitness{r1, r2};
    }
  }
  return std::nullopt;
}

bool is_vprap(const ConvFrame& f) { return !vprap_violation(f); }

std::optional<FrameWitness> vap_violation(const ConvFrame& f) {
  if (auto w = vprap_violation(f)) return w;
  const std::uint32_t size = lattice_size(f.carrier, f.mode);
  for (std::uint32_t rf = 0; rf < size; ++rf) {
    const VFunction adh = frame_adh(f, fn_of(f.carrier, f.mode, rf));
    for (std::uint32_t rg = 0; rg < size; ++rg) {
      const VFunction g = fn_of(f.carrier, f.mode, rg);
      const Subset supp_g = support(g);
      QuantaleValue sup = bottom(f.mode);
      for (int x = 0; x < f.carrier.size(); ++x)
        if (supp_g >> x & 1u) sup = vjoin(sup, adh.at(x));
      const VFunction lim_g = fn_of(f.carrier, f.mode, f.lim_of(rg));
      for (int x = 0; x < f.carrier.size(); ++x)
        if (!le(lim_g.at(x), residuate(adh.at(x), sup))) return FrameWitness{rf, rg};
    }
  }
  return std::nullopt;
}

bool is_vap(const ConvFrame& f) { return !vap_violation(f).has_value(); }

SetFamily f_star(const QuantaleMode& mode, const VFunction& f, const VFunction& g) {
  require_same_carrier(f.carrier, g.carrier);
  require_same_mode(f.mode, mode);
  require_same_mode(g.mode, mode);
  const Carrier chain = chain_carrier(mode);
  Subset image = 0;
  const Subset supp_g = support(g);
  for (int x = 0; x < f.carrier.size(); ++x)
    if (supp_g >> x & 1u) image |= 1u << digit_of(f, x);
  return isotone_hull(make_family(chain, {image}));
}

std::vector<std::uint32_t> closed_elements(const ConvFrame& f) {
  const std::uint32_t size = lattice_size(f.carrier, f.mode);
  const std::uint32_t bot = rank_of(constant_fn(f.carrier, bottom(f.mode)));
  std::vector<std::uint32_t> out;
  for (std::uint32_t r = 0; r < size; ++r) {
    const VFunction ell = fn_of(f.carrier, f.mode, r);
    bool closed = true;
    for (std::uint32_t m = 0; m < size && closed; ++m) {
      if (m == bot) continue;  // proper filters only
      const VFunction mf = fn_of(f.carrier, f.mode, m);
      if (le(mf, ell) && !le(fn_of(f.carrier, f.mode, f.lim_of(m)), ell)) closed = false;
    }
    if (closed) out.push_back(r);
  }
  return out;
}

FiniteConvergence point_space(const CapSpace& s) {
  if (!s.mode.is_lukasiewicz())
    throw std::invalid_argument("the point space needs a finite chain: lukasiewicz only");
  const int n = s.carrier.size();
  const int radix = s.mode.chain + 1;
  if (n * radix > kMaxPoints)
    throw std::invalid_argument("point space carrier exceeds " +
                                std::to_string(kMaxPoints) + " points");
  std::vector<std::string> names;
  for (int x = 0; x < n; ++x)
    for (int v = 0; v < radix; ++v)
      names.push_back(s.carrier.names[static_cast<size_t>(x)] + "@" + std::to_string(v));
  const Carrier carrier = make_carrier(std::move(names));
  const QuantaleValue top_v = top(s.mode);
  std::vector<Subset> lim(size_t{1} << carrier.names.size(), 0);
  for (Subset c = 1; c <= carrier.full(); ++c) {
    Subset proj = 0;
    for (int x = 0; x < n; ++x)
      for (int v = 0; v < radix; ++v)
        if (c >> (x * radix + v) & 1u) proj |= 1u << x;
    Subset l = 0;
    for (int x = 0; x < n; ++x) {
      const QuantaleValue val = s.at(proj, x);
      for (int v = 0; v < radix; ++v) {
        const QuantaleValue at_v = {s.mode, Rational(v)};
        const bool in_lim = at_v == top_v ? val == top_v : lt(at_v, val);
        if (in_lim) l |= 1u << (x * radix + v);
      }
    }
    lim[c] = l;
  }
  return make_convergence(carrier, std::move(lim));
}

}  // namespace apxconv
