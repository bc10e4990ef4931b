#include "apxconv/conv.hpp"

#include <bit>

namespace apxconv {

Subset FiniteConvergence::lim_of(Subset b) const {
  if (b == 0) throw std::invalid_argument("limits are defined on nonempty masks only");
  if (b & ~carrier.full()) throw std::invalid_argument("mask outside carrier");
  return lim.at(b);
}

FiniteConvergence make_convergence(Carrier carrier, std::vector<Subset> lim) {
  const size_t rows = size_t{1} << carrier.names.size();
  if (lim.size() != rows)
    throw std::invalid_argument("limit table must have one entry per mask");
  const Subset full = carrier.full();
  for (Subset l : lim)
    if (l & ~full) throw std::invalid_argument("limit set outside carrier");
  return FiniteConvergence{std::move(carrier), std::move(lim)};
}

ValidationReport validate(const FiniteConvergence& xi) {
  ValidationReport rep;
  const int n = xi.carrier.size();
  for (int i = 0; i < n; ++i)
    if (!(xi.lim_of(1u << i) >> i & 1u))
      rep.violations.push_back("not centered at " + xi.carrier.names[static_cast<size_t>(i)]);
  // Monotonicity via covering pairs B within B+{y}; transitivity gives the rest.
  for (Subset b = 1; b <= xi.carrier.full(); ++b)
    for (int y = 0; y < n; ++y) {
      if (b >> y & 1u) continue;
      const Subset bigger = b | 1u << y;
      if (xi.lim_of(bigger) & ~xi.lim_of(b))
        rep.violations.push_back("not monotone: lim " + xi.carrier.subset_to_string(bigger) +
                                 "^ exceeds lim " + xi.carrier.subset_to_string(b) + "^");
    }
  return rep;
}

Subset adh_set(const FiniteConvergence& xi, Subset a) {
  Subset out = 0;
  for (int y = 0; y < xi.carrier.size(); ++y)
    if (a >> y & 1u) out |= xi.lim_of(1u << y);
  return out;
}

bool is_closed(const FiniteConvergence& xi, Subset a) {
  for (Subset b = a; b; b = (b - 1) & a)  // nonempty subsets of a
    if (xi.lim_of(b) & ~a) return false;
  return true;
}

bool is_open(const FiniteConvergence& xi, Subset a) {
  for (Subset b = 1; b <= xi.carrier.full(); ++b)
    if ((xi.lim_of(b) & a) && (b & ~a)) return false;
  return true;
}

std::vector<Subset> closed_sets(const FiniteConvergence& xi) {
  std::vector<Subset> out;
  for (Subset a = 0; a <= xi.carrier.full(); ++a)
    if (is_closed(xi, a)) out.push_back(a);
  return out;
}

Subset closure_set(const FiniteConvergence& xi, Subset a) {
  Subset cur = a;
  for (;;) {
    const Subset next = cur | adh_set(xi, cur);
    if (next == cur) return cur;
    cur = next;
  }
}

FiniteConvergence pretop_reflection(const FiniteConvergence& xi) {
  const int n = xi.carrier.size();
  std::vector<Subset> point_adh(static_cast<size_t>(n));
  for (int y = 0; y < n; ++y) point_adh[static_cast<size_t>(y)] = adh_set(xi, 1u << y);
  std::vector<Subset> lim(size_t{1} << n, 0);
  for (Subset b = 1; b <= xi.carrier.full(); ++b) {
    Subset l = xi.carrier.full();
    for (int y = 0; y < n; ++y)
      if (b >> y & 1u) l &= point_adh[static_cast<size_t>(y)];
    lim[b] = l;
  }
  return make_convergence(xi.carrier, std::move(lim));
}

FiniteConvergence topo_reflection(const FiniteConvergence& xi) {
  const int n = xi.carrier.size();
  std::vector<Subset> point_cl(static_cast<size_t>(n));
  for (int y = 0; y < n; ++y) point_cl[static_cast<size_t>(y)] = closure_set(xi, 1u << y);
  std::vector<Subset> lim(size_t{1} << n, 0);
  for (Subset b = 1; b <= xi.carrier.full(); ++b) {
    Subset l = xi.carrier.full();
    for (int y = 0; y < n; ++y)
      if (b >> y & 1u) l &= point_cl[static_cast<size_t>(y)];
    lim[b] = l;
  }
  return make_convergence(xi.carrier, std::move(lim));
}

bool continuous(const PointMap& f, const FiniteConvergence& xi,
                const FiniteConvergence& tau) {
  require_same_carrier(f.dom, xi.carrier);
  require_same_carrier(f.cod, tau.carrier);
  for (Subset b = 1; b <= xi.carrier.full(); ++b) {
    const Subset target = tau.lim_of(image_subset(f, b));
    const Subset src = xi.lim_of(b);
    for (int x = 0; x < f.dom.size(); ++x)
      if ((src >> x & 1u) && !(target >> f.apply(x) & 1u)) return false;
  }
  return true;
}

}  // namespace apxconv
