#pragma once

#include "apxconv/finset.hpp"

namespace apxconv {

/// A convergence structure on a finite carrier, tabulated on principal
/// filters: lim[B] is the limit set of B^ for every nonempty mask B.
/// Axioms (see validate): centered (x in lim x^) and monotone
/// (B within B' implies lim B'^ within lim B^).
struct FiniteConvergence {
  Carrier carrier;
  std::vector<Subset> lim;  // indexed by mask; entry 0 unused

  Subset lim_of(Subset b) const;  // errors on the empty mask
};

FiniteConvergence make_convergence(Carrier carrier, std::vector<Subset> lim);

ValidationReport validate(const FiniteConvergence& xi);

/// adh A = union of lim y^ over y in A; adh of the empty set is empty.
Subset adh_set(const FiniteConvergence& xi, Subset a);

/// A closed: every filter containing A has its limit inside A. On finite
/// carriers this reduces to lim B^ within A for every nonempty B within A.
bool is_closed(const FiniteConvergence& xi, Subset a);
/// A open: every filter converging inside A contains A.
bool is_open(const FiniteConvergence& xi, Subset a);
std::vector<Subset> closed_sets(const FiniteConvergence& xi);

/// Idempotent closure: iterate adh_set to its fixpoint (at most |X| steps).
Subset closure_set(const FiniteConvergence& xi, Subset a);

/// Pretopological reflection: lim B^ = meet of adh {y} over y in B.
FiniteConvergence pretop_reflection(const FiniteConvergence& xi);
/// Topological reflection: lim B^ = meet of closure {y} over y in B.
FiniteConvergence topo_reflection(const FiniteConvergence& xi);

/// Continuity over principal filters: x in lim B^ implies
/// f(x) in lim f(B)^.
bool continuous(const PointMap& f, const FiniteConvergence& xi,
                const FiniteConvergence& tau);

}  // namespace apxconv
