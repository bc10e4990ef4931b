#pragma once

#include "apxconv/conv.hpp"
#include "apxconv/finset.hpp"

#include <functional>
#include <optional>

namespace apxconv {

/// A convergence-approach structure on a finite carrier, tabulated on
/// principal filters: at(B,x) is the degree to which B^ converges to x.
///
/// Axioms (see validate):
///   centered:  at({x},x) = top;
///   monotone:  B within B' implies at(B',.) <= at(B,.) pointwise.
/// Everything downstream (adherence, hulls, reflections) is derived from
/// this one table; all arithmetic is exact.
struct CapSpace {
  Carrier carrier;
  QuantaleMode mode;
  std::vector<QuantaleValue> table;  // row of mask m starts at (m-1)*|X|

  const QuantaleValue& at(Subset b, int x) const;
};

CapSpace make_cap_space(Carrier carrier, QuantaleMode mode,
                        std::vector<QuantaleValue> table);

/// Builds the space whose singleton rows are m[x*|X|+y] = at({y},x) and whose
/// non-singleton rows are the pre-approach completion (meet over singletons).
CapSpace from_singleton_rows(const Carrier& carrier, const QuantaleMode& mode,
                             const std::vector<QuantaleValue>& m);

ValidationReport validate(const CapSpace& s);

/// The row of B^ as a function of the landing point.
VFunction lambda(const CapSpace& s, const PrincipalFilter& f);

/// adh A(x) = join over y in A of at({y},x). adh of the empty set is the
/// constant bottom (the convention every closure law relies on).
VFunction adh_set(const CapSpace& s, Subset a);
/// Adherence of a principal filter: join of the rows of the finer
/// ultrafilters, which are exactly the point filters over the base.
VFunction adh_filter(const CapSpace& s, const PrincipalFilter& f);

/// Witness of a broken pointwise identity: mask plus landing point.
struct PointWitness {
  Subset b = 0;
  int x = 0;
};

/// Pseudo-approach reflection: row(B) = meet of lambda over the ultrafilters
/// finer than B^.
CapSpace psap_reflection(const CapSpace& s);
/// Pre-approach reflection: row(B) = meet of adh A over all A meshing B.
CapSpace prap_reflection(const CapSpace& s);
std::optional<PointWitness> psap_violation(const CapSpace& s);
std::optional<PointWitness> prap_violation(const CapSpace& s);
bool is_psap(const CapSpace& s);
bool is_prap(const CapSpace& s);

/// A^(eps) = {x : adh A(x) >= eps}.
Subset level_set(const CapSpace& s, Subset a, const QuantaleValue& eps);

struct ApproachWitness {
  Subset a = 0;
  QuantaleValue eps;
  int x = 0;
  QuantaleValue lhs;  // adh A(x)
  QuantaleValue rhs;  // adh A^(eps)(x) (x) eps
};

/// Approach = pre-approach + the diagonal condition
///   adh A(x) >= adh A^(eps)(x) (x) eps  for every A, eps, x,
/// with eps ranging over the achieved adherence values plus top (the
/// condition is constant between consecutive achieved values and tightest at
/// the achieved one; the full-chain quantification is kept as an oracle in
/// the tests).
std::optional<ApproachWitness> approach_violation(const CapSpace& s);
bool is_approach(const CapSpace& s);

/// Continuity of f: X -> V over principal filters:
///   f(x) (/) limsup_{B^} f >= at(B,x) for every B, x.
std::optional<PointWitness> continuity_violation(const CapSpace& s, const VFunction& f);
bool is_continuous_to_V(const CapSpace& s, const VFunction& f);

/// C(f): the least continuous function above f. Computed as M*f in the
/// (join, tensor) matrix semiring, where M(x,y) = at({y},x) and M* is the
/// Kleene closure (powers stabilize by |X|-1 since M is reflexive; squaring).
VFunction lower_hull(const CapSpace& s, const VFunction& f);
/// cl A = C(theta_A).
VFunction closure_fn(const CapSpace& s, Subset a);
/// Same value through the development of f by its level sets:
///   join over v in range(f) of v (x) cl(f = v). Cross-check for lower_hull.
VFunction hull_via_development(const CapSpace& s, const VFunction& f);

inline VFunction theta(const CapSpace& s, Subset a) {
  return theta(s.carrier, s.mode, a);
}
inline VFunction theta_eps(const CapSpace& s, Subset a, const QuantaleValue& eps) {
  return theta_eps(s.carrier, s.mode, a, eps);
}

/// The singleton matrix M[x*|X|+y] = at({y},x) and its Kleene closure.
std::vector<QuantaleValue> singleton_matrix(const CapSpace& s);
std::vector<QuantaleValue> kleene_star(const QuantaleMode& mode,
                                       const std::vector<QuantaleValue>& m, int n);

/// Closedness of A in the convergence tau_eps (strictly-above-eps limits).
/// Errors when eps = top.
bool is_tau_eps_closed(const CapSpace& s, Subset a, const QuantaleValue& eps);

/// Approach reflection: row(B) = meet over y in B of cl{y}. The result is
/// the least approach structure coarser than s.
CapSpace ap_reflection(const CapSpace& s);

struct ContractionWitness {
  Subset b = 0;
  int x = 0;
  QuantaleValue lhs;  // lambda_cod(f(B)^)(f(x))
  QuantaleValue rhs;  // lambda_dom(B^)(x)
};

/// f is a contraction when lambda_cod(f(B)^)(f(x)) >= lambda_dom(B^)(x).
std::optional<ContractionWitness> contraction_violation(const PointMap& f,
                                                        const CapSpace& dom,
                                                        const CapSpace& cod);
bool contraction_check(const PointMap& f, const CapSpace& dom, const CapSpace& cod);

/// Preimage inequalities that every contraction satisfies:
///   adh_dom(f^-(A)) <= adh_cod(A) o f          (sets and principal filters),
///   cl_dom(f^-(A)) <= cl_cod(A) o f.
ValidationReport preimage_adh_check(const PointMap& f, const CapSpace& dom,
                                    const CapSpace& cod);
ValidationReport preimage_closure_check(const PointMap& f, const CapSpace& dom,
                                        const CapSpace& cod);

/// Coarsest structure on `carrier` making every listed map a contraction:
///   at(B,x) = meet over i of lambda_i(f_i(B)^)(f_i(x)).
CapSpace initial_structure(const Carrier& carrier, const QuantaleMode& mode,
                           const std::vector<std::pair<PointMap, CapSpace>>& maps);

/// Convergence functors: limits are the points converged to strictly above
/// bottom (r), exactly at top (c), or strictly above eps (tau_eps; errors
/// when eps = top).
FiniteConvergence r_reflect(const CapSpace& s);
FiniteConvergence c_coreflect(const CapSpace& s);
FiniteConvergence tau_eps(const CapSpace& s, const QuantaleValue& eps);

/// Space of a finite set of rationals on the line: at({y},x) = |y-x|, rows
/// completed by the pre-approach meet. lukasiewicz mode requires integer
/// pairwise distances within the chain. The unit-rational overload takes a
/// decreasing transform with transform(0) = top mapping distances into V.
CapSpace from_metric(const std::vector<Rational>& points, const QuantaleMode& mode);
CapSpace from_metric(const std::vector<Rational>& points, const QuantaleMode& mode,
                     const std::function<Rational(const Rational&)>& transform);

/// For approach spaces only (errors otherwise): checks adh B^ = cl B and
/// row(B) = meet of cl A over A meshing B, for every nonempty B.
ValidationReport adh_filter_closure_check(const CapSpace& s);

}  // namespace apxconv
