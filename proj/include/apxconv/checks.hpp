#pragma once

#include <cstdint>

#include "apxconv/cap.hpp"
#include "apxconv/io.hpp"
#include "apxconv/ptfree.hpp"
#include "apxconv/report.hpp"

namespace apxconv {

/// Sampling knobs for the law/theorem registry. Every run with the same
/// config is deterministic; witnesses can be replayed from the report.
struct ChecksConfig {
  std::uint64_t seed = 0xA9C0FFEEull;
  int samples = 24;            // sampled functions when enumeration is large
  std::size_t exhaustive_cap = 729;  // enumerate all of V^X up to this size
};

/// Axiom checks for one space: axiom.centered, axiom.monotone.
Report run_validate_checks(const NamedSpace& ns);

/// Quantale, limit-operator, hull, closure, reflection and continuity laws
/// (names law.*). Assumes the axioms hold.
Report run_law_checks(const NamedSpace& ns, const ChecksConfig& cfg = {});

/// Structural theorems tying the layers together (names thm.*).
Report run_theorem_checks(const NamedSpace& ns, const ChecksConfig& cfg = {});

/// validate + laws + theorems; laws and theorems are skipped (with a note)
/// when the axioms fail.
Report run_all_checks(const NamedSpace& ns, const ChecksConfig& cfg = {});

/// Morphism check plus the preimage inequalities and, when the codomain is
/// pre-approach/approach, the converse criteria (names contraction.*).
Report run_contraction_checks(const PointMap& f, const NamedSpace& from,
                              const NamedSpace& to);

/// Frame-side checks; `which` is one of vcap, vprap, vap, closed.
Report run_frame_checks(const ConvFrame& frame, const std::string& which);

}  // namespace apxconv
