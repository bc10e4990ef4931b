#pragma once

#include "apxconv/cap.hpp"

namespace apxconv {

/// The canonical structure of V on itself, on principal filters:
///   lambda_V(B^)(v) = v (/) join(B) = meet over b in B of v (/) b.
/// Errors on an empty base.
QuantaleValue lambda_v(std::span<const QuantaleValue> base, const QuantaleValue& v);

/// adh_V A(v) = v (/) meet(A) (closed form; the brute force over point
/// ultrafilters is kept as a test oracle). Errors on empty A.
QuantaleValue adh_v(std::span<const QuantaleValue> a, const QuantaleValue& v);

/// V itself as a space on the chain carrier {"0",..,"n"}. Only the
/// lukasiewicz presentation has a finite carrier; unit-rational input is
/// rejected with an unsupported-mode error.
CapSpace v_as_cap(const QuantaleMode& mode);

/// The chain carrier used by v_as_cap and the pointfree layer.
Carrier chain_carrier(const QuantaleMode& mode);

}  // namespace apxconv
