#include "apxconv/vspace.hpp"

namespace apxconv {

QuantaleValue lambda_v(std::span<const QuantaleValue> base, const QuantaleValue& v) {
  if (base.empty()) throw std::invalid_argument("principal filter needs a nonempty base");
  for (const auto& b : base) require_same_mode(b.mode, v.mode);
  return residuate(v, join(v.mode, base));
}

QuantaleValue adh_v(std::span<const QuantaleValue> a, const QuantaleValue& v) {
  if (a.empty()) throw std::invalid_argument("adherence needs a nonempty set");
  for (const auto& b : a) require_same_mode(b.mode, v.mode);
  return residuate(v, meet(v.mode, a));
}

Carrier chain_carrier(const QuantaleMode& mode) {
  if (!mode.is_lukasiewicz())
    throw std::invalid_argument("unit-rational V has no finite carrier");
  std::vector<std::string> names;
  for (int i = 0; i <= mode.chain; ++i) names.push_back(std::to_string(i));
  return make_carrier(std::move(names));
}

CapSpace v_as_cap(const QuantaleMode& mode) {
  const Carrier carrier = chain_carrier(mode);
  const std::vector<QuantaleValue> chain = chain_values(mode);
  std::vector<QuantaleValue> table;
  for (Subset b = 1; b <= carrier.full(); ++b) {
    std::vector<QuantaleValue> base;
    for (int i = 0; i <= mode.chain; ++i)
      if (b >> i & 1u) base.push_back(chain[static_cast<size_t>(i)]);
    for (int x = 0; x <= mode.chain; ++x)
      table.push_back(lambda_v(base, chain[static_cast<size_t>(x)]));
  }
  return make_cap_space(carrier, mode, std::move(table));
}

}  // namespace apxconv
