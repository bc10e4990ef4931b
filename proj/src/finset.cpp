#include "apxconv/finset.hpp"

#include <algorithm>
#include <bit>
#include <set>
#include <sstream>

namespace apxconv {

int Carrier::index(const std::string& name) const {
  for (size_t i = 0; i < names.size(); ++i)
    if (names[i] == name) return static_cast<int>(i);
  throw std::invalid_argument("unknown point '" + name + "'");
}

std::string Carrier::subset_to_string(Subset s) const {
  std::ostringstream os;
  os << '{';
  bool first = true;
  for (int i = 0; i < size(); ++i) {
    if (!(s >> i & 1u)) continue;
    if (!first) os << ',';
    os << names[static_cast<size_t>(i)];
    first = false;
  }
  os << '}';
  return os.str();
}

Carrier make_carrier(std::vector<std::string> names) {
  if (names.empty()) throw std::invalid_argument("carrier must be nonempty");
  if (names.size() > kMaxPoints)
    throw std::invalid_argument("carrier exceeds " + std::to_string(kMaxPoints) + " points");
  std::set<std::string> seen;
  for (const auto& n : names) {
    if (n.empty()) throw std::invalid_argument("empty point name");
    if (!seen.insert(n).second) throw std::invalid_argument("duplicate point '" + n + "'");
  }
  return Carrier{std::move(names)};
}

Subset parse_subset(const Carrier& carrier, const std::string& text) {
  auto l = text.find('{');
  auto r = text.rfind('}');
  if (l == std::string::npos || r == std::string::npos || r < l)
    throw std::invalid_argument("subset literal must look like {p,q}: '" + text + "'");
  Subset out = 0;
  std::string inner = text.substr(l + 1, r - l - 1);
  std::istringstream is(inner);
  std::string tok;
  while (std::getline(is, tok, ',')) {
    const auto b = tok.find_first_not_of(" \t");
    if (b == std::string::npos) {
      if (inner.find_first_not_of(" \t") == std::string::npos) continue;  // "{}"
      throw std::invalid_argument("empty point name in '" + text + "'");
    }
    const auto e = tok.find_last_not_of(" \t");
    out |= 1u << carrier.index(tok.substr(b, e - b + 1));
  }
  return out;
}

void require_same_carrier(const Carrier& a, const Carrier& b) {
  if (!(a == b)) throw std::invalid_argument("carrier mismatch");
}

PointMap make_point_map(Carrier dom, Carrier cod, std::vector<int> img) {
  if (img.size() != dom.names.size())
    throw std::invalid_argument("point map must cover the whole domain");
  for (int i : img)
    if (i < 0 || i >= cod.size()) throw std::invalid_argument("point map image out of range");
  return PointMap{std::move(dom), std::move(cod), std::move(img)};
}

Subset image_subset(const PointMap& f, Subset a) {
  Subset out = 0;
  for (int i = 0; i < f.dom.size(); ++i)
    if (a >> i & 1u) out |= 1u << f.apply(i);
  return out;
}

Subset preimage_subset(const PointMap& f, Subset b) {
  Subset out = 0;
  for (int i = 0; i < f.dom.size(); ++i)
    if (b >> f.apply(i) & 1u) out |= 1u << i;
  return out;
}

VFunction make_vfunction(Carrier carrier, QuantaleMode mode,
                         std::vector<QuantaleValue> values) {
  if (values.size() != carrier.names.size())
    throw std::invalid_argument("function must assign a value to every point");
  for (const auto& v : values) require_same_mode(v.mode, mode);
  return VFunction{std::move(carrier), mode, std::move(values)};
}

VFunction constant_fn(const Carrier& carrier, const QuantaleValue& v) {
  return VFunction{carrier, v.mode,
                   std::vector<QuantaleValue>(carrier.names.size(), v)};
}

VFunction theta(const Carrier& carrier, const QuantaleMode& mode, Subset a) {
  return theta_eps(carrier, mode, a, bottom(mode));
}

VFunction theta_eps(const Carrier& carrier, const QuantaleMode& mode, Subset a,
                    const QuantaleValue& eps) {
  require_same_mode(mode, eps.mode);
  if (eps == top(mode))
    throw std::invalid_argument("leveled indicator requires eps below top");
  VFunction out{carrier, mode, {}};
  for (int i = 0; i < carrier.size(); ++i)
    out.values.push_back(a >> i & 1u ? top(mode) : eps);
  return out;
}

VFunction vjoin(const VFunction& f, const VFunction& g) {
  require_same_carrier(f.carrier, g.carrier);
  VFunction out{f.carrier, f.mode, {}};
  for (int i = 0; i < f.carrier.size(); ++i) out.values.push_back(vjoin(f.at(i), g.at(i)));
  return out;
}

VFunction vmeet(const VFunction& f, const VFunction& g) {
  require_same_carrier(f.carrier, g.carrier);
  VFunction out{f.carrier, f.mode, {}};
  for (int i = 0; i < f.carrier.size(); ++i) out.values.push_back(vmeet(f.at(i), g.at(i)));
  return out;
}

VFunction tensor(const VFunction& f, const QuantaleValue& v) {
  VFunction out{f.carrier, f.mode, {}};
  for (int i = 0; i < f.carrier.size(); ++i) out.values.push_back(tensor(f.at(i), v));
  return out;
}

bool le(const VFunction& f, const VFunction& g) {
  require_same_carrier(f.carrier, g.carrier);
  for (int i = 0; i < f.carrier.size(); ++i)
    if (!le(f.at(i), g.at(i))) return false;
  return true;
}

Subset support(const VFunction& f) {
  Subset out = 0;
  for (int i = 0; i < f.carrier.size(); ++i)
    if (lt(bottom(f.mode), f.at(i))) out |= 1u << i;
  return out;
}

std::vector<QuantaleValue> range_of(const VFunction& f) {
  std::set<Rational> seen;
  for (const auto& v : f.values) seen.insert(v.v);
  std::vector<QuantaleValue> out;
  for (const auto& r : seen) out.push_back({f.mode, r});
  return out;
}

std::string to_string(const VFunction& f) {
  std::ostringstream os;
  for (int i = 0; i < f.carrier.size(); ++i) {
    if (i) os << ' ';
    os << f.carrier.names[static_cast<size_t>(i)] << '=' << to_string(f.at(i));
  }
  return os.str();
}

SetFamily make_family(Carrier carrier, std::vector<Subset> members) {
  const Subset full = carrier.full();
  for (Subset m : members)
    if (m & ~full) throw std::invalid_argument("family member outside carrier");
  std::sort(members.begin(), members.end());
  members.erase(std::unique(members.begin(), members.end()), members.end());
  return SetFamily{std::move(carrier), std::move(members)};
}

SetFamily grill(const SetFamily& f) {
  std::vector<Subset> out;
  for (Subset b = 0; b <= f.carrier.full(); ++b) {
    bool meets_all = true;
    for (Subset a : f.members)
      if (!(a & b)) {
        meets_all = false;
        break;
      }
    if (meets_all) out.push_back(b);
  }
  return make_family(f.carrier, std::move(out));
}

bool mesh(const SetFamily& a, const SetFamily& b) {
  require_same_carrier(a.carrier, b.carrier);
  for (Subset x : a.members)
    for (Subset y : b.members)
      if (!(x & y)) return false;
  return true;
}

bool refines(const SetFamily& fine, const SetFamily& coarse) {
  require_same_carrier(fine.carrier, coarse.carrier);
  for (Subset c : coarse.members) {
    bool witnessed = false;
    for (Subset f : fine.members)
      if ((f & ~c) == 0) {
        witnessed = true;
        break;
      }
    if (!witnessed) return false;
  }
  return true;
}

SetFamily isotone_hull(const SetFamily& f) {
  std::vector<Subset> out;
  for (Subset b = 0; b <= f.carrier.full(); ++b)
    for (Subset a : f.members)
      if ((a & ~b) == 0) {
        out.push_back(b);
        break;
      }
  return make_family(f.carrier, std::move(out));
}

PrincipalFilter principal(const Carrier& carrier, Subset base) {
  if (base == 0) throw std::invalid_argument("principal filter needs a nonempty base");
  if (base & ~carrier.full()) throw std::invalid_argument("filter base outside carrier");
  return PrincipalFilter{carrier, base};
}

PrincipalFilter filter_from_base(const SetFamily& base) {
  Subset meet = base.carrier.full();
  for (Subset m : base.members) meet &= m;
  if (meet == 0)
    throw std::invalid_argument("degenerate filter base: members have empty intersection");
  return principal(base.carrier, meet);
}

SetFamily filter_sets(const PrincipalFilter& f) {
  return isotone_hull(make_family(f.carrier, {f.base}));
}

std::vector<PrincipalFilter> ultrafilters_over(const Carrier& carrier, Subset a) {
  if (a == 0) throw std::invalid_argument("no ultrafilters over the empty set");
  std::vector<PrincipalFilter> out;
  for (int i = 0; i < carrier.size(); ++i)
    if (a >> i & 1u) out.push_back(principal(carrier, 1u << i));
  return out;
}

namespace {

QuantaleValue over_subset(const VFunction& phi, Subset s, bool want_meet) {
  QuantaleValue acc = want_meet ? top(phi.mode) : bottom(phi.mode);
  for (int i = 0; i < phi.carrier.size(); ++i)
    if (s >> i & 1u) acc = want_meet ? vmeet(acc, phi.at(i)) : vjoin(acc, phi.at(i));
  return acc;
}

}  // namespace

QuantaleValue liminf(const SetFamily& f, const VFunction& phi) {
  require_same_carrier(f.carrier, phi.carrier);
  QuantaleValue acc = bottom(phi.mode);
  for (Subset m : f.members) acc = vjoin(acc, over_subset(phi, m, /*want_meet=*/true));
  return acc;
}

QuantaleValue limsup(const SetFamily& f, const VFunction& phi) {
  require_same_carrier(f.carrier, phi.carrier);
  QuantaleValue acc = top(phi.mode);
  for (Subset m : f.members) acc = vmeet(acc, over_subset(phi, m, /*want_meet=*/false));
  return acc;
}

QuantaleValue liminf(const PrincipalFilter& f, const VFunction& phi) {
  require_same_carrier(f.carrier, phi.carrier);
  return over_subset(phi, f.base, /*want_meet=*/true);
}

QuantaleValue limsup(const PrincipalFilter& f, const VFunction& phi) {
  require_same_carrier(f.carrier, phi.carrier);
  return over_subset(phi, f.base, /*want_meet=*/false);
}

}  // namespace apxconv
