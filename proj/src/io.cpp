#include "apxconv/io.hpp"

#include <bit>
#include <fstream>
#include <map>
#include <optional>
#include <sstream>

namespace apxconv {

namespace {

std::string strip(const std::string& line) {
  std::string s = line.substr(0, line.find('#'));
  const auto b = s.find_first_not_of(" \t\r");
  if (b == std::string::npos) return "";
  const auto e = s.find_last_not_of(" \t\r");
  return s.substr(b, e - b + 1);
}

std::vector<std::string> split_ws(const std::string& s) {
  std::istringstream is(s);
  std::vector<std::string> out;
  std::string tok;
  while (is >> tok) out.push_back(tok);
  return out;
}

std::string read_file(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw std::runtime_error("cannot open '" + path + "'");
  std::ostringstream os;
  os << in.rdbuf();
  return os.str();
}

struct Assignment {
  int point;
  QuantaleValue value;
};

std::vector<Assignment> parse_assignments(const std::vector<std::string>& toks,
                                          const Carrier& carrier, const QuantaleMode& mode,
                                          int line_no) {
  std::vector<Assignment> out;
  std::vector<bool> seen(carrier.names.size(), false);
  for (const auto& tok : toks) {
    const auto eq = tok.find('=');
    if (eq == std::string::npos || eq == 0 || eq + 1 == tok.size())
      throw ParseError(line_no, "expected point=value, got '" + tok + "'");
    int idx;
    QuantaleValue v{mode, Rational(0)};
    try {
      idx = carrier.index(tok.substr(0, eq));
      v = parse_value(mode, tok.substr(eq + 1));
    } catch (const std::invalid_argument& e) {
      throw ParseError(line_no, e.what());
    }
    if (seen[static_cast<size_t>(idx)])
      throw ParseError(line_no, "point assigned twice: '" + tok.substr(0, eq) + "'");
    seen[static_cast<size_t>(idx)] = true;
    out.push_back({idx, v});
  }
  return out;
}

}  // namespace

NamedSpace parse_space(const std::string& text) {
  std::istringstream in(text);
  std::string raw;
  int line_no = 0;

  std::optional<std::string> name;
  std::optional<QuantaleMode> mode;
  std::optional<Carrier> carrier;
  std::map<Subset, std::vector<Assignment>> rows;

  while (std::getline(in, raw)) {
    ++line_no;
    const std::string line = strip(raw);
    if (line.empty()) continue;
    const auto toks = split_ws(line);
    const std::string& kw = toks[0];

    if (kw == "space") {
      if (name) throw ParseError(line_no, "duplicate space line");
      if (toks.size() != 2) throw ParseError(line_no, "expected: space <name>");
      name = toks[1];
    } else if (kw == "mode") {
      if (mode) throw ParseError(line_no, "duplicate mode line");
      if (toks.size() == 2 && toks[1] == "unit-rational") {
        mode = QuantaleMode::unit_rational();
      } else if (toks.size() == 3 && toks[1] == "lukasiewicz") {
        try {
          mode = QuantaleMode::lukasiewicz(std::stoi(toks[2]));
        } catch (const std::logic_error&) {
          throw ParseError(line_no, "bad chain size '" + toks[2] + "'");
        }
      } else {
        throw ParseError(line_no, "expected: mode unit-rational | mode lukasiewicz <n>");
      }
    } else if (kw == "points") {
      if (carrier) throw ParseError(line_no, "duplicate points line");
      try {
        carrier = make_carrier({toks.begin() + 1, toks.end()});
      } catch (const std::invalid_argument& e) {
        throw ParseError(line_no, e.what());
      }
    } else if (kw == "lambda") {
      if (!mode || !carrier)
        throw ParseError(line_no, "lambda rows must follow mode and points");
      const auto colon = line.find(':');
      if (colon == std::string::npos) throw ParseError(line_no, "missing ':' in lambda row");
      Subset b;
      try {
        b = parse_subset(*carrier, line.substr(6, colon - 6));
      } catch (const std::invalid_argument& e) {
        throw ParseError(line_no, e.what());
      }
      if (b == 0) throw ParseError(line_no, "lambda row needs a nonempty subset");
      if (rows.count(b))
        throw ParseError(line_no, "duplicate row " + carrier->subset_to_string(b));
      rows[b] = parse_assignments(split_ws(line.substr(colon + 1)), *carrier, *mode, line_no);
    } else {
      throw ParseError(line_no, "unknown directive '" + kw + "'");
    }
  }

  if (!name) throw ParseError(line_no, "missing space line");
  if (!mode) throw ParseError(line_no, "missing mode line");
  if (!carrier) throw ParseError(line_no, "missing points line");

  const int n = carrier->size();
  // Singleton rows first: they seed the completion of the omitted rows.
  std::vector<QuantaleValue> singles(static_cast<size_t>(n) * static_cast<size_t>(n),
                                     bottom(*mode));
  for (int y = 0; y < n; ++y) {
    singles[static_cast<size_t>(y * n + y)] = top(*mode);
    // The diagonal default above survives unless assigned explicitly.
    if (auto it = rows.find(1u << y); it != rows.end())
      for (const auto& a : it->second)
        singles[static_cast<size_t>(a.point * n + y)] = a.value;
  }
  std::vector<QuantaleValue> table;
  for (Subset b = 1; b <= carrier->full(); ++b) {
    if (std::popcount(b) == 1) {
      const int y = std::countr_zero(b);
      for (int x = 0; x < n; ++x) table.push_back(singles[static_cast<size_t>(x * n + y)]);
    } else if (auto it = rows.find(b); it != rows.end()) {
      std::vector<QuantaleValue> row(static_cast<size_t>(n), bottom(*mode));
      for (const auto& a : it->second) row[static_cast<size_t>(a.point)] = a.value;
      table.insert(table.end(), row.begin(), row.end());
    } else {
      for (int x = 0; x < n; ++x) {
        QuantaleValue acc = top(*mode);
        for (int y = 0; y < n; ++y)
          if (b >> y & 1u) acc = vmeet(acc, singles[static_cast<size_t>(x * n + y)]);
        table.push_back(acc);
      }
    }
  }
  return NamedSpace{*name, make_cap_space(*carrier, *mode, std::move(table))};
}

NamedSpace load_space(const std::string& path) { return parse_space(read_file(path)); }

std::string serialize_space(const NamedSpace& s, SerializeStyle style) {
  const CapSpace& sp = s.space;
  const int n = sp.carrier.size();
  std::ostringstream os;
  os << "space " << s.name << '\n';
  os << "mode " << to_string(sp.mode) << '\n';
  os << "points";
  for (const auto& p : sp.carrier.names) os << ' ' << p;
  os << '\n';

  const QuantaleValue bot = bottom(sp.mode);
  const QuantaleValue topv = top(sp.mode);
  const CapSpace completion = from_singleton_rows(sp.carrier, sp.mode, singleton_matrix(sp));

  for (Subset b = 1; b <= sp.carrier.full(); ++b) {
    const bool single = std::popcount(b) == 1;
    const int diag = single ? std::countr_zero(b) : -1;
    bool emit = style == SerializeStyle::Full;
    if (!emit) {
      for (int x = 0; x < n && !emit; ++x) {
        const QuantaleValue& v = sp.at(b, x);
        if (single)
          emit = x == diag ? !(v == topv) : !(v == bot);
        else
          emit = !(v == completion.at(b, x));
      }
    }
    if (!emit) continue;
    os << "lambda " << sp.carrier.subset_to_string(b) << " :";
    for (int x = 0; x < n; ++x) {
      const QuantaleValue& v = sp.at(b, x);
      if (style == SerializeStyle::Terse && !single && v == bot) continue;
      if (style == SerializeStyle::Terse && single && x != diag && v == bot) continue;
      if (style == SerializeStyle::Terse && single && x == diag && v == topv) continue;
      os << ' ' << sp.carrier.names[static_cast<size_t>(x)] << '=' << to_string(v);
    }
    os << '\n';
  }
  return os.str();
}

VFunction parse_vfunction(const std::string& text, const Carrier& carrier,
                          const QuantaleMode& mode) {
  std::istringstream in(text);
  std::string raw;
  int line_no = 0;
  std::vector<std::string> toks;
  while (std::getline(in, raw)) {
    ++line_no;
    const std::string line = strip(raw);
    if (line.empty()) continue;
    for (const auto& t : split_ws(line)) toks.push_back(t);
  }
  VFunction out = constant_fn(carrier, bottom(mode));
  for (const auto& a : parse_assignments(toks, carrier, mode, line_no))
    out.values[static_cast<size_t>(a.point)] = a.value;
  return out;
}

VFunction load_vfunction(const std::string& path, const Carrier& carrier,
                         const QuantaleMode& mode) {
  return parse_vfunction(read_file(path), carrier, mode);
}

PointMap parse_pointmap(const std::string& text, const Carrier& dom, const Carrier& cod) {
  std::istringstream in(text);
  std::string raw;
  int line_no = 0;
  std::vector<int> img(dom.names.size(), -1);
  while (std::getline(in, raw)) {
    ++line_no;
    const std::string line = strip(raw);
    if (line.empty()) continue;
    const auto arrow = line.find("->");
    if (arrow == std::string::npos) throw ParseError(line_no, "expected: <x> -> <y>");
    const auto from_toks = split_ws(line.substr(0, arrow));
    const auto to_toks = split_ws(line.substr(arrow + 2));
    if (from_toks.size() != 1 || to_toks.size() != 1)
      throw ParseError(line_no, "expected: <x> -> <y>");
    try {
      const int i = dom.index(from_toks[0]);
      if (img[static_cast<size_t>(i)] != -1)
        throw ParseError(line_no, "point mapped twice: '" + from_toks[0] + "'");
      img[static_cast<size_t>(i)] = cod.index(to_toks[0]);
    } catch (const std::invalid_argument& e) {
      throw ParseError(line_no, e.what());
    }
  }
  for (size_t i = 0; i < img.size(); ++i)
    if (img[i] == -1)
      throw ParseError(line_no, "point not mapped: '" + dom.names[i] + "'");
  return make_point_map(dom, cod, std::move(img));
}

PointMap load_pointmap(const std::string& path, const Carrier& dom, const Carrier& cod) {
  return parse_pointmap(read_file(path), dom, cod);
}

}  // namespace apxconv
