#pragma once

#include "apxconv/cap.hpp"

namespace apxconv {

/// Parse failure with a 1-based line number baked into what().
struct ParseError : std::runtime_error {
  ParseError(int line, const std::string& msg)
      : std::runtime_error("line " + std::to_string(line) + ": " + msg), line(line) {}
  int line;
};

struct NamedSpace {
  std::string name;
  CapSpace space;
};

/// Space file format (UTF-8, line oriented, '#' starts a comment):
///
///   space K3
///   mode lukasiewicz 8        (or: mode unit-rational)
///   points p q r
///   lambda {q} : p=2 q=0
///
/// Rows are rows of the principal-filter table. Omitted points of a present
/// row default to bottom, except the diagonal entry of a singleton row,
/// which defaults to top. Omitted singleton rows are fully default; omitted
/// non-singleton rows default to the pre-approach completion (meet of the
/// singleton rows). Values are "p/q" rationals in unit-rational mode and
/// decimal integers (alias "inf" for the chain bottom) in lukasiewicz mode.
///
/// Syntax problems throw ParseError; the table axioms are NOT checked here
/// (run validate on the result).
NamedSpace parse_space(const std::string& text);
NamedSpace load_space(const std::string& path);

enum class SerializeStyle {
  Full,   // every row, every entry
  Terse,  // only entries and rows that differ from the defaults
};

std::string serialize_space(const NamedSpace& s, SerializeStyle style);

/// Function file: whitespace-separated "point=value" tokens, one or many per
/// line; omitted points default to bottom.
VFunction parse_vfunction(const std::string& text, const Carrier& carrier,
                          const QuantaleMode& mode);
VFunction load_vfunction(const std::string& path, const Carrier& carrier,
                         const QuantaleMode& mode);

/// Map file: one "x -> y" line per domain point; the map must be total.
PointMap parse_pointmap(const std::string& text, const Carrier& dom, const Carrier& cod);
PointMap load_pointmap(const std::string& path, const Carrier& dom, const Carrier& cod);

}  // namespace apxconv
