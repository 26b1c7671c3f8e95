// Text formats.  All four document kinds are line oriented; blank lines and
// '#' comments are skipped.
//
//   typed:    gen NAME i0|i1
//             arrow SRC LABEL DST          LABEL in r1 r2 r3 r12 r23 r123
//   ainfty:   ring f2|laurent              (optional; default f2)
//             gen NAME i0|i1
//             action SRC [LABEL...] -> COEFF DST    COEFF like 1, t, t^-2
//   curve:    one cyclic word per line over l,L,m,M (capitals = inverses),
//             optionally followed by @z for the through-basepoint component
//   seifert:  base=disk|mobius; cones=b1/a1,b2/a2,...
//
// parse followed by print is the identity on canonical form.
#pragma once

#include <stdexcept>
#include <string>
#include <variant>

#include "hfst/ainfty.hpp"
#include "hfst/curves.hpp"
#include "hfst/seifert.hpp"
#include "hfst/typed.hpp"

namespace hfst {

struct ParseError : std::runtime_error {
  ParseError(int line, int col, const std::string& what)
      : std::runtime_error(std::to_string(line) + ":" + std::to_string(col) +
                           ": " + what),
        line(line),
        col(col) {}
  int line;
  int col;
};

enum class DocKind { kTypeD, kAinfty, kCurve, kSeifert };

struct InputDocument {
  DocKind kind = DocKind::kTypeD;
  std::variant<TypeD, AInftyMod, MultiCurve, SeifertData> body;
};

DocKind detect_kind(const std::string& text);

TypeD parse_typeD(const std::string& text);
AInftyMod parse_ainfty(const std::string& text);
MultiCurve parse_curve(const std::string& text);
SeifertData parse_seifert(const std::string& text);

InputDocument parse_document(const std::string& text);

std::string print_typeD(const TypeD& t);
std::string print_ainfty(const AInftyMod& m);
std::string print_curve(const MultiCurve& c);
std::string print_seifert(const SeifertData& d);
std::string print_document(const InputDocument& doc);

// Runs the kind-appropriate validity checks (structure equation and
// A-infinity relations included).
ValidityReport validate_document(const InputDocument& doc);

}  // namespace hfst
