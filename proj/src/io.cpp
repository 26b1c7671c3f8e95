#include "hfst/io.hpp"

#include <algorithm>
#include <cctype>
#include <sstream>

namespace hfst {

namespace {

struct Token {
  std::string text;
  int col;
};

struct Line {
  int number;
  std::vector<Token> tokens;
};

std::vector<Line> tokenize(const std::string& text) {
  std::vector<Line> lines;
  std::istringstream in(text);
  std::string raw;
  int number = 0;
  while (std::getline(in, raw)) {
    ++number;
    Line line{number, {}};
    size_t i = 0;
    while (i < raw.size()) {
      if (std::isspace(static_cast<unsigned char>(raw[i]))) { ++i; continue; }
      if (raw[i] == '#') break;
      size_t j = i;
      while (j < raw.size() &&
             !std::isspace(static_cast<unsigned char>(raw[j])))
        ++j;
      line.tokens.push_back({raw.substr(i, j - i), static_cast<int>(i + 1)});
      i = j;
    }
    if (!line.tokens.empty()) lines.push_back(std::move(line));
  }
  return lines;
}

bool valid_name(const std::string& s) {
  if (s.empty()) return false;
  if (!std::isalpha(static_cast<unsigned char>(s[0])) && s[0] != '_')
    return false;
  for (char c : s)
    if (!std::isalnum(static_cast<unsigned char>(c)) && c != '_') return false;
  return true;
}

Alg parse_idem(const Line& line, const Token& tok) {
  if (tok.text == "i0") return Alg::I0;
  if (tok.text == "i1") return Alg::I1;
  throw ParseError(line.number, tok.col, "expected i0 or i1, got '" +
                                             tok.text + "'");
}

int require_gen(const Line& line, const Token& tok, int idx) {
  if (idx < 0)
    throw ParseError(line.number, tok.col, "unknown generator '" + tok.text +
                                               "'");
  return idx;
}

}  // namespace

TypeD parse_typeD(const std::string& text) {
  TypeD t;
  for (const Line& line : tokenize(text)) {
    const auto& tok = line.tokens;
    if (tok[0].text == "gen") {
      if (tok.size() != 3)
        throw ParseError(line.number, tok[0].col, "gen NAME i0|i1");
      if (!valid_name(tok[1].text))
        throw ParseError(line.number, tok[1].col, "bad generator name");
      t.gens.push_back({tok[1].text, parse_idem(line, tok[2])});
    } else if (tok[0].text == "arrow") {
      if (tok.size() != 4)
        throw ParseError(line.number, tok[0].col, "arrow SRC LABEL DST");
      int src = require_gen(line, tok[1], t.find_gen(tok[1].text));
      Alg label;
      if (!alg_from_name(tok[2].text, &label))
        throw ParseError(line.number, tok[2].col,
                         "unknown algebra element '" + tok[2].text + "'");
      int dst = require_gen(line, tok[3], t.find_gen(tok[3].text));
      t.arrows.push_back({src, label, dst});
    } else {
      throw ParseError(line.number, tok[0].col,
                       "expected gen or arrow, got '" + tok[0].text + "'");
    }
  }
  t.canonicalize();
  return t;
}

AInftyMod parse_ainfty(const std::string& text) {
  AInftyMod m;
  bool ring_set = false;
  for (const Line& line : tokenize(text)) {
    const auto& tok = line.tokens;
    if (tok[0].text == "ring") {
      if (tok.size() != 2 || (tok[1].text != "f2" && tok[1].text != "laurent"))
        throw ParseError(line.number, tok[0].col, "ring f2|laurent");
      m.ring = tok[1].text == "f2" ? RingTag::kF2 : RingTag::kLaurent;
      ring_set = true;
    } else if (tok[0].text == "gen") {
      if (tok.size() != 3)
        throw ParseError(line.number, tok[0].col, "gen NAME i0|i1");
      if (!valid_name(tok[1].text))
        throw ParseError(line.number, tok[1].col, "bad generator name");
      m.gens.push_back({tok[1].text, parse_idem(line, tok[2])});
    } else if (tok[0].text == "action") {
      // action SRC [LABEL...] -> COEFF DST
      size_t arrow_pos = 0;
      for (size_t i = 1; i < tok.size(); ++i)
        if (tok[i].text == "->") { arrow_pos = i; break; }
      if (arrow_pos < 2 || tok.size() != arrow_pos + 3)
        throw ParseError(line.number, tok[0].col,
                         "action SRC [LABEL...] -> COEFF DST");
      int src = require_gen(line, tok[1], m.find_gen(tok[1].text));
      std::vector<Alg> inputs;
      for (size_t i = 2; i < arrow_pos; ++i) {
        Alg a;
        if (!alg_from_name(tok[i].text, &a))
          throw ParseError(line.number, tok[i].col,
                           "unknown algebra element '" + tok[i].text + "'");
        inputs.push_back(a);
      }
      LaurentPoly coeff;
      if (!LaurentPoly::parse(tok[arrow_pos + 1].text, &coeff))
        throw ParseError(line.number, tok[arrow_pos + 1].col,
                         "bad coefficient '" + tok[arrow_pos + 1].text + "'");
      int dst = require_gen(line, tok[arrow_pos + 2],
                            m.find_gen(tok[arrow_pos + 2].text));
      m.add_action(src, std::move(inputs), std::move(coeff), dst);
    } else {
      throw ParseError(line.number, tok[0].col,
                       "expected ring, gen or action, got '" + tok[0].text +
                           "'");
    }
  }
  if (!ring_set) {
    for (const auto& [key, terms] : m.actions)
      for (const ATerm& t : terms)
        if (!t.coeff.is_one()) m.ring = RingTag::kLaurent;
  }
  return m;
}

MultiCurve parse_curve(const std::string& text) {
  MultiCurve c;
  for (const Line& line : tokenize(text)) {
    const auto& tok = line.tokens;
    CurveComponent comp;
    comp.word = tok[0].text;
    for (size_t i = 0; i < comp.word.size(); ++i) {
      char ch = comp.word[i];
      if (ch != 'l' && ch != 'L' && ch != 'm' && ch != 'M')
        throw ParseError(line.number, tok[0].col + static_cast<int>(i),
                         std::string("bad curve letter '") + ch + "'");
    }
    if (tok.size() > 2)
      throw ParseError(line.number, tok[2].col, "unexpected token");
    if (tok.size() == 2) {
      if (tok[1].text != "@z")
        throw ParseError(line.number, tok[1].col, "expected @z");
      comp.through_basepoint = true;
    }
    std::string reduced = cyclic_reduce(comp.word);
    if (reduced.empty())
      throw ParseError(line.number, tok[0].col,
                       "word reduces to the trivial loop");
    comp.word = reduced;
    c.components.push_back(std::move(comp));
  }
  return c;
}

SeifertData parse_seifert(const std::string& text) {
  auto lines = tokenize(text);
  if (lines.empty()) throw ParseError(1, 1, "empty seifert document");
  // Re-join tokens: the grammar is "base=...; cones=..." on one line, but
  // allow whitespace around the pieces.
  if (lines.size() > 1)
    throw ParseError(lines[1].number, lines[1].tokens[0].col,
                     "seifert data fits on one line");
  std::string joined;
  for (const Token& t : lines[0].tokens) joined += t.text;
  int ln = lines[0].number;
  auto semi = joined.find(';');
  if (semi == std::string::npos) throw ParseError(ln, 1, "expected ';'");
  std::string base_part = joined.substr(0, semi);
  std::string cones_part = joined.substr(semi + 1);
  SeifertData d;
  if (base_part == "base=disk")
    d.base = BaseSurface::kDisk;
  else if (base_part == "base=mobius")
    d.base = BaseSurface::kMobius;
  else
    throw ParseError(ln, 1, "expected base=disk or base=mobius");
  if (cones_part.rfind("cones=", 0) != 0)
    throw ParseError(ln, static_cast<int>(semi + 2), "expected cones=...");
  std::string list = cones_part.substr(6);
  size_t pos = 0;
  while (pos < list.size()) {
    size_t comma = list.find(',', pos);
    std::string item =
        list.substr(pos, comma == std::string::npos ? comma : comma - pos);
    pos = comma == std::string::npos ? list.size() : comma + 1;
    if (item.empty()) throw ParseError(ln, 1, "empty cone entry");
    long long num = 0, den = 1;
    auto slash = item.find('/');
    try {
      size_t used = 0;
      num = std::stoll(item.substr(0, slash), &used);
      if (used != (slash == std::string::npos ? item.size() : slash))
        throw std::invalid_argument("");
      if (slash != std::string::npos) {
        den = std::stoll(item.substr(slash + 1), &used);
        if (used != item.size() - slash - 1) throw std::invalid_argument("");
      }
    } catch (...) {
      throw ParseError(ln, 1, "bad cone rational '" + item + "'");
    }
    if (den < 1) throw ParseError(ln, 1, "cone order must be >= 1");
    d.cone_points.push_back(Rational::make(num, den));
  }
  return d;
}

DocKind detect_kind(const std::string& text) {
  for (const Line& line : tokenize(text)) {
    const std::string& head = line.tokens[0].text;
    if (head.rfind("base=", 0) == 0) return DocKind::kSeifert;
    if (head == "ring" || head == "action") return DocKind::kAinfty;
    if (head == "arrow") return DocKind::kTypeD;
    if (head == "gen") continue;  // typed unless an action shows up later
    return DocKind::kCurve;
  }
  return DocKind::kTypeD;
}

InputDocument parse_document(const std::string& text) {
  InputDocument doc;
  doc.kind = detect_kind(text);
  switch (doc.kind) {
    case DocKind::kTypeD: doc.body = parse_typeD(text); break;
    case DocKind::kAinfty: doc.body = parse_ainfty(text); break;
    case DocKind::kCurve: doc.body = parse_curve(text); break;
    case DocKind::kSeifert: doc.body = parse_seifert(text); break;
  }
  return doc;
}

std::string print_typeD(const TypeD& t) {
  TypeD c = t;
  c.canonicalize();
  std::string out;
  for (const DGen& g : c.gens)
    out += "gen " + g.name + " " + alg_name(g.idem) + "\n";
  for (const DArrow& a : c.arrows)
    out += "arrow " + c.gens[a.src].name + " " + alg_name(a.label) + " " +
           c.gens[a.dst].name + "\n";
  return out;
}

std::string print_ainfty(const AInftyMod& m) {
  std::string out =
      std::string("ring ") + (m.ring == RingTag::kF2 ? "f2" : "laurent") + "\n";
  for (const AGen& g : m.gens)
    out += "gen " + g.name + " " + alg_name(g.idem) + "\n";
  for (const auto& [key, terms] : m.actions) {
    for (const ATerm& t : terms) {
      out += "action " + m.gens[key.first].name;
      for (Alg a : key.second) out += std::string(" ") + alg_name(a);
      out += " -> " + t.coeff.to_string() + " " + m.gens[t.gen].name + "\n";
    }
  }
  return out;
}

std::string print_curve(const MultiCurve& c) {
  std::string out;
  for (const CurveComponent& comp : c.components) {
    out += cyclic_reduce(comp.word);
    if (comp.through_basepoint) out += " @z";
    out += "\n";
  }
  return out;
}

std::string print_seifert(const SeifertData& d) {
  std::string out =
      std::string("base=") + (d.base == BaseSurface::kDisk ? "disk" : "mobius") +
      "; cones=";
  for (size_t i = 0; i < d.cone_points.size(); ++i) {
    if (i) out += ",";
    out += d.cone_points[i].to_string();
  }
  out += "\n";
  return out;
}

std::string print_document(const InputDocument& doc) {
  switch (doc.kind) {
    case DocKind::kTypeD: return print_typeD(std::get<TypeD>(doc.body));
    case DocKind::kAinfty: return print_ainfty(std::get<AInftyMod>(doc.body));
    case DocKind::kCurve: return print_curve(std::get<MultiCurve>(doc.body));
    case DocKind::kSeifert:
      return print_seifert(std::get<SeifertData>(doc.body));
  }
  return "";
}

ValidityReport validate_document(const InputDocument& doc) {
  switch (doc.kind) {
    case DocKind::kTypeD: return check_typeD(std::get<TypeD>(doc.body));
    case DocKind::kAinfty: return check_ainfty(std::get<AInftyMod>(doc.body));
    case DocKind::kCurve: return check_curve(std::get<MultiCurve>(doc.body));
    case DocKind::kSeifert: {
      const auto& d = std::get<SeifertData>(doc.body);
      for (const Rational& r : d.cone_points)
        if (r.den < 1) return {false, "cone order must be >= 1"};
      return {};
    }
  }
  return {};
}

}  // namespace hfst
