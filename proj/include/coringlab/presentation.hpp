#pragma once

#include <cstdint>
#include <map>
#include <optional>
#include <set>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

#include "coringlab/algebra.hpp"
#include "coringlab/bimodule.hpp"
#include "coringlab/coring.hpp"
#include "coringlab/extension.hpp"
#include "coringlab/linalg.hpp"
#include "coringlab/scalar.hpp"

namespace coringlab {

/// Where and why a document was rejected. Syntax covers malformed tokens and
/// unknown keywords; Semantic covers well-formed text whose content is wrong
/// (bad dimensions, duplicate names, failed axioms).
struct Diagnostic {
  enum class Kind { Syntax, Semantic };
  Kind kind = Kind::Syntax;
  int line = 0;
  int column = 0;
  std::string message;

  std::string render() const {
    std::string out = std::to_string(line) + ":" + std::to_string(column) + ": ";
    out += kind == Kind::Syntax ? "syntax: " : "semantic: ";
    out += message;
    return out;
  }
};

struct FieldSpec {
  bool primeField = false;
  std::uint64_t modulus = 0;  // meaningful only when primeField

  friend bool operator==(const FieldSpec&, const FieldSpec&) = default;
};

/// Declarations keep their source line for later diagnostics; equality
/// deliberately ignores it so a reprinted document compares equal.
struct PresAlgebra {
  std::string name;
  Index dim = 0;
  std::vector<Rational> unit;
  std::vector<std::vector<Rational>> product;  // row i*dim+j holds e_i e_j
  int line = 0;

  friend bool operator==(const PresAlgebra& a, const PresAlgebra& b) {
    return a.name == b.name && a.dim == b.dim && a.unit == b.unit && a.product == b.product;
  }
};

struct PresMatrix {
  std::string name;
  Index rows = 0;
  Index cols = 0;
  std::vector<std::vector<Rational>> entries;
  int line = 0;

  friend bool operator==(const PresMatrix& a, const PresMatrix& b) {
    return a.name == b.name && a.rows == b.rows && a.cols == b.cols && a.entries == b.entries;
  }
};

struct PresBimodule {
  std::string name;
  std::string leftAlgebra;
  std::string rightAlgebra;
  Index dim = 0;
  // One entry per declared action block, in declaration order.
  std::vector<std::pair<Index, std::vector<std::vector<Rational>>>> leftActs;
  std::vector<std::pair<Index, std::vector<std::vector<Rational>>>> rightActs;
  int line = 0;

  friend bool operator==(const PresBimodule& a, const PresBimodule& b) {
    return a.name == b.name && a.leftAlgebra == b.leftAlgebra &&
           a.rightAlgebra == b.rightAlgebra && a.dim == b.dim && a.leftActs == b.leftActs &&
           a.rightActs == b.rightActs;
  }
};

struct PresExtension {
  std::string name;
  std::string base;
  std::string total;
  std::vector<std::vector<Rational>> iota;
  std::optional<std::vector<std::vector<Rational>>> expectation;
  int line = 0;

  friend bool operator==(const PresExtension& a, const PresExtension& b) {
    return a.name == b.name && a.base == b.base && a.total == b.total && a.iota == b.iota &&
           a.expectation == b.expectation;
  }
};

struct PresCoring {
  std::string name;
  std::string carrier;
  // Coproduct rows live in the plain tensor square of the carrier with basis
  // pair (u, v) at position u*dim + v; the class in the tensor product over
  // the algebra is taken on instantiation, so any representative is legal.
  std::vector<std::vector<Rational>> coproduct;
  std::optional<std::vector<std::vector<Rational>>> counit;
  int line = 0;

  friend bool operator==(const PresCoring& a, const PresCoring& b) {
    return a.name == b.name && a.carrier == b.carrier && a.coproduct == b.coproduct &&
           a.counit == b.counit;
  }
};

struct PresElement {
  std::string name;
  std::vector<Rational> values;
  int line = 0;

  friend bool operator==(const PresElement& a, const PresElement& b) {
    return a.name == b.name && a.values == b.values;
  }
};

struct Presentation {
  FieldSpec field;
  std::vector<PresAlgebra> algebras;
  std::vector<PresMatrix> matrices;
  std::vector<PresBimodule> bimodules;
  std::vector<PresExtension> extensions;
  std::vector<PresCoring> corings;
  std::vector<PresElement> elements;

  friend bool operator==(const Presentation&, const Presentation&) = default;
};

struct ParseResult {
  std::optional<Presentation> presentation;
  std::vector<Diagnostic> diagnostics;  // empty exactly when presentation is set
};

namespace detail {

constexpr Index kMaxDim = 64;
constexpr Index kMaxMatrixSide = 4096;

inline bool isKeyword(std::string_view s) {
  static const std::set<std::string, std::less<>> kw = {
      "field",  "q",       "fp",        "algebra", "matrix", "bimodule", "extension",
      "coring", "element", "dim",       "rows",    "cols",   "left",     "right",
      "base",   "total",   "carrier",   "unit",    "product", "row",     "leftact",
      "rightact", "iota",  "expectation", "coproduct", "counit", "size",  "end"};
  return kw.contains(s);
}

inline bool isIdentifier(std::string_view s) {
  if (s.empty()) return false;
  auto alpha = [](char c) { return (c >= 'a' && c <= 'z') || (c >= 'A' && c <= 'Z') || c == '_'; };
  auto digit = [](char c) { return c >= '0' && c <= '9'; };
  if (!alpha(s[0])) return false;
  for (char c : s.substr(1)) {
    if (!alpha(c) && !digit(c)) return false;
  }
  return true;
}

struct Token {
  std::string text;
  int column = 0;  // 1-based
};

struct Line {
  int number = 0;  // 1-based
  std::vector<Token> tokens;
};

inline std::vector<Line> tokenize(std::string_view text) {
  std::vector<Line> lines;
  int number = 0;
  std::size_t pos = 0;
  while (pos <= text.size()) {
    std::size_t eol = text.find('\n', pos);
    std::string_view raw = text.substr(pos, eol == std::string_view::npos ? std::string_view::npos
                                                                          : eol - pos);
    ++number;
    std::size_t hash = raw.find('#');
    if (hash != std::string_view::npos) raw = raw.substr(0, hash);
    Line line;
    line.number = number;
    std::size_t i = 0;
    while (i < raw.size()) {
      if (raw[i] == ' ' || raw[i] == '\t' || raw[i] == '\r') {
        ++i;
        continue;
      }
      std::size_t start = i;
      while (i < raw.size() && raw[i] != ' ' && raw[i] != '\t' && raw[i] != '\r') ++i;
      line.tokens.push_back(Token{std::string(raw.substr(start, i - start)),
                                  static_cast<int>(start) + 1});
    }
    if (!line.tokens.empty()) lines.push_back(std::move(line));
    if (eol == std::string_view::npos) break;
    pos = eol + 1;
  }
  return lines;
}

/// Thrown internally to unwind to parsePresentation after the first
/// diagnostic; never escapes this header.
struct ParseAbort {};

class Parser {
 public:
  explicit Parser(std::string_view text) : lines_(tokenize(text)) {}

  ParseResult run() {
    ParseResult out;
    try {
      parseDocument();
    } catch (const ParseAbort&) {
      out.diagnostics.push_back(diagnostic_);
      return out;
    }
    out.presentation = std::move(pres_);
    return out;
  }

 private:
  std::vector<Line> lines_;
  std::size_t at_ = 0;
  Presentation pres_;
  Diagnostic diagnostic_;
  bool sawField_ = false;

  [[noreturn]] void fail(Diagnostic::Kind kind, int line, int column, std::string message) {
    diagnostic_ = Diagnostic{kind, line, column, std::move(message)};
    throw ParseAbort{};
  }

  [[noreturn]] void failAt(Diagnostic::Kind kind, const Line& line, const Token& tok,
                           std::string message) {
    fail(kind, line.number, tok.column, std::move(message));
  }

  bool done() const { return at_ >= lines_.size(); }
  const Line& current() const { return lines_[at_]; }

  const Line& expectLine(std::string_view context) {
    if (done()) {
      int last = lines_.empty() ? 1 : lines_.back().number;
      fail(Diagnostic::Kind::Syntax, last, 1,
           "unexpected end of file inside " + std::string(context));
    }
    return lines_[at_];
  }

  const Token& tokenAt(const Line& line, std::size_t idx, std::string_view what) {
    if (idx >= line.tokens.size()) {
      int col = line.tokens.empty() ? 1
                                    : line.tokens.back().column +
                                          static_cast<int>(line.tokens.back().text.size());
      fail(Diagnostic::Kind::Syntax, line.number, col, "expected " + std::string(what));
    }
    return line.tokens[idx];
  }

  void expectTokenCount(const Line& line, std::size_t count) {
    if (line.tokens.size() > count) {
      failAt(Diagnostic::Kind::Syntax, line, line.tokens[count], "unexpected trailing token");
    }
  }

  std::string expectName(const Line& line, std::size_t idx) {
    const Token& t = tokenAt(line, idx, "a name");
    if (!isIdentifier(t.text) || isKeyword(t.text)) {
      failAt(Diagnostic::Kind::Syntax, line, t, "expected a name, got '" + t.text + "'");
    }
    return t.text;
  }

  void expectKeyword(const Line& line, std::size_t idx, std::string_view word) {
    const Token& t = tokenAt(line, idx, "'" + std::string(word) + "'");
    if (t.text != word) {
      failAt(Diagnostic::Kind::Syntax, line, t,
             "expected '" + std::string(word) + "', got '" + t.text + "'");
    }
  }

  Index expectCount(const Line& line, std::size_t idx, std::string_view what, Index cap) {
    const Token& t = tokenAt(line, idx, what);
    Index value = 0;
    if (t.text.empty() || t.text.size() > 12) {
      failAt(Diagnostic::Kind::Syntax, line, t, "expected " + std::string(what));
    }
    for (char c : t.text) {
      if (c < '0' || c > '9') {
        failAt(Diagnostic::Kind::Syntax, line, t,
               "expected " + std::string(what) + ", got '" + t.text + "'");
      }
      value = value * 10 + (c - '0');
    }
    if (value > cap) {
      failAt(Diagnostic::Kind::Semantic, line, t,
             std::string(what) + " " + t.text + " is over the cap " + std::to_string(cap));
    }
    return value;
  }

  Rational expectNumber(const Line& line, const Token& t) {
    std::string_view s = t.text;
    bool negative = false;
    if (!s.empty() && s[0] == '-') {
      negative = true;
      s.remove_prefix(1);
    }
    std::size_t slash = s.find('/');
    std::string_view numPart = slash == std::string_view::npos ? s : s.substr(0, slash);
    std::string_view denPart = slash == std::string_view::npos ? "1" : s.substr(slash + 1);
    auto digits = [](std::string_view d) {
      if (d.empty()) return false;
      for (char c : d) {
        if (c < '0' || c > '9') return false;
      }
      return true;
    };
    if (!digits(numPart) || !digits(denPart)) {
      failAt(Diagnostic::Kind::Syntax, line, t, "expected a number, got '" + t.text + "'");
    }
    Int num{std::string(numPart)};
    Int den{std::string(denPart)};
    if (den == 0) {
      failAt(Diagnostic::Kind::Semantic, line, t, "zero denominator");
    }
    if (negative) num = -num;
    return Rational::fromParts(num, den);
  }

  std::vector<Rational> expectNumbers(const Line& line, std::size_t from, Index count,
                                      std::string_view what) {
    if (line.tokens.size() - from != static_cast<std::size_t>(count)) {
      const Token& anchor = line.tokens[from > 0 && from - 1 < line.tokens.size() ? from - 1 : 0];
      failAt(Diagnostic::Kind::Semantic, line, anchor,
             std::string(what) + " needs " + std::to_string(count) + " entries, got " +
                 std::to_string(line.tokens.size() - from));
    }
    std::vector<Rational> out;
    out.reserve(static_cast<std::size_t>(count));
    for (std::size_t i = from; i < line.tokens.size(); ++i) {
      out.push_back(expectNumber(line, line.tokens[i]));
    }
    return out;
  }

  /// Collects `row ...` lines until a line that starts differently; entry
  /// counts per row are checked by the caller when it knows the width.
  std::vector<std::vector<Rational>> collectRows(std::optional<Index> width,
                                                 std::string_view what) {
    std::vector<std::vector<Rational>> rows;
    while (!done() && !current().tokens.empty() && current().tokens[0].text == "row") {
      const Line& line = current();
      if (width) {
        rows.push_back(expectNumbers(line, 1, *width, what));
      } else {
        std::vector<Rational> row;
        for (std::size_t i = 1; i < line.tokens.size(); ++i) {
          row.push_back(expectNumber(line, line.tokens[i]));
        }
        if (row.empty()) {
          failAt(Diagnostic::Kind::Syntax, line, line.tokens[0], "row has no entries");
        }
        rows.push_back(std::move(row));
      }
      ++at_;
    }
    return rows;
  }

  void parseDocument() {
    while (!done()) {
      const Line& line = current();
      const Token& head = line.tokens[0];
      if (head.text == "field") {
        parseField();
      } else if (head.text == "algebra") {
        parseAlgebra();
      } else if (head.text == "matrix") {
        parseMatrix();
      } else if (head.text == "bimodule") {
        parseBimodule();
      } else if (head.text == "extension") {
        parseExtension();
      } else if (head.text == "coring") {
        parseCoring();
      } else if (head.text == "element") {
        parseElement();
      } else {
        failAt(Diagnostic::Kind::Syntax, line, head,
               "expected a declaration, got '" + head.text + "'");
      }
    }
    if (!sawField_) {
      fail(Diagnostic::Kind::Semantic, 1, 1, "the document never declares its field");
    }
  }

  void parseField() {
    const Line& line = current();
    if (sawField_) {
      failAt(Diagnostic::Kind::Semantic, line, line.tokens[0], "field declared twice");
    }
    const Token& kind = tokenAt(line, 1, "'q' or 'fp'");
    if (kind.text == "q") {
      expectTokenCount(line, 2);
      pres_.field = FieldSpec{false, 0};
    } else if (kind.text == "fp") {
      const Token& mod = tokenAt(line, 2, "a modulus");
      std::uint64_t p = 0;
      if (mod.text.empty() || mod.text.size() > 10) {
        failAt(Diagnostic::Kind::Syntax, line, mod, "expected a modulus");
      }
      for (char c : mod.text) {
        if (c < '0' || c > '9') {
          failAt(Diagnostic::Kind::Syntax, line, mod, "expected a modulus, got '" + mod.text + "'");
        }
        p = p * 10 + static_cast<std::uint64_t>(c - '0');
      }
      expectTokenCount(line, 3);
      pres_.field = FieldSpec{true, p};
    } else {
      failAt(Diagnostic::Kind::Syntax, line, kind, "expected 'q' or 'fp', got '" + kind.text + "'");
    }
    sawField_ = true;
    ++at_;
  }

  void expectEnd(std::string_view context) {
    const Line& line = expectLine(context);
    const Token& head = line.tokens[0];
    if (head.text != "end") {
      failAt(Diagnostic::Kind::Syntax, line, head,
             "expected 'end' of " + std::string(context) + ", got '" + head.text + "'");
    }
    expectTokenCount(line, 1);
    ++at_;
  }

  void parseAlgebra() {
    const Line& header = current();
    PresAlgebra a;
    a.line = header.number;
    a.name = expectName(header, 1);
    expectKeyword(header, 2, "dim");
    a.dim = expectCount(header, 3, "dimension", kMaxDim);
    expectTokenCount(header, 4);
    ++at_;

    const Line& unitLine = expectLine("algebra " + a.name);
    expectKeyword(unitLine, 0, "unit");
    a.unit = expectNumbers(unitLine, 1, a.dim, "unit");
    ++at_;

    a.product.assign(static_cast<std::size_t>(a.dim * a.dim), std::vector<Rational>{});
    std::vector<bool> seen(static_cast<std::size_t>(a.dim * a.dim), false);
    while (true) {
      const Line& line = expectLine("algebra " + a.name);
      if (line.tokens[0].text != "product") break;
      Index i = expectCount(line, 1, "factor index", a.dim == 0 ? 0 : a.dim - 1);
      Index j = expectCount(line, 2, "factor index", a.dim == 0 ? 0 : a.dim - 1);
      expectKeyword(line, 3, ":");
      std::size_t slot = static_cast<std::size_t>(i * a.dim + j);
      if (seen[slot]) {
        failAt(Diagnostic::Kind::Semantic, line, line.tokens[1],
               "product " + std::to_string(i) + " " + std::to_string(j) + " declared twice");
      }
      seen[slot] = true;
      a.product[slot] = expectNumbers(line, 4, a.dim, "product");
      ++at_;
    }
    for (std::size_t s = 0; s < seen.size(); ++s) {
      if (!seen[s]) {
        fail(Diagnostic::Kind::Semantic, header.number, header.tokens[0].column,
             "algebra " + a.name + " is missing product " + std::to_string(s / a.dim) + " " +
                 std::to_string(s % a.dim));
      }
    }
    expectEnd("algebra " + a.name);
    pres_.algebras.push_back(std::move(a));
  }

  void parseMatrix() {
    const Line& header = current();
    PresMatrix m;
    m.line = header.number;
    m.name = expectName(header, 1);
    expectKeyword(header, 2, "rows");
    m.rows = expectCount(header, 3, "row count", kMaxMatrixSide);
    expectKeyword(header, 4, "cols");
    m.cols = expectCount(header, 5, "column count", kMaxMatrixSide);
    expectTokenCount(header, 6);
    ++at_;
    m.entries = collectRows(m.cols, "matrix row");
    if (static_cast<Index>(m.entries.size()) != m.rows) {
      fail(Diagnostic::Kind::Semantic, header.number, header.tokens[0].column,
           "matrix " + m.name + " declares " + std::to_string(m.rows) + " rows but lists " +
               std::to_string(m.entries.size()));
    }
    expectEnd("matrix " + m.name);
    pres_.matrices.push_back(std::move(m));
  }

  void parseBimodule() {
    const Line& header = current();
    PresBimodule b;
    b.line = header.number;
    b.name = expectName(header, 1);
    expectKeyword(header, 2, "left");
    b.leftAlgebra = expectName(header, 3);
    expectKeyword(header, 4, "right");
    b.rightAlgebra = expectName(header, 5);
    expectKeyword(header, 6, "dim");
    b.dim = expectCount(header, 7, "dimension", kMaxDim);
    expectTokenCount(header, 8);
    ++at_;
    while (true) {
      const Line& line = expectLine("bimodule " + b.name);
      const std::string& word = line.tokens[0].text;
      if (word != "leftact" && word != "rightact") break;
      Index idx = expectCount(line, 1, "basis index", kMaxDim - 1);
      expectTokenCount(line, 2);
      int sectionLine = line.number;
      int sectionCol = line.tokens[0].column;
      ++at_;
      std::vector<std::vector<Rational>> rows = collectRows(b.dim, "action row");
      if (static_cast<Index>(rows.size()) != b.dim) {
        fail(Diagnostic::Kind::Semantic, sectionLine, sectionCol,
             word + " " + std::to_string(idx) + " needs " + std::to_string(b.dim) +
                 " rows, got " + std::to_string(rows.size()));
      }
      auto& bucket = word == "leftact" ? b.leftActs : b.rightActs;
      for (const auto& entry : bucket) {
        if (entry.first == idx) {
          fail(Diagnostic::Kind::Semantic, sectionLine, sectionCol,
               word + " " + std::to_string(idx) + " declared twice");
        }
      }
      bucket.emplace_back(idx, std::move(rows));
    }
    expectEnd("bimodule " + b.name);
    pres_.bimodules.push_back(std::move(b));
  }

  void parseExtension() {
    const Line& header = current();
    PresExtension e;
    e.line = header.number;
    e.name = expectName(header, 1);
    expectKeyword(header, 2, "base");
    e.base = expectName(header, 3);
    expectKeyword(header, 4, "total");
    e.total = expectName(header, 5);
    expectTokenCount(header, 6);
    ++at_;
    const Line& iotaLine = expectLine("extension " + e.name);
    expectKeyword(iotaLine, 0, "iota");
    expectTokenCount(iotaLine, 1);
    ++at_;
    e.iota = collectRows(std::nullopt, "iota row");
    if (!done() && current().tokens[0].text == "expectation") {
      expectTokenCount(current(), 1);
      ++at_;
      e.expectation = collectRows(std::nullopt, "expectation row");
    }
    expectEnd("extension " + e.name);
    pres_.extensions.push_back(std::move(e));
  }

  void parseCoring() {
    const Line& header = current();
    PresCoring c;
    c.line = header.number;
    c.name = expectName(header, 1);
    expectKeyword(header, 2, "carrier");
    c.carrier = expectName(header, 3);
    expectTokenCount(header, 4);
    ++at_;
    const Line& copLine = expectLine("coring " + c.name);
    expectKeyword(copLine, 0, "coproduct");
    expectTokenCount(copLine, 1);
    ++at_;
    c.coproduct = collectRows(std::nullopt, "coproduct row");
    if (!done() && current().tokens[0].text == "counit") {
      expectTokenCount(current(), 1);
      ++at_;
      c.counit = collectRows(std::nullopt, "counit row");
    }
    expectEnd("coring " + c.name);
    pres_.corings.push_back(std::move(c));
  }

  void parseElement() {
    const Line& line = current();
    PresElement e;
    e.line = line.number;
    e.name = expectName(line, 1);
    expectKeyword(line, 2, "size");
    Index size = expectCount(line, 3, "size", kMaxMatrixSide);
    expectKeyword(line, 4, ":");
    e.values = expectNumbers(line, 5, size, "element");
    ++at_;
    pres_.elements.push_back(std::move(e));
  }
};

}  // namespace detail

inline ParseResult parsePresentation(std::string_view text) {
  return detail::Parser(text).run();
}

namespace detail {

inline void printNumbers(std::string& out, const std::vector<Rational>& nums) {
  for (const Rational& r : nums) {
    out += ' ';
    out += r.str();
  }
}

inline void printRows(std::string& out, const std::vector<std::vector<Rational>>& rows) {
  for (const auto& row : rows) {
    out += "  row";
    printNumbers(out, row);
    out += '\n';
  }
}

}  // namespace detail

/// Canonical text for a document; parsing it back yields an equal document.
inline std::string printPresentation(const Presentation& p) {
  std::string out = "field ";
  out += p.field.primeField ? "fp " + std::to_string(p.field.modulus) : "q";
  out += '\n';
  for (const PresAlgebra& a : p.algebras) {
    out += "\nalgebra " + a.name + " dim " + std::to_string(a.dim) + "\n";
    out += "  unit";
    detail::printNumbers(out, a.unit);
    out += '\n';
    for (Index i = 0; i < a.dim; ++i) {
      for (Index j = 0; j < a.dim; ++j) {
        out += "  product " + std::to_string(i) + " " + std::to_string(j) + " :";
        detail::printNumbers(out, a.product[static_cast<std::size_t>(i * a.dim + j)]);
        out += '\n';
      }
    }
    out += "end\n";
  }
  for (const PresMatrix& m : p.matrices) {
    out += "\nmatrix " + m.name + " rows " + std::to_string(m.rows) + " cols " +
           std::to_string(m.cols) + "\n";
    detail::printRows(out, m.entries);
    out += "end\n";
  }
  for (const PresBimodule& b : p.bimodules) {
    out += "\nbimodule " + b.name + " left " + b.leftAlgebra + " right " + b.rightAlgebra +
           " dim " + std::to_string(b.dim) + "\n";
    for (const auto& [idx, rows] : b.leftActs) {
      out += "  leftact " + std::to_string(idx) + "\n";
      detail::printRows(out, rows);
    }
    for (const auto& [idx, rows] : b.rightActs) {
      out += "  rightact " + std::to_string(idx) + "\n";
      detail::printRows(out, rows);
    }
    out += "end\n";
  }
  for (const PresExtension& e : p.extensions) {
    out += "\nextension " + e.name + " base " + e.base + " total " + e.total + "\n";
    out += "  iota\n";
    detail::printRows(out, e.iota);
    if (e.expectation) {
      out += "  expectation\n";
      detail::printRows(out, *e.expectation);
    }
    out += "end\n";
  }
  for (const PresCoring& c : p.corings) {
    out += "\ncoring " + c.name + " carrier " + c.carrier + "\n";
    out += "  coproduct\n";
    detail::printRows(out, c.coproduct);
    if (c.counit) {
      out += "  counit\n";
      detail::printRows(out, *c.counit);
    }
    out += "end\n";
  }
  for (const PresElement& e : p.elements) {
    out += "\nelement " + e.name + " size " + std::to_string(e.values.size()) + " :";
    detail::printNumbers(out, e.values);
    out += '\n';
  }
  return out;
}

/// A document made concrete over a scalar field: every declaration built and
/// validated through the library constructors.
template <class K>
struct Model {
  std::map<std::string, AlgebraPtr<K>> algebras;
  std::map<std::string, Mat<K>> matrices;
  std::map<std::string, Bimodule<K>> bimodules;
  std::map<std::string, RingExtension<K>> extensions;
  std::map<std::string, Coring<K>> corings;
  std::map<std::string, Vec<K>> elements;
};

template <class K>
struct InstantiationResult {
  std::optional<Model<K>> model;
  std::vector<Diagnostic> diagnostics;
};

namespace detail {

template <class K>
K scalarOf(const Rational& r) {
  return FieldTraits<K>::fromIntPair(r.numerator(), r.denominator());
}

template <class K>
Vec<K> vecFromNumbers(const std::vector<Rational>& nums) {
  Vec<K> v = Vec<K>::Constant(static_cast<Index>(nums.size()), K(0));
  for (Index i = 0; i < v.size(); ++i) v(i) = scalarOf<K>(nums[static_cast<std::size_t>(i)]);
  return v;
}

template <class K>
Mat<K> matFromRows(const std::vector<std::vector<Rational>>& rows) {
  const Index r = static_cast<Index>(rows.size());
  const Index c = rows.empty() ? 0 : static_cast<Index>(rows[0].size());
  Mat<K> m = zeros<K>(r, c);
  for (Index i = 0; i < r; ++i) {
    for (Index j = 0; j < c; ++j) {
      m(i, j) = scalarOf<K>(rows[static_cast<std::size_t>(i)][static_cast<std::size_t>(j)]);
    }
  }
  return m;
}

inline bool ragged(const std::vector<std::vector<Rational>>& rows) {
  for (const auto& row : rows) {
    if (row.size() != rows[0].size()) return true;
  }
  return false;
}

}  // namespace detail

/// Full runs every structural check; ShapesOnly enforces just the dimension
/// constraints that keep the built objects safe to compute with, so a caller
/// can run the law checks itself and report them with traces.
enum class Validation { Full, ShapesOnly };

/// Builds every declared object over K, in declaration order, stopping at the
/// first defect. The document's field must match K (and, for a prime field,
/// the active modulus).
template <class K>
InstantiationResult<K> instantiate(const Presentation& pres,
                                   Validation validation = Validation::Full) {
  InstantiationResult<K> out;
  auto reject = [&out](int line, const std::string& message) {
    out.model.reset();
    out.diagnostics.push_back(Diagnostic{Diagnostic::Kind::Semantic, line, 1, message});
  };

  if (pres.field.primeField != FieldTraits<K>::isPrimeField) {
    reject(1, "the document declares field " + std::string(pres.field.primeField ? "fp" : "q") +
                  " but is being read over " + FieldTraits<K>::name());
    return out;
  }
  if constexpr (FieldTraits<K>::isPrimeField) {
    if (pres.field.modulus != Fp::modulus()) {
      reject(1, "the document declares fp " + std::to_string(pres.field.modulus) +
                    " but the active modulus is " + std::to_string(Fp::modulus()));
      return out;
    }
  }

  Model<K> model;
  std::set<std::string> names;
  auto claim = [&](const std::string& name, int line) {
    if (!names.insert(name).second) {
      reject(line, "the name " + name + " is declared twice");
      return false;
    }
    return true;
  };

  for (const PresAlgebra& a : pres.algebras) {
    if (!claim(a.name, a.line)) return out;
    try {
      Vec<K> unit = detail::vecFromNumbers<K>(a.unit);
      Algebra<K> alg = makeAlgebra<K>(a.dim, unit, [&a](Index i, Index j) {
        return detail::vecFromNumbers<K>(a.product[static_cast<std::size_t>(i * a.dim + j)]);
      });
      if (validation == Validation::Full) {
        if (auto why = checkAlgebra(alg)) {
          reject(a.line, "algebra " + a.name + ": " + *why);
          return out;
        }
      }
      model.algebras.emplace(a.name, std::make_shared<const Algebra<K>>(std::move(alg)));
    } catch (const Error& err) {
      reject(a.line, "algebra " + a.name + ": " + err.what());
      return out;
    }
  }

  for (const PresMatrix& m : pres.matrices) {
    if (!claim(m.name, m.line)) return out;
    try {
      model.matrices.emplace(m.name, detail::matFromRows<K>(m.entries));
    } catch (const Error& err) {
      reject(m.line, "matrix " + m.name + ": " + err.what());
      return out;
    }
  }

  for (const PresBimodule& b : pres.bimodules) {
    if (!claim(b.name, b.line)) return out;
    auto leftIt = model.algebras.find(b.leftAlgebra);
    if (leftIt == model.algebras.end()) {
      reject(b.line, "bimodule " + b.name + ": no algebra named " + b.leftAlgebra);
      return out;
    }
    auto rightIt = model.algebras.find(b.rightAlgebra);
    if (rightIt == model.algebras.end()) {
      reject(b.line, "bimodule " + b.name + ": no algebra named " + b.rightAlgebra);
      return out;
    }
    Bimodule<K> mod;
    mod.left = leftIt->second;
    mod.right = rightIt->second;
    mod.dim = b.dim;
    auto fill = [&](const auto& acts, Index algebraDim, std::vector<Mat<K>>& dst,
                    const char* word) {
      dst.assign(static_cast<std::size_t>(algebraDim), Mat<K>());
      std::vector<bool> seen(static_cast<std::size_t>(algebraDim), false);
      for (const auto& [idx, rows] : acts) {
        if (idx >= algebraDim) {
          reject(b.line, "bimodule " + b.name + ": " + word + " index " + std::to_string(idx) +
                             " is out of range for a dimension " + std::to_string(algebraDim) +
                             " algebra");
          return false;
        }
        seen[static_cast<std::size_t>(idx)] = true;
        dst[static_cast<std::size_t>(idx)] = detail::matFromRows<K>(rows);
      }
      for (std::size_t i = 0; i < seen.size(); ++i) {
        if (!seen[i]) {
          reject(b.line, "bimodule " + b.name + ": missing " + word + " " + std::to_string(i));
          return false;
        }
      }
      return true;
    };
    try {
      if (!fill(b.leftActs, leftIt->second->dim, mod.leftAct, "leftact")) return out;
      if (!fill(b.rightActs, rightIt->second->dim, mod.rightAct, "rightact")) return out;
    } catch (const Error& err) {
      reject(b.line, "bimodule " + b.name + ": " + err.what());
      return out;
    }
    if (validation == Validation::Full) {
      if (auto why = checkBimodule(mod)) {
        reject(b.line, "bimodule " + b.name + ": " + *why);
        return out;
      }
    }
    model.bimodules.emplace(b.name, std::move(mod));
  }

  for (const PresExtension& e : pres.extensions) {
    if (!claim(e.name, e.line)) return out;
    auto baseIt = model.algebras.find(e.base);
    if (baseIt == model.algebras.end()) {
      reject(e.line, "extension " + e.name + ": no algebra named " + e.base);
      return out;
    }
    auto totalIt = model.algebras.find(e.total);
    if (totalIt == model.algebras.end()) {
      reject(e.line, "extension " + e.name + ": no algebra named " + e.total);
      return out;
    }
    const Index db = baseIt->second->dim;
    const Index dt = totalIt->second->dim;
    if (detail::ragged(e.iota) || static_cast<Index>(e.iota.size()) != dt ||
        (dt > 0 && static_cast<Index>(e.iota[0].size()) != db)) {
      reject(e.line, "extension " + e.name + ": iota must be " + std::to_string(dt) + " x " +
                         std::to_string(db));
      return out;
    }
    RingExtension<K> ext;
    ext.base = baseIt->second;
    ext.total = totalIt->second;
    try {
      ext.iota = detail::matFromRows<K>(e.iota);
      if (e.expectation) {
        if (detail::ragged(*e.expectation) || static_cast<Index>(e.expectation->size()) != db ||
            (db > 0 && static_cast<Index>((*e.expectation)[0].size()) != dt)) {
          reject(e.line, "extension " + e.name + ": expectation must be " + std::to_string(db) +
                             " x " + std::to_string(dt));
          return out;
        }
        ext.expectation = detail::matFromRows<K>(*e.expectation);
      }
    } catch (const Error& err) {
      reject(e.line, "extension " + e.name + ": " + err.what());
      return out;
    }
    if (validation == Validation::Full) {
      if (auto why = checkExtension(ext)) {
        reject(e.line, "extension " + e.name + ": " + *why);
        return out;
      }
    }
    model.extensions.emplace(e.name, std::move(ext));
  }

  for (const PresCoring& c : pres.corings) {
    if (!claim(c.name, c.line)) return out;
    auto carrierIt = model.bimodules.find(c.carrier);
    if (carrierIt == model.bimodules.end()) {
      reject(c.line, "coring " + c.name + ": no bimodule named " + c.carrier);
      return out;
    }
    const Bimodule<K>& carrier = carrierIt->second;
    if (carrier.left != carrier.right) {
      reject(c.line, "coring " + c.name + ": carrier must use one algebra on both sides");
      return out;
    }
    const Index dimC = carrier.dim;
    const Index da = carrier.left->dim;
    if (detail::ragged(c.coproduct) ||
        static_cast<Index>(c.coproduct.size()) != dimC * dimC ||
        (dimC > 0 && static_cast<Index>(c.coproduct[0].size()) != dimC)) {
      reject(c.line, "coring " + c.name + ": coproduct must be " + std::to_string(dimC * dimC) +
                         " x " + std::to_string(dimC) + " into the plain tensor square");
      return out;
    }
    try {
      Coring<K> coring;
      coring.carrier = carrier;
      coring.square = tensorOver(carrier, carrier);
      coring.coproduct =
          Mat<K>(coring.square.q.projection * detail::matFromRows<K>(c.coproduct));
      if (c.counit) {
        if (detail::ragged(*c.counit) || static_cast<Index>(c.counit->size()) != da ||
            (da > 0 && static_cast<Index>((*c.counit)[0].size()) != dimC)) {
          reject(c.line, "coring " + c.name + ": counit must be " + std::to_string(da) + " x " +
                             std::to_string(dimC));
          return out;
        }
        coring.counit = detail::matFromRows<K>(*c.counit);
      }
      if (validation == Validation::Full) {
        if (auto why = checkCoring(coring)) {
          reject(c.line, "coring " + c.name + ": " + *why);
          return out;
        }
      }
      model.corings.emplace(c.name, std::move(coring));
    } catch (const Error& err) {
      reject(c.line, "coring " + c.name + ": " + err.what());
      return out;
    }
  }

  for (const PresElement& e : pres.elements) {
    if (!claim(e.name, e.line)) return out;
    try {
      model.elements.emplace(e.name, detail::vecFromNumbers<K>(e.values));
    } catch (const Error& err) {
      reject(e.line, "element " + e.name + ": " + err.what());
      return out;
    }
  }

  out.model = std::move(model);
  return out;
}

namespace detail {

template <class K>
Rational presentScalar(const K& x) {
  if constexpr (FieldTraits<K>::isPrimeField) {
    return Rational(static_cast<long long>(x.value()));
  } else {
    return x;
  }
}

template <class K>
std::vector<Rational> presentVec(const Vec<K>& v) {
  std::vector<Rational> out;
  out.reserve(static_cast<std::size_t>(v.size()));
  for (Index i = 0; i < v.size(); ++i) out.push_back(presentScalar<K>(v(i)));
  return out;
}

template <class K>
std::vector<std::vector<Rational>> presentMat(const Mat<K>& m) {
  std::vector<std::vector<Rational>> rows;
  rows.reserve(static_cast<std::size_t>(m.rows()));
  for (Index i = 0; i < m.rows(); ++i) {
    std::vector<Rational> row;
    row.reserve(static_cast<std::size_t>(m.cols()));
    for (Index j = 0; j < m.cols(); ++j) row.push_back(presentScalar<K>(m(i, j)));
    rows.push_back(std::move(row));
  }
  return rows;
}

}  // namespace detail

template <class K>
void appendAlgebra(Presentation& pres, std::string name, const Algebra<K>& alg) {
  PresAlgebra a;
  a.name = std::move(name);
  a.dim = alg.dim;
  a.unit = detail::presentVec<K>(alg.unit);
  a.product.reserve(static_cast<std::size_t>(alg.dim * alg.dim));
  for (Index i = 0; i < alg.dim; ++i) {
    for (Index j = 0; j < alg.dim; ++j) {
      a.product.push_back(detail::presentVec<K>(Vec<K>(alg.mult.col(i * alg.dim + j))));
    }
  }
  pres.algebras.push_back(std::move(a));
}

template <class K>
void appendMatrix(Presentation& pres, std::string name, const Mat<K>& m) {
  PresMatrix pm;
  pm.name = std::move(name);
  pm.rows = m.rows();
  pm.cols = m.cols();
  pm.entries = detail::presentMat<K>(m);
  pres.matrices.push_back(std::move(pm));
}

template <class K>
void appendBimodule(Presentation& pres, std::string name, std::string leftAlgebra,
                    std::string rightAlgebra, const Bimodule<K>& m) {
  PresBimodule b;
  b.name = std::move(name);
  b.leftAlgebra = std::move(leftAlgebra);
  b.rightAlgebra = std::move(rightAlgebra);
  b.dim = m.dim;
  for (std::size_t i = 0; i < m.leftAct.size(); ++i) {
    b.leftActs.emplace_back(static_cast<Index>(i), detail::presentMat<K>(m.leftAct[i]));
  }
  for (std::size_t i = 0; i < m.rightAct.size(); ++i) {
    b.rightActs.emplace_back(static_cast<Index>(i), detail::presentMat<K>(m.rightAct[i]));
  }
  pres.bimodules.push_back(std::move(b));
}

template <class K>
void appendExtension(Presentation& pres, std::string name, std::string base, std::string total,
                     const RingExtension<K>& ext) {
  PresExtension e;
  e.name = std::move(name);
  e.base = std::move(base);
  e.total = std::move(total);
  e.iota = detail::presentMat<K>(ext.iota);
  if (ext.expectation) e.expectation = detail::presentMat<K>(*ext.expectation);
  pres.extensions.push_back(std::move(e));
}

/// The coproduct is written through the canonical section, so the stored rows
/// are one fixed representative of each coproduct class.
template <class K>
void appendCoring(Presentation& pres, std::string name, std::string carrier,
                  const Coring<K>& c) {
  PresCoring pc;
  pc.name = std::move(name);
  pc.carrier = std::move(carrier);
  pc.coproduct = detail::presentMat<K>(c.liftedCoproduct());
  if (c.counit) pc.counit = detail::presentMat<K>(*c.counit);
  pres.corings.push_back(std::move(pc));
}

template <class K>
void appendElement(Presentation& pres, std::string name, const Vec<K>& v) {
  PresElement e;
  e.name = std::move(name);
  e.values = detail::presentVec<K>(v);
  pres.elements.push_back(std::move(e));
}

template <class K>
Presentation emptyPresentation() {
  Presentation pres;
  pres.field.primeField = FieldTraits<K>::isPrimeField;
  if constexpr (FieldTraits<K>::isPrimeField) pres.field.modulus = Fp::modulus();
  return pres;
}

}  // namespace coringlab
