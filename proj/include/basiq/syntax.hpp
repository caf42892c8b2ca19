// Concrete syntax: parsing and printing of formulas, sequents, .blf lists
// and .blp derivation scripts. Parsing is total — every input yields either
// a value or a positioned ParseError.
//
// Grammar (ASCII canonical, fully parenthesised):
//   Formula ::= Atom | Atom "^" | "(" Formula BinOp Formula ")"
//   BinOp   ::= "&" | "v" | "*" | "%" | "@" | "$"
//   Atom    ::= [A-Z][A-Za-z0-9]*
//   Sequent ::= FormulaList "|-" FormulaList
// Unicode aliases accepted on input: ⊥ = ^, ∨ = v, ⊗ = *, ℘ = %, § = $, ⊢ = |-.
#pragma once

#include <string>
#include <string_view>
#include <variant>
#include <vector>

#include "basiq/formula.hpp"

namespace basiq {

struct SourceSpan {
  int line = 1;  // 1-based
  int col = 1;   // 1-based, in bytes
  int len = 1;
};

struct ParseError {
  std::string message;
  SourceSpan span;
};

template <typename T>
class ParseResult {
 public:
  ParseResult(T v) : v_(std::move(v)) {}
  ParseResult(ParseError e) : v_(std::move(e)) {}

  bool ok() const { return std::holds_alternative<T>(v_); }
  explicit operator bool() const { return ok(); }
  const T& value() const { return std::get<T>(v_); }
  T& value() { return std::get<T>(v_); }
  const ParseError& error() const { return std::get<ParseError>(v_); }

 private:
  std::variant<T, ParseError> v_;
};

// ---------------------------------------------------------------- printing

inline std::string print_formula(const Formula& f) { return f.text(); }

inline std::string print_sequent(const Sequent& s) {
  std::string out;
  for (size_t i = 0; i < s.ante.size(); ++i) {
    if (i) out += ", ";
    out += s.ante[i].text();
  }
  if (!s.ante.empty()) out += ' ';
  out += "|-";
  for (size_t i = 0; i < s.succ.size(); ++i) {
    out += i ? ", " : " ";
    out += s.succ[i].text();
  }
  return out;
}

// ----------------------------------------------------------------- lexing

namespace detail {

enum class Tok { LParen, RParen, Conn, Caret, Comma, Turnstile, Ident, End, Bad };

struct Token {
  Tok kind = Tok::End;
  Conn conn = Conn::With;  // for Tok::Conn
  std::string ident;       // for Tok::Ident
  int col = 1;             // 1-based byte column
  int len = 1;
};

// One-line lexer; multi-byte unicode aliases are folded to their ASCII twins.
class Lexer {
 public:
  explicit Lexer(std::string_view text, int line = 1, int col0 = 0)
      : s_(text), line_(line), col0_(col0) {}

  Token next() {
    skip_ws();
    Token t;
    t.col = col0_ + static_cast<int>(pos_) + 1;
    if (pos_ >= s_.size()) {
      t.kind = Tok::End;
      return t;
    }
    char c = s_[pos_];
    auto one = [&](Tok k) {
      t.kind = k;
      ++pos_;
      return t;
    };
    switch (c) {
      case '(': return one(Tok::LParen);
      case ')': return one(Tok::RParen);
      case ',': return one(Tok::Comma);
      case '^': return one(Tok::Caret);
      case '&': return conn_tok(t, Conn::With, 1);
      case 'v': return conn_tok(t, Conn::Or, 1);
      case '*': return conn_tok(t, Conn::Times, 1);
      case '%': return conn_tok(t, Conn::Par, 1);
      case '@': return conn_tok(t, Conn::Ent, 1);
      case '$': return conn_tok(t, Conn::DualEnt, 1);
      default: break;
    }
    if (c == '|' && peek_is(1, '-')) {
      t.kind = Tok::Turnstile;
      t.len = 2;
      pos_ += 2;
      return t;
    }
    // Unicode aliases (UTF-8 byte sequences).
    if (match_seq("\xe2\x8a\xa5")) return utf(t, Tok::Caret, 3);        // ⊥
    if (match_seq("\xe2\x88\xa8")) return utf_conn(t, Conn::Or, 3);     // ∨
    if (match_seq("\xe2\x8a\x97")) return utf_conn(t, Conn::Times, 3);  // ⊗
    if (match_seq("\xe2\x84\x98")) return utf_conn(t, Conn::Par, 3);    // ℘
    if (match_seq("\xc2\xa7")) return utf_conn(t, Conn::DualEnt, 2);    // §
    if (match_seq("\xe2\x8a\xa2")) return utf(t, Tok::Turnstile, 3);    // ⊢
    if (c >= 'A' && c <= 'Z') {
      size_t start = pos_++;
      while (pos_ < s_.size() && is_ident_tail(s_[pos_])) ++pos_;
      t.kind = Tok::Ident;
      t.ident = std::string(s_.substr(start, pos_ - start));
      t.len = static_cast<int>(pos_ - start);
      return t;
    }
    t.kind = Tok::Bad;
    ++pos_;
    return t;
  }

  SourceSpan here(int len = 1) const {
    return SourceSpan{line_, col0_ + static_cast<int>(pos_) + 1, len};
  }
  int line() const { return line_; }

 private:
  static bool is_ident_tail(char c) {
    return (c >= 'A' && c <= 'Z') || (c >= 'a' && c <= 'z') || (c >= '0' && c <= '9');
  }
  void skip_ws() {
    while (pos_ < s_.size() && (s_[pos_] == ' ' || s_[pos_] == '\t' || s_[pos_] == '\r')) ++pos_;
  }
  bool peek_is(size_t off, char c) const { return pos_ + off < s_.size() && s_[pos_ + off] == c; }
  bool match_seq(std::string_view seq) const {
    return s_.size() - pos_ >= seq.size() && s_.substr(pos_, seq.size()) == seq;
  }
  Token conn_tok(Token t, Conn c, int len) {
    t.kind = Tok::Conn;
    t.conn = c;
    t.len = len;
    pos_ += static_cast<size_t>(len);
    return t;
  }
  Token utf(Token t, Tok k, int bytes) {
    t.kind = k;
    t.len = bytes;
    pos_ += static_cast<size_t>(bytes);
    return t;
  }
  Token utf_conn(Token t, Conn c, int bytes) { return conn_tok(t, c, bytes); }

  std::string_view s_;
  size_t pos_ = 0;
  int line_;
  int col0_;  // column offset when the text is a slice of a longer line
};

class FormulaParser {
 public:
  FormulaParser(std::string_view text, int line, int col0) : lex_(text, line, col0) { advance(); }

  ParseResult<Formula> formula_then_end() {
    auto f = parse_formula();
    if (!f.ok()) return f;
    if (cur_.kind != Tok::End)
      return fail("unexpected trailing input after formula");
    return f;
  }

  ParseResult<Sequent> sequent_then_end() {
    Sequent s;
    if (cur_.kind != Tok::Turnstile) {
      auto lhs = parse_list();
      if (!lhs.ok()) return lhs.error();
      s.ante = std::move(lhs.value());
    }
    if (cur_.kind != Tok::Turnstile) return fail("expected '|-'");
    advance();
    if (cur_.kind != Tok::End) {
      auto rhs = parse_list();
      if (!rhs.ok()) return rhs.error();
      s.succ = std::move(rhs.value());
    }
    if (cur_.kind != Tok::End) return fail("unexpected trailing input after sequent");
    return s;
  }

 private:
  ParseResult<Formula> parse_formula() {
    switch (cur_.kind) {
      case Tok::Ident: {
        std::string name = cur_.ident;
        advance();
        if (cur_.kind == Tok::Caret) {
          advance();
          return Formula::perp_atom(std::move(name));
        }
        return Formula::atom(std::move(name));
      }
      case Tok::LParen: {
        advance();
        auto l = parse_formula();
        if (!l.ok()) return l;
        if (cur_.kind != Tok::Conn) return fail("expected a connective");
        Conn op = cur_.conn;
        advance();
        auto r = parse_formula();
        if (!r.ok()) return r;
        if (cur_.kind != Tok::RParen) return fail("expected ')'");
        advance();
        return Formula::bin(op, std::move(l.value()), std::move(r.value()));
      }
      default:
        return fail("expected a formula (atom names start with A-Z)");
    }
  }

  ParseResult<std::vector<Formula>> parse_list() {
    std::vector<Formula> out;
    while (true) {
      auto f = parse_formula();
      if (!f.ok()) return f.error();
      out.push_back(std::move(f.value()));
      if (cur_.kind != Tok::Comma) break;
      advance();
    }
    return out;
  }

  ParseError fail(std::string msg) const {
    return ParseError{std::move(msg), SourceSpan{lex_.line(), cur_.col, cur_.len}};
  }
  void advance() { cur_ = lex_.next(); }

  Lexer lex_;
  Token cur_;
};

}  // namespace detail

// ---------------------------------------------------------------- parsing

inline ParseResult<Formula> parse_formula(std::string_view text, int line = 1, int col0 = 0) {
  return detail::FormulaParser(text, line, col0).formula_then_end();
}

inline ParseResult<Sequent> parse_sequent(std::string_view text, int line = 1, int col0 = 0) {
  return detail::FormulaParser(text, line, col0).sequent_then_end();
}

// ------------------------------------------------------- derivation scripts

// A parsed .blp node: conclusion-first, children indented by exactly two
// more spaces than their parent. Rule-name validity is the kernel's concern.
struct DerivationScript {
  std::string rule;
  Sequent sequent;
  std::string sequent_text;
  int line = 1;
  std::vector<DerivationScript> children;
};

inline ParseResult<DerivationScript> parse_derivation(std::string_view text) {
  struct Row {
    int level;
    DerivationScript node;
  };
  std::vector<Row> rows;
  int line_no = 0;
  size_t pos = 0;
  while (pos <= text.size()) {
    size_t eol = text.find('\n', pos);
    std::string_view line = text.substr(pos, eol == std::string_view::npos ? text.size() - pos
                                                                           : eol - pos);
    pos = eol == std::string_view::npos ? text.size() + 1 : eol + 1;
    ++line_no;
    if (!line.empty() && line.back() == '\r') line.remove_suffix(1);

    size_t indent = 0;
    while (indent < line.size() && line[indent] == ' ') ++indent;
    if (indent < line.size() && line[indent] == '\t')
      return ParseError{"tab in indentation", {line_no, static_cast<int>(indent) + 1, 1}};
    std::string_view body = line.substr(indent);
    if (body.empty() || body[0] == '#') continue;
    if (indent % 2 != 0)
      return ParseError{"indentation must be a multiple of two spaces",
                        {line_no, static_cast<int>(indent) + 1, 1}};
    int level = static_cast<int>(indent / 2);
    if (rows.empty() && level != 0)
      return ParseError{"first step must not be indented", {line_no, 1, 1}};
    if (!rows.empty() && level > rows.back().level + 1)
      return ParseError{"child indented more than one level below its parent",
                        {line_no, static_cast<int>(indent) + 1, 1}};

    size_t colon = body.find(':');
    if (colon == std::string_view::npos)
      return ParseError{"expected 'RULE: <sequent>'", {line_no, static_cast<int>(indent) + 1, 1}};
    std::string rule(body.substr(0, colon));
    while (!rule.empty() && (rule.back() == ' ' || rule.back() == '\t')) rule.pop_back();
    if (rule.empty())
      return ParseError{"empty rule name", {line_no, static_cast<int>(indent) + 1, 1}};
    std::string_view seq_text = body.substr(colon + 1);
    auto seq = parse_sequent(seq_text, line_no, static_cast<int>(indent + colon + 1));
    if (!seq.ok()) return seq.error();

    DerivationScript node;
    node.rule = std::move(rule);
    node.sequent = std::move(seq.value());
    node.sequent_text = std::string(seq_text.substr(seq_text.find_first_not_of(' ') ==
                                                            std::string_view::npos
                                                        ? 0
                                                        : seq_text.find_first_not_of(' ')));
    node.line = line_no;
    rows.push_back(Row{level, std::move(node)});
  }
  if (rows.empty()) return ParseError{"empty derivation", {1, 1, 1}};

  // Fold the flat rows into a tree; children attach right-to-left.
  for (size_t i = rows.size(); i-- > 1;) {
    int lvl = rows[i].level;
    size_t j = i;
    while (j-- > 0) {
      if (rows[j].level == lvl - 1) {
        rows[j].node.children.insert(rows[j].node.children.begin(), std::move(rows[i].node));
        break;
      }
      if (rows[j].level < lvl - 1) break;
    }
  }
  return std::move(rows[0].node);
}

inline void print_derivation_into(const DerivationScript& d, std::string& out, int level = 0) {
  out.append(static_cast<size_t>(level) * 2, ' ');
  out += d.rule;
  out += ": ";
  out += print_sequent(d.sequent);
  out += '\n';
  for (const auto& c : d.children) print_derivation_into(c, out, level + 1);
}

inline std::string print_derivation(const DerivationScript& d) {
  std::string out;
  print_derivation_into(d, out);
  return out;
}

// --------------------------------------------------------------- .blf lists

// One entry per non-comment line: a sequent if the line contains a turnstile,
// a formula otherwise.
struct BlfItem {
  int line;
  std::variant<Formula, Sequent> value;
};

inline ParseResult<std::vector<BlfItem>> parse_blf(std::string_view text) {
  std::vector<BlfItem> items;
  int line_no = 0;
  size_t pos = 0;
  while (pos <= text.size()) {
    size_t eol = text.find('\n', pos);
    std::string_view line = text.substr(pos, eol == std::string_view::npos ? text.size() - pos
                                                                           : eol - pos);
    pos = eol == std::string_view::npos ? text.size() + 1 : eol + 1;
    ++line_no;
    if (!line.empty() && line.back() == '\r') line.remove_suffix(1);
    size_t first = line.find_first_not_of(" \t");
    if (first == std::string_view::npos || line[first] == '#') continue;
    bool is_seq = line.find("|-") != std::string_view::npos ||
                  line.find("\xe2\x8a\xa2") != std::string_view::npos;
    if (is_seq) {
      auto s = parse_sequent(line, line_no, 0);
      if (!s.ok()) return s.error();
      items.push_back(BlfItem{line_no, std::move(s.value())});
    } else {
      auto f = parse_formula(line, line_no, 0);
      if (!f.ok()) return f.error();
      items.push_back(BlfItem{line_no, std::move(f.value())});
    }
  }
  return items;
}

}  // namespace basiq
