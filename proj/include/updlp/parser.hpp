#ifndef UPDLP_PARSER_HPP
#define UPDLP_PARSER_HPP

#include <cctype>
#include <sstream>
#include <string>
#include <string_view>
#include <vector>

#include "core.hpp"

namespace updlp {

struct ParseError : std::runtime_error {
  int line;
  int column;
  ParseError(const std::string& msg, int line_, int col_)
      : std::runtime_error("parse error at " + std::to_string(line_) + ":" +
                           std::to_string(col_) + ": " + msg),
        line(line_),
        column(col_) {}
};

namespace detail {

inline const std::vector<std::string>& reserved_prefixes() {
  static const std::vector<std::string> ps = {"rej_", "lv",  "ok",
                                              "eq",   "s_", "nn"};
  return ps;
}

inline bool has_reserved_prefix(std::string_view name) {
  for (const auto& p : reserved_prefixes())
    if (name.substr(0, p.size()) == p) return true;
  return false;
}

struct Token {
  enum Kind { Atom, Minus, Not, If, Comma, Dot, LParen, RParen, End } kind;
  std::string text;
  int line;
  int column;
};

class Lexer {
 public:
  explicit Lexer(std::string_view src) : src_(src) {}

  Token next() {
    skip_ws();
    int line = line_, col = col_;
    if (pos_ >= src_.size()) return {Token::End, "", line, col};
    char c = src_[pos_];
    if (c == '-') {
      advance();
      return {Token::Minus, "-", line, col};
    }
    if (c == ',') {
      advance();
      return {Token::Comma, ",", line, col};
    }
    if (c == '.') {
      advance();
      return {Token::Dot, ".", line, col};
    }
    if (c == '(') {
      advance();
      return {Token::LParen, "(", line, col};
    }
    if (c == ')') {
      advance();
      return {Token::RParen, ")", line, col};
    }
    if (c == ':') {
      advance();
      if (pos_ < src_.size() && src_[pos_] == '-') {
        advance();
        return {Token::If, ":-", line, col};
      }
      throw ParseError("expected ':-'", line, col);
    }
    if (std::islower(static_cast<unsigned char>(c))) {
      std::string word;
      while (pos_ < src_.size() &&
             (std::isalnum(static_cast<unsigned char>(src_[pos_])) ||
              src_[pos_] == '_')) {
        word.push_back(src_[pos_]);
        advance();
      }
      if (word == "not") return {Token::Not, word, line, col};
      return {Token::Atom, word, line, col};
    }
    throw ParseError(std::string("unexpected character '") + c + "'", line,
                     col);
  }

 private:
  void skip_ws() {
    while (pos_ < src_.size()) {
      char c = src_[pos_];
      if (c == '%') {
        while (pos_ < src_.size() && src_[pos_] != '\n') advance();
      } else if (std::isspace(static_cast<unsigned char>(c))) {
        advance();
      } else {
        break;
      }
    }
  }

  void advance() {
    if (src_[pos_] == '\n') {
      ++line_;
      col_ = 1;
    } else {
      ++col_;
    }
    ++pos_;
  }

  std::string_view src_;
  std::size_t pos_ = 0;
  int line_ = 1;
  int col_ = 1;
};

class RuleParser {
 public:
  RuleParser(std::string_view src, Mode mode) : lex_(src), mode_(mode) {
    tok_ = lex_.next();
  }

  Program parse_program() {
    Program p;
    p.mode = mode_;
    while (tok_.kind != Token::End) {
      Rule r = parse_rule();
      r.name = RuleName{1, static_cast<int>(p.rules.size())};
      p.rules.push_back(std::move(r));
    }
    return p;
  }

 private:
  [[noreturn]] void fail(const std::string& msg) {
    throw ParseError(msg, tok_.line, tok_.column);
  }

  void eat() { tok_ = lex_.next(); }

  void expect(Token::Kind k, const std::string& what) {
    if (tok_.kind != k) fail("expected " + what);
    eat();
  }

  std::string parse_atom_name() {
    if (tok_.kind == Token::Not) fail("'not' is a keyword, not an atom");
    if (tok_.kind != Token::Atom) fail("expected atom");
    std::string name = tok_.text;
    if (has_reserved_prefix(name))
      fail("atom '" + name + "' uses a reserved prefix");
    eat();
    return name;
  }

  // in(a) / out(a) sugar for observation rules; only recognised when an
  // opening parenthesis follows, so plain atoms named in/out stay usable.
  bool at_io_sugar() const {
    return tok_.kind == Token::Atom &&
           (tok_.text == "in" || tok_.text == "out");
  }

  // Returns (literal, was_out) where out(a) stands for classical falsity.
  std::pair<std::string, bool> parse_io_atom() {
    bool is_out = tok_.text == "out";
    eat();
    expect(Token::LParen, "'('");
    std::string name = parse_atom_name();
    expect(Token::RParen, "')'");
    if (mode_ == Mode::Glp)
      fail("in/out notation is not available for weak-head programs");
    return {name, is_out};
  }

  Rule parse_rule() {
    Rule r;
    bool have_head = false;
    if (tok_.kind != Token::If && tok_.kind != Token::Dot) {
      r.head = parse_head();
      have_head = true;
    }
    if (!have_head && mode_ == Mode::Glp)
      fail("GLP rules need a head");
    if (tok_.kind == Token::If) {
      eat();
      parse_body(r);
    }
    if (!have_head && r.body_pos.empty() && r.body_wneg.empty())
      fail("empty rule");
    expect(Token::Dot, "'.'");
    return r;
  }

  Head parse_head() {
    if (tok_.kind == Token::Not) {
      if (mode_ != Mode::Glp) fail("weak negation in heads needs GLP mode");
      eat();
      return not_head(parse_atom_name());
    }
    if (at_io_sugar() && peek_is_lparen()) {
      auto [name, is_out] = parse_io_atom();
      return lit_head(Literal{name, is_out});
    }
    bool neg = false;
    if (tok_.kind == Token::Minus) {
      if (mode_ == Mode::Glp) fail("strong negation not allowed in GLP mode");
      neg = true;
      eat();
    }
    return lit_head(Literal{parse_atom_name(), neg});
  }

  void parse_body(Rule& r) {
    for (;;) {
      parse_elem(r);
      if (tok_.kind == Token::Comma) {
        eat();
        continue;
      }
      break;
    }
  }

  void parse_elem(Rule& r) {
    bool weak = false;
    if (tok_.kind == Token::Not) {
      weak = true;
      eat();
    }
    if (at_io_sugar() && peek_is_lparen()) {
      if (weak) fail("in/out notation cannot be weakly negated");
      auto [name, is_out] = parse_io_atom();
      // in(a) behaves as a plain prerequisite, out(a) as its weakly negated
      // absence.
      if (is_out)
        r.body_wneg.insert(pos(name));
      else
        r.body_pos.insert(pos(name));
      return;
    }
    bool neg = false;
    if (tok_.kind == Token::Minus) {
      if (mode_ == Mode::Glp) fail("strong negation not allowed in GLP mode");
      neg = true;
      eat();
    }
    Literal l{parse_atom_name(), neg};
    if (weak)
      r.body_wneg.insert(std::move(l));
    else
      r.body_pos.insert(std::move(l));
  }

  // One-token peek used only to disambiguate in/out sugar from plain atoms.
  bool peek_is_lparen() {
    Lexer probe = lex_;
    return probe.next().kind == Token::LParen;
  }

  Lexer lex_;
  Mode mode_;
  Token tok_;
};

}  // namespace detail

inline Program parse_program(std::string_view text, Mode mode = Mode::Elp) {
  detail::RuleParser p(text, mode);
  return p.parse_program();
}

// Sequence files separate member programs by lines holding exactly
// "#update." (surrounding blanks allowed).
inline UpdateSequence parse_sequence(std::string_view text,
                                     Mode mode = Mode::Elp) {
  std::vector<std::string> parts{""};
  std::size_t start = 0;
  while (start <= text.size()) {
    std::size_t eol = text.find('\n', start);
    std::string_view line = text.substr(
        start, eol == std::string_view::npos ? text.size() - start
                                             : eol - start);
    std::size_t b = line.find_first_not_of(" \t\r");
    std::size_t e = line.find_last_not_of(" \t\r");
    std::string_view trimmed =
        b == std::string_view::npos ? std::string_view{}
                                    : line.substr(b, e - b + 1);
    if (trimmed == "#update.") {
      parts.emplace_back();
    } else {
      parts.back().append(line);
      parts.back().push_back('\n');
    }
    if (eol == std::string_view::npos) break;
    start = eol + 1;
  }
  std::vector<Program> programs;
  programs.reserve(parts.size());
  for (const auto& part : parts) programs.push_back(parse_program(part, mode));
  return make_sequence(std::move(programs), mode);
}

inline std::string render(const Literal& l) { return to_string(l); }

inline std::string render(const Rule& r) {
  std::ostringstream out;
  switch (r.head.kind) {
    case HeadKind::Absent:
      break;
    case HeadKind::Lit:
      out << to_string(r.head.lit);
      break;
    case HeadKind::NotAtom:
      out << "not " << r.head.lit.atom;
      break;
  }
  if (!r.body_pos.empty() || !r.body_wneg.empty()) {
    if (r.head.kind != HeadKind::Absent) out << ' ';
    out << ":- ";
    bool first = true;
    for (const auto& l : r.body_pos) {
      if (!first) out << ", ";
      out << to_string(l);
      first = false;
    }
    for (const auto& l : r.body_wneg) {
      if (!first) out << ", ";
      out << "not " << to_string(l);
      first = false;
    }
  }
  out << '.';
  return out.str();
}

inline std::string render(const Program& p) {
  std::ostringstream out;
  for (const auto& r : p.rules) out << render(r) << '\n';
  return out.str();
}

inline std::string render(const UpdateSequence& seq) {
  std::ostringstream out;
  bool first = true;
  for (const auto& p : seq.programs) {
    if (!first) out << "#update.\n";
    out << render(p);
    first = false;
  }
  return out.str();
}

}  // namespace updlp

#endif
