#ifndef DOXA_PARSE_HPP
#define DOXA_PARSE_HPP

#include <cstddef>
#include <stdexcept>
#include <string>
#include <string_view>
#include <vector>

#include "doxa/formula.hpp"

namespace doxa {

struct ParseError : std::runtime_error {
  std::size_t offset;
  ParseError(const std::string& msg, std::size_t off)
      : std::runtime_error(msg + " at offset " + std::to_string(off)), offset(off) {}
};

namespace detail {

enum class Tok {
  Ident,
  TrueLit,
  FalseLit,
  Arrow,     // ->
  IffOp,     // <->
  Amp,       // &
  Pipe,      // |
  Bang,      // !
  LParen,
  RParen,
  LBrace,
  RBrace,
  LBracket,
  RBracket,
  Comma,
  Semi,
  End,
};

struct Token {
  Tok tok;
  std::string text;
  std::size_t offset;
};

inline bool ident_start(char c) {
  return (c >= 'a' && c <= 'z') || (c >= 'A' && c <= 'Z') || c == '_';
}
inline bool ident_char(char c) { return ident_start(c) || (c >= '0' && c <= '9'); }

inline std::vector<Token> lex(std::string_view text) {
  std::vector<Token> out;
  std::size_t i = 0;
  while (i < text.size()) {
    const char c = text[i];
    if (c == ' ' || c == '\t' || c == '\n' || c == '\r') {
      ++i;
      continue;
    }
    const std::size_t start = i;
    if (ident_start(c)) {
      std::size_t j = i + 1;
      while (j < text.size() && ident_char(text[j])) ++j;
      std::string word(text.substr(i, j - i));
      Tok t = Tok::Ident;
      if (word == "true") t = Tok::TrueLit;
      else if (word == "false") t = Tok::FalseLit;
      out.push_back({t, std::move(word), start});
      i = j;
      continue;
    }
    switch (c) {
      case '-':
        if (i + 1 < text.size() && text[i + 1] == '>') {
          out.push_back({Tok::Arrow, "->", start});
          i += 2;
          continue;
        }
        throw ParseError("unknown token '-'", start);
      case '<':
        if (i + 2 < text.size() && text[i + 1] == '-' && text[i + 2] == '>') {
          out.push_back({Tok::IffOp, "<->", start});
          i += 3;
          continue;
        }
        throw ParseError("unknown token '<'", start);
      case '&': out.push_back({Tok::Amp, "&", start}); ++i; continue;
      case '|': out.push_back({Tok::Pipe, "|", start}); ++i; continue;
      case '!': out.push_back({Tok::Bang, "!", start}); ++i; continue;
      case '(': out.push_back({Tok::LParen, "(", start}); ++i; continue;
      case ')': out.push_back({Tok::RParen, ")", start}); ++i; continue;
      case '{': out.push_back({Tok::LBrace, "{", start}); ++i; continue;
      case '}': out.push_back({Tok::RBrace, "}", start}); ++i; continue;
      case '[': out.push_back({Tok::LBracket, "[", start}); ++i; continue;
      case ']': out.push_back({Tok::RBracket, "]", start}); ++i; continue;
      case ',': out.push_back({Tok::Comma, ",", start}); ++i; continue;
      case ';': out.push_back({Tok::Semi, ";", start}); ++i; continue;
      default: throw ParseError(std::string("unknown token '") + c + "'", start);
    }
  }
  out.push_back({Tok::End, "", text.size()});
  return out;
}

class Parser {
public:
  explicit Parser(std::string_view text) : toks_(lex(text)) {}

  Formula parse_formula() {
    Formula f = parse_iff();
    if (peek().tok != Tok::End) fail("unexpected trailing input");
    return f;
  }

private:
  const Token& peek() const { return toks_[pos_]; }
  const Token& advance() { return toks_[pos_++]; }

  [[noreturn]] void fail(const std::string& msg) const {
    // Errors at end of input point at the last token seen, not one past it.
    std::size_t off = peek().offset;
    if (peek().tok == Tok::End && pos_ > 0) off = toks_[pos_ - 1].offset;
    throw ParseError(msg, off);
  }

  void expect(Tok t, const char* what) {
    if (peek().tok != t) fail(std::string("expected ") + what);
    ++pos_;
  }

  // iff := impl { "<->" impl }      (left-fold)
  Formula parse_iff() {
    Formula f = parse_impl();
    while (peek().tok == Tok::IffOp) {
      advance();
      f = equiv(f, parse_impl());
    }
    return f;
  }

  // impl := or [ "->" impl ]        (right-assoc)
  Formula parse_impl() {
    Formula f = parse_or();
    if (peek().tok == Tok::Arrow) {
      advance();
      return impl(f, parse_impl());
    }
    return f;
  }

  Formula parse_or() {
    Formula f = parse_and();
    while (peek().tok == Tok::Pipe) {
      advance();
      f = disj(f, parse_and());
    }
    return f;
  }

  Formula parse_and() {
    Formula f = parse_unary();
    while (peek().tok == Tok::Amp) {
      advance();
      f = conj(f, parse_unary());
    }
    return f;
  }

  Formula parse_unary() {
    const Token& t = peek();
    if (t.tok == Tok::Bang) {
      advance();
      return neg(parse_unary());
    }
    if (t.tok == Tok::Ident && t.text == "B" && toks_[pos_ + 1].tok == Tok::LBrace) {
      advance();
      NameSet trust = parse_set();
      NameSet data = parse_set();
      return belief(std::move(trust), std::move(data), parse_unary());
    }
    if (t.tok == Tok::Ident && t.text == "K" && toks_[pos_ + 1].tok == Tok::LBrace) {
      advance();
      NameSet data = parse_set();
      return know(std::move(data), parse_unary());
    }
    if (t.tok == Tok::LBracket) return parse_strategy();
    return parse_primary();
  }

  // "[" [idlist] "]" "{" [idlist] [";" [idlist]] "}" set unary
  // A ";" inside the first braces separates the ex ante and ex post datasets;
  // without it the braces give the single trust set of [C]{T}{X}.
  Formula parse_strategy() {
    expect(Tok::LBracket, "'['");
    NameSet coalition;
    if (peek().tok == Tok::Ident) coalition = parse_idlist();
    expect(Tok::RBracket, "']'");
    expect(Tok::LBrace, "'{'");
    NameSet first;
    if (peek().tok == Tok::Ident) first = parse_idlist();
    bool two_part = false;
    NameSet second;
    if (peek().tok == Tok::Semi) {
      advance();
      two_part = true;
      if (peek().tok == Tok::Ident) second = parse_idlist();
    }
    expect(Tok::RBrace, "'}'");
    NameSet data = parse_set();
    Formula body = parse_unary();
    if (two_part)
      return strategy(std::move(coalition), std::move(first), std::move(second), std::move(data),
                      body);
    return single_strategy(std::move(coalition), std::move(first), std::move(data), body);
  }

  Formula parse_primary() {
    const Token& t = peek();
    switch (t.tok) {
      case Tok::Ident: {
        std::string name = t.text;
        advance();
        return atom(std::move(name));
      }
      case Tok::TrueLit: advance(); return top();
      case Tok::FalseLit: advance(); return bottom();
      case Tok::LParen: {
        advance();
        Formula f = parse_iff();
        expect(Tok::RParen, "')'");
        return f;
      }
      default: fail("expected formula");
    }
  }

  NameSet parse_set() {
    expect(Tok::LBrace, "'{'");
    NameSet s;
    if (peek().tok == Tok::Ident) s = parse_idlist();
    expect(Tok::RBrace, "'}'");
    return s;
  }

  NameSet parse_idlist() {
    std::vector<std::string> names;
    if (peek().tok != Tok::Ident) fail("expected identifier");
    names.push_back(advance().text);
    while (peek().tok == Tok::Comma) {
      advance();
      if (peek().tok != Tok::Ident) fail("expected identifier");
      names.push_back(advance().text);
    }
    return NameSet(std::move(names));
  }

  std::vector<Token> toks_;
  std::size_t pos_ = 0;
};

}  // namespace detail

// Parses the concrete syntax into an AST. Sugar nodes (&, |, <->, K, true,
// false, single-superscript strategies) are preserved until desugar().
inline Formula parse(std::string_view text) { return detail::Parser(text).parse_formula(); }

}  // namespace doxa

#endif  // DOXA_PARSE_HPP
