#pragma once

// Text syntax for construction trees:
//
//   expr  := term { "*" term }
//   term  := "A^" nat | "Gm^" nat | "Gm" | "P^" nat [ "@O(" int ")" ]
//          | "open(" expr "," expr ")" | "closed(" expr "," expr ")"
//          | "strat(" expr { "," expr } ";" [ nat "<" nat { "," nat "<" nat } ] ")"
//          | "(" expr ")" | "empty"
//
// Products associate to the left. A bare "P^c @O(k)" followed by bare Gm
// factors is read as the single leaf P^c x Gm^e. open(X, Z) is X \ Z and
// closed(Z, U) glues a closed Z to its open complement U. In strat(...),
// "a<b" says stratum a lies in the closure of stratum b (0-based).

#include <cctype>
#include <cstddef>
#include <string>
#include <string_view>
#include <vector>

#include "linwitt/error.hpp"
#include "linwitt/scheme_calculus.hpp"
#include "linwitt/scheme_expr.hpp"

namespace linwitt {

struct ParseResult {
  SchemeExpr expr;
  std::vector<std::string> warnings;
};

namespace detail {

enum class TokenKind { Ident, Number, Punct, End };

struct Token {
  TokenKind kind = TokenKind::End;
  std::string text;
  int line = 1;
  int column = 1;
};

inline std::vector<Token> tokenize(std::string_view text) {
  std::vector<Token> out;
  int line = 1;
  int column = 1;
  std::size_t k = 0;
  auto advance = [&](std::size_t count) {
    for (std::size_t n = 0; n < count; ++n) {
      if (text[k] == '\n') {
        ++line;
        column = 1;
      } else {
        ++column;
      }
      ++k;
    }
  };
  while (k < text.size()) {
    const unsigned char c = static_cast<unsigned char>(text[k]);
    if (std::isspace(c)) {
      advance(1);
      continue;
    }
    Token t;
    t.line = line;
    t.column = column;
    std::size_t len = 1;
    if (std::isalpha(c)) {
      while (k + len < text.size() && std::isalpha(static_cast<unsigned char>(text[k + len]))) ++len;
      t.kind = TokenKind::Ident;
    } else if (std::isdigit(c)) {
      while (k + len < text.size() && std::isdigit(static_cast<unsigned char>(text[k + len]))) ++len;
      t.kind = TokenKind::Number;
    } else if (std::string_view("^*,;()@<-").find(static_cast<char>(c)) != std::string_view::npos) {
      t.kind = TokenKind::Punct;
    } else {
      throw Error(ErrorKind::Parse, "line " + std::to_string(line) + ", column " + std::to_string(column) +
                                        ": unexpected character '" + std::string(1, static_cast<char>(c)) + "'");
    }
    t.text = std::string(text.substr(k, len));
    out.push_back(t);
    advance(len);
  }
  Token end;
  end.line = line;
  end.column = column;
  out.push_back(end);
  return out;
}

class Parser {
 public:
  explicit Parser(std::string_view text) : tokens_(tokenize(text)) {}

  ParseResult run() {
    if (tokens_.front().kind == TokenKind::End) fail(tokens_.front(), "empty expression");
    ParseResult result;
    result.expr = parse_expr();
    if (peek().kind != TokenKind::End) fail(peek(), "unexpected '" + peek().text + "' after expression");
    result.warnings = std::move(warnings_);
    return result;
  }

 private:
  struct Term {
    SchemeExpr expr;
    // Written without parentheses as "P^c ..." or "Gm...".
    bool bare_proj = false;
    bool bare_torus = false;
  };

  [[noreturn]] void fail(const Token& at, const std::string& message) const {
    throw Error(ErrorKind::Parse, "line " + std::to_string(at.line) + ", column " + std::to_string(at.column) +
                                      ": " + message);
  }

  const Token& peek() const { return tokens_[pos_]; }
  const Token& next() { return tokens_[pos_ < tokens_.size() - 1 ? pos_++ : pos_]; }

  bool accept(std::string_view punct) {
    if (peek().kind == TokenKind::Punct && peek().text == punct) {
      ++pos_;
      return true;
    }
    return false;
  }

  void expect(std::string_view punct) {
    if (!accept(punct)) {
      fail(peek(), "expected '" + std::string(punct) + "'" +
                       (peek().kind == TokenKind::End ? std::string(" at end of input")
                                                      : ", found '" + peek().text + "'"));
    }
  }

  int number() {
    const Token& t = peek();
    if (t.kind != TokenKind::Number) fail(t, "expected a non-negative integer");
    ++pos_;
    if (t.text.size() > 6) fail(t, "integer " + t.text + " is too large");
    return std::stoi(t.text);
  }

  int signed_number() {
    const bool negative = accept("-");
    const int value = number();
    return negative ? -value : value;
  }

  SchemeExpr parse_expr() {
    Term acc = parse_term();
    while (accept("*")) {
      Term rhs = parse_term();
      if (acc.bare_proj && rhs.bare_torus) {
        const auto& p = *acc.expr.get_if<expr::ProjTimesTorus>();
        const auto& t = *rhs.expr.get_if<expr::TorusCell>();
        acc.expr = proj_times_torus(p.proj_dim, p.torus_rank + t.torus_rank, p.twist);
        continue;
      }
      acc.expr = product(acc.expr, rhs.expr);
      acc.bare_proj = false;
    }
    return acc.expr;
  }

  Term parse_term() {
    const Token t = peek();
    if (accept("(")) {
      SchemeExpr inner = parse_expr();
      expect(")");
      return {inner};
    }
    if (t.kind != TokenKind::Ident) fail(t, "expected a term, found '" + (t.text.empty() ? std::string("end of input") : t.text) + "'");
    ++pos_;
    try {
      if (t.text == "A") {
        expect("^");
        return {affine(number())};
      }
      if (t.text == "Gm") {
        const int d = accept("^") ? number() : 1;
        return {torus_cell(0, d), false, true};
      }
      if (t.text == "P") {
        expect("^");
        const int c = number();
        TwistLabel twist = TwistLabel::trivial();
        if (accept("@")) {
          const Token o = peek();
          if (o.kind != TokenKind::Ident || o.text != "O") fail(o, "expected twist label O(k)");
          ++pos_;
          expect("(");
          const int k = signed_number();
          expect(")");
          twist = TwistLabel::line_bundle(k);
          if (k != c + 1) {
            warnings_.push_back("line " + std::to_string(o.line) + ", column " + std::to_string(o.column) +
                                ": twist " + twist.name() + " on P^" + std::to_string(c) +
                                " has no cellular differential rule; only O(" + std::to_string(c + 1) +
                                ") is supported");
          }
        }
        return {proj_times_torus(c, 0, twist), true, false};
      }
      if (t.text == "open" || t.text == "closed") {
        expect("(");
        SchemeExpr first = parse_expr();
        expect(",");
        SchemeExpr second = parse_expr();
        expect(")");
        return {t.text == "open" ? open_glue(first, second) : closed_glue(first, second)};
      }
      if (t.text == "strat") {
        expect("(");
        std::vector<SchemeExpr> strata{parse_expr()};
        while (accept(",")) strata.push_back(parse_expr());
        expect(";");
        std::vector<ClosureRelation> order;
        if (peek().kind == TokenKind::Number) {
          do {
            const int a = number();
            expect("<");
            const int b = number();
            order.emplace_back(static_cast<std::size_t>(a), static_cast<std::size_t>(b));
          } while (accept(","));
        }
        expect(")");
        return {stratified(std::move(strata), std::move(order))};
      }
      if (t.text == "empty") return {empty_scheme()};
    } catch (const Error& e) {
      if (e.kind() == ErrorKind::Parse) throw;
      fail(t, e.what());
    }
    fail(t, "unknown term '" + t.text + "'");
  }

  std::vector<Token> tokens_;
  std::size_t pos_ = 0;
  std::vector<std::string> warnings_;
};

enum class PrintContext { Top, ProductLeft, ProductRight };

inline std::string print(const SchemeExpr& x, PrintContext ctx) {
  const bool in_product = ctx != PrintContext::Top;
  auto torus = [](int d) { return d == 1 ? std::string("Gm") : "Gm^" + std::to_string(d); };
  return x.visit(overloaded{
      [](const expr::Empty&) -> std::string { return "empty"; },
      [](const expr::Affine& a) -> std::string { return "A^" + std::to_string(a.dim); },
      [&](const expr::TorusCell& t) -> std::string {
        if (t.affine_dim == 0) return torus(t.torus_rank);
        const std::string s = "A^" + std::to_string(t.affine_dim) + " * " + torus(t.torus_rank);
        return in_product ? "(" + s + ")" : s;
      },
      [&](const expr::ProjTimesTorus& p) -> std::string {
        std::string s = "P^" + std::to_string(p.proj_dim);
        if (!p.twist.is_trivial()) s += " @" + p.twist.name();
        if (p.torus_rank > 0) s += " * " + torus(p.torus_rank);
        return in_product ? "(" + s + ")" : s;
      },
      [](const expr::OpenGlue& g) -> std::string {
        return "open(" + print(g.ambient, PrintContext::Top) + ", " + print(g.closed, PrintContext::Top) + ")";
      },
      [](const expr::ClosedGlue& g) -> std::string {
        return "closed(" + print(g.closed, PrintContext::Top) + ", " + print(g.open, PrintContext::Top) + ")";
      },
      [&](const expr::Product& p) -> std::string {
        const std::string s =
            print(p.left, PrintContext::ProductLeft) + " * " + print(p.right, PrintContext::ProductRight);
        return ctx == PrintContext::ProductRight ? "(" + s + ")" : s;
      },
      [](const expr::Stratified& s) -> std::string {
        std::string out = "strat(";
        for (std::size_t k = 0; k < s.strata.size(); ++k) {
          if (k > 0) out += ", ";
          out += print(s.strata[k], PrintContext::Top);
        }
        out += ";";
        for (std::size_t k = 0; k < s.order.size(); ++k) {
          out += k == 0 ? " " : ", ";
          out += std::to_string(s.order[k].first) + "<" + std::to_string(s.order[k].second);
        }
        return out + ")";
      },
  });
}

}  // namespace detail

inline ParseResult parse_expr_with_warnings(std::string_view text) { return detail::Parser(text).run(); }

inline SchemeExpr parse_expr(std::string_view text) { return parse_expr_with_warnings(text).expr; }

/// Canonical text form; parse_expr(to_text(parse_expr(s))) == parse_expr(s).
inline std::string to_text(const SchemeExpr& x) { return detail::print(x, detail::PrintContext::Top); }

}  // namespace linwitt
