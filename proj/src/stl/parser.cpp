#include "rsstl/stl/parser.hpp"

#include "rsstl/stl/value.hpp"
#include "rsstl/util/format.hpp"

#include <cctype>
#include <limits>
#include <vector>

namespace rsstl::stl {

ParseError::ParseError(const std::string& what, int line, int column)
    : std::runtime_error(std::to_string(line) + ":" + std::to_string(column) + ": " + what),
      line_(line),
      column_(column) {}

namespace {

enum class Tok {
  Ident,
  Number,
  True,
  Inf,
  LParen,
  RParen,
  LBrack,
  RBrack,
  Comma,
  Not,
  And,
  Or,
  Implies,
  Ge,
  Le,
  Plus,
  Minus,
  Star,
  Next,
  Eventually,
  Always,
  Until,
  Release,
  NonStrictRelease,
  End,
};

struct Token {
  Tok kind;
  std::string text;
  int line;
  int column;
};

std::vector<Token> tokenize(std::string_view src) {
  std::vector<Token> out;
  int line = 1, col = 1;
  std::size_t i = 0;
  auto advance = [&](std::size_t n) {
    for (std::size_t k = 0; k < n; ++k) {
      if (src[i] == '\n') {
        ++line;
        col = 1;
      } else {
        ++col;
      }
      ++i;
    }
  };
  auto emit = [&](Tok kind, std::size_t len) {
    out.push_back({kind, std::string(src.substr(i, len)), line, col});
    advance(len);
  };
  while (i < src.size()) {
    const char c = src[i];
    const char n = i + 1 < src.size() ? src[i + 1] : '\0';
    if (std::isspace(static_cast<unsigned char>(c))) {
      advance(1);
    } else if (c == '#') {  // comment to end of line
      while (i < src.size() && src[i] != '\n') advance(1);
    } else if (std::isalpha(static_cast<unsigned char>(c)) || c == '_') {
      std::size_t len = 1;
      while (i + len < src.size() &&
             (std::isalnum(static_cast<unsigned char>(src[i + len])) || src[i + len] == '_'))
        ++len;
      const std::string_view word = src.substr(i, len);
      Tok kind = Tok::Ident;
      if (word == "true") kind = Tok::True;
      else if (word == "inf") kind = Tok::Inf;
      else if (word == "X") kind = Tok::Next;
      else if (word == "F") kind = Tok::Eventually;
      else if (word == "G") kind = Tok::Always;
      else if (word == "U") kind = Tok::Until;
      else if (word == "R") kind = Tok::Release;
      else if (word == "RW") kind = Tok::NonStrictRelease;
      emit(kind, len);
    } else if (std::isdigit(static_cast<unsigned char>(c)) || (c == '.' && std::isdigit(static_cast<unsigned char>(n)))) {
      std::size_t len = 0;
      auto digits = [&] {
        while (i + len < src.size() && std::isdigit(static_cast<unsigned char>(src[i + len]))) ++len;
      };
      digits();
      if (i + len < src.size() && src[i + len] == '.') {
        ++len;
        digits();
      }
      if (i + len < src.size() && (src[i + len] == 'e' || src[i + len] == 'E')) {
        std::size_t save = len++;
        if (i + len < src.size() && (src[i + len] == '+' || src[i + len] == '-')) ++len;
        if (i + len < src.size() && std::isdigit(static_cast<unsigned char>(src[i + len]))) digits();
        else len = save;
      }
      emit(Tok::Number, len);
    } else if (c == '/' && n == '\\') {
      emit(Tok::And, 2);
    } else if (c == '\\' && n == '/') {
      emit(Tok::Or, 2);
    } else if (c == '-' && n == '>') {
      emit(Tok::Implies, 2);
    } else if (c == '>' && n == '=') {
      emit(Tok::Ge, 2);
    } else if (c == '<' && n == '=') {
      emit(Tok::Le, 2);
    } else if (c == '(') {
      emit(Tok::LParen, 1);
    } else if (c == ')') {
      emit(Tok::RParen, 1);
    } else if (c == '[') {
      emit(Tok::LBrack, 1);
    } else if (c == ']') {
      emit(Tok::RBrack, 1);
    } else if (c == ',') {
      emit(Tok::Comma, 1);
    } else if (c == '!') {
      emit(Tok::Not, 1);
    } else if (c == '+') {
      emit(Tok::Plus, 1);
    } else if (c == '-') {
      emit(Tok::Minus, 1);
    } else if (c == '*') {
      emit(Tok::Star, 1);
    } else {
      std::size_t len = 1;
      while (i + len < src.size() && std::ispunct(static_cast<unsigned char>(src[i + len])) &&
             src[i + len] != '(' && src[i + len] != ')' && src[i + len] != '[' && src[i + len] != ']')
        ++len;
      throw ParseError("unknown operator '" + std::string(src.substr(i, len)) + "'", line, col);
    }
  }
  out.push_back({Tok::End, "", line, col});
  return out;
}

class Parser {
 public:
  explicit Parser(std::vector<Token> toks) : toks_(std::move(toks)) {}

  Formula parse() {
    if (peek().kind == Tok::End) fail("empty formula");
    auto f = implies();
    if (peek().kind != Tok::End) fail("unexpected '" + peek().text + "'");
    return f;
  }

 private:
  const Token& peek(std::size_t ahead = 0) const {
    return toks_[std::min(pos_ + ahead, toks_.size() - 1)];
  }
  const Token& take() { return toks_[std::min(pos_++, toks_.size() - 1)]; }
  bool accept(Tok k) {
    if (peek().kind != k) return false;
    ++pos_;
    return true;
  }
  [[noreturn]] void fail(const std::string& msg, const Token* at = nullptr) const {
    const Token& t = at ? *at : peek();
    throw ParseError(msg, t.line, t.column);
  }
  const Token& expect(Tok k, const char* what) {
    if (peek().kind != k) {
      fail(std::string("expected ") + what + (peek().kind == Tok::End ? " at end of input" : ", found '" + peek().text + "'"));
    }
    return take();
  }

  Formula implies() {
    auto lhs = disjunction();
    if (accept(Tok::Implies)) return Implies(lhs, implies());
    return lhs;
  }

  Formula disjunction() {
    auto lhs = conjunction();
    while (accept(Tok::Or)) lhs = Or(lhs, conjunction());
    return lhs;
  }

  Formula conjunction() {
    auto lhs = binary_temporal();
    while (accept(Tok::And)) lhs = And(lhs, binary_temporal());
    return lhs;
  }

  static bool is_binary_temporal(Tok k) {
    return k == Tok::Until || k == Tok::Release || k == Tok::NonStrictRelease;
  }

  Formula binary_temporal() {
    auto lhs = unary();
    if (!is_binary_temporal(peek().kind)) return lhs;
    const Tok op = take().kind;
    auto iv = optional_interval();
    auto rhs = unary();
    if (is_binary_temporal(peek().kind)) fail("chained U/R/RW operators need parentheses");
    switch (op) {
      case Tok::Until: return Until(lhs, rhs, iv);
      case Tok::Release: return Release(lhs, rhs, iv);
      default: return NonStrictRelease(lhs, rhs, iv);
    }
  }

  Formula unary() {
    switch (peek().kind) {
      case Tok::Not: take(); return Not(unary());
      case Tok::Next: {
        take();
        auto iv = optional_interval();
        return Next(unary(), iv);
      }
      case Tok::Eventually: {
        take();
        auto iv = optional_interval();
        return Eventually(unary(), iv);
      }
      case Tok::Always: {
        take();
        auto iv = optional_interval();
        return Always(unary(), iv);
      }
      default: return primary();
    }
  }

  Formula primary() {
    const Token& t = peek();
    switch (t.kind) {
      case Tok::True: take(); return True();
      case Tok::LParen: {
        take();
        auto f = implies();
        expect(Tok::RParen, "')'");
        return f;
      }
      case Tok::Ident:
      case Tok::Number:
      case Tok::Minus: return atom();
      case Tok::End: fail("unexpected end of formula");
      default: fail("unexpected '" + t.text + "'");
    }
  }

  double number() {
    bool negative = false;
    if (accept(Tok::Minus)) negative = true;
    else accept(Tok::Plus);
    const Token& t = expect(Tok::Number, "a number");
    const double v = util::parse_double(t.text);
    return negative ? -v : v;
  }

  AffineAtom::Term term(bool negative) {
    const Token& start = peek();
    double coef = 1.0;
    if (peek().kind == Tok::Number) {
      coef = util::parse_double(take().text);
      expect(Tok::Star, "'*' after coefficient");
    }
    if (peek().kind != Tok::Ident) {
      if (peek().kind == Tok::Next || peek().kind == Tok::Eventually || peek().kind == Tok::Always ||
          peek().kind == Tok::Until || peek().kind == Tok::Release || peek().kind == Tok::NonStrictRelease)
        fail("'" + peek().text + "' is reserved and cannot name a signal");
      fail("expected a signal name", &start);
    }
    return {take().text, negative ? -coef : coef};
  }

  Formula atom() {
    const Token& start = peek();
    AffineAtom a;
    a.terms.push_back(term(accept(Tok::Minus)));
    while (peek().kind == Tok::Plus || peek().kind == Tok::Minus) {
      const bool neg = take().kind == Tok::Minus;
      a.terms.push_back(term(neg));
    }
    const Token& rel = peek();
    if (rel.kind != Tok::Ge && rel.kind != Tok::Le) fail("expected '>=' or '<=' after '" + a.terms.back().channel + "'");
    take();
    const double threshold = number();
    if (rel.kind == Tok::Ge) {
      a.constant = canonical(-threshold);
    } else {
      for (auto& t : a.terms) t.coef = -t.coef;
      a.constant = canonical(threshold);
    }
    if (a.norm() == 0.0) fail("atom coefficients are all zero", &start);
    return Atom(std::move(a));
  }

  Interval optional_interval() {
    const Token& open = peek();
    const bool starts =
        open.kind == Tok::LBrack ||
        (open.kind == Tok::LParen && peek(1).kind == Tok::Number && peek(2).kind == Tok::Comma);
    if (!starts) return {};
    take();
    const bool lo_open = open.kind == Tok::LParen;
    const double lo = number();
    expect(Tok::Comma, "',' in interval");
    double hi = std::numeric_limits<double>::infinity();
    accept(Tok::Plus);
    if (!accept(Tok::Inf)) hi = number();
    bool hi_open;
    if (accept(Tok::RBrack)) hi_open = false;
    else if (accept(Tok::RParen)) hi_open = true;
    else fail("expected ']' or ')' to close interval");
    try {
      return Interval(lo, hi, lo_open, hi_open);
    } catch (const std::invalid_argument& e) {
      fail(e.what(), &open);
    }
  }

  std::vector<Token> toks_;
  std::size_t pos_ = 0;
};

} // namespace

Formula parse_formula(std::string_view text) { return Parser(tokenize(text)).parse(); }

} // namespace rsstl::stl
