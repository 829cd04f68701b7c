#include "limitless/expr/parser.hpp"

#include <cctype>
#include <limits>
#include <vector>

#include "limitless/errors.hpp"

namespace limitless {

namespace {

enum class Tok {
  Int,
  Decimal,
  Ident,
  Plus,
  Minus,
  Star,
  Slash,
  Caret,
  LParen,
  RParen,
  End
};

struct Token {
  Tok kind;
  std::string text;
  std::size_t offset;
  std::size_t end;
};

constexpr long kMaxExponent = 4096;

const std::vector<std::string>& primary_expected() {
  static const std::vector<std::string> v{"number", "x",   "(",   "-",  "sqrt",
                                          "sin",    "cos", "abs", "sgn"};
  return v;
}

const std::vector<std::string>& operator_expected() {
  static const std::vector<std::string> v{"+", "-", "*", "/", "^",
                                          "end of input"};
  return v;
}

bool is_digit(char c) { return std::isdigit(static_cast<unsigned char>(c)); }
bool is_alpha(char c) { return std::isalpha(static_cast<unsigned char>(c)); }

std::vector<Token> lex(std::string_view s) {
  std::vector<Token> out;
  std::size_t i = 0;
  while (i < s.size()) {
    const char c = s[i];
    if (c == ' ' || c == '\t' || c == '\n' || c == '\r') {
      ++i;
      continue;
    }
    const std::size_t start = i;
    auto single = [&](Tok kind, std::size_t len = 1) {
      out.push_back({kind, std::string(s.substr(start, len)), start,
                     start + len});
      i = start + len;
    };
    if (is_digit(c)) {
      while (i < s.size() && is_digit(s[i])) ++i;
      Tok kind = Tok::Int;
      if (i < s.size() && s[i] == '.') {
        ++i;
        if (i >= s.size() || !is_digit(s[i])) {
          throw ParseError("malformed decimal literal", i, {"digit"});
        }
        while (i < s.size() && is_digit(s[i])) ++i;
        kind = Tok::Decimal;
      }
      out.push_back({kind, std::string(s.substr(start, i - start)), start, i});
      continue;
    }
    if (is_alpha(c)) {
      while (i < s.size() && is_alpha(s[i])) ++i;
      out.push_back(
          {Tok::Ident, std::string(s.substr(start, i - start)), start, i});
      continue;
    }
    switch (c) {
      case '+': single(Tok::Plus); continue;
      case '-': single(Tok::Minus); continue;
      case '*': single(Tok::Star); continue;
      case '/': single(Tok::Slash); continue;
      case '^': single(Tok::Caret); continue;
      case '(': single(Tok::LParen); continue;
      case ')': single(Tok::RParen); continue;
      default: break;
    }
    // U+00F7 DIVISION SIGN in UTF-8.
    if (static_cast<unsigned char>(c) == 0xC3 && i + 1 < s.size() &&
        static_cast<unsigned char>(s[i + 1]) == 0xB7) {
      single(Tok::Slash, 2);
      continue;
    }
    throw ParseError("unexpected character '" + std::string(1, c) + "'", i,
                     primary_expected());
  }
  out.push_back({Tok::End, "", s.size(), s.size()});
  return out;
}

Expr negate(Expr e) {
  if (e.is_const()) return Expr::constant(-e.value());
  return Expr::sub(Expr(), std::move(e));
}

class Parser {
 public:
  explicit Parser(std::vector<Token> tokens) : toks_(std::move(tokens)) {}

  Expr parse_all() {
    Expr e = parse_expr();
    if (peek().kind != Tok::End) {
      fail("unexpected '" + peek().text + "'", operator_expected());
    }
    return e;
  }

 private:
  const Token& peek(std::size_t ahead = 0) const {
    const std::size_t i = pos_ + ahead;
    return i < toks_.size() ? toks_[i] : toks_.back();
  }
  const Token& take() { return toks_[pos_++]; }

  [[noreturn]] void fail(const std::string& what,
                         std::vector<std::string> expected) const {
    throw ParseError(what, peek().offset, std::move(expected));
  }

  Expr parse_expr() {
    Expr left = parse_term();
    while (peek().kind == Tok::Plus || peek().kind == Tok::Minus) {
      const bool plus = take().kind == Tok::Plus;
      Expr right = parse_term();
      left = plus ? Expr::add(std::move(left), std::move(right))
                  : Expr::sub(std::move(left), std::move(right));
    }
    return left;
  }

  Expr parse_term() {
    Expr left = parse_unary();
    while (peek().kind == Tok::Star || peek().kind == Tok::Slash) {
      const bool times = take().kind == Tok::Star;
      Expr right = parse_unary();
      left = times ? Expr::mul(std::move(left), std::move(right))
                   : Expr::div(std::move(left), std::move(right));
    }
    return left;
  }

  Expr parse_unary() {
    if (peek().kind == Tok::Minus) {
      take();
      return negate(parse_unary());
    }
    return parse_power();
  }

  Expr parse_power() {
    Expr base = parse_primary();
    if (peek().kind != Tok::Caret) return base;
    take();
    const long long n = parse_exponent();
    if (peek().kind == Tok::Caret) {
      fail("chained '^' needs parentheses",
           {"+", "-", "*", "/", ")", "end of input"});
    }
    return Expr::pow(std::move(base), n);
  }

  long long parse_exponent() {
    bool paren = false;
    if (peek().kind == Tok::LParen) {
      take();
      paren = true;
    }
    bool negative = false;
    if (peek().kind == Tok::Minus) {
      take();
      negative = true;
    }
    if (peek().kind != Tok::Int) {
      fail("exponent must be an integer literal",
           paren || negative ? std::vector<std::string>{"integer"}
                             : std::vector<std::string>{"integer", "-", "("});
    }
    const Token& tok = peek();
    const BigInt n(tok.text, 10);
    if (n > kMaxExponent) {
      fail("exponent out of range (|n| <= " + std::to_string(kMaxExponent) +
               ")",
           {"integer"});
    }
    take();
    if (paren) {
      if (peek().kind != Tok::RParen) fail("expected ')'", {")"});
      take();
    }
    const long long value = n.get_si();
    return negative ? -value : value;
  }

  bool fraction_literal_ahead() const {
    const Token& num = peek();
    const Token& slash = peek(1);
    const Token& den = peek(2);
    if (slash.kind != Tok::Slash || slash.text != "/" ||
        slash.offset != num.end || den.kind != Tok::Int ||
        den.offset != slash.end) {
      return false;
    }
    if (peek(3).kind == Tok::Caret) return false;
    if (pos_ > 0) {
      const Tok prev = toks_[pos_ - 1].kind;
      if (prev == Tok::Slash || prev == Tok::Caret) return false;
    }
    return true;
  }

  Expr parse_primary() {
    const Token& tok = peek();
    switch (tok.kind) {
      case Tok::Int: {
        if (fraction_literal_ahead()) {
          const BigInt num(tok.text, 10);
          take();
          take();
          const Token& den_tok = peek();
          const BigInt den(den_tok.text, 10);
          if (den == 0) fail("zero denominator in fraction literal", {"integer"});
          take();
          return Expr::constant(Rational(num, den));
        }
        take();
        return Expr::constant(Rational(BigInt(tok.text, 10)));
      }
      case Tok::Decimal: {
        take();
        return Expr::constant(Rational::parse(tok.text));
      }
      case Tok::Ident: {
        if (tok.text == "x") {
          take();
          return Expr::var();
        }
        Expr (*make)(Expr) = nullptr;
        if (tok.text == "sqrt") make = &Expr::sqrt;
        if (tok.text == "sin") make = &Expr::sin;
        if (tok.text == "cos") make = &Expr::cos;
        if (tok.text == "abs") make = &Expr::abs;
        if (tok.text == "sgn") make = &Expr::sgn;
        if (make == nullptr) {
          fail("unknown identifier '" + tok.text + "'",
               {"x", "sqrt", "sin", "cos", "abs", "sgn"});
        }
        take();
        if (peek().kind != Tok::LParen) fail("expected '('", {"("});
        take();
        Expr arg = parse_expr();
        if (peek().kind != Tok::RParen) fail("expected ')'", {")"});
        take();
        return make(std::move(arg));
      }
      case Tok::LParen: {
        take();
        Expr inner = parse_expr();
        if (peek().kind != Tok::RParen) {
          fail("expected ')'", {")", "+", "-", "*", "/", "^"});
        }
        take();
        return inner;
      }
      case Tok::End:
        fail("unexpected end of input", primary_expected());
      default:
        fail("unexpected '" + tok.text + "'", primary_expected());
    }
  }

  std::vector<Token> toks_;
  std::size_t pos_ = 0;
};

// Binding levels used by the printer: 1 additive, 2 multiplicative (and
// positive fraction constants), 3 prefix minus (and negative constants),
// 4 power, 5 atoms.
int level(const Expr& e) {
  switch (e.op()) {
    case Op::Const:
      if (e.value().sign() < 0) return 3;
      return e.value().is_integer() ? 5 : 2;
    case Op::Var:
    case Op::Sqrt:
    case Op::Sin:
    case Op::Cos:
    case Op::Abs:
    case Op::Sgn:
      return 5;
    case Op::Pow:
      return 4;
    case Op::Sub:
      return e.is_negation() ? 3 : 1;
    case Op::Add:
      return 1;
    case Op::Mul:
    case Op::Div:
      return 2;
  }
  return 0;
}

void emit(const Expr& e, std::string& out);

void emit_at_least(const Expr& e, int min_level, std::string& out) {
  if (level(e) >= min_level) {
    emit(e, out);
    return;
  }
  out += '(';
  emit(e, out);
  out += ')';
}

void emit_additive_rhs(const Expr& e, std::string& out) {
  if (level(e) == 3) {
    out += '(';
    emit(e, out);
    out += ')';
    return;
  }
  emit_at_least(e, 2, out);
}

void emit(const Expr& e, std::string& out) {
  switch (e.op()) {
    case Op::Const:
      out += e.value().to_string();
      return;
    case Op::Var:
      out += 'x';
      return;
    case Op::Add:
      emit_at_least(e.lhs(), 1, out);
      out += " + ";
      emit_additive_rhs(e.rhs(), out);
      return;
    case Op::Sub:
      if (e.is_negation()) {
        out += '-';
        emit_at_least(e.rhs(), 4, out);
        return;
      }
      emit_at_least(e.lhs(), 1, out);
      out += " - ";
      emit_additive_rhs(e.rhs(), out);
      return;
    case Op::Mul:
      emit_at_least(e.lhs(), 2, out);
      out += '*';
      emit_at_least(e.rhs(), 4, out);
      return;
    case Op::Div:
      emit_at_least(e.lhs(), 2, out);
      out += " / ";
      emit_at_least(e.rhs(), 4, out);
      return;
    case Op::Pow:
      emit_at_least(e.lhs(), 5, out);
      out += '^';
      if (e.exponent() < 0) {
        out += "(" + std::to_string(e.exponent()) + ")";
      } else {
        out += std::to_string(e.exponent());
      }
      return;
    case Op::Sqrt:
    case Op::Sin:
    case Op::Cos:
    case Op::Abs:
    case Op::Sgn:
      out += op_name(e.op());
      out += '(';
      emit(e.lhs(), out);
      out += ')';
      return;
  }
}

}  // namespace

Expr parse(std::string_view text) { return Parser(lex(text)).parse_all(); }

std::string format(const Expr& e) {
  std::string out;
  emit(e, out);
  return out;
}

}  // namespace limitless
