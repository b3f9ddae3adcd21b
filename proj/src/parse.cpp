#include "asurj/parse.hpp"

#include <cctype>
#include <cstdlib>
#include <functional>
#include <sstream>

namespace asurj {

namespace {

constexpr int kMaxExponent = 1024;

enum class Tok { Number, Variable, Plus, Minus, Star, Caret, LParen, RParen, End };

struct Token {
  Tok kind;
  std::string text;  // literal for Number, index digits for Variable
  int line = 1;
  int column = 1;
};

class Lexer {
 public:
  explicit Lexer(std::string_view text) : text_(text) { advance(); }

  const Token& peek() const { return tok_; }

  Token take() {
    Token t = tok_;
    advance();
    return t;
  }

  [[noreturn]] void fail(const std::string& msg, const Token& at) const {
    throw ParseError(msg, at.line, at.column);
  }

 private:
  void advance() {
    while (pos_ < text_.size() && std::isspace(static_cast<unsigned char>(text_[pos_]))) {
      if (text_[pos_] == '\n') {
        ++line_;
        col_ = 1;
      } else {
        ++col_;
      }
      ++pos_;
    }
    tok_ = Token{Tok::End, "", line_, col_};
    if (pos_ >= text_.size()) return;
    const char c = text_[pos_];
    auto single = [&](Tok k) {
      tok_.kind = k;
      tok_.text = std::string(1, c);
      ++pos_;
      ++col_;
    };
    switch (c) {
      case '+': single(Tok::Plus); return;
      case '-': single(Tok::Minus); return;
      case '*': single(Tok::Star); return;
      case '^': single(Tok::Caret); return;
      case '(': single(Tok::LParen); return;
      case ')': single(Tok::RParen); return;
      default: break;
    }
    if (std::isdigit(static_cast<unsigned char>(c))) {
      tok_.kind = Tok::Number;
      take_digits();
      // a rational literal p/q is one token; '/' appears nowhere else
      if (pos_ < text_.size() && text_[pos_] == '/') {
        tok_.text += '/';
        ++pos_;
        ++col_;
        if (pos_ >= text_.size() || !std::isdigit(static_cast<unsigned char>(text_[pos_])))
          throw ParseError("expected digits after '/'", line_, col_);
        take_digits();
      }
      return;
    }
    if (c == 'z' || c == 'w') {
      ++pos_;
      ++col_;
      if (pos_ >= text_.size() || !std::isdigit(static_cast<unsigned char>(text_[pos_])))
        throw ParseError(std::string("expected a variable index after '") + c + "'", line_, col_);
      tok_.kind = Tok::Variable;
      take_digits();
      return;
    }
    throw ParseError(std::string("unexpected character '") + c + "'", line_, col_);
  }

  void take_digits() {
    while (pos_ < text_.size() && std::isdigit(static_cast<unsigned char>(text_[pos_]))) {
      tok_.text += text_[pos_++];
      ++col_;
    }
  }

  std::string_view text_;
  size_t pos_ = 0;
  int line_ = 1;
  int col_ = 1;
  Token tok_{Tok::End, "", 1, 1};
};

class Parser {
 public:
  Parser(std::string_view text, int num_vars) : lex_(text), num_vars_(num_vars) {}

  MultiPoly run() {
    MultiPoly p = expr();
    const Token& t = lex_.peek();
    if (t.kind != Tok::End) lex_.fail("unexpected trailing input", t);
    return p;
  }

 private:
  MultiPoly expr() {
    bool negate = false;
    while (lex_.peek().kind == Tok::Plus || lex_.peek().kind == Tok::Minus)
      negate ^= (lex_.take().kind == Tok::Minus);
    MultiPoly acc = term();
    if (negate) acc = -acc;
    while (lex_.peek().kind == Tok::Plus || lex_.peek().kind == Tok::Minus) {
      const bool minus = lex_.take().kind == Tok::Minus;
      MultiPoly t = term();
      if (minus)
        acc -= t;
      else
        acc += t;
    }
    return acc;
  }

  MultiPoly term() {
    MultiPoly acc = factor();
    while (lex_.peek().kind == Tok::Star) {
      lex_.take();
      acc = acc * factor();
    }
    return acc;
  }

  MultiPoly factor() {
    MultiPoly base = atom();
    if (lex_.peek().kind == Tok::Caret) {
      const Token caret = lex_.take();
      const Token& t = lex_.peek();
      if (t.kind == Tok::Minus) lex_.fail("negative exponent", t);
      if (t.kind != Tok::Number || t.text.find('/') != std::string::npos)
        lex_.fail("exponent must be a non-negative integer literal", t.kind == Tok::End ? caret : t);
      const Token num = lex_.take();
      long e = std::strtol(num.text.c_str(), nullptr, 10);
      if (num.text.size() > 4 || e > kMaxExponent) lex_.fail("exponent too large", num);
      base = base.pow(static_cast<int>(e));
    }
    return base;
  }

  MultiPoly atom() {
    const Token t = lex_.take();
    switch (t.kind) {
      case Tok::Number:
        return MultiPoly::constant(num_vars_, rational_from_string(t.text));
      case Tok::Variable: {
        long idx = std::strtol(t.text.c_str(), nullptr, 10);
        if (t.text.size() > 6 || idx < 1 || idx > num_vars_)
          lex_.fail("unknown variable (index out of 1.." + std::to_string(num_vars_) + ")", t);
        return MultiPoly::variable(num_vars_, static_cast<int>(idx));
      }
      case Tok::Minus:
      case Tok::Plus: {
        MultiPoly inner = atom();
        return t.kind == Tok::Minus ? -inner : inner;
      }
      case Tok::LParen: {
        MultiPoly inner = expr();
        const Token close = lex_.take();
        if (close.kind != Tok::RParen) lex_.fail("expected ')'", close);
        return inner;
      }
      case Tok::End:
        lex_.fail("unexpected end of input", t);
      default:
        lex_.fail("expected a number, variable, or '('", t);
    }
  }

  Lexer lex_;
  int num_vars_;
};

}  // namespace

MultiPoly parse_poly(std::string_view text, int num_vars) {
  return Parser(text, num_vars).run();
}

namespace {

std::string print_poly_named(const MultiPoly& p,
                             const std::function<std::string(size_t)>& var_name) {
  if (p.is_zero()) return "0";
  std::ostringstream os;
  bool first = true;
  for (const auto& [e, c] : p.terms()) {
    const bool negative = c < 0;
    const Rational mag = negative ? Rational(-c) : c;
    if (first) {
      if (negative) os << '-';
      first = false;
    } else {
      os << (negative ? " - " : " + ");
    }
    const bool has_vars = exponent_sum(e) > 0;
    if (!has_vars || mag != 1) {
      os << rational_to_string(mag);
      if (has_vars) os << '*';
    }
    bool first_var = true;
    for (size_t i = 0; i < e.size(); ++i) {
      if (e[i] == 0) continue;
      if (!first_var) os << '*';
      first_var = false;
      os << var_name(i);
      if (e[i] > 1) os << '^' << e[i];
    }
  }
  return os.str();
}

}  // namespace

std::string print_poly(const MultiPoly& p, char letter) {
  return print_poly_named(p, [letter](size_t i) { return letter + std::to_string(i + 1); });
}

std::string print_poly_univariate(const MultiPoly& p, std::string_view var_name) {
  if (p.num_vars() != 1)
    throw std::invalid_argument("print_poly_univariate: expects a 1-variable polynomial");
  const std::string name(var_name);
  return print_poly_named(p, [&name](size_t) { return name; });
}

std::string print_map(const PolyMap& f, char letter) {
  std::ostringstream os;
  os << '(';
  for (size_t i = 0; i < f.components().size(); ++i) {
    if (i) os << ", ";
    os << print_poly(f.components()[i], letter);
  }
  os << ')';
  return os.str();
}

namespace {

std::vector<std::string> split_commas(std::string_view text) {
  std::vector<std::string> parts;
  std::string cur;
  for (char c : text) {
    if (c == ',') {
      parts.push_back(cur);
      cur.clear();
    } else if (!std::isspace(static_cast<unsigned char>(c))) {
      cur += c;
    }
  }
  parts.push_back(cur);
  return parts;
}

bool looks_rational(const std::string& s) {
  if (s.empty()) return false;
  size_t i = (s[0] == '+' || s[0] == '-') ? 1 : 0;
  if (i == s.size()) return false;
  bool slash_seen = false;
  for (; i < s.size(); ++i) {
    if (s[i] == '/' && !slash_seen) {
      slash_seen = true;
      continue;
    }
    if (!std::isdigit(static_cast<unsigned char>(s[i]))) return false;
  }
  return true;
}

// decimal complex literal: "a", "bi", "a+bi", "a-bi", "i", "-i"; rational
// literals are also accepted and converted
Complex parse_complex_literal(const std::string& s) {
  if (s.empty()) throw std::invalid_argument("empty coordinate");
  if (looks_rational(s)) return to_complex(rational_from_string(s));
  const char* p = s.c_str();
  auto read_signed = [&](double& out) -> bool {
    // handles bare "i" / "+i" / "-i" by treating the mantissa as 1
    const char* start = p;
    double sign = 1.0;
    if (*p == '+' || *p == '-') {
      if (*p == '-') sign = -1.0;
      ++p;
    }
    if (*p == 'i') {
      out = sign;
      return true;
    }
    char* end = nullptr;
    const double v = std::strtod(p, &end);
    if (end == p) {
      p = start;
      return false;
    }
    p = end;
    out = sign * v;
    return true;
  };
  double first = 0.0;
  if (!read_signed(first)) throw std::invalid_argument("bad coordinate literal: '" + s + "'");
  if (*p == 'i') {
    ++p;
    if (*p != '\0') throw std::invalid_argument("bad coordinate literal: '" + s + "'");
    return Complex(0.0, first);
  }
  if (*p == '\0') return Complex(first, 0.0);
  double second = 0.0;
  if ((*p != '+' && *p != '-') || !read_signed(second) || *p != 'i' || *(p + 1) != '\0')
    throw std::invalid_argument("bad coordinate literal: '" + s + "'");
  return Complex(first, second);
}

}  // namespace

std::vector<Rational> parse_rational_point(std::string_view text) {
  std::vector<Rational> out;
  for (const std::string& part : split_commas(text)) out.push_back(rational_from_string(part));
  return out;
}

std::vector<Complex> parse_complex_point(std::string_view text) {
  std::vector<Complex> out;
  for (const std::string& part : split_commas(text)) out.push_back(parse_complex_literal(part));
  return out;
}

bool point_is_rational(std::string_view text) {
  for (const std::string& part : split_commas(text))
    if (!looks_rational(part)) return false;
  return true;
}

std::string format_complex(Complex z) {
  std::ostringstream os;
  os.precision(12);
  os << z.real();
  if (z.imag() >= 0 || std::isnan(z.imag()))
    os << '+' << z.imag() << 'i';
  else
    os << '-' << -z.imag() << 'i';
  return os.str();
}

std::string format_point(std::span<const Complex> z) {
  std::ostringstream os;
  os << '(';
  for (size_t i = 0; i < z.size(); ++i) {
    if (i) os << ", ";
    os << format_complex(z[i]);
  }
  os << ')';
  return os.str();
}

std::string format_point(std::span<const Rational> z) {
  std::ostringstream os;
  os << '(';
  for (size_t i = 0; i < z.size(); ++i) {
    if (i) os << ", ";
    os << rational_to_string(z[i]);
  }
  os << ')';
  return os.str();
}

}  // namespace asurj
