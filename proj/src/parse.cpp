#include "arboreal/parse.hpp"

#include <cctype>
#include <sstream>

namespace arboreal {

namespace {

class Parser {
 public:
  explicit Parser(const std::string& text) : s_(text) {}

  RatFunc run() {
    RatFunc v = expr();
    skip_ws();
    if (pos_ != s_.size()) fail("unexpected trailing input");
    return v;
  }

 private:
  const std::string& s_;
  std::size_t pos_ = 0;

  [[noreturn]] void fail(const std::string& msg) const {
    throw ParseError(pos_, msg);
  }

  void skip_ws() {
    while (pos_ < s_.size() && std::isspace(static_cast<unsigned char>(s_[pos_])))
      ++pos_;
  }

  bool eat(char c) {
    skip_ws();
    if (pos_ < s_.size() && s_[pos_] == c) {
      ++pos_;
      return true;
    }
    return false;
  }

  char peek() {
    skip_ws();
    return pos_ < s_.size() ? s_[pos_] : '\0';
  }

  RatFunc expr() {
    RatFunc v = term();
    for (;;) {
      if (eat('+'))
        v = v + term();
      else if (eat('-'))
        v = v - term();
      else
        return v;
    }
  }

  RatFunc term() {
    RatFunc v = factor();
    for (;;) {
      if (eat('*')) {
        v = v * factor();
      } else if (eat('/')) {
        RatFunc d = factor();
        if (d.is_zero()) fail("division by zero");
        v = v / d;
      } else {
        return v;
      }
    }
  }

  RatFunc factor() {
    if (eat('-')) return -factor();
    if (eat('+')) return factor();
    RatFunc base = atom();
    if (eat('^')) {
      mpz_class e = integer_literal("exponent");
      if (e > 100000) fail("exponent too large");
      unsigned long n = e.get_ui();
      RatFunc r(Rat(1));
      for (unsigned long i = 0; i < n; ++i) r = r * base;
      return r;
    }
    return base;
  }

  RatFunc atom() {
    char c = peek();
    if (c == '(') {
      ++pos_;
      RatFunc v = expr();
      if (!eat(')')) fail("expected ')'");
      return v;
    }
    if (c == 't') {
      ++pos_;
      return RatFunc(Poly::t());
    }
    if (std::isdigit(static_cast<unsigned char>(c))) {
      return RatFunc(Rat(integer_literal("number")));
    }
    fail("expected polynomial atom");
  }

  mpz_class integer_literal(const char* what) {
    skip_ws();
    std::size_t start = pos_;
    while (pos_ < s_.size() && std::isdigit(static_cast<unsigned char>(s_[pos_])))
      ++pos_;
    if (pos_ == start) fail(std::string("expected ") + what);
    return mpz_class(s_.substr(start, pos_ - start));
  }
};

void render_poly_into(std::ostringstream& out, const Poly& p) {
  if (p.is_zero()) {
    out << "0";
    return;
  }
  bool first = true;
  for (int i = p.deg(); i >= 0; --i) {
    Rat a = p.coeff(static_cast<std::size_t>(i));
    if (sgn(a) == 0) continue;
    if (first) {
      if (sgn(a) < 0) out << "-";
    } else {
      out << (sgn(a) < 0 ? " - " : " + ");
    }
    first = false;
    Rat mag = abs(a);
    bool unit = (mag == 1);
    if (!unit || i == 0) out << rat_to_string(mag);
    if (i > 0) {
      if (!unit) out << "*";
      out << "t";
      if (i > 1) out << "^" << i;
    }
  }
}

}  // namespace

RatFunc parse_ratfunc(const std::string& text) { return Parser(text).run(); }

Poly parse_poly(const std::string& text) {
  RatFunc v = parse_ratfunc(text);
  if (!v.is_poly())
    throw ParseError(text.size(), "expected polynomial, got rational function");
  return v.as_poly();
}

std::string render(const Poly& p) {
  std::ostringstream out;
  render_poly_into(out, p);
  return out.str();
}

std::string render(const RatFunc& f) {
  if (f.is_poly()) return render(f.num());
  std::ostringstream out;
  out << "(";
  render_poly_into(out, f.num());
  out << ")/(";
  render_poly_into(out, f.den());
  out << ")";
  return out.str();
}

}  // namespace arboreal
