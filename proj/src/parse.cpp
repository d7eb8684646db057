#include "dshuffle/parse.hpp"

#include <cctype>

namespace dshuffle {

ParseError::ParseError(const std::string& text, size_t pos, const std::string& why)
    : std::invalid_argument("cannot parse '" + text + "' at offset " + std::to_string(pos) + ": " + why) {}

namespace {

class Parser {
 public:
  Parser(const std::string& t, int n) : t_(t), n_(n) {}

  Element run() {
    Element e = expr();
    skip();
    if (p_ != t_.size()) fail("unexpected '" + std::string(1, t_[p_]) + "'");
    return e;
  }

 private:
  const std::string& t_;
  int n_;
  size_t p_ = 0;

  [[noreturn]] void fail(const std::string& why) const { throw ParseError(t_, p_, why); }

  void skip() {
    while (p_ < t_.size() && std::isspace((unsigned char)t_[p_])) ++p_;
  }
  bool eat(char c) {
    skip();
    if (p_ < t_.size() && t_[p_] == c) {
      ++p_;
      return true;
    }
    return false;
  }
  std::string digits() {
    skip();
    size_t b = p_;
    while (p_ < t_.size() && std::isdigit((unsigned char)t_[p_])) ++p_;
    if (b == p_) fail("expected digits");
    return t_.substr(b, p_ - b);
  }
  int small_int() {
    std::string d = digits();
    if (d.size() > 6) fail("integer too large");
    return std::stoi(d);
  }

  Element scalar(const Q& q) {
    Element e;
    e.scalar = q;
    return e;
  }
  Element dr(const Series<Q>& s) {
    Element e;
    e.side = Side::DR;
    e.dr = s;
    return e;
  }
  Element betti(const betti::GroupAlg& a) {
    Element e;
    e.side = Side::Betti;
    e.b = a;
    return e;
  }

  // bring both operands to a common side
  void unify(Element& a, Element& b) {
    if (a.side == b.side) return;
    if (a.side != Side::Scalar && b.side != Side::Scalar) fail("cannot mix e/y letters with X/Y letters");
    Element& s = a.side == Side::Scalar ? a : b;
    Side to = a.side == Side::Scalar ? b.side : a.side;
    if (to == Side::DR) s = dr(s.scalar * Series<Q>::one(n_));
    else s = betti(betti::ga_word(FreeWord{}, s.scalar));
  }

  Element add(Element a, Element b, int sign) {
    unify(a, b);
    switch (a.side) {
      case Side::Scalar: return scalar(sign > 0 ? Q(a.scalar + b.scalar) : Q(a.scalar - b.scalar));
      case Side::DR: return dr(sign > 0 ? a.dr + b.dr : a.dr - b.dr);
      case Side::Betti: return betti(sign > 0 ? a.b + b.b : a.b - b.b);
    }
    return a;
  }

  Element mul(Element a, Element b) {
    if (a.side == Side::Scalar && b.side != Side::Scalar) return scale(b, a.scalar);
    if (b.side == Side::Scalar) return scale(a, b.scalar);
    unify(a, b);
    if (a.side == Side::DR) return dr(a.dr * b.dr);
    return betti(betti::ga_mul(a.b, b.b));
  }

  Element scale(Element a, const Q& q) {
    if (a.side == Side::Scalar) a.scalar *= q;
    if (a.side == Side::DR) a.dr *= q;
    if (a.side == Side::Betti) a.b *= q;
    return a;
  }

  Element power(Element a, int e) {
    if (e < 0) {
      if (a.side == Side::Scalar) {
        if (a.scalar == 0) fail("division by zero");
        a.scalar = 1 / a.scalar;
      } else if (a.side == Side::Betti && a.b.size() == 1 && a.b.terms().begin()->second == 1) {
        a = betti(betti::ga_word(fw_inv(a.b.terms().begin()->first)));
      } else {
        fail("negative powers are only defined for group words and scalars");
      }
      e = -e;
    }
    Element r = scalar(1);
    for (int i = 0; i < e; ++i) r = mul(r, a);
    return r;
  }

  Element expr() {
    Element a = term();
    for (;;) {
      if (eat('+')) a = add(a, term(), 1);
      else if (eat('-')) a = add(a, term(), -1);
      else return a;
    }
  }
  Element term() {
    Element a = unary();
    while (eat('*') || starts_letter()) a = mul(a, unary());
    return a;
  }
  // juxtaposed letters multiply, so "e0e1" reads as e0*e1
  bool starts_letter() {
    skip();
    return p_ < t_.size() && std::string("eXyY(").find(t_[p_]) != std::string::npos;
  }
  Element unary() {
    if (eat('-')) return scale(unary(), -1);
    Element a = primary();
    if (eat('^')) {
      bool neg = eat('-');
      int e = small_int();
      a = power(a, neg ? -e : e);
    }
    return a;
  }
  Element primary() {
    skip();
    if (p_ >= t_.size()) fail("unexpected end of input");
    char c = t_[p_];
    if (c == '(') {
      ++p_;
      Element a = expr();
      if (!eat(')')) fail("expected ')'");
      return a;
    }
    if (std::isdigit((unsigned char)c)) {
      std::string num = digits();
      std::string den = "1";
      if (eat('/')) den = digits();
      if (den.find_first_not_of('0') == std::string::npos) fail("zero denominator");
      Q q(num + "/" + den);
      q.canonicalize();
      return scalar(q);
    }
    ++p_;
    if (c == 'e' || c == 'X') {
      if (p_ >= t_.size() || (t_[p_] != '0' && t_[p_] != '1')) fail("expected 0 or 1 after " + std::string(1, c));
      int i = t_[p_++] - '0';
      if (c == 'e') return dr(Series<Q>::letter(i, n_));
      return betti(betti::ga_word(FreeWord{fgen(i)}));
    }
    if (c == 'y' || c == 'Y') {
      if (p_ >= t_.size() || !std::isdigit((unsigned char)t_[p_])) fail("expected index after " + std::string(1, c));
      int k = small_int();
      if (k < 1) fail("index must be >= 1");
      if (c == 'y') {
        Word w(k - 1, 0);
        w.push_back(1);
        return dr(Series<Q>::monomial(w, -1, n_));
      }
      if (p_ >= t_.size() || (t_[p_] != '+' && t_[p_] != '-')) fail("expected + or - after Y" + std::to_string(k));
      int s = t_[p_++] == '+' ? 1 : -1;
      return betti(betti::y_generator(k, s));
    }
    --p_;
    fail("unknown symbol '" + std::string(1, c) + "'");
  }
};

}  // namespace

Element parse_element(const std::string& text, int n) {
  if (n < 0) throw std::invalid_argument("negative truncation");
  return Parser(text, n).run();
}

Series<Q> parse_dr(const std::string& text, int n) {
  Element e = parse_element(text, n);
  if (e.side == Side::Betti) throw ParseError(text, 0, "expected an element in e0, e1, y<n>");
  return e.side == Side::Scalar ? e.scalar * Series<Q>::one(n) : e.dr;
}

betti::GroupAlg parse_betti(const std::string& text) {
  Element e = parse_element(text, 0);
  if (e.side == Side::DR) throw ParseError(text, 0, "expected an element in X0, X1, Y<n>+-");
  return e.side == Side::Scalar ? betti::ga_word(FreeWord{}, e.scalar) : e.b;
}

Q parse_rational(const std::string& text) {
  Element e = parse_element(text, 0);
  if (e.side != Side::Scalar) throw ParseError(text, 0, "expected a rational number");
  return e.scalar;
}

}  // namespace dshuffle
