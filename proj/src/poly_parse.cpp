#include "sdw/poly_parse.hpp"

#include <cctype>

namespace sdw {

namespace {

class PolyParser {
 public:
  PolyParser(const RingPtr& ring, std::string_view s) : ring_(ring), s_(s) {}

  Polynomial run() {
    Polynomial p = sum();
    skip();
    if (pos_ != s_.size()) fail("unexpected '" + std::string(1, s_[pos_]) + "'");
    return p;
  }

 private:
  [[noreturn]] void fail(const std::string& msg) const { throw ParseError(msg, pos_); }

  void skip() {
    while (pos_ < s_.size() && std::isspace(static_cast<unsigned char>(s_[pos_]))) ++pos_;
  }
  bool eat(char c) {
    skip();
    if (pos_ < s_.size() && s_[pos_] == c) {
      ++pos_;
      return true;
    }
    return false;
  }

  Polynomial sum() {
    Polynomial acc(ring_);
    bool first = true;
    while (true) {
      bool neg = false;
      if (eat('-')) neg = true;
      else if (!first && !eat('+')) break;
      else if (first) eat('+');
      Polynomial t = product();
      acc = neg ? acc - t : acc + t;
      first = false;
      skip();
      if (pos_ >= s_.size() || (s_[pos_] != '+' && s_[pos_] != '-')) break;
    }
    return acc;
  }

  Polynomial product() {
    Polynomial acc = power();
    while (true) {
      skip();
      if (eat('*')) {
        acc = acc * power();
        continue;
      }
      // implicit multiplication: "2x", "x y", "(x)(y)"
      if (pos_ < s_.size() && (s_[pos_] == '(' || std::isalpha(static_cast<unsigned char>(s_[pos_])) ||
                               s_[pos_] == '_')) {
        acc = acc * power();
        continue;
      }
      return acc;
    }
  }

  Polynomial power() {
    Polynomial base = atom();
    if (eat('^')) {
      skip();
      std::size_t start = pos_;
      while (pos_ < s_.size() && std::isdigit(static_cast<unsigned char>(s_[pos_]))) ++pos_;
      if (start == pos_) fail("expected exponent");
      long e = std::stol(std::string(s_.substr(start, pos_ - start)));
      if (e > Monomial::kMaxExponent) fail("exponent too large");
      Polynomial r = Polynomial::constant(ring_, 1);
      for (long i = 0; i < e; ++i) r = r * base;
      return r;
    }
    return base;
  }

  Polynomial atom() {
    skip();
    if (pos_ >= s_.size()) fail("unexpected end of polynomial");
    char c = s_[pos_];
    if (c == '(') {
      ++pos_;
      Polynomial p = sum();
      if (!eat(')')) fail("expected ')'");
      return p;
    }
    if (std::isdigit(static_cast<unsigned char>(c))) {
      std::size_t start = pos_;
      while (pos_ < s_.size() && std::isdigit(static_cast<unsigned char>(s_[pos_]))) ++pos_;
      std::string digits(s_.substr(start, pos_ - start));
      // reduce digit by digit so arbitrarily long literals are accepted
      const auto& F = ring_->field();
      PrimeField::Elem v = 0;
      for (char d : digits) v = F.add(F.mul(v, 10 % F.characteristic()), F.from_int(d - '0'));
      return Polynomial::monomial(ring_, ring_->one(), v);
    }
    if (std::isalpha(static_cast<unsigned char>(c)) || c == '_') {
      std::size_t start = pos_;
      while (pos_ < s_.size() &&
             (std::isalnum(static_cast<unsigned char>(s_[pos_])) || s_[pos_] == '_'))
        ++pos_;
      std::string name(s_.substr(start, pos_ - start));
      int i = ring_->var_index(name);
      if (i < 0) {
        pos_ = start;
        fail("unknown variable '" + name + "'");
      }
      return Polynomial::variable(ring_, i);
    }
    fail("unexpected '" + std::string(1, c) + "'");
  }

  const RingPtr& ring_;
  std::string_view s_;
  std::size_t pos_ = 0;
};

}  // namespace

Polynomial parse_polynomial(const RingPtr& ring, std::string_view text) {
  return PolyParser(ring, text).run();
}

}  // namespace sdw
