#include "monodep/quad_scalar.hpp"

#include <cctype>
#include <cmath>
#include <stdexcept>

namespace monodep {

int QuadScalar::sign() const {
  const int a = sgn(rat_);
  const int b = sgn(irr_);
  if (a >= 0 && b >= 0) return (a > 0 || b > 0) ? 1 : 0;
  if (a <= 0 && b <= 0) return -1;
  // Opposite signs: compare rat^2 against 2*irr^2; equality is impossible.
  const Rational lhs = rat_ * rat_;
  const Rational rhs = 2 * irr_ * irr_;
  const bool rat_dominates = lhs > rhs;
  return rat_dominates ? a : b;
}

QuadScalar& QuadScalar::operator+=(const QuadScalar& o) {
  rat_ += o.rat_;
  irr_ += o.irr_;
  return *this;
}

QuadScalar& QuadScalar::operator-=(const QuadScalar& o) {
  rat_ -= o.rat_;
  irr_ -= o.irr_;
  return *this;
}

QuadScalar& QuadScalar::operator*=(const QuadScalar& o) {
  Rational r = rat_ * o.rat_ + 2 * irr_ * o.irr_;
  Rational i = rat_ * o.irr_ + irr_ * o.rat_;
  rat_ = std::move(r);
  irr_ = std::move(i);
  return *this;
}

QuadScalar& QuadScalar::operator/=(const QuadScalar& o) {
  if (o.is_zero()) throw std::domain_error("QuadScalar division by zero");
  // (a + b s)/(c + d s) = (a + b s)(c - d s) / (c^2 - 2 d^2)
  const Rational norm = o.rat_ * o.rat_ - 2 * o.irr_ * o.irr_;
  *this *= QuadScalar(o.rat_ / norm, -o.irr_ / norm);
  return *this;
}

std::strong_ordering operator<=>(const QuadScalar& a, const QuadScalar& b) {
  if (a.irr_ == b.irr_) {
    int c = cmp(a.rat_, b.rat_);
    return c < 0 ? std::strong_ordering::less
                 : (c > 0 ? std::strong_ordering::greater : std::strong_ordering::equal);
  }
  // Floating-point estimate first; exact arithmetic only when it is too close to call.
  const double ar = a.rat_.get_d(), br = b.rat_.get_d(), ai = a.irr_.get_d(), bi = b.irr_.get_d();
  const double est = (ar - br) + (ai - bi) * 1.4142135623730951;
  const double scale = std::fabs(ar) + std::fabs(br) + 2 * (std::fabs(ai) + std::fabs(bi));
  if (std::isfinite(est) && std::isfinite(scale) && std::fabs(est) > 1e-12 * scale)
    return est < 0 ? std::strong_ordering::less : std::strong_ordering::greater;
  const int s = (a - b).sign();
  return s < 0 ? std::strong_ordering::less
               : (s > 0 ? std::strong_ordering::greater : std::strong_ordering::equal);
}

std::string QuadScalar::to_string() const {
  if (is_rational()) return monodep::to_string(rat_);
  std::string out;
  if (sgn(rat_) != 0) {
    out = monodep::to_string(rat_);
    out += sgn(irr_) < 0 ? "-" : "+";
  } else if (sgn(irr_) < 0) {
    out = "-";
  }
  const Rational mag = abs(irr_);
  if (mag == 1) return out + "s2";
  return out + monodep::to_string(mag) + " s2";
}

int quad_sign(const QuadScalar& x) { return x.sign(); }

Integer round_quad(const QuadScalar& x, Rounding mode) {
  if (mode == Rounding::ceil) return -round_quad(-x, Rounding::floor);
  // Estimate floor(irr*sqrt2) by an integer square root, then correct by sign tests.
  Integer k = floor(x.rat());
  if (sgn(x.irr()) != 0) {
    const Integer m = floor(Rational(2 * x.irr() * x.irr()));
    Integer r;
    mpz_sqrt(r.get_mpz_t(), m.get_mpz_t());
    k += sgn(x.irr()) > 0 ? r : Integer(-r);
  }
  while ((x - QuadScalar(Rational(k))).sign() < 0) --k;
  while ((x - QuadScalar(Rational(k + 1))).sign() >= 0) ++k;
  return k;
}

Integer quad_floor_ratio(const QuadScalar& alpha, const QuadScalar& beta, Rounding mode) {
  if (beta.sign() <= 0) throw std::invalid_argument("quad_floor_ratio: divisor must be positive");
  return round_quad(alpha / beta, mode);
}

namespace {

struct QuadLexer {
  std::string_view s;
  std::size_t pos = 0;

  void skip_ws() {
    while (pos < s.size() && std::isspace(static_cast<unsigned char>(s[pos]))) ++pos;
  }
  bool at_end() {
    skip_ws();
    return pos >= s.size();
  }
  bool peek_s2() {
    skip_ws();
    return s.substr(pos, 2) == "s2";
  }
  bool peek_digit() {
    skip_ws();
    return pos < s.size() && std::isdigit(static_cast<unsigned char>(s[pos]));
  }
  // Unsigned p or p/q.
  Rational number() {
    skip_ws();
    std::size_t start = pos;
    while (pos < s.size() && std::isdigit(static_cast<unsigned char>(s[pos]))) ++pos;
    if (pos < s.size() && s[pos] == '/') {
      ++pos;
      while (pos < s.size() && std::isdigit(static_cast<unsigned char>(s[pos]))) ++pos;
    }
    return parse_rational(s.substr(start, pos - start));
  }
};

}  // namespace

QuadScalar parse_quad(std::string_view text) {
  QuadLexer lx{text};
  auto fail = [&](const std::string& why) {
    return std::invalid_argument("malformed Q(sqrt2) literal '" + std::string(text) + "': " + why);
  };
  Rational rat(0), irr(0);
  bool seen_any = false;
  int sign = 1;
  auto read_sign = [&] {
    lx.skip_ws();
    sign = 1;
    bool got = false;
    while (lx.pos < lx.s.size() && (lx.s[lx.pos] == '+' || lx.s[lx.pos] == '-')) {
      if (lx.s[lx.pos] == '-') sign = -sign;
      ++lx.pos;
      got = true;
      lx.skip_ws();
    }
    return got;
  };
  read_sign();
  while (!lx.at_end()) {
    Rational coeff(1);
    bool has_number = false;
    if (lx.peek_digit()) {
      coeff = lx.number();
      has_number = true;
    }
    if (lx.peek_s2()) {
      lx.pos += 2;
      irr += sign * coeff;
    } else if (has_number) {
      rat += sign * coeff;
    } else {
      throw fail("expected number or s2");
    }
    seen_any = true;
    if (lx.at_end()) break;
    if (!read_sign()) throw fail("expected + or -");
    if (lx.at_end()) throw fail("expected a term after the sign");
  }
  if (!seen_any) throw fail("empty");
  return {rat, irr};
}

}  // namespace monodep
