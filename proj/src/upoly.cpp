#include "monodep/upoly.hpp"
#include "monodep/element_traits.hpp"

#include <stdexcept>

namespace monodep {

UPoly::UPoly(const Rational& c) {
  if (sgn(c) != 0) c_.push_back(c);
}

UPoly::UPoly(std::vector<Rational> coeffs) : c_(std::move(coeffs)) { trim(); }

UPoly UPoly::monomial(const Rational& c, std::size_t degree) {
  UPoly p;
  if (sgn(c) == 0) return p;
  p.c_.assign(degree + 1, Rational(0));
  p.c_[degree] = c;
  return p;
}

void UPoly::trim() {
  while (!c_.empty() && sgn(c_.back()) == 0) c_.pop_back();
}

std::size_t UPoly::valuation() const {
  if (is_zero()) throw std::domain_error("valuation of zero polynomial");
  std::size_t i = 0;
  while (sgn(c_[i]) == 0) ++i;
  return i;
}

UPoly UPoly::monic() const {
  if (is_zero()) return *this;
  return *this * Rational(1 / lc());
}

Rational UPoly::eval(const Rational& x) const {
  Rational acc(0);
  for (auto it = c_.rbegin(); it != c_.rend(); ++it) acc = acc * x + *it;
  return acc;
}

UPoly UPoly::operator-() const {
  UPoly r = *this;
  for (auto& c : r.c_) c = -c;
  return r;
}

UPoly& UPoly::operator+=(const UPoly& o) {
  if (o.c_.size() > c_.size()) c_.resize(o.c_.size(), Rational(0));
  for (std::size_t i = 0; i < o.c_.size(); ++i) c_[i] += o.c_[i];
  trim();
  return *this;
}

UPoly& UPoly::operator-=(const UPoly& o) {
  if (o.c_.size() > c_.size()) c_.resize(o.c_.size(), Rational(0));
  for (std::size_t i = 0; i < o.c_.size(); ++i) c_[i] -= o.c_[i];
  trim();
  return *this;
}

UPoly operator*(const UPoly& a, const UPoly& b) {
  if (a.is_zero() || b.is_zero()) return {};
  std::vector<Rational> out(a.c_.size() + b.c_.size() - 1, Rational(0));
  for (std::size_t i = 0; i < a.c_.size(); ++i) {
    if (sgn(a.c_[i]) == 0) continue;
    for (std::size_t j = 0; j < b.c_.size(); ++j) out[i + j] += a.c_[i] * b.c_[j];
  }
  return UPoly(std::move(out));
}

UPoly operator*(UPoly a, const Rational& s) {
  if (sgn(s) == 0) return {};
  for (auto& c : a.c_) c *= s;
  return a;
}

std::string UPoly::to_string(const std::string& var) const {
  if (is_zero()) return "0";
  std::string out;
  for (int d = degree(); d >= 0; --d) {
    const Rational& c = c_[static_cast<std::size_t>(d)];
    if (sgn(c) == 0) continue;
    Rational mag = abs(c);
    if (out.empty()) {
      if (sgn(c) < 0) out += "-";
    } else {
      out += sgn(c) < 0 ? " - " : " + ";
    }
    if (d == 0) {
      out += monodep::to_string(mag);
      continue;
    }
    if (mag != 1) out += monodep::to_string(mag) + "*";
    out += var;
    if (d > 1) out += "^" + std::to_string(d);
  }
  return out;
}

std::pair<UPoly, UPoly> divmod(const UPoly& a, const UPoly& b) {
  if (b.is_zero()) throw std::domain_error("polynomial division by zero");
  UPoly rem = a;
  if (a.degree() < b.degree()) return {UPoly(), rem};
  std::vector<Rational> q(static_cast<std::size_t>(a.degree() - b.degree() + 1), Rational(0));
  const Rational inv_lc = 1 / b.lc();
  while (!rem.is_zero() && rem.degree() >= b.degree()) {
    const auto shift = static_cast<std::size_t>(rem.degree() - b.degree());
    const Rational f = rem.lc() * inv_lc;
    q[shift] = f;
    rem -= UPoly::monomial(f, shift) * b;
  }
  return {UPoly(std::move(q)), rem};
}

UPoly exact_div(const UPoly& a, const UPoly& b) {
  auto [q, r] = divmod(a, b);
  if (!r.is_zero()) throw std::domain_error("inexact polynomial division");
  return q;
}

UPoly gcd(const UPoly& a, const UPoly& b) {
  UPoly x = a, y = b;
  while (!y.is_zero()) {
    UPoly r = divmod(x, y).second;
    x = std::move(y);
    y = std::move(r);
  }
  return x.monic();
}

RatFun1::RatFun1(UPoly num, UPoly den) {
  if (den.is_zero()) throw std::domain_error("rational function with zero denominator");
  if (num.is_zero()) {
    den_ = UPoly(Rational(1));
    return;
  }
  UPoly g = gcd(num, den);
  if (g.degree() > 0) {
    num = exact_div(num, g);
    den = exact_div(den, g);
  }
  const Rational s = 1 / den.lc();
  num_ = num * s;
  den_ = den * s;
}

long RatFun1::u_valuation() const {
  return static_cast<long>(num_.valuation()) - static_cast<long>(den_.valuation());
}

RatFun1 operator+(const RatFun1& a, const RatFun1& b) {
  if (a.den_ == b.den_) return RatFun1(a.num_ + b.num_, a.den_);
  return RatFun1(a.num_ * b.den_ + b.num_ * a.den_, a.den_ * b.den_);
}

RatFun1 operator-(const RatFun1& a, const RatFun1& b) {
  if (a.den_ == b.den_) return RatFun1(a.num_ - b.num_, a.den_);
  return RatFun1(a.num_ * b.den_ - b.num_ * a.den_, a.den_ * b.den_);
}

RatFun1 operator*(const RatFun1& a, const RatFun1& b) {
  return RatFun1(a.num_ * b.num_, a.den_ * b.den_);
}

RatFun1 operator/(const RatFun1& a, const RatFun1& b) {
  if (b.is_zero()) throw std::domain_error("division by zero in Q(u)");
  return RatFun1(a.num_ * b.den_, a.den_ * b.num_);
}

std::string RatFun1::to_string() const {
  if (den_.is_constant()) return num_.to_string("u");
  return quotient_text(num_.to_string("u"), den_.to_string("u"));
}

std::optional<Rational> is_rational_constant(const RatFun1& a) {
  if (!a.num().is_constant() || !a.den().is_constant()) return std::nullopt;
  return a.num().coeff(0) / a.den().coeff(0);
}

}  // namespace monodep
