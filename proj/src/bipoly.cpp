#include "monodep/bipoly.hpp"
#include "monodep/element_traits.hpp"

#include <stdexcept>

namespace monodep {

BiPoly::BiPoly(const UPoly& c) {
  if (!c.is_zero()) c_.push_back(c);
}

BiPoly::BiPoly(std::vector<UPoly> coeffs) : c_(std::move(coeffs)) { trim(); }

BiPoly BiPoly::term(const Rational& c, std::size_t i, std::size_t j) {
  return BiPoly(UPoly::monomial(c, i)).shift_v(j);
}

void BiPoly::trim() {
  while (!c_.empty() && c_.back().is_zero()) c_.pop_back();
}

std::size_t BiPoly::v_valuation() const {
  if (is_zero()) throw std::domain_error("v-valuation of zero polynomial");
  std::size_t j = 0;
  while (c_[j].is_zero()) ++j;
  return j;
}

BiPoly BiPoly::shift_v(std::size_t k) const {
  if (is_zero() || k == 0) return *this;
  BiPoly r;
  r.c_.assign(k, UPoly());
  r.c_.insert(r.c_.end(), c_.begin(), c_.end());
  return r;
}

BiPoly BiPoly::unshift_v(std::size_t k) const {
  if (k == 0 || is_zero()) return *this;
  for (std::size_t j = 0; j < k && j < c_.size(); ++j)
    if (!c_[j].is_zero()) throw std::domain_error("polynomial not divisible by v^k");
  BiPoly r;
  if (k < c_.size()) r.c_.assign(c_.begin() + static_cast<std::ptrdiff_t>(k), c_.end());
  return r;
}

UPoly BiPoly::content() const {
  UPoly g;
  for (const auto& c : c_) {
    g = gcd(g, c);
    if (g.degree() == 0) break;
  }
  return g;
}

BiPoly BiPoly::primitive_part() const {
  if (is_zero()) return *this;
  const UPoly g = content();
  BiPoly r;
  r.c_.reserve(c_.size());
  for (const auto& c : c_) r.c_.push_back(g.degree() > 0 ? exact_div(c, g) : c * (1 / g.lc()));
  r.trim();
  return r;
}

BiPoly BiPoly::operator-() const {
  BiPoly r = *this;
  for (auto& c : r.c_) c = -c;
  return r;
}

BiPoly& BiPoly::operator+=(const BiPoly& o) {
  if (o.c_.size() > c_.size()) c_.resize(o.c_.size());
  for (std::size_t j = 0; j < o.c_.size(); ++j) c_[j] += o.c_[j];
  trim();
  return *this;
}

BiPoly& BiPoly::operator-=(const BiPoly& o) {
  if (o.c_.size() > c_.size()) c_.resize(o.c_.size());
  for (std::size_t j = 0; j < o.c_.size(); ++j) c_[j] -= o.c_[j];
  trim();
  return *this;
}

BiPoly operator*(const BiPoly& a, const BiPoly& b) {
  if (a.is_zero() || b.is_zero()) return {};
  std::vector<UPoly> out(a.c_.size() + b.c_.size() - 1);
  for (std::size_t i = 0; i < a.c_.size(); ++i) {
    if (a.c_[i].is_zero()) continue;
    for (std::size_t j = 0; j < b.c_.size(); ++j) {
      if (b.c_[j].is_zero()) continue;
      out[i + j] += a.c_[i] * b.c_[j];
    }
  }
  return BiPoly(std::move(out));
}

BiPoly operator*(BiPoly a, const UPoly& s) {
  if (s.is_zero()) return {};
  for (auto& c : a.c_) c = c * s;
  return a;
}

BiPoly operator*(BiPoly a, const Rational& s) {
  if (sgn(s) == 0) return {};
  for (auto& c : a.c_) c = c * s;
  return a;
}

std::string BiPoly::to_string() const {
  if (is_zero()) return "0";
  std::string out;
  for (int j = deg_v(); j >= 0; --j) {
    const UPoly& cj = c_[static_cast<std::size_t>(j)];
    for (int i = cj.degree(); i >= 0; --i) {
      const Rational& c = cj.coeffs()[static_cast<std::size_t>(i)];
      if (sgn(c) == 0) continue;
      Rational mag = abs(c);
      if (out.empty()) {
        if (sgn(c) < 0) out += "-";
      } else {
        out += sgn(c) < 0 ? " - " : " + ";
      }
      std::string mono;
      if (i > 0) mono += i == 1 ? "u" : "u^" + std::to_string(i);
      if (j > 0) {
        if (!mono.empty()) mono += "*";
        mono += j == 1 ? "v" : "v^" + std::to_string(j);
      }
      if (mono.empty()) {
        out += monodep::to_string(mag);
      } else if (mag == 1) {
        out += mono;
      } else {
        out += monodep::to_string(mag) + "*" + mono;
      }
    }
  }
  return out;
}

BiPoly pseudo_remainder(const BiPoly& a, const BiPoly& b) {
  if (b.is_zero()) throw std::domain_error("pseudo-remainder by zero");
  const int d = b.deg_v();
  const UPoly& l = b.lc_v();
  BiPoly r = a;
  while (!r.is_zero() && r.deg_v() >= d) {
    const auto shift = static_cast<std::size_t>(r.deg_v() - d);
    BiPoly t = BiPoly(r.lc_v()).shift_v(shift);
    r = r * l - t * b;
  }
  return r;
}

BiPoly exact_div(const BiPoly& a, const BiPoly& b) {
  if (b.is_zero()) throw std::domain_error("polynomial division by zero");
  if (a.is_zero()) return {};
  BiPoly r = a;
  const int d = b.deg_v();
  if (r.deg_v() < d) throw std::domain_error("inexact bivariate division");
  std::vector<UPoly> q(static_cast<std::size_t>(r.deg_v() - d + 1));
  while (!r.is_zero()) {
    if (r.deg_v() < d) throw std::domain_error("inexact bivariate division");
    const auto shift = static_cast<std::size_t>(r.deg_v() - d);
    UPoly f = exact_div(r.lc_v(), b.lc_v());
    r -= (b * f).shift_v(shift);
    q[shift] = std::move(f);
  }
  return BiPoly(std::move(q));
}

BiPoly gcd(const BiPoly& a, const BiPoly& b) {
  if (a.is_zero() && b.is_zero()) return {};
  if (a.is_zero()) return b * (1 / b.lc());
  if (b.is_zero()) return a * (1 / a.lc());
  const UPoly c = gcd(a.content(), b.content());
  BiPoly x = a.primitive_part();
  BiPoly y = b.primitive_part();
  if (x.deg_v() < y.deg_v()) std::swap(x, y);
  while (!y.is_zero()) {
    if (y.deg_v() == 0) {
      // A primitive v-free polynomial is a unit.
      x = BiPoly(Rational(1));
      break;
    }
    BiPoly r = pseudo_remainder(x, y);
    x = std::move(y);
    y = r.is_zero() ? r : r.primitive_part();
  }
  BiPoly g = x.primitive_part() * c;
  return g * (1 / g.lc());
}

RatFun2::RatFun2(BiPoly num, BiPoly den) {
  if (den.is_zero()) throw std::domain_error("rational function with zero denominator");
  if (num.is_zero()) {
    den_ = BiPoly(Rational(1));
    return;
  }
  BiPoly g = gcd(num, den);
  if (!(g.deg_v() == 0 && g.lc_v().degree() == 0)) {
    num = exact_div(num, g);
    den = exact_div(den, g);
  }
  const Rational s = 1 / den.lc();
  num_ = num * s;
  den_ = den * s;
}

RatFun2 RatFun2::monomial(long i, long j) {
  BiPoly num(Rational(1)), den(Rational(1));
  if (i >= 0) {
    num = num.shift_v(static_cast<std::size_t>(i));
  } else {
    den = den.shift_v(static_cast<std::size_t>(-i));
  }
  const UPoly uj = UPoly::monomial(Rational(1), static_cast<std::size_t>(j < 0 ? -j : j));
  if (j >= 0) {
    num = num * uj;
  } else {
    den = den * uj;
  }
  return RatFun2(std::move(num), std::move(den), Reduced{});
}

namespace {

bool is_one(const BiPoly& p) { return p.deg_v() == 0 && p.lc_v().degree() == 0 && p.lc() == 1; }

}  // namespace

RatFun2 operator+(const RatFun2& a, const RatFun2& b) {
  if (a.is_zero()) return b;
  if (b.is_zero()) return a;
  if (a.den_ == b.den_) return RatFun2(a.num_ + b.num_, a.den_);
  BiPoly n = a.num_ * b.den_ + b.num_ * a.den_;
  if (n.is_zero()) return {};
  return RatFun2(std::move(n), a.den_ * b.den_);
}

RatFun2 operator-(const RatFun2& a, const RatFun2& b) { return a + (-b); }

RatFun2 operator*(const RatFun2& a, const RatFun2& b) {
  if (a.is_zero() || b.is_zero()) return {};
  if (is_one(a.den_) && is_one(b.den_)) return RatFun2(a.num_ * b.num_, BiPoly(Rational(1)), RatFun2::Reduced{});
  // Cross-cancel so the product needs no further gcd.
  const BiPoly g1 = gcd(a.num_, b.den_);
  const BiPoly g2 = gcd(b.num_, a.den_);
  BiPoly n = exact_div(a.num_, g1) * exact_div(b.num_, g2);
  BiPoly d = exact_div(a.den_, g2) * exact_div(b.den_, g1);
  const Rational s = 1 / d.lc();
  return RatFun2(n * s, d * s, RatFun2::Reduced{});
}

RatFun2 operator/(const RatFun2& a, const RatFun2& b) {
  if (b.is_zero()) throw std::domain_error("division by zero in Q(u,v)");
  return a * b.inverse();
}

RatFun2 RatFun2::inverse() const {
  if (is_zero()) throw std::domain_error("inverse of zero in Q(u,v)");
  const Rational s = 1 / num_.lc();
  return RatFun2(den_ * s, num_ * s, Reduced{});
}

RatFun2 RatFun2::pow(long k) const {
  if (k < 0) return inverse().pow(-k);
  BiPoly n(Rational(1)), d(Rational(1));
  BiPoly bn = num_, bd = den_;
  while (k > 0) {
    if (k & 1) {
      n = n * bn;
      d = d * bd;
    }
    k >>= 1;
    if (k > 0) {
      bn = bn * bn;
      bd = bd * bd;
    }
  }
  return RatFun2(std::move(n), std::move(d), Reduced{});
}

std::string RatFun2::to_string() const {
  if (is_one(den_)) return num_.to_string();
  return quotient_text(num_.to_string(), den_.to_string());
}

long v_adic_valuation(const RatFun2& a) {
  if (a.is_zero()) throw std::invalid_argument("v-adic valuation of zero");
  return static_cast<long>(a.num().v_valuation()) - static_cast<long>(a.den().v_valuation());
}

RatFun1 eval_at_v0(const RatFun2& a) {
  if (a.den().eval_v0().is_zero())
    throw std::domain_error("evaluation at v = 0 undefined: denominator divisible by v");
  return RatFun1(a.num().eval_v0(), a.den().eval_v0());
}

}  // namespace monodep
