#pragma once

#include <map>
#include <unordered_map>
#include <utility>
#include <vector>
#include <optional>
#include <stdexcept>
#include <string>

#include "monodep/element_traits.hpp"
#include "monodep/quad_scalar.hpp"
#include "monodep/rational.hpp"

namespace monodep {

/// Finite sum  sum_alpha c_alpha v^alpha  over a base field K (Q or Q(u)),
/// exponents in Q + Q sqrt2. Elements of the monoid ring K{v} have all
/// exponents >= 0; negative exponents are admitted so that the same type can
/// carry numerators of quotient-field elements (see in_monoid()).
template <class K>
class MonoidElem {
 public:
  using KT = ElementTraits<K>;
  using Terms = std::map<QuadScalar, K>;

  MonoidElem() = default;
  MonoidElem(const K& c) { add_term(QuadScalar(0), c); }  // NOLINT(google-explicit-constructor)

  static MonoidElem term(const K& c, const QuadScalar& exponent) {
    MonoidElem m;
    m.add_term(exponent, c);
    return m;
  }
  static MonoidElem v_pow(const QuadScalar& exponent) { return term(KT::one(), exponent); }

  const Terms& terms() const { return t_; }
  bool is_zero() const { return t_.empty(); }
  bool in_monoid() const { return t_.empty() || t_.begin()->first.sign() >= 0; }

  /// Smallest exponent in the support; throws on zero.
  const QuadScalar& min_exponent() const {
    if (t_.empty()) throw std::invalid_argument("min_support of zero");
    return t_.begin()->first;
  }
  K coeff(const QuadScalar& exponent) const {
    auto it = t_.find(exponent);
    return it == t_.end() ? KT::zero() : it->second;
  }

  void add_term(const QuadScalar& exponent, const K& c) {
    if (KT::is_zero(c)) return;
    auto [it, inserted] = t_.try_emplace(exponent, c);
    if (!inserted) {
      it->second = it->second + c;
      if (KT::is_zero(it->second)) t_.erase(it);
    }
  }

  /// Multiplication by v^g.
  MonoidElem shift(const QuadScalar& g) const {
    if (g.is_zero()) return *this;
    MonoidElem r;
    for (const auto& [a, c] : t_) r.t_.emplace_hint(r.t_.end(), a + g, c);
    return r;
  }

  MonoidElem operator-() const {
    MonoidElem r;
    for (const auto& [a, c] : t_) r.t_.emplace_hint(r.t_.end(), a, -c);
    return r;
  }
  MonoidElem& operator+=(const MonoidElem& o) {
    for (const auto& [a, c] : o.t_) add_term(a, c);
    return *this;
  }
  MonoidElem& operator-=(const MonoidElem& o) {
    for (const auto& [a, c] : o.t_) add_term(a, -c);
    return *this;
  }
  friend MonoidElem operator+(MonoidElem a, const MonoidElem& b) { return a += b; }
  friend MonoidElem operator-(MonoidElem a, const MonoidElem& b) { return a -= b; }
  friend MonoidElem operator*(const MonoidElem& a, const MonoidElem& b) {
    if (a.t_.size() * b.t_.size() >= 16) {
      if (auto r = scaled_product(a, b)) return std::move(*r);
    }
    MonoidElem r;
    for (const auto& [x, c] : a.t_)
      for (const auto& [y, d] : b.t_) r.add_term(x + y, c * d);
    return r;
  }
  friend MonoidElem operator*(MonoidElem a, const K& s) {
    if (KT::is_zero(s)) return {};
    for (auto& [x, c] : a.t_) c = c * s;
    return a;
  }
  friend bool operator==(const MonoidElem& a, const MonoidElem& b) { return a.t_ == b.t_; }

  /// Exact quotient *this / d when it exists in the same ring, by long
  /// division from the top exponent; nullopt if d does not divide or the
  /// division exceeds max_steps.
  std::optional<MonoidElem> divide_exact(const MonoidElem& d, std::size_t max_steps = 4096) const {
    if (d.is_zero()) throw std::domain_error("division by zero");
    if (is_zero()) return MonoidElem{};
    const auto& [dtop, dlead] = *d.t_.rbegin();
    const K dinv = *KT::inverse(dlead);
    if (d.t_.size() == 1) return shift(-dtop) * dinv;
    // The quotient's least exponent is forced; anything below it means failure.
    const QuadScalar floor_exp = min_exponent() - d.min_exponent();
    MonoidElem r = *this;
    MonoidElem q;
    for (std::size_t step = 0; !r.is_zero(); ++step) {
      if (step == max_steps) return std::nullopt;
      const auto& [rtop, rlead] = *r.t_.rbegin();
      const QuadScalar e = rtop - dtop;
      if (e < floor_exp) return std::nullopt;
      const K c = rlead * dinv;
      q.add_term(e, c);
      for (const auto& [x, y] : d.t_) r.add_term(x + e, -(c * y));
    }
    return q;
  }

  /// Terms in ascending exponent order, e.g. "1/2 + 3*v^(1/2) - v^(s2)".
  std::string to_string() const {
    if (t_.empty()) return "0";
    std::string out;
    for (const auto& [a, c] : t_) {
      std::string cs = KT::to_string(c);
      const bool negative = split_sign(cs);
      if (needs_parens(cs)) cs = "(" + cs + ")";
      std::string term;
      if (a.is_zero()) {
        term = cs;
      } else {
        std::string vp = "v";
        if (a.is_integer() && a.sign() > 0) {
          if (a != QuadScalar(1)) vp += "^" + a.to_string();
        } else {
          vp += "^(" + a.to_string() + ")";
        }
        term = cs == "1" ? vp : cs + "*" + vp;
      }
      if (out.empty()) {
        out = (negative ? "-" : "") + term;
      } else {
        out += (negative ? " - " : " + ") + term;
      }
    }
    return out;
  }

 private:
  using Key = std::pair<long, long>;
  struct KeyHash {
    std::size_t operator()(const Key& k) const {
      return std::hash<long>()(k.first) * 0x9e3779b97f4a7c15ULL ^ std::hash<long>()(k.second);
    }
  };

  /// Exponents written as (p + q sqrt2)/N over a common N; nullopt when they
  /// do not fit comfortably in machine integers.
  static std::optional<std::vector<Key>> scaled_keys(const MonoidElem& m, const Integer& n) {
    static const Integer limit = Integer(1) << 40;
    std::vector<Key> keys;
    keys.reserve(m.t_.size());
    for (const auto& [x, c] : m.t_) {
      const Integer p = x.rat().get_num() * (n / x.rat().get_den());
      const Integer q = x.irr().get_num() * (n / x.irr().get_den());
      if (abs(p) >= limit || abs(q) >= limit) return std::nullopt;
      keys.emplace_back(p.get_si(), q.get_si());
    }
    return keys;
  }

  static std::optional<MonoidElem> scaled_product(const MonoidElem& a, const MonoidElem& b) {
    Integer n(1);
    for (const MonoidElem* m : {&a, &b})
      for (const auto& [x, c] : m->t_) n = lcm(lcm(n, x.rat().get_den()), x.irr().get_den());
    if (n >= Integer(1) << 20) return std::nullopt;
    const auto ka = scaled_keys(a, n);
    const auto kb = scaled_keys(b, n);
    if (!ka || !kb) return std::nullopt;
    std::unordered_map<Key, K, KeyHash> acc;
    acc.reserve(a.t_.size() * b.t_.size());
    std::size_t i = 0;
    for (const auto& [x, c] : a.t_) {
      std::size_t j = 0;
      for (const auto& [y, d] : b.t_) {
        const Key k{(*ka)[i].first + (*kb)[j].first, (*ka)[i].second + (*kb)[j].second};
        auto [it, inserted] = acc.try_emplace(k, c * d);
        if (!inserted) it->second = it->second + c * d;
        ++j;
      }
      ++i;
    }
    MonoidElem r;
    const Rational inv_n(1, n);
    for (auto& [k, c] : acc)
      if (!KT::is_zero(c)) r.t_.emplace(QuadScalar(Rational(k.first) * inv_n, Rational(k.second) * inv_n), std::move(c));
    return r;
  }

  Terms t_;
};

template <class K>
MonoidElem<K> monoid_add(const MonoidElem<K>& a, const MonoidElem<K>& b) {
  return a + b;
}

template <class K>
MonoidElem<K> monoid_mul(const MonoidElem<K>& a, const MonoidElem<K>& b) {
  return a * b;
}

/// Least exponent in the support (the valuation); throws on zero.
template <class K>
QuadScalar min_support(const MonoidElem<K>& a) {
  return a.min_exponent();
}

template <class K>
K const_coefficient(const MonoidElem<K>& a) {
  return a.coeff(QuadScalar(0));
}

/// Raised when a result leaves the ring it was requested in.
class NotInRing : public std::domain_error {
 public:
  using std::domain_error::domain_error;
};

/// Element num/den of Quot(K{v}). The denominator is normalised to have
/// least exponent 0 with coefficient 1 there, so it lies in S = K{v} \ p.
/// The element belongs to the localization S^{-1}K{v} iff the numerator has
/// no negative exponent.
template <class K>
class Fraction {
 public:
  using KT = ElementTraits<K>;
  using Monoid = MonoidElem<K>;

  Fraction() : den_(KT::one()) {}
  Fraction(const K& c) : num_(c), den_(KT::one()) {}          // NOLINT(google-explicit-constructor)
  Fraction(Monoid num) : num_(std::move(num)), den_(KT::one()) {}  // NOLINT(google-explicit-constructor)
  /// Throws std::domain_error on a zero denominator.
  Fraction(Monoid num, Monoid den) {
    if (den.is_zero()) throw std::domain_error("fraction with zero denominator");
    if (num.is_zero()) {
      den_ = Monoid(KT::one());
      return;
    }
    if (den.terms().size() > 1) {
      if (auto q = num.divide_exact(den)) {
        num_ = std::move(*q);
        den_ = Monoid(KT::one());
        return;
      }
    }
    const QuadScalar g = -den.min_exponent();
    const K lead = den.terms().begin()->second;
    const K inv = *KT::inverse(lead);
    num_ = num.shift(g) * inv;
    den_ = den.shift(g) * inv;
  }

  static Fraction v_pow(const QuadScalar& exponent) { return Fraction(Monoid::v_pow(exponent)); }

  const Monoid& num() const { return num_; }
  const Monoid& den() const { return den_; }
  bool is_zero() const { return num_.is_zero(); }
  bool has_unit_den() const { return den_.terms().size() == 1; }

  /// Value of the valuation v(x) = least exponent of the numerator.
  QuadScalar valuation() const { return num_.min_exponent(); }
  bool in_localization() const { return num_.in_monoid(); }

  /// num(0)/den(0); requires in_localization().
  K const_coefficient() const {
    if (!in_localization()) throw NotInRing("constant coefficient outside the localization");
    return num_.coeff(QuadScalar(0));
  }

  Fraction operator-() const { return Fraction(-num_, den_, Normalised{}); }
  friend Fraction operator+(const Fraction& a, const Fraction& b) {
    if (a.den_ == b.den_) return Fraction(a.num_ + b.num_, a.den_, Normalised{});
    if (a.has_unit_den()) return Fraction(a.num_ * b.den_ + b.num_, b.den_, Normalised{});
    if (b.has_unit_den()) return Fraction(a.num_ + b.num_ * a.den_, a.den_, Normalised{});
    // Prefer the larger denominator when one divides the other (powers of a
    // common factor are the usual case).
    if (auto q = b.den_.divide_exact(a.den_)) return Fraction(a.num_ * *q + b.num_, b.den_, Normalised{});
    if (auto q = a.den_.divide_exact(b.den_)) return Fraction(a.num_ + b.num_ * *q, a.den_, Normalised{});
    return Fraction(a.num_ * b.den_ + b.num_ * a.den_, a.den_ * b.den_);
  }
  friend Fraction operator-(const Fraction& a, const Fraction& b) { return a + (-b); }
  friend Fraction operator*(const Fraction& a, const Fraction& b) {
    if (a.is_zero() || b.is_zero()) return {};
    if (a.has_unit_den() && b.has_unit_den()) return Fraction(a.num_ * b.num_, a.den_, Normalised{});
    Monoid an = a.num_, bn = b.num_, ad = a.den_, bd = b.den_;
    cancel(an, bd);
    cancel(bn, ad);
    return Fraction(an * bn, ad * bd);
  }
  /// Division in Quot(K{v}); throws std::domain_error for a zero divisor.
  friend Fraction operator/(const Fraction& a, const Fraction& b) { return a * b.inverse(); }
  friend bool operator==(const Fraction& a, const Fraction& b) {
    if (a.den_ == b.den_) return a.num_ == b.num_;
    return a.num_ * b.den_ == b.num_ * a.den_;
  }

  Fraction inverse() const {
    if (is_zero()) throw std::domain_error("inverse of zero");
    return Fraction(den_, num_);
  }

  std::string to_string() const {
    if (has_unit_den()) return num_.to_string();
    return quotient_text(num_.to_string(), den_.to_string());
  }

 private:
  struct Normalised {};
  /// Replaces n/d by (n/d)/1 when d divides n.
  static void cancel(Monoid& n, Monoid& d) {
    if (d.terms().size() < 2) return;
    if (auto q = n.divide_exact(d)) {
      n = std::move(*q);
      d = Monoid(KT::one());
    }
  }
  Fraction(Monoid num, Monoid den, Normalised) : num_(std::move(num)), den_(std::move(den)) {
    if (num_.is_zero()) den_ = Monoid(KT::one());
  }

  Monoid num_;
  Monoid den_;
};

template <class K>
struct ElementTraits<Fraction<K>> {
  static Fraction<K> zero() { return {}; }
  static Fraction<K> one() { return Fraction<K>(ElementTraits<K>::one()); }
  static bool is_zero(const Fraction<K>& x) { return x.is_zero(); }
  static std::optional<Fraction<K>> inverse(const Fraction<K>& x) {
    if (x.is_zero()) return std::nullopt;
    return x.inverse();
  }
  static std::string to_string(const Fraction<K>& x) { return x.to_string(); }
};

template <class K>
K const_coefficient(const Fraction<K>& a) {
  return a.const_coefficient();
}

enum class FractionOp { add, mul, div };

/// Arithmetic inside the localization S^{-1}K{v}. Division requires a unit
/// divisor (nonzero constant coefficient); otherwise NotInRing is thrown.
template <class K>
Fraction<K> fraction_arith(const Fraction<K>& a, const Fraction<K>& b, FractionOp op) {
  switch (op) {
    case FractionOp::add:
      return a + b;
    case FractionOp::mul:
      return a * b;
    case FractionOp::div:
      if (!b.in_localization() || ElementTraits<K>::is_zero(b.const_coefficient()))
        throw NotInRing("divisor " + b.to_string() + " is not a unit: its constant coefficient is 0");
      return a / b;
  }
  throw std::logic_error("unknown fraction op");
}

using MonoidQ = MonoidElem<Rational>;
using MonoidQu = MonoidElem<RatFun1>;
/// Elements of Quot(Q{v}); the valuation domain V is the localization part.
using VElem = Fraction<Rational>;
/// Elements of Quot(Q(u){v}); the ring R sits inside.
using RElem = Fraction<RatFun1>;

}  // namespace monodep
