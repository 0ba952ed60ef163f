#pragma once

#include <string>
#include <vector>

#include "monodep/upoly.hpp"

namespace monodep {

/// Polynomial in Q[u][v], stored as coefficients in Q[u] indexed by v-degree.
class BiPoly {
 public:
  BiPoly() = default;
  BiPoly(const Rational& c) : BiPoly(UPoly(c)) {}  // NOLINT(google-explicit-constructor)
  BiPoly(const UPoly& c);                         // NOLINT(google-explicit-constructor)
  explicit BiPoly(std::vector<UPoly> coeffs);

  static BiPoly u() { return BiPoly(UPoly::variable()); }
  static BiPoly v() { return BiPoly(std::vector<UPoly>{UPoly(), UPoly(Rational(1))}); }
  /// c * u^i * v^j
  static BiPoly term(const Rational& c, std::size_t i, std::size_t j);

  bool is_zero() const { return c_.empty(); }
  /// Degree in v; -1 for zero.
  int deg_v() const { return static_cast<int>(c_.size()) - 1; }
  const std::vector<UPoly>& coeffs() const { return c_; }
  UPoly coeff(std::size_t j) const { return j < c_.size() ? c_[j] : UPoly(); }
  const UPoly& lc_v() const { return c_.back(); }
  /// Leading coefficient in the fixed term order (v-degree, then u-degree).
  Rational lc() const { return c_.empty() ? Rational(0) : c_.back().lc(); }
  /// Multiplicity of v as a factor; requires nonzero.
  std::size_t v_valuation() const;

  BiPoly shift_v(std::size_t k) const;
  /// Divides by v^k; the k lowest coefficients must vanish.
  BiPoly unshift_v(std::size_t k) const;
  UPoly eval_v0() const { return coeff(0); }

  /// Monic gcd of the Q[u] coefficients.
  UPoly content() const;
  BiPoly primitive_part() const;

  BiPoly operator-() const;
  BiPoly& operator+=(const BiPoly& o);
  BiPoly& operator-=(const BiPoly& o);
  friend BiPoly operator+(BiPoly a, const BiPoly& b) { return a += b; }
  friend BiPoly operator-(BiPoly a, const BiPoly& b) { return a -= b; }
  friend BiPoly operator*(const BiPoly& a, const BiPoly& b);
  friend BiPoly operator*(BiPoly a, const UPoly& s);
  friend BiPoly operator*(BiPoly a, const Rational& s);
  friend bool operator==(const BiPoly& a, const BiPoly& b) { return a.c_ == b.c_; }

  std::string to_string() const;

 private:
  void trim();
  std::vector<UPoly> c_;
};

/// Pseudo-remainder in v, up to a nonzero factor from Q[u].
BiPoly pseudo_remainder(const BiPoly& a, const BiPoly& b);
/// a / b when b divides a in Q[u][v]; throws std::domain_error otherwise.
BiPoly exact_div(const BiPoly& a, const BiPoly& b);
/// gcd in Q[u][v], normalised to leading coefficient 1.
BiPoly gcd(const BiPoly& a, const BiPoly& b);

/// Element of Q(u, v): num/den with gcd 1, den with leading coefficient 1
/// in the (v-degree, u-degree) order. Unique representation.
class RatFun2 {
 public:
  RatFun2() : den_(Rational(1)) {}
  RatFun2(const Rational& c) : num_(c), den_(Rational(1)) {}  // NOLINT(google-explicit-constructor)
  RatFun2(long c) : RatFun2(Rational(c)) {}                   // NOLINT(google-explicit-constructor)
  RatFun2(const BiPoly& p) : num_(p), den_(Rational(1)) {}    // NOLINT(google-explicit-constructor)
  RatFun2(BiPoly num, BiPoly den);

  static RatFun2 u() { return RatFun2(BiPoly::u()); }
  static RatFun2 v() { return RatFun2(BiPoly::v()); }
  /// u^j * v^i for any integers.
  static RatFun2 monomial(long i, long j);

  const BiPoly& num() const { return num_; }
  const BiPoly& den() const { return den_; }
  bool is_zero() const { return num_.is_zero(); }

  RatFun2 operator-() const { return RatFun2(-num_, den_, Reduced{}); }
  friend RatFun2 operator+(const RatFun2& a, const RatFun2& b);
  friend RatFun2 operator-(const RatFun2& a, const RatFun2& b);
  friend RatFun2 operator*(const RatFun2& a, const RatFun2& b);
  friend RatFun2 operator/(const RatFun2& a, const RatFun2& b);
  RatFun2& operator+=(const RatFun2& o) { return *this = *this + o; }
  RatFun2& operator-=(const RatFun2& o) { return *this = *this - o; }
  RatFun2& operator*=(const RatFun2& o) { return *this = *this * o; }
  RatFun2& operator/=(const RatFun2& o) { return *this = *this / o; }
  friend bool operator==(const RatFun2& a, const RatFun2& b) {
    return a.num_ == b.num_ && a.den_ == b.den_;
  }

  RatFun2 inverse() const;
  /// Integer power; negative exponents invert. No gcd needed since num, den are coprime.
  RatFun2 pow(long k) const;

  std::string to_string() const;

 private:
  struct Reduced {};
  RatFun2(BiPoly num, BiPoly den, Reduced) : num_(std::move(num)), den_(std::move(den)) {}
  BiPoly num_;
  BiPoly den_;
};

/// v-multiplicity of num minus that of den. Throws on zero.
long v_adic_valuation(const RatFun2& a);
/// Substitutes v = 0. Throws std::domain_error when den is divisible by v.
RatFun1 eval_at_v0(const RatFun2& a);

}  // namespace monodep
