#pragma once

#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "monodep/rational.hpp"

namespace monodep {

/// Dense univariate polynomial over Q, coefficients stored low degree first.
class UPoly {
 public:
  UPoly() = default;
  UPoly(const Rational& c);  // NOLINT(google-explicit-constructor)
  explicit UPoly(std::vector<Rational> coeffs);

  static UPoly monomial(const Rational& c, std::size_t degree);
  static UPoly variable() { return monomial(Rational(1), 1); }

  /// -1 for the zero polynomial.
  int degree() const { return static_cast<int>(c_.size()) - 1; }
  bool is_zero() const { return c_.empty(); }
  bool is_constant() const { return c_.size() <= 1; }
  const std::vector<Rational>& coeffs() const { return c_; }
  Rational coeff(std::size_t i) const { return i < c_.size() ? c_[i] : Rational(0); }
  /// Leading coefficient; zero for the zero polynomial.
  Rational lc() const { return c_.empty() ? Rational(0) : c_.back(); }
  /// Multiplicity of the variable as a factor; requires nonzero.
  std::size_t valuation() const;

  UPoly monic() const;
  Rational eval(const Rational& x) const;

  UPoly operator-() const;
  UPoly& operator+=(const UPoly& o);
  UPoly& operator-=(const UPoly& o);
  friend UPoly operator+(UPoly a, const UPoly& b) { return a += b; }
  friend UPoly operator-(UPoly a, const UPoly& b) { return a -= b; }
  friend UPoly operator*(const UPoly& a, const UPoly& b);
  friend UPoly operator*(UPoly a, const Rational& s);
  friend bool operator==(const UPoly& a, const UPoly& b) { return a.c_ == b.c_; }

  std::string to_string(const std::string& var = "u") const;

 private:
  void trim();
  std::vector<Rational> c_;
};

/// Quotient and remainder; throws std::domain_error on a zero divisor.
std::pair<UPoly, UPoly> divmod(const UPoly& a, const UPoly& b);
/// Quotient when b divides a; throws std::domain_error otherwise.
UPoly exact_div(const UPoly& a, const UPoly& b);
/// Monic gcd (zero when both inputs are zero).
UPoly gcd(const UPoly& a, const UPoly& b);

/// Element of Q(u): reduced fraction with monic denominator.
class RatFun1 {
 public:
  RatFun1() : den_(Rational(1)) {}
  RatFun1(const Rational& c) : num_(c), den_(Rational(1)) {}  // NOLINT(google-explicit-constructor)
  RatFun1(long c) : RatFun1(Rational(c)) {}                   // NOLINT(google-explicit-constructor)
  RatFun1(const UPoly& p) : num_(p), den_(Rational(1)) {}     // NOLINT(google-explicit-constructor)
  RatFun1(UPoly num, UPoly den);

  static RatFun1 u() { return RatFun1(UPoly::variable()); }

  const UPoly& num() const { return num_; }
  const UPoly& den() const { return den_; }
  bool is_zero() const { return num_.is_zero(); }

  /// ord_u(num) - ord_u(den); requires nonzero.
  long u_valuation() const;

  RatFun1 operator-() const { return RatFun1(-num_, den_, Reduced{}); }
  friend RatFun1 operator+(const RatFun1& a, const RatFun1& b);
  friend RatFun1 operator-(const RatFun1& a, const RatFun1& b);
  friend RatFun1 operator*(const RatFun1& a, const RatFun1& b);
  friend RatFun1 operator/(const RatFun1& a, const RatFun1& b);
  RatFun1& operator+=(const RatFun1& o) { return *this = *this + o; }
  RatFun1& operator-=(const RatFun1& o) { return *this = *this - o; }
  RatFun1& operator*=(const RatFun1& o) { return *this = *this * o; }
  RatFun1& operator/=(const RatFun1& o) { return *this = *this / o; }
  friend bool operator==(const RatFun1& a, const RatFun1& b) {
    return a.num_ == b.num_ && a.den_ == b.den_;
  }

  std::string to_string() const;

 private:
  struct Reduced {};
  RatFun1(UPoly num, UPoly den, Reduced) : num_(std::move(num)), den_(std::move(den)) {}
  UPoly num_;
  UPoly den_;
};

/// The value when a is a constant rational function.
std::optional<Rational> is_rational_constant(const RatFun1& a);

}  // namespace monodep
