#pragma once

#include <compare>
#include <string>
#include <string_view>

#include "monodep/rational.hpp"

namespace monodep {

/// Exact element rat + irr*sqrt(2) of the ordered field Q(sqrt 2).
///
/// The representation is unique, so field-wise equality is numeric
/// equality. Ordering is decided by sign tests on rationals only.
class QuadScalar {
 public:
  QuadScalar() = default;
  QuadScalar(long value) : rat_(value) {}  // NOLINT(google-explicit-constructor)
  QuadScalar(Rational rat) : rat_(std::move(rat)) {}  // NOLINT(google-explicit-constructor)
  QuadScalar(Rational rat, Rational irr) : rat_(std::move(rat)), irr_(std::move(irr)) {}

  static QuadScalar sqrt2() { return {Rational(0), Rational(1)}; }

  const Rational& rat() const { return rat_; }
  const Rational& irr() const { return irr_; }

  bool is_zero() const { return sgn(rat_) == 0 && sgn(irr_) == 0; }
  bool is_rational() const { return sgn(irr_) == 0; }
  bool is_integer() const { return is_rational() && rat_.get_den() == 1; }

  /// Sign of the real number, in {-1, 0, +1}.
  int sign() const;

  QuadScalar operator-() const { return {-rat_, -irr_}; }
  QuadScalar& operator+=(const QuadScalar& o);
  QuadScalar& operator-=(const QuadScalar& o);
  QuadScalar& operator*=(const QuadScalar& o);
  /// Throws std::domain_error on division by zero.
  QuadScalar& operator/=(const QuadScalar& o);

  friend QuadScalar operator+(QuadScalar a, const QuadScalar& b) { return a += b; }
  friend QuadScalar operator-(QuadScalar a, const QuadScalar& b) { return a -= b; }
  friend QuadScalar operator*(QuadScalar a, const QuadScalar& b) { return a *= b; }
  friend QuadScalar operator/(QuadScalar a, const QuadScalar& b) { return a /= b; }

  friend bool operator==(const QuadScalar& a, const QuadScalar& b) {
    return a.rat_ == b.rat_ && a.irr_ == b.irr_;
  }
  friend std::strong_ordering operator<=>(const QuadScalar& a, const QuadScalar& b);

  /// Textual form accepted by parse_quad: "p/q", "r/s s2", "p/q+r/s s2".
  std::string to_string() const;

 private:
  Rational rat_;
  Rational irr_;
};

int quad_sign(const QuadScalar& x);

enum class Rounding { floor, ceil };

/// Exact floor/ceil of a real number in Q(sqrt 2).
Integer round_quad(const QuadScalar& x, Rounding mode);

/// floor(alpha/beta) or ceil(alpha/beta); beta must be positive.
Integer quad_floor_ratio(const QuadScalar& alpha, const QuadScalar& beta, Rounding mode);

/// Parses the literal grammar used for matrix entries and v-exponents:
/// an optional rational part followed by an optional signed "r/s s2" part,
/// e.g. "3/2", "0+1/1 s2", "2-s2", "s2", "-1/2 s2". Throws std::invalid_argument.
QuadScalar parse_quad(std::string_view text);

}  // namespace monodep
