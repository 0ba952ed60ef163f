#pragma once

#include <optional>
#include <stdexcept>
#include <string>

#include "monodep/bipoly.hpp"
#include "monodep/rational.hpp"
#include "monodep/upoly.hpp"

namespace monodep {

/// Uniform access to the coefficient types polynomials are built over.
/// Specialisations provide zero(), one(), is_zero(x), inverse(x) (in the
/// ambient fraction field; nothing for zero) and to_string(x).
template <class E>
struct ElementTraits;

template <>
struct ElementTraits<Rational> {
  static Rational zero() { return Rational(0); }
  static Rational one() { return Rational(1); }
  static bool is_zero(const Rational& x) { return sgn(x) == 0; }
  static std::optional<Rational> inverse(const Rational& x) {
    if (sgn(x) == 0) return std::nullopt;
    return Rational(1 / x);
  }
  static std::string to_string(const Rational& x) { return monodep::to_string(x); }
};

template <>
struct ElementTraits<RatFun1> {
  static RatFun1 zero() { return {}; }
  static RatFun1 one() { return RatFun1(1); }
  static bool is_zero(const RatFun1& x) { return x.is_zero(); }
  static std::optional<RatFun1> inverse(const RatFun1& x) {
    if (x.is_zero()) return std::nullopt;
    return RatFun1(1) / x;
  }
  static std::string to_string(const RatFun1& x) { return x.to_string(); }
};

template <>
struct ElementTraits<RatFun2> {
  static RatFun2 zero() { return {}; }
  static RatFun2 one() { return RatFun2(1); }
  static bool is_zero(const RatFun2& x) { return x.is_zero(); }
  static std::optional<RatFun2> inverse(const RatFun2& x) {
    if (x.is_zero()) return std::nullopt;
    return x.inverse();
  }
  static std::string to_string(const RatFun2& x) { return x.to_string(); }
};

template <class E>
bool is_one(const E& x) {
  return x == ElementTraits<E>::one();
}

/// x^k by repeated squaring; negative k uses the ambient inverse and throws
/// std::domain_error for zero.
template <class E>
E power(const E& x, long k) {
  using T = ElementTraits<E>;
  if (k < 0) {
    auto inv = T::inverse(x);
    if (!inv) throw std::domain_error("negative power of zero");
    return power(*inv, -k);
  }
  E result = T::one();
  E base = x;
  while (k > 0) {
    if (k & 1) result = result * base;
    k >>= 1;
    if (k > 0) base = base * base;
  }
  return result;
}

template <>
inline RatFun2 power(const RatFun2& x, long k) {
  return x.pow(k);
}

/// Whether a coefficient string must be parenthesised to be re-read as a
/// single factor: any top-level '+', '/', or non-leading '-'.
bool needs_parens(const std::string& s);

/// Splits a leading minus sign off a coefficient string when the rest is a
/// single product or quotient, so it can be printed as " - rest".
bool split_sign(std::string& s);

/// "num/den" with parentheses only where re-reading needs them.
std::string quotient_text(const std::string& num, const std::string& den);

}  // namespace monodep
