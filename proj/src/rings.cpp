#include "monodep/rings.hpp"

#include <stdexcept>

namespace monodep {

std::optional<RMembership> r_membership(const RElem& a) {
  if (!a.in_localization()) return std::nullopt;
  auto c = is_rational_constant(a.const_coefficient());
  if (!c) return std::nullopt;
  return RMembership{a, *c};
}

std::optional<RMembership> r_invert(const RMembership& a) {
  if (sgn(a.const_part) == 0) return std::nullopt;
  // a = c0 + g with g in S^{-1}p; a^{-1} = c0^{-1} - c0^{-1} g / (c0 + g).
  const RElem c0(RatFun1(a.const_part));
  const RElem c0_inv(RatFun1(Rational(1 / a.const_part)));
  const RElem g = a.element - c0;
  const RElem inv = c0_inv - fraction_arith(c0_inv * g, a.element, FractionOp::div);
  return r_membership(inv);
}

WValue w_value(const RatFun2& a) {
  if (a.is_zero()) return std::nullopt;
  const long i = v_adic_valuation(a);
  const RatFun1 lead = eval_at_v0(a * RatFun2::monomial(-i, 0));
  return std::pair<long, long>(i, lead.u_valuation());
}

bool w_value_geq(const WValue& a, const WValue& b) {
  if (!a) return true;
  if (!b) return false;
  return *a >= *b;
}

bool w_membership(const RatFun2& a) {
  return w_value_geq(w_value(a), std::pair<long, long>(0, 0));
}

bool w_divides(const RatFun2& a, const RatFun2& b) {
  if (a.is_zero()) throw std::invalid_argument("w_divides: zero divisor");
  return w_membership(b / a);
}

std::string to_string(const WValue& w) {
  if (!w) return "inf";
  return "(" + std::to_string(w->first) + "," + std::to_string(w->second) + ")";
}

long uniform_int(Rng& rng, long lo, long hi) {
  const auto span = static_cast<std::uint64_t>(hi - lo + 1);
  return lo + static_cast<long>(rng() % span);
}

const std::vector<QuadScalar>& exponent_pool() {
  static const std::vector<QuadScalar> pool = {
      QuadScalar(Rational(1, 2)), QuadScalar(1), QuadScalar(Rational(3, 2)),
      QuadScalar(2),              QuadScalar::sqrt2(), QuadScalar(2) - QuadScalar::sqrt2()};
  return pool;
}

Rational random_rational(Rng& rng, long height) {
  long p = 0;
  while (p == 0) p = uniform_int(rng, -height, height);
  const long q = uniform_int(rng, 1, 3);
  return make_rational(p, q);
}

RatFun1 random_ratfun1(Rng& rng, int max_degree) {
  std::vector<Rational> num(static_cast<std::size_t>(uniform_int(rng, 1, max_degree + 1)));
  for (auto& c : num) c = uniform_int(rng, 0, 2) == 0 ? Rational(0) : random_rational(rng, 3);
  num.back() = random_rational(rng, 3);
  UPoly den(Rational(1));
  if (uniform_int(rng, 0, 2) == 0) den = UPoly::variable() + UPoly(random_rational(rng, 3));
  return RatFun1(UPoly(num), den);
}

namespace {

QuadScalar random_exponent(Rng& rng) {
  const auto& pool = exponent_pool();
  return pool[static_cast<std::size_t>(uniform_int(rng, 0, static_cast<long>(pool.size()) - 1))];
}

/// Positive-exponent part with 1..max_terms terms over K.
template <class K, class Coeff>
MonoidElem<K> random_positive(Rng& rng, int max_terms, Coeff coeff) {
  MonoidElem<K> m;
  while (m.is_zero()) {
    const long terms = uniform_int(rng, 1, max_terms);
    for (long t = 0; t < terms; ++t) m.add_term(random_exponent(rng), coeff(rng));
  }
  return m;
}

Rational small_coeff(Rng& rng) { return random_rational(rng, 5); }

}  // namespace

MonoidQ random_monoid_q(Rng& rng, int max_terms, bool with_constant) {
  MonoidQ m = random_positive<Rational>(rng, max_terms, small_coeff);
  if (with_constant) m.add_term(QuadScalar(0), random_rational(rng, 5));
  return m;
}

VElem random_v_elem(Rng& rng, bool unit) {
  const bool with_constant = unit || uniform_int(rng, 0, 1) == 0;
  MonoidQ num;
  while (num.is_zero() || (unit && sgn(num.coeff(QuadScalar(0))) == 0))
    num = random_monoid_q(rng, 3, with_constant);
  if (uniform_int(rng, 0, 1) == 0) return VElem(num);
  MonoidQ den = random_monoid_q(rng, 2, false);
  den.add_term(QuadScalar(0), Rational(1));
  return VElem(num, den);
}

VElem random_v_nonunit(Rng& rng) {
  MonoidQ num = random_monoid_q(rng, 3, false);
  if (uniform_int(rng, 0, 1) == 0) return VElem(num);
  MonoidQ den = random_monoid_q(rng, 2, false);
  den.add_term(QuadScalar(0), Rational(1));
  return VElem(num, den);
}

namespace {

RElem random_r_tail(Rng& rng) {
  auto coeff = [](Rng& r) { return random_ratfun1(r, 1); };
  MonoidQu g = random_positive<RatFun1>(rng, 2, coeff);
  if (uniform_int(rng, 0, 1) == 0) return RElem(g);
  MonoidQu s = random_positive<RatFun1>(rng, 1, coeff);
  s.add_term(QuadScalar(0), random_ratfun1(rng, 1));
  return RElem(g, s);
}

}  // namespace

RElem random_r_elem(Rng& rng) {
  const Rational c0 = uniform_int(rng, 0, 2) == 0 ? Rational(0) : random_rational(rng, 5);
  return RElem(RatFun1(c0)) + random_r_tail(rng);
}

RElem random_r_nonunit(Rng& rng) { return random_r_tail(rng); }

RatFun2 random_ratfun2(Rng& rng) {
  auto small_bipoly = [&rng](bool force_constant) {
    BiPoly p;
    while (p.is_zero() || (force_constant && p.eval_v0().is_zero())) {
      p = BiPoly();
      for (std::size_t i = 0; i < 2; ++i)
        for (std::size_t j = 0; j < 2; ++j)
          if (uniform_int(rng, 0, 1) == 0) p += BiPoly::term(random_rational(rng, 4), i, j);
    }
    return p;
  };
  RatFun2 x(small_bipoly(false));
  if (uniform_int(rng, 0, 1) == 0) x = x / RatFun2(small_bipoly(true));
  return x * RatFun2::monomial(uniform_int(rng, -2, 2), uniform_int(rng, -3, 3));
}

}  // namespace monodep
