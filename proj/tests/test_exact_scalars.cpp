#include <doctest.h>

#include "gen.hpp"
#include "monodep/rings.hpp"
#include "oracles.hpp"

using namespace monodep;

namespace {

QuadScalar qs(long a, long b) { return QuadScalar(Rational(a), Rational(b)); }

// Convergents p/q of sqrt2: p - q sqrt2 is tiny, which defeats any
// floating-point shortcut in the comparison.
const std::vector<std::pair<long, long>> kConvergents = {{3, 2}, {7, 5}, {17, 12}, {99, 70}, {577, 408},
                                                         {665857, 470832}, {1572584048032918633L, 1111984844349868137L}};

}  // namespace

TEST_CASE("quad_sign examples") {
  CHECK(quad_sign(qs(0, 0)) == 0);
  CHECK(quad_sign(qs(3, -2)) == 1);
  CHECK(quad_sign(qs(-3, 2)) == -1);
}

TEST_CASE("quad_floor_ratio examples") {
  CHECK(quad_floor_ratio(QuadScalar(Rational(3, 2)), QuadScalar(1), Rounding::floor) == 1);
  CHECK(quad_floor_ratio(QuadScalar::sqrt2(), QuadScalar(1), Rounding::ceil) == 2);
  CHECK(quad_floor_ratio(QuadScalar(5), QuadScalar(5), Rounding::floor) == 1);
}

TEST_CASE("sign and comparison agree with a 512-bit float oracle") {
  Rng rng(11);
  for (int i = 0; i < 2000; ++i) {
    const QuadScalar a = gen::quad(rng, i % 2 ? 9 : 1000);
    const QuadScalar b = gen::quad(rng, i % 2 ? 9 : 1000);
    CHECK(a.sign() == oracle::sign(a));
    const int expect = oracle::sign(a - b);
    const auto got = a <=> b;
    CHECK((got < 0 ? -1 : got > 0 ? 1 : 0) == expect);
  }
}

TEST_CASE("comparison near sqrt2 convergents") {
  for (const auto& [p, q] : kConvergents) {
    const QuadScalar x(Rational(p), Rational(-q));
    CHECK(x.sign() == oracle::sign(x));
    CHECK((QuadScalar(Rational(p)) < QuadScalar(Rational(q)) * QuadScalar::sqrt2()) == (oracle::sign(x) < 0));
    // Scaled up so the doubles lose every significant digit of the difference.
    const Integer big = Integer(1) << 200;
    const QuadScalar y(Rational(big * p), Rational(-big * q));
    CHECK(y.sign() == oracle::sign(x));
    CHECK((QuadScalar(Rational(big * p)) <=> QuadScalar(Rational(0), Rational(big * q))) ==
          (oracle::sign(x) < 0 ? std::strong_ordering::less : std::strong_ordering::greater));
  }
}

TEST_CASE("floor and ceil agree with the oracle") {
  Rng rng(12);
  for (int i = 0; i < 500; ++i) {
    const QuadScalar x = gen::quad(rng, 50);
    const Integer f = oracle::floor_of(x);
    CHECK(round_quad(x, Rounding::floor) == f);
    const bool integral = x.irr() == 0 && x.rat().get_den() == 1;
    CHECK(round_quad(x, Rounding::ceil) == (integral ? f : f + 1));
  }
}

TEST_CASE("quad_floor_ratio agrees with the oracle") {
  Rng rng(13);
  for (int i = 0; i < 300; ++i) {
    QuadScalar a = gen::quad(rng, 20), b = gen::quad(rng, 20);
    if (a.sign() < 0) a = -a;
    if (b.sign() <= 0) b = b.is_zero() ? QuadScalar(1) : -b;
    if (a.is_zero()) continue;
    CHECK(quad_floor_ratio(a, b, Rounding::floor) == oracle::floor_of(a / b));
  }
}

TEST_CASE("field axioms in Q(sqrt2)") {
  Rng rng(14);
  for (int i = 0; i < 300; ++i) {
    const QuadScalar a = gen::quad(rng, 30), b = gen::quad(rng, 30), c = gen::quad(rng, 30);
    CHECK((a + b) * c == a * c + b * c);
    CHECK((a * b) * c == a * (b * c));
    if (!b.is_zero()) CHECK((a / b) * b == a);
    const mpf_class diff = oracle::to_float(a * b) - oracle::to_float(a) * oracle::to_float(b);
    CHECK(abs(diff) < mpf_class("1e-100", 512));
  }
}

TEST_CASE("parse_quad round trip and text forms") {
  CHECK(QuadScalar(2) - QuadScalar::sqrt2() == parse_quad("2-s2"));
  CHECK((QuadScalar(2) - QuadScalar::sqrt2()).to_string() == "2-s2");
  CHECK(QuadScalar::sqrt2().to_string() == "s2");
  CHECK((-QuadScalar::sqrt2()).to_string() == "-s2");
  CHECK(QuadScalar(Rational(0), Rational(-1, 2)).to_string() == "-1/2 s2");
  CHECK(QuadScalar(Rational(3, 2)).to_string() == "3/2");
  Rng rng(15);
  for (int i = 0; i < 300; ++i) {
    const QuadScalar x = gen::quad(rng, 40);
    CHECK(parse_quad(x.to_string()) == x);
  }
  CHECK_THROWS_AS(parse_quad("2+"), std::invalid_argument);
  CHECK_THROWS_AS(parse_quad("s3"), std::invalid_argument);
}

TEST_CASE("random_rational is canonical") {
  Rng rng(16);
  for (int i = 0; i < 200; ++i) {
    const Rational r = random_rational(rng);
    CHECK(gcd(r.get_num(), r.get_den()) == 1);
  }
}

TEST_CASE("UPoly division and gcd") {
  Rng rng(17);
  for (int i = 0; i < 200; ++i) {
    const UPoly a = gen::upoly(rng, 5), b = gen::nonzero_upoly(rng, 3);
    const auto [q, r] = divmod(a, b);
    CHECK(q * b + r == a);
    CHECK((r.is_zero() || r.degree() < b.degree()));
    const UPoly c = gen::nonzero_upoly(rng, 2);
    const UPoly g = gcd(a * c, b * c);
    CHECK(divmod(g, c.monic()).second.is_zero());
    CHECK(divmod(a * c, g).second.is_zero());
    CHECK(divmod(b * c, g).second.is_zero());
    for (const auto& [x, y] : oracle::sample_points()) CHECK((a * b).eval(x) == a.eval(x) * b.eval(x));
  }
}

TEST_CASE("RatFun1 arithmetic against evaluation") {
  Rng rng(18);
  for (int i = 0; i < 200; ++i) {
    const RatFun1 a = random_ratfun1(rng, 3), b = random_ratfun1(rng, 3);
    const RatFun1 s = a + b, p = a * b;
    for (const auto& [x, y] : oracle::sample_points()) {
      const Rational da = a.den().eval(x), db = b.den().eval(x);
      if (da == 0 || db == 0) continue;
      const Rational va = a.num().eval(x) / da, vb = b.num().eval(x) / db;
      CHECK(s.num().eval(x) == (va + vb) * s.den().eval(x));
      CHECK(p.num().eval(x) == va * vb * p.den().eval(x));
    }
    if (!b.is_zero()) CHECK((a / b) * b == a);
  }
}

TEST_CASE("is_rational_constant") {
  CHECK(is_rational_constant(RatFun1(Rational(3, 7))) == Rational(3, 7));
  CHECK_FALSE(is_rational_constant(RatFun1::u()));
  const RatFun1 r(UPoly({Rational(-1), Rational(0), Rational(1)}), UPoly({Rational(-1), Rational(1)}));
  CHECK(r == RatFun1::u() + RatFun1(1));
  CHECK_FALSE(is_rational_constant(r));
}

TEST_CASE("v_adic_valuation and eval_at_v0") {
  const BiPoly u = BiPoly::u(), v = BiPoly::v();
  CHECK(v_adic_valuation(RatFun2(v * v * u, u + v)) == 2);
  CHECK(v_adic_valuation(RatFun2::u()) == 0);
  CHECK(v_adic_valuation(RatFun2(BiPoly(UPoly(Rational(1))), v)) == -1);
  CHECK(eval_at_v0(RatFun2(u + v, u)) == RatFun1(1));
  CHECK(eval_at_v0(RatFun2::u()) == RatFun1::u());
  CHECK(eval_at_v0(RatFun2(v, BiPoly(UPoly(Rational(1))) + v)) == RatFun1(0));
}

TEST_CASE("RatFun2 is reduced and agrees with evaluation") {
  Rng rng(19);
  for (int i = 0; i < 120; ++i) {
    const BiPoly f = gen::nonzero_bipoly(rng, 2, 2), g = gen::nonzero_bipoly(rng, 2, 2), h = gen::nonzero_bipoly(rng, 1, 1);
    const RatFun2 x(f * h, g * h);
    // The common factor h must be gone: numerator and denominator are coprime.
    const BiPoly d = gcd(x.num(), x.den());
    CHECK(d.coeffs().size() == 1);
    CHECK(d.coeff(0).degree() == 0);
    for (const auto& [pu, pv] : oracle::sample_points()) {
      const Rational dg = oracle::eval(g, pu, pv), dx = oracle::eval(x.den(), pu, pv);
      if (dg == 0 || dx == 0 || oracle::eval(h, pu, pv) == 0) continue;
      CHECK(oracle::eval(x.num(), pu, pv) / dx == oracle::eval(f, pu, pv) / dg);
    }
    const RatFun2 y = random_ratfun2(rng);
    CHECK((x + y) - y == x);
    if (!y.is_zero()) CHECK((x * y) / y == x);
  }
}
