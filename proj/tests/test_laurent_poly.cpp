#include <doctest.h>

#include "gen.hpp"
#include "monodep/laurent_poly.hpp"
#include "monodep/monoid_ring.hpp"
#include "monodep/order_matrix.hpp"

using namespace monodep;

namespace {

using QPoly = LaurentPoly<Rational>;
using VPoly = LaurentPoly<VElem>;

const QuadScalar s2 = QuadScalar::sqrt2();
QuadScalar q(long a) { return QuadScalar(a); }
QuadScalar qr(long p, long d) { return QuadScalar(Rational(p, d)); }
VElem vpow(const QuadScalar& e) { return VElem::v_pow(e); }

QPoly random_qpoly(Rng& rng, std::size_t n, long max_terms, long lo, long hi) {
  QPoly p(n);
  const long terms = uniform_int(rng, 0, max_terms);
  for (long t = 0; t < terms; ++t) {
    ExpVec e(n);
    for (auto& x : e) x = uniform_int(rng, lo, hi);
    p.add_term(e, gen::rational(rng, 6));
  }
  return p;
}

template <class E>
LaurentPoly<E> X(std::size_t n, std::size_t i) {
  return LaurentPoly<E>::variable(n, i);
}

}  // namespace

TEST_CASE("evaluate examples") {
  const auto x = X<VElem>(2, 0), y = X<VElem>(2, 1);
  CHECK(evaluate(x - y, std::vector<VElem>{vpow(s2), vpow(s2)}).is_zero());
  CHECK(evaluate(y * y - vpow(qr(1, 2)) * x, std::vector<VElem>{vpow(qr(3, 2)), vpow(q(1))}).is_zero());
  CHECK(evaluate(VPoly::constant(2, VElem(Rational(1))), std::vector<VElem>{vpow(q(1)), VElem()}) ==
        VElem(Rational(1)));
  CHECK_THROWS_AS(evaluate(QPoly::monomial(make_exp({-1}), Rational(1)), std::vector<Rational>{Rational(0)}),
                  std::domain_error);
}

TEST_CASE("minimal_monomials and leading_coefficient examples") {
  const auto x = X<Rational>(2, 0), y = X<Rational>(2, 1);
  CHECK(minimal_monomials(x + y * y, OrderMatrix::identity(2)) == std::vector<ExpVec>{make_exp({0, 2})});
  const auto tie = minimal_monomials(x - y, OrderMatrix{{q(1), q(1)}});
  CHECK(tie.size() == 2);
  CHECK(minimal_monomials(x * y, OrderMatrix::identity(2)) == std::vector<ExpVec>{make_exp({1, 1})});
  CHECK(leading_coefficient(x + Rational(2) * y * y, OrderMatrix::identity(2)) == 2);
  CHECK(leading_coefficient(QPoly::constant(2, Rational(7, 3)), OrderMatrix::identity(2)) == Rational(7, 3));
  const QPoly p = QPoly::monomial(make_exp({6, 0}), Rational(1)) - QPoly::monomial(make_exp({0, 5}), Rational(3));
  CHECK(leading_coefficient(p, OrderMatrix{{q(1), s2}}) == 1);
  CHECK_THROWS_AS(leading_coefficient(x - y, OrderMatrix{{q(1), q(1)}}), std::domain_error);
}

TEST_CASE("apply_monomial_map examples") {
  const auto x = X<Rational>(2, 0), y = X<Rational>(2, 1);
  CHECK(apply_monomial_map(x * y + y, IntMatrix::identity(2)) == x * y + y);
  CHECK(apply_monomial_map(x * y, IntMatrix{{1, 0}, {1, 1}}) == x * y * y);
  // phi_M after phi_L is X_i -> X_i^k.
  const IntMatrix m{{2, 1}, {1, 3}};
  const ScaledInverse inv = inverse_scaled(m);
  const QPoly p = x * x * y - Rational(3) * y + QPoly::constant(2, Rational(1));
  const QPoly twice = apply_monomial_map(apply_monomial_map(p, inv.L), m);
  IntMatrix k_id(2, 2);
  k_id.at(0, 0) = inv.k;
  k_id.at(1, 1) = inv.k;
  CHECK(twice == apply_monomial_map(p, k_id));
}

TEST_CASE("clear_denominators examples") {
  const auto x = X<Rational>(2, 0), y = X<Rational>(2, 1);
  const QPoly xinv = QPoly::monomial(make_exp({-1, 0}), Rational(1));
  CHECK(clear_denominators(xinv + y) == QPoly::constant(2, Rational(1)) + x * y);
  CHECK(clear_denominators(x * x + y) == x * x + y);
  CHECK(clear_denominators(QPoly::monomial(make_exp({-2, -1}), Rational(1))) == QPoly::constant(2, Rational(1)));
}

TEST_CASE("weighted_components examples") {
  const auto x = X<Rational>(2, 0), y = X<Rational>(2, 1);
  auto one = weighted_components(x + y, WeightVector({q(1), q(1)}));
  REQUIRE(one.size() == 1);
  CHECK(one[0].first == q(1));
  auto two = weighted_components(y * y - Rational(5) * x, WeightVector({q(1), q(1)}));
  REQUIRE(two.size() == 2);
  CHECK(two[0].second == Rational(-5) * x);
  CHECK(two[1].second == y * y);
  auto irr = weighted_components(x + y, WeightVector({q(1), s2}));
  REQUIRE(irr.size() == 2);
  CHECK(irr[0].second == x);
  CHECK(irr[1].first == s2);
}

TEST_CASE("scale_variable examples") {
  const auto x = X<VElem>(2, 0), y = X<VElem>(2, 1);
  const VElem a = vpow(qr(1, 2)) + VElem(Rational(2));
  CHECK(scale_variable(x - y, 0, VElem(Rational(1)), 0) == x - y);
  CHECK(scale_variable(x - y, 0, a, 0) == a * x - y);
  CHECK(scale_variable(x * x, 0, a, 2) == x * x);
}

TEST_CASE("ring axioms for Laurent polynomials") {
  Rng rng(31);
  for (int t = 0; t < 150; ++t) {
    const QPoly a = random_qpoly(rng, 2, 4, -2, 2), b = random_qpoly(rng, 2, 4, -2, 2), c = random_qpoly(rng, 2, 4, -2, 2);
    CHECK(a + b == b + a);
    CHECK(a * b == b * a);
    CHECK((a * b) * c == a * (b * c));
    CHECK(a * (b + c) == a * b + a * c);
    CHECK((a - a).is_zero());
  }
}

TEST_CASE("evaluation and monomial maps are ring homomorphisms") {
  Rng rng(32);
  for (int t = 0; t < 150; ++t) {
    const std::size_t n = static_cast<std::size_t>(uniform_int(rng, 2, 3));
    const QPoly a = random_qpoly(rng, n, 4, -2, 3), b = random_qpoly(rng, n, 4, -2, 3);
    std::vector<Rational> pt(n);
    for (auto& x : pt) {
      x = gen::rational(rng, 7);
      if (x == 0) x = Rational(1, 2);
    }
    CHECK(evaluate(a * b, pt) == evaluate(a, pt) * evaluate(b, pt));
    CHECK(evaluate(a + b, pt) == evaluate(a, pt) + evaluate(b, pt));
    IntMatrix m(n, n);
    for (std::size_t i = 0; i < n; ++i)
      for (std::size_t j = 0; j < n; ++j) m.at(i, j) = uniform_int(rng, -2, 3);
    CHECK(apply_monomial_map(a * b, m) == apply_monomial_map(a, m) * apply_monomial_map(b, m));
    // phi_M(P)(x) = P(b) with b_i = prod_j x_j^{M(j,i)}.
    std::vector<Rational> image(n, Rational(1));
    for (std::size_t i = 0; i < n; ++i)
      for (std::size_t j = 0; j < n; ++j) image[i] *= power(pt[j], to_long(m.at(j, i)));
    CHECK(evaluate(apply_monomial_map(a, m), pt) == evaluate(a, image));
    if (!a.is_zero()) {
      const QPoly c = clear_denominators(a);
      CHECK_FALSE(c.has_negative_exponent());
      CHECK(c.size() == a.size());
    }
  }
}

TEST_CASE("lc under M equals lc_lex after phi_M") {
  Rng rng(33);
  int checked = 0;
  while (checked < 200) {
    const std::size_t n = static_cast<std::size_t>(uniform_int(rng, 2, 3));
    IntMatrix m(n, n);
    for (std::size_t i = 0; i < n; ++i)
      for (std::size_t j = 0; j < n; ++j) m.at(i, j) = uniform_int(rng, 0, 3);
    const OrderMatrix om(m);
    if (!validate_matrix(om) || rank(om) != n) continue;
    QPoly p = random_qpoly(rng, n, 6, -3, 3);
    if (p.is_zero()) continue;
    ++checked;
    CHECK(leading_coefficient(p, om) == leading_coefficient(apply_monomial_map(p, m), OrderMatrix::identity(n)));
  }
}

TEST_CASE("text form") {
  const auto x = X<VElem>(2, 0), y = X<VElem>(2, 1);
  CHECK((x - y).to_string() == "X1 - X2");
  CHECK((y * y - vpow(qr(1, 2)) * x).to_string() == "-v^(1/2)*X1 + X2^2");
  CHECK(VPoly(2).to_string() == "0");
}
