#include <doctest.h>

#include "gen.hpp"
#include "monodep/order_matrix.hpp"
#include "oracles.hpp"

using namespace monodep;

namespace {

const QuadScalar s2 = QuadScalar::sqrt2();
QuadScalar q(long a) { return QuadScalar(a); }
QuadScalar qr(long p, long d) { return QuadScalar(Rational(p, d)); }

/// Lexicographic comparison of M e and M f: rows are reduced to exact
/// rational/irrational parts, the sign of a nonzero row from 512-bit floats.
Cmp oracle_compare(const OrderMatrix& m, const ExpVec& e, const ExpVec& f) {
  for (std::size_t r = 0; r < m.rows(); ++r) {
    Rational rat(0), irr(0);
    for (std::size_t j = 0; j < m.cols(); ++j) {
      const Rational d(e[j] - f[j]);
      rat += m.at(r, j).rat() * d;
      irr += m.at(r, j).irr() * d;
    }
    if (rat == 0 && irr == 0) continue;
    const int s = sgn(mpf_class(rat, 512) + mpf_class(irr, 512) * oracle::sqrt2_f());
    return s < 0 ? Cmp::less : Cmp::greater;
  }
  return Cmp::tie;
}

std::vector<ExpVec> small_exponents(std::size_t n, long lo, long hi) {
  std::vector<ExpVec> out{ExpVec{}};
  for (std::size_t i = 0; i < n; ++i) {
    std::vector<ExpVec> next;
    for (const auto& e : out)
      for (long k = lo; k <= hi; ++k) {
        ExpVec g = e;
        g.push_back(Integer(k));
        next.push_back(g);
      }
    out = next;
  }
  return out;
}

OrderMatrix random_matrix(Rng& rng, std::size_t rows, std::size_t n, bool irrational) {
  while (true) {
    std::vector<std::vector<QuadScalar>> m(rows, std::vector<QuadScalar>(n));
    for (auto& row : m)
      for (auto& x : row) {
        x = QuadScalar(uniform_int(rng, -1, 3));
        if (irrational && uniform_int(rng, 0, 3) == 0) x += s2 * QuadScalar(uniform_int(rng, -1, 1));
      }
    OrderMatrix om(m);
    if (validate_matrix(om)) return om;
  }
}

bool same_preorder(const OrderMatrix& a, const OrderMatrix& b, std::size_t n, long lo, long hi) {
  const auto es = small_exponents(n, lo, hi);
  for (const auto& e : es)
    for (const auto& f : es)
      if (compare_exponents(a, e, f) != compare_exponents(b, e, f)) return false;
  return true;
}

}  // namespace

TEST_CASE("validate_matrix examples") {
  CHECK(validate_matrix(OrderMatrix::identity(2)));
  CHECK(validate_matrix(OrderMatrix{{q(1), s2}}));
  CHECK_FALSE(validate_matrix(OrderMatrix{{q(1), q(0)}}));
}

TEST_CASE("classify examples") {
  const OrderClass a = classify(OrderMatrix{{q(1), q(1)}, {q(1), q(0)}});
  CHECK(a.is_rational);
  CHECK(a.is_graded);
  CHECK(a.is_total_order);
  const OrderClass b = classify(OrderMatrix{{q(1), s2}});
  CHECK_FALSE(b.is_rational);
  CHECK(b.is_graded);
  CHECK(b.is_total_order);
  const OrderClass c = classify(OrderMatrix{{q(1), q(1)}});
  CHECK(c.is_rational);
  CHECK(c.is_graded);
  CHECK_FALSE(c.is_total_order);
}

TEST_CASE("compare_exponents examples") {
  const OrderMatrix m{{q(1), q(1)}, {q(1), q(0)}};
  CHECK(compare_exponents(m, make_exp({1, 0}), make_exp({0, 2})) == Cmp::less);
  CHECK(compare_exponents(m, make_exp({2, 3}), make_exp({2, 3})) == Cmp::tie);
  CHECK(compare_exponents(OrderMatrix{{q(1), q(1)}}, make_exp({1, 0}), make_exp({0, 1})) == Cmp::tie);
  // 6 < 5 sqrt2
  CHECK(compare_exponents(OrderMatrix{{q(1), s2}}, make_exp({6, 0}), make_exp({0, 5})) == Cmp::less);
}

TEST_CASE("compare_exponents agrees with the float oracle") {
  Rng rng(21);
  for (int t = 0; t < 40; ++t) {
    const std::size_t n = static_cast<std::size_t>(uniform_int(rng, 2, 3));
    const OrderMatrix m = random_matrix(rng, static_cast<std::size_t>(uniform_int(rng, 1, 3)), n, t % 2 == 1);
    for (int i = 0; i < 50; ++i) {
      ExpVec e(n), f(n);
      for (auto& x : e) x = uniform_int(rng, -4, 4);
      for (auto& x : f) x = uniform_int(rng, -4, 4);
      CHECK(compare_exponents(m, e, f) == oracle_compare(m, e, f));
    }
  }
}

TEST_CASE("normalize_rows keeps the preorder") {
  const OrderMatrix m{{q(1), q(1)}, {q(0), q(-1)}};
  const OrderMatrix nm = normalize_rows(m);
  for (std::size_t i = 0; i < nm.rows(); ++i)
    for (std::size_t j = 0; j < nm.cols(); ++j) CHECK(nm.at(i, j).sign() >= 0);
  CHECK(same_preorder(m, nm, 2, 0, 4));
  CHECK(normalize_rows(OrderMatrix{{q(1), q(1)}, {q(1), q(0)}}) == OrderMatrix{{q(1), q(1)}, {q(1), q(0)}});
  CHECK(normalize_rows(OrderMatrix::identity(3)) == OrderMatrix::identity(3));

  Rng rng(22);
  for (int t = 0; t < 30; ++t) {
    const OrderMatrix r = random_matrix(rng, 2, 2, t % 3 == 0);
    CHECK(same_preorder(r, normalize_rows(r), 2, -2, 2));
  }
}

TEST_CASE("refine_to_order examples") {
  CHECK(refine_to_order(OrderMatrix{{q(1), q(1)}}) == OrderMatrix{{q(1), q(1)}, {q(1), q(0)}});
  CHECK(refine_to_order(OrderMatrix::identity(2)) == OrderMatrix::identity(2));
  CHECK(refine_to_order(OrderMatrix{{q(1), q(1), q(1)}}) ==
        OrderMatrix{{q(1), q(1), q(1)}, {q(1), q(0), q(0)}, {q(0), q(1), q(0)}});
}

TEST_CASE("refine_to_order refines to a total order") {
  Rng rng(23);
  for (int t = 0; t < 30; ++t) {
    const std::size_t n = static_cast<std::size_t>(uniform_int(rng, 2, 3));
    const OrderMatrix m = random_matrix(rng, static_cast<std::size_t>(uniform_int(rng, 1, 2)), n, false);
    const OrderMatrix r = refine_to_order(m);
    CHECK(r.rows() == n);
    CHECK(classify(r).is_total_order);
    const auto es = small_exponents(n, 0, n == 2 ? 3 : 2);
    for (const auto& e : es)
      for (const auto& f : es) {
        const Cmp before = compare_exponents(m, e, f);
        const Cmp after = compare_exponents(r, e, f);
        if (before != Cmp::tie) CHECK(after == before);
        if (e != f) CHECK(after != Cmp::tie);
      }
  }
}

TEST_CASE("integerize examples") {
  CHECK(integerize(OrderMatrix{{qr(1, 2), qr(1, 2)}, {q(1), q(0)}}) == IntMatrix{{1, 1}, {1, 0}});
  CHECK(integerize(OrderMatrix{{q(1), q(1)}, {qr(1, 3), q(0)}}) == IntMatrix{{1, 1}, {1, 0}});
  CHECK(integerize(OrderMatrix{{q(2), q(1)}, {q(1), q(1)}}) == IntMatrix{{2, 1}, {1, 1}});
}

TEST_CASE("inverse_scaled examples") {
  const ScaledInverse id = inverse_scaled(IntMatrix::identity(2));
  CHECK(id.k == 1);
  CHECK(id.L == IntMatrix::identity(2));
  const ScaledInverse a = inverse_scaled(IntMatrix{{1, 1}, {1, 0}});
  CHECK(a.k == 1);
  CHECK(a.L == IntMatrix{{0, 1}, {1, -1}});
  const ScaledInverse b = inverse_scaled(IntMatrix{{2, 1}, {1, 1}});
  CHECK(b.k == 1);
  CHECK(b.L == IntMatrix{{1, -1}, {-1, 2}});
}

TEST_CASE("M L = k I for random integer matrices") {
  Rng rng(24);
  int checked = 0;
  while (checked < 100) {
    const std::size_t n = static_cast<std::size_t>(uniform_int(rng, 2, 4));
    IntMatrix m(n, n);
    for (std::size_t i = 0; i < n; ++i)
      for (std::size_t j = 0; j < n; ++j) m.at(i, j) = uniform_int(rng, -3, 3);
    if (rank(OrderMatrix(m)) != n) continue;
    ++checked;
    const ScaledInverse inv = inverse_scaled(m);
    CHECK(inv.k > 0);
    IntMatrix k_id(n, n);
    for (std::size_t i = 0; i < n; ++i) k_id.at(i, i) = inv.k;
    CHECK(m * inv.L == k_id);
    CHECK(inv.L * m == k_id);
  }
}

TEST_CASE("lex_matrix and lex_permutation") {
  CHECK(lex_matrix({0, 1}) == OrderMatrix::identity(2));
  CHECK(lex_matrix({1, 0}) == OrderMatrix{{q(0), q(1)}, {q(1), q(0)}});
  const auto p = lex_permutation(lex_matrix({2, 0, 1}));
  REQUIRE(p);
  CHECK(*p == std::vector<std::size_t>{2, 0, 1});
  CHECK_FALSE(lex_permutation(OrderMatrix{{q(1), q(1)}, {q(1), q(0)}}));
}

TEST_CASE("parse_matrix") {
  CHECK(parse_matrix("1,1;1,0") == OrderMatrix{{q(1), q(1)}, {q(1), q(0)}});
  CHECK(parse_matrix("1,s2") == OrderMatrix{{q(1), s2}});
  CHECK_THROWS_AS(parse_matrix("1,1;1"), std::invalid_argument);
}
