#include "monodep/w_witness.hpp"

#include <numeric>
#include <stdexcept>

namespace monodep {

namespace {

bool lex_nonnegative(long x, long y) { return x > 0 || (x == 0 && y >= 0); }

}  // namespace

bool satisfies_eqMA(const EqMASystem& s, long e, long f) {
  if (e == 0 && f == 0) return false;
  const auto& [alpha, beta] = s.order_row;
  if ((alpha * QuadScalar(e) + beta * QuadScalar(f)).sign() > 0) return false;
  const auto& a = s.value_matrix;
  return lex_nonnegative(a[0][0] * e + a[0][1] * f, a[1][0] * e + a[1][1] * f);
}

EqMASystem solve_eqMA(const std::pair<QuadScalar, QuadScalar>& order_row,
                      const std::array<std::array<long, 2>, 2>& value_matrix) {
  const auto& [alpha, beta] = order_row;
  if (alpha.sign() <= 0 || beta.sign() <= 0) throw std::invalid_argument("solve_eqMA: row must be positive");
  EqMASystem s{order_row, value_matrix, {0, 0}};
  const long i1 = value_matrix[0][0];
  const long i2 = value_matrix[0][1];
  const long j1 = value_matrix[1][0];
  const long j2 = value_matrix[1][1];

  // Case 2: (i1, i2) nonzero and proportional to (alpha, beta).
  if ((i1 != 0 || i2 != 0) && (alpha * QuadScalar(i2) - beta * QuadScalar(i1)).is_zero()) {
    const long g = std::gcd(i1, i2);
    long e = i2 / g;
    long f = -i1 / g;
    if (j1 * e + j2 * f < 0) {
      e = -e;
      f = -f;
    }
    s.solution = {e, f};
    if (!satisfies_eqMA(s, e, f)) throw std::logic_error("solve_eqMA: equal-ratio case failed");
    return s;
  }

  // Case 1: the open cone between the two lines contains integer points.
  for (long n = 1;; ++n) {
    for (long e = n; e >= -n; --e)
      for (long f = -n; f <= n; ++f) {
        if (std::max(std::labs(e), std::labs(f)) != n) continue;
        if (satisfies_eqMA(s, e, f)) {
          s.solution = {e, f};
          return s;
        }
      }
  }
}

Witness<RatFun2> w_explicit_witness(const OrderMatrix& m, const RatFun2& a, const RatFun2& b,
                                    std::pair<long, long> solution) {
  const auto [e, f] = solution;
  const RatFun2 c = a.pow(e) * b.pow(f);
  const long e1 = std::max(e, 0L), e2 = std::max(-e, 0L);
  const long f1 = std::max(f, 0L), f2 = std::max(-f, 0L);
  LaurentPoly<RatFun2> p(2);
  p.add_term(make_exp({e1, f1}), RatFun2(1));
  p.add_term(make_exp({e2, f2}), -c);
  return Witness<RatFun2>{p, m, {a, b}, WitnessKind::preorder};
}

Witness<RatFun2> witness_W_preorder(const OrderMatrix& m, const RatFun2& a, const RatFun2& b) {
  if (a.is_zero() || b.is_zero()) throw std::invalid_argument("witness_W_preorder: zero element");
  if (!w_membership(a) || !w_membership(b)) throw std::invalid_argument("witness_W_preorder: element not in W");
  const auto row = single_row_reduction(m);
  if (!row) throw std::invalid_argument("witness_W_preorder: matrix is a rational order or not a positive preorder");
  const auto wa = *w_value(a);
  const auto wb = *w_value(b);
  const EqMASystem s = solve_eqMA(*row, {{{wa.first, wb.first}, {wa.second, wb.second}}});
  auto w = w_explicit_witness(m, a, b, s.solution);
  if (!w_membership(w.poly.coefficient(make_exp({std::max(-s.solution.first, 0L), std::max(-s.solution.second, 0L)}))))
    throw std::logic_error("witness_W_preorder: coefficient c not in W");
  return w;
}

IntMatrix to_int_matrix(const OrderMatrix& m) {
  IntMatrix r(m.rows(), m.cols());
  for (std::size_t i = 0; i < m.rows(); ++i)
    for (std::size_t j = 0; j < m.cols(); ++j) {
      const QuadScalar& x = m.at(i, j);
      if (!x.is_integer()) throw std::invalid_argument("matrix entry " + x.to_string() + " is not an integer");
      r.at(i, j) = x.rat().get_num();
    }
  return r;
}

}  // namespace monodep
