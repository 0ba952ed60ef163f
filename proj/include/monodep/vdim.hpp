#pragma once

#include <functional>
#include <stdexcept>
#include <vector>

#include "monodep/witness.hpp"

namespace monodep {

/// Provides a lex witness (identity order) for elements b_1..b_n of Quot(A)
/// whose coefficients already lie in A, so the coefficient lift C[b] is the
/// constant C = c.
template <class E>
using LexOracle = std::function<Witness<E>(const std::vector<E>&)>;

/// Provides a witness under the given order for elements of A.
template <class E>
using OrderOracle = std::function<Witness<E>(const OrderMatrix&, const std::vector<E>&)>;

/// Lex oracle for elements of Quot(V) (dim_v V = 1): a zero or value <= 0
/// element b_i gives X_i or 1 - b_i^{-1} X_i (b_i^{-1} in V); otherwise b_1,
/// b_2 both lie in the maximal ideal and the value pair applies.
Witness<VElem> quot_v_lex_oracle(const std::vector<VElem>& b);

/// Witness for a_1..a_n in A under the refined order of the
/// rational preorder m (hence a preorder witness under m). The result is
/// verified under both before being returned; std::logic_error otherwise.
template <class Ring>
Witness<typename Ring::Elem> vdim_witness(const OrderMatrix& m, const std::vector<typename Ring::Elem>& a,
                                          const LexOracle<typename Ring::Elem>& oracle) {
  using E = typename Ring::Elem;
  const std::size_t n = a.size();
  if (m.cols() != n) throw std::invalid_argument("vdim_witness: matrix and elements differ in size");
  const OrderMatrix refined = refine_to_order(m);
  const WitnessKind kind_under_m = classify(m).is_total_order ? WitnessKind::order : WitnessKind::preorder;

  for (std::size_t i = 0; i < n; ++i)
    if (ElementTraits<E>::is_zero(a[i]))
      return Witness<E>{LaurentPoly<E>::variable(n, i), m, a, kind_under_m};

  const IntMatrix mi = integerize(refined);
  const ScaledInverse inv = inverse_scaled(mi);
  const std::vector<E> b = power_products(inv.L, a);
  const Witness<E> lex = oracle(b);
  if (auto ok = verify_witness(lex, Membership<E>(membership_of<Ring>())); !ok)
    throw std::logic_error("vdim_witness: oracle witness rejected: " + ok.reason);

  LaurentPoly<E> q = clear_denominators(apply_monomial_map(lex.poly, inv.L));
  Witness<E> w{std::move(q), m, a, kind_under_m};
  if (auto ok = verify_witness(w, Membership<E>(membership_of<Ring>())); !ok)
    throw std::logic_error("vdim_witness: witness rejected under the original matrix: " + ok.reason);
  // Same polynomial and points, so only the order condition is rechecked.
  if (auto ok = verify_leading_condition(Witness<E>{w.poly, refined, a, WitnessKind::order}); !ok)
    throw std::logic_error("vdim_witness: refined witness rejected: " + ok.reason);
  return w;
}

/// vdim_witness for A = V with the Quot(V) lex oracle.
Witness<VElem> vdim_witness_v(const OrderMatrix& m, const std::vector<VElem>& a);

/// Element of the overring side: b_i in Quot(A) together with a common
/// denominator a != 0 in A such that a b_i lies in A for every i.
template <class E>
struct OverringInput {
  std::vector<E> b;
  E common_denominator;
};

/// Lex witness for b_1..b_n in Quot(A) from an A-oracle for a
/// graded rational total order m (square, nonnegative integer entries).
template <class Ring>
Witness<typename Ring::Elem> overring_lex_witness(const OrderMatrix& m,
                                                  const OverringInput<typename Ring::Elem>& in,
                                                  const OrderOracle<typename Ring::Elem>& a_oracle) {
  using E = typename Ring::Elem;
  using T = ElementTraits<E>;
  const std::size_t n = in.b.size();
  const OrderClass cls = classify(m);
  if (!cls.is_graded || !cls.is_rational || !cls.is_total_order || m.rows() != n || m.cols() != n)
    throw std::invalid_argument("overring_lex_witness: matrix must be a square graded rational order");
  const IntMatrix mi = to_int_matrix(m);
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = 0; j < n; ++j)
      if (sgn(mi.at(i, j)) < 0) throw std::invalid_argument("overring_lex_witness: negative matrix entry");
  const E& a = in.common_denominator;
  if (T::is_zero(a) || !Ring::contains(a)) throw std::invalid_argument("common denominator must be a nonzero ring element");
  for (const auto& x : in.b)
    if (!Ring::contains(a * x)) throw std::invalid_argument("common denominator does not clear " + T::to_string(x));

  // Least k with k M(0, i) >= sum_j M(j, i) for all i.
  Integer k(0);
  for (std::size_t i = 0; i < n; ++i) {
    Integer colsum(0);
    for (std::size_t j = 0; j < n; ++j) colsum += mi.at(j, i);
    Integer need;
    mpz_cdiv_q(need.get_mpz_t(), colsum.get_mpz_t(), mi.at(0, i).get_mpz_t());
    if (need > k) k = need;
  }
  const long kl = to_long(k);
  const E ak = power(a, kl);

  std::vector<E> scaled = in.b;
  scaled[0] = ak * scaled[0];
  const std::vector<E> ai = power_products(mi, scaled);
  for (const auto& x : ai)
    if (!Ring::contains(x)) throw std::logic_error("overring_lex_witness: power product " + T::to_string(x) + " not in A");

  const Witness<E> under_m = a_oracle(m, ai);
  const Witness<E> lex = transport_witness_to_lex(under_m, mi, scaled);
  if (auto ok = verify_witness(lex, Membership<E>(membership_of<Ring>())); !ok)
    throw std::logic_error("overring_lex_witness: transported witness rejected: " + ok.reason);

  const auto mins = minimal_monomials(lex.poly, lex.order);
  const long e = to_long(mins.front()[0]);
  LaurentPoly<E> q = scale_variable(lex.poly, 0, ak, e);
  Witness<E> w{std::move(q), OrderMatrix::identity(n), in.b, WitnessKind::order};
  if (auto ok = verify_witness(w, Membership<E>(membership_of<Ring>())); !ok)
    throw std::logic_error("overring_lex_witness: descaled witness rejected: " + ok.reason);
  return w;
}

Witness<VElem> overring_lex_witness_v(const OrderMatrix& m, const OverringInput<VElem>& in);

/// Homogeneous relation of degree d0 with a unit coefficient at t0.
template <class E>
struct Homogenized {
  LaurentPoly<E> poly;
  ExpVec t0;
  long degree = 0;
};

/// Turns a preorder witness under (1, ..., 1) for elements
/// of the maximal ideal into a homogeneous polynomial by evaluating the
/// excess part of every higher-degree monomial.
template <class Ring>
Homogenized<typename Ring::Elem> homogenize_witness(const Witness<typename Ring::Elem>& w) {
  using E = typename Ring::Elem;
  const std::size_t n = w.elements.size();
  for (const auto& x : w.elements)
    if (!Ring::contains(x) || Ring::is_unit(x))
      throw std::invalid_argument("homogenize_witness: element outside the maximal ideal");
  if (w.poly.has_negative_exponent()) throw std::invalid_argument("homogenize_witness: Laurent witness");
  if (auto ok = verify_witness(w); !ok) throw std::invalid_argument("homogenize_witness: " + ok.reason);

  auto total = [](const ExpVec& e) {
    Integer d(0);
    for (const auto& x : e) d += x;
    return to_long(d);
  };
  long d0 = -1;
  for (const auto& [e, c] : w.poly.terms())
    if (d0 < 0 || total(e) < d0) d0 = total(e);

  std::optional<ExpVec> t0;
  LaurentPoly<E> h(n);
  for (const auto& [g, c] : w.poly.terms()) {
    if (total(g) == d0) {
      if (!t0 && is_one(c)) t0 = g;
      h.add_term(g, c);
      continue;
    }
    ExpVec head(n, Integer(0));
    long left = d0;
    E factor = c;
    for (std::size_t i = 0; i < n; ++i) {
      const long gi = to_long(g[i]);
      const long take = std::min(gi, left);
      head[i] = take;
      left -= take;
      if (gi > take) factor = factor * power(w.elements[i], gi - take);
    }
    h.add_term(head, factor);
  }
  if (!t0) throw std::invalid_argument("homogenize_witness: no degree-d0 monomial has coefficient 1");
  if (!Ring::is_unit(h.coefficient(*t0))) throw std::logic_error("homogenize_witness: t0 coefficient is not a unit");
  return Homogenized<E>{std::move(h), *t0, d0};
}

}  // namespace monodep
