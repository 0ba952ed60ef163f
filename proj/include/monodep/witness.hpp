#pragma once

#include <algorithm>
#include <functional>
#include <optional>
#include <stdexcept>
#include <string>
#include <vector>

#include "monodep/laurent_poly.hpp"
#include "monodep/order_matrix.hpp"
#include "monodep/rings.hpp"

namespace monodep {

enum class WitnessKind { order, preorder };

inline const char* to_string(WitnessKind k) { return k == WitnessKind::order ? "order" : "preorder"; }

/// P with P(a_1..a_n) = 0 and, under `order`, coefficient exactly 1 on the
/// smallest monomial (order) or on some minimal monomial (preorder).
template <class E>
struct Witness {
  LaurentPoly<E> poly;
  OrderMatrix order;
  std::vector<E> elements;
  WitnessKind kind = WitnessKind::order;
};

struct VerifyResult {
  bool ok = false;
  std::string reason;
  explicit operator bool() const { return ok; }
};

template <class E>
using Membership = std::function<bool(const E&)>;

/// Whether P vanishes at the points.
template <class E>
bool vanishes_at(const LaurentPoly<E>& p, const std::vector<E>& points) {
  return ElementTraits<E>::is_zero(evaluate(p, points));
}

/// Fraction points: P(a) = 0 is decided on numerators after multiplying by
/// the point denominators and every distinct coefficient denominator, so no
/// fraction sums are formed. Throws std::domain_error like evaluate().
template <class K>
bool vanishes_at(const LaurentPoly<Fraction<K>>& p, const std::vector<Fraction<K>>& points) {
  using M = MonoidElem<K>;
  const std::size_t n = p.nvars();
  if (points.size() != n) throw std::invalid_argument("evaluate: wrong number of points");
  std::vector<long> lo(n, 0), hi(n, 0);
  std::vector<M> dens;
  for (const auto& [e, c] : p.terms()) {
    for (std::size_t i = 0; i < n; ++i) {
      const long k = to_long(e[i]);
      lo[i] = std::min(lo[i], k);
      hi[i] = std::max(hi[i], k);
    }
    if (std::find(dens.begin(), dens.end(), c.den()) == dens.end()) dens.push_back(c.den());
  }
  for (std::size_t i = 0; i < n; ++i)
    if (points[i].is_zero() && lo[i] < 0) throw std::domain_error("negative power of zero");

  // other[k] = product of all coefficient denominators except dens[k].
  std::vector<M> other(dens.size(), M(ElementTraits<K>::one()));
  for (std::size_t k = 0; k < dens.size(); ++k)
    for (std::size_t l = 0; l < dens.size(); ++l)
      if (l != k) other[k] = other[k] * dens[l];

  // a_i^e * N_i^{-lo} D_i^{hi} = N_i^{e-lo} D_i^{hi-e}
  std::vector<std::vector<M>> pn(n), pd(n);
  for (std::size_t i = 0; i < n; ++i) {
    if (points[i].is_zero()) continue;
    const std::size_t span = static_cast<std::size_t>(hi[i] - lo[i]);
    pn[i].assign(1, M(ElementTraits<K>::one()));
    pd[i].assign(1, M(ElementTraits<K>::one()));
    for (std::size_t j = 1; j <= span; ++j) {
      pn[i].push_back(pn[i].back() * points[i].num());
      pd[i].push_back(pd[i].back() * points[i].den());
    }
  }
  M acc;
  for (const auto& [e, c] : p.terms()) {
    M t = c.num() * other[static_cast<std::size_t>(std::find(dens.begin(), dens.end(), c.den()) - dens.begin())];
    bool dead = false;
    for (std::size_t i = 0; i < n && !dead; ++i) {
      const long k = to_long(e[i]);
      if (points[i].is_zero()) {
        dead = k > 0;
        continue;
      }
      t = t * pn[i][static_cast<std::size_t>(k - lo[i])] * pd[i][static_cast<std::size_t>(hi[i] - k)];
    }
    if (!dead) acc += t;
  }
  return acc.is_zero();
}

template <class E>
VerifyResult verify_leading_condition(const Witness<E>& w);

/// Rechecks a witness from scratch. When `in_ring` is given, every
/// coefficient must also pass it.
template <class E>
VerifyResult verify_witness(const Witness<E>& w, const Membership<E>& in_ring = {}) {
  const auto& p = w.poly;
  if (p.is_zero()) return {false, "polynomial is zero"};
  if (p.nvars() != w.elements.size()) return {false, "number of variables differs from number of elements"};
  if (w.order.cols() != p.nvars()) return {false, "order matrix has wrong number of columns"};
  if (in_ring) {
    for (const auto& [e, c] : p.terms())
      if (!in_ring(c)) return {false, "coefficient " + ElementTraits<E>::to_string(c) + " is not in the ring"};
  }
  try {
    if (!vanishes_at(p, w.elements))
      return {false, "evaluation is " + ElementTraits<E>::to_string(evaluate(p, w.elements)) + ", not 0"};
  } catch (const std::domain_error& ex) {
    return {false, std::string("evaluation failed: ") + ex.what()};
  }
  return verify_leading_condition(w);
}

/// Only the order part of verify_witness (minimal monomial and coefficient
/// 1), for a polynomial already known to vanish.
template <class E>
VerifyResult verify_leading_condition(const Witness<E>& w) {
  const auto& p = w.poly;
  const auto mins = minimal_monomials(p, w.order);
  if (w.kind == WitnessKind::order) {
    if (mins.size() != 1) return {false, "order does not separate the minimal monomials"};
    if (!is_one(p.coefficient(mins.front())))
      return {false, "leading coefficient is " + ElementTraits<E>::to_string(p.coefficient(mins.front()))};
    return {true, ""};
  }
  for (const auto& e : mins)
    if (is_one(p.coefficient(e))) return {true, ""};
  return {false, "no minimal monomial has coefficient 1"};
}

template <class Ring>
Membership<typename Ring::Elem> membership_of() {
  return [](const typename Ring::Elem& x) { return Ring::contains(x); };
}

/// Inverse inside the ring, when x is a unit there.
template <class Ring>
std::optional<typename Ring::Elem> ring_inverse(const typename Ring::Elem& x) {
  if (!Ring::is_unit(x)) return std::nullopt;
  return ElementTraits<typename Ring::Elem>::inverse(x);
}

template <>
inline std::optional<RElem> ring_inverse<RRing>(const RElem& x) {
  auto m = r_membership(x);
  if (!m) return std::nullopt;
  auto inv = r_invert(*m);
  if (!inv) return std::nullopt;
  return inv->element;
}

/// Polynomial in `nvars` variables that witnesses x_index alone: X for zero,
/// 1 - x^{-1} X for a unit.
template <class Ring>
std::optional<LaurentPoly<typename Ring::Elem>> single_variable_witness(const typename Ring::Elem& x,
                                                                       std::size_t nvars, std::size_t index) {
  using E = typename Ring::Elem;
  using T = ElementTraits<E>;
  const auto var = LaurentPoly<E>::variable(nvars, index);
  if (T::is_zero(x)) return var;
  auto inv = ring_inverse<Ring>(x);
  if (!inv) return std::nullopt;
  return LaurentPoly<E>::constant(nvars, T::one()) - (*inv) * var;
}

/// One-variable witness for a zero or invertible element.
template <class Ring>
std::optional<Witness<typename Ring::Elem>> witness_trivial(const typename Ring::Elem& a) {
  auto p = single_variable_witness<Ring>(a, 1, 0);
  if (!p) return std::nullopt;
  return Witness<typename Ring::Elem>{*p, OrderMatrix::identity(1), {a}, WitnessKind::order};
}

/// Witness Y^n - c X for nonzero nonunits a (in X, value alpha) and b (in Y,
/// value beta), as a polynomial in `nvars` variables with X, Y at the given
/// indices. In R: n = floor(alpha/beta) + 1; in V: n = ceil(alpha/beta);
/// c = b^n / a in both.
template <class Ring>
LaurentPoly<typename Ring::Elem> value_pair_poly(const typename Ring::Elem& a, const typename Ring::Elem& b,
                                                 std::size_t nvars, std::size_t x_index, std::size_t y_index) {
  using E = typename Ring::Elem;
  if (a.is_zero() || b.is_zero() || Ring::is_unit(a) || Ring::is_unit(b) || !Ring::contains(a) ||
      !Ring::contains(b))
    throw std::invalid_argument("witness_value_pair needs nonzero nonunits of the ring");
  const QuadScalar alpha = a.valuation();
  const QuadScalar beta = b.valuation();
  Integer n;
  if constexpr (std::is_same_v<Ring, RRing>) {
    n = quad_floor_ratio(alpha, beta, Rounding::floor) + 1;
  } else {
    n = quad_floor_ratio(alpha, beta, Rounding::ceil);
  }
  const long nl = to_long(n);
  const E c = power(b, nl) / a;
  if (!Ring::contains(c)) throw std::logic_error("value pair coefficient left the ring");
  ExpVec yn(nvars, Integer(0));
  yn.at(y_index) = n;
  return LaurentPoly<E>::monomial(yn, ElementTraits<E>::one()) - c * LaurentPoly<E>::variable(nvars, x_index);
}

/// Lex witness for (a, b): x_greater selects X > Y (X most significant),
/// otherwise Y > X and the roles of a and b are interchanged.
template <class Ring>
Witness<typename Ring::Elem> witness_value_pair(const typename Ring::Elem& a, const typename Ring::Elem& b,
                                                bool x_greater) {
  using E = typename Ring::Elem;
  LaurentPoly<E> p = x_greater ? value_pair_poly<Ring>(a, b, 2, 0, 1) : value_pair_poly<Ring>(b, a, 2, 1, 0);
  const OrderMatrix order = x_greater ? lex_matrix({0, 1}) : lex_matrix({1, 0});
  return Witness<E>{std::move(p), order, {a, b}, WitnessKind::order};
}

/// Lex witness for an arbitrary pair of ring elements: the less significant variable is tried first for the
/// zero/unit shortcut, then the more significant one, then the value pair.
template <class Ring>
Witness<typename Ring::Elem> lex_pair_witness(const typename Ring::Elem& a, const typename Ring::Elem& b,
                                              bool x_greater) {
  using E = typename Ring::Elem;
  const std::vector<E> el = {a, b};
  const std::size_t first = x_greater ? 0 : 1;
  const std::size_t second = 1 - first;
  const OrderMatrix order = lex_matrix({first, second});
  for (std::size_t idx : {second, first})
    if (auto p = single_variable_witness<Ring>(el[idx], 2, idx)) return Witness<E>{*p, order, el, WitnessKind::order};
  return witness_value_pair<Ring>(a, b, x_greater);
}

/// phi_M(P): a witness under the rational total order M (nonnegative integer,
/// square) for b_i = prod_j a_j^{M(j,i)} becomes a lex witness for a.
template <class E>
Witness<E> transport_witness_to_lex(const Witness<E>& w, const IntMatrix& m, const std::vector<E>& base) {
  if (m.rows() != m.cols() || m.cols() != w.poly.nvars() || base.size() != m.rows())
    throw std::invalid_argument("transport needs a square integer matrix matching the witness");
  return Witness<E>{apply_monomial_map(w.poly, m), OrderMatrix::identity(m.rows()), base, WitnessKind::order};
}

/// b_i = prod_j a_j^{M(j,i)}, computed in the fraction field.
template <class E>
std::vector<E> power_products(const IntMatrix& m, const std::vector<E>& a) {
  if (a.size() != m.rows()) throw std::invalid_argument("power_products: size mismatch");
  std::vector<E> b;
  for (std::size_t i = 0; i < m.cols(); ++i) {
    E x = ElementTraits<E>::one();
    for (std::size_t j = 0; j < m.rows(); ++j)
      if (sgn(m.at(j, i)) != 0) x = x * power(a[j], to_long(m.at(j, i)));
    b.push_back(x);
  }
  return b;
}

/// Exact integer matrix behind a rational OrderMatrix with integer entries.
IntMatrix to_int_matrix(const OrderMatrix& m);

}  // namespace monodep
