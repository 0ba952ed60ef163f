#pragma once

#include <algorithm>
#include <functional>
#include <map>
#include <optional>
#include <span>
#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

#include "monodep/element_traits.hpp"
#include "monodep/order_matrix.hpp"
#include "monodep/quad_scalar.hpp"

namespace monodep {

/// Canonical lexicographic order on exponent vectors (storage order only;
/// unrelated to any monomial order used for leading terms).
struct ExpLess {
  bool operator()(const ExpVec& a, const ExpVec& b) const {
    for (std::size_t i = 0; i < a.size() && i < b.size(); ++i) {
      const int c = cmp(a[i], b[i]);
      if (c != 0) return c < 0;
    }
    return a.size() < b.size();
  }
};

/// Sparse Laurent polynomial in X1..Xn over the coefficient type E.
/// Invariants: no zero coefficients, exponent vectors of length n.
template <class E>
class LaurentPoly {
 public:
  using Traits = ElementTraits<E>;
  using Terms = std::map<ExpVec, E, ExpLess>;

  explicit LaurentPoly(std::size_t nvars = 0) : n_(nvars) {}

  static LaurentPoly constant(std::size_t nvars, const E& c) {
    return monomial(ExpVec(nvars, Integer(0)), c);
  }
  static LaurentPoly monomial(ExpVec e, const E& c) {
    LaurentPoly p(e.size());
    p.add_term(e, c);
    return p;
  }
  /// X_{index+1}
  static LaurentPoly variable(std::size_t nvars, std::size_t index) {
    ExpVec e(nvars, Integer(0));
    e.at(index) = 1;
    return monomial(std::move(e), Traits::one());
  }

  std::size_t nvars() const { return n_; }
  const Terms& terms() const { return terms_; }
  bool is_zero() const { return terms_.empty(); }
  std::size_t size() const { return terms_.size(); }

  E coefficient(const ExpVec& e) const {
    auto it = terms_.find(e);
    return it == terms_.end() ? Traits::zero() : it->second;
  }

  void add_term(const ExpVec& e, const E& c) {
    if (e.size() != n_) throw std::invalid_argument("exponent vector has wrong length");
    if (Traits::is_zero(c)) return;
    auto [it, inserted] = terms_.try_emplace(e, c);
    if (!inserted) {
      it->second = it->second + c;
      if (Traits::is_zero(it->second)) terms_.erase(it);
    }
  }

  LaurentPoly operator-() const {
    LaurentPoly r(n_);
    for (const auto& [e, c] : terms_) r.terms_.emplace(e, -c);
    return r;
  }
  LaurentPoly& operator+=(const LaurentPoly& o) {
    check_compatible(o);
    for (const auto& [e, c] : o.terms_) add_term(e, c);
    return *this;
  }
  LaurentPoly& operator-=(const LaurentPoly& o) {
    check_compatible(o);
    for (const auto& [e, c] : o.terms_) add_term(e, -c);
    return *this;
  }
  friend LaurentPoly operator+(LaurentPoly a, const LaurentPoly& b) { return a += b; }
  friend LaurentPoly operator-(LaurentPoly a, const LaurentPoly& b) { return a -= b; }
  friend LaurentPoly operator*(const LaurentPoly& a, const LaurentPoly& b) {
    a.check_compatible(b);
    LaurentPoly r(a.n_);
    for (const auto& [e, c] : a.terms_)
      for (const auto& [f, d] : b.terms_) {
        ExpVec g(e.size());
        for (std::size_t i = 0; i < e.size(); ++i) g[i] = e[i] + f[i];
        r.add_term(g, c * d);
      }
    return r;
  }
  friend LaurentPoly operator*(const E& s, const LaurentPoly& p) {
    LaurentPoly r(p.n_);
    for (const auto& [e, c] : p.terms_) r.add_term(e, s * c);
    return r;
  }
  friend bool operator==(const LaurentPoly& a, const LaurentPoly& b) {
    return a.n_ == b.n_ && a.terms_ == b.terms_;
  }

  /// Largest total degree among the terms; requires nonzero.
  Integer max_total_degree() const {
    if (is_zero()) throw std::domain_error("degree of zero polynomial");
    std::optional<Integer> best;
    for (const auto& [e, c] : terms_) {
      Integer d(0);
      for (const auto& x : e) d += x;
      if (!best || d > *best) best = d;
    }
    return *best;
  }

  bool has_negative_exponent() const {
    for (const auto& [e, c] : terms_)
      for (const auto& x : e)
        if (sgn(x) < 0) return true;
    return false;
  }

  /// "c*X1^2*X2 - X2^(-1)"; terms in descending canonical exponent order.
  std::string to_string() const {
    if (is_zero()) return "0";
    std::string out;
    for (auto it = terms_.rbegin(); it != terms_.rend(); ++it) {
      const auto& [e, c] = *it;
      std::string mono;
      for (std::size_t i = 0; i < e.size(); ++i) {
        if (sgn(e[i]) == 0) continue;
        if (!mono.empty()) mono += "*";
        mono += "X" + std::to_string(i + 1);
        if (e[i] != 1) mono += "^" + (sgn(e[i]) < 0 ? "(" + e[i].get_str() + ")" : e[i].get_str());
      }
      std::string cs = Traits::to_string(c);
      const bool negative = split_sign(cs);
      if (needs_parens(cs)) cs = "(" + cs + ")";
      std::string term;
      if (mono.empty()) {
        term = cs;
      } else if (cs == "1") {
        term = mono;
      } else {
        term = cs + "*" + mono;
      }
      if (out.empty()) {
        out = (negative ? "-" : "") + term;
      } else {
        out += (negative ? " - " : " + ") + term;
      }
    }
    return out;
  }

 private:
  void check_compatible(const LaurentPoly& o) const {
    if (o.n_ != n_) throw std::invalid_argument("polynomials in different numbers of variables");
  }

  std::size_t n_;
  Terms terms_;
};

/// Strictly positive weights for weighted degrees <w, e>.
class WeightVector {
 public:
  /// Throws std::invalid_argument unless every weight is > 0.
  explicit WeightVector(std::vector<QuadScalar> w) : w_(std::move(w)) {
    for (const auto& x : w_)
      if (x.sign() <= 0) throw std::invalid_argument("weights must be positive");
  }
  const std::vector<QuadScalar>& weights() const { return w_; }
  std::size_t size() const { return w_.size(); }
  QuadScalar degree(const ExpVec& e) const {
    if (e.size() != w_.size()) throw std::invalid_argument("weight vector has wrong length");
    QuadScalar d;
    for (std::size_t i = 0; i < e.size(); ++i) d += w_[i] * QuadScalar(Rational(e[i]));
    return d;
  }

 private:
  std::vector<QuadScalar> w_;
};

/// Exact value of P at the points, computed in the ambient fraction field.
/// Throws std::domain_error when a zero point carries a negative exponent.
template <class E>
E evaluate(const LaurentPoly<E>& p, std::span<const E> points) {
  if (points.size() != p.nvars()) throw std::invalid_argument("evaluate: wrong number of points");
  E acc = ElementTraits<E>::zero();
  for (const auto& [e, c] : p.terms()) {
    E t = c;
    for (std::size_t i = 0; i < e.size(); ++i)
      if (sgn(e[i]) != 0) t = t * power(points[i], to_long(e[i]));
    acc = acc + t;
  }
  return acc;
}

template <class E>
E evaluate(const LaurentPoly<E>& p, const std::vector<E>& points) {
  return evaluate(p, std::span<const E>(points));
}

/// Exponent vectors of the terms that are minimal under the preorder of m.
template <class E>
std::vector<ExpVec> minimal_monomials(const LaurentPoly<E>& p, const OrderMatrix& m) {
  if (p.is_zero()) throw std::invalid_argument("minimal_monomials: zero polynomial");
  std::vector<ExpVec> best;
  for (const auto& [e, c] : p.terms()) {
    if (best.empty()) {
      best.push_back(e);
      continue;
    }
    switch (compare_exponents(m, e, best.front())) {
      case Cmp::less:
        best.assign(1, e);
        break;
      case Cmp::tie:
        best.push_back(e);
        break;
      case Cmp::greater:
        break;
    }
  }
  return best;
}

/// Coefficient of the unique smallest monomial. Throws std::domain_error when
/// the smallest monomial is not unique (m does not order P's terms).
template <class E>
E leading_coefficient(const LaurentPoly<E>& p, const OrderMatrix& m) {
  auto mins = minimal_monomials(p, m);
  if (mins.size() != 1) throw std::domain_error("leading_coefficient: tie between minimal monomials");
  return p.coefficient(mins.front());
}

/// X_i -> prod_j X_j^{L(j,i)}: every exponent vector e becomes L e.
template <class E>
LaurentPoly<E> apply_monomial_map(const LaurentPoly<E>& p, const IntMatrix& l) {
  if (l.cols() != p.nvars()) throw std::invalid_argument("apply_monomial_map: size mismatch");
  LaurentPoly<E> r(l.rows());
  for (const auto& [e, c] : p.terms()) r.add_term(l.apply(e), c);
  return r;
}

/// Multiplies by the monomial making every exponent nonnegative.
template <class E>
LaurentPoly<E> clear_denominators(const LaurentPoly<E>& p) {
  if (p.is_zero()) throw std::invalid_argument("clear_denominators: zero polynomial");
  ExpVec shift(p.nvars(), Integer(0));
  for (const auto& [e, c] : p.terms())
    for (std::size_t i = 0; i < e.size(); ++i)
      if (-e[i] > shift[i]) shift[i] = -e[i];
  LaurentPoly<E> r(p.nvars());
  for (const auto& [e, c] : p.terms()) {
    ExpVec g = e;
    for (std::size_t i = 0; i < g.size(); ++i) g[i] += shift[i];
    r.add_term(g, c);
  }
  return r;
}

/// Terms grouped by weighted degree, ascending.
template <class E>
std::vector<std::pair<QuadScalar, LaurentPoly<E>>> weighted_components(const LaurentPoly<E>& p,
                                                                       const WeightVector& w) {
  std::map<QuadScalar, LaurentPoly<E>> groups;
  for (const auto& [e, c] : p.terms()) {
    auto it = groups.try_emplace(w.degree(e), LaurentPoly<E>(p.nvars())).first;
    it->second.add_term(e, c);
  }
  return {groups.begin(), groups.end()};
}

/// Exact division in the coefficient ring: nothing when the quotient leaves it.
template <class E>
using ExactDivider = std::function<std::optional<E>(const E& numerator, const E& divisor)>;

/// Substitutes X_index -> factor * X_index and divides every coefficient by
/// factor^divide_power. Terms whose X_index exponent reaches divide_power are
/// handled without division; others go through `divide`, and an inexact
/// quotient throws std::domain_error.
template <class E>
LaurentPoly<E> scale_variable(const LaurentPoly<E>& p, std::size_t index, const E& factor,
                              long divide_power, const ExactDivider<E>& divide = {}) {
  if (index >= p.nvars()) throw std::invalid_argument("scale_variable: index out of range");
  LaurentPoly<E> r(p.nvars());
  for (const auto& [e, c] : p.terms()) {
    const long k = to_long(e[index]);
    if (k >= divide_power) {
      r.add_term(e, c * power(factor, k - divide_power));
      continue;
    }
    const E scaled = c * power(factor, k);
    const E divisor = power(factor, divide_power);
    std::optional<E> q;
    if (divide) {
      q = divide(scaled, divisor);
    } else if (auto inv = ElementTraits<E>::inverse(divisor)) {
      q = scaled * *inv;
    }
    if (!q) throw std::domain_error("scale_variable: inexact division");
    r.add_term(e, *q);
  }
  return r;
}

}  // namespace monodep
