#pragma once

#include <algorithm>
#include <cstdint>
#include <optional>
#include <stdexcept>
#include <string>
#include <unordered_map>
#include <vector>

#include "monodep/witness.hpp"

namespace monodep {

/// Exponent vectors of total degree <= d in n variables, ordered by degree,
/// then with higher powers of earlier variables first (1, X, Y, X^2, XY, ...).
std::vector<ExpVec> monomials_up_to(std::size_t n, long d);
/// Exponent vectors of total degree exactly d, in the same order.
std::vector<ExpVec> monomials_of_degree(std::size_t n, long d);

struct SearchStats {
  std::uint64_t candidates = 0;  // size of the enumerated family
  std::uint64_t vanishing = 0;   // nonzero candidates with P(elements) = 0
};

namespace detail {

/// p * m(elements) with all fractions brought onto one denominator; only
/// the numerators are kept, which is enough to test a sum for zero.
template <class K>
std::vector<std::vector<MonoidElem<K>>> common_numerators(const std::vector<std::vector<Fraction<K>>>& values) {
  std::vector<MonoidElem<K>> dens;
  for (const auto& row : values)
    for (const auto& x : row)
      if (std::find(dens.begin(), dens.end(), x.den()) == dens.end()) dens.push_back(x.den());
  std::vector<std::vector<MonoidElem<K>>> out;
  for (const auto& row : values) {
    std::vector<MonoidElem<K>> r;
    for (const auto& x : row) {
      MonoidElem<K> num = x.num();
      for (const auto& d : dens)
        if (!(d == x.den())) num = num * d;
      r.push_back(std::move(num));
    }
    out.push_back(std::move(r));
  }
  return out;
}

/// Enumerates all index tuples over `count` slots with `base` choices, in
/// lexicographic order, calling f(tuple, sum of the chosen terms).
template <class K, class F>
void enumerate_sums(const std::vector<std::vector<MonoidElem<K>>>& terms, std::size_t first, std::size_t count,
                    std::vector<std::uint8_t>& tuple, const MonoidElem<K>& acc, F&& f) {
  if (tuple.size() == count) {
    f(tuple, acc);
    return;
  }
  const auto& row = terms[first + tuple.size()];
  for (std::size_t c = 0; c < row.size(); ++c) {
    tuple.push_back(static_cast<std::uint8_t>(c));
    enumerate_sums(terms, first, count, tuple, row[c].is_zero() ? acc : acc + row[c], f);
    tuple.pop_back();
  }
}

}  // namespace detail

/// Bounded refuter: among all polynomials whose monomials have total degree
/// <= degree_bound and whose coefficients come from pool, returns the first
/// (by highest degree in the support, then lexicographically on the tuple of
/// pool indices over monomials_up_to) that vanishes at the elements and has
/// coefficient 1 on some minimal monomial under m (on the unique one when m
/// is a total order). Meet-in-the-middle over the two halves of the monomial
/// list; equivalent to testing every candidate.
template <class K>
std::optional<Witness<Fraction<K>>> independence_search(const std::vector<Fraction<K>>& elements,
                                                        const OrderMatrix& m, long degree_bound,
                                                        const std::vector<Fraction<K>>& pool,
                                                        SearchStats* stats = nullptr,
                                                        const std::vector<ExpVec>* monomial_family = nullptr) {
  using E = Fraction<K>;
  const std::size_t n = elements.size();
  if (m.cols() != n) throw std::invalid_argument("independence_search: matrix and elements differ in size");
  if (pool.empty() || pool.size() > 255) throw std::invalid_argument("independence_search: pool size must be 1..255");
  const std::vector<ExpVec> monos = monomial_family ? *monomial_family : monomials_up_to(n, degree_bound);
  const std::size_t count = monos.size();
  const WitnessKind kind = classify(m).is_total_order ? WitnessKind::order : WitnessKind::preorder;

  // Preorder rank of every monomial (equal ranks tie under m).
  std::vector<std::size_t> order_idx(count);
  for (std::size_t i = 0; i < count; ++i) order_idx[i] = i;
  std::stable_sort(order_idx.begin(), order_idx.end(), [&](std::size_t x, std::size_t y) {
    return compare_exponents(m, monos[x], monos[y]) == Cmp::less;
  });
  std::vector<std::size_t> rank(count);
  for (std::size_t r = 0, i = 0; i < count; ++i) {
    if (i > 0 && compare_exponents(m, monos[order_idx[i - 1]], monos[order_idx[i]]) == Cmp::less) ++r;
    rank[order_idx[i]] = r;
  }
  std::vector<bool> pool_zero(pool.size()), pool_one(pool.size());
  for (std::size_t c = 0; c < pool.size(); ++c) {
    pool_zero[c] = pool[c].is_zero();
    pool_one[c] = is_one(pool[c]);
  }

  std::vector<std::vector<E>> values(count);
  for (std::size_t i = 0; i < count; ++i) {
    const E mv = evaluate(LaurentPoly<E>::monomial(monos[i], ElementTraits<E>::one()), elements);
    for (const auto& p : pool) values[i].push_back(p * mv);
  }
  const auto nums = detail::common_numerators(values);

  auto degree_of = [&](const ExpVec& e) {
    Integer d(0);
    for (const auto& x : e) d += x;
    return d;
  };
  // Candidate key: (highest support degree, tuple); smaller is earlier.
  std::optional<std::pair<Integer, std::vector<std::uint8_t>>> best;
  auto consider = [&](const std::vector<std::uint8_t>& tuple) {
    std::optional<std::size_t> min_rank;
    std::optional<Integer> top;
    for (std::size_t i = 0; i < count; ++i) {
      if (pool_zero[tuple[i]]) continue;
      if (!min_rank || rank[i] < *min_rank) min_rank = rank[i];
      const Integer d = degree_of(monos[i]);
      if (!top || d > *top) top = d;
    }
    if (!min_rank) return;  // zero polynomial
    if (stats) ++stats->vanishing;
    bool has_one = false;
    for (std::size_t i = 0; i < count && !has_one; ++i)
      has_one = rank[i] == *min_rank && pool_one[tuple[i]];
    if (!has_one) return;
    std::pair<Integer, std::vector<std::uint8_t>> key{*top, tuple};
    if (!best || key < *best) best = std::move(key);
  };

  const std::size_t left_count = count / 2;
  std::unordered_map<std::string, std::vector<std::vector<std::uint8_t>>> left;
  std::vector<std::uint8_t> tuple;
  detail::enumerate_sums<K>(nums, 0, left_count, tuple, MonoidElem<K>(),
                            [&](const std::vector<std::uint8_t>& t, const MonoidElem<K>& s) {
                              left[s.to_string()].push_back(t);
                            });
  std::uint64_t total = 1;
  for (std::size_t i = 0; i < count; ++i) total *= pool.size();
  if (stats) stats->candidates = total;
  tuple.clear();
  std::vector<std::uint8_t> full(count);
  detail::enumerate_sums<K>(nums, left_count, count - left_count, tuple, MonoidElem<K>(),
                            [&](const std::vector<std::uint8_t>& t, const MonoidElem<K>& s) {
                              auto it = left.find((-s).to_string());
                              if (it == left.end()) return;
                              std::copy(t.begin(), t.end(), full.begin() + static_cast<long>(left_count));
                              for (const auto& l : it->second) {
                                std::copy(l.begin(), l.end(), full.begin());
                                consider(full);
                              }
                            });
  if (!best) return std::nullopt;
  LaurentPoly<E> p(n);
  for (std::size_t i = 0; i < count; ++i) p.add_term(monos[i], pool[best->second[i]]);
  Witness<E> w{std::move(p), m, elements, kind};
  if (auto ok = verify_witness(w); !ok) throw std::logic_error("independence_search: hit failed verification: " + ok.reason);
  return w;
}

/// Searches only homogeneous polynomials of each degree 1..degree_bound for
/// a vanishing one with a unit coefficient (Ring::is_unit). Returns the first
/// hit by degree, then lexicographic pool-index tuple.
template <class Ring>
std::optional<LaurentPoly<typename Ring::Elem>> homogeneous_relation_search(
    const std::vector<typename Ring::Elem>& elements, long degree_bound,
    const std::vector<typename Ring::Elem>& pool, SearchStats* stats = nullptr) {
  using E = typename Ring::Elem;
  const std::size_t n = elements.size();
  if (stats) *stats = {};
  for (long d = 1; d <= degree_bound; ++d) {
    const auto monos = monomials_of_degree(n, d);
    std::vector<E> mv;
    for (const auto& e : monos) mv.push_back(evaluate(LaurentPoly<E>::monomial(e, ElementTraits<E>::one()), elements));
    std::vector<std::size_t> idx(monos.size(), 0);
    while (true) {
      if (stats) ++stats->candidates;
      E sum = ElementTraits<E>::zero();
      bool nonzero = false, unit = false;
      for (std::size_t i = 0; i < monos.size(); ++i) {
        const E& c = pool[idx[i]];
        if (c.is_zero()) continue;
        nonzero = true;
        unit = unit || Ring::is_unit(c);
        sum = sum + c * mv[i];
      }
      if (nonzero && sum.is_zero()) {
        if (stats) ++stats->vanishing;
        if (unit) {
          LaurentPoly<E> p(n);
          for (std::size_t i = 0; i < monos.size(); ++i) p.add_term(monos[i], pool[idx[i]]);
          return p;
        }
      }
      std::size_t pos = monos.size();
      while (pos > 0 && ++idx[pos - 1] == pool.size()) idx[--pos] = 0;
      if (pos == 0) break;
    }
  }
  return std::nullopt;
}

/// Outcome of the phi-argument on a vanishing polynomial.
struct PhiCheck {
  bool applies = false;        // every coefficient of the minimal component maps to 0
  bool image_vanishes = false;  // sum phi(c_m) m(1, u) = 0 (R) or trivially (V)
  std::string reason;
};

namespace detail {

template <class K>
bool phi_image_vanishes(const LaurentPoly<Fraction<K>>& q, std::string& reason);

}  // namespace detail

/// On a polynomial vanishing at elements of shape
/// (v^alpha, u v^beta) in R or (v^alpha, v^beta) in V with matching weights,
/// phi (constant coefficient) kills every coefficient of the minimal
/// weighted component. Throws std::invalid_argument when P does not vanish.
template <class K>
PhiCheck phi_refutation_check(const LaurentPoly<Fraction<K>>& p, const std::vector<Fraction<K>>& elements,
                              const WeightVector& weights) {
  using E = Fraction<K>;
  if (p.is_zero()) throw std::invalid_argument("phi_refutation_check: zero polynomial");
  if (!evaluate(p, elements).is_zero()) throw std::invalid_argument("phi_refutation_check: polynomial does not vanish");
  const auto comps = weighted_components(p, weights);
  const LaurentPoly<E>& q = comps.front().second;
  PhiCheck out;
  out.applies = true;
  for (const auto& [e, c] : q.terms()) {
    if (!c.in_localization()) {
      out.applies = false;
      out.reason = "coefficient outside the ring";
      return out;
    }
    if (!ElementTraits<K>::is_zero(c.const_coefficient())) {
      out.applies = false;
      out.reason = "phi of coefficient at " + to_string(e) + " is nonzero";
    }
  }
  std::string why;
  out.image_vanishes = detail::phi_image_vanishes<K>(q, why);
  if (!out.image_vanishes && out.reason.empty()) out.reason = why;
  return out;
}

}  // namespace monodep
