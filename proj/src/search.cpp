#include "monodep/search.hpp"

#include <set>

namespace monodep {

namespace {

void fill_degree(std::size_t n, long d, std::size_t pos, ExpVec& cur, std::vector<ExpVec>& out) {
  if (pos + 1 == n) {
    cur[pos] = d;
    out.push_back(cur);
    return;
  }
  for (long k = d; k >= 0; --k) {
    cur[pos] = k;
    fill_degree(n, d - k, pos + 1, cur, out);
  }
  cur[pos] = 0;
}

}  // namespace

std::vector<ExpVec> monomials_of_degree(std::size_t n, long d) {
  std::vector<ExpVec> out;
  if (n == 0) {
    if (d == 0) out.emplace_back();
    return out;
  }
  ExpVec cur(n, Integer(0));
  fill_degree(n, d, 0, cur, out);
  return out;
}

std::vector<ExpVec> monomials_up_to(std::size_t n, long d) {
  std::vector<ExpVec> out;
  for (long k = 0; k <= d; ++k) {
    auto part = monomials_of_degree(n, k);
    out.insert(out.end(), part.begin(), part.end());
  }
  return out;
}

namespace detail {

template <>
bool phi_image_vanishes<Rational>(const LaurentPoly<VElem>& q, std::string& reason) {
  Rational sum(0);
  for (const auto& [e, c] : q.terms()) sum += c.const_coefficient();
  if (sgn(sum) != 0) reason = "sum of phi over the minimal component is " + to_string(sum);
  return sgn(sum) == 0;
}

template <>
bool phi_image_vanishes<RatFun1>(const LaurentPoly<RElem>& q, std::string& reason) {
  // m(1, u) = u^{exponent of the last variable}; these must be distinct.
  std::set<Integer> powers;
  RatFun1 sum;
  for (const auto& [e, c] : q.terms()) {
    const Integer& k = e.back();
    if (!powers.insert(k).second) {
      reason = "two monomials of the minimal component share m(1,u) = u^" + k.get_str();
      return false;
    }
    sum = sum + c.const_coefficient() * power(RatFun1::u(), to_long(k));
  }
  if (!sum.is_zero()) reason = "sum phi(c_m) m(1,u) = " + sum.to_string();
  return sum.is_zero();
}

}  // namespace detail

}  // namespace monodep
