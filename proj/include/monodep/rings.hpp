#pragma once

#include <cstdint>
#include <optional>
#include <random>
#include <string>
#include <utility>

#include "monodep/bipoly.hpp"
#include "monodep/monoid_ring.hpp"

namespace monodep {

/// R = Q + S^{-1}p: fractions over Q(u) whose constant coefficient is rational.
struct RMembership {
  RElem element;
  Rational const_part;
};

std::optional<RMembership> r_membership(const RElem& a);

/// Inverse inside R; nothing when const_part is 0 (a lies in the maximal ideal).
std::optional<RMembership> r_invert(const RMembership& a);

/// Value (i, j) in Z^2 of the valuation of W; nothing encodes infinity (a = 0).
using WValue = std::optional<std::pair<long, long>>;

WValue w_value(const RatFun2& a);
/// Lexicographic comparison with infinity as the largest value.
bool w_value_geq(const WValue& a, const WValue& b);
bool w_membership(const RatFun2& a);
/// Whether a | b in W; throws std::invalid_argument for a = 0.
bool w_divides(const RatFun2& a, const RatFun2& b);
std::string to_string(const WValue& w);

/// A W element with its value cached.
class WElem {
 public:
  explicit WElem(RatFun2 value) : value_(std::move(value)), wval_(w_value(value_)) {}
  const RatFun2& value() const { return value_; }
  const WValue& wval() const { return wval_; }
  bool in_w() const { return w_value_geq(wval_, std::pair<long, long>(0, 0)); }

 private:
  RatFun2 value_;
  WValue wval_;
};

/// Ring contexts: the element type of the ambient field plus membership and
/// unit tests for the subring.
struct VRing {
  using Elem = VElem;
  static constexpr const char* name = "V";
  static bool contains(const Elem& x) { return x.in_localization(); }
  static bool is_unit(const Elem& x) { return contains(x) && sgn(x.const_coefficient()) != 0; }
};

/// Quot(V), used where an overring B of A is the whole quotient field.
struct QuotVRing {
  using Elem = VElem;
  static constexpr const char* name = "Quot(V)";
  static bool contains(const Elem&) { return true; }
  static bool is_unit(const Elem& x) { return !x.is_zero(); }
};

struct RRing {
  using Elem = RElem;
  static constexpr const char* name = "R";
  static bool contains(const Elem& x) { return r_membership(x).has_value(); }
  static bool is_unit(const Elem& x) {
    auto m = r_membership(x);
    return m && sgn(m->const_part) != 0;
  }
};

struct WRing {
  using Elem = RatFun2;
  static constexpr const char* name = "W";
  static bool contains(const Elem& x) { return w_membership(x); }
  static bool is_unit(const Elem& x) {
    const WValue w = w_value(x);
    return w && w->first == 0 && w->second == 0;
  }
};

/// The monoid rings Q{v} and Q(u){v} themselves (no denominators).
template <class K>
struct MonoidRing {
  using Elem = Fraction<K>;
  static bool contains(const Elem& x) { return x.has_unit_den() && x.in_localization(); }
  static bool is_unit(const Elem& x) {
    return contains(x) && x.num().terms().size() == 1 && x.num().terms().begin()->first.is_zero();
  }
};

struct MonoidQRing : MonoidRing<Rational> {
  static constexpr const char* name = "monoid-Q";
};

struct MonoidQuRing : MonoidRing<RatFun1> {
  static constexpr const char* name = "monoid-Qu";
};

/// Seeded generators for property tests and suites. Exponents come from the
/// pool {1/2, 1, 3/2, 2, s2, 2-s2}; coefficients are small rationals.
using Rng = std::mt19937_64;

long uniform_int(Rng& rng, long lo, long hi);
const std::vector<QuadScalar>& exponent_pool();
Rational random_rational(Rng& rng, long height = 5);
RatFun1 random_ratfun1(Rng& rng, int max_degree = 2);
/// Monoid element with up to max_terms terms; may be zero when allow_zero.
MonoidQ random_monoid_q(Rng& rng, int max_terms = 3, bool with_constant = false);
/// Nonzero element of V. unit = true forces a nonzero constant coefficient.
VElem random_v_elem(Rng& rng, bool unit = false);
/// Nonzero element of V of positive value (a non-unit).
VElem random_v_nonunit(Rng& rng);
/// Nonzero element of R; const_part is zero with probability about 1/3.
RElem random_r_elem(Rng& rng);
/// Nonzero element of R in the maximal ideal (const_part = 0).
RElem random_r_nonunit(Rng& rng);
/// Nonzero element of Q(u, v) with small v- and u-powers.
RatFun2 random_ratfun2(Rng& rng);

}  // namespace monodep
