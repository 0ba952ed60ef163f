#pragma once

// Independent reference computations used to derive expected values.
// Nothing here calls the exact Q(sqrt2) sign logic or the polynomial gcds
// under test: reals go through 512-bit GMP floats, rational functions are
// compared by evaluation at sample points.

#include <gmpxx.h>

#include <vector>

#include "monodep/bipoly.hpp"
#include "monodep/quad_scalar.hpp"
#include "monodep/upoly.hpp"

namespace oracle {

inline mpf_class sqrt2_f() {
  mpf_class two(2, 512);
  mpf_class r(0, 512);
  mpf_sqrt(r.get_mpf_t(), two.get_mpf_t());
  return r;
}

inline mpf_class to_float(const monodep::QuadScalar& x) {
  mpf_class r(x.rat(), 512);
  mpf_class s(x.irr(), 512);
  return r + s * sqrt2_f();
}

/// Sign of a real number known to 512 bits; inputs here are small enough
/// that a zero decision by the exact zero test is unambiguous.
inline int sign(const monodep::QuadScalar& x) {
  if (x.is_zero()) return 0;
  return sgn(to_float(x));
}

inline mpz_class floor_of(const monodep::QuadScalar& x) {
  mpf_class f = to_float(x);
  mpf_class fl(0, 512);
  mpf_floor(fl.get_mpf_t(), f.get_mpf_t());
  mpz_class z(fl);
  return z;
}

/// Value of a bivariate polynomial at (u, v), by Horner in both variables.
inline mpq_class eval(const monodep::BiPoly& p, const mpq_class& u, const mpq_class& v) {
  mpq_class acc = 0;
  const auto& cs = p.coeffs();
  for (std::size_t j = cs.size(); j-- > 0;) {
    mpq_class cu = 0;
    const auto& ucs = cs[j].coeffs();
    for (std::size_t i = ucs.size(); i-- > 0;) cu = cu * u + ucs[i];
    acc = acc * v + cu;
  }
  return acc;
}

inline const std::vector<std::pair<mpq_class, mpq_class>>& sample_points() {
  static const std::vector<std::pair<mpq_class, mpq_class>> pts = {
      {mpq_class(3, 7), mpq_class(5, 11)}, {mpq_class(-2, 3), mpq_class(13, 5)}, {mpq_class(17, 4), mpq_class(-1, 9)},
      {mpq_class(29, 3), mpq_class(7, 2)}, {mpq_class(-11, 13), mpq_class(-19, 6)}};
  return pts;
}

}  // namespace oracle
