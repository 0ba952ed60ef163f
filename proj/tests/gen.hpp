#pragma once

// Seeded random inputs for property tests.

#include <vector>

#include "monodep/bipoly.hpp"
#include "monodep/quad_scalar.hpp"
#include "monodep/rings.hpp"
#include "monodep/upoly.hpp"

namespace gen {

using monodep::Rng;
using monodep::uniform_int;

inline monodep::Rational rational(Rng& rng, long height) {
  return monodep::make_rational(uniform_int(rng, -height, height), uniform_int(rng, 1, height));
}

inline monodep::QuadScalar quad(Rng& rng, long height) { return {rational(rng, height), rational(rng, height)}; }

inline monodep::UPoly upoly(Rng& rng, int max_degree, long height = 5) {
  std::vector<monodep::Rational> c(static_cast<std::size_t>(uniform_int(rng, 0, max_degree + 1)));
  for (auto& x : c) x = rational(rng, height);
  return monodep::UPoly(c);
}

inline monodep::UPoly nonzero_upoly(Rng& rng, int max_degree, long height = 5) {
  monodep::UPoly p;
  while (p.is_zero()) p = upoly(rng, max_degree, height);
  return p;
}

inline monodep::BiPoly bipoly(Rng& rng, int max_v_degree, int max_u_degree) {
  std::vector<monodep::UPoly> c(static_cast<std::size_t>(uniform_int(rng, 0, max_v_degree + 1)));
  for (auto& x : c) x = uniform_int(rng, 0, 2) == 0 ? monodep::UPoly() : upoly(rng, max_u_degree, 4);
  return monodep::BiPoly(c);
}

inline monodep::BiPoly nonzero_bipoly(Rng& rng, int max_v_degree, int max_u_degree) {
  monodep::BiPoly p;
  while (p.is_zero()) p = bipoly(rng, max_v_degree, max_u_degree);
  return p;
}

}  // namespace gen
