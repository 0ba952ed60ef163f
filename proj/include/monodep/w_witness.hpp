#pragma once

#include <array>
#include <utility>

#include "monodep/witness.hpp"

namespace monodep {

/// Row (alpha, beta), value matrix A = ((i1, i2), (j1, j2)) and a nonzero
/// integer solution (e, f) of
///   alpha e + beta f <= 0   and   A (e, f) >=_lex (0, 0).
struct EqMASystem {
  std::pair<QuadScalar, QuadScalar> order_row;
  std::array<std::array<long, 2>, 2> value_matrix{};
  std::pair<long, long> solution{0, 0};
};

/// Whether (e, f) is nonzero and satisfies both conditions.
bool satisfies_eqMA(const EqMASystem& s, long e, long f);

/// Requires alpha, beta > 0; throws std::invalid_argument otherwise.
EqMASystem solve_eqMA(const std::pair<QuadScalar, QuadScalar>& order_row,
                      const std::array<std::array<long, 2>, 2>& value_matrix);

/// P = X^{e1} Y^{f1} - c X^{e2} Y^{f2} with e = e1 - e2, f = f1 - f2 split into
/// nonnegative parts and c = a^e b^f, for a solution (e, f) of the system.
Witness<RatFun2> w_explicit_witness(const OrderMatrix& m, const RatFun2& a, const RatFun2& b,
                                    std::pair<long, long> solution);

/// Preorder witness for nonzero a, b in W under a two-variable
/// preorder that is not a rational order. Throws std::invalid_argument for
/// zero inputs, elements outside W, or matrices of another shape.
Witness<RatFun2> witness_W_preorder(const OrderMatrix& m, const RatFun2& a, const RatFun2& b);

}  // namespace monodep
