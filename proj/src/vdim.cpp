#include "monodep/vdim.hpp"

namespace monodep {

Witness<VElem> quot_v_lex_oracle(const std::vector<VElem>& b) {
  const std::size_t n = b.size();
  const OrderMatrix lex = OrderMatrix::identity(n);
  for (std::size_t i = 0; i < n; ++i) {
    if (b[i].is_zero()) return {LaurentPoly<VElem>::variable(n, i), lex, b, WitnessKind::order};
    if (b[i].valuation().sign() <= 0) {
      const VElem inv = b[i].inverse();
      return {LaurentPoly<VElem>::constant(n, VElem(Rational(1))) - inv * LaurentPoly<VElem>::variable(n, i), lex, b,
              WitnessKind::order};
    }
  }
  if (n < 2) throw std::invalid_argument("quot_v_lex_oracle: a single element of the maximal ideal is independent");
  return {value_pair_poly<VRing>(b[0], b[1], n, 0, 1), lex, b, WitnessKind::order};
}

Witness<VElem> vdim_witness_v(const OrderMatrix& m, const std::vector<VElem>& a) {
  return vdim_witness<VRing>(m, a, quot_v_lex_oracle);
}

Witness<VElem> overring_lex_witness_v(const OrderMatrix& m, const OverringInput<VElem>& in) {
  return overring_lex_witness<VRing>(m, in, vdim_witness_v);
}

}  // namespace monodep
