#include "monodep/suites.hpp"

#include <functional>
#include <stdexcept>

#include "monodep/search.hpp"
#include "monodep/vdim.hpp"
#include "monodep/w_witness.hpp"

namespace monodep {

Json quad_json(const QuadScalar& x) {
  return Json{{"rat", monodep::to_string(x.rat())}, {"irr", monodep::to_string(x.irr())}};
}

Json matrix_json(const OrderMatrix& m) {
  Json rows = Json::array();
  for (std::size_t i = 0; i < m.rows(); ++i) {
    Json row = Json::array();
    for (std::size_t j = 0; j < m.cols(); ++j) row.push_back(quad_json(m.at(i, j)));
    rows.push_back(row);
  }
  return rows;
}

bool Report::all_pass() const { return passed() == cases.size(); }

std::size_t Report::passed() const {
  std::size_t n = 0;
  for (const auto& c : cases) n += c.pass ? 1 : 0;
  return n;
}

Json Report::to_json(std::optional<double> seconds) const {
  Json out;
  out["command"] = command;
  out["seed"] = seed ? Json(*seed) : Json(nullptr);
  Json arr = Json::array();
  for (std::size_t i = 0; i < cases.size(); ++i) {
    const auto& c = cases[i];
    Json j;
    j["index"] = i;
    j["part"] = c.part;
    j["inputs"] = c.inputs;
    if (c.witness) j["witness"] = *c.witness;
    j["verdict"] = c.pass ? "pass" : "fail";
    if (!c.reason.empty()) j["reason"] = c.reason;
    if (!c.details.is_null()) j["details"] = c.details;
    arr.push_back(std::move(j));
  }
  out["cases"] = std::move(arr);
  out["summary"] = Json{{"cases", cases.size()},
                        {"passed", passed()},
                        {"failed", cases.size() - passed()},
                        {"verdict", all_pass() ? "pass" : "fail"}};
  if (seconds) out["timing"] = Json{{"seconds", *seconds}};
  return out;
}

Rng part_rng(std::uint64_t seed, std::string_view tag) {
  std::uint32_t h = 2166136261u;  // FNV-1a
  for (char ch : tag) {
    h ^= static_cast<unsigned char>(ch);
    h *= 16777619u;
  }
  std::seed_seq seq{static_cast<std::uint32_t>(seed), static_cast<std::uint32_t>(seed >> 32), h};
  return Rng(seq);
}

namespace {

template <class E>
Json elements_json(const std::vector<E>& xs) {
  Json a = Json::array();
  for (const auto& x : xs) a.push_back(ElementTraits<E>::to_string(x));
  return a;
}

/// Runs body, turning exceptions into failed cases.
CaseRecord run_case(const std::string& part, Json inputs, const std::function<void(CaseRecord&)>& body) {
  CaseRecord rec{part, std::move(inputs), std::nullopt, false, "", nullptr};
  try {
    body(rec);
  } catch (const std::exception& ex) {
    rec.pass = false;
    rec.reason = std::string("exception: ") + ex.what();
  }
  return rec;
}

template <class E>
void record_witness(CaseRecord& rec, const Witness<E>& w, const Membership<E>& in_ring) {
  rec.witness = w.poly.to_string();
  const auto ok = verify_witness(w, in_ring);
  rec.pass = ok.ok;
  rec.reason = ok.reason;
}

/// Random valid nonnegative integer matrix of rank n with entries <= max_entry.
IntMatrix random_full_rank(Rng& rng, std::size_t n, long max_entry = 3) {
  while (true) {
    IntMatrix m(n, n);
    for (std::size_t i = 0; i < n; ++i)
      for (std::size_t j = 0; j < n; ++j) m.at(i, j) = uniform_int(rng, 0, max_entry);
    const OrderMatrix om(m);
    if (validate_matrix(om) && rank(om) == n) return m;
  }
}

std::vector<VElem> random_v_tuple(Rng& rng, std::size_t n) {
  std::vector<VElem> a;
  for (std::size_t i = 0; i < n; ++i) a.push_back(uniform_int(rng, 0, 2) == 0 ? random_v_elem(rng) : random_v_nonunit(rng));
  return a;
}

RatFun2 random_w_elem(Rng& rng) {
  RatFun2 x = random_ratfun2(rng);
  if (!w_membership(x)) x = x * RatFun2::monomial(1 - v_adic_valuation(x), 0);
  return x;
}

std::vector<VElem> v_pool_pV_b() {
  const QuadScalar half(Rational(1, 2));
  std::vector<VElem> pool = {VElem(), VElem(Rational(1)), VElem(Rational(-1))};
  for (const QuadScalar& e : {half, QuadScalar(1), QuadScalar::sqrt2()}) {
    pool.push_back(VElem::v_pow(e));
    pool.push_back(-VElem::v_pow(e));
  }
  return pool;
}

std::vector<RElem> r_pool_pR_b() {
  const RElem v = RElem::v_pow(QuadScalar(1));
  const RElem uv = RElem(RatFun1::u()) * v;
  return {RElem(), RElem(RatFun1(1)), RElem(RatFun1(-1)), v, -v, uv, -uv};
}

Json stats_json(const SearchStats& st) {
  return Json{{"candidates", st.candidates}, {"vanishing_nonzero", st.vanishing}};
}

}  // namespace

std::vector<CaseRecord> part_lprelim_identity(std::uint64_t seed, long count) {
  Rng rng = part_rng(seed, "lPrelim.identity");
  std::vector<CaseRecord> out;
  for (long c = 0; c < count; ++c) {
    const std::size_t n = static_cast<std::size_t>(uniform_int(rng, 2, 3));
    const IntMatrix m = random_full_rank(rng, n);
    LaurentPoly<VElem> p(n);
    const long terms = uniform_int(rng, 1, 6);
    while (p.size() < static_cast<std::size_t>(terms)) {
      ExpVec e(n);
      for (auto& x : e) x = uniform_int(rng, -3, 3);
      p.add_term(e, random_v_elem(rng));
    }
    const OrderMatrix om(m);
    Json inputs{{"matrix", matrix_json(om)}, {"poly", p.to_string()}};
    out.push_back(run_case("lPrelim.identity", inputs, [&](CaseRecord& rec) {
      const VElem lhs = leading_coefficient(p, om);
      const VElem rhs = leading_coefficient(apply_monomial_map(p, m), OrderMatrix::identity(n));
      rec.pass = lhs == rhs;
      if (!rec.pass) rec.reason = "lc_M = " + lhs.to_string() + " but lc_lex(phi_M P) = " + rhs.to_string();
    }));
  }
  return out;
}

std::vector<CaseRecord> part_lprelim_transport(std::uint64_t seed, long count) {
  Rng rng = part_rng(seed, "lPrelim.transport");
  std::vector<CaseRecord> out;
  for (long c = 0; c < count; ++c) {
    const std::size_t n = static_cast<std::size_t>(uniform_int(rng, 2, 3));
    const IntMatrix m = random_full_rank(rng, n, 2);
    const std::vector<VElem> a = random_v_tuple(rng, n);
    Json inputs{{"matrix", matrix_json(OrderMatrix(m))}, {"elements", elements_json(a)}};
    out.push_back(run_case("lPrelim.transport", inputs, [&](CaseRecord& rec) {
      const auto b = power_products(m, a);
      const auto under_m = vdim_witness_v(OrderMatrix(m), b);
      record_witness(rec, transport_witness_to_lex(under_m, m, a), Membership<VElem>(membership_of<VRing>()));
    }));
  }
  return out;
}

std::vector<CaseRecord> part_pR_a(std::uint64_t seed, long count) {
  Rng rng = part_rng(seed, "pR.a");
  std::vector<CaseRecord> out;
  for (long c = 0; c < count; ++c) {
    const RElem a = c % 2 == 0 ? random_r_nonunit(rng) : random_r_elem(rng);
    const RElem b = c % 3 != 2 ? random_r_nonunit(rng) : random_r_elem(rng);
    for (bool x_greater : {true, false}) {
      Json inputs{{"elements", elements_json(std::vector<RElem>{a, b})}, {"order", x_greater ? "lex X>Y" : "lex Y>X"}};
      out.push_back(run_case("pR.a", inputs, [&](CaseRecord& rec) {
        record_witness(rec, lex_pair_witness<RRing>(a, b, x_greater), Membership<RElem>(membership_of<RRing>()));
      }));
    }
  }
  return out;
}

std::vector<CaseRecord> part_pR_b_search() {
  const RElem v = RElem::v_pow(QuadScalar(1));
  const std::vector<RElem> el = {v, RElem(RatFun1::u()) * v};
  const auto pool = r_pool_pR_b();
  const OrderMatrix m{{QuadScalar(1), QuadScalar(1)}};
  Json inputs{{"elements", elements_json(el)}, {"matrix", matrix_json(m)}, {"max_degree", 2}, {"pool", elements_json(pool)}};
  return {run_case("pR.b.search", inputs, [&](CaseRecord& rec) {
    SearchStats st;
    auto hit = independence_search<RatFun1>(el, m, 2, pool, &st);
    rec.details = stats_json(st);
    rec.pass = !hit;
    if (hit) {
      rec.witness = hit->poly.to_string();
      rec.reason = "search found a witness";
    }
  })};
}

std::vector<CaseRecord> part_pR_b_phi(std::uint64_t seed, long count) {
  Rng rng = part_rng(seed, "pR.b.phi");
  const RElem v = RElem::v_pow(QuadScalar(1));
  const std::vector<RElem> el = {v, RElem(RatFun1::u()) * v};
  const WeightVector weights({QuadScalar(1), QuadScalar(1)});
  std::vector<CaseRecord> out;
  auto vanishing_piece = [&]() {
    LaurentPoly<RElem> p0(2);
    const long terms = uniform_int(rng, 1, 3);
    for (long t = 0; t < terms; ++t) {
      const long i = uniform_int(rng, 0, 2);
      const long j = uniform_int(rng, 0, 2 - i);
      p0.add_term(make_exp({i, j}), random_r_elem(rng));
    }
    const RElem at = evaluate(p0, el);
    LaurentPoly<RElem> piece = p0 - LaurentPoly<RElem>::constant(2, at);
    const long mi = uniform_int(rng, 0, 1);
    const long mj = uniform_int(rng, 0, 1 - mi);
    return LaurentPoly<RElem>::monomial(make_exp({mi, mj}), random_r_elem(rng)) * piece;
  };
  for (long c = 0; c < count; ++c) {
    LaurentPoly<RElem> p(2);
    while (p.is_zero()) p = vanishing_piece() + vanishing_piece();
    Json inputs{{"elements", elements_json(el)}, {"poly", p.to_string()}};
    out.push_back(run_case("pR.b.phi", inputs, [&](CaseRecord& rec) {
      const PhiCheck r = phi_refutation_check<RatFun1>(p, el, weights);
      rec.pass = r.applies && r.image_vanishes;
      rec.reason = r.reason;
    }));
  }
  return out;
}

std::vector<CaseRecord> part_pW_a(std::uint64_t seed, long count) {
  Rng rng = part_rng(seed, "pW.a");
  std::vector<CaseRecord> out;
  for (long c = 0; c < count; ++c) {
    const RatFun2 a = random_w_elem(rng);
    const RatFun2 b = random_w_elem(rng);
    Json inputs{{"elements", elements_json(std::vector<RatFun2>{a, b})}};
    out.push_back(run_case("pW.a", inputs, [&](CaseRecord& rec) {
      const WValue wa = w_value(a), wb = w_value(b), wab = w_value(a * b);
      const bool ab = w_divides(a, b), ba = w_divides(b, a);
      const bool additive = wab && wab->first == wa->first + wb->first && wab->second == wa->second + wb->second;
      const bool consistent = ab == (*wb >= *wa) && ba == (*wa >= *wb);
      rec.pass = (ab || ba) && additive && consistent;
      rec.details = Json{{"w_a", to_string(wa)}, {"w_b", to_string(wb)}, {"w_ab", to_string(wab)}};
      if (!(ab || ba)) rec.reason = "neither element divides the other";
      else if (!additive) rec.reason = "w(ab) != w(a) + w(b)";
      else if (!consistent) rec.reason = "divisibility disagrees with the value comparison";
    }));
  }
  return out;
}

std::vector<CaseRecord> part_pW_b(std::uint64_t seed, long count_per_matrix) {
  Rng rng = part_rng(seed, "pW.b");
  const QuadScalar one(1), two(2), s2 = QuadScalar::sqrt2();
  const std::vector<OrderMatrix> mats = {OrderMatrix{{one, one}}, OrderMatrix{{one, s2}}, OrderMatrix{{two, one}},
                                         OrderMatrix{{one, one}, {two, two}}};
  std::vector<CaseRecord> out;
  for (const auto& m : mats)
    for (long c = 0; c < count_per_matrix; ++c) {
      const RatFun2 a = random_w_elem(rng);
      const RatFun2 b = random_w_elem(rng);
      Json inputs{{"matrix", matrix_json(m)}, {"elements", elements_json(std::vector<RatFun2>{a, b})}};
      out.push_back(run_case("pW.b", inputs, [&](CaseRecord& rec) {
        record_witness(rec, witness_W_preorder(m, a, b), Membership<RatFun2>(membership_of<WRing>()));
      }));
    }
  return out;
}

std::vector<CaseRecord> part_pV_a(std::uint64_t seed, long count) {
  Rng rng = part_rng(seed, "pV.a");
  std::vector<CaseRecord> out;
  for (long c = 0; c < count; ++c) {
    const VElem a = c % 2 == 0 ? random_v_nonunit(rng) : random_v_elem(rng);
    const VElem b = c % 3 != 2 ? random_v_nonunit(rng) : random_v_elem(rng);
    for (bool x_greater : {true, false}) {
      Json inputs{{"elements", elements_json(std::vector<VElem>{a, b})}, {"order", x_greater ? "lex X>Y" : "lex Y>X"}};
      out.push_back(run_case("pV.a", inputs, [&](CaseRecord& rec) {
        record_witness(rec, lex_pair_witness<VRing>(a, b, x_greater), Membership<VElem>(membership_of<VRing>()));
      }));
    }
  }
  return out;
}

std::vector<CaseRecord> part_tDim(std::uint64_t seed, long count) {
  Rng rng = part_rng(seed, "tDim");
  const IntMatrix m{{1, 1}, {1, 0}};
  std::vector<CaseRecord> out;
  for (long c = 0; c < count; ++c) {
    const std::vector<VElem> a = random_v_tuple(rng, 2);
    Json inputs{{"matrix", matrix_json(OrderMatrix(m))}, {"elements", elements_json(a)}};
    out.push_back(run_case("tDim", inputs, [&](CaseRecord& rec) {
      const auto under_m = vdim_witness_v(OrderMatrix(m), power_products(m, a));
      record_witness(rec, transport_witness_to_lex(under_m, m, a), Membership<VElem>(membership_of<VRing>()));
    }));
  }
  return out;
}

std::vector<CaseRecord> part_pV_b_search() {
  const std::vector<VElem> el = {VElem::v_pow(QuadScalar(1)), VElem::v_pow(QuadScalar::sqrt2())};
  const auto pool = v_pool_pV_b();
  const OrderMatrix m{{QuadScalar(1), QuadScalar::sqrt2()}};
  Json inputs{{"elements", elements_json(el)}, {"matrix", matrix_json(m)}, {"max_degree", 3}, {"pool", elements_json(pool)}};
  return {run_case("pV.b.search", inputs, [&](CaseRecord& rec) {
    SearchStats st;
    auto hit = independence_search<Rational>(el, m, 3, pool, &st);
    rec.details = stats_json(st);
    rec.pass = !hit;
    if (hit) {
      rec.witness = hit->poly.to_string();
      rec.reason = "search found a witness";
    }
  })};
}

std::vector<CaseRecord> part_tVdimA(std::uint64_t seed, long count_per_matrix) {
  Rng rng = part_rng(seed, "tVdimA");
  const QuadScalar zero(0), one(1), two(2);
  const std::vector<OrderMatrix> mats = {OrderMatrix::identity(2), OrderMatrix{{one, one}, {one, zero}},
                                         OrderMatrix{{two, one}, {one, one}}, OrderMatrix{{one, one}}};
  std::vector<CaseRecord> out;
  for (const auto& m : mats)
    for (long c = 0; c < count_per_matrix; ++c) {
      const std::vector<VElem> a = random_v_tuple(rng, 2);
      Json inputs{{"matrix", matrix_json(m)}, {"elements", elements_json(a)}};
      out.push_back(run_case("tVdimA", inputs, [&](CaseRecord& rec) {
        const auto w = vdim_witness_v(m, a);
        record_witness(rec, w, Membership<VElem>(membership_of<VRing>()));
        if (!rec.pass) return;
        const Witness<VElem> refined{w.poly, refine_to_order(m), a, WitnessKind::order};
        const auto ok = verify_witness(refined);
        rec.pass = ok.ok;
        if (!ok.ok) rec.reason = "under the refined order: " + ok.reason;
      }));
    }
  return out;
}

std::vector<CaseRecord> part_tVdimB(std::uint64_t seed, long count) {
  Rng rng = part_rng(seed, "tVdimB");
  const QuadScalar zero(0), one(1);
  const OrderMatrix m{{one, one}, {one, zero}};
  std::vector<CaseRecord> out;
  for (long c = 0; c < count; ++c) {
    const VElem den = random_v_nonunit(rng);
    const std::vector<VElem> b = {random_v_elem(rng) / den, random_v_tuple(rng, 1).front() / den};
    Json inputs{{"matrix", matrix_json(m)}, {"elements", elements_json(b)}, {"denominator", den.to_string()}};
    out.push_back(run_case("tVdimB", inputs, [&](CaseRecord& rec) {
      record_witness(rec, overring_lex_witness_v(m, OverringInput<VElem>{b, den}), Membership<VElem>(membership_of<VRing>()));
    }));
  }
  return out;
}

std::vector<CaseRecord> part_cAnalytic_V(std::uint64_t seed, long count) {
  Rng rng = part_rng(seed, "cAnalytic.V");
  const OrderMatrix ones{{QuadScalar(1), QuadScalar(1)}};
  std::vector<CaseRecord> out;
  for (long c = 0; c < count; ++c) {
    const std::vector<VElem> a = {random_v_nonunit(rng), random_v_nonunit(rng)};
    Json inputs{{"elements", elements_json(a)}};
    out.push_back(run_case("cAnalytic.V", inputs, [&](CaseRecord& rec) {
      const auto w = vdim_witness_v(ones, a);
      const auto h = homogenize_witness<VRing>(w);
      rec.witness = h.poly.to_string();
      bool homogeneous = true;
      for (const auto& [e, coeff] : h.poly.terms()) {
        Integer d(0);
        for (const auto& x : e) d += x;
        homogeneous = homogeneous && d == h.degree;
      }
      const bool vanishes = evaluate(h.poly, a).is_zero();
      const bool unit = VRing::is_unit(h.poly.coefficient(h.t0));
      rec.pass = homogeneous && vanishes && unit;
      rec.details = Json{{"from", w.poly.to_string()}, {"degree", h.degree}, {"t0", to_string(h.t0)}};
      if (!homogeneous) rec.reason = "not homogeneous";
      else if (!vanishes) rec.reason = "does not vanish";
      else if (!unit) rec.reason = "t0 coefficient is not a unit";
    }));
  }
  return out;
}

std::vector<CaseRecord> part_cAnalytic_R() {
  const RElem v = RElem::v_pow(QuadScalar(1));
  const std::vector<RElem> el = {v, RElem(RatFun1::u()) * v};
  const auto pool = r_pool_pR_b();
  Json inputs{{"elements", elements_json(el)}, {"max_degree", 2}, {"pool", elements_json(pool)}};
  return {run_case("cAnalytic.R", inputs, [&](CaseRecord& rec) {
    SearchStats st;
    auto hit = homogeneous_relation_search<RRing>(el, 2, pool, &st);
    rec.details = stats_json(st);
    rec.pass = !hit;
    if (hit) {
      rec.witness = hit->to_string();
      rec.reason = "found a homogeneous relation with a unit coefficient";
    }
  })};
}

const std::vector<std::string>& suite_names() {
  static const std::vector<std::string> names = {"pR", "pW", "pV", "lPrelim", "tDim", "tVdimA", "tVdimB", "cAnalytic"};
  return names;
}

Report run_suite(std::string_view name, std::uint64_t seed, long scale) {
  if (scale < 0) throw std::invalid_argument("scale must be nonnegative");
  Report r{"suite " + std::string(name), seed, {}};
  auto add = [&r](std::vector<CaseRecord> cs) {
    for (auto& c : cs) r.cases.push_back(std::move(c));
  };
  const bool any = scale > 0;
  if (name == "pR") {
    add(part_pR_a(seed, scale));
    if (any) add(part_pR_b_search());
    add(part_pR_b_phi(seed, scale / 4));
  } else if (name == "pW") {
    add(part_pW_a(seed, scale));
    add(part_pW_b(seed, scale));
  } else if (name == "pV") {
    add(part_pV_a(seed, scale));
    add(part_tDim(seed, scale));
    if (any) add(part_pV_b_search());
  } else if (name == "lPrelim") {
    add(part_lprelim_identity(seed, scale));
    add(part_lprelim_transport(seed, scale / 5));
  } else if (name == "tDim") {
    add(part_tDim(seed, scale));
  } else if (name == "tVdimA") {
    add(part_tVdimA(seed, scale));
  } else if (name == "tVdimB") {
    add(part_tVdimB(seed, scale));
  } else if (name == "cAnalytic") {
    add(part_cAnalytic_V(seed, scale));
    if (any) add(part_cAnalytic_R());
  } else {
    throw std::invalid_argument("unknown suite '" + std::string(name) + "'");
  }
  return r;
}

}  // namespace monodep
