#include "monodep/cli.hpp"

#include <algorithm>
#include <chrono>
#include <cstdlib>
#include <iostream>
#include <optional>

#include <CLI11.hpp>

#include "monodep/parser.hpp"
#include "monodep/search.hpp"
#include "monodep/suites.hpp"
#include "monodep/vdim.hpp"
#include "monodep/w_witness.hpp"

namespace monodep {

namespace {

/// Input problems that map to exit code 2.
class UsageError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

struct Options {
  std::string ring = "V";
  std::string matrix;
  std::string elements;
  std::string poly;
  std::string pool;
  std::string exp_a, exp_b;
  std::string denominator;
  std::string kind;
  std::string name;
  long max_degree = 2;
  long scale = 100;
  std::uint64_t seed = 1;
  bool json = false;
  bool timing = false;
  bool expect_none = false;
};

OrderMatrix matrix_arg(const Options& o) {
  if (o.matrix.empty()) throw UsageError("--matrix is required");
  OrderMatrix m = parse_matrix(o.matrix);
  if (!validate_matrix(m))
    throw UsageError("matrix " + o.matrix + " is not a monomial preorder (each column needs a positive first nonzero entry)");
  return m;
}

template <class Ring>
std::string membership_reason(const typename Ring::Elem& x) {
  if constexpr (std::is_same_v<Ring, RRing>) {
    if (!x.in_localization()) return "not in the localization (negative v-exponent)";
    return "constant coefficient " + x.const_coefficient().to_string() + " is not rational";
  } else if constexpr (std::is_same_v<Ring, WRing>) {
    return "w-value " + to_string(w_value(x)) + " is below (0,0)";
  } else if constexpr (std::is_same_v<Ring, VRing>) {
    return "negative v-value " + x.valuation().to_string();
  } else {
    return "not an element of the monoid ring";
  }
}

template <class Ring>
typename Ring::Elem element_arg(const std::string& text, bool check_membership = true) {
  using E = typename Ring::Elem;
  const E x = parse_element<E>(text);
  if (check_membership && !Ring::contains(x))
    throw MembershipError("'" + text + "' is not in " + Ring::name + ": " + membership_reason<Ring>(x));
  return x;
}

template <class Ring>
std::vector<typename Ring::Elem> elements_arg(const std::string& text, bool check_membership = true) {
  if (text.empty()) throw UsageError("--elements is required");
  std::vector<typename Ring::Elem> out;
  for (const auto& part : split_top_level(text)) out.push_back(element_arg<Ring>(part, check_membership));
  return out;
}

template <class E>
Json elements_json(const std::vector<E>& xs) {
  Json a = Json::array();
  for (const auto& x : xs) a.push_back(ElementTraits<E>::to_string(x));
  return a;
}

template <class E>
void set_witness(CaseRecord& rec, const Witness<E>& w, const Membership<E>& in_ring) {
  rec.witness = w.poly.to_string();
  const auto ok = verify_witness(w, in_ring);
  rec.pass = ok.ok;
  rec.reason = ok.reason;
  rec.details = Json{{"kind", to_string(w.kind)}, {"order", matrix_json(w.order)}};
}

template <class Ring>
Membership<typename Ring::Elem> in_ring() {
  return membership_of<Ring>();
}

/// Calls f.template operator()<Ring>() for the ring named in the options.
template <class F>
auto dispatch_ring(const std::string& ring, F&& f, bool allow_w = true) {
  RingKind k;
  try {
    k = parse_ring_kind(ring);
  } catch (const std::invalid_argument& ex) {
    throw UsageError(ex.what());
  }
  switch (k) {
    case RingKind::R:
      return f.template operator()<RRing>();
    case RingKind::V:
      return f.template operator()<VRing>();
    case RingKind::W:
      if (!allow_w) throw UsageError("ring W is not supported by this command");
      if constexpr (requires { f.template operator()<WRing>(); }) return f.template operator()<WRing>();
      throw UsageError("ring W is not supported by this command");
    case RingKind::MonoidQ:
      return f.template operator()<MonoidQRing>();
    case RingKind::MonoidQu:
      return f.template operator()<MonoidQuRing>();
  }
  throw UsageError("unknown ring");
}

Report single(const std::string& command, CaseRecord rec) {
  Report r{command, std::nullopt, {}};
  r.cases.push_back(std::move(rec));
  return r;
}

Report cmd_compare(const Options& o) {
  const OrderMatrix m = matrix_arg(o);
  const ExpVec a = parse_expvec(o.exp_a), b = parse_expvec(o.exp_b);
  if (a.size() != m.cols() || b.size() != m.cols()) throw UsageError("exponent vectors must have one entry per matrix column");
  const Cmp c = compare_exponents(m, a, b);
  const char* word = c == Cmp::less ? "less" : c == Cmp::tie ? "tie" : "greater";
  CaseRecord rec{"compare", Json{{"matrix", matrix_json(m)}, {"expA", to_string(a)}, {"expB", to_string(b)}}, std::nullopt,
                 true, "", Json{{"result", word}}};
  return single("compare", std::move(rec));
}

Report cmd_classify(const Options& o) {
  const OrderMatrix m = matrix_arg(o);
  const OrderClass c = classify(m);
  CaseRecord rec{"classify", Json{{"matrix", matrix_json(m)}}, std::nullopt, true, "",
                 Json{{"is_rational", c.is_rational},
                      {"is_graded", c.is_graded},
                      {"is_total_order", c.is_total_order},
                      {"normalized", normalize_rows(m).to_string()}}};
  if (c.is_rational) rec.details["refined"] = refine_to_order(m).to_string();
  return single("classify", std::move(rec));
}

Report cmd_witness(const Options& o) {
  const OrderMatrix m = matrix_arg(o);
  return dispatch_ring(o.ring, [&]<class Ring>() -> Report {
    using E = typename Ring::Elem;
    const auto el = elements_arg<Ring>(o.elements);
    if (el.size() != m.cols()) throw UsageError("number of elements differs from the number of matrix columns");
    CaseRecord rec{"witness", Json{{"ring", Ring::name}, {"matrix", matrix_json(m)}, {"elements", elements_json(el)}},
                   std::nullopt, false, "", nullptr};
    const auto lex = lex_permutation(m);
    if constexpr (std::is_same_v<Ring, WRing>) {
      if (el.size() != 2) throw UsageError("W witnesses are built for pairs");
      for (std::size_t i = 0; i < 2; ++i)
        if (el[i].is_zero()) {
          set_witness(rec, Witness<E>{LaurentPoly<E>::variable(2, i), m, el, WitnessKind::preorder}, in_ring<Ring>());
          return single("witness", std::move(rec));
        }
      try {
        set_witness(rec, witness_W_preorder(m, el[0], el[1]), in_ring<Ring>());
      } catch (const std::invalid_argument& ex) {
        rec.reason = ex.what();
      }
    } else if constexpr (std::is_same_v<Ring, RRing> || std::is_same_v<Ring, VRing>) {
      if (el.size() == 1) {
        auto w = witness_trivial<Ring>(el[0]);
        if (w) {
          w->order = m;
          set_witness(rec, *w, in_ring<Ring>());
        } else {
          rec.reason = "a single nonzero nonunit is independent";
        }
      } else if (el.size() == 2 && lex) {
        set_witness(rec, lex_pair_witness<Ring>(el[0], el[1], (*lex)[0] == 0), in_ring<Ring>());
      } else if (std::is_same_v<Ring, VRing> && classify(m).is_rational) {
        if constexpr (std::is_same_v<Ring, VRing>) set_witness(rec, vdim_witness_v(m, el), in_ring<Ring>());
      } else if constexpr (std::is_same_v<Ring, RRing>) {
        rec.reason = "no witness builder for R under a non-lex order (R has dimension 1 but valuative dimension 2)";
      } else {
        rec.reason = "no witness builder for V under an irrational order (elements may be independent)";
      }
    } else {
      throw UsageError("witness is available for the rings R, V and W");
    }
    return single("witness", std::move(rec));
  });
}

WitnessKind kind_arg(const Options& o, const OrderMatrix& m) {
  if (o.kind.empty()) return classify(m).is_total_order ? WitnessKind::order : WitnessKind::preorder;
  if (o.kind == "order") return WitnessKind::order;
  if (o.kind == "preorder") return WitnessKind::preorder;
  throw UsageError("--kind must be order or preorder");
}

Report cmd_verify(const Options& o) {
  const OrderMatrix m = matrix_arg(o);
  if (o.poly.empty()) throw UsageError("--poly is required");
  return dispatch_ring(o.ring, [&]<class Ring>() -> Report {
    using E = typename Ring::Elem;
    const auto el = elements_arg<Ring>(o.elements);
    const LaurentPoly<E> p = parse_poly<E>(o.poly, el.size());
    const Witness<E> w{p, m, el, kind_arg(o, m)};
    CaseRecord rec{"verify",
                   Json{{"ring", Ring::name}, {"matrix", matrix_json(m)}, {"elements", elements_json(el)}, {"poly", o.poly}},
                   std::nullopt, false, "", nullptr};
    set_witness(rec, w, in_ring<Ring>());
    return single("verify", std::move(rec));
  });
}

void require_v(const Options& o) {
  if (o.ring != "V") throw UsageError("this command works over the ring V");
}

Report cmd_transport(const Options& o) {
  require_v(o);
  const OrderMatrix m = matrix_arg(o);
  IntMatrix mi;
  try {
    mi = to_int_matrix(m);
  } catch (const std::invalid_argument& ex) {
    throw UsageError(ex.what());
  }
  if (mi.rows() != mi.cols() || !classify(m).is_total_order) throw UsageError("transport needs a square integer matrix of full rank");
  const auto a = elements_arg<VRing>(o.elements);
  if (a.size() != mi.cols()) throw UsageError("number of elements differs from the matrix size");
  const auto b = power_products(mi, a);
  CaseRecord rec{"transport", Json{{"matrix", matrix_json(m)}, {"elements", elements_json(a)}}, std::nullopt, false, "", nullptr};
  Witness<VElem> under_m;
  if (o.poly.empty()) {
    under_m = vdim_witness_v(m, b);
  } else {
    under_m = Witness<VElem>{parse_poly<VElem>(o.poly, a.size()), m, b, WitnessKind::order};
    if (auto ok = verify_witness(under_m, in_ring<VRing>()); !ok) {
      rec.reason = "input is not a witness for the power products: " + ok.reason;
      return single("transport", std::move(rec));
    }
  }
  set_witness(rec, transport_witness_to_lex(under_m, mi, a), in_ring<VRing>());
  rec.details["power_products"] = elements_json(b);
  rec.details["witness_under_matrix"] = under_m.poly.to_string();
  return single("transport", std::move(rec));
}

Report cmd_vdim(const Options& o) {
  require_v(o);
  const OrderMatrix m = matrix_arg(o);
  if (!classify(m).is_rational) throw UsageError("vdim needs a rational matrix");
  const auto a = elements_arg<VRing>(o.elements);
  if (a.size() != m.cols()) throw UsageError("number of elements differs from the number of matrix columns");
  CaseRecord rec{"vdim", Json{{"matrix", matrix_json(m)}, {"elements", elements_json(a)}}, std::nullopt, false, "", nullptr};
  const auto w = vdim_witness_v(m, a);
  set_witness(rec, w, in_ring<VRing>());
  rec.details["refined"] = refine_to_order(m).to_string();
  const auto inv = inverse_scaled(integerize(refine_to_order(m)));
  rec.details["k"] = to_string(inv.k);
  rec.details["L"] = inv.L.to_string();
  return single("vdim", std::move(rec));
}

Report cmd_overring(const Options& o) {
  require_v(o);
  const OrderMatrix m = matrix_arg(o);
  const auto b = elements_arg<QuotVRing>(o.elements, false);
  if (o.denominator.empty()) throw UsageError("--denominator is required");
  const VElem a = element_arg<VRing>(o.denominator);
  CaseRecord rec{"overring", Json{{"matrix", matrix_json(m)}, {"elements", elements_json(b)}, {"denominator", a.to_string()}},
                 std::nullopt, false, "", nullptr};
  try {
    set_witness(rec, overring_lex_witness_v(m, OverringInput<VElem>{b, a}), in_ring<VRing>());
  } catch (const std::invalid_argument& ex) {
    throw UsageError(ex.what());
  }
  return single("overring", std::move(rec));
}

Report cmd_homogenize(const Options& o) {
  require_v(o);
  const auto a = elements_arg<VRing>(o.elements);
  std::vector<QuadScalar> ones_row(a.size(), QuadScalar(1));
  const OrderMatrix ones(std::vector<std::vector<QuadScalar>>{ones_row});
  CaseRecord rec{"homogenize", Json{{"elements", elements_json(a)}}, std::nullopt, false, "", nullptr};
  Witness<VElem> w;
  if (o.poly.empty()) {
    w = vdim_witness_v(ones, a);
  } else {
    w = Witness<VElem>{parse_poly<VElem>(o.poly, a.size()), ones, a, WitnessKind::preorder};
    rec.inputs["poly"] = o.poly;
  }
  try {
    const auto h = homogenize_witness<VRing>(w);
    rec.witness = h.poly.to_string();
    rec.pass = evaluate(h.poly, a).is_zero() && VRing::is_unit(h.poly.coefficient(h.t0));
    rec.details = Json{{"from", w.poly.to_string()}, {"degree", h.degree}, {"t0", to_string(h.t0)}};
    if (!rec.pass) rec.reason = "homogenized polynomial failed its checks";
  } catch (const std::invalid_argument& ex) {
    rec.reason = ex.what();
  }
  return single("homogenize", std::move(rec));
}

template <class Ring>
std::vector<typename Ring::Elem> default_pool() {
  using E = typename Ring::Elem;
  std::vector<std::string> texts;
  if constexpr (std::is_same_v<E, RElem>) {
    texts = {"0", "1", "-1", "v", "-v", "u*v", "-u*v"};
  } else {
    texts = {"0", "1", "-1", "v^(1/2)", "-v^(1/2)", "v", "-v"};
  }
  std::vector<E> pool;
  for (const auto& t : texts) pool.push_back(parse_element<E>(t));
  return pool;
}

Report cmd_search(const Options& o) {
  const OrderMatrix m = matrix_arg(o);
  if (o.max_degree < 0) throw UsageError("--max-degree must be nonnegative");
  return dispatch_ring(
      o.ring,
      [&]<class Ring>() -> Report {
        using E = typename Ring::Elem;
        if constexpr (std::is_same_v<E, RatFun2>) {
          throw UsageError("search is not available for W");
        } else {
          const auto el = elements_arg<Ring>(o.elements);
          if (el.size() != m.cols()) throw UsageError("number of elements differs from the number of matrix columns");
          const auto pool = o.pool.empty() ? default_pool<Ring>() : elements_arg<Ring>(o.pool);
          CaseRecord rec{"search",
                         Json{{"ring", Ring::name},
                              {"matrix", matrix_json(m)},
                              {"elements", elements_json(el)},
                              {"max_degree", o.max_degree},
                              {"pool", elements_json(pool)}},
                         std::nullopt, true, "", nullptr};
          SearchStats st;
          using K = std::conditional_t<std::is_same_v<E, VElem>, Rational, RatFun1>;
          const auto hit = independence_search<K>(el, m, o.max_degree, pool, &st);
          rec.details = Json{{"found", hit.has_value()}, {"candidates", st.candidates}, {"vanishing_nonzero", st.vanishing}};
          if (hit) {
            rec.witness = hit->poly.to_string();
            const auto ok = verify_witness(*hit, in_ring<Ring>());
            rec.pass = ok.ok && !o.expect_none;
            rec.reason = !ok.ok ? ok.reason : o.expect_none ? "a witness exists within the bounds" : "";
          }
          return single("search", std::move(rec));
        }
      },
      false);
}

std::uint64_t default_seed() {
  if (const char* s = std::getenv("MONODEP_SEED")) {
    try {
      return std::stoull(s);
    } catch (const std::exception&) {
      throw UsageError("MONODEP_SEED must be a nonnegative integer");
    }
  }
  return 1;
}

void print_text(std::ostream& out, const Report& r) {
  for (std::size_t i = 0; i < r.cases.size(); ++i) {
    const auto& c = r.cases[i];
    out << "[" << (c.pass ? "pass" : "FAIL") << "] #" << i << " " << c.part;
    if (c.witness) out << "  witness: " << *c.witness;
    if (!c.reason.empty()) out << "  (" << c.reason << ")";
    out << "\n";
    if (!c.details.is_null() && r.cases.size() == 1) out << "  " << c.details.dump() << "\n";
  }
  out << r.passed() << "/" << r.cases.size() << " passed\n";
}

}  // namespace

int run_cli(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
  CLI::App app{"monodep: monomial-order dependence witnesses over exotic rings", "monodep"};
  app.require_subcommand(1);
  Options o;
  bool seed_given = false;

  auto common = [&o](CLI::App* sub) { sub->add_flag("--json", o.json, "Emit the report as JSON"); };
  auto ring_opt = [&o](CLI::App* sub) { sub->add_option("--ring", o.ring, "R, V, W, monoid-Q or monoid-Qu")->capture_default_str(); };

  auto* compare = app.add_subcommand("compare", "Compare two exponent vectors under a matrix");
  compare->add_option("--matrix", o.matrix, "Rows separated by ';', entries by ','")->required();
  compare->add_option("--expA", o.exp_a)->required();
  compare->add_option("--expB", o.exp_b)->required();
  common(compare);

  auto* classify_cmd = app.add_subcommand("classify", "Classify an order matrix");
  classify_cmd->add_option("--matrix", o.matrix)->required();
  common(classify_cmd);

  auto* witness = app.add_subcommand("witness", "Build and verify a dependence witness");
  ring_opt(witness);
  witness->add_option("--matrix", o.matrix)->required();
  witness->add_option("--elements", o.elements)->required();
  common(witness);

  auto* verify = app.add_subcommand("verify", "Verify a candidate witness");
  ring_opt(verify);
  verify->add_option("--matrix", o.matrix)->required();
  verify->add_option("--poly", o.poly)->required();
  verify->add_option("--elements", o.elements)->required();
  verify->add_option("--kind", o.kind, "order or preorder (default: order iff the matrix is a total order)");
  common(verify);

  auto* transport = app.add_subcommand("transport", "Transport a witness to lex");
  ring_opt(transport);
  transport->add_option("--matrix", o.matrix)->required();
  transport->add_option("--elements", o.elements)->required();
  transport->add_option("--poly", o.poly, "Witness for the power products (built when omitted)");
  common(transport);

  auto* vdim = app.add_subcommand("vdim", "Witness under a rational preorder via an overring oracle");
  ring_opt(vdim);
  vdim->add_option("--matrix", o.matrix)->required();
  vdim->add_option("--elements", o.elements)->required();
  common(vdim);

  auto* overring = app.add_subcommand("overring", "Lex witness for elements of Quot(V)");
  ring_opt(overring);
  overring->add_option("--matrix", o.matrix)->required();
  overring->add_option("--elements", o.elements)->required();
  overring->add_option("--denominator", o.denominator)->required();
  common(overring);

  auto* homogenize = app.add_subcommand("homogenize", "Homogenize a witness under (1,...,1)");
  ring_opt(homogenize);
  homogenize->add_option("--elements", o.elements)->required();
  homogenize->add_option("--poly", o.poly, "Witness under (1,...,1) (built when omitted)");
  common(homogenize);

  auto* search = app.add_subcommand("search", "Bounded exhaustive witness search");
  ring_opt(search);
  search->add_option("--matrix", o.matrix)->required();
  search->add_option("--elements", o.elements)->required();
  search->add_option("--max-degree", o.max_degree)->capture_default_str();
  search->add_option("--pool", o.pool, "Comma-separated coefficients (default: 7 elements)");
  search->add_flag("--expect-none", o.expect_none, "Exit 1 when a witness is found");
  common(search);

  auto* suite = app.add_subcommand("suite", "Run a proposition suite");
  suite->add_option("--name", o.name)->required()->check(CLI::IsMember(suite_names()));
  suite->add_option("--seed", o.seed, "Default: $MONODEP_SEED or 1")->each([&seed_given](const std::string&) { seed_given = true; });
  suite->add_option("--scale", o.scale)->capture_default_str()->check(CLI::NonNegativeNumber);
  suite->add_flag("--timing", o.timing, "Include wall-clock seconds in the JSON report");
  common(suite);

  std::vector<std::string> rev(args.rbegin(), args.rend());
  try {
    app.parse(rev);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e, out, err);
    return code == 0 ? kExitPass : kExitUsage;
  }

  try {
    Report r;
    std::optional<double> seconds;
    if (compare->parsed()) {
      r = cmd_compare(o);
    } else if (classify_cmd->parsed()) {
      r = cmd_classify(o);
    } else if (witness->parsed()) {
      r = cmd_witness(o);
    } else if (verify->parsed()) {
      r = cmd_verify(o);
    } else if (transport->parsed()) {
      r = cmd_transport(o);
    } else if (vdim->parsed()) {
      r = cmd_vdim(o);
    } else if (overring->parsed()) {
      r = cmd_overring(o);
    } else if (homogenize->parsed()) {
      r = cmd_homogenize(o);
    } else if (search->parsed()) {
      r = cmd_search(o);
    } else {
      const std::uint64_t seed = seed_given ? o.seed : default_seed();
      const auto t0 = std::chrono::steady_clock::now();
      r = run_suite(o.name, seed, o.scale);
      if (o.timing) seconds = std::chrono::duration<double>(std::chrono::steady_clock::now() - t0).count();
    }
    if (o.json) {
      out << r.to_json(seconds).dump(2) << "\n";
    } else {
      print_text(out, r);
      if (seconds) out << "time: " << *seconds << " s\n";
    }
    return r.all_pass() ? kExitPass : kExitFail;
  } catch (const UsageError& ex) {
    err << "error: " << ex.what() << "\n";
  } catch (const ParseError& ex) {
    err << "error: " << ex.what() << "\n";
  } catch (const MembershipError& ex) {
    err << "membership error: " << ex.what() << "\n";
  } catch (const std::invalid_argument& ex) {
    err << "error: " << ex.what() << "\n";
  }
  return kExitUsage;
}

}  // namespace monodep
