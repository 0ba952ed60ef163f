#include "monodep/parser.hpp"

#include <cctype>
#include <optional>

namespace monodep {

ParseError::ParseError(std::size_t position, const std::string& expected, const std::string& found)
    : std::invalid_argument("parse error at position " + std::to_string(position) + ": expected " + expected +
                            ", found " + found),
      position_(position) {}

RingKind parse_ring_kind(std::string_view text) {
  if (text == "R") return RingKind::R;
  if (text == "V") return RingKind::V;
  if (text == "W") return RingKind::W;
  if (text == "monoid-Q") return RingKind::MonoidQ;
  if (text == "monoid-Qu") return RingKind::MonoidQu;
  throw std::invalid_argument("unknown ring '" + std::string(text) + "' (expected R, V, W, monoid-Q, monoid-Qu)");
}

const char* to_string(RingKind k) {
  switch (k) {
    case RingKind::R:
      return "R";
    case RingKind::V:
      return "V";
    case RingKind::W:
      return "W";
    case RingKind::MonoidQ:
      return "monoid-Q";
    case RingKind::MonoidQu:
      return "monoid-Qu";
  }
  return "?";
}

std::vector<std::string> split_top_level(std::string_view text, char sep) {
  std::vector<std::string> out;
  int depth = 0;
  std::string cur;
  auto flush = [&] {
    const auto b = cur.find_first_not_of(' ');
    const auto e = cur.find_last_not_of(' ');
    out.push_back(b == std::string::npos ? "" : cur.substr(b, e - b + 1));
    cur.clear();
  };
  for (char ch : text) {
    if (ch == '(') ++depth;
    if (ch == ')') --depth;
    if (ch == sep && depth == 0) {
      flush();
      continue;
    }
    cur += ch;
  }
  flush();
  if (out.size() == 1 && out.front().empty()) out.clear();
  return out;
}

namespace {

/// Per-coefficient-type atoms.
template <class E>
struct Atoms;

template <>
struct Atoms<VElem> {
  static VElem rational(const Rational& c) { return VElem(c); }
  static std::optional<VElem> u() { return std::nullopt; }
  static std::optional<VElem> v_pow(const QuadScalar& e) { return VElem::v_pow(e); }
  static const char* u_error() { return "u is not available over Q (ring V)"; }
};

template <>
struct Atoms<RElem> {
  static RElem rational(const Rational& c) { return RElem(RatFun1(c)); }
  static std::optional<RElem> u() { return RElem(RatFun1::u()); }
  static std::optional<RElem> v_pow(const QuadScalar& e) { return RElem::v_pow(e); }
  static const char* u_error() { return ""; }
};

template <>
struct Atoms<RatFun2> {
  static RatFun2 rational(const Rational& c) { return RatFun2(c); }
  static std::optional<RatFun2> u() { return RatFun2::u(); }
  static std::optional<RatFun2> v_pow(const QuadScalar& e) {
    if (!e.is_integer()) return std::nullopt;
    return RatFun2::monomial(to_long(e.rat().get_num()), 0);
  }
  static const char* u_error() { return ""; }
};

template <class E>
class Parser {
 public:
  Parser(std::string_view text, std::size_t nvars) : s_(text), n_(nvars) {}

  LaurentPoly<E> run() {
    skip();
    if (pos_ == s_.size()) fail("an expression");
    LaurentPoly<E> p = expr();
    skip();
    if (pos_ != s_.size()) fail("'+', '-', '*', '/' or end of input");
    return p;
  }

 private:
  using P = LaurentPoly<E>;
  using T = ElementTraits<E>;

  [[noreturn]] void fail(const std::string& expected) const {
    const std::string found = pos_ < s_.size() ? "'" + std::string(1, s_[pos_]) + "'" : "end of input";
    throw ParseError(pos_, expected, found);
  }

  void skip() {
    while (pos_ < s_.size() && std::isspace(static_cast<unsigned char>(s_[pos_]))) ++pos_;
  }
  bool accept(char c) {
    skip();
    if (pos_ < s_.size() && s_[pos_] == c) {
      ++pos_;
      return true;
    }
    return false;
  }
  void expect(char c) {
    if (!accept(c)) fail(std::string("'") + c + "'");
  }

  P constant(const E& c) const { return P::constant(n_, c); }

  P expr() {
    P acc(n_);
    bool negate = false;
    if (accept('-')) {
      negate = true;
    } else {
      accept('+');
    }
    acc = term();
    if (negate) acc = -acc;
    while (true) {
      if (accept('+')) {
        acc += term();
      } else if (accept('-')) {
        acc -= term();
      } else {
        return acc;
      }
    }
  }

  P term() {
    P acc = factor();
    while (true) {
      if (accept('*')) {
        acc = acc * factor();
      } else if (accept('/')) {
        const std::size_t at = pos_;
        P d = factor();
        acc = acc * invert_monomial(d, at);
      } else {
        return acc;
      }
    }
  }

  P invert_monomial(const P& d, std::size_t at) {
    if (d.size() != 1) {
      pos_ = at;
      fail(d.is_zero() ? "a nonzero divisor" : "a monomial divisor");
    }
    const auto& [e, c] = *d.terms().begin();
    auto inv = T::inverse(c);
    if (!inv) {
      pos_ = at;
      fail("a nonzero divisor");
    }
    ExpVec neg = e;
    for (auto& x : neg) x = -x;
    return P::monomial(neg, *inv);
  }

  long integer_exponent() {
    skip();
    bool paren = accept('(');
    skip();
    bool neg = false;
    if (accept('-')) neg = true;
    skip();
    const std::size_t start = pos_;
    while (pos_ < s_.size() && std::isdigit(static_cast<unsigned char>(s_[pos_]))) ++pos_;
    if (start == pos_) fail("an integer exponent");
    long k = to_long(Integer(std::string(s_.substr(start, pos_ - start))));
    if (paren) expect(')');
    return neg ? -k : k;
  }

  P factor() {
    P base = primary();
    if (accept('^')) {
      const std::size_t at = pos_;
      const long k = integer_exponent();
      if (k < 0) {
        if (base.size() != 1) {
          pos_ = at;
          fail("a nonnegative exponent (negative powers need a monomial base)");
        }
        return pow(invert_monomial(base, at), -k);
      }
      return pow(base, k);
    }
    return base;
  }

  P pow(const P& b, long k) const {
    P r = constant(T::one());
    for (long i = 0; i < k; ++i) r = r * b;
    return r;
  }

  P primary() {
    skip();
    if (pos_ == s_.size()) fail("a number, u, v, a variable or '('");
    const char ch = s_[pos_];
    if (ch == '(') {
      ++pos_;
      P inner = expr();
      expect(')');
      return inner;
    }
    if (std::isdigit(static_cast<unsigned char>(ch))) {
      const std::size_t start = pos_;
      while (pos_ < s_.size() && std::isdigit(static_cast<unsigned char>(s_[pos_]))) ++pos_;
      return constant(Atoms<E>::rational(Rational(Integer(std::string(s_.substr(start, pos_ - start))))));
    }
    if (ch == 'u') {
      ++pos_;
      auto u = Atoms<E>::u();
      if (!u) {
        --pos_;
        throw ParseError(pos_, "an atom of this ring", std::string("'u' (") + Atoms<E>::u_error() + ")");
      }
      return constant(*u);
    }
    if (ch == 'v') {
      ++pos_;
      QuadScalar e(1);
      skip();
      if (pos_ < s_.size() && s_[pos_] == '^') {
        ++pos_;
        skip();
        const std::size_t at = pos_;
        if (accept('(')) {
          int depth = 1;
          const std::size_t start = pos_;
          while (pos_ < s_.size() && depth > 0) {
            if (s_[pos_] == '(') ++depth;
            if (s_[pos_] == ')') --depth;
            ++pos_;
          }
          if (depth != 0) fail("')'");
          try {
            e = parse_quad(s_.substr(start, pos_ - 1 - start));
          } catch (const std::invalid_argument&) {
            pos_ = at;
            fail("a Q(sqrt2) exponent such as (3/2), (s2) or (2-s2)");
          }
        } else {
          e = QuadScalar(integer_exponent());
        }
        auto vp = Atoms<E>::v_pow(e);
        if (!vp) {
          pos_ = at;
          fail("an integer v-exponent");
        }
        return constant(*vp);
      }
      return constant(*Atoms<E>::v_pow(e));
    }
    if (ch == 'X' || ch == 'Y' || ch == 'Z') {
      ++pos_;
      std::size_t index = 0;
      if (ch == 'X' && pos_ < s_.size() && std::isdigit(static_cast<unsigned char>(s_[pos_]))) {
        const std::size_t start = pos_;
        while (pos_ < s_.size() && std::isdigit(static_cast<unsigned char>(s_[pos_]))) ++pos_;
        const long k = std::stol(std::string(s_.substr(start, pos_ - start)));
        if (k < 1) {
          pos_ = start;
          fail("a variable index >= 1");
        }
        index = static_cast<std::size_t>(k - 1);
      } else {
        index = ch == 'X' ? 0 : ch == 'Y' ? 1 : 2;
      }
      if (index >= n_) {
        --pos_;
        fail("a variable among the first " + std::to_string(n_));
      }
      return P::variable(n_, index);
    }
    fail("a number, u, v, a variable or '('");
  }

  std::string_view s_;
  std::size_t n_;
  std::size_t pos_ = 0;
};

}  // namespace

template <class E>
LaurentPoly<E> parse_poly(std::string_view text, std::size_t nvars) {
  return Parser<E>(text, nvars).run();
}

template <class E>
E parse_element(std::string_view text) {
  const auto p = parse_poly<E>(text, 0);
  return p.coefficient(ExpVec{});
}

template LaurentPoly<VElem> parse_poly<VElem>(std::string_view, std::size_t);
template LaurentPoly<RElem> parse_poly<RElem>(std::string_view, std::size_t);
template LaurentPoly<RatFun2> parse_poly<RatFun2>(std::string_view, std::size_t);
template VElem parse_element<VElem>(std::string_view);
template RElem parse_element<RElem>(std::string_view);
template RatFun2 parse_element<RatFun2>(std::string_view);

}  // namespace monodep
