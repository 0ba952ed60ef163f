#include "monodep/rational.hpp"

#include <stdexcept>

namespace monodep {

Rational make_rational(long num, long den) {
  if (den == 0) throw std::domain_error("rational with zero denominator");
  Rational r(num, den);
  r.canonicalize();
  return r;
}

Rational parse_rational(std::string_view text) {
  std::string s(text);
  auto bad = [&] { return std::invalid_argument("malformed rational '" + s + "'"); };
  if (s.empty()) throw bad();
  std::size_t pos = 0;
  if (s[pos] == '+' || s[pos] == '-') ++pos;
  std::size_t slash = s.find('/');
  auto digits = [&](std::size_t from, std::size_t to) {
    if (from >= to) return false;
    for (std::size_t i = from; i < to; ++i)
      if (s[i] < '0' || s[i] > '9') return false;
    return true;
  };
  if (slash == std::string::npos) {
    if (!digits(pos, s.size())) throw bad();
    return Rational(Integer(s.substr(pos)) * (s[0] == '-' ? -1 : 1));
  }
  if (!digits(pos, slash) || !digits(slash + 1, s.size())) throw bad();
  Integer num(s.substr(pos, slash - pos));
  Integer den(s.substr(slash + 1));
  if (den == 0) throw std::domain_error("rational with zero denominator");
  if (s[0] == '-') num = -num;
  Rational r(num, den);
  r.canonicalize();
  return r;
}

std::string to_string(const Integer& x) { return x.get_str(); }

std::string to_string(const Rational& x) {
  if (x.get_den() == 1) return x.get_num().get_str();
  return x.get_num().get_str() + "/" + x.get_den().get_str();
}

Integer floor(const Rational& x) {
  Integer q;
  mpz_fdiv_q(q.get_mpz_t(), x.get_num_mpz_t(), x.get_den_mpz_t());
  return q;
}

Integer ceil(const Rational& x) {
  Integer q;
  mpz_cdiv_q(q.get_mpz_t(), x.get_num_mpz_t(), x.get_den_mpz_t());
  return q;
}

Integer lcm(const Integer& a, const Integer& b) {
  Integer r;
  mpz_lcm(r.get_mpz_t(), a.get_mpz_t(), b.get_mpz_t());
  return r;
}

Integer gcd(const Integer& a, const Integer& b) {
  Integer r;
  mpz_gcd(r.get_mpz_t(), a.get_mpz_t(), b.get_mpz_t());
  return r;
}

long to_long(const Integer& x) {
  if (!x.fits_slong_p()) throw std::overflow_error("integer " + x.get_str() + " exceeds machine range");
  return x.get_si();
}

}  // namespace monodep
