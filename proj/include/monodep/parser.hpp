#pragma once

#include <stdexcept>
#include <string>
#include <string_view>
#include <vector>

#include "monodep/laurent_poly.hpp"
#include "monodep/rings.hpp"

namespace monodep {

/// Syntax error with the byte offset where parsing stopped.
class ParseError : public std::invalid_argument {
 public:
  ParseError(std::size_t position, const std::string& expected, const std::string& found);
  std::size_t position() const { return position_; }

 private:
  std::size_t position_;
};

/// A well-formed element that is not in the requested ring.
class MembershipError : public std::domain_error {
 public:
  using std::domain_error::domain_error;
};

/// Ring contexts understood by the text front end.
enum class RingKind { R, V, W, MonoidQ, MonoidQu };

/// "R", "V", "W", "monoid-Q", "monoid-Qu"; throws std::invalid_argument.
RingKind parse_ring_kind(std::string_view text);
const char* to_string(RingKind k);

/// Polynomial text: sums of products of rationals, u, v, v^(quad), v^k and
/// the variables X, Y, Z or X1..Xn, with + - * / ^ and parentheses. Division
/// is allowed by monomials only; ^ takes an integer, written k or (k).
/// Instantiated for VElem, RElem and RatFun2. In the VElem context u is
/// rejected; in the RatFun2 context v-exponents must be integers.
template <class E>
LaurentPoly<E> parse_poly(std::string_view text, std::size_t nvars);

/// A single element (no variables).
template <class E>
E parse_element(std::string_view text);

/// Splits at commas outside parentheses; surrounding spaces are trimmed.
std::vector<std::string> split_top_level(std::string_view text, char sep = ',');

}  // namespace monodep
