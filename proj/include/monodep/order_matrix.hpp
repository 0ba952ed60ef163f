#pragma once

#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "monodep/quad_scalar.hpp"

namespace monodep {

/// Exponent vector of a (Laurent) monomial; entries may be negative.
using ExpVec = std::vector<Integer>;

ExpVec make_exp(std::initializer_list<long> e);
std::string to_string(const ExpVec& e);
/// Parses "1,0,-2". Throws std::invalid_argument.
ExpVec parse_expvec(std::string_view text);

/// Integer matrix used for monomial substitutions and scaled inverses.
class IntMatrix {
 public:
  IntMatrix() = default;
  IntMatrix(std::size_t rows, std::size_t cols) : rows_(rows), cols_(cols), a_(rows * cols) {}
  IntMatrix(std::initializer_list<std::initializer_list<long>> rows);

  static IntMatrix identity(std::size_t n);

  std::size_t rows() const { return rows_; }
  std::size_t cols() const { return cols_; }
  Integer& at(std::size_t i, std::size_t j) { return a_[i * cols_ + j]; }
  const Integer& at(std::size_t i, std::size_t j) const { return a_[i * cols_ + j]; }

  /// Matrix-vector product; throws std::invalid_argument on size mismatch.
  ExpVec apply(const ExpVec& e) const;
  friend IntMatrix operator*(const IntMatrix& a, const IntMatrix& b);
  friend bool operator==(const IntMatrix& a, const IntMatrix& b) = default;

  std::string to_string() const;

 private:
  std::size_t rows_ = 0;
  std::size_t cols_ = 0;
  std::vector<Integer> a_;
};

/// m x n matrix over Q(sqrt 2) defining the monomial preorder
/// X^e < X^f  iff  M e <_lex M f.
class OrderMatrix {
 public:
  OrderMatrix() = default;
  OrderMatrix(std::size_t rows, std::size_t cols) : rows_(rows), cols_(cols), a_(rows * cols) {}
  /// Throws std::invalid_argument on ragged or empty input.
  explicit OrderMatrix(const std::vector<std::vector<QuadScalar>>& rows);
  OrderMatrix(std::initializer_list<std::initializer_list<QuadScalar>> rows);
  explicit OrderMatrix(const IntMatrix& m);

  static OrderMatrix identity(std::size_t n);

  std::size_t rows() const { return rows_; }
  std::size_t cols() const { return cols_; }
  QuadScalar& at(std::size_t i, std::size_t j) { return a_[i * cols_ + j]; }
  const QuadScalar& at(std::size_t i, std::size_t j) const { return a_[i * cols_ + j]; }
  std::vector<QuadScalar> row(std::size_t i) const;

  friend bool operator==(const OrderMatrix& a, const OrderMatrix& b) = default;

  /// Text form "a,b;c,d" with entries as parse_quad literals.
  std::string to_string() const;

 private:
  std::size_t rows_ = 0;
  std::size_t cols_ = 0;
  std::vector<QuadScalar> a_;
};

/// Parses "1,1;1,0" or "1,0+1/1 s2". Throws std::invalid_argument.
OrderMatrix parse_matrix(std::string_view text);

struct OrderClass {
  bool is_rational = false;
  bool is_graded = false;
  bool is_total_order = false;
};

struct ScaledInverse {
  Integer k;
  IntMatrix L;
};

enum class Cmp { less, tie, greater };

/// Every column nonzero with positive first nonzero entry.
bool validate_matrix(const OrderMatrix& m);

/// Same preorder, all entries >= 0, obtained by adding nonnegative integer
/// multiples of earlier rows to later rows. Throws on invalid input.
OrderMatrix normalize_rows(const OrderMatrix& m);

/// Rank over Q(sqrt 2).
std::size_t rank(const OrderMatrix& m);

/// Total order iff no nonzero integer vector lies in the kernel, i.e. the
/// rational and sqrt2 parts stacked have rational rank n.
OrderClass classify(const OrderMatrix& m);

/// Lexicographic comparison of M e and M f.
Cmp compare_exponents(const OrderMatrix& m, const ExpVec& e, const ExpVec& f);

/// Rational order refining m: rows dependent on earlier rows are dropped and
/// unit rows appended greedily in index order until the rank is n. The
/// result is square. Throws on irrational or invalid input.
OrderMatrix refine_to_order(const OrderMatrix& m);

/// Normalises rows, then clears denominators row by row. Throws on irrational
/// or invalid input.
IntMatrix integerize(const OrderMatrix& m);

/// Least k > 0 with k M^{-1} integral, and L = k M^{-1}. Throws
/// std::invalid_argument on singular or non-square input.
ScaledInverse inverse_scaled(const IntMatrix& m);

/// When m defines a lexicographic order, the variables from most to least
/// significant; nothing otherwise.
std::optional<std::vector<std::size_t>> lex_permutation(const OrderMatrix& m);

/// Lex order with the given variable precedence (first = most significant).
OrderMatrix lex_matrix(const std::vector<std::size_t>& precedence);

/// When m is a preorder on two variables that is not a rational monomial
/// order, the single positive row (alpha, beta) defining the same preorder.
std::optional<std::pair<QuadScalar, QuadScalar>> single_row_reduction(const OrderMatrix& m);

}  // namespace monodep
