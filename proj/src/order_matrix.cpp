#include "monodep/order_matrix.hpp"

#include <cctype>
#include <stdexcept>

namespace monodep {

ExpVec make_exp(std::initializer_list<long> e) {
  ExpVec out;
  out.reserve(e.size());
  for (long x : e) out.emplace_back(x);
  return out;
}

std::string to_string(const ExpVec& e) {
  std::string out;
  for (std::size_t i = 0; i < e.size(); ++i) {
    if (i) out += ",";
    out += e[i].get_str();
  }
  return out;
}

namespace {

std::string trim(std::string_view s) {
  std::size_t b = 0, e = s.size();
  while (b < e && std::isspace(static_cast<unsigned char>(s[b]))) ++b;
  while (e > b && std::isspace(static_cast<unsigned char>(s[e - 1]))) --e;
  return std::string(s.substr(b, e - b));
}

std::vector<std::string> split(std::string_view s, char sep) {
  std::vector<std::string> out;
  std::size_t start = 0;
  for (std::size_t i = 0; i <= s.size(); ++i) {
    if (i == s.size() || s[i] == sep) {
      out.push_back(trim(s.substr(start, i - start)));
      start = i + 1;
    }
  }
  return out;
}

}  // namespace

ExpVec parse_expvec(std::string_view text) {
  ExpVec out;
  for (const auto& part : split(text, ',')) {
    Rational r = parse_rational(part);
    if (r.get_den() != 1) throw std::invalid_argument("exponent '" + part + "' is not an integer");
    out.push_back(r.get_num());
  }
  return out;
}

IntMatrix::IntMatrix(std::initializer_list<std::initializer_list<long>> rows) {
  rows_ = rows.size();
  cols_ = rows_ ? rows.begin()->size() : 0;
  for (const auto& r : rows) {
    if (r.size() != cols_) throw std::invalid_argument("ragged integer matrix");
    for (long x : r) a_.emplace_back(x);
  }
}

IntMatrix IntMatrix::identity(std::size_t n) {
  IntMatrix m(n, n);
  for (std::size_t i = 0; i < n; ++i) m.at(i, i) = 1;
  return m;
}

ExpVec IntMatrix::apply(const ExpVec& e) const {
  if (e.size() != cols_) throw std::invalid_argument("matrix-vector size mismatch");
  ExpVec out(rows_, Integer(0));
  for (std::size_t i = 0; i < rows_; ++i)
    for (std::size_t j = 0; j < cols_; ++j) out[i] += at(i, j) * e[j];
  return out;
}

IntMatrix operator*(const IntMatrix& a, const IntMatrix& b) {
  if (a.cols_ != b.rows_) throw std::invalid_argument("matrix product size mismatch");
  IntMatrix c(a.rows_, b.cols_);
  for (std::size_t i = 0; i < a.rows_; ++i)
    for (std::size_t k = 0; k < a.cols_; ++k)
      for (std::size_t j = 0; j < b.cols_; ++j) c.at(i, j) += a.at(i, k) * b.at(k, j);
  return c;
}

std::string IntMatrix::to_string() const {
  std::string out;
  for (std::size_t i = 0; i < rows_; ++i) {
    if (i) out += ";";
    for (std::size_t j = 0; j < cols_; ++j) {
      if (j) out += ",";
      out += at(i, j).get_str();
    }
  }
  return out;
}

OrderMatrix::OrderMatrix(const std::vector<std::vector<QuadScalar>>& rows) {
  if (rows.empty() || rows.front().empty()) throw std::invalid_argument("empty order matrix");
  rows_ = rows.size();
  cols_ = rows.front().size();
  for (const auto& r : rows) {
    if (r.size() != cols_) throw std::invalid_argument("ragged order matrix");
    a_.insert(a_.end(), r.begin(), r.end());
  }
}

OrderMatrix::OrderMatrix(std::initializer_list<std::initializer_list<QuadScalar>> rows)
    : OrderMatrix([&] {
        std::vector<std::vector<QuadScalar>> v;
        for (const auto& r : rows) v.emplace_back(r);
        return v;
      }()) {}

OrderMatrix::OrderMatrix(const IntMatrix& m) : rows_(m.rows()), cols_(m.cols()) {
  a_.reserve(rows_ * cols_);
  for (std::size_t i = 0; i < rows_; ++i)
    for (std::size_t j = 0; j < cols_; ++j) a_.emplace_back(Rational(m.at(i, j)));
}

OrderMatrix OrderMatrix::identity(std::size_t n) { return OrderMatrix(IntMatrix::identity(n)); }

std::vector<QuadScalar> OrderMatrix::row(std::size_t i) const {
  return {a_.begin() + static_cast<std::ptrdiff_t>(i * cols_),
          a_.begin() + static_cast<std::ptrdiff_t>((i + 1) * cols_)};
}

std::string OrderMatrix::to_string() const {
  std::string out;
  for (std::size_t i = 0; i < rows_; ++i) {
    if (i) out += ";";
    for (std::size_t j = 0; j < cols_; ++j) {
      if (j) out += ",";
      out += at(i, j).to_string();
    }
  }
  return out;
}

OrderMatrix parse_matrix(std::string_view text) {
  std::vector<std::vector<QuadScalar>> rows;
  for (const auto& r : split(text, ';')) {
    std::vector<QuadScalar> row;
    for (const auto& entry : split(r, ',')) row.push_back(parse_quad(entry));
    rows.push_back(std::move(row));
  }
  return OrderMatrix(rows);
}

bool validate_matrix(const OrderMatrix& m) {
  for (std::size_t j = 0; j < m.cols(); ++j) {
    int first = 0;
    for (std::size_t i = 0; i < m.rows() && first == 0; ++i) first = m.at(i, j).sign();
    if (first <= 0) return false;
  }
  return true;
}

OrderMatrix normalize_rows(const OrderMatrix& m) {
  if (!validate_matrix(m)) throw std::invalid_argument("normalize_rows: invalid order matrix");
  OrderMatrix out = m;
  for (std::size_t i = 1; i < out.rows(); ++i) {
    for (std::size_t j = 0; j < out.cols(); ++j) {
      if (out.at(i, j).sign() >= 0) continue;
      // Earlier rows are already nonnegative; the first row with a nonzero
      // entry in column j has a positive one.
      std::size_t p = 0;
      while (out.at(p, j).is_zero()) ++p;
      const Integer t = round_quad(-out.at(i, j) / out.at(p, j), Rounding::ceil);
      const QuadScalar tq{Rational(t)};
      for (std::size_t c = 0; c < out.cols(); ++c) out.at(i, c) += tq * out.at(p, c);
    }
  }
  return out;
}

namespace {

template <class F>
std::size_t rank_by_elimination(std::vector<std::vector<F>> a, std::size_t cols) {
  std::size_t r = 0;
  for (std::size_t c = 0; c < cols && r < a.size(); ++c) {
    std::size_t piv = r;
    while (piv < a.size() && a[piv][c] == F(0)) ++piv;
    if (piv == a.size()) continue;
    std::swap(a[piv], a[r]);
    for (std::size_t i = r + 1; i < a.size(); ++i) {
      if (a[i][c] == F(0)) continue;
      F f = a[i][c] / a[r][c];
      for (std::size_t k = c; k < cols; ++k) a[i][k] -= f * a[r][k];
    }
    ++r;
  }
  return r;
}

std::vector<std::vector<QuadScalar>> rows_of(const OrderMatrix& m) {
  std::vector<std::vector<QuadScalar>> a;
  for (std::size_t i = 0; i < m.rows(); ++i) a.push_back(m.row(i));
  return a;
}

}  // namespace

std::size_t rank(const OrderMatrix& m) { return rank_by_elimination(rows_of(m), m.cols()); }

OrderClass classify(const OrderMatrix& m) {
  OrderClass c;
  c.is_rational = true;
  for (std::size_t i = 0; i < m.rows(); ++i)
    for (std::size_t j = 0; j < m.cols(); ++j)
      if (!m.at(i, j).is_rational()) c.is_rational = false;
  c.is_graded = true;
  for (std::size_t j = 0; j < m.cols(); ++j)
    if (m.at(0, j).sign() <= 0) c.is_graded = false;
  std::vector<std::vector<Rational>> stacked;
  for (std::size_t i = 0; i < m.rows(); ++i) {
    std::vector<Rational> r, s;
    for (std::size_t j = 0; j < m.cols(); ++j) {
      r.push_back(m.at(i, j).rat());
      s.push_back(m.at(i, j).irr());
    }
    stacked.push_back(std::move(r));
    stacked.push_back(std::move(s));
  }
  c.is_total_order = rank_by_elimination(std::move(stacked), m.cols()) == m.cols();
  return c;
}

Cmp compare_exponents(const OrderMatrix& m, const ExpVec& e, const ExpVec& f) {
  if (e.size() != m.cols() || f.size() != m.cols())
    throw std::invalid_argument("compare_exponents: dimension mismatch");
  std::vector<Rational> d(m.cols());
  bool all_zero = true;
  for (std::size_t j = 0; j < m.cols(); ++j) {
    d[j] = Rational(e[j] - f[j]);
    if (sgn(d[j]) != 0) all_zero = false;
  }
  if (all_zero) return Cmp::tie;
  for (std::size_t i = 0; i < m.rows(); ++i) {
    Rational r(0), s(0);
    for (std::size_t j = 0; j < m.cols(); ++j) {
      if (sgn(d[j]) == 0) continue;
      r += m.at(i, j).rat() * d[j];
      s += m.at(i, j).irr() * d[j];
    }
    const int sg = QuadScalar(r, s).sign();
    if (sg < 0) return Cmp::less;
    if (sg > 0) return Cmp::greater;
  }
  return Cmp::tie;
}

OrderMatrix refine_to_order(const OrderMatrix& m) {
  if (!validate_matrix(m)) throw std::invalid_argument("refine_to_order: invalid order matrix");
  if (!classify(m).is_rational) throw std::invalid_argument("refine_to_order: irrational matrix");
  const std::size_t n = m.cols();
  std::vector<std::vector<QuadScalar>> kept;
  auto try_add = [&](const std::vector<QuadScalar>& row) {
    auto candidate = kept;
    candidate.push_back(row);
    if (rank_by_elimination(candidate, n) == candidate.size()) kept = std::move(candidate);
  };
  for (std::size_t i = 0; i < m.rows() && kept.size() < n; ++i) try_add(m.row(i));
  for (std::size_t j = 0; j < n && kept.size() < n; ++j) {
    std::vector<QuadScalar> unit(n, QuadScalar(0));
    unit[j] = 1;
    try_add(unit);
  }
  return OrderMatrix(kept);
}

IntMatrix integerize(const OrderMatrix& m) {
  if (!classify(m).is_rational) throw std::invalid_argument("integerize: irrational matrix");
  const OrderMatrix nm = normalize_rows(m);
  IntMatrix out(nm.rows(), nm.cols());
  for (std::size_t i = 0; i < nm.rows(); ++i) {
    Integer l(1);
    for (std::size_t j = 0; j < nm.cols(); ++j) l = lcm(l, nm.at(i, j).rat().get_den());
    for (std::size_t j = 0; j < nm.cols(); ++j) {
      Rational x = nm.at(i, j).rat() * l;
      out.at(i, j) = x.get_num();
    }
  }
  return out;
}

ScaledInverse inverse_scaled(const IntMatrix& m) {
  const std::size_t n = m.rows();
  if (n == 0 || m.cols() != n) throw std::invalid_argument("inverse_scaled: matrix must be square");
  // Gauss-Jordan on [M | I] over Q.
  std::vector<std::vector<Rational>> a(n, std::vector<Rational>(2 * n, Rational(0)));
  for (std::size_t i = 0; i < n; ++i) {
    for (std::size_t j = 0; j < n; ++j) a[i][j] = Rational(m.at(i, j));
    a[i][n + i] = 1;
  }
  for (std::size_t c = 0; c < n; ++c) {
    std::size_t piv = c;
    while (piv < n && sgn(a[piv][c]) == 0) ++piv;
    if (piv == n) throw std::invalid_argument("inverse_scaled: singular matrix");
    std::swap(a[piv], a[c]);
    const Rational inv = 1 / a[c][c];
    for (auto& x : a[c]) x *= inv;
    for (std::size_t i = 0; i < n; ++i) {
      if (i == c || sgn(a[i][c]) == 0) continue;
      const Rational f = a[i][c];
      for (std::size_t k = 0; k < 2 * n; ++k) a[i][k] -= f * a[c][k];
    }
  }
  Integer k(1);
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = 0; j < n; ++j) k = lcm(k, a[i][n + j].get_den());
  ScaledInverse out{k, IntMatrix(n, n)};
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = 0; j < n; ++j) {
      Rational x = a[i][n + j] * k;
      out.L.at(i, j) = x.get_num();
    }
  return out;
}

std::optional<std::vector<std::size_t>> lex_permutation(const OrderMatrix& m) {
  if (!validate_matrix(m)) return std::nullopt;
  std::vector<bool> decided(m.cols(), false);
  std::vector<std::size_t> order;
  for (std::size_t i = 0; i < m.rows() && order.size() < m.cols(); ++i) {
    std::size_t nonzero = 0, col = 0;
    for (std::size_t j = 0; j < m.cols(); ++j) {
      if (decided[j] || m.at(i, j).is_zero()) continue;
      ++nonzero;
      col = j;
    }
    if (nonzero == 0) continue;
    if (nonzero > 1 || m.at(i, col).sign() < 0) return std::nullopt;
    decided[col] = true;
    order.push_back(col);
  }
  if (order.size() != m.cols()) return std::nullopt;
  return order;
}

OrderMatrix lex_matrix(const std::vector<std::size_t>& precedence) {
  const std::size_t n = precedence.size();
  OrderMatrix m(n, n);
  for (std::size_t i = 0; i < n; ++i) m.at(i, precedence[i]) = 1;
  return m;
}

std::optional<std::pair<QuadScalar, QuadScalar>> single_row_reduction(const OrderMatrix& m) {
  if (m.cols() != 2 || !validate_matrix(m)) return std::nullopt;
  std::size_t r = 0;
  while (r < m.rows() && m.at(r, 0).is_zero() && m.at(r, 1).is_zero()) ++r;
  const QuadScalar& alpha = m.at(r, 0);
  const QuadScalar& beta = m.at(r, 1);
  // A zero entry in the first decisive row makes the preorder lexicographic.
  if (alpha.sign() <= 0 || beta.sign() <= 0) return std::nullopt;
  if (!(beta / alpha).is_rational()) return std::make_pair(alpha, beta);
  // Rational direction: ties lie on the line through (beta, -alpha). If a later
  // row separates it, the preorder is a rational order.
  for (std::size_t i = r + 1; i < m.rows(); ++i)
    if (!(m.at(i, 0) * beta - m.at(i, 1) * alpha).is_zero()) return std::nullopt;
  return std::make_pair(alpha, beta);
}

}  // namespace monodep
