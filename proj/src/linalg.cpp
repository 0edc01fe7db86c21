#include "dgq/linalg.hpp"

#include <stdexcept>
#include <utility>

namespace dgq {

RatMatrix RatMatrix::identity(Id n) {
  RatMatrix m(n, n);
  for (Id i = 0; i < n; ++i) m.at(i, i) = 1;
  return m;
}

bool RatMatrix::is_zero() const {
  for (const auto& x : data_)
    if (!x.is_zero()) return false;
  return true;
}

RatMatrix RatMatrix::transpose() const {
  RatMatrix t(cols_, rows_);
  for (Id i = 0; i < rows_; ++i)
    for (Id j = 0; j < cols_; ++j) t.at(j, i) = at(i, j);
  return t;
}

RatMatrix operator*(const RatMatrix& a, const RatMatrix& b) {
  if (a.cols_ != b.rows_) throw std::invalid_argument("RatMatrix: shape mismatch in product");
  RatMatrix c(a.rows_, b.cols_);
  for (Id i = 0; i < a.rows_; ++i)
    for (Id k = 0; k < a.cols_; ++k) {
      const Rational& x = a.at(i, k);
      if (x.is_zero()) continue;
      for (Id j = 0; j < b.cols_; ++j)
        if (!b.at(k, j).is_zero()) c.at(i, j) += x * b.at(k, j);
    }
  return c;
}

RatMatrix operator+(const RatMatrix& a, const RatMatrix& b) {
  if (a.rows_ != b.rows_ || a.cols_ != b.cols_) throw std::invalid_argument("RatMatrix: shape mismatch in sum");
  RatMatrix c = a;
  for (std::size_t i = 0; i < c.data_.size(); ++i) c.data_[i] += b.data_[i];
  return c;
}

std::vector<Id> row_reduce(RatMatrix& m) {
  std::vector<Id> pivots;
  Id row = 0;
  for (Id col = 0; col < m.cols() && row < m.rows(); ++col) {
    Id p = row;
    while (p < m.rows() && m.at(p, col).is_zero()) ++p;
    if (p == m.rows()) continue;
    if (p != row)
      for (Id j = 0; j < m.cols(); ++j) std::swap(m.at(p, j), m.at(row, j));
    const Rational inv = m.at(row, col).inverse();
    for (Id j = col; j < m.cols(); ++j) m.at(row, j) *= inv;
    for (Id i = 0; i < m.rows(); ++i) {
      if (i == row || m.at(i, col).is_zero()) continue;
      const Rational f = m.at(i, col);
      for (Id j = col; j < m.cols(); ++j)
        if (!m.at(row, j).is_zero()) m.at(i, j) -= f * m.at(row, j);
    }
    pivots.push_back(col);
    ++row;
  }
  return pivots;
}

Id rank(RatMatrix m) { return static_cast<Id>(row_reduce(m).size()); }

RatMatrix nullspace(const RatMatrix& m) {
  RatMatrix r = m;
  auto pivots = row_reduce(r);
  std::vector<bool> is_pivot(m.cols(), false);
  for (Id p : pivots) is_pivot[p] = true;
  std::vector<Id> free;
  for (Id j = 0; j < m.cols(); ++j)
    if (!is_pivot[j]) free.push_back(j);
  RatMatrix basis(m.cols(), static_cast<Id>(free.size()));
  for (std::size_t k = 0; k < free.size(); ++k) {
    basis.at(free[k], static_cast<Id>(k)) = 1;
    for (std::size_t i = 0; i < pivots.size(); ++i)
      basis.at(pivots[i], static_cast<Id>(k)) = -r.at(static_cast<Id>(i), free[k]);
  }
  return basis;
}

RatMatrix column_basis(const RatMatrix& m) {
  RatMatrix r = m;
  auto pivots = row_reduce(r);
  RatMatrix out(m.rows(), static_cast<Id>(pivots.size()));
  for (std::size_t k = 0; k < pivots.size(); ++k)
    for (Id i = 0; i < m.rows(); ++i) out.at(i, static_cast<Id>(k)) = m.at(i, pivots[k]);
  return out;
}

std::optional<RatMatrix> inverse(const RatMatrix& m) {
  if (m.rows() != m.cols()) return std::nullopt;
  const Id n = m.rows();
  RatMatrix aug(n, 2 * n);
  for (Id i = 0; i < n; ++i) {
    for (Id j = 0; j < n; ++j) aug.at(i, j) = m.at(i, j);
    aug.at(i, n + i) = 1;
  }
  auto pivots = row_reduce(aug);
  if (static_cast<Id>(pivots.size()) < n || (n > 0 && pivots[n - 1] != n - 1)) return std::nullopt;
  RatMatrix inv(n, n);
  for (Id i = 0; i < n; ++i)
    for (Id j = 0; j < n; ++j) inv.at(i, j) = aug.at(i, n + j);
  return inv;
}

std::optional<LinearSolution> solve(const RatMatrix& a, const std::vector<Rational>& b, const Rational& free_value) {
  if (static_cast<Id>(b.size()) != a.rows()) throw std::invalid_argument("solve: right-hand side size");
  const Id n = a.cols();
  RatMatrix aug(a.rows(), n + 1);
  for (Id i = 0; i < a.rows(); ++i) {
    for (Id j = 0; j < n; ++j) aug.at(i, j) = a.at(i, j);
    aug.at(i, n) = b[i];
  }
  auto pivots = row_reduce(aug);
  if (!pivots.empty() && pivots.back() == n) return std::nullopt;
  LinearSolution s;
  s.particular.assign(n, free_value);
  std::vector<bool> is_pivot(n, false);
  for (Id p : pivots) is_pivot[p] = true;
  s.nullity = n - static_cast<Id>(pivots.size());
  for (std::size_t i = 0; i < pivots.size(); ++i) {
    Rational v = aug.at(static_cast<Id>(i), n);
    for (Id j = 0; j < n; ++j)
      if (!is_pivot[j] && !aug.at(static_cast<Id>(i), j).is_zero()) v -= aug.at(static_cast<Id>(i), j) * free_value;
    s.particular[pivots[i]] = v;
  }
  return s;
}

}  // namespace dgq
