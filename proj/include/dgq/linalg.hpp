#pragma once

#include <optional>
#include <vector>

#include "dgq/rational.hpp"
#include "dgq/report.hpp"

namespace dgq {

// Dense exact matrix, row-major.
class RatMatrix {
 public:
  RatMatrix() = default;
  RatMatrix(Id rows, Id cols) : rows_(rows), cols_(cols), data_(static_cast<std::size_t>(rows) * cols, Rational(0)) {}
  static RatMatrix identity(Id n);

  Id rows() const { return rows_; }
  Id cols() const { return cols_; }
  Rational& at(Id i, Id j) { return data_[static_cast<std::size_t>(i) * cols_ + j]; }
  const Rational& at(Id i, Id j) const { return data_[static_cast<std::size_t>(i) * cols_ + j]; }
  bool is_zero() const;

  RatMatrix transpose() const;
  friend RatMatrix operator*(const RatMatrix& a, const RatMatrix& b);
  friend RatMatrix operator+(const RatMatrix& a, const RatMatrix& b);
  friend bool operator==(const RatMatrix&, const RatMatrix&) = default;

 private:
  Id rows_ = 0, cols_ = 0;
  std::vector<Rational> data_;
};

// Reduced row echelon form in place; returns the pivot columns.
std::vector<Id> row_reduce(RatMatrix& m);
Id rank(RatMatrix m);
// Basis of {v : m v = 0} as columns.
RatMatrix nullspace(const RatMatrix& m);
// Basis of the column space, as columns taken from m.
RatMatrix column_basis(const RatMatrix& m);
std::optional<RatMatrix> inverse(const RatMatrix& m);

struct LinearSolution {
  std::vector<Rational> particular;  // free variables set to `free_value`
  Id nullity = 0;
};
// Solves a x = b; nullopt when inconsistent.
std::optional<LinearSolution> solve(const RatMatrix& a, const std::vector<Rational>& b,
                                    const Rational& free_value = Rational(0));

}  // namespace dgq
