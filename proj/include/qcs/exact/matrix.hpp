#pragma once

#include "qcs/exact/numbers.hpp"

#include <initializer_list>
#include <vector>

namespace qcs {

// Dense exact matrix over Int or Rat.
template <typename T>
class Mat {
public:
  Mat() : rows_(0), cols_(0) {}
  Mat(int rows, int cols) : rows_(rows), cols_(cols), a_(rows * cols, T(0)) {}
  Mat(std::initializer_list<std::initializer_list<T>> rows);

  static Mat identity(int n);

  int rows() const { return rows_; }
  int cols() const { return cols_; }

  T& at(int i, int j) { return a_[i * cols_ + j]; }
  const T& at(int i, int j) const { return a_[i * cols_ + j]; }

  Mat transpose() const;
  Mat operator*(const Mat& o) const;
  Mat operator+(const Mat& o) const;
  bool operator==(const Mat& o) const {
    return rows_ == o.rows_ && cols_ == o.cols_ && a_ == o.a_;
  }
  bool operator!=(const Mat& o) const { return !(*this == o); }

  bool is_zero() const;

  std::vector<T> apply(const std::vector<T>& v) const;

private:
  int rows_, cols_;
  std::vector<T> a_;
};

using IMat = Mat<Int>;
using QMat = Mat<Rat>;

QMat to_rational(const IMat& a);
// Throws math_error when an entry is not an integer.
IMat to_integral(const QMat& a, const char* error_message);

// Exact inverse over the rationals; throws math_error("matrix not
// invertible") when singular.
QMat invert_integer_matrix(const IMat& a);

// Apply an integer matrix to a small exponent vector.
ExpVec apply_int(const IMat& a, const ExpVec& v);

// Exact solver for B e = rhs where B is m x n of full column rank n.
// Returns false when the system is inconsistent.
class ColumnSolver {
public:
  explicit ColumnSolver(const IMat& b);
  // Solves for a rational vector; false if inconsistent.
  bool solve(const ExpVec& rhs, std::vector<Rat>& out) const;
  // Solves and requires an integral solution; false otherwise.
  bool solve_integral(const ExpVec& rhs, ExpVec& out) const;
  int rank() const { return rank_; }

private:
  int m_, n_, rank_;
  QMat rref_;               // row-reduced [B]
  std::vector<int> pivot_;  // pivot column of each of the first rank_ rows
  std::vector<std::vector<Rat>> ops_;  // recorded row operations applied to rhs
};

}  // namespace qcs
