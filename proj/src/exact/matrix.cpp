#include "qcs/exact/matrix.hpp"

#include "qcs/error.hpp"

namespace qcs {

template <typename T>
Mat<T>::Mat(std::initializer_list<std::initializer_list<T>> rows) {
  rows_ = static_cast<int>(rows.size());
  cols_ = rows_ ? static_cast<int>(rows.begin()->size()) : 0;
  a_.reserve(rows_ * cols_);
  for (const auto& r : rows) {
    if (static_cast<int>(r.size()) != cols_)
      throw math_error("ragged matrix initializer");
    for (const auto& x : r) a_.push_back(x);
  }
}

template <typename T>
Mat<T> Mat<T>::identity(int n) {
  Mat m(n, n);
  for (int i = 0; i < n; ++i) m.at(i, i) = T(1);
  return m;
}

template <typename T>
Mat<T> Mat<T>::transpose() const {
  Mat t(cols_, rows_);
  for (int i = 0; i < rows_; ++i)
    for (int j = 0; j < cols_; ++j) t.at(j, i) = at(i, j);
  return t;
}

template <typename T>
Mat<T> Mat<T>::operator*(const Mat& o) const {
  if (cols_ != o.rows_) throw math_error("matrix shape mismatch in product");
  Mat r(rows_, o.cols_);
  for (int i = 0; i < rows_; ++i)
    for (int k = 0; k < cols_; ++k) {
      const T& x = at(i, k);
      if (x == T(0)) continue;
      for (int j = 0; j < o.cols_; ++j) r.at(i, j) += x * o.at(k, j);
    }
  return r;
}

template <typename T>
Mat<T> Mat<T>::operator+(const Mat& o) const {
  if (rows_ != o.rows_ || cols_ != o.cols_)
    throw math_error("matrix shape mismatch in sum");
  Mat r(rows_, cols_);
  for (std::size_t i = 0; i < a_.size(); ++i) r.a_[i] = a_[i] + o.a_[i];
  return r;
}

template <typename T>
bool Mat<T>::is_zero() const {
  for (const auto& x : a_)
    if (x != T(0)) return false;
  return true;
}

template <typename T>
std::vector<T> Mat<T>::apply(const std::vector<T>& v) const {
  if (static_cast<int>(v.size()) != cols_)
    throw math_error("matrix shape mismatch in apply");
  std::vector<T> r(rows_, T(0));
  for (int i = 0; i < rows_; ++i)
    for (int j = 0; j < cols_; ++j) r[i] += at(i, j) * v[j];
  return r;
}

template class Mat<Int>;
template class Mat<Rat>;

QMat to_rational(const IMat& a) {
  QMat r(a.rows(), a.cols());
  for (int i = 0; i < a.rows(); ++i)
    for (int j = 0; j < a.cols(); ++j) r.at(i, j) = Rat(a.at(i, j));
  return r;
}

IMat to_integral(const QMat& a, const char* error_message) {
  IMat r(a.rows(), a.cols());
  for (int i = 0; i < a.rows(); ++i)
    for (int j = 0; j < a.cols(); ++j) {
      const Rat& x = a.at(i, j);
      if (denominator(x) != 1) throw math_error(error_message);
      r.at(i, j) = numerator(x);
    }
  return r;
}

QMat invert_integer_matrix(const IMat& a) {
  if (a.rows() != a.cols()) throw math_error("matrix not invertible");
  const int n = a.rows();
  QMat work = to_rational(a);
  QMat inv = QMat::identity(n);
  for (int col = 0; col < n; ++col) {
    int pivot = -1;
    for (int i = col; i < n; ++i)
      if (work.at(i, col) != 0) {
        pivot = i;
        break;
      }
    if (pivot < 0) throw math_error("matrix not invertible");
    if (pivot != col)
      for (int j = 0; j < n; ++j) {
        std::swap(work.at(pivot, j), work.at(col, j));
        std::swap(inv.at(pivot, j), inv.at(col, j));
      }
    Rat d = work.at(col, col);
    for (int j = 0; j < n; ++j) {
      work.at(col, j) /= d;
      inv.at(col, j) /= d;
    }
    for (int i = 0; i < n; ++i) {
      if (i == col) continue;
      Rat f = work.at(i, col);
      if (f == 0) continue;
      for (int j = 0; j < n; ++j) {
        work.at(i, j) -= f * work.at(col, j);
        inv.at(i, j) -= f * inv.at(col, j);
      }
    }
  }
  return inv;
}

ExpVec apply_int(const IMat& a, const ExpVec& v) {
  if (static_cast<int>(v.size()) != a.cols())
    throw math_error("matrix shape mismatch in apply");
  ExpVec r(a.rows(), 0);
  for (int i = 0; i < a.rows(); ++i) {
    Int acc = 0;
    for (int j = 0; j < a.cols(); ++j) acc += a.at(i, j) * v[j];
    r[i] = static_cast<int>(acc);
  }
  return r;
}

ColumnSolver::ColumnSolver(const IMat& b) : m_(b.rows()), n_(b.cols()) {
  rref_ = to_rational(b);
  QMat e = QMat::identity(m_);
  int row = 0;
  pivot_.clear();
  for (int col = 0; col < n_ && row < m_; ++col) {
    int p = -1;
    for (int i = row; i < m_; ++i)
      if (rref_.at(i, col) != 0) {
        p = i;
        break;
      }
    if (p < 0) continue;
    if (p != row)
      for (int j = 0; j < m_; ++j) std::swap(e.at(p, j), e.at(row, j));
    for (int j = 0; j < n_; ++j) std::swap(rref_.at(p, j), rref_.at(row, j));
    Rat d = rref_.at(row, col);
    for (int j = 0; j < n_; ++j) rref_.at(row, j) /= d;
    for (int j = 0; j < m_; ++j) e.at(row, j) /= d;
    for (int i = 0; i < m_; ++i) {
      if (i == row) continue;
      Rat f = rref_.at(i, col);
      if (f == 0) continue;
      for (int j = 0; j < n_; ++j) rref_.at(i, j) -= f * rref_.at(row, j);
      for (int j = 0; j < m_; ++j) e.at(i, j) -= f * e.at(row, j);
    }
    pivot_.push_back(col);
    ++row;
  }
  rank_ = row;
  ops_.assign(m_, std::vector<Rat>(m_));
  for (int i = 0; i < m_; ++i)
    for (int j = 0; j < m_; ++j) ops_[i][j] = e.at(i, j);
}

bool ColumnSolver::solve(const ExpVec& rhs, std::vector<Rat>& out) const {
  if (static_cast<int>(rhs.size()) != m_) throw math_error("rhs length mismatch");
  std::vector<Rat> r(m_, Rat(0));
  for (int i = 0; i < m_; ++i) {
    Rat acc = 0;
    for (int j = 0; j < m_; ++j)
      if (rhs[j] != 0) acc += ops_[i][j] * rhs[j];
    r[i] = acc;
  }
  for (int i = rank_; i < m_; ++i)
    if (r[i] != 0) return false;
  out.assign(n_, Rat(0));
  for (int i = 0; i < rank_; ++i) out[pivot_[i]] = r[i];
  return true;
}

bool ColumnSolver::solve_integral(const ExpVec& rhs, ExpVec& out) const {
  std::vector<Rat> sol;
  if (!solve(rhs, sol)) return false;
  out.assign(n_, 0);
  for (int j = 0; j < n_; ++j) {
    if (denominator(sol[j]) != 1) return false;
    out[j] = static_cast<int>(numerator(sol[j]));
  }
  return true;
}

}  // namespace qcs
