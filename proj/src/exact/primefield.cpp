#include "qcs/exact/primefield.hpp"

#include "qcs/error.hpp"

namespace qcs {

FpMat FpMat::transpose() const {
  FpMat t(p_, cols_, rows_);
  for (int i = 0; i < rows_; ++i)
    for (int j = 0; j < cols_; ++j) t.at(j, i) = at(i, j);
  return t;
}

void FpMat::apply(const std::uint32_t* x, std::uint32_t* y) const {
  for (int i = 0; i < rows_; ++i) {
    std::uint64_t acc = 0;
    const std::uint32_t* row = a_.data() + i * cols_;
    for (int j = 0; j < cols_; ++j) acc += static_cast<std::uint64_t>(row[j]) * x[j];
    y[i] = acc % p_;
  }
}

std::uint32_t fp_inverse(std::uint32_t x, std::uint32_t p) {
  // Extended Euclid.
  std::int64_t a = x % p, b = p, u = 1, v = 0;
  while (a != 0) {
    std::int64_t q = b / a;
    b -= q * a;
    std::swap(a, b);
    v -= q * u;
    std::swap(u, v);
  }
  if (b != 1) throw math_error("element not invertible modulo p");
  std::int64_t r = v % static_cast<std::int64_t>(p);
  if (r < 0) r += p;
  return static_cast<std::uint32_t>(r);
}

NullspaceResult nullspace(const FpMat& a) {
  const std::uint32_t p = a.modulus();
  const int rows = a.rows(), cols = a.cols();
  FpMat w = a;
  std::vector<int> pivot_col;
  int row = 0;
  for (int col = 0; col < cols && row < rows; ++col) {
    int piv = -1;
    for (int i = row; i < rows; ++i)
      if (w.at(i, col) != 0) {
        piv = i;
        break;
      }
    if (piv < 0) continue;
    if (piv != row)
      for (int j = 0; j < cols; ++j) std::swap(w.at(piv, j), w.at(row, j));
    std::uint32_t inv = fp_inverse(w.at(row, col), p);
    for (int j = 0; j < cols; ++j)
      w.at(row, j) = static_cast<std::uint64_t>(w.at(row, j)) * inv % p;
    for (int i = 0; i < rows; ++i) {
      if (i == row) continue;
      std::uint32_t f = w.at(i, col);
      if (f == 0) continue;
      for (int j = 0; j < cols; ++j) {
        std::uint64_t t = w.at(i, j) + static_cast<std::uint64_t>(p - f) * w.at(row, j) % p;
        w.at(i, j) = t % p;
      }
    }
    pivot_col.push_back(col);
    ++row;
  }
  NullspaceResult res;
  std::vector<bool> is_pivot(cols, false);
  for (int c : pivot_col) is_pivot[c] = true;
  for (int free_col = 0; free_col < cols; ++free_col) {
    if (is_pivot[free_col]) continue;
    std::vector<std::uint32_t> v(cols, 0);
    v[free_col] = 1;
    for (int r = 0; r < static_cast<int>(pivot_col.size()); ++r) {
      std::uint32_t val = w.at(r, free_col);
      v[pivot_col[r]] = val == 0 ? 0 : p - val;
    }
    res.basis.push_back(std::move(v));
  }
  res.nullity = static_cast<int>(res.basis.size());
  return res;
}

int fp_rank(FpMat a) {
  const std::uint32_t p = a.modulus();
  const int rows = a.rows(), cols = a.cols();
  int rank = 0;
  for (int col = 0; col < cols && rank < rows; ++col) {
    int piv = -1;
    for (int i = rank; i < rows; ++i)
      if (a.at(i, col) != 0) {
        piv = i;
        break;
      }
    if (piv < 0) continue;
    if (piv != rank)
      for (int j = col; j < cols; ++j) std::swap(a.at(piv, j), a.at(rank, j));
    std::uint32_t inv = fp_inverse(a.at(rank, col), p);
    for (int j = col; j < cols; ++j)
      a.at(rank, j) = static_cast<std::uint64_t>(a.at(rank, j)) * inv % p;
    for (int i = rank + 1; i < rows; ++i) {
      std::uint32_t f = a.at(i, col);
      if (f == 0) continue;
      for (int j = col; j < cols; ++j) {
        std::uint64_t t = a.at(i, j) + static_cast<std::uint64_t>(p - f) * a.at(rank, j) % p;
        a.at(i, j) = t % p;
      }
    }
    ++rank;
  }
  return rank;
}

}  // namespace qcs
