#pragma once

#include <cstdint>
#include <vector>

namespace qcs {

// Dense matrix over F_p with reduced entries. Primes stay small (they index
// sampling fields), so 32-bit residues with 64-bit intermediate products are
// exact.
class FpMat {
public:
  FpMat() : p_(2), rows_(0), cols_(0) {}
  FpMat(std::uint32_t p, int rows, int cols)
      : p_(p), rows_(rows), cols_(cols), a_(rows * cols, 0) {}

  std::uint32_t modulus() const { return p_; }
  int rows() const { return rows_; }
  int cols() const { return cols_; }

  std::uint32_t& at(int i, int j) { return a_[i * cols_ + j]; }
  std::uint32_t at(int i, int j) const { return a_[i * cols_ + j]; }

  void set(int i, int j, std::uint64_t value) { at(i, j) = value % p_; }

  bool operator==(const FpMat& o) const {
    return p_ == o.p_ && rows_ == o.rows_ && cols_ == o.cols_ && a_ == o.a_;
  }

  FpMat transpose() const;

  // y = A x over F_p.
  void apply(const std::uint32_t* x, std::uint32_t* y) const;

private:
  std::uint32_t p_;
  int rows_, cols_;
  std::vector<std::uint32_t> a_;
};

struct NullspaceResult {
  int nullity = 0;
  // Basis vectors of the null space, each of length cols().
  std::vector<std::vector<std::uint32_t>> basis;
};

// Kernel of A over F_p by Gaussian elimination.
NullspaceResult nullspace(const FpMat& a);

// Rank of A over F_p.
int fp_rank(FpMat a);

std::uint32_t fp_inverse(std::uint32_t x, std::uint32_t p);

}  // namespace qcs
