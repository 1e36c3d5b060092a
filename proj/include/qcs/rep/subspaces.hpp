#pragma once

#include "qcs/exact/primefield.hpp"

#include <cstdint>
#include <functional>
#include <optional>
#include <vector>

namespace qcs {

// Row space over F_p kept in reduced row-echelon form.
class FpRowSpace {
public:
  FpRowSpace(std::uint32_t p, int ambient_dim) : p_(p), d_(ambient_dim) {}

  int rank() const { return static_cast<int>(rows_.size()); }
  int ambient_dim() const { return d_; }
  std::uint32_t modulus() const { return p_; }
  const std::vector<std::vector<std::uint32_t>>& rows() const { return rows_; }
  const std::vector<int>& pivots() const { return pivots_; }

  // Reduce and insert; returns true when the rank grew.
  bool add_row(std::vector<std::uint32_t> v);

  bool contains(const std::vector<std::uint32_t>& v) const;

private:
  std::uint32_t p_;
  int d_;
  std::vector<std::vector<std::uint32_t>> rows_;  // RREF, pivots_ ascending
  std::vector<int> pivots_;
};

// Visits every r-dimensional subspace of F_p^d exactly once; the callback
// receives the canonical reduced-row-echelon basis (r rows of length d).
// Returning false from the callback stops the enumeration.
void for_each_subspace(
    int d, int r, std::uint32_t p,
    const std::function<bool(const std::vector<std::vector<std::uint32_t>>&)>& fn);

// Same, restricted to subspaces of dimension target_dim containing `base`.
// The visited basis holds target_dim rows: the base rows followed by lifted
// complement rows.
void for_each_subspace_containing(
    const FpRowSpace& base, int target_dim,
    const std::function<bool(const std::vector<std::vector<std::uint32_t>>&)>& fn);

// Iterator-style interface over canonical bases.
class SubspaceEnumerator {
public:
  SubspaceEnumerator(int d, int r, std::uint32_t p);
  // Returns the next canonical basis, or nullopt when exhausted.
  std::optional<std::vector<std::vector<std::uint32_t>>> next();

private:
  int d_, r_;
  std::uint32_t p_;
  bool done_;
  std::vector<int> pivots_;
  std::vector<std::pair<int, int>> free_pos_;
  std::vector<std::uint32_t> free_val_;
  bool advance_pivots();
  void reset_free();
  std::vector<std::vector<std::uint32_t>> materialize() const;
};

}  // namespace qcs
