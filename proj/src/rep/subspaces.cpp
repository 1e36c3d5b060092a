#include "qcs/rep/subspaces.hpp"

#include "qcs/error.hpp"

#include <algorithm>

namespace qcs {

bool FpRowSpace::add_row(std::vector<std::uint32_t> v) {
  // Reduce against existing rows.
  for (std::size_t r = 0; r < rows_.size(); ++r) {
    std::uint32_t c = v[pivots_[r]];
    if (c == 0) continue;
    const auto& row = rows_[r];
    for (int j = 0; j < d_; ++j)
      v[j] = (v[j] + static_cast<std::uint64_t>(p_ - c) * row[j]) % p_;
  }
  int piv = -1;
  for (int j = 0; j < d_; ++j)
    if (v[j] != 0) {
      piv = j;
      break;
    }
  if (piv < 0) return false;
  std::uint32_t inv = fp_inverse(v[piv], p_);
  for (int j = 0; j < d_; ++j)
    v[j] = static_cast<std::uint64_t>(v[j]) * inv % p_;
  // Back-substitute to keep RREF.
  for (std::size_t r = 0; r < rows_.size(); ++r) {
    std::uint32_t c = rows_[r][piv];
    if (c == 0) continue;
    for (int j = 0; j < d_; ++j)
      rows_[r][j] = (rows_[r][j] + static_cast<std::uint64_t>(p_ - c) * v[j]) % p_;
  }
  auto pos = std::upper_bound(pivots_.begin(), pivots_.end(), piv);
  std::size_t idx = pos - pivots_.begin();
  pivots_.insert(pos, piv);
  rows_.insert(rows_.begin() + idx, std::move(v));
  return true;
}

bool FpRowSpace::contains(const std::vector<std::uint32_t>& v) const {
  std::vector<std::uint32_t> w = v;
  for (std::size_t r = 0; r < rows_.size(); ++r) {
    std::uint32_t c = w[pivots_[r]];
    if (c == 0) continue;
    for (int j = 0; j < d_; ++j)
      w[j] = (w[j] + static_cast<std::uint64_t>(p_ - c) * rows_[r][j]) % p_;
  }
  return std::all_of(w.begin(), w.end(), [](std::uint32_t x) { return x == 0; });
}

SubspaceEnumerator::SubspaceEnumerator(int d, int r, std::uint32_t p)
    : d_(d), r_(r), p_(p), done_(r < 0 || r > d) {
  if (!done_) {
    pivots_.resize(r_);
    for (int i = 0; i < r_; ++i) pivots_[i] = i;
    reset_free();
  }
}

void SubspaceEnumerator::reset_free() {
  free_pos_.clear();
  std::vector<bool> is_pivot(d_, false);
  for (int c : pivots_) is_pivot[c] = true;
  for (int i = 0; i < r_; ++i)
    for (int j = pivots_[i] + 1; j < d_; ++j)
      if (!is_pivot[j]) free_pos_.emplace_back(i, j);
  free_val_.assign(free_pos_.size(), 0);
}

bool SubspaceEnumerator::advance_pivots() {
  // Next r-combination of {0..d-1} in lexicographic order.
  int i = r_ - 1;
  while (i >= 0 && pivots_[i] == d_ - r_ + i) --i;
  if (i < 0) return false;
  ++pivots_[i];
  for (int j = i + 1; j < r_; ++j) pivots_[j] = pivots_[j - 1] + 1;
  return true;
}

std::vector<std::vector<std::uint32_t>> SubspaceEnumerator::materialize() const {
  std::vector<std::vector<std::uint32_t>> rows(r_, std::vector<std::uint32_t>(d_, 0));
  for (int i = 0; i < r_; ++i) rows[i][pivots_[i]] = 1;
  for (std::size_t t = 0; t < free_pos_.size(); ++t)
    rows[free_pos_[t].first][free_pos_[t].second] = free_val_[t];
  return rows;
}

std::optional<std::vector<std::vector<std::uint32_t>>> SubspaceEnumerator::next() {
  if (done_) return std::nullopt;
  auto out = materialize();
  // Odometer over free entries, then over pivot combinations.
  std::size_t t = 0;
  while (t < free_val_.size() && free_val_[t] == p_ - 1) free_val_[t++] = 0;
  if (t < free_val_.size()) {
    ++free_val_[t];
  } else if (!advance_pivots()) {
    done_ = true;
  } else {
    reset_free();
  }
  return out;
}

void for_each_subspace(
    int d, int r, std::uint32_t p,
    const std::function<bool(const std::vector<std::vector<std::uint32_t>>&)>& fn) {
  SubspaceEnumerator en(d, r, p);
  while (auto basis = en.next())
    if (!fn(*basis)) return;
}

void for_each_subspace_containing(
    const FpRowSpace& base, int target_dim,
    const std::function<bool(const std::vector<std::vector<std::uint32_t>>&)>& fn) {
  const int d = base.ambient_dim();
  const int r0 = base.rank();
  const int extra = target_dim - r0;
  if (extra < 0 || target_dim > d) return;
  // Complement coordinates of the base pivots form a complement of the base
  // space, so subspaces containing it correspond to subspaces of the
  // quotient, enumerated in complement coordinates and lifted back.
  std::vector<int> comp;
  {
    std::vector<bool> is_pivot(d, false);
    for (int c : base.pivots()) is_pivot[c] = true;
    for (int j = 0; j < d; ++j)
      if (!is_pivot[j]) comp.push_back(j);
  }
  std::vector<std::vector<std::uint32_t>> out(target_dim,
                                              std::vector<std::uint32_t>(d, 0));
  for (int i = 0; i < r0; ++i) out[i] = base.rows()[i];
  SubspaceEnumerator en(static_cast<int>(comp.size()), extra, base.modulus());
  while (auto quo = en.next()) {
    for (int i = 0; i < extra; ++i) {
      auto& row = out[r0 + i];
      std::fill(row.begin(), row.end(), 0);
      for (std::size_t t = 0; t < comp.size(); ++t) row[comp[t]] = (*quo)[i][t];
    }
    if (!fn(out)) return;
  }
}

}  // namespace qcs
