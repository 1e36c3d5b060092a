#include "qcs/torus/skew_form.hpp"

#include "qcs/error.hpp"

#include <limits>

namespace qcs {

SkewForm::SkewForm(IMat lambda) : matrix_(std::move(lambda)) {
  if (matrix_.rows() != matrix_.cols())
    throw math_error("skew form matrix must be square");
  for (int i = 0; i < matrix_.rows(); ++i)
    for (int j = 0; j < matrix_.cols(); ++j)
      if (matrix_.at(i, j) != -matrix_.at(j, i))
        throw math_error("form matrix is not skew-symmetric");
}

std::shared_ptr<const SkewForm> SkewForm::zero(int m) {
  return std::make_shared<SkewForm>(IMat(m, m));
}

long long SkewForm::value(const ExpVec& g, const ExpVec& h) const {
  if (static_cast<int>(g.size()) != rank() ||
      static_cast<int>(h.size()) != rank())
    throw math_error("rank mismatch");
  Int acc = 0;
  for (int i = 0; i < rank(); ++i) {
    if (g[i] == 0) continue;
    Int row = 0;
    for (int j = 0; j < rank(); ++j)
      if (h[j] != 0) row += matrix_.at(i, j) * h[j];
    acc += row * g[i];
  }
  if (acc > std::numeric_limits<long long>::max() / 4 ||
      acc < std::numeric_limits<long long>::min() / 4)
    throw math_error("form value out of range");
  return static_cast<long long>(acc);
}

}  // namespace qcs
