#pragma once

#include "qcs/exact/matrix.hpp"
#include "qcs/exact/numbers.hpp"

#include <memory>

namespace qcs {

// Skew-symmetric bilinear form on the exponent lattice Z^m.
class SkewForm {
public:
  explicit SkewForm(IMat lambda);

  static std::shared_ptr<const SkewForm> zero(int m);

  int rank() const { return matrix_.rows(); }
  const IMat& matrix() const { return matrix_; }

  // g^T Lambda h; entries and exponents are small, so a 64-bit value is
  // checked-exact.
  long long value(const ExpVec& g, const ExpVec& h) const;

  bool operator==(const SkewForm& o) const { return matrix_ == o.matrix_; }

private:
  IMat matrix_;
};

using SkewFormPtr = std::shared_ptr<const SkewForm>;

}  // namespace qcs
