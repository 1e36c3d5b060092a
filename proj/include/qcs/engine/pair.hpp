#pragma once

#include "qcs/engine/quiver.hpp"
#include "qcs/exact/matrix.hpp"
#include "qcs/torus/skew_form.hpp"

namespace qcs {

// Unitally compatible pair: Lambda (m x m skew) and B (m x n) with
// Lambda * (-B) = [I_n; 0].
struct CompatiblePair {
  SkewFormPtr lambda;
  IMat b;  // m x n

  int m() const { return lambda->rank(); }
  int n() const { return b.cols(); }

  IMat principal_b() const;  // upper n x n block
};

// Validates unital compatibility; throws math_error("pair not unitally
// compatible").
CompatiblePair make_pair(IMat lambda, IMat b);

// Lambda = (B^circ)^{-T} from a skew extended exchange matrix. Throws
// "extended matrix singular", "lambda not integral", or the compatibility
// error.
CompatiblePair lambda_from_extended(const IMat& b_circ, int n);

// Builds the pair from a quiver file (lambda auto or explicit rows).
CompatiblePair pair_from_quiver(const QuiverFile& qf);

}  // namespace qcs
