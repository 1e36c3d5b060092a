#pragma once

#include "qcs/engine/quiver.hpp"
#include "qcs/exact/matrix.hpp"
#include "qcs/exact/numbers.hpp"

namespace qcs {

// Euler form of an acyclic quiver on dimension vectors, in the right-module
// convention: <d,f> = sum_v d_v f_v - sum_{arrows i->j} d_j f_i.
class EulerForm {
public:
  explicit EulerForm(Quiver q);

  const Quiver& quiver() const { return q_; }

  long long value(const ExpVec& d, const ExpVec& f) const;

  // <d,f> - <f,d>; its matrix in the unit basis is the principal exchange
  // matrix.
  long long antisymmetrized(const ExpVec& d, const ExpVec& f) const;

  IMat antisymmetrized_matrix() const;

private:
  Quiver q_;
};

}  // namespace qcs
