#pragma once

#include "qcs/engine/seed.hpp"
#include "qcs/torus/torus_element.hpp"

#include <map>

namespace qcs {

// Quantum F-polynomial: finite map from nonnegative e in Z^n to Laurent
// coefficients, constant term 1.
struct FPoly {
  std::map<ExpVec, Laurent> terms;

  bool operator==(const FPoly& o) const { return terms == o.terms; }
  bool operator!=(const FPoly& o) const { return !(*this == o); }

  Laurent coeff(const ExpVec& e) const;
  FPoly specialize_v1() const;
};

// Splits a cluster-monomial expansion X into (g-vector, F-polynomial) with
// X = F|_{y^e -> X^{B e}} X^{g}. The rebuild is checked term by term.
// Throws math_error("not a cluster-monomial expansion") when a support
// offset is not of the form B e with e nonnegative integral.
std::pair<ExpVec, FPoly> extract_g_and_f(const TorusElement& x,
                                         const IMat& b_matrix,
                                         const ColumnSolver& solver);
std::pair<ExpVec, FPoly> extract_g_and_f(const TorusElement& x,
                                         const IMat& b_matrix);

// The unique componentwise-maximal support element of F; throws
// math_error("F support not an interval under componentwise order") when no
// support element dominates every other.
ExpVec dim_vector_from_f(const FPoly& f);

// Rebuilds sum_e F_e X^{B e} * X^{g} in the ambient torus of x.
TorusElement rebuild_from_g_and_f(const SkewFormPtr& form, const IMat& b_matrix,
                                  const ExpVec& g, const FPoly& f);

}  // namespace qcs
