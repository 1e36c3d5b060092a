#pragma once

#include "qcs/exact/numbers.hpp"
#include "qcs/exact/qpoly.hpp"

#include <cstdint>
#include <utility>
#include <vector>

namespace qcs {

using CountSample = std::pair<std::uint32_t, Int>;  // (prime, count)

// Fits a rational polynomial of degree <= degree_bound through the first
// degree_bound+1 samples (exact Lagrange form), then demands exact agreement
// on every remaining sample and integrality of all coefficients.
//
// Throws math_error("not polynomial-count (integrality)") or
// math_error("not polynomial-count (consistency)").
QPoly interpolate_counting_poly(const std::vector<CountSample>& samples,
                                int degree_bound);

// Same fit, but reports failure instead of throwing; used by refutation runs.
struct FitResult {
  bool ok = false;
  QPoly poly;              // valid when ok
  std::string failure;     // "integrality" or "consistency"
  std::uint32_t bad_prime = 0;  // first sample that broke consistency
};
FitResult try_interpolate(const std::vector<CountSample>& samples,
                          int degree_bound);

}  // namespace qcs
