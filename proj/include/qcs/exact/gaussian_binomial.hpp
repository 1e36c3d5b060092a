#pragma once

#include "qcs/exact/qpoly.hpp"

namespace qcs {

// [n choose k]_q; evaluating at q = p counts k-dimensional subspaces of
// F_p^n. Returns the zero polynomial when k > n.
QPoly gaussian_binomial(int n, int k);

}  // namespace qcs
