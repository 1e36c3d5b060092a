#pragma once

#include "qcs/exact/numbers.hpp"
#include "qcs/rep/rep.hpp"

namespace qcs {

inline constexpr long long kDefaultCountCeiling = 100000000;  // 1e8 branch tuples

// Number of subrepresentation tuples of class e: (U_v) with dim U_v = e_v and
// M_a(U_j) included in U_i for every arrow a: i->j. Out-of-range e gives 0.
//
// Vertices are processed in reverse topological order of the quiver with
// arrow-image pruning; vertices whose choice constrains nothing downstream
// are counted by a Gaussian binomial instead of enumerated, and the dual
// orientation (reversed quiver, transposed maps, complementary class) is used
// when its enumeration is cheaper.
//
// Throws resource_error("instance too large") when the estimated enumeration
// work of the cheaper orientation exceeds the ceiling.
Int count_subreps(const QuiverRep& m, const ExpVec& e,
                  long long ceiling = kDefaultCountCeiling);

// Estimated enumeration work (number of visited subspace tuples) of the
// cheaper orientation; exposed for diagnostics and tests.
Int count_work_estimate(const QuiverRep& m, const ExpVec& e);

}  // namespace qcs
