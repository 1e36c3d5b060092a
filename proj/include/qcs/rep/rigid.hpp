#pragma once

#include "qcs/exact/numbers.hpp"
#include "qcs/rep/euler.hpp"
#include "qcs/rep/rep.hpp"

#include <cstdint>

namespace qcs {

inline constexpr int kDefaultRigidTrials = 64;

// Samples uniformly random structure maps until the rigidity certificate
// hom_dim(M,M) == <m,m> holds (equivalently Ext^1(M,M) = 0). Throws
// math_error("no rigid representation found (dimension vector may not be a
// rigid class, or field too small)") after max_trials failures or when the
// certificate is impossible.
QuiverRep random_rigid_rep(const Quiver& q, const ExpVec& m_vec,
                           std::uint32_t prime, std::uint64_t seed,
                           int max_trials = kDefaultRigidTrials);

// Uniformly random representation with the given dimensions (no certificate).
QuiverRep random_rep(const Quiver& q, const ExpVec& m_vec, std::uint32_t prime,
                     std::uint64_t seed);

bool is_rigid(const QuiverRep& m);

}  // namespace qcs
