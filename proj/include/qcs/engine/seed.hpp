#pragma once

#include "qcs/engine/pair.hpp"
#include "qcs/torus/torus_element.hpp"

#include <memory>
#include <utility>
#include <vector>

namespace qcs {

struct EngineOptions {
  // Disabled for the commutative (v = 1, zero form) engine, whose pair is
  // deliberately incompatible.
  bool check_compatibility = true;
  // Ceiling on the支持 size of any cluster variable.
  std::size_t max_terms = 1000000;
};

// Shared per-walk context: the initial pair fixes the ambient torus and the
// partial order.
struct EngineContext {
  CompatiblePair initial;
  ColumnSolver b0_solver;
  EngineOptions options;

  EngineContext(CompatiblePair pair, EngineOptions opts);
};
using EngineContextPtr = std::shared_ptr<const EngineContext>;

// Quantum seed: current matrices, the m cluster variables expanded in the
// initial torus, and the accumulated basis-change matrix whose mutable
// columns are the extended g-vectors.
struct Seed {
  EngineContextPtr ctx;
  SkewFormPtr lambda_t;
  IMat b_t;
  std::vector<TorusElement> vars;
  IMat basis_change;
  std::vector<int> word;  // 0-based mutation indices from the root

  int m() const { return ctx->initial.m(); }
  int n() const { return ctx->initial.n(); }

  bool same_as(const Seed& o) const;
};

// E_epsilon for mutation of b at vertex k (0-based).
IMat e_matrix(const IMat& b, int k, int eps);
// F_epsilon (n x n).
IMat f_matrix(const IMat& b, int k, int eps);

// (Lambda', B') = (E^T Lambda E, E B F); asserts the two signs agree.
std::pair<IMat, IMat> mutate_matrices(const SkewForm& lambda, const IMat& b,
                                      int k);

Seed initial_seed(const CompatiblePair& pair, EngineOptions opts = {});
Seed initial_commutative_seed(const CompatiblePair& pair,
                              EngineOptions opts = {});

// One mutation step at mutable vertex k (0-based).
Seed mutate_seed(const Seed& s, int k);

// Seeds along the path from the root; word applied left to right.
// The result includes the initial seed at position 0.
std::vector<Seed> walk(const CompatiblePair& pair, const std::vector<int>& word,
                       EngineOptions opts = {});

}  // namespace qcs
