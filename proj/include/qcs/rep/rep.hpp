#pragma once

#include "qcs/engine/quiver.hpp"
#include "qcs/exact/primefield.hpp"

#include <cstdint>
#include <string>
#include <vector>

namespace qcs {

// Finite-dimensional representation over F_p in the right-module convention:
// the structure map of arrow a: i->j sends the vertex-j space into the
// vertex-i space, and subrepresentations are tuples stable under these maps.
struct QuiverRep {
  Quiver quiver;
  std::uint32_t prime = 2;
  std::vector<int> dims;
  std::vector<FpMat> maps;  // maps[a] has shape dims[i] x dims[j] for arrow a: i->j

  void validate() const;
  std::string dump() const;  // debugging text format
};

QuiverRep zero_rep(const Quiver& q, std::uint32_t prime, std::vector<int> dims);

// dim_{F_p} Hom(M, N): tuples phi_v with phi_i M_a = N_a phi_j per arrow.
int hom_dim(const QuiverRep& m, const QuiverRep& n);

// Block-diagonal sum; same quiver and prime required.
QuiverRep direct_sum(const QuiverRep& m, const QuiverRep& n);

// Reverses the quiver and transposes every structure map. Counts of
// subrepresentations satisfy #Gr_e(M) = #Gr_{dims-e}(dual(M)).
QuiverRep dualize(const QuiverRep& m);

}  // namespace qcs
