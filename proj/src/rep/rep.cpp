#include "qcs/rep/rep.hpp"

#include "qcs/error.hpp"

#include <sstream>

namespace qcs {

void QuiverRep::validate() const {
  if (static_cast<int>(dims.size()) != quiver.n)
    throw math_error("dimension vector length mismatch");
  if (maps.size() != quiver.arrows.size())
    throw math_error("structure map count mismatch");
  for (std::size_t a = 0; a < maps.size(); ++a) {
    auto [i, j] = quiver.arrows[a];
    if (maps[a].rows() != dims[i] || maps[a].cols() != dims[j] ||
        maps[a].modulus() != prime)
      throw math_error("structure map shape mismatch");
  }
  for (int d : dims)
    if (d < 0) throw math_error("negative dimension");
}

std::string QuiverRep::dump() const {
  std::ostringstream os;
  os << "prime " << prime << "\ndims";
  for (int d : dims) os << " " << d;
  os << "\n";
  for (std::size_t a = 0; a < maps.size(); ++a) {
    auto [i, j] = quiver.arrows[a];
    os << "map " << (i + 1) << " " << (j + 1) << "\n";
    for (int r = 0; r < maps[a].rows(); ++r) {
      for (int c = 0; c < maps[a].cols(); ++c)
        os << (c ? " " : "") << maps[a].at(r, c);
      os << "\n";
    }
  }
  return os.str();
}

QuiverRep zero_rep(const Quiver& q, std::uint32_t prime, std::vector<int> dims) {
  QuiverRep rep;
  rep.quiver = q;
  rep.prime = prime;
  rep.dims = std::move(dims);
  for (auto [i, j] : q.arrows)
    rep.maps.emplace_back(prime, rep.dims[i], rep.dims[j]);
  rep.validate();
  return rep;
}

int hom_dim(const QuiverRep& m, const QuiverRep& n) {
  if (m.prime != n.prime) throw math_error("representations over different primes");
  const std::uint32_t p = m.prime;
  const int nv = m.quiver.n;
  // Unknowns: entries of phi_v (dims_N[v] x dims_M[v]); equations from
  // phi_i M_a - N_a phi_j = 0 per arrow a: i->j.
  std::vector<int> offset(nv + 1, 0);
  for (int v = 0; v < nv; ++v)
    offset[v + 1] = offset[v] + n.dims[v] * m.dims[v];
  const int unknowns = offset[nv];
  int equations = 0;
  for (std::size_t a = 0; a < m.quiver.arrows.size(); ++a) {
    auto [i, j] = m.quiver.arrows[a];
    equations += n.dims[i] * m.dims[j];
  }
  if (unknowns == 0) return 0;
  FpMat sys(p, equations, unknowns);
  int row = 0;
  for (std::size_t a = 0; a < m.quiver.arrows.size(); ++a) {
    auto [i, j] = m.quiver.arrows[a];
    const FpMat& ma = m.maps[a];
    const FpMat& na = n.maps[a];
    for (int r = 0; r < n.dims[i]; ++r)
      for (int c = 0; c < m.dims[j]; ++c) {
        // sum_s phi_i[r][s] M_a[s][c] - sum_t N_a[r][t] phi_j[t][c] = 0
        for (int s = 0; s < m.dims[i]; ++s)
          sys.at(row, offset[i] + r * m.dims[i] + s) = ma.at(s, c);
        for (int t = 0; t < n.dims[j]; ++t) {
          std::uint32_t cur = sys.at(row, offset[j] + t * m.dims[j] + c);
          std::uint64_t sub = (p - na.at(r, t) % p) % p;
          sys.at(row, offset[j] + t * m.dims[j] + c) =
              (cur + sub) % p;
        }
        ++row;
      }
  }
  return nullspace(sys).nullity;
}

QuiverRep direct_sum(const QuiverRep& m, const QuiverRep& n) {
  if (m.prime != n.prime) throw math_error("representations over different primes");
  if (m.quiver.n != n.quiver.n || m.quiver.arrows != n.quiver.arrows)
    throw math_error("representations over different quivers");
  QuiverRep r;
  r.quiver = m.quiver;
  r.prime = m.prime;
  r.dims.resize(m.quiver.n);
  for (int v = 0; v < m.quiver.n; ++v) r.dims[v] = m.dims[v] + n.dims[v];
  for (std::size_t a = 0; a < m.maps.size(); ++a) {
    auto [i, j] = m.quiver.arrows[a];
    FpMat blk(m.prime, r.dims[i], r.dims[j]);
    for (int x = 0; x < m.dims[i]; ++x)
      for (int y = 0; y < m.dims[j]; ++y) blk.at(x, y) = m.maps[a].at(x, y);
    for (int x = 0; x < n.dims[i]; ++x)
      for (int y = 0; y < n.dims[j]; ++y)
        blk.at(m.dims[i] + x, m.dims[j] + y) = n.maps[a].at(x, y);
    r.maps.push_back(std::move(blk));
  }
  r.validate();
  return r;
}

QuiverRep dualize(const QuiverRep& m) {
  QuiverRep r;
  r.quiver = m.quiver.reversed();
  r.prime = m.prime;
  r.dims = m.dims;
  for (std::size_t a = 0; a < m.maps.size(); ++a) r.maps.push_back(m.maps[a].transpose());
  r.validate();
  return r;
}

}  // namespace qcs
