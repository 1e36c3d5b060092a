#include "qcs/rep/count.hpp"

#include "qcs/error.hpp"
#include "qcs/exact/gaussian_binomial.hpp"
#include "qcs/rep/subspaces.hpp"

#include <algorithm>

namespace qcs {

namespace {

struct CountPlan {
  std::vector<int> order;            // vertex processing order
  std::vector<bool> enumerated;      // needs explicit subspace enumeration
  std::vector<std::vector<int>> in;  // active arrows targeting each vertex
  Int work = 1;                      // product of subspace counts at enumerated vertices
};

// An arrow imposes no condition when the source subspace is forced full or
// the target subspace is zero.
bool arrow_active(const QuiverRep& m, const ExpVec& e, int a) {
  auto [i, j] = m.quiver.arrows[a];
  return e[i] < m.dims[i] && e[j] > 0;
}

CountPlan make_plan(const QuiverRep& m, const ExpVec& e) {
  const int nv = m.quiver.n;
  CountPlan plan;
  plan.enumerated.assign(nv, false);
  plan.in.assign(nv, {});
  for (std::size_t a = 0; a < m.quiver.arrows.size(); ++a) {
    if (!arrow_active(m, e, static_cast<int>(a))) continue;
    auto [i, j] = m.quiver.arrows[a];
    plan.enumerated[j] = true;  // its image constrains the source space
    plan.in[j].push_back(static_cast<int>(a));
  }
  auto topo = m.quiver.topological_order();
  if (!topo) throw math_error("principal part not acyclic");
  plan.order.assign(topo->rbegin(), topo->rend());
  for (int v = 0; v < nv; ++v)
    if (plan.enumerated[v])
      plan.work *= gaussian_binomial(m.dims[v], e[v]).eval(Int(m.prime));
  return plan;
}

struct Counter {
  const QuiverRep& rep;
  const ExpVec& e;
  const CountPlan& plan;
  std::vector<FpRowSpace> forced;  // accumulated image spaces per vertex
  std::vector<std::vector<Int>> gauss;  // [v][r] = [dims_v - r choose e_v - r]_p

  explicit Counter(const QuiverRep& m, const ExpVec& cls, const CountPlan& pl)
      : rep(m), e(cls), plan(pl) {
    for (int v = 0; v < m.quiver.n; ++v) {
      forced.emplace_back(m.prime, m.dims[v]);
      std::vector<Int> row;
      for (int r = 0; r <= m.dims[v]; ++r)
        row.push_back(e[v] >= r
                          ? gaussian_binomial(m.dims[v] - r, e[v] - r).eval(Int(m.prime))
                          : Int(0));
      gauss.push_back(std::move(row));
    }
  }

  Int run(std::size_t idx) {
    if (idx == plan.order.size()) return 1;
    const int v = plan.order[idx];
    const int r0 = forced[v].rank();
    if (r0 > e[v]) return 0;
    if (!plan.enumerated[v]) {
      const Int& factor = gauss[v][r0];
      if (factor == 0) return 0;
      return factor * run(idx + 1);
    }
    Int total = 0;
    std::vector<std::pair<int, FpRowSpace>> undo;
    for_each_subspace_containing(
        forced[v], e[v],
        [&](const std::vector<std::vector<std::uint32_t>>& basis) {
          undo.clear();
          bool viable = true;
          for (int a : plan.in[v]) {
            const int src = rep.quiver.arrows[a].first;
            undo.emplace_back(src, forced[src]);
            std::vector<std::uint32_t> img(rep.dims[src]);
            for (const auto& row : basis) {
              rep.maps[a].apply(row.data(), img.data());
              forced[src].add_row(img);
            }
            if (forced[src].rank() > e[src]) {
              viable = false;
              break;
            }
          }
          if (viable) total += run(idx + 1);
          for (auto it = undo.rbegin(); it != undo.rend(); ++it)
            forced[it->first] = std::move(it->second);
          return true;
        });
    return total;
  }
};

Int count_direct(const QuiverRep& m, const ExpVec& e, const CountPlan& plan) {
  Counter counter(m, e, plan);
  return counter.run(0);
}

}  // namespace

Int count_work_estimate(const QuiverRep& m, const ExpVec& e) {
  ExpVec dual_e(m.dims.size());
  for (std::size_t v = 0; v < m.dims.size(); ++v) dual_e[v] = m.dims[v] - e[v];
  CountPlan direct = make_plan(m, e);
  CountPlan dual = make_plan(dualize(m), dual_e);
  return std::min(direct.work, dual.work);
}

Int count_subreps(const QuiverRep& m, const ExpVec& e, long long ceiling) {
  m.validate();
  if (static_cast<int>(e.size()) != m.quiver.n)
    throw math_error("class vector length mismatch");
  for (std::size_t v = 0; v < e.size(); ++v)
    if (e[v] < 0 || e[v] > m.dims[v]) return 0;

  CountPlan direct = make_plan(m, e);
  QuiverRep dual_rep = dualize(m);
  ExpVec dual_e(m.dims.size());
  for (std::size_t v = 0; v < m.dims.size(); ++v) dual_e[v] = m.dims[v] - e[v];
  CountPlan dual = make_plan(dual_rep, dual_e);

  const bool use_dual = dual.work < direct.work;
  const Int& work = use_dual ? dual.work : direct.work;
  if (work > ceiling) throw resource_error("instance too large");
  return use_dual ? count_direct(dual_rep, dual_e, dual)
                  : count_direct(m, e, direct);
}

}  // namespace qcs
