#include "qcs/engine/extract.hpp"

#include "qcs/error.hpp"

namespace qcs {

Laurent FPoly::coeff(const ExpVec& e) const {
  auto it = terms.find(e);
  return it == terms.end() ? Laurent::zero() : it->second;
}

FPoly FPoly::specialize_v1() const {
  FPoly r;
  for (const auto& [e, c] : terms) {
    Int v = c.eval_at_one();
    if (v != 0) r.terms.emplace(e, Laurent(v));
  }
  return r;
}

TorusElement rebuild_from_g_and_f(const SkewFormPtr& form, const IMat& b_matrix,
                                  const ExpVec& g, const FPoly& f) {
  TorusElement sum(form);
  for (const auto& [e, c] : f.terms) sum.add_term(apply_int(b_matrix, e), c);
  return sum * TorusElement::monomial(form, g);
}

std::pair<ExpVec, FPoly> extract_g_and_f(const TorusElement& x,
                                         const IMat& b_matrix,
                                         const ColumnSolver& solver) {
  if (x.is_zero()) throw math_error("not a cluster-monomial expansion");
  ExpVec g = minimal_degree(x, solver);
  const SkewForm& form = *x.form();
  FPoly f;
  for (const auto& [h, coeff] : x.terms()) {
    ExpVec e;
    if (!solver.solve_integral(vec_sub(h, g), e))
      throw math_error("not a cluster-monomial expansion");
    for (int v : e)
      if (v < 0) throw math_error("not a cluster-monomial expansion");
    // X = sum F_e X^{Be} X^{g}; the right multiplication twists by
    // v^{lambda(Be, g)}, so F_e = P_h v^{-lambda(Be, g)}.
    long long twist = form.value(apply_int(b_matrix, e), g);
    f.terms.emplace(e, coeff.shifted(static_cast<int>(-twist)));
  }
  ExpVec zero(b_matrix.cols(), 0);
  if (!f.coeff(zero).is_one())
    throw math_error("not a cluster-monomial expansion");
  // Definitional test: the rebuild reproduces x exactly.
  if (rebuild_from_g_and_f(x.form(), b_matrix, g, f) != x)
    throw math_error("F extraction failed to rebuild the input (internal error)");
  return {g, f};
}

std::pair<ExpVec, FPoly> extract_g_and_f(const TorusElement& x,
                                         const IMat& b_matrix) {
  ColumnSolver solver(b_matrix);
  return extract_g_and_f(x, b_matrix, solver);
}

ExpVec dim_vector_from_f(const FPoly& f) {
  if (f.terms.empty())
    throw math_error("F support not an interval under componentwise order");
  ExpVec mx = f.terms.begin()->first;
  for (const auto& [e, c] : f.terms)
    for (std::size_t i = 0; i < e.size(); ++i)
      if (e[i] > mx[i]) mx[i] = e[i];
  if (f.terms.find(mx) == f.terms.end())
    throw math_error("F support not an interval under componentwise order");
  return mx;
}

}  // namespace qcs
