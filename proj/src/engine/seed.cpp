#include "qcs/engine/seed.hpp"

#include "qcs/error.hpp"

namespace qcs {

EngineContext::EngineContext(CompatiblePair pair, EngineOptions opts)
    : initial(std::move(pair)), b0_solver(initial.b), options(opts) {
  if (b0_solver.rank() != initial.n())
    throw math_error("exchange matrix does not have full rank");
}

bool Seed::same_as(const Seed& o) const {
  return lambda_t->matrix() == o.lambda_t->matrix() && b_t == o.b_t &&
         vars == o.vars && basis_change == o.basis_change;
}

IMat e_matrix(const IMat& b, int k, int eps) {
  const int m = b.rows();
  IMat e = IMat::identity(m);
  e.at(k, k) = -1;
  for (int i = 0; i < m; ++i) {
    if (i == k) continue;
    Int x = -eps * b.at(i, k);
    e.at(i, k) = x > 0 ? x : Int(0);
  }
  return e;
}

IMat f_matrix(const IMat& b, int k, int eps) {
  const int n = b.cols();
  IMat f = IMat::identity(n);
  f.at(k, k) = -1;
  for (int j = 0; j < n; ++j) {
    if (j == k) continue;
    Int x = eps * b.at(k, j);
    f.at(k, j) = x > 0 ? x : Int(0);
  }
  return f;
}

std::pair<IMat, IMat> mutate_matrices(const SkewForm& lambda, const IMat& b,
                                      int k) {
  if (k < 0 || k >= b.cols())
    throw math_error("cannot mutate frozen/invalid vertex");
  IMat ep = e_matrix(b, k, +1);
  IMat em = e_matrix(b, k, -1);
  IMat fp = f_matrix(b, k, +1);
  IMat fm = f_matrix(b, k, -1);
  IMat lam_p = ep.transpose() * lambda.matrix() * ep;
  IMat lam_m = em.transpose() * lambda.matrix() * em;
  IMat b_p = ep * b * fp;
  IMat b_m = em * b * fm;
  if (lam_p != lam_m || b_p != b_m)
    throw math_error("matrix mutation is sign dependent (internal error)");
  return {std::move(lam_p), std::move(b_p)};
}

static Seed initial_seed_impl(const CompatiblePair& pair, EngineOptions opts) {
  Seed s;
  s.ctx = std::make_shared<EngineContext>(pair, opts);
  s.lambda_t = pair.lambda;
  s.b_t = pair.b;
  const int m = pair.m();
  s.vars.reserve(m);
  for (int i = 0; i < m; ++i)
    s.vars.push_back(TorusElement::monomial(pair.lambda, unit_vec(m, i)));
  s.basis_change = IMat::identity(m);
  return s;
}

Seed initial_seed(const CompatiblePair& pair, EngineOptions opts) {
  opts.check_compatibility = true;
  // make_pair has already validated compatibility when the pair was built;
  // re-check here so hand-assembled pairs are caught too.
  make_pair(pair.lambda->matrix(), pair.b);
  return initial_seed_impl(pair, opts);
}

Seed initial_commutative_seed(const CompatiblePair& pair, EngineOptions opts) {
  opts.check_compatibility = false;
  CompatiblePair zeroed{SkewForm::zero(pair.m()), pair.b};
  return initial_seed_impl(zeroed, opts);
}

Seed mutate_seed(const Seed& s, int k) {
  const int m = s.m(), n = s.n();
  if (k < 0 || k >= n) throw math_error("cannot mutate frozen/invalid vertex");

  // Exchange relation: X_k X_k' = v^{L(e_k, c+)} X(c+) + v^{L(e_k, c-)} X(c-)
  // with c+ = sum [b_ik]_+ e_i and c- = sum [-b_jk]_+ e_j.
  ExpVec c_plus(m, 0), c_minus(m, 0);
  for (int i = 0; i < m; ++i) {
    Int x = s.b_t.at(i, k);
    if (x > 0) c_plus[i] = static_cast<int>(x);
    if (x < 0) c_minus[i] = static_cast<int>(-x);
  }
  long long tp = s.lambda_t->value(unit_vec(m, k), c_plus);
  long long tm = s.lambda_t->value(unit_vec(m, k), c_minus);
  TorusElement rhs =
      frame_monomial(c_plus, *s.lambda_t, s.vars)
          .scaled(Laurent::v_power(static_cast<int>(tp))) +
      frame_monomial(c_minus, *s.lambda_t, s.vars)
          .scaled(Laurent::v_power(static_cast<int>(tm)));
  TorusElement new_var = left_divide(rhs, s.vars[k]);
  if (new_var.term_count() > s.ctx->options.max_terms)
    throw resource_error("cluster variable exceeds the term ceiling");

  auto [lam_next, b_next] = mutate_matrices(*s.lambda_t, s.b_t, k);

  Seed next;
  next.ctx = s.ctx;
  next.lambda_t = std::make_shared<SkewForm>(std::move(lam_next));
  next.b_t = std::move(b_next);
  next.vars = s.vars;
  next.vars[k] = new_var;
  next.word = s.word;
  next.word.push_back(k);

  // The accumulated basis change picks the sign of E_eps for which column k
  // matches the new variable's minimal degree.
  ExpVec g_new = minimal_degree(new_var, s.ctx->b0_solver);
  bool matched = false;
  for (int eps : {+1, -1}) {
    IMat cand = s.basis_change * e_matrix(s.b_t, k, eps);
    ExpVec col(m);
    for (int i = 0; i < m; ++i) col[i] = static_cast<int>(cand.at(i, k));
    if (col == g_new) {
      next.basis_change = std::move(cand);
      matched = true;
      break;
    }
  }
  if (!matched)
    throw math_error("basis change does not track the new minimal degree");

  if (s.ctx->options.check_compatibility) {
    make_pair(next.lambda_t->matrix(), next.b_t);
    // Lambda transport: Lambda_t = G^T Lambda_0 G.
    IMat transported = next.basis_change.transpose() *
                       s.ctx->initial.lambda->matrix() * next.basis_change;
    if (transported != next.lambda_t->matrix())
      throw math_error("lambda transport failed (internal error)");
  }
  return next;
}

std::vector<Seed> walk(const CompatiblePair& pair, const std::vector<int>& word,
                       EngineOptions opts) {
  std::vector<Seed> seeds;
  seeds.push_back(initial_seed(pair, opts));
  for (int k : word) seeds.push_back(mutate_seed(seeds.back(), k));
  return seeds;
}

}  // namespace qcs
