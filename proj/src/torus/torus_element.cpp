#include "qcs/torus/torus_element.hpp"

#include "qcs/error.hpp"

#include <numeric>
#include <sstream>

namespace qcs {

bool GradedLexLess::operator()(const ExpVec& a, const ExpVec& b) const {
  long da = std::accumulate(a.begin(), a.end(), 0L);
  long db = std::accumulate(b.begin(), b.end(), 0L);
  if (da != db) return da < db;
  return a < b;
}

TorusElement TorusElement::monomial(SkewFormPtr form, const ExpVec& g,
                                    Laurent coeff) {
  TorusElement e(std::move(form));
  if (static_cast<int>(g.size()) != e.rank()) throw math_error("rank mismatch");
  if (!coeff.is_zero()) e.terms_.emplace(g, std::move(coeff));
  return e;
}

TorusElement TorusElement::unit(SkewFormPtr form) {
  int m = form->rank();
  return monomial(std::move(form), ExpVec(m, 0));
}

Laurent TorusElement::coeff(const ExpVec& g) const {
  auto it = terms_.find(g);
  return it == terms_.end() ? Laurent::zero() : it->second;
}

void TorusElement::add_term(const ExpVec& g, const Laurent& c) {
  if (c.is_zero()) return;
  if (static_cast<int>(g.size()) != rank()) throw math_error("rank mismatch");
  auto it = terms_.find(g);
  if (it == terms_.end()) {
    terms_.emplace(g, c);
  } else {
    it->second += c;
    if (it->second.is_zero()) terms_.erase(it);
  }
}

void TorusElement::check_compatible(const TorusElement& o) const {
  if (!form_ || !o.form_ || rank() != o.rank()) throw math_error("rank mismatch");
  if (form_ != o.form_ && !(*form_ == *o.form_))
    throw math_error("elements live over different skew forms");
}

TorusElement TorusElement::operator+(const TorusElement& o) const {
  check_compatible(o);
  TorusElement r = *this;
  for (const auto& [g, c] : o.terms_) r.add_term(g, c);
  return r;
}

TorusElement TorusElement::operator-(const TorusElement& o) const {
  check_compatible(o);
  TorusElement r = *this;
  for (const auto& [g, c] : o.terms_) r.add_term(g, -c);
  return r;
}

TorusElement TorusElement::operator*(const TorusElement& o) const {
  check_compatible(o);
  TorusElement r(form_);
  for (const auto& [g, cg] : terms_)
    for (const auto& [h, ch] : o.terms_) {
      long long twist = form_->value(g, h);
      r.add_term(vec_add(g, h), (cg * ch).shifted(static_cast<int>(twist)));
    }
  return r;
}

TorusElement TorusElement::scaled(const Laurent& c) const {
  TorusElement r(form_);
  for (const auto& [g, cg] : terms_) r.add_term(g, cg * c);
  return r;
}

TorusElement TorusElement::pow(int k) const {
  if (k < 0) throw math_error("negative power of a torus element");
  TorusElement r = unit(form_);
  for (int i = 0; i < k; ++i) r = r * *this;
  return r;
}

bool TorusElement::operator==(const TorusElement& o) const {
  if (rank() != o.rank()) return false;
  return terms_ == o.terms_;
}

TorusElement TorusElement::bar() const {
  TorusElement r(form_);
  for (const auto& [g, c] : terms_) r.terms_.emplace(g, c.bar());
  return r;
}

TorusElement TorusElement::specialize_v1() const {
  TorusElement r(SkewForm::zero(rank()));
  for (const auto& [g, c] : terms_) r.add_term(g, Laurent(c.eval_at_one()));
  return r;
}

bool TorusElement::coefficients_nonnegative() const {
  for (const auto& [g, c] : terms_)
    if (!c.has_nonnegative_coeffs()) return false;
  return true;
}

std::string TorusElement::to_string() const {
  if (terms_.empty()) return "0";
  std::ostringstream os;
  bool first = true;
  for (const auto& [g, c] : terms_) {
    if (!first) os << " + ";
    os << "(" << c.to_string() << ")*X(";
    for (std::size_t i = 0; i < g.size(); ++i) {
      if (i) os << ",";
      os << g[i];
    }
    os << ")";
    first = false;
  }
  return os.str();
}

TorusElement left_divide(const TorusElement& b, const TorusElement& a) {
  static const char* kFail =
      "division failed: Laurent phenomenon violated (likely input bug)";
  if (a.is_zero() || b.is_zero()) {
    if (b.is_zero() && !a.is_zero()) return TorusElement(b.form() ? b.form() : a.form());
    throw math_error(kFail);
  }
  const SkewForm& form = *a.form();
  TorusElement rem = b;
  TorusElement quot(b.form());
  long steps = 0;
  const ExpVec lead_a = a.terms().rbegin()->first;
  const Laurent& lead_a_coeff = a.terms().rbegin()->second;
  while (!rem.is_zero()) {
    if (++steps > 200000) throw math_error(kFail);
    const ExpVec lead_b = rem.terms().rbegin()->first;
    const Laurent& lead_b_coeff = rem.terms().rbegin()->second;
    ExpVec g_c = vec_sub(lead_b, lead_a);
    // a_lead * X^{lead_a} * c * X^{g_c} contributes
    // a_lead * c * v^{lambda(lead_a, g_c)} X^{lead_b}.
    long long twist = form.value(lead_a, g_c);
    Laurent c;
    if (!lead_b_coeff.shifted(static_cast<int>(-twist)).try_divide(lead_a_coeff, c))
      throw math_error(kFail);
    TorusElement t = TorusElement::monomial(b.form(), g_c, c);
    quot.add_term(g_c, c);
    rem = rem - a * t;
    if (!rem.is_zero() &&
        !GradedLexLess{}(rem.terms().rbegin()->first, lead_b))
      throw math_error(kFail);
  }
  return quot;
}

ExpVec minimal_degree(const TorusElement& a, const ColumnSolver& solver) {
  if (a.is_zero()) throw math_error("minimal degree of zero element");
  // Candidate: smallest support element in graded lex; then verify it is
  // comparable to and below every other support element.
  for (const auto& [h, ch] : a.terms()) {
    bool ok = true;
    for (const auto& [g, cg] : a.terms()) {
      if (g == h) continue;
      ExpVec e;
      if (!solver.solve_integral(vec_sub(g, h), e)) {
        ok = false;
        break;
      }
      for (int x : e)
        if (x < 0) {
          ok = false;
          break;
        }
      if (!ok) break;
    }
    if (ok) return h;
  }
  throw math_error("minimal degree not unique");
}

ExpVec minimal_degree(const TorusElement& a, const IMat& b_matrix) {
  ColumnSolver solver(b_matrix);
  return minimal_degree(a, solver);
}

TorusElement frame_monomial(const ExpVec& c, const SkewForm& lambda_t,
                            const std::vector<TorusElement>& vars) {
  if (static_cast<int>(c.size()) != static_cast<int>(vars.size()) ||
      static_cast<int>(c.size()) != lambda_t.rank())
    throw math_error("rank mismatch");
  for (int x : c)
    if (x < 0) throw math_error("negative frame exponent unsupported");
  long long twist = 0;
  const IMat& lm = lambda_t.matrix();
  for (std::size_t i = 0; i < c.size(); ++i)
    for (std::size_t j = i + 1; j < c.size(); ++j)
      if (c[i] != 0 && c[j] != 0)
        twist += static_cast<long long>(c[i]) * c[j] *
                 static_cast<long long>(lm.at(static_cast<int>(i), static_cast<int>(j)));
  TorusElement r;
  bool started = false;
  for (std::size_t i = 0; i < c.size(); ++i) {
    if (c[i] == 0) continue;
    TorusElement p = vars[i].pow(c[i]);
    r = started ? r * p : p;
    started = true;
  }
  if (!started) {
    if (vars.empty()) throw math_error("frame monomial needs ambient variables");
    r = TorusElement::unit(vars.front().form());
  }
  return r.scaled(Laurent::v_power(static_cast<int>(-twist)));
}

}  // namespace qcs
