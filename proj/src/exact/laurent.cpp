#include "qcs/exact/laurent.hpp"

#include "qcs/error.hpp"

#include <sstream>

namespace qcs {

Laurent::Laurent(Int constant) {
  if (constant != 0) terms_[0] = std::move(constant);
}

Laurent::Laurent(Int coeff, int v_exp) {
  if (coeff != 0) terms_[v_exp] = std::move(coeff);
}

bool Laurent::is_one() const {
  return terms_.size() == 1 && terms_.begin()->first == 0 &&
         terms_.begin()->second == 1;
}

int Laurent::min_exp() const { return terms_.begin()->first; }
int Laurent::max_exp() const { return terms_.rbegin()->first; }

Int Laurent::coeff(int v_exp) const {
  auto it = terms_.find(v_exp);
  return it == terms_.end() ? Int(0) : it->second;
}

void Laurent::add_term(int v_exp, const Int& c) {
  if (c == 0) return;
  auto it = terms_.find(v_exp);
  if (it == terms_.end()) {
    terms_.emplace(v_exp, c);
  } else {
    it->second += c;
    if (it->second == 0) terms_.erase(it);
  }
}

Laurent& Laurent::operator+=(const Laurent& o) {
  for (const auto& [e, c] : o.terms_) add_term(e, c);
  return *this;
}

Laurent& Laurent::operator-=(const Laurent& o) {
  for (const auto& [e, c] : o.terms_) add_term(e, -c);
  return *this;
}

Laurent operator*(const Laurent& a, const Laurent& b) {
  Laurent r;
  for (const auto& [ea, ca] : a.terms_)
    for (const auto& [eb, cb] : b.terms_) r.add_term(ea + eb, ca * cb);
  return r;
}

Laurent Laurent::operator-() const {
  Laurent r;
  for (const auto& [e, c] : terms_) r.terms_[e] = -c;
  return r;
}

Laurent Laurent::shifted(int e) const {
  Laurent r;
  for (const auto& [ex, c] : terms_) r.terms_[ex + e] = c;
  return r;
}

Laurent Laurent::bar() const {
  Laurent r;
  for (const auto& [e, c] : terms_) r.terms_[-e] = c;
  return r;
}

bool Laurent::try_divide(const Laurent& divisor, Laurent& quotient) const {
  quotient = Laurent();
  if (divisor.is_zero()) return false;
  if (is_zero()) return true;
  // Long division from the top exponent; exponent offsets handle the
  // Laurent part.
  Laurent rem = *this;
  const int d_top = divisor.max_exp();
  const Int& d_lead = divisor.terms_.rbegin()->second;
  long steps = 0;
  while (!rem.is_zero()) {
    if (++steps > 1000000) return false;
    const int r_top = rem.max_exp();
    const Int& r_lead = rem.terms_.rbegin()->second;
    if (r_lead % d_lead != 0) return false;
    // Degree guard: the remainder must stay at least as wide as the divisor.
    if (rem.max_exp() - rem.min_exp() < d_top - divisor.min_exp()) return false;
    Int q = r_lead / d_lead;
    int e = r_top - d_top;
    quotient.add_term(e, q);
    Laurent t(q, e);
    rem -= divisor * t;
  }
  return true;
}

Int Laurent::eval(const Int& x) const {
  if (is_zero()) return 0;
  if (min_exp() < 0) throw math_error("cannot evaluate negative v-exponent at an integer");
  Int r = 0;
  for (const auto& [e, c] : terms_) {
    Int p = 1;
    for (int i = 0; i < e; ++i) p *= x;
    r += c * p;
  }
  return r;
}

Int Laurent::eval_at_one() const {
  Int r = 0;
  for (const auto& [e, c] : terms_) r += c;
  return r;
}

bool Laurent::in_q_poly() const {
  for (const auto& [e, c] : terms_)
    if (e < 0 || e % 2 != 0) return false;
  return true;
}

bool Laurent::has_nonnegative_coeffs() const {
  for (const auto& [e, c] : terms_)
    if (c < 0) return false;
  return true;
}

std::string Laurent::to_string() const {
  if (is_zero()) return "0";
  std::ostringstream os;
  bool first = true;
  for (const auto& [e, c] : terms_) {
    if (!first) os << (c > 0 ? "+" : "");
    os << c;
    if (e != 0) os << "*v^" << e;
    first = false;
  }
  return os.str();
}

}  // namespace qcs
