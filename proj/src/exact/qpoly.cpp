#include "qcs/exact/qpoly.hpp"

#include "qcs/error.hpp"

#include <sstream>

namespace qcs {

QPoly::QPoly(Int constant) {
  if (constant != 0) coeffs_[0] = std::move(constant);
}

int QPoly::degree() const {
  return coeffs_.empty() ? -1 : coeffs_.rbegin()->first;
}

Int QPoly::coeff(int q_exp) const {
  auto it = coeffs_.find(q_exp);
  return it == coeffs_.end() ? Int(0) : it->second;
}

void QPoly::add_term(int q_exp, const Int& c) {
  if (c == 0) return;
  if (q_exp < 0) throw math_error("q-polynomial exponent must be nonnegative");
  auto it = coeffs_.find(q_exp);
  if (it == coeffs_.end()) {
    coeffs_.emplace(q_exp, c);
  } else {
    it->second += c;
    if (it->second == 0) coeffs_.erase(it);
  }
}

QPoly& QPoly::operator+=(const QPoly& o) {
  for (const auto& [e, c] : o.coeffs_) add_term(e, c);
  return *this;
}

QPoly operator*(const QPoly& a, const QPoly& b) {
  QPoly r;
  for (const auto& [ea, ca] : a.coeffs_)
    for (const auto& [eb, cb] : b.coeffs_) r.add_term(ea + eb, ca * cb);
  return r;
}

Int QPoly::eval(const Int& q) const {
  Int r = 0;
  for (const auto& [e, c] : coeffs_) {
    Int p = 1;
    for (int i = 0; i < e; ++i) p *= q;
    r += c * p;
  }
  return r;
}

bool QPoly::has_nonnegative_coeffs() const {
  for (const auto& [e, c] : coeffs_)
    if (c < 0) return false;
  return true;
}

Laurent QPoly::to_laurent() const {
  Laurent l;
  for (const auto& [e, c] : coeffs_) l.add_term(2 * e, c);
  return l;
}

QPoly QPoly::from_laurent(const Laurent& l) {
  if (!l.in_q_poly())
    throw math_error("Laurent element does not lie in Z[v^2]");
  QPoly p;
  for (const auto& [e, c] : l.terms()) p.add_term(e / 2, c);
  return p;
}

std::string QPoly::to_string() const {
  if (coeffs_.empty()) return "0";
  std::ostringstream os;
  bool first = true;
  for (auto it = coeffs_.rbegin(); it != coeffs_.rend(); ++it) {
    if (!first && it->second > 0) os << "+";
    if (it->first == 0) {
      os << it->second;
    } else {
      if (it->second == -1)
        os << "-";
      else if (it->second != 1)
        os << it->second << "*";
      os << "q";
      if (it->first != 1) os << "^" << it->first;
    }
    first = false;
  }
  return os.str();
}

}  // namespace qcs
