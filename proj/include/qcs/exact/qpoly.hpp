#pragma once

#include "qcs/exact/laurent.hpp"
#include "qcs/exact/numbers.hpp"

#include <map>
#include <string>

namespace qcs {

// Integer polynomial in q. Conversion to the v-world doubles exponents
// (q = v^2).
class QPoly {
public:
  QPoly() = default;
  explicit QPoly(Int constant);

  static QPoly zero() { return QPoly(); }
  static QPoly one() { return QPoly(Int(1)); }

  const std::map<int, Int>& coeffs() const { return coeffs_; }

  bool is_zero() const { return coeffs_.empty(); }
  int degree() const;  // -1 for the zero polynomial

  Int coeff(int q_exp) const;
  void add_term(int q_exp, const Int& c);

  QPoly& operator+=(const QPoly& o);
  friend QPoly operator+(QPoly a, const QPoly& b) { return a += b; }
  friend QPoly operator*(const QPoly& a, const QPoly& b);

  bool operator==(const QPoly& o) const { return coeffs_ == o.coeffs_; }
  bool operator!=(const QPoly& o) const { return coeffs_ != o.coeffs_; }

  Int eval(const Int& q) const;

  bool has_nonnegative_coeffs() const;

  Laurent to_laurent() const;

  // Inverse of to_laurent; requires the argument to lie in Z[v^2] with
  // nonnegative exponents.
  static QPoly from_laurent(const Laurent& l);

  std::string to_string() const;

private:
  std::map<int, Int> coeffs_;
};

}  // namespace qcs
