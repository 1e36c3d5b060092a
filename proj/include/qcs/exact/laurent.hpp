#pragma once

#include "qcs/exact/numbers.hpp"

#include <map>
#include <string>

namespace qcs {

// Laurent polynomial in one formal variable v with integer coefficients.
// The quantum parameter is q = v^2, so "lies in Z[q]" means all stored
// exponents are even and nonnegative.
class Laurent {
public:
  Laurent() = default;
  explicit Laurent(Int constant);
  Laurent(Int coeff, int v_exp);  // coeff * v^v_exp

  static Laurent zero() { return Laurent(); }
  static Laurent one() { return Laurent(Int(1)); }
  static Laurent v_power(int e) { return Laurent(Int(1), e); }

  bool is_zero() const { return terms_.empty(); }
  bool is_one() const;

  // Nonzero coefficient map, v-exponent -> coefficient.
  const std::map<int, Int>& terms() const { return terms_; }

  int min_exp() const;  // requires nonzero
  int max_exp() const;  // requires nonzero

  Int coeff(int v_exp) const;

  Laurent& operator+=(const Laurent& o);
  Laurent& operator-=(const Laurent& o);
  friend Laurent operator+(Laurent a, const Laurent& b) { return a += b; }
  friend Laurent operator-(Laurent a, const Laurent& b) { return a -= b; }
  friend Laurent operator*(const Laurent& a, const Laurent& b);
  Laurent& operator*=(const Laurent& o) { return *this = *this * o; }
  Laurent operator-() const;

  bool operator==(const Laurent& o) const { return terms_ == o.terms_; }
  bool operator!=(const Laurent& o) const { return terms_ != o.terms_; }

  // Multiply by v^e.
  Laurent shifted(int e) const;

  // v -> v^{-1}.
  Laurent bar() const;

  // Exact division; returns false when the quotient does not exist in
  // Z[v^{\pm 1}].
  bool try_divide(const Laurent& divisor, Laurent& quotient) const;

  // Value at v = x.
  Int eval(const Int& x) const;
  Int eval_at_one() const;

  // True iff every exponent is even and nonnegative (element of Z[q]).
  bool in_q_poly() const;

  bool has_nonnegative_coeffs() const;

  std::string to_string() const;  // for diagnostics

  void add_term(int v_exp, const Int& c);

private:
  std::map<int, Int> terms_;
};

}  // namespace qcs
