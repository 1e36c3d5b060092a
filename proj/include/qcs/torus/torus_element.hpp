#pragma once

#include "qcs/exact/laurent.hpp"
#include "qcs/exact/matrix.hpp"
#include "qcs/torus/skew_form.hpp"

#include <map>
#include <string>
#include <vector>

namespace qcs {

// Graded lexicographic order on exponent vectors: total degree first, then
// lexicographic. Compatible with addition, which makes leading-term
// elimination in left_divide sound.
struct GradedLexLess {
  bool operator()(const ExpVec& a, const ExpVec& b) const;
};

// Element of the based quantum torus attached to a skew form: a finite sum
// of terms P_g(v) X^g with the relation X^g X^h = v^{lambda(g,h)} X^{g+h}.
class TorusElement {
public:
  TorusElement() = default;
  explicit TorusElement(SkewFormPtr form) : form_(std::move(form)) {}

  static TorusElement monomial(SkewFormPtr form, const ExpVec& g,
                               Laurent coeff = Laurent::one());
  static TorusElement unit(SkewFormPtr form);

  const SkewFormPtr& form() const { return form_; }
  int rank() const { return form_ ? form_->rank() : 0; }

  bool is_zero() const { return terms_.empty(); }
  std::size_t term_count() const { return terms_.size(); }

  const std::map<ExpVec, Laurent, GradedLexLess>& terms() const {
    return terms_;
  }

  Laurent coeff(const ExpVec& g) const;
  void add_term(const ExpVec& g, const Laurent& c);

  TorusElement operator+(const TorusElement& o) const;
  TorusElement operator-(const TorusElement& o) const;
  TorusElement operator*(const TorusElement& o) const;  // twisted product
  TorusElement scaled(const Laurent& c) const;

  TorusElement pow(int k) const;  // k >= 0

  bool operator==(const TorusElement& o) const;
  bool operator!=(const TorusElement& o) const { return !(*this == o); }

  // Coefficient-wise v -> v^{-1}; an antiautomorphism of the torus.
  TorusElement bar() const;

  // Evaluation v = 1 into the commutative Laurent ring (zero form).
  TorusElement specialize_v1() const;

  bool coefficients_nonnegative() const;

  std::string to_string() const;

private:
  void check_compatible(const TorusElement& o) const;

  SkewFormPtr form_;
  std::map<ExpVec, Laurent, GradedLexLess> terms_;
};

// Unique c with a * c = b, by leading-term elimination under graded lex.
// Throws math_error("division failed: Laurent phenomenon violated (likely
// input bug)") when the division is not exact.
TorusElement left_divide(const TorusElement& b, const TorusElement& a);

// The unique support element h of `a` such that every support element g
// satisfies g = h + B e with e in Z^n nonnegative; throws
// math_error("minimal degree not unique") otherwise.
ExpVec minimal_degree(const TorusElement& a, const IMat& b_matrix);
ExpVec minimal_degree(const TorusElement& a, const ColumnSolver& solver);

// Normalized frame monomial: v^{-sum_{i<j} c_i c_j Lambda_t[i][j]} *
// vars_1^{c_1} ... vars_m^{c_m} with nonnegative c.
TorusElement frame_monomial(const ExpVec& c, const SkewForm& lambda_t,
                            const std::vector<TorusElement>& vars);

}  // namespace qcs
