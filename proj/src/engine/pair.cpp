#include "qcs/engine/pair.hpp"

#include "qcs/error.hpp"

namespace qcs {

IMat CompatiblePair::principal_b() const {
  IMat p(n(), n());
  for (int i = 0; i < n(); ++i)
    for (int j = 0; j < n(); ++j) p.at(i, j) = b.at(i, j);
  return p;
}

CompatiblePair make_pair(IMat lambda, IMat b) {
  const int m = b.rows(), n = b.cols();
  if (lambda.rows() != m || lambda.cols() != m)
    throw math_error("pair not unitally compatible");
  auto form = std::make_shared<SkewForm>(std::move(lambda));
  IMat prod = form->matrix() * b;  // should be [-I_n; 0]
  for (int i = 0; i < m; ++i)
    for (int j = 0; j < n; ++j) {
      Int want = (i == j) ? Int(-1) : Int(0);
      if (prod.at(i, j) != want) throw math_error("pair not unitally compatible");
    }
  return CompatiblePair{form, std::move(b)};
}

CompatiblePair lambda_from_extended(const IMat& b_circ, int n) {
  if (b_circ.rows() != b_circ.cols())
    throw math_error("extended matrix must be square");
  for (int i = 0; i < b_circ.rows(); ++i)
    for (int j = 0; j < b_circ.cols(); ++j)
      if (b_circ.at(i, j) != -b_circ.at(j, i))
        throw math_error("extended matrix must be skew-symmetric");
  QMat inv;
  try {
    inv = invert_integer_matrix(b_circ);
  } catch (const math_error&) {
    throw math_error("extended matrix singular");
  }
  IMat lambda = to_integral(inv, "lambda not integral").transpose();
  IMat b(b_circ.rows(), n);
  for (int i = 0; i < b_circ.rows(); ++i)
    for (int j = 0; j < n; ++j) b.at(i, j) = b_circ.at(i, j);
  return make_pair(std::move(lambda), std::move(b));
}

CompatiblePair pair_from_quiver(const QuiverFile& qf) {
  const int n = qf.quiver.mutable_vertices();
  switch (qf.lambda_spec) {
    case QuiverFile::LambdaSpec::automatic:
      return lambda_from_extended(qf.quiver.extended_b_matrix(), n);
    case QuiverFile::LambdaSpec::rows:
      return make_pair(qf.lambda_rows, qf.quiver.b_matrix());
    case QuiverFile::LambdaSpec::none:
      throw math_error("quiver file does not define a lambda matrix");
  }
  throw math_error("unreachable");
}

}  // namespace qcs
