#include "qcs/rep/euler.hpp"

#include "qcs/error.hpp"

namespace qcs {

EulerForm::EulerForm(Quiver q) : q_(std::move(q)) {
  if (!q_.is_acyclic()) throw math_error("principal part not acyclic");
}

long long EulerForm::value(const ExpVec& d, const ExpVec& f) const {
  if (static_cast<int>(d.size()) != q_.n || static_cast<int>(f.size()) != q_.n)
    throw math_error("dimension vector length mismatch");
  long long acc = 0;
  for (int v = 0; v < q_.n; ++v) acc += static_cast<long long>(d[v]) * f[v];
  for (auto [i, j] : q_.arrows) acc -= static_cast<long long>(d[j]) * f[i];
  return acc;
}

long long EulerForm::antisymmetrized(const ExpVec& d, const ExpVec& f) const {
  return value(d, f) - value(f, d);
}

IMat EulerForm::antisymmetrized_matrix() const {
  IMat b(q_.n, q_.n);
  for (int i = 0; i < q_.n; ++i)
    for (int j = 0; j < q_.n; ++j)
      b.at(i, j) = antisymmetrized(unit_vec(q_.n, i), unit_vec(q_.n, j));
  return b;
}

}  // namespace qcs
