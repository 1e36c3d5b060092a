#include "qcs/exact/interpolate.hpp"

#include "qcs/error.hpp"

#include <set>

namespace qcs {

namespace {

// Lagrange interpolation through the given nodes, exact over Q.
// Returns coefficients c_0..c_d.
std::vector<Rat> lagrange(const std::vector<CountSample>& nodes) {
  const int k = static_cast<int>(nodes.size());
  std::vector<Rat> coeffs(k, Rat(0));
  for (int i = 0; i < k; ++i) {
    // Basis polynomial prod_{j != i} (x - p_j) / (p_i - p_j).
    std::vector<Rat> basis{Rat(1)};
    Rat denom(1);
    for (int j = 0; j < k; ++j) {
      if (j == i) continue;
      Rat pj(nodes[j].first);
      std::vector<Rat> next(basis.size() + 1, Rat(0));
      for (std::size_t t = 0; t < basis.size(); ++t) {
        next[t + 1] += basis[t];
        next[t] -= pj * basis[t];
      }
      basis = std::move(next);
      denom *= Rat(nodes[i].first) - pj;
    }
    Rat scale = Rat(nodes[i].second) / denom;
    for (std::size_t t = 0; t < basis.size(); ++t) coeffs[t] += scale * basis[t];
  }
  return coeffs;
}

Rat eval_rat(const std::vector<Rat>& coeffs, std::uint32_t x) {
  Rat r(0), p(1);
  for (const Rat& c : coeffs) {
    r += c * p;
    p *= Rat(x);
  }
  return r;
}

}  // namespace

FitResult try_interpolate(const std::vector<CountSample>& samples,
                          int degree_bound) {
  FitResult res;
  if (degree_bound < 0) degree_bound = 0;
  if (static_cast<int>(samples.size()) < degree_bound + 2)
    throw math_error("interpolation needs at least degree_bound + 2 samples");
  std::set<std::uint32_t> seen;
  for (const auto& s : samples)
    if (!seen.insert(s.first).second)
      throw math_error("interpolation primes must be pairwise distinct");

  std::vector<CountSample> nodes(samples.begin(),
                                 samples.begin() + degree_bound + 1);
  std::vector<Rat> coeffs = lagrange(nodes);
  for (std::size_t i = degree_bound + 1; i < samples.size(); ++i) {
    if (eval_rat(coeffs, samples[i].first) != Rat(samples[i].second)) {
      res.failure = "consistency";
      res.bad_prime = samples[i].first;
      return res;
    }
  }
  QPoly poly;
  for (std::size_t t = 0; t < coeffs.size(); ++t) {
    if (coeffs[t] == 0) continue;
    if (denominator(coeffs[t]) != 1) {
      res.failure = "integrality";
      return res;
    }
    poly.add_term(static_cast<int>(t), numerator(coeffs[t]));
  }
  res.ok = true;
  res.poly = std::move(poly);
  return res;
}

QPoly interpolate_counting_poly(const std::vector<CountSample>& samples,
                                int degree_bound) {
  FitResult res = try_interpolate(samples, degree_bound);
  if (!res.ok) throw math_error("not polynomial-count (" + res.failure + ")");
  return res.poly;
}

}  // namespace qcs
