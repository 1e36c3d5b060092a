#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "qcs/error.hpp"
#include "qcs/exact/gaussian_binomial.hpp"
#include "qcs/exact/interpolate.hpp"
#include "qcs/exact/laurent.hpp"
#include "qcs/exact/matrix.hpp"
#include "qcs/exact/primefield.hpp"

#include <algorithm>
#include <random>
#include <set>

using namespace qcs;

namespace {

// Independent subspace-count oracle: ordered independent k-tuples divided by
// the order of GL_k. Pure counting, shares nothing with the q-binomial
// recurrence or the row-echelon enumerator.
Int subspace_count_oracle(int n, int k, std::uint32_t p) {
  Int num = 1, den = 1;
  Int pn = 1, pk = 1;
  for (int i = 0; i < n; ++i) pn *= p;
  for (int i = 0; i < k; ++i) pk *= p;
  Int pi = 1;
  for (int i = 0; i < k; ++i) {
    num *= pn - pi;
    den *= pk - pi;
    pi *= p;
  }
  return den == 0 ? Int(k == 0 ? 1 : 0) : num / den;
}

// Set-based enumeration for very small spaces: spans of all k-tuples,
// deduplicated as vector sets.
Int subspace_count_bruteforce(int n, int k, std::uint32_t p) {
  const int total = [&] {
    int t = 1;
    for (int i = 0; i < n; ++i) t *= p;
    return t;
  }();
  auto vec_of = [&](int code) {
    std::vector<int> v(n);
    for (int i = 0; i < n; ++i) {
      v[i] = code % p;
      code /= p;
    }
    return v;
  };
  std::set<std::set<std::vector<int>>> spaces;
  std::vector<int> idx(k, 0);
  while (true) {
    // span of the chosen tuple by closing under linear combinations
    std::set<std::vector<int>> span;
    int combos = 1;
    for (int i = 0; i < k; ++i) combos *= p;
    for (int c = 0; c < combos; ++c) {
      std::vector<int> acc(n, 0);
      int cc = c;
      for (int i = 0; i < k; ++i) {
        int coef = cc % p;
        cc /= p;
        std::vector<int> vi = vec_of(idx[i]);
        for (int t = 0; t < n; ++t) acc[t] = (acc[t] + coef * vi[t]) % p;
      }
      span.insert(acc);
    }
    // dimension check: |span| == p^k exactly when the tuple is independent
    int want = 1;
    for (int i = 0; i < k; ++i) want *= p;
    if (static_cast<int>(span.size()) == want) spaces.insert(span);
    int pos = k - 1;
    while (pos >= 0 && idx[pos] == total - 1) idx[pos--] = 0;
    if (pos < 0) break;
    ++idx[pos];
  }
  if (k == 0) return 1;
  return Int(spaces.size());
}

Laurent random_laurent(std::mt19937_64& rng, int max_terms) {
  std::uniform_int_distribution<int> nterms(0, max_terms);
  std::uniform_int_distribution<int> expd(-5, 5);
  std::uniform_int_distribution<int> coeffd(-9, 9);
  Laurent l;
  int k = nterms(rng);
  for (int i = 0; i < k; ++i) l.add_term(expd(rng), Int(coeffd(rng)));
  return l;
}

}  // namespace

TEST_CASE("gaussian binomial examples") {
  QPoly q_plus_1;
  q_plus_1.add_term(0, 1);
  q_plus_1.add_term(1, 1);
  CHECK(gaussian_binomial(2, 1) == q_plus_1);
  CHECK(gaussian_binomial(3, 0) == QPoly::one());
  CHECK(gaussian_binomial(4, 5) == QPoly::zero());
}

TEST_CASE("gaussian binomial matches subspace-count oracles") {
  for (int n = 0; n <= 5; ++n)
    for (int k = 0; k <= n; ++k)
      for (std::uint32_t p : {2u, 3u}) {
        Int expected = subspace_count_oracle(n, k, p);
        CHECK(gaussian_binomial(n, k).eval(Int(p)) == expected);
        if (n <= 3) CHECK(subspace_count_bruteforce(n, k, p) == expected);
      }
}

TEST_CASE("interpolation examples") {
  QPoly q_plus_1;
  q_plus_1.add_term(0, 1);
  q_plus_1.add_term(1, 1);

  CHECK(interpolate_counting_poly({{2, 3}, {3, 4}, {5, 6}}, 1) == q_plus_1);

  // derived from the Gaussian binomial oracle at primes 2, 3, 5
  std::vector<CountSample> samples;
  for (std::uint32_t p : {2u, 3u, 5u})
    samples.push_back({p, gaussian_binomial(2, 1).eval(Int(p))});
  CHECK(interpolate_counting_poly(samples, 1) == q_plus_1);

  CHECK_THROWS_WITH_AS(interpolate_counting_poly({{2, 3}, {3, 4}, {5, 7}}, 1),
                       "not polynomial-count (consistency)", math_error);
}

TEST_CASE("interpolation inverts evaluation on random integer polynomials") {
  std::mt19937_64 rng(7001);
  std::uniform_int_distribution<int> coeffd(-20, 20);
  std::uniform_int_distribution<int> degd(0, 6);
  for (int trial = 0; trial < 50; ++trial) {
    int deg = degd(rng);
    QPoly poly;
    for (int e = 0; e <= deg; ++e) poly.add_term(e, Int(coeffd(rng)));
    int bound = deg;
    auto primes = first_primes(bound + 2);
    std::vector<CountSample> samples;
    for (auto p : primes) samples.push_back({p, poly.eval(Int(p))});
    CHECK(interpolate_counting_poly(samples, bound) == poly);
  }
}

TEST_CASE("integer matrix inverse") {
  IMat rot{{Int(0), Int(1)}, {Int(-1), Int(0)}};
  QMat inv = invert_integer_matrix(rot);
  CHECK(inv.at(0, 0) == 0);
  CHECK(inv.at(0, 1) == -1);
  CHECK(inv.at(1, 0) == 1);
  CHECK(inv.at(1, 1) == 0);

  IMat id4 = IMat::identity(4);
  CHECK(to_integral(invert_integer_matrix(id4), "x") == id4);

  // extended exchange matrix of the first worked example
  IMat bcirc{{Int(0), Int(1), Int(-1), Int(0)},
             {Int(-1), Int(0), Int(1), Int(-1)},
             {Int(1), Int(-1), Int(0), Int(0)},
             {Int(0), Int(1), Int(0), Int(0)}};
  QMat binv = invert_integer_matrix(bcirc);
  QMat prod = binv * to_rational(bcirc);
  CHECK(prod == QMat::identity(4));

  IMat zero(3, 3);
  CHECK_THROWS_WITH_AS(invert_integer_matrix(zero), "matrix not invertible",
                       math_error);
}

TEST_CASE("prime field nullspace") {
  FpMat zero(3, 2, 2);
  CHECK(nullspace(zero).nullity == 2);

  FpMat id(5, 3, 3);
  for (int i = 0; i < 3; ++i) id.at(i, i) = 1;
  CHECK(nullspace(id).nullity == 0);

  FpMat dep(3, 2, 2);
  dep.at(0, 0) = 1;
  dep.at(0, 1) = 1;
  dep.at(1, 0) = 2;
  dep.at(1, 1) = 2;
  auto res = nullspace(dep);
  CHECK(res.nullity == 1);
  // basis vectors actually lie in the kernel
  for (const auto& v : res.basis) {
    for (int i = 0; i < dep.rows(); ++i) {
      std::uint64_t acc = 0;
      for (int j = 0; j < dep.cols(); ++j) acc += std::uint64_t(dep.at(i, j)) * v[j];
      CHECK(acc % dep.modulus() == 0);
    }
  }
}

TEST_CASE("column solver") {
  IMat b{{Int(0), Int(1)}, {Int(-1), Int(0)}, {Int(1), Int(-1)}, {Int(0), Int(1)}};
  ColumnSolver solver(b);
  CHECK(solver.rank() == 2);
  ExpVec e;
  CHECK(solver.solve_integral({0, -1, 1, 0}, e));
  CHECK(e == ExpVec{1, 0});
  CHECK(solver.solve_integral({1, -1, 0, 1}, e));
  CHECK(e == ExpVec{1, 1});
  CHECK_FALSE(solver.solve_integral({1, 0, 0, 0}, e));
}

TEST_CASE("Laurent ring properties") {
  std::mt19937_64 rng(4242);
  for (int trial = 0; trial < 200; ++trial) {
    Laurent a = random_laurent(rng, 4);
    Laurent b = random_laurent(rng, 4);
    Laurent c = random_laurent(rng, 4);
    CHECK(a * b == b * a);
    CHECK((a * b) * c == a * (b * c));
    CHECK(a * (b + c) == a * b + a * c);
    if (!a.is_zero() && !b.is_zero()) CHECK_FALSE((a * b).is_zero());
  }
}

TEST_CASE("Laurent exact division") {
  std::mt19937_64 rng(999);
  for (int trial = 0; trial < 200; ++trial) {
    Laurent a = random_laurent(rng, 4);
    Laurent q = random_laurent(rng, 4);
    if (a.is_zero()) continue;
    Laurent prod = a * q;
    Laurent got;
    REQUIRE(prod.try_divide(a, got));
    CHECK(got == q);
  }
  Laurent vp1 = Laurent::one() + Laurent::v_power(1);
  Laurent one = Laurent::one();
  Laurent out;
  CHECK_FALSE(one.try_divide(vp1, out));
}

TEST_CASE("Laurent bar and q-membership") {
  Laurent l;
  l.add_term(-1, 1);
  l.add_term(1, 1);
  CHECK(l.bar() == l);
  CHECK_FALSE(l.in_q_poly());
  Laurent m;
  m.add_term(0, 2);
  m.add_term(2, 3);
  CHECK(m.in_q_poly());
  CHECK(QPoly::from_laurent(m).eval(2) == 14);
}
