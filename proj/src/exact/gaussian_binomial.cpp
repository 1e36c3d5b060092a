#include "qcs/exact/gaussian_binomial.hpp"

#include "qcs/error.hpp"

#include <map>
#include <mutex>
#include <utility>

namespace qcs {

QPoly gaussian_binomial(int n, int k) {
  if (n < 0 || k < 0) throw math_error("gaussian_binomial needs nonnegative arguments");
  if (k > n) return QPoly::zero();
  if (k == 0 || k == n) return QPoly::one();
  // [n k]_q = [n-1 k-1]_q + q^k [n-1 k]_q, memoized.
  static std::map<std::pair<int, int>, QPoly> cache;
  static std::mutex* mu = new std::mutex;
  {
    std::lock_guard<std::mutex> lock(*mu);
    auto it = cache.find({n, k});
    if (it != cache.end()) return it->second;
  }
  QPoly a = gaussian_binomial(n - 1, k - 1);
  QPoly b = gaussian_binomial(n - 1, k);
  QPoly qk;
  qk.add_term(k, Int(1));
  QPoly r = a + qk * b;
  {
    std::lock_guard<std::mutex> lock(*mu);
    cache.emplace(std::make_pair(n, k), r);
  }
  return r;
}

}  // namespace qcs
