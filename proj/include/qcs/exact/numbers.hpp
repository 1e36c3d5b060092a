#pragma once

#include <boost/multiprecision/cpp_int.hpp>

#include <cstdint>
#include <string>
#include <vector>

namespace qcs {

using Int = boost::multiprecision::cpp_int;
using Rat = boost::multiprecision::cpp_rational;

// Exponent vectors live in Z^m with small entries.
using ExpVec = std::vector<int>;

inline ExpVec unit_vec(int m, int i) {
  ExpVec e(m, 0);
  e[i] = 1;
  return e;
}

inline ExpVec vec_add(const ExpVec& a, const ExpVec& b) {
  ExpVec r(a.size());
  for (std::size_t i = 0; i < a.size(); ++i) r[i] = a[i] + b[i];
  return r;
}

inline ExpVec vec_sub(const ExpVec& a, const ExpVec& b) {
  ExpVec r(a.size());
  for (std::size_t i = 0; i < a.size(); ++i) r[i] = a[i] - b[i];
  return r;
}

// The first `count` primes, smallest first.
std::vector<std::uint32_t> first_primes(int count);

// Deterministic seed derivation (splitmix-style mixing).
std::uint64_t mix_seed(std::uint64_t seed, std::uint64_t tag);
std::uint64_t mix_seed(std::uint64_t seed, const std::string& tag);

}  // namespace qcs
