#pragma once

#include <cstdint>
#include <random>

#include "hkr/complexes.hpp"

namespace hkr {

/*
 * Seeded generator.  Bounded draws use rejection on the raw 64-bit stream
 * rather than std::uniform_int_distribution, whose output is not fixed
 * across standard library implementations.
 */
class Rng {
 public:
  explicit Rng(uint64_t seed) : gen_(seed) {}
  /* uniform in [0, n), n > 0 */
  uint64_t below(uint64_t n);
  int range(int lo, int hi) { return lo + static_cast<int>(below(static_cast<uint64_t>(hi - lo + 1))); }
  /* uniform in {-2,-1,1,2} */
  Scalar coef();
  template <class T>
  const T& pick(const std::vector<T>& v) { return v[below(v.size())]; }

 private:
  std::mt19937_64 gen_;
};

MultiIndex random_monomial(Rng& rng, int n, int max_deg);
SymElement random_sym(Rng& rng, int n, int max_deg, int terms);
SymElement random_homogeneous(Rng& rng, int n, int d, int terms);
AePair random_ae(Rng& rng, int n, int max_deg, int terms);
BarChain random_bar(Rng& rng, int n, int k, int max_deg, int terms);
KoszulChain random_koszul(Rng& rng, int n, int k, int max_deg, int terms);

}  // namespace hkr
