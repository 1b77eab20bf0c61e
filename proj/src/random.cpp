#include "hkr/random.hpp"

#include <algorithm>
#include <limits>

namespace hkr {

uint64_t Rng::below(uint64_t n) {
  uint64_t lim = std::numeric_limits<uint64_t>::max() - std::numeric_limits<uint64_t>::max() % n;
  uint64_t x;
  do x = gen_();
  while (x >= lim);
  return x % n;
}

Scalar Rng::coef() {
  static const int vals[] = {-2, -1, 1, 2};
  return vals[below(4)];
}

MultiIndex random_monomial(Rng& rng, int n, int max_deg) {
  int d = rng.range(0, max_deg);
  MultiIndex a = zero_index(n);
  for (int j = 0; j < d; ++j) ++a[rng.below(static_cast<uint64_t>(n))];
  return a;
}

SymElement random_sym(Rng& rng, int n, int max_deg, int terms) {
  SymElement r(n);
  for (int j = 0; j < terms; ++j) r.add(random_monomial(rng, n, max_deg), rng.coef());
  return r;
}

SymElement random_homogeneous(Rng& rng, int n, int d, int terms) {
  auto basis = monomials_of_degree(n, d);
  SymElement r(n);
  for (int j = 0; j < terms; ++j) r.add(rng.pick(basis), rng.coef());
  return r;
}

AePair random_ae(Rng& rng, int n, int max_deg, int terms) {
  AePair r(n);
  for (int j = 0; j < terms; ++j)
    r.add({random_monomial(rng, n, max_deg), random_monomial(rng, n, max_deg)}, rng.coef());
  return r;
}

BarChain random_bar(Rng& rng, int n, int k, int max_deg, int terms) {
  BarChain r(n, k);
  for (int j = 0; j < terms; ++j) {
    BarKey key;
    for (int s = 0; s < k + 2; ++s) key.push_back(random_monomial(rng, n, max_deg));
    r.add(key, rng.coef());
  }
  return r;
}

KoszulChain random_koszul(Rng& rng, int n, int k, int max_deg, int terms) {
  KoszulChain r(n, k);
  if (k > n) return r;
  for (int j = 0; j < terms; ++j) {
    std::vector<int> pool(static_cast<size_t>(n));
    for (int i = 0; i < n; ++i) pool[static_cast<size_t>(i)] = i;
    /* partial Fisher-Yates for k distinct indices */
    for (int i = 0; i < k; ++i)
      std::swap(pool[static_cast<size_t>(i)],
                pool[static_cast<size_t>(i) + rng.below(static_cast<uint64_t>(n - i))]);
    std::vector<int> idx(pool.begin(), pool.begin() + k);
    std::sort(idx.begin(), idx.end());
    r.add({random_monomial(rng, n, max_deg), random_monomial(rng, n, max_deg), ExtMonomial{idx}},
          rng.coef());
  }
  return r;
}

}  // namespace hkr
