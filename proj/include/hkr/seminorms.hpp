#pragma once

#include <map>
#include <string>
#include <vector>

#include "hkr/complexes.hpp"
#include "hkr/random.hpp"

namespace hkr {

/* c^k * sum |coef|; w must be homogeneous of degree k */
Scalar pnorm_k(const Scalar& c, const SymElement& w, int k);
/* sum over graded components */
Scalar pfrak(const Scalar& c, const SymElement& w);

struct TruncatedSeries {
  int order = 0;
  int dim = 0;
  /* degree -> homogeneous component, degrees 0..order */
  std::map<int, SymElement> comps;
  SymElement total() const;
};
TruncatedSeries truncate(const SymElement& w, int order);
TruncatedSeries series_mul(const TruncatedSeries& a, const TruncatedSeries& b);
Scalar pfrak(const Scalar& c, const TruncatedSeries& s);
/* sum_{k <= N} u^k / k!; u must have degree 1 */
TruncatedSeries series_exp(const SymElement& u, int N);
/* sum_{k <= N} x^k / k! */
Scalar exp_partial_sum(const Scalar& x, int N);

/* coefficient tensor in V^{(x) k}, keys are index words */
struct Tensor {
  int dim = 0;
  int rank = 0;
  std::map<std::vector<int>, Scalar> coef;
};
/* e_{i1} v ... v e_{ik} expanded as (1/k!) sum over permutations of the word */
Tensor sym_to_tensor(const SymElement& w, int k);
Scalar tensor_norm(const Scalar& c, const Tensor& t);
Tensor sym_projector(const Tensor& t);
Tensor alt_projector(const Tensor& t);

/* seminorms on chains: c^(total degree) per basis element, wedge factors count 1 each */
Scalar koszul_norm(const Scalar& c, const KoszulChain& x);
Scalar bar_norm(const Scalar& c, const BarChain& x);

struct BoundEntry {
  std::string map;
  int k = 0;
  int samples = 0;
  Scalar max_ratio = 0;
  int argmax = -1;
  Scalar bound = 0;
  bool pass = true;
};
/*
 * Observed seminorm ratios against the proven constants for F, the Koszul
 * differential, Sym, Alt, integral t^k i_t and delta (rescaled to 2c).
 * Every sample ratio is compared; the entry keeps the largest.
 */
std::vector<BoundEntry> operator_bound_report(Rng& rng, int n, int max_k, int max_deg, int samples,
                                              const Scalar& c);

}  // namespace hkr
