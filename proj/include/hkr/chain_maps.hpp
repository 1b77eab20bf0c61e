#pragma once

#include <functional>
#include <map>
#include <mutex>
#include <vector>

#include "hkr/complexes.hpp"

namespace hkr {

/* Koszul -> Bar, antisymmetrised insertion of the wedge factors */
BarChain F(const KoszulChain& c);
/* Bar -> Koszul, simplex-integrated i o delta */
KoszulChain G(const BarChain& c);
/* G(1 (x) u_1 (x) ... (x) u_k (x) 1) as a t-polynomial before integration */
TPoly<KoszulKey> G_integrand(int n, const std::vector<MultiIndex>& middle);
BarChain omega(const BarChain& c);

using BarMap = std::function<BarChain(const BarChain&)>;
/* v (x) alpha (x) w -> (v (x) w) * phi(1 (x) alpha (x) 1) */
BarMap ae_linearize(BarMap phi);

/*
 * Memoising evaluator for G, Omega = F o G and the homotopy s on one
 * ambient dimension.  Caches are keyed on middle tuples; lookups and
 * inserts are mutex-guarded, so sharing an instance between threads
 * is safe and gives identical values.
 */
class Resolution {
 public:
  explicit Resolution(int n) : n_(n) {}
  int dim() const { return n_; }

  KoszulChain G(const BarChain& c) const;
  BarChain omega(const BarChain& c) const;
  /* s_k for a level-k chain, result has level k+1 */
  BarChain s(const BarChain& c) const;

  const KoszulChain& G_middle(const std::vector<MultiIndex>& middle) const;
  const BarChain& omega_middle(const std::vector<MultiIndex>& middle) const;
  const BarChain& s_middle(const std::vector<MultiIndex>& middle) const;

 private:
  int n_;
  mutable std::mutex mu_;
  mutable std::map<std::vector<MultiIndex>, KoszulChain> g_memo_;
  mutable std::map<std::vector<MultiIndex>, BarChain> omega_memo_;
  mutable std::map<std::vector<MultiIndex>, BarChain> s_memo_;
};

}  // namespace hkr
