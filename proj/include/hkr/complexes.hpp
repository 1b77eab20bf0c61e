#pragma once

#include <compare>
#include <vector>

#include "hkr/algebra.hpp"
#include "hkr/tpoly.hpp"

namespace hkr {

/* x_0 (x) x_1 (x) ... (x) x_{k+1}, level = k */
using BarKey = std::vector<MultiIndex>;
using BarChain = Lin<BarKey>;

/* alpha (x) beta (x) u, level = wedge degree */
struct KoszulKey {
  MultiIndex a;
  MultiIndex b;
  ExtMonomial u;
  auto operator<=>(const KoszulKey&) const = default;
};
using KoszulChain = Lin<KoszulKey>;

BarChain bar_basis(int n, const BarKey& slots, const Scalar& c = 1);
BarChain bar_zero(int n, int k);
BarChain bar_d(const BarChain& c);
/* h_k: prepend 1, level k >= 0 */
BarChain bar_h(const BarChain& c);
/* h_{-1}: a -> 1 (x) a */
BarChain bar_h_unit(const SymElement& a);
SymElement bar_eps(const BarChain& c);
BarChain bar_act(const AePair& p, const BarChain& c);
/* x_0 (x) ... (x) x_{k+1} -> x_0 * ... * x_{k+1}; linear helper for tests */
BarChain bar_middle(int n, const std::vector<MultiIndex>& middle, const Scalar& c = 1);

KoszulChain koszul_basis(int n, const MultiIndex& a, const MultiIndex& b,
                         const std::vector<int>& wedge, const Scalar& c = 1);
KoszulChain koszul_zero(int n, int k);
/* left factor on slot 1, right factor on slot 2 */
KoszulChain koszul_act(const AePair& p, const KoszulChain& c);
SymElement koszul_eps(const KoszulChain& c);
KoszulChain koszul_h_unit(const SymElement& a);
KoszulChain koszul_partial(const KoszulChain& c);
KoszulChain koszul_delta(const KoszulChain& c);
TPoly<KoszulKey> koszul_i_t(const KoszulChain& c);
/* h_k = integral_0^1 t^k (i_t o delta) dt, k = degree of c */
KoszulChain koszul_h(const KoszulChain& c);
/* (a (x) b (x) u)(a' (x) b' (x) u') = a a' (x) b b' (x) u ^ u' */
KoszulChain koszul_product(const KoszulChain& x, const KoszulChain& y);
TPoly<KoszulKey> koszul_tproduct(const TPoly<KoszulKey>& x, const TPoly<KoszulKey>& y);

}  // namespace hkr
