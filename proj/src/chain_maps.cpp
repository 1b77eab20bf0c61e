#include "hkr/chain_maps.hpp"

#include <algorithm>

namespace hkr {

static int permutation_sign(const std::vector<int>& p) {
  int inv = 0;
  for (size_t i = 0; i < p.size(); ++i)
    for (size_t j = i + 1; j < p.size(); ++j)
      if (p[i] > p[j]) ++inv;
  return inv % 2 ? -1 : 1;
}

BarChain F(const KoszulChain& c) {
  int k = c.level;
  BarChain r(c.dim, k);
  for (const auto& [key, coef] : c) {
    std::vector<int> perm = key.u.idx;  // ascending, so next_permutation visits all
    do {
      BarKey t;
      t.reserve(static_cast<size_t>(k) + 2);
      t.push_back(key.a);
      for (int i : perm) t.push_back(unit_index(c.dim, i));
      t.push_back(key.b);
      r.add(t, coef * permutation_sign(perm));
    } while (std::next_permutation(perm.begin(), perm.end()));
  }
  return r;
}

TPoly<KoszulKey> G_integrand(int n, const std::vector<MultiIndex>& middle) {
  int k = static_cast<int>(middle.size());
  /* wedge lists stay in slot order here and are canonicalised after integration */
  TPoly<KoszulKey> cur(k, n, k);
  cur.add(std::vector<int>(static_cast<size_t>(k), 0), {zero_index(n), zero_index(n), {}}, 1);
  for (int s = 0; s < k; ++s) {
    const MultiIndex& a = middle[static_cast<size_t>(s)];
    TPoly<KoszulKey> next(k, n, k);
    for (const auto& [t, coef] : cur) {
      for (int i = 0; i < n; ++i) {
        int ai = a[static_cast<size_t>(i)];
        if (ai == 0) continue;
        MultiIndex red = sub_index(a, unit_index(n, i));
        int lr = degree(red);
        for (const auto& b : sub_indices(red)) {
          int lb = degree(b);
          KoszulKey key{add_index(t.second.a, sub_index(red, b)), add_index(t.second.b, b),
                        t.second.u};
          key.u.idx.push_back(i);
          next.add_beta_term(t.first, s, lr - lb, lb, key, coef * ai * multi_binomial(red, b));
        }
      }
    }
    cur = std::move(next);
  }
  return cur;
}

static KoszulChain canonical_wedges(const Lin<KoszulKey>& raw, int n, int k) {
  KoszulChain r(n, k);
  for (const auto& [key, coef] : raw) {
    auto w = canonical_wedge(key.u.idx);
    if (w) r.add({key.a, key.b, w->second}, coef * w->first);
  }
  return r;
}

static KoszulChain G_middle_pure(int n, const std::vector<MultiIndex>& middle) {
  int k = static_cast<int>(middle.size());
  return canonical_wedges(simplex_integrate(G_integrand(n, middle)), n, k);
}

static AePair outer_pair(const BarKey& key) {
  AePair p(static_cast<int>(key.front().size()));
  p.add({key.front(), key.back()}, 1);
  return p;
}

static std::vector<MultiIndex> middle_of(const BarKey& key) {
  return {key.begin() + 1, key.end() - 1};
}

KoszulChain G(const BarChain& c) {
  int k = c.level;
  KoszulChain r(c.dim, k);
  for (const auto& [key, coef] : c) {
    if (k == 0) {
      r.add({key[0], key[1], {}}, coef);
      continue;
    }
    r.axpy(coef, koszul_act(outer_pair(key), G_middle_pure(c.dim, middle_of(key))));
  }
  return r;
}

BarChain omega(const BarChain& c) { return F(G(c)); }

BarMap ae_linearize(BarMap phi) {
  return [phi](const BarChain& c) {
    BarChain r;
    bool first = true;
    for (const auto& [key, coef] : c) {
      BarChain img = phi(bar_middle(c.dim, middle_of(key)));
      if (first) {
        r = BarChain(img.dim, img.level);
        first = false;
      }
      r.axpy(coef, bar_act(outer_pair(key), img));
    }
    if (first) {
      /* zero input: probe the level of phi on a unit middle */
      std::vector<MultiIndex> ones(static_cast<size_t>(c.level), zero_index(c.dim));
      BarChain img = phi(bar_middle(c.dim, ones));
      r = BarChain(img.dim, img.level);
    }
    return r;
  };
}

const KoszulChain& Resolution::G_middle(const std::vector<MultiIndex>& middle) const {
  {
    std::lock_guard<std::mutex> lk(mu_);
    auto it = g_memo_.find(middle);
    if (it != g_memo_.end()) return it->second;
  }
  KoszulChain v = G_middle_pure(n_, middle);
  std::lock_guard<std::mutex> lk(mu_);
  return g_memo_.try_emplace(middle, std::move(v)).first->second;
}

const BarChain& Resolution::omega_middle(const std::vector<MultiIndex>& middle) const {
  {
    std::lock_guard<std::mutex> lk(mu_);
    auto it = omega_memo_.find(middle);
    if (it != omega_memo_.end()) return it->second;
  }
  BarChain v = F(G_middle(middle));
  std::lock_guard<std::mutex> lk(mu_);
  return omega_memo_.try_emplace(middle, std::move(v)).first->second;
}

const BarChain& Resolution::s_middle(const std::vector<MultiIndex>& middle) const {
  {
    std::lock_guard<std::mutex> lk(mu_);
    auto it = s_memo_.find(middle);
    if (it != s_memo_.end()) return it->second;
  }
  int k = static_cast<int>(middle.size());
  BarChain v(n_, k + 1);
  if (k > 0) {
    BarChain c = bar_middle(n_, middle);
    BarChain x = c - omega_middle(middle);
    x -= s(bar_d(c));
    v = bar_h(x);
  }
  std::lock_guard<std::mutex> lk(mu_);
  return s_memo_.try_emplace(middle, std::move(v)).first->second;
}

KoszulChain Resolution::G(const BarChain& c) const {
  if (c.dim != n_) throw DimensionError("Resolution: dimension mismatch");
  if (c.level == 0) return hkr::G(c);
  KoszulChain r(n_, c.level);
  for (const auto& [key, coef] : c)
    r.axpy(coef, koszul_act(outer_pair(key), G_middle(middle_of(key))));
  return r;
}

BarChain Resolution::omega(const BarChain& c) const {
  if (c.dim != n_) throw DimensionError("Resolution: dimension mismatch");
  if (c.level == 0) return c;
  BarChain r(n_, c.level);
  for (const auto& [key, coef] : c)
    r.axpy(coef, bar_act(outer_pair(key), omega_middle(middle_of(key))));
  return r;
}

BarChain Resolution::s(const BarChain& c) const {
  if (c.dim != n_) throw DimensionError("Resolution: dimension mismatch");
  BarChain r(n_, c.level + 1);
  if (c.level == 0) return r;
  for (const auto& [key, coef] : c)
    r.axpy(coef, bar_act(outer_pair(key), s_middle(middle_of(key))));
  return r;
}

}  // namespace hkr
