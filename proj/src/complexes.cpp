#include "hkr/complexes.hpp"

namespace hkr {

BarChain bar_basis(int n, const BarKey& slots, const Scalar& c) {
  if (slots.size() < 2) throw ShapeError("bar basis element needs at least two slots");
  for (const auto& s : slots)
    if (static_cast<int>(s.size()) != n) throw DimensionError("bar slot length != dim");
  BarChain r(n, static_cast<int>(slots.size()) - 2);
  r.add(slots, c);
  return r;
}

BarChain bar_zero(int n, int k) { return BarChain(n, k); }

BarChain bar_middle(int n, const std::vector<MultiIndex>& middle, const Scalar& c) {
  BarKey key;
  key.reserve(middle.size() + 2);
  key.push_back(zero_index(n));
  key.insert(key.end(), middle.begin(), middle.end());
  key.push_back(zero_index(n));
  return bar_basis(n, key, c);
}

BarChain bar_d(const BarChain& c) {
  if (c.level < 1) throw ShapeError("bar_d needs arity >= 1");
  BarChain r(c.dim, c.level - 1);
  for (const auto& [key, coef] : c) {
    for (size_t j = 0; j + 1 < key.size(); ++j) {
      BarKey t;
      t.reserve(key.size() - 1);
      for (size_t i = 0; i < j; ++i) t.push_back(key[i]);
      t.push_back(add_index(key[j], key[j + 1]));
      for (size_t i = j + 2; i < key.size(); ++i) t.push_back(key[i]);
      r.add(t, j % 2 ? -coef : coef);
    }
  }
  return r;
}

BarChain bar_h(const BarChain& c) {
  if (c.level < 0) throw ShapeError("bar_h needs level >= 0");
  BarChain r(c.dim, c.level + 1);
  for (const auto& [key, coef] : c) {
    BarKey t;
    t.reserve(key.size() + 1);
    t.push_back(zero_index(c.dim));
    t.insert(t.end(), key.begin(), key.end());
    r.add(t, coef);
  }
  return r;
}

BarChain bar_h_unit(const SymElement& a) {
  BarChain r(a.dim, 0);
  for (const auto& [k, c] : a) r.add({zero_index(a.dim), k}, c);
  return r;
}

SymElement bar_eps(const BarChain& c) {
  if (c.level != 0) throw ShapeError("augmentation needs arity 0");
  SymElement r(c.dim);
  for (const auto& [key, coef] : c) r.add(add_index(key[0], key[1]), coef);
  return r;
}

BarChain bar_act(const AePair& p, const BarChain& c) {
  if (p.dim != c.dim) throw DimensionError("bar_act: dimension mismatch");
  BarChain r(c.dim, c.level);
  for (const auto& [pk, pc] : p)
    for (const auto& [key, coef] : c) {
      BarKey t = key;
      t.front() = add_index(pk.first, t.front());
      t.back() = add_index(t.back(), pk.second);
      r.add(t, pc * coef);
    }
  return r;
}

KoszulChain koszul_basis(int n, const MultiIndex& a, const MultiIndex& b,
                         const std::vector<int>& wedge, const Scalar& c) {
  if (static_cast<int>(a.size()) != n || static_cast<int>(b.size()) != n)
    throw DimensionError("koszul slot length != dim");
  for (int i : wedge)
    if (i < 0 || i >= n) throw DimensionError("wedge index out of range");
  KoszulChain r(n, static_cast<int>(wedge.size()));
  auto w = canonical_wedge(wedge);
  if (w) r.add({a, b, w->second}, c * w->first);
  return r;
}

KoszulChain koszul_zero(int n, int k) { return KoszulChain(n, k); }

KoszulChain koszul_act(const AePair& p, const KoszulChain& c) {
  if (p.dim != c.dim) throw DimensionError("koszul_act: dimension mismatch");
  KoszulChain r(c.dim, c.level);
  for (const auto& [pk, pc] : p)
    for (const auto& [key, coef] : c)
      r.add({add_index(pk.first, key.a), add_index(key.b, pk.second), key.u}, pc * coef);
  return r;
}

SymElement koszul_eps(const KoszulChain& c) {
  if (c.level != 0) throw ShapeError("augmentation needs degree 0");
  SymElement r(c.dim);
  for (const auto& [key, coef] : c) r.add(add_index(key.a, key.b), coef);
  return r;
}

KoszulChain koszul_h_unit(const SymElement& a) {
  KoszulChain r(a.dim, 0);
  for (const auto& [k, c] : a) r.add({zero_index(a.dim), k, ExtMonomial{}}, c);
  return r;
}

KoszulChain koszul_partial(const KoszulChain& c) {
  if (c.level < 1) throw ShapeError("koszul_partial needs degree >= 1");
  KoszulChain r(c.dim, c.level - 1);
  for (const auto& [key, coef] : c) {
    const auto& idx = key.u.idx;
    for (size_t j = 0; j < idx.size(); ++j) {
      ExtMonomial rest;
      rest.idx.reserve(idx.size() - 1);
      for (size_t i = 0; i < idx.size(); ++i)
        if (i != j) rest.idx.push_back(idx[i]);
      MultiIndex e = unit_index(c.dim, idx[j]);
      Scalar s = j % 2 ? -coef : coef;
      r.add({add_index(e, key.a), key.b, rest}, s);
      r.add({key.a, add_index(e, key.b), rest}, -s);
    }
  }
  return r;
}

KoszulChain koszul_delta(const KoszulChain& c) {
  KoszulChain r(c.dim, c.level + 1);
  for (const auto& [key, coef] : c) {
    for (int i = 0; i < c.dim; ++i) {
      int ai = key.a[static_cast<size_t>(i)];
      if (ai == 0) continue;
      std::vector<int> idx;
      idx.reserve(key.u.idx.size() + 1);
      idx.push_back(i);
      idx.insert(idx.end(), key.u.idx.begin(), key.u.idx.end());
      auto w = canonical_wedge(std::move(idx));
      if (!w) continue;
      r.add({sub_index(key.a, unit_index(c.dim, i)), key.b, w->second},
            coef * ai * w->first);
    }
  }
  return r;
}

TPoly<KoszulKey> koszul_i_t(const KoszulChain& c) {
  TPoly<KoszulKey> r(1, c.dim, c.level);
  for (const auto& [key, coef] : c) {
    int la = degree(key.a);
    for (const auto& b : sub_indices(key.a)) {
      int lb = degree(b);
      r.add_beta_term({0}, 0, la - lb, lb,
                      {sub_index(key.a, b), add_index(b, key.b), key.u},
                      coef * multi_binomial(key.a, b));
    }
  }
  return r;
}

KoszulChain koszul_h(const KoszulChain& c) {
  int k = c.level;
  KoszulChain dc = koszul_delta(c);
  KoszulChain r(c.dim, k + 1);
  /* closed form: integral of t^k t^(l-|b|) (1-t)^|b| is a Beta value */
  for (const auto& [key, coef] : dc) {
    int la = degree(key.a);
    for (const auto& b : sub_indices(key.a)) {
      int lb = degree(b);
      r.add({sub_index(key.a, b), add_index(b, key.b), key.u},
            coef * multi_binomial(key.a, b) * beta_integral(k + la - lb, lb));
    }
  }
  return r;
}

KoszulChain koszul_product(const KoszulChain& x, const KoszulChain& y) {
  if (x.dim != y.dim) throw DimensionError("koszul_product: dimension mismatch");
  KoszulChain r(x.dim, x.level + y.level);
  for (const auto& [kx, cx] : x)
    for (const auto& [ky, cy] : y) {
      std::vector<int> idx = kx.u.idx;
      idx.insert(idx.end(), ky.u.idx.begin(), ky.u.idx.end());
      auto w = canonical_wedge(std::move(idx));
      if (!w) continue;
      r.add({add_index(kx.a, ky.a), add_index(kx.b, ky.b), w->second}, cx * cy * w->first);
    }
  return r;
}

TPoly<KoszulKey> koszul_tproduct(const TPoly<KoszulKey>& x, const TPoly<KoszulKey>& y) {
  int n = x.dim;
  return tpoly_product(x, y, x.level + y.level, [n](const KoszulKey& a, const KoszulKey& b) {
    KoszulChain ka(n, a.u.degree()), kb(n, b.u.degree());
    ka.add(a, 1);
    kb.add(b, 1);
    return koszul_product(ka, kb);
  });
}

}  // namespace hkr
