#include "hkr/algebra.hpp"

#include <algorithm>
#include <numeric>

namespace hkr {

int degree(const MultiIndex& a) { return std::accumulate(a.begin(), a.end(), 0); }

MultiIndex zero_index(int n) { return MultiIndex(static_cast<size_t>(n), 0); }

MultiIndex unit_index(int n, int i) {
  MultiIndex e = zero_index(n);
  e.at(static_cast<size_t>(i)) = 1;
  return e;
}

MultiIndex add_index(const MultiIndex& a, const MultiIndex& b) {
  if (a.size() != b.size()) throw DimensionError("multi-index length mismatch");
  MultiIndex r(a.size());
  for (size_t i = 0; i < a.size(); ++i) r[i] = a[i] + b[i];
  return r;
}

MultiIndex sub_index(const MultiIndex& a, const MultiIndex& b) {
  if (a.size() != b.size()) throw DimensionError("multi-index length mismatch");
  MultiIndex r(a.size());
  for (size_t i = 0; i < a.size(); ++i) {
    r[i] = a[i] - b[i];
    if (r[i] < 0) throw std::invalid_argument("negative exponent in sub_index");
  }
  return r;
}

bool index_leq(const MultiIndex& b, const MultiIndex& a) {
  for (size_t i = 0; i < a.size(); ++i)
    if (b[i] > a[i]) return false;
  return true;
}

Scalar multi_binomial(const MultiIndex& a, const MultiIndex& b) {
  Scalar r = 1;
  for (size_t i = 0; i < a.size(); ++i) r *= binomial(a[i], b[i]);
  return r;
}

std::vector<MultiIndex> sub_indices(const MultiIndex& a) {
  std::vector<MultiIndex> out;
  MultiIndex b(a.size(), 0);
  while (true) {
    out.push_back(b);
    size_t i = a.size();
    while (i > 0 && b[i - 1] == a[i - 1]) {
      b[i - 1] = 0;
      --i;
    }
    if (i == 0) return out;
    ++b[i - 1];
  }
}

static void compositions(int n, int d, size_t pos, MultiIndex& cur,
                         std::vector<MultiIndex>& out) {
  if (pos + 1 == static_cast<size_t>(n)) {
    cur[pos] = d;
    out.push_back(cur);
    return;
  }
  for (int v = d; v >= 0; --v) {
    cur[pos] = v;
    compositions(n, d - v, pos + 1, cur, out);
  }
}

std::vector<MultiIndex> monomials_of_degree(int n, int d) {
  std::vector<MultiIndex> out;
  if (n <= 0) {
    if (d == 0) out.push_back({});
    return out;
  }
  MultiIndex cur = zero_index(n);
  compositions(n, d, 0, cur, out);
  return out;
}

std::vector<MultiIndex> monomials_upto(int n, int d) {
  std::vector<MultiIndex> out;
  for (int k = 0; k <= d; ++k) {
    auto m = monomials_of_degree(n, k);
    out.insert(out.end(), m.begin(), m.end());
  }
  return out;
}

std::optional<std::pair<int, ExtMonomial>> canonical_wedge(std::vector<int> idx) {
  int sign = 1;
  /* insertion sort counting transpositions */
  for (size_t i = 1; i < idx.size(); ++i) {
    for (size_t j = i; j > 0 && idx[j - 1] > idx[j]; --j) {
      std::swap(idx[j - 1], idx[j]);
      sign = -sign;
    }
  }
  for (size_t i = 1; i < idx.size(); ++i)
    if (idx[i] == idx[i - 1]) return std::nullopt;
  return std::make_pair(sign, ExtMonomial{std::move(idx)});
}

SymElement sym_zero(int n) { return SymElement(n); }

SymElement sym_one(int n) { return sym_monomial(n, zero_index(n)); }

SymElement sym_monomial(int n, const MultiIndex& a, const Scalar& c) {
  if (static_cast<int>(a.size()) != n) throw DimensionError("monomial length != dim");
  SymElement r(n);
  r.add(a, c);
  return r;
}

SymElement sym_var(int n, int i) { return sym_monomial(n, unit_index(n, i)); }

SymElement sym_mul(const SymElement& a, const SymElement& b) {
  if (a.dim != b.dim) throw DimensionError("sym_mul: dimension mismatch");
  SymElement r(a.dim);
  for (const auto& [ka, ca] : a)
    for (const auto& [kb, cb] : b) r.add(add_index(ka, kb), ca * cb);
  return r;
}

SymElement sym_mul_monomial(const MultiIndex& a, const SymElement& b) {
  SymElement r(b.dim);
  for (const auto& [kb, cb] : b) r.add(add_index(a, kb), cb);
  return r;
}

int sym_max_degree(const SymElement& a) {
  int d = -1;
  for (const auto& [k, c] : a) d = std::max(d, degree(k));
  return d;
}

bool sym_is_homogeneous(const SymElement& a, int d) {
  for (const auto& [k, c] : a)
    if (degree(k) != d) return false;
  return true;
}

std::vector<std::pair<int, SymElement>> grade(const SymElement& a) {
  std::map<int, SymElement> parts;
  for (const auto& [k, c] : a) {
    auto it = parts.try_emplace(degree(k), SymElement(a.dim)).first;
    it->second.add(k, c);
  }
  return {parts.begin(), parts.end()};
}

ExtElement ext_basis(int n, const std::vector<int>& idx, const Scalar& c) {
  for (int i : idx)
    if (i < 0 || i >= n) throw DimensionError("wedge index out of range");
  ExtElement r(n);
  auto w = canonical_wedge(idx);
  if (w) r.add(w->second, c * w->first);
  return r;
}

ExtElement wedge_mul(const ExtElement& u, const ExtElement& v) {
  if (u.dim != v.dim) throw DimensionError("wedge_mul: dimension mismatch");
  ExtElement r(u.dim);
  for (const auto& [ku, cu] : u)
    for (const auto& [kv, cv] : v) {
      std::vector<int> idx = ku.idx;
      idx.insert(idx.end(), kv.idx.begin(), kv.idx.end());
      auto w = canonical_wedge(std::move(idx));
      if (w) r.add(w->second, cu * cv * w->first);
    }
  return r;
}

AePair ae_tensor(const SymElement& a, const SymElement& b) {
  if (a.dim != b.dim) throw DimensionError("ae_tensor: dimension mismatch");
  AePair r(a.dim);
  for (const auto& [ka, ca] : a)
    for (const auto& [kb, cb] : b) r.add({ka, kb}, ca * cb);
  return r;
}

AePair ae_one(int n) { return ae_tensor(sym_one(n), sym_one(n)); }

AePair ae_mul(const AePair& p, const AePair& q) {
  if (p.dim != q.dim) throw DimensionError("ae_mul: dimension mismatch");
  AePair r(p.dim);
  for (const auto& [kp, cp] : p)
    for (const auto& [kq, cq] : q)
      r.add({add_index(kp.first, kq.first), add_index(kq.second, kp.second)}, cp * cq);
  return r;
}

std::string format_index(const std::vector<int>& a) {
  std::string s = "[";
  for (size_t i = 0; i < a.size(); ++i) {
    if (i) s += ",";
    s += std::to_string(a[i]);
  }
  return s + "]";
}

}  // namespace hkr
