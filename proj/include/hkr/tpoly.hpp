#pragma once

#include <map>
#include <utility>
#include <vector>

#include "hkr/lin.hpp"

namespace hkr {

/*
 * Polynomial in t_1..t_m with chain-basis payloads:  sum c * t^e * key.
 * Kept fully expanded in the monomials t^e.
 */
template <class K>
class TPoly {
 public:
  using TExp = std::vector<int>;
  using Term = std::pair<TExp, K>;

  int vars = 0;
  int dim = 0;
  int level = 0;

  TPoly() = default;
  TPoly(int m, int n, int lvl = 0) : vars(m), dim(n), level(lvl) {}

  void add(const TExp& e, const K& k, const Scalar& c) {
    if (sgn(c) == 0) return;
    auto [it, fresh] = terms_.try_emplace(Term{e, k}, c);
    if (!fresh) {
      it->second += c;
      if (sgn(it->second) == 0) terms_.erase(it);
    }
  }

  /* add c * t^base * t_var^m * (1 - t_var)^s * key, expanding (1 - t)^s */
  void add_beta_term(const TExp& base, int var, int m, int s, const K& k, const Scalar& c) {
    for (int j = 0; j <= s; ++j) {
      TExp e = base;
      e[static_cast<size_t>(var)] += m + j;
      Scalar w = binomial(s, j) * c;
      if (j % 2) w = -w;
      add(e, k, w);
    }
  }

  /* embed a chain as a t-constant */
  static TPoly constant(int m, const Lin<K>& x) {
    TPoly r(m, x.dim, x.level);
    TExp z(static_cast<size_t>(m), 0);
    for (const auto& [k, c] : x) r.add(z, k, c);
    return r;
  }

  TPoly& operator+=(const TPoly& o) {
    for (const auto& [t, c] : o.terms_) add(t.first, t.second, c);
    return *this;
  }
  TPoly& operator-=(const TPoly& o) {
    for (const auto& [t, c] : o.terms_) add(t.first, t.second, -c);
    return *this;
  }
  friend TPoly operator+(TPoly a, const TPoly& b) { return a += b; }
  friend TPoly operator-(TPoly a, const TPoly& b) { return a -= b; }
  friend bool operator==(const TPoly& a, const TPoly& b) {
    return a.vars == b.vars && a.terms_ == b.terms_;
  }

  bool is_zero() const { return terms_.empty(); }
  size_t size() const { return terms_.size(); }
  const std::map<Term, Scalar>& terms() const { return terms_; }
  auto begin() const { return terms_.begin(); }
  auto end() const { return terms_.end(); }

 private:
  std::map<Term, Scalar> terms_;
};

/*
 * Integral over the ordered simplex 1 >= t_1 >= ... >= t_m >= 0: integrate
 * t_m from 0 to t_{m-1}, substitute, and continue down to t_1 in [0,1].
 * m = 0 returns the payload unchanged.
 */
template <class K>
Lin<K> simplex_integrate(const TPoly<K>& p) {
  Lin<K> r(p.dim, p.level);
  for (const auto& [t, c] : p) {
    const auto& e = t.first;
    Scalar w = c;
    int carry = 0;
    for (size_t j = e.size(); j > 0; --j) {
      int pw = e[j - 1] + carry;
      w /= (pw + 1);
      carry = pw + 1;
    }
    r.add(t.second, w);
  }
  return r;
}

/* integral over [0,1] of t^extra * p(t), single variable */
template <class K>
Lin<K> unit_integrate(const TPoly<K>& p, int extra = 0) {
  if (p.vars != 1) throw ShapeError("unit_integrate needs a one-variable TPoly");
  Lin<K> r(p.dim, p.level);
  for (const auto& [t, c] : p) r.add(t.second, c / Scalar(t.first[0] + extra + 1));
  return r;
}

/* formal partial derivative in t_var */
template <class K>
TPoly<K> t_derivative(const TPoly<K>& p, int var) {
  TPoly<K> r(p.vars, p.dim, p.level);
  for (const auto& [t, c] : p) {
    int m = t.first[static_cast<size_t>(var)];
    if (m == 0) continue;
    auto e = t.first;
    --e[static_cast<size_t>(var)];
    r.add(e, t.second, c * m);
  }
  return r;
}

/* apply a linear map on payloads, keeping t-exponents */
template <class K, class K2, class F>
TPoly<K2> map_payload(const TPoly<K>& p, int level, F f) {
  TPoly<K2> r(p.vars, p.dim, level);
  for (const auto& [t, c] : p)
    for (const auto& [k2, c2] : f(t.second)) r.add(t.first, k2, c * c2);
  return r;
}

/* product of two TPolys in the same variables with a bilinear key product */
template <class K, class F>
TPoly<K> tpoly_product(const TPoly<K>& a, const TPoly<K>& b, int level, F keymul) {
  TPoly<K> r(a.vars, a.dim, level);
  for (const auto& [ta, ca] : a)
    for (const auto& [tb, cb] : b) {
      std::vector<int> e(ta.first.size());
      for (size_t i = 0; i < e.size(); ++i) e[i] = ta.first[i] + tb.first[i];
      for (const auto& [k, c] : keymul(ta.second, tb.second)) r.add(e, k, ca * cb * c);
    }
  return r;
}

}  // namespace hkr
