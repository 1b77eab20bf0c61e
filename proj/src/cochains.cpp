#include "hkr/cochains.hpp"

#include <algorithm>
#include <mutex>
#include <numeric>

namespace hkr {

struct Cochain::State {
  int arity;
  BimodulePtr M;
  Eval f;
  bool memo;
  std::mutex mu;
  std::map<MonoTuple, ModElem> cache;
};

Cochain::Cochain(int arity, BimodulePtr M, Eval f, bool memoize)
    : st_(std::make_shared<State>()) {
  if (arity < 0) throw ShapeError("cochain arity must be >= 0");
  if (!M) throw std::invalid_argument("cochain needs a target bimodule");
  st_->arity = arity;
  st_->M = std::move(M);
  st_->f = std::move(f);
  st_->memo = memoize;
}

int Cochain::arity() const { return st_->arity; }
const Bimodule& Cochain::module() const { return *st_->M; }
const BimodulePtr& Cochain::module_ptr() const { return st_->M; }
int Cochain::dim() const { return st_->M->dim(); }

ModElem Cochain::eval(const MonoTuple& t) const {
  if (static_cast<int>(t.size()) != st_->arity) throw ShapeError("cochain evaluated on wrong number of arguments");
  if (!st_->memo) return st_->f(t);
  {
    std::lock_guard<std::mutex> lk(st_->mu);
    auto it = st_->cache.find(t);
    if (it != st_->cache.end()) return it->second;
  }
  ModElem v = st_->f(t);
  std::lock_guard<std::mutex> lk(st_->mu);
  st_->cache.try_emplace(t, v);
  return v;
}

ModElem Cochain::operator()(const std::vector<SymElement>& args) const {
  if (static_cast<int>(args.size()) != arity()) throw ShapeError("cochain evaluated on wrong number of arguments");
  for (const auto& a : args)
    if (a.dim != dim()) throw DimensionError("cochain argument has wrong dimension");
  ModElem r = module().zero();
  MonoTuple t(args.size());
  std::function<void(size_t, const Scalar&)> rec = [&](size_t s, const Scalar& c) {
    if (s == args.size()) {
      r.axpy(c, eval(t));
      return;
    }
    for (const auto& [k, ck] : args[s]) {
      t[s] = k;
      rec(s + 1, c * ck);
    }
  };
  rec(0, Scalar(1));
  return r;
}

Cochain memoized(const Cochain& phi) {
  return Cochain(phi.arity(), phi.module_ptr(), [phi](const MonoTuple& t) { return phi.eval(t); }, true);
}

Cochain zero_cochain(int arity, BimodulePtr M) {
  return Cochain(arity, M, [M](const MonoTuple&) { return M->zero(); });
}

Cochain constant_cochain(BimodulePtr M, const ModElem& m) {
  return Cochain(0, M, [m](const MonoTuple&) { return m; });
}

Cochain linear_combination(int arity, BimodulePtr M,
                           const std::vector<std::pair<Scalar, Cochain>>& terms) {
  for (const auto& [w, c] : terms)
    if (c.arity() != arity) throw ShapeError("linear combination of cochains with different arities");
  return Cochain(arity, M, [M, terms](const MonoTuple& t) {
    ModElem r = M->zero();
    for (const auto& [w, c] : terms) r.axpy(w, c.eval(t));
    return r;
  });
}

Cochain monomial_table_cochain(int arity, BimodulePtr M, std::map<MonoTuple, ModElem> values) {
  auto vals = std::make_shared<const std::map<MonoTuple, ModElem>>(std::move(values));
  return Cochain(arity, M, [M, vals](const MonoTuple& t) {
    auto it = vals->find(t);
    return it == vals->end() ? M->zero() : it->second;
  });
}

ModElem MultilinearTable::value(const std::vector<int>& idx) const {
  auto it = values.find(idx);
  return it == values.end() ? ModElem(dim) : it->second;
}

static int perm_sign(const std::vector<int>& p) {
  int inv = 0;
  for (size_t i = 0; i < p.size(); ++i)
    for (size_t j = i + 1; j < p.size(); ++j)
      if (p[i] > p[j]) ++inv;
  return inv % 2 ? -1 : 1;
}

static std::vector<std::vector<int>> index_tuples(int n, int k) {
  std::vector<std::vector<int>> out{{}};
  for (int s = 0; s < k; ++s) {
    std::vector<std::vector<int>> next;
    for (const auto& t : out)
      for (int i = 0; i < n; ++i) {
        auto t2 = t;
        t2.push_back(i);
        next.push_back(std::move(t2));
      }
    out = std::move(next);
  }
  return out;
}

bool MultilinearTable::check_antisymmetric() const {
  for (const auto& idx : index_tuples(dim, arity)) {
    auto w = canonical_wedge(idx);
    ModElem v = value(idx);
    if (!w) {
      if (!v.is_zero()) return false;
      continue;
    }
    if (v != Scalar(w->first) * value(w->second.idx)) return false;
  }
  return true;
}

bool operator==(const MultilinearTable& a, const MultilinearTable& b) {
  if (a.arity != b.arity || a.dim != b.dim) return false;
  for (const auto& idx : index_tuples(a.dim, a.arity))
    if (a.value(idx) != b.value(idx)) return false;
  return true;
}

MultilinearTable antisymmetric_table(int n, int k,
                                     const std::map<std::vector<int>, ModElem>& ascending) {
  MultilinearTable f{k, n, true, {}};
  for (const auto& idx : index_tuples(n, k)) {
    auto w = canonical_wedge(idx);
    if (!w) continue;
    auto it = ascending.find(w->second.idx);
    if (it == ascending.end() || it->second.is_zero()) continue;
    f.values.emplace(idx, Scalar(w->first) * it->second);
  }
  return f;
}

Cochain hoch_delta(const Cochain& phi) {
  int k = phi.arity();
  BimodulePtr M = phi.module_ptr();
  return Cochain(k + 1, M, [phi, M, k](const MonoTuple& t) {
    MonoTuple rest(t.begin() + 1, t.end());
    ModElem r = M->left(t[0], phi.eval(rest));
    for (int i = 1; i <= k; ++i) {
      MonoTuple merged;
      merged.reserve(static_cast<size_t>(k));
      for (int j = 0; j < k + 1; ++j) {
        if (j == i) continue;
        if (j == i - 1)
          merged.push_back(add_index(t[static_cast<size_t>(j)], t[static_cast<size_t>(j) + 1]));
        else
          merged.push_back(t[static_cast<size_t>(j)]);
      }
      r.axpy(i % 2 ? Scalar(-1) : Scalar(1), phi.eval(merged));
    }
    MonoTuple head(t.begin(), t.end() - 1);
    r.axpy((k + 1) % 2 ? Scalar(-1) : Scalar(1), M->right(phi.eval(head), t.back()));
    return r;
  });
}

Cochain alt_cochain(const Cochain& phi) {
  int k = phi.arity();
  BimodulePtr M = phi.module_ptr();
  Scalar norm = 1 / factorial(k);
  return Cochain(k, M, [phi, M, k, norm](const MonoTuple& t) {
    std::vector<int> p(static_cast<size_t>(k));
    std::iota(p.begin(), p.end(), 0);
    ModElem r = M->zero();
    do {
      MonoTuple s(t.size());
      for (size_t i = 0; i < t.size(); ++i) s[i] = t[static_cast<size_t>(p[i])];
      r.axpy(Scalar(perm_sign(p)), phi.eval(s));
    } while (std::next_permutation(p.begin(), p.end()));
    r *= norm;
    return r;
  });
}

Cochain derivative_extension(const MultilinearTable& f, BimodulePtr M) {
  if (f.dim != M->dim()) throw DimensionError("table and bimodule dimensions differ");
  int k = f.arity, n = f.dim;
  return Cochain(k, M, [f, M, k, n](const MonoTuple& t) {
    ModElem r = M->zero();
    std::vector<int> idx(static_cast<size_t>(k));
    std::function<void(int, MultiIndex, Scalar)> rec = [&](int s, MultiIndex rest, Scalar w) {
      if (s == k) {
        ModElem v = f.value(idx);
        if (!v.is_zero()) r.axpy(w, M->left(rest, v));
        return;
      }
      const MultiIndex& a = t[static_cast<size_t>(s)];
      for (int i = 0; i < n; ++i) {
        int ai = a[static_cast<size_t>(i)];
        if (ai == 0) continue;
        idx[static_cast<size_t>(s)] = i;
        MultiIndex r2 = add_index(rest, a);
        --r2[static_cast<size_t>(i)];
        rec(s + 1, r2, w * ai);
      }
    };
    rec(0, zero_index(n), Scalar(1));
    return r;
  });
}

Cochain xi(const MultilinearTable& f, BimodulePtr M, ResolutionPtr res) {
  if (!f.antisymmetric || !f.check_antisymmetric())
    throw std::invalid_argument("xi needs an antisymmetric table");
  if (f.dim != M->dim() || res->dim() != M->dim()) throw DimensionError("xi: dimension mismatch");
  int k = f.arity;
  return Cochain(k, M, [f, M, res, k](const MonoTuple& t) {
    if (k == 0) return f.value({});
    ModElem r = M->zero();
    for (const auto& [key, c] : res->G_middle(t)) {
      ModElem v = f.value(key.u.idx);
      if (v.is_zero()) continue;
      r.axpy(c, M->right(M->left(key.a, v), key.b));
    }
    return r;
  }, true);
}

MultilinearTable xi_hat(const Cochain& phi) {
  int k = phi.arity(), n = phi.dim();
  MultilinearTable out{k, n, true, {}};
  for (const auto& idx : index_tuples(n, k)) {
    std::vector<int> p(static_cast<size_t>(k));
    std::iota(p.begin(), p.end(), 0);
    ModElem v = phi.module().zero();
    do {
      MonoTuple t;
      for (int j : p) t.push_back(unit_index(n, idx[static_cast<size_t>(j)]));
      v.axpy(Scalar(perm_sign(p)), phi.eval(t));
    } while (std::next_permutation(p.begin(), p.end()));
    if (!v.is_zero()) out.values.emplace(idx, std::move(v));
  }
  return out;
}

ModElem zeta_eval(const Cochain& phi, const BarChain& c) {
  if (c.level != phi.arity()) throw ShapeError("zeta_eval: chain arity differs from cochain arity");
  if (c.dim != phi.dim()) throw DimensionError("zeta_eval: dimension mismatch");
  const Bimodule& M = phi.module();
  ModElem r = M.zero();
  for (const auto& [key, coef] : c) {
    MonoTuple mid(key.begin() + 1, key.end() - 1);
    ModElem v = phi.eval(mid);
    if (v.is_zero()) continue;
    r.axpy(coef, M.right(M.left(key.front(), v), key.back()));
  }
  return r;
}

Cochain corrector(const Cochain& phi, ResolutionPtr res) {
  if (phi.arity() < 1) throw ShapeError("corrector needs arity >= 1");
  if (res->dim() != phi.dim()) throw DimensionError("corrector: dimension mismatch");
  return Cochain(phi.arity() - 1, phi.module_ptr(), [phi, res](const MonoTuple& t) {
    return zeta_eval(phi, res->s_middle(t));
  }, true);
}

Cochain omega_project(const Cochain& phi, ResolutionPtr res) {
  if (res->dim() != phi.dim()) throw DimensionError("omega_project: dimension mismatch");
  if (phi.arity() == 0) return phi;
  return Cochain(phi.arity(), phi.module_ptr(), [phi, res](const MonoTuple& t) {
    return zeta_eval(phi, res->omega_middle(t));
  }, true);
}

ModElem corrector_k2_explicit(const Cochain& phi, const SymElement& x) {
  if (phi.arity() != 2) throw ShapeError("explicit corrector needs arity 2");
  int n = phi.dim();
  const Bimodule& M = phi.module();
  ModElem r = M.zero();
  for (const auto& [a, coef] : x) {
    r.axpy(coef, phi.eval({zero_index(n), a}));
    int la = degree(a);
    for (int i = 0; i < n; ++i) {
      int ai = a[static_cast<size_t>(i)];
      if (ai == 0) continue;
      MultiIndex red = sub_index(a, unit_index(n, i));
      for (const auto& b : sub_indices(red)) {
        int lb = degree(b);
        Scalar w = coef * ai * multi_binomial(red, b) * beta_integral(la - 1 - lb, lb);
        r.axpy(-w, M.right(phi.eval({sub_index(red, b), unit_index(n, i)}), b));
      }
    }
  }
  return r;
}

bool HkrResult::residuals_zero() const {
  return std::all_of(samples.begin(), samples.end(),
                     [](const HkrSample& s) { return s.residual.is_zero(); });
}

HkrResult hkr_decompose(const Cochain& phi, ResolutionPtr res, const std::vector<MonoTuple>& samples) {
  Cochain alt = memoized(alt_cochain(phi));
  Cochain corr = corrector(phi, res);
  Cochain dcorr = hoch_delta(corr);
  HkrResult out{alt, corr, {}};
  out.samples.reserve(samples.size());
  for (const auto& t : samples) {
    ModElem r = phi.eval(t);
    r -= alt.eval(t);
    r -= dcorr.eval(t);
    out.samples.push_back({t, std::move(r)});
  }
  return out;
}

std::vector<MonoTuple> monomial_tuples(int n, int k, int max_deg) {
  auto monos = monomials_upto(n, max_deg);
  std::vector<MonoTuple> out{{}};
  for (int s = 0; s < k; ++s) {
    std::vector<MonoTuple> next;
    next.reserve(out.size() * monos.size());
    for (const auto& t : out)
      for (const auto& m : monos) {
        auto t2 = t;
        t2.push_back(m);
        next.push_back(std::move(t2));
      }
    out = std::move(next);
  }
  return out;
}

std::optional<MonoTuple> first_difference(const Cochain& a, const Cochain& b,
                                          const std::vector<MonoTuple>& samples) {
  for (const auto& t : samples)
    if (a.eval(t) != b.eval(t)) return t;
  return std::nullopt;
}

}  // namespace hkr
