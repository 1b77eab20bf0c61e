#include "hkr/multidiff.hpp"

#include <functional>

namespace hkr {

Cochain bracket(const BracketSpec& spec, const Cochain& phi) {
  if (spec.slot < 0 || spec.slot >= phi.arity()) throw ShapeError("bracket slot out of range");
  if (spec.a.dim != phi.dim()) throw DimensionError("bracket multiplier has wrong dimension");
  SymElement a = spec.a;
  size_t i = static_cast<size_t>(spec.slot);
  BimodulePtr M = phi.module_ptr();
  return Cochain(phi.arity(), M, [phi, a, i, M](const MonoTuple& t) {
    ModElem r = M->left(a, phi.eval(t));
    MonoTuple t2 = t;
    for (const auto& [ka, ca] : a) {
      t2[i] = add_index(ka, t[i]);
      r.axpy(-ca, phi.eval(t2));
    }
    return r;
  });
}

/* nondecreasing index sequences of length len over [0, n) */
static void multisets(int n, int len, std::vector<int>& cur,
                      const std::function<bool(const std::vector<int>&)>& visit, bool& stop) {
  if (stop) return;
  if (static_cast<int>(cur.size()) == len) {
    if (!visit(cur)) stop = true;
    return;
  }
  int lo = cur.empty() ? 0 : cur.back();
  for (int j = lo; j < n && !stop; ++j) {
    cur.push_back(j);
    multisets(n, len, cur, visit, stop);
    cur.pop_back();
  }
}

OrderCertificate diffop_order_check(const Cochain& phi, const std::vector<int>& order, int mult_deg,
                                    int arg_deg) {
  if (static_cast<int>(order.size()) != phi.arity())
    throw ShapeError("multiorder length differs from cochain arity");
  OrderCertificate cert;
  cert.order = order;
  cert.mult_deg = mult_deg;
  cert.arg_deg = arg_deg;
  int n = phi.dim();
  std::vector<MultiIndex> mults;
  for (int d = 1; d <= mult_deg; ++d)
    for (auto& m : monomials_of_degree(n, d)) mults.push_back(std::move(m));
  auto args = monomial_tuples(n, phi.arity(), arg_deg);
  Cochain base = memoized(phi);
  for (int i = 0; i < phi.arity() && cert.ok; ++i) {
    std::vector<int> cur;
    bool stop = false;
    multisets(static_cast<int>(mults.size()), order[static_cast<size_t>(i)] + 1, cur,
              [&](const std::vector<int>& pick) {
                Cochain br = base;
                for (int j : pick) br = bracket({i, sym_monomial(n, mults[static_cast<size_t>(j)])}, br);
                for (const auto& t : args) {
                  ModElem v = br.eval(t);
                  if (v.is_zero()) continue;
                  std::vector<MultiIndex> ms;
                  for (int j : pick) ms.push_back(mults[static_cast<size_t>(j)]);
                  cert.ok = false;
                  cert.witness = OrderWitness{i, ms, t, v};
                  return false;
                }
                return true;
              },
              stop);
  }
  return cert;
}

SymElement apply_derivation(const DerivationSpec& d, const SymElement& v) {
  int n = v.dim;
  if (static_cast<int>(d.images.size()) != n) throw DimensionError("derivation spec has wrong number of images");
  SymElement r(n);
  for (const auto& [a, c] : v)
    for (int i = 0; i < n; ++i) {
      int ai = a[static_cast<size_t>(i)];
      if (ai == 0) continue;
      r.axpy(c * ai, sym_mul_monomial(sub_index(a, unit_index(n, i)), d.images[static_cast<size_t>(i)]));
    }
  return r;
}

DerivationBimodule::DerivationBimodule(int n, std::vector<DerivationSpec> gens, int s)
    : n_(n), s_(s), gens_(std::move(gens)) {
  if (s < 0) throw ShapeError("derivation bimodule order must be >= 0");
  for (const auto& g : gens_) {
    if (static_cast<int>(g.images.size()) != n) throw DimensionError("derivation spec has wrong number of images");
    for (const auto& im : g.images)
      if (im.dim != n) throw DimensionError("derivation image has wrong dimension");
  }
}

bool DerivationBimodule::symmetric() const {
  if (s_ == 0) return true;
  for (const auto& g : gens_)
    for (const auto& im : g.images)
      if (!im.is_zero()) return false;
  return true;
}

ModKey DerivationBimodule::key(const MultiIndex& p, const std::vector<int>& alpha) const {
  ModKey k = p;
  k.insert(k.end(), alpha.begin(), alpha.end());
  return k;
}

ModElem DerivationBimodule::left_mono(const MultiIndex& a, const ModKey& m) const {
  ModKey k = m;
  for (int i = 0; i < n_; ++i) k[static_cast<size_t>(i)] += a[static_cast<size_t>(i)];
  return basis(k);
}

SymElement DerivationBimodule::apply_word(const std::vector<int>& beta, const MultiIndex& a) const {
  SymElement v = sym_monomial(n_, a);
  for (size_t j = 0; j < beta.size(); ++j)
    for (int p = 0; p < beta[j] && !v.is_zero(); ++p) v = apply_derivation(gens_[j], v);
  return v;
}

ModElem DerivationBimodule::D_mono(int l, const MultiIndex& a, const ModKey& m) const {
  ModElem r = zero();
  if (l < 1 || l > s_) return r;
  MultiIndex p(m.begin(), m.begin() + n_);
  std::vector<int> alpha(m.begin() + n_, m.end());
  for (const auto& beta : sub_indices(alpha)) {
    if (degree(beta) != l) continue;
    SymElement q = apply_word(beta, a);
    if (q.is_zero()) continue;
    Scalar w = multi_binomial(alpha, beta);
    std::vector<int> rest = sub_index(alpha, beta);
    for (const auto& [qk, qc] : q) r.add(key(add_index(qk, p), rest), w * qc);
  }
  return r;
}

std::vector<ModKey> DerivationBimodule::sample_keys(int max_deg) const {
  std::vector<ModKey> out;
  int g = static_cast<int>(gens_.size());
  std::vector<std::vector<int>> words;
  if (g == 0)
    words.push_back({});
  else
    words = monomials_upto(g, s_);
  for (const auto& p : monomials_upto(n_, max_deg))
    for (const auto& w : words) out.push_back(key(p, w));
  return out;
}

std::shared_ptr<DerivationBimodule> make_derivation_bimodule(int n, std::vector<DerivationSpec> gens,
                                                             int s, int degree_bound) {
  auto sym = std::make_shared<SymmetricAlgebraBimodule>(n);
  for (size_t j = 0; j < gens.size(); ++j) {
    if (static_cast<int>(gens[j].images.size()) != n)
      throw UnsupportedBimodule("derivation " + std::to_string(j + 1) + " has wrong number of images");
    DerivationSpec d = gens[j];
    Cochain as_map(1, sym, [d](const MonoTuple& t) {
      return SymmetricAlgebraBimodule::from_sym(apply_derivation(d, sym_monomial(static_cast<int>(t[0].size()), t[0])));
    });
    if (!diffop_order_check(as_map, {1}, degree_bound).ok)
      throw UnsupportedBimodule("generator " + std::to_string(j + 1) + " is not a derivation");
  }
  for (size_t i = 0; i < gens.size(); ++i)
    for (size_t j = i + 1; j < gens.size(); ++j)
      for (int k = 0; k < n; ++k) {
        SymElement e = sym_var(n, k);
        if (apply_derivation(gens[i], apply_derivation(gens[j], e)) !=
            apply_derivation(gens[j], apply_derivation(gens[i], e)))
          throw UnsupportedBimodule("generators " + std::to_string(i + 1) + " and " +
                                    std::to_string(j + 1) + " do not commute");
      }
  return std::make_shared<DerivationBimodule>(n, std::move(gens), s);
}

ModElem CorruptedBimodule::D_mono(int l, const MultiIndex& a, const ModKey& m) const {
  ModElem r = l <= base_->order() ? base_->D_mono(l, a, m) : zero();
  if (l == 2 && degree(a) == 1) r.add(m, extra_);
  return r;
}

namespace {

std::string wit(std::initializer_list<std::pair<const char*, std::string>> parts) {
  std::string s;
  for (const auto& [k, v] : parts) {
    if (!s.empty()) s += " ";
    s += std::string(k) + "=" + v;
  }
  return s;
}

ModElem D_or_left(const DiffBimodule& M, int l, const MultiIndex& a, const ModElem& m) {
  if (l == 0) return M.left(a, m);
  ModElem r = M.zero();
  for (const auto& [k, c] : m) r.axpy(c, M.D_mono(l, a, k));
  return r;
}

}  // namespace

std::vector<AxiomCheck> check_diffbimodule_axioms(const DiffBimodule& M, int degree_bound) {
  int n = M.dim(), s = M.order();
  auto monos = monomials_upto(n, degree_bound);
  auto keys = M.sample_keys(degree_bound);
  std::vector<AxiomCheck> out;
  auto fail = [](AxiomCheck& c, std::string w) {
    if (c.pass) {
      c.pass = false;
      c.witness = std::move(w);
    }
  };

  AxiomCheck a{"a-left-linear", true, ""};
  for (int l = 1; l <= s && a.pass; ++l)
    for (const auto& x : monos)
      for (const auto& y : monos)
        for (const auto& k : keys) {
          ModElem m = M.basis(k);
          if (D_or_left(M, l, x, M.left(y, m)) != M.left(y, D_or_left(M, l, x, m)))
            fail(a, wit({{"l", std::to_string(l)}, {"a", format_index(x)}, {"b", format_index(y)},
                         {"m", format_index(k)}}));
        }
  out.push_back(a);

  AxiomCheck b{"b-composites-vanish", true, ""};
  for (int p = 2; p <= 3 && b.pass; ++p) {
    std::vector<std::vector<int>> orders{{}};
    for (int j = 0; j < p; ++j) {
      std::vector<std::vector<int>> next;
      for (const auto& o : orders)
        for (int l = 1; l <= s; ++l) {
          auto o2 = o;
          o2.push_back(l);
          next.push_back(o2);
        }
      orders = std::move(next);
    }
    auto deg1 = monomials_upto(n, p == 2 ? degree_bound : 1);
    for (const auto& o : orders) {
      int total = 0;
      for (int l : o) total += l;
      if (total <= s) continue;
      for (const auto& k : keys) {
        std::function<void(size_t, ModElem, std::string)> rec = [&](size_t j, ModElem m, std::string w) {
          if (!b.pass) return;
          if (j == o.size()) {
            if (!m.is_zero()) fail(b, w + " m=" + format_index(k));
            return;
          }
          for (const auto& x : deg1)
            rec(j + 1, D_or_left(M, o[o.size() - 1 - j], x, m), w + " a" + std::to_string(j + 1) + "=" + format_index(x));
        };
        rec(0, M.basis(k), "l=" + format_index(o));
      }
    }
  }
  out.push_back(b);

  AxiomCheck c{"c-convolution", true, ""};
  for (int l = 1; l <= s && c.pass; ++l)
    for (const auto& x : monos)
      for (const auto& y : monos)
        for (const auto& k : keys) {
          ModElem m = M.basis(k);
          ModElem rhs = M.zero();
          for (int j = 0; j <= l; ++j) rhs += D_or_left(M, j, y, D_or_left(M, l - j, x, m));
          if (D_or_left(M, l, add_index(x, y), m) != rhs)
            fail(c, wit({{"l", std::to_string(l)}, {"a", format_index(x)}, {"b", format_index(y)},
                         {"m", format_index(k)}}));
        }
  out.push_back(c);

  AxiomCheck d{"d-order", true, ""};
  BimodulePtr self(std::shared_ptr<const DiffBimodule>{}, &M);
  for (int l = 1; l <= s && d.pass; ++l)
    for (const auto& k : keys) {
      Cochain op(1, self, [&M, l, k](const MonoTuple& t) { return M.D_mono(l, t[0], k); });
      auto cert = diffop_order_check(op, {l}, degree_bound);
      if (!cert.ok) {
        std::string ms;
        for (const auto& x : cert.witness->multipliers) ms += format_index(x);
        fail(d, wit({{"l", std::to_string(l)}, {"m", format_index(k)}, {"multipliers", ms},
                     {"v", format_index(cert.witness->args[0])}}));
        break;
      }
    }
  out.push_back(d);

  AxiomCheck e{"e-linear-vanish", true, ""};
  for (int l = 2; l <= s; ++l)
    for (int i = 0; i < n; ++i)
      for (const auto& k : keys) {
        ModElem v = M.D_mono(l, unit_index(n, i), k);
        if (!v.is_zero())
          fail(e, wit({{"l", std::to_string(l)}, {"v", format_index(unit_index(n, i))},
                       {"m", format_index(k)}, {"value", format_mod_elem(v)}}));
      }
  out.push_back(e);

  AxiomCheck law{"bimodule-law", true, ""};
  for (const auto& x : monos)
    for (const auto& y : monos)
      for (const auto& k : keys) {
        ModElem m = M.basis(k);
        std::string w = wit({{"a", format_index(x)}, {"b", format_index(y)}, {"m", format_index(k)}});
        if (M.right(M.right(m, x), y) != M.right(m, add_index(x, y))) fail(law, "right " + w);
        if (M.left(x, M.left(y, m)) != M.left(add_index(x, y), m)) fail(law, "left " + w);
        if (M.right(M.left(x, m), y) != M.left(x, M.right(m, y))) fail(law, "mixed " + w);
      }
  for (const auto& k : keys) {
    ModElem m = M.basis(k);
    if (M.right(m, zero_index(n)) != m || M.left(zero_index(n), m) != m)
      fail(law, "unit m=" + format_index(k));
  }
  out.push_back(law);

  AxiomCheck unit{"unit-vanish", true, ""};
  for (int l = 1; l <= s; ++l)
    for (const auto& k : keys)
      if (!M.D_mono(l, zero_index(n), k).is_zero())
        fail(unit, wit({{"l", std::to_string(l)}, {"m", format_index(k)}}));
  out.push_back(unit);

  AxiomCheck tr{"transport", true, ""};
  for (const auto& u : monomials_upto(n, std::max(degree_bound, 3)))
    for (const auto& k : keys) {
      ModElem m = M.basis(k);
      TPoly<ModKey> lhs(1, n, 0), rhs(1, n, 0);
      int la = degree(u);
      for (const auto& bb : sub_indices(u)) {
        int lb = degree(bb);
        ModElem v = M.right(M.left(sub_index(u, bb), m), bb);
        for (const auto& [vk, vc] : v) lhs.add_beta_term({0}, 0, la - lb, lb, vk, vc * multi_binomial(u, bb));
      }
      for (const auto& [vk, vc] : M.left(u, m)) rhs.add({0}, vk, vc);
      for (int l = 1; l <= s; ++l)
        for (const auto& [vk, vc] : M.D_mono(l, u, k)) rhs.add_beta_term({0}, 0, 0, l, vk, vc);
      if (!(lhs == rhs)) fail(tr, wit({{"u", format_index(u)}, {"m", format_index(k)}}));
    }
  out.push_back(tr);
  return out;
}

}  // namespace hkr
