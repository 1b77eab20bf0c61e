#include "hkr/verify.hpp"

#include <algorithm>
#include <sstream>
#include <stdexcept>

#include "hkr/multidiff.hpp"
#include "hkr/samplers.hpp"
#include "hkr/seminorms.hpp"
#include "hkr/textio.hpp"
#include "json.hpp"

namespace hkr {

namespace {

/* exhaustive enumeration stops being used above this many tuples */
constexpr size_t kEnumerateLimit = 20000;

uint64_t fnv1a(const std::string& s) {
  uint64_t h = 1469598103934665603ULL;
  for (unsigned char c : s) {
    h ^= c;
    h *= 1099511628211ULL;
  }
  return h;
}

class Check {
 public:
  Check(const RunConfig& cfg, std::string id) : rng(cfg.seed ^ fnv1a(id)) { r_.id = std::move(id); }

  template <class D>
  void expect(bool ok, D&& detail) {
    ++r_.count;
    if (!ok && r_.pass) {
      r_.pass = false;
      r_.detail = detail();
    }
  }
  void fail(const std::string& detail) {
    if (r_.pass) r_.detail = detail;
    r_.pass = false;
  }
  void info(const std::string& s) {
    if (r_.pass) r_.detail = s;
  }
  void add_count(long n) { r_.count += n; }
  CheckResult result() const { return r_; }

  Rng rng;

 private:
  CheckResult r_;
};

template <class T>
std::string show(const T& x) {
  return inline_text(make_element(x));
}

std::string show_tuple(const MonoTuple& t) {
  std::string s = "(";
  for (size_t i = 0; i < t.size(); ++i) s += (i ? "," : "") + format_index(t[i]);
  return s + ")";
}

size_t tuple_count(int n, int k, int d) {
  size_t m = monomials_upto(n, d).size(), c = 1;
  for (int i = 0; i < k; ++i) {
    c *= m;
    if (c > kEnumerateLimit) return c;
  }
  return c;
}

/* every tuple when there are few enough, otherwise `samples` random ones */
std::vector<MonoTuple> tuples_or_sample(Rng& rng, int n, int k, int d, int samples) {
  if (tuple_count(n, k, d) <= kEnumerateLimit) return monomial_tuples(n, k, d);
  std::vector<MonoTuple> out;
  for (int j = 0; j < samples; ++j) {
    MonoTuple t;
    for (int i = 0; i < k; ++i) t.push_back(random_monomial(rng, n, d));
    out.push_back(t);
  }
  return out;
}

std::vector<std::vector<int>> subsets(int n, int k) {
  std::vector<std::vector<int>> out;
  std::vector<int> cur;
  auto rec = [&](auto& self, int start) -> void {
    if (static_cast<int>(cur.size()) == k) {
      out.push_back(cur);
      return;
    }
    for (int i = start; i < n; ++i) {
      cur.push_back(i);
      self(self, i + 1);
      cur.pop_back();
    }
  };
  rec(rec, 0);
  return out;
}

std::vector<KoszulChain> koszul_basis_elements(int n, int k, int d) {
  std::vector<KoszulChain> out;
  auto ms = monomials_upto(n, d);
  for (const auto& a : ms)
    for (const auto& b : ms)
      for (const auto& w : subsets(n, k)) out.push_back(koszul_basis(n, a, b, w));
  return out;
}

ModElem sym_mod(const SymElement& a) { return SymmetricAlgebraBimodule::from_sym(a); }

/* K^2 with x_i acting through N on the left and (i+2) + N on the right */
BimodulePtr table_module(int n) {
  Matrix N{{0, 1}, {0, 0}};
  std::vector<Matrix> L, R;
  for (int i = 0; i < n; ++i) {
    L.push_back({{0, Scalar(i + 1)}, {0, 0}});
    R.push_back({{Scalar(i + 2), 1}, {0, Scalar(i + 2)}});
  }
  return std::make_shared<TableBimodule>(n, 2, L, R);
}

DerivationSpec partial_derivation(int n, int i) {
  DerivationSpec d;
  for (int j = 0; j < n; ++j) d.images.push_back(j == i ? sym_one(n) : sym_zero(n));
  return d;
}

/* constant-coefficient derivation sum c_i d/dx_i with nonzero coefficients */
DerivationSpec random_constant_derivation(Rng& rng, int n) {
  DerivationSpec d;
  for (int j = 0; j < n; ++j) d.images.push_back(sym_monomial(n, zero_index(n), rng.coef()));
  return d;
}

Cochain derivation_cochain(const std::vector<DerivationSpec>& word, BimodulePtr M) {
  int n = M->dim();
  return Cochain(1, M, [word, n](const MonoTuple& t) {
    SymElement v = sym_monomial(n, t[0]);
    for (auto it = word.rbegin(); it != word.rend(); ++it) v = apply_derivation(*it, v);
    return sym_mod(v);
  });
}

int clamp_count(int samples, int div) { return std::max(1, samples / div); }

/* ---------------------------------------------------------------- complexes */

std::vector<CheckResult> complexes_suite(const RunConfig& cfg) {
  std::vector<CheckResult> out;
  int n = cfg.dim, d = cfg.max_degree, K = cfg.max_k, S = cfg.samples;

  {
    Check c(cfg, "complexes.bar.d_squared");
    for (int k = 2; k <= K + 1; ++k) {
      for (const auto& t : tuples_or_sample(c.rng, n, k, d, S)) {
        auto x = bar_middle(n, t);
        c.expect(bar_d(bar_d(x)).is_zero(), [&] { return "input " + show(x); });
      }
      for (int j = 0; j < S; ++j) {
        auto x = random_bar(c.rng, n, k, d, 3);
        c.expect(bar_d(bar_d(x)).is_zero(), [&] { return "input " + show(x); });
      }
    }
    out.push_back(c.result());
  }
  {
    Check c(cfg, "complexes.bar.homotopy.eps_h");
    for (int j = 0; j < S; ++j) {
      auto a = random_sym(c.rng, n, d, 3);
      c.expect(bar_eps(bar_h_unit(a)) == a, [&] { return "input " + show(a); });
    }
    out.push_back(c.result());
  }
  {
    Check c(cfg, "complexes.bar.homotopy.level0");
    for (int j = 0; j < S; ++j) {
      auto x = random_bar(c.rng, n, 0, d, 3);
      c.expect(bar_d(bar_h(x)) + bar_h_unit(bar_eps(x)) == x, [&] { return "input " + show(x); });
    }
    out.push_back(c.result());
  }
  for (int k = 1; k <= K; ++k) {
    Check c(cfg, "complexes.bar.homotopy.level" + std::to_string(k));
    for (int j = 0; j < S; ++j) {
      auto x = random_bar(c.rng, n, k, d, 3);
      c.expect(bar_d(bar_h(x)) + bar_h(bar_d(x)) == x, [&] { return "input " + show(x); });
    }
    out.push_back(c.result());
  }
  {
    Check c(cfg, "complexes.bar.augmentation");
    for (int j = 0; j < S; ++j) {
      auto x = random_bar(c.rng, n, 1, d, 3);
      c.expect(bar_eps(bar_d(x)).is_zero(), [&] { return "input " + show(x); });
    }
    out.push_back(c.result());
  }
  {
    /* wedge degree k needs dim >= k, so higher levels run in dimension k */
    Check c(cfg, "complexes.koszul.partial_squared");
    for (int k = 2; k <= std::max(K, 2); ++k) {
      int m = std::max(n, k);
      for (const auto& x : koszul_basis_elements(m, k, d))
        c.expect(koszul_partial(koszul_partial(x)).is_zero(), [&] { return "input " + show(x); });
      for (int j = 0; j < S; ++j) {
        auto x = random_koszul(c.rng, m, k, d, 3);
        c.expect(koszul_partial(koszul_partial(x)).is_zero(), [&] { return "input " + show(x); });
      }
    }
    out.push_back(c.result());
  }
  {
    Check c(cfg, "complexes.koszul.homotopy.eps_h");
    for (int j = 0; j < S; ++j) {
      auto a = random_sym(c.rng, n, d, 3);
      c.expect(koszul_eps(koszul_h_unit(a)) == a, [&] { return "input " + show(a); });
    }
    out.push_back(c.result());
  }
  {
    Check c(cfg, "complexes.koszul.homotopy.level0");
    for (int j = 0; j < S; ++j) {
      auto x = random_koszul(c.rng, n, 0, d, 3);
      c.expect(koszul_h_unit(koszul_eps(x)) + koszul_partial(koszul_h(x)) == x,
               [&] { return "input " + show(x); });
    }
    out.push_back(c.result());
  }
  for (int k = 1; k <= K; ++k) {
    Check c(cfg, "complexes.koszul.homotopy.level" + std::to_string(k));
    int m = std::max(n, k);
    for (int j = 0; j < S; ++j) {
      auto x = random_koszul(c.rng, m, k, d, 3);
      c.expect(koszul_h(koszul_partial(x)) + koszul_partial(koszul_h(x)) == x,
               [&] { return "input " + show(x); });
    }
    out.push_back(c.result());
  }
  {
    Check c(cfg, "complexes.koszul.augmentation");
    for (int j = 0; j < S; ++j) {
      auto x = random_koszul(c.rng, n, 1, d, 3);
      c.expect(koszul_eps(koszul_partial(x)).is_zero(), [&] { return "input " + show(x); });
    }
    out.push_back(c.result());
  }
  {
    Check c(cfg, "complexes.koszul.leibniz");
    for (int j = 0; j < S; ++j) {
      int p = c.rng.range(0, 1), q = c.rng.range(0, 1);
      auto mu = random_koszul(c.rng, n, p, d, 2), nu = random_koszul(c.rng, n, q, d, 2);
      Scalar sign = p % 2 ? -1 : 1;
      c.expect(koszul_delta(koszul_product(mu, nu)) ==
                   koszul_product(koszul_delta(mu), nu) + sign * koszul_product(mu, koszul_delta(nu)),
               [&] { return "delta on " + show(mu) + " and " + show(nu); });
      if (p + q >= 1) {
        KoszulChain rhs(n, p + q - 1);
        if (p >= 1) rhs += koszul_product(koszul_partial(mu), nu);
        if (q >= 1) rhs.axpy(sign, koszul_product(mu, koszul_partial(nu)));
        c.expect(koszul_partial(koszul_product(mu, nu)) == rhs,
                 [&] { return "partial on " + show(mu) + " and " + show(nu); });
      }
    }
    out.push_back(c.result());
  }
  {
    Check c(cfg, "complexes.koszul.i_t_multiplicative");
    for (int j = 0; j < S; ++j) {
      int p = c.rng.range(0, 1), q = c.rng.range(0, 1);
      auto mu = random_koszul(c.rng, n, p, d, 2), nu = random_koszul(c.rng, n, q, d, 2);
      c.expect(koszul_i_t(koszul_product(mu, nu)) == koszul_tproduct(koszul_i_t(mu), koszul_i_t(nu)),
               [&] { return "inputs " + show(mu) + " and " + show(nu); });
    }
    out.push_back(c.result());
  }
  {
    Check c(cfg, "complexes.koszul.i_t_derivative");
    auto check = [&](const KoszulChain& x) {
      auto lhs = t_derivative(koszul_i_t(x), 0);
      auto rhs = map_payload<KoszulKey, KoszulKey>(koszul_i_t(koszul_delta(x)), 0, [](const KoszulKey& key) {
        KoszulChain kc(static_cast<int>(key.a.size()), key.u.degree());
        kc.add(key, 1);
        return koszul_partial(kc);
      });
      c.expect(lhs == rhs, [&] { return "input " + show(x); });
    };
    for (const auto& a : monomials_upto(n, d))
      for (const auto& b : monomials_upto(n, d)) check(koszul_basis(n, a, b, {}));
    for (int j = 0; j < S; ++j) check(random_koszul(c.rng, n, 0, d, 3));
    out.push_back(c.result());
  }
  {
    Check c(cfg, "complexes.koszul.h_integral");
    for (int k = 0; k < n; ++k)
      for (int j = 0; j < S; ++j) {
        auto x = random_koszul(c.rng, n, k, d, 3);
        c.expect(koszul_h(x) == unit_integrate(koszul_i_t(koszul_delta(x)), k),
                 [&] { return "input " + show(x); });
      }
    out.push_back(c.result());
  }
  {
    Check c(cfg, "complexes.module_law");
    for (int j = 0; j < S; ++j) {
      auto p = random_ae(c.rng, n, 2, 2), q = random_ae(c.rng, n, 2, 2);
      int k = c.rng.range(0, std::min(K, n));
      auto x = random_bar(c.rng, n, k, d, 2);
      auto y = random_koszul(c.rng, n, k, d, 2);
      c.expect(bar_act(ae_mul(p, q), x) == bar_act(p, bar_act(q, x)), [&] { return "bar input " + show(x); });
      c.expect(koszul_act(ae_mul(p, q), y) == koszul_act(p, koszul_act(q, y)),
               [&] { return "koszul input " + show(y); });
      c.expect(bar_act(ae_one(n), x) == x, [&] { return "bar unit on " + show(x); });
      if (k >= 1)
        c.expect(bar_d(bar_act(p, x)) == bar_act(p, bar_d(x)), [&] { return "d linearity on " + show(x); });
      if (k >= 1)
        c.expect(koszul_partial(koszul_act(p, y)) == koszul_act(p, koszul_partial(y)),
                 [&] { return "partial linearity on " + show(y); });
    }
    out.push_back(c.result());
  }
  {
    Check c(cfg, "complexes.simplex_integral");
    for (int k = 0; k <= 5; ++k) {
      TPoly<KoszulKey> one(k, 1, 0);
      KoszulKey key{{0}, {0}, {}};
      one.add(std::vector<int>(static_cast<size_t>(k), 0), key, 1);
      c.expect(simplex_integrate(one).coeff(key) == 1 / factorial(k), [&] { return "volume k=" + std::to_string(k); });
    }
    for (int m = 0; m <= 4; ++m)
      for (int s = 0; s <= 4; ++s) {
        TPoly<KoszulKey> p(1, 1, 0);
        KoszulKey key{{0}, {0}, {}};
        p.add_beta_term({0}, 0, m, s, key, 1);
        c.expect(unit_integrate(p).coeff(key) == beta_integral(m, s),
                 [&] { return "beta m=" + std::to_string(m) + " s=" + std::to_string(s); });
      }
    out.push_back(c.result());
  }
  {
    Check c(cfg, "complexes.dim3.spot");
    int m = 3, dd = std::min(d, 2), T = clamp_count(S, 4);
    for (int k = 1; k <= K; ++k)
      for (int j = 0; j < T; ++j) {
        auto x = random_bar(c.rng, m, k, dd, 2);
        c.expect(bar_d(bar_h(x)) + bar_h(bar_d(x)) == x, [&] { return "bar input " + show(x); });
        c.expect(k < 2 || bar_d(bar_d(x)).is_zero(), [&] { return "bar d^2 on " + show(x); });
        if (k <= m) {
          auto y = random_koszul(c.rng, m, k, dd, 2);
          c.expect(koszul_h(koszul_partial(y)) + koszul_partial(koszul_h(y)) == y,
                   [&] { return "koszul input " + show(y); });
        }
      }
    out.push_back(c.result());
  }
  return out;
}

/* --------------------------------------------------------------- chain maps */

std::vector<CheckResult> chain_maps_suite(const RunConfig& cfg) {
  std::vector<CheckResult> out;
  int n = cfg.dim, d = cfg.max_degree, K = cfg.max_k, S = cfg.samples;
  auto res = std::make_shared<Resolution>(n);

  {
    Check c(cfg, "chain_maps.dF");
    for (int k = 1; k <= K; ++k) {
      int m = std::max(n, k);
      for (const auto& x : koszul_basis_elements(m, k, 1))
        c.expect(bar_d(F(x)) == F(koszul_partial(x)), [&] { return "input " + show(x); });
      for (int j = 0; j < S; ++j) {
        auto x = random_koszul(c.rng, m, k, d, 2);
        c.expect(bar_d(F(x)) == F(koszul_partial(x)), [&] { return "input " + show(x); });
      }
    }
    out.push_back(c.result());
  }
  {
    Check c(cfg, "chain_maps.GF");
    for (int k = 0; k <= K; ++k) {
      int m = std::max(n, k);
      for (const auto& x : koszul_basis_elements(m, k, 1))
        c.expect(G(F(x)) == x, [&] { return "input " + show(x); });
      for (int j = 0; j < S; ++j) {
        auto x = random_koszul(c.rng, m, k, d, 2);
        c.expect(G(F(x)) == x, [&] { return "input " + show(x); });
      }
    }
    out.push_back(c.result());
  }
  {
    Check c(cfg, "chain_maps.partialG");
    for (int k = 1; k <= K; ++k) {
      for (const auto& t : tuples_or_sample(c.rng, n, k, d, S)) {
        auto x = bar_middle(n, t);
        c.expect(koszul_partial(res->G(x)) == res->G(bar_d(x)), [&] { return "input " + show(x); });
      }
      for (int j = 0; j < S; ++j) {
        auto x = random_bar(c.rng, n, k, d, 2);
        c.expect(koszul_partial(res->G(x)) == res->G(bar_d(x)), [&] { return "input " + show(x); });
      }
    }
    out.push_back(c.result());
  }
  {
    Check c(cfg, "chain_maps.G_direct");
    /* memoised evaluator against the direct integral */
    for (int k = 1; k <= K; ++k)
      for (int j = 0; j < clamp_count(S, 4); ++j) {
        auto x = random_bar(c.rng, n, k, d, 2);
        c.expect(res->G(x) == G(x), [&] { return "input " + show(x); });
      }
    out.push_back(c.result());
  }
  for (int k = 1; k <= K; ++k) {
    Check c(cfg, "chain_maps.homotopy.level" + std::to_string(k));
    for (int j = 0; j < S; ++j) {
      auto x = random_bar(c.rng, n, k, d, 2);
      c.expect(x - res->omega(x) == bar_d(res->s(x)) + res->s(bar_d(x)), [&] { return "input " + show(x); });
    }
    out.push_back(c.result());
  }
  {
    Check c(cfg, "chain_maps.s_ae_linear");
    for (int k = 1; k <= K; ++k)
      for (int j = 0; j < S; ++j) {
        auto x = random_bar(c.rng, n, k, d, 2);
        auto p = random_ae(c.rng, n, 2, 2);
        c.expect(res->s(bar_act(p, x)) == bar_act(p, res->s(x)), [&] { return "input " + show(x); });
      }
    out.push_back(c.result());
  }
  {
    Check c(cfg, "chain_maps.omega_fixes_F");
    for (int k = 1; k <= std::min(K, n); ++k)
      for (int j = 0; j < S; ++j) {
        auto x = random_koszul(c.rng, n, k, d, 2);
        auto fx = F(x);
        c.expect(res->omega(fx) == fx, [&] { return "input " + show(x); });
      }
    out.push_back(c.result());
  }
  {
    Check c(cfg, "chain_maps.ae_linearize");
    BarMap lin = ae_linearize([](const BarChain& x) { return bar_d(x); });
    for (int k = 1; k <= K; ++k)
      for (int j = 0; j < clamp_count(S, 4); ++j) {
        auto x = random_bar(c.rng, n, k, d, 2);
        c.expect(lin(x) == bar_d(x), [&] { return "input " + show(x); });
      }
    out.push_back(c.result());
  }
  {
    Check c(cfg, "chain_maps.dim3.spot");
    int m = 3, dd = std::min(d, 2), T = clamp_count(S, 4);
    auto res3 = std::make_shared<Resolution>(m);
    for (int k = 1; k <= K; ++k)
      for (int j = 0; j < T; ++j) {
        auto x = random_bar(c.rng, m, k, dd, 2);
        c.expect(koszul_partial(res3->G(x)) == res3->G(bar_d(x)), [&] { return "partial G on " + show(x); });
        c.expect(x - res3->omega(x) == bar_d(res3->s(x)) + res3->s(bar_d(x)),
                 [&] { return "homotopy on " + show(x); });
        auto y = random_koszul(c.rng, m, std::min(k, m), dd, 2);
        c.expect(G(F(y)) == y, [&] { return "GF on " + show(y); });
        c.expect(bar_d(F(y)) == F(koszul_partial(y)), [&] { return "dF on " + show(y); });
      }
    out.push_back(c.result());
  }
  return out;
}

/* ---------------------------------------------------------------------- hkr */

std::vector<CheckResult> hkr_suite(const RunConfig& cfg) {
  std::vector<CheckResult> out;
  int n = cfg.dim, d = cfg.max_degree, K = cfg.max_k, S = cfg.samples;
  auto res = std::make_shared<Resolution>(n);
  BimodulePtr sym = std::make_shared<SymmetricAlgebraBimodule>(n);
  BimodulePtr table = table_module(n);
  const std::vector<std::pair<std::string, BimodulePtr>> modules{{"sym", sym}, {"table", table}};

  for (const auto& [name, M] : modules) {
    Check c(cfg, "hkr.delta_squared." + name);
    for (int k = 0; k + 2 <= K + 1; ++k)
      for (int j = 0; j < clamp_count(S, 20); ++j) {
        auto psi = random_monomial_cochain(c.rng, M, k, d, 15, 1);
        auto dd = hoch_delta(hoch_delta(psi));
        for (const auto& t : tuples_or_sample(c.rng, n, k + 2, d, S))
          c.expect(dd.eval(t).is_zero(), [&] { return "arity " + std::to_string(k) + " at " + show_tuple(t); });
      }
    out.push_back(c.result());
  }
  {
    Check c(cfg, "hkr.alt_kills_coboundaries");
    for (int k = 1; k <= K; ++k)
      for (int j = 0; j < clamp_count(S, 50); ++j) {
        auto psi = random_monomial_cochain(c.rng, sym, k - 1, d, 15, 1);
        auto a = alt_cochain(hoch_delta(psi));
        for (const auto& t : tuples_or_sample(c.rng, n, k, d, S))
          c.expect(a.eval(t).is_zero(), [&] { return "arity " + std::to_string(k) + " at " + show_tuple(t); });
      }
    out.push_back(c.result());
  }
  {
    Check c(cfg, "hkr.xi_dual_route");
    for (int k = 1; k <= K; ++k)
      for (int j = 0; j < clamp_count(S, 20); ++j) {
        auto f = random_antisymmetric_table(c.rng, *sym, k, d, 3);
        auto x = xi(f, sym, res);
        auto dx = derivative_extension(f, sym);
        for (const auto& t : tuples_or_sample(c.rng, n, k, d, S))
          c.expect(x.eval(t) == (1 / factorial(k)) * dx.eval(t),
                   [&] { return "arity " + std::to_string(k) + " at " + show_tuple(t); });
      }
    out.push_back(c.result());
  }
  {
    Check c(cfg, "hkr.xi_hat_left_inverse");
    for (const auto& [name, M] : modules)
      for (int k = 1; k <= K; ++k)
        for (int j = 0; j < clamp_count(S, 20); ++j) {
          auto f = random_antisymmetric_table(c.rng, *M, k, d, 3);
          c.expect(xi_hat(xi(f, M, res)) == f, [&] { return name + " arity " + std::to_string(k); });
        }
    out.push_back(c.result());
  }
  {
    Check c(cfg, "hkr.xi_hat_kills_coboundaries");
    for (int k = 1; k <= K; ++k)
      for (int j = 0; j < clamp_count(S, 20); ++j) {
        auto psi = random_monomial_cochain(c.rng, sym, k - 1, d, 15, 1);
        c.expect(xi_hat(hoch_delta(psi)).values.empty(), [&] { return "arity " + std::to_string(k); });
      }
    out.push_back(c.result());
  }
  for (int k = 2; k <= std::max(2, K); ++k) {
    Check dec(cfg, "hkr.decomposition.k" + std::to_string(k));
    Check alt(cfg, "hkr.alt_equals_xi.k" + std::to_string(k));
    auto samples = tuples_or_sample(dec.rng, n, k, d, S);
    int C = clamp_count(S, 4);
    for (int j = 0; j < C; ++j) {
      auto f = random_antisymmetric_table(dec.rng, *sym, k, d, 3);
      auto x = xi(f, sym, res);
      auto psi = random_monomial_cochain(dec.rng, sym, k - 1, d, 15, 1);
      auto phi = memoized(linear_combination(k, sym, {{1, x}, {1, hoch_delta(psi)}}));
      auto r = hkr_decompose(phi, res, samples);
      for (const auto& s : r.samples)
        dec.expect(s.residual.is_zero(), [&] {
          return "cochain " + std::to_string(j) + " at " + show_tuple(s.args) + " residual " + format_mod_elem(s.residual);
        });
      for (const auto& t : samples)
        alt.expect(r.antisymmetric.eval(t) == x.eval(t),
                   [&] { return "cochain " + std::to_string(j) + " at " + show_tuple(t); });
    }
    dec.info(std::to_string(C) + " cochains");
    alt.info(std::to_string(C) + " cochains");
    out.push_back(dec.result());
    out.push_back(alt.result());
  }
  for (const auto& [name, M] : modules) {
    Check c(cfg, "hkr.explicit_k2." + name);
    auto monos = monomials_upto(n, d);
    int C = clamp_count(S, 4);
    for (int j = 0; j < C; ++j) {
      auto phi = memoized(random_monomial_cochain(c.rng, M, 2, d, 25, 1));
      auto corr = corrector(phi, res);
      for (const auto& a : monos)
        c.expect(corrector_k2_explicit(phi, sym_monomial(n, a)) == corr.eval({a}),
                 [&] { return "cochain " + std::to_string(j) + " at " + format_index(a); });
    }
    c.info(std::to_string(C) + " cochains");
    out.push_back(c.result());
  }
  for (const auto& [name, M] : modules) {
    Check c(cfg, "hkr.homotopy_transport." + name);
    for (int k = 1; k <= K; ++k)
      for (int j = 0; j < clamp_count(S, 50); ++j) {
        auto phi = memoized(random_monomial_cochain(c.rng, M, k, std::min(d, 2), 20, 1));
        auto om = omega_project(phi, res);
        auto lhs = hoch_delta(corrector(phi, res));
        auto rhs = corrector(hoch_delta(phi), res);
        for (const auto& t : tuples_or_sample(c.rng, n, k, k >= 3 ? 1 : 2, S))
          c.expect(phi.eval(t) - om.eval(t) == lhs.eval(t) + rhs.eval(t),
                   [&] { return "arity " + std::to_string(k) + " at " + show_tuple(t); });
      }
    out.push_back(c.result());
  }
  {
    Check c(cfg, "hkr.zeta_ae_linear");
    for (const auto& [name, M] : modules)
      for (int k = 1; k <= K; ++k) {
        auto phi = random_monomial_cochain(c.rng, M, k, d, 20, 1);
        for (int j = 0; j < clamp_count(S, 4); ++j) {
          auto x = random_bar(c.rng, n, k, d, 2);
          auto p = random_ae(c.rng, n, 2, 2);
          ModElem want = M->zero();
          ModElem z = zeta_eval(phi, x);
          for (const auto& [pk, pc] : p) want.axpy(pc, M->right(M->left(pk.first, z), pk.second));
          c.expect(zeta_eval(phi, bar_act(p, x)) == want, [&] { return name + " input " + show(x); });
        }
      }
    out.push_back(c.result());
  }
  {
    Check c(cfg, "hkr.dim3.xi_dual_route");
    int m = 3;
    BimodulePtr sym3 = std::make_shared<SymmetricAlgebraBimodule>(m);
    auto res3 = std::make_shared<Resolution>(m);
    for (int k = 1; k <= std::min(K, 3); ++k)
      for (int j = 0; j < clamp_count(S, 100); ++j) {
        auto f = random_antisymmetric_table(c.rng, *sym3, k, 1, 2);
        auto x = xi(f, sym3, res3);
        auto dx = derivative_extension(f, sym3);
        for (const auto& t : tuples_or_sample(c.rng, m, k, 2, S))
          c.expect(x.eval(t) == (1 / factorial(k)) * dx.eval(t),
                   [&] { return "arity " + std::to_string(k) + " at " + show_tuple(t); });
      }
    out.push_back(c.result());
  }
  return out;
}

/* ---------------------------------------------------------------- multidiff */

std::string witness_text(const OrderWitness& w) {
  std::string s = "slot " + std::to_string(w.slot + 1) + " multipliers";
  for (const auto& m : w.multipliers) s += " " + format_index(m);
  return s + " args " + show_tuple(w.args) + " value " + format_mod_elem(w.value);
}

std::vector<CheckResult> axiom_results(const std::string& prefix, const DiffBimodule& M, int bound) {
  std::vector<CheckResult> out;
  for (const auto& a : check_diffbimodule_axioms(M, bound)) {
    CheckResult r;
    r.id = prefix + a.id;
    r.pass = a.pass;
    r.count = 1;
    r.detail = a.pass ? "" : "witness " + a.witness;
    out.push_back(r);
  }
  return out;
}

std::vector<CheckResult> multidiff_suite(const RunConfig& cfg) {
  std::vector<CheckResult> out;
  int n = cfg.dim, d = cfg.max_degree, S = cfg.samples;
  int bd = std::min(d, 2);
  BimodulePtr sym = std::make_shared<SymmetricAlgebraBimodule>(n);
  auto res = std::make_shared<Resolution>(n);

  {
    Check c(cfg, "multidiff.bracket_commute");
    auto phi = random_monomial_cochain(c.rng, sym, 2, d, 20, 1);
    for (int j = 0; j < clamp_count(S, 10); ++j) {
      auto a = random_sym(c.rng, n, 2, 2), b = random_sym(c.rng, n, 2, 2);
      int i1 = c.rng.range(0, 1), i2 = c.rng.range(0, 1);
      auto lhs = bracket({i1, a}, bracket({i2, b}, phi));
      auto rhs = bracket({i2, b}, bracket({i1, a}, phi));
      for (const auto& t : monomial_tuples(n, 2, bd))
        c.expect(lhs.eval(t) == rhs.eval(t), [&] { return "at " + show_tuple(t); });
    }
    out.push_back(c.result());
  }
  {
    Check c(cfg, "multidiff.order.derivation");
    std::vector<DerivationSpec> ds;
    for (int i = 0; i < n; ++i) ds.push_back(partial_derivation(n, i));
    for (int j = 0; j < clamp_count(S, 2); ++j) {
      DerivationSpec r;
      for (int i = 0; i < n; ++i) r.images.push_back(random_sym(c.rng, n, 2, 2));
      ds.push_back(r);
    }
    for (const auto& dspec : ds) {
      auto phi = derivation_cochain({dspec}, sym);
      auto cert = diffop_order_check(phi, {1}, bd, d);
      c.expect(cert.ok, [&] { return "order 1 witness " + witness_text(*cert.witness); });
    }
    out.push_back(c.result());
  }
  {
    Check c(cfg, "multidiff.order.composite");
    std::vector<std::pair<DerivationSpec, DerivationSpec>> pairs;
    for (int i = 0; i < n; ++i)
      for (int k = 0; k < n; ++k) pairs.push_back({partial_derivation(n, i), partial_derivation(n, k)});
    for (int j = 0; j < clamp_count(S, 4); ++j)
      pairs.push_back({random_constant_derivation(c.rng, n), random_constant_derivation(c.rng, n)});
    for (const auto& [d1, d2] : pairs) {
      auto phi = memoized(derivation_cochain({d1, d2}, sym));
      auto ok2 = diffop_order_check(phi, {2}, bd, d);
      c.expect(ok2.ok, [&] { return "order 2 witness " + witness_text(*ok2.witness); });
      auto fail1 = diffop_order_check(phi, {1}, bd, d);
      bool witnessed = !fail1.ok && fail1.witness.has_value();
      if (witnessed) {
        const auto& w = *fail1.witness;
        auto b = phi;
        for (auto it = w.multipliers.rbegin(); it != w.multipliers.rend(); ++it)
          b = bracket({w.slot, sym_monomial(n, *it)}, b);
        witnessed = !w.value.is_zero() && b.eval(w.args) == w.value;
      }
      c.expect(witnessed, [] { return std::string("order 1 not refuted by a verified witness"); });
    }
    out.push_back(c.result());
  }
  {
    Check c(cfg, "multidiff.order.left_mult");
    for (int j = 0; j < clamp_count(S, 4); ++j) {
      ModElem m = sym_mod(random_sym(c.rng, n, 2, 3));
      Cochain lm(1, sym, [sym, m](const MonoTuple& t) { return sym->left(t[0], m); });
      auto cert = diffop_order_check(lm, {0}, bd, d);
      c.expect(cert.ok, [&] { return "witness " + witness_text(*cert.witness); });
    }
    out.push_back(c.result());
  }
  {
    Check c(cfg, "multidiff.order.filtration");
    auto d1 = derivation_cochain({partial_derivation(n, 0)}, sym);
    for (int L = 1; L <= 3; ++L) {
      auto cert = diffop_order_check(d1, {L}, bd, bd);
      c.expect(cert.ok, [&] { return "order " + std::to_string(L) + " witness " + witness_text(*cert.witness); });
    }
    for (int j = 0; j < clamp_count(S, 40); ++j) {
      auto f = random_table(c.rng, *sym, 2, 1, 4);
      auto phi = memoized(derivative_extension(f, sym));
      for (const auto& ord : std::vector<std::vector<int>>{{1, 1}, {1, 2}, {2, 1}, {2, 2}}) {
        auto cert = diffop_order_check(phi, ord, bd, bd);
        c.expect(cert.ok, [&] { return "witness " + witness_text(*cert.witness); });
      }
    }
    out.push_back(c.result());
  }
  {
    Check c(cfg, "multidiff.order.derivative_extension");
    for (int k = 1; k <= 2; ++k)
      for (int j = 0; j < clamp_count(S, 4); ++j) {
        auto f = random_table(c.rng, *sym, k, 1, 4);
        auto phi = memoized(derivative_extension(f, sym));
        auto cert = diffop_order_check(phi, std::vector<int>(static_cast<size_t>(k), 1), bd, bd);
        c.expect(cert.ok, [&] { return "witness " + witness_text(*cert.witness); });
      }
    out.push_back(c.result());
  }
  for (int s = 1; s <= 2; ++s) {
    Check c(cfg, "multidiff.order.xi.s" + std::to_string(s));
    std::vector<DerivationSpec> gens;
    for (int i = 0; i < n; ++i) gens.push_back(partial_derivation(n, i));
    auto M = make_derivation_bimodule(n, gens, s);
    for (int k = 1; k <= 2; ++k)
      for (int j = 0; j < clamp_count(S, 10); ++j) {
        auto f = random_antisymmetric_table(c.rng, *M, k, 1, 3);
        auto x = xi(f, M, res);
        c.expect(xi_hat(x) == f, [&] { return "xi_hat does not recover the table, arity " + std::to_string(k); });
        auto cert = diffop_order_check(x, std::vector<int>(static_cast<size_t>(k), s + 1), bd, bd);
        c.expect(cert.ok, [&] { return "arity " + std::to_string(k) + " witness " + witness_text(*cert.witness); });
      }
    out.push_back(c.result());
  }
  for (int s = 1; s <= 2; ++s) {
    std::vector<DerivationSpec> gens{partial_derivation(n, 0)};
    if (n >= 2) {
      DerivationSpec mixed;
      mixed.images.push_back(sym_one(n));
      for (int i = 1; i < n; ++i) mixed.images.push_back(sym_monomial(n, zero_index(n), 2));
      gens.push_back(mixed);
    }
    auto M = make_derivation_bimodule(n, gens, s);
    for (auto& r : axiom_results("multidiff.axioms.s" + std::to_string(s) + ".", *M, bd)) out.push_back(r);
  }
  {
    SymmetricAlgebraBimodule Ssym(n);
    for (auto& r : axiom_results("multidiff.axioms.sym.", Ssym, std::min(d, 3))) out.push_back(r);
  }
  {
    Check c(cfg, "multidiff.fault_detected");
    std::vector<DerivationSpec> gens;
    for (int i = 0; i < n; ++i) gens.push_back(partial_derivation(n, i));
    auto base = make_derivation_bimodule(n, gens, 2);
    CorruptedBimodule bad(base, 1);
    bool found = false;
    std::string wit;
    for (const auto& a : check_diffbimodule_axioms(bad, bd))
      if (a.id == "e-linear-vanish" && !a.pass && !a.witness.empty()) {
        found = true;
        wit = a.witness;
      }
    c.expect(found, [] { return std::string("corrupted D_2 not detected"); });
    c.info("detected: " + wit);
    out.push_back(c.result());
    if (cfg.inject_fault)
      for (auto& r : axiom_results("multidiff.axioms.injected.", bad, bd)) out.push_back(r);
  }
  return out;
}

/* ---------------------------------------------------------------- seminorms */

std::vector<CheckResult> seminorms_suite(const RunConfig& cfg) {
  std::vector<CheckResult> out;
  int n = cfg.dim, d = cfg.max_degree, K = cfg.max_k, S = cfg.samples;
  const std::vector<Scalar> scales{Scalar(1), Scalar(1, 2), Scalar(3)};

  {
    Check c(cfg, "seminorms.submultiplicative");
    int P = std::max(500, S);
    for (int j = 0; j < P; ++j) {
      auto a = random_sym(c.rng, n, d, 4), b = random_sym(c.rng, n, d, 4);
      for (const auto& cc : scales)
        c.expect(pfrak(cc, sym_mul(a, b)) <= pfrak(cc, a) * pfrak(cc, b),
                 [&] { return "c=" + format_scalar(cc) + " pair " + show(a) + " ; " + show(b); });
    }
    c.info(std::to_string(P) + " pairs");
    out.push_back(c.result());
  }
  {
    Check c(cfg, "seminorms.separable");
    int m = std::max(n, 2);
    for (int j = 0; j < S; ++j) {
      SymElement u1 = c.rng.coef() * sym_var(m, 0);
      SymElement u2(m);
      for (int i = 1; i < m; ++i) u2 += c.rng.coef() * sym_var(m, i);
      for (const auto& cc : scales)
        c.expect(pnorm_k(cc, sym_mul(u1, u2), 2) == pnorm_k(cc, u1, 1) * pnorm_k(cc, u2, 1),
                 [&] { return "c=" + format_scalar(cc) + " on " + show(u1) + " ; " + show(u2); });
    }
    out.push_back(c.result());
  }
  {
    Check c(cfg, "seminorms.tensor_oracle");
    for (int j = 0; j < S; ++j) {
      int k = c.rng.range(0, d);
      auto w = random_homogeneous(c.rng, n, k, 3);
      for (const auto& cc : scales)
        c.expect(pnorm_k(cc, w, k) == tensor_norm(cc, sym_to_tensor(w, k)),
                 [&] { return "c=" + format_scalar(cc) + " on " + show(w); });
    }
    out.push_back(c.result());
  }
  {
    Check c(cfg, "seminorms.axioms");
    for (int j = 0; j < S; ++j) {
      int k = c.rng.range(0, d);
      auto a = random_homogeneous(c.rng, n, k, 3), b = random_homogeneous(c.rng, n, k, 3);
      Scalar lam = c.rng.coef() / Scalar(3);
      for (const auto& cc : scales) {
        c.expect(pnorm_k(cc, lam * a, k) == abs(lam) * pnorm_k(cc, a, k), [&] { return "homogeneity on " + show(a); });
        c.expect(pnorm_k(cc, a + b, k) <= pnorm_k(cc, a, k) + pnorm_k(cc, b, k),
                 [&] { return "triangle on " + show(a) + " ; " + show(b); });
      }
    }
    out.push_back(c.result());
  }
  for (size_t ci = 0; ci < scales.size(); ++ci) {
    Rng rng(cfg.seed ^ fnv1a("seminorms.bound.c=" + format_scalar(scales[ci])));
    for (const auto& e : operator_bound_report(rng, n, K, d, S, scales[ci])) {
      CheckResult r;
      r.id = "seminorms.bound." + e.map + ".k" + std::to_string(e.k) + ".c=" + format_scalar(scales[ci]);
      r.pass = e.pass;
      r.count = e.samples;
      r.detail = "max ratio " + format_scalar(e.max_ratio) + " bound " + format_scalar(e.bound);
      out.push_back(r);
    }
  }
  {
    Check c(cfg, "seminorms.exp_bound");
    for (int N = 0; N <= 8; ++N)
      for (int j = 0; j < clamp_count(S, 10); ++j) {
        auto u = random_homogeneous(c.rng, n, 1, 2);
        auto e = series_exp(u, N);
        for (const auto& cc : scales)
          c.expect(pfrak(cc, e) <= exp_partial_sum(pnorm_k(cc, u, 1), N),
                   [&] { return "N=" + std::to_string(N) + " c=" + format_scalar(cc) + " u=" + show(u); });
      }
    out.push_back(c.result());
  }
  {
    Check c(cfg, "seminorms.exp_square");
    for (int N = 0; N <= 8; ++N)
      for (int j = 0; j < clamp_count(S, 40); ++j) {
        auto u = random_homogeneous(c.rng, n, 1, 2);
        auto e = series_exp(u, N);
        c.expect(series_mul(e, e).total() == series_exp(Scalar(2) * u, N).total(),
                 [&] { return "N=" + std::to_string(N) + " u=" + show(u); });
      }
    out.push_back(c.result());
  }
  return out;
}

}  // namespace

const std::vector<std::string>& suite_names() {
  static const std::vector<std::string> names{"complexes", "chain-maps", "hkr", "multidiff", "seminorms", "all"};
  return names;
}

std::vector<CheckResult> run_suite(const std::string& suite, const RunConfig& cfg) {
  std::vector<CheckResult> out;
  auto add = [&](std::vector<CheckResult> r) { out.insert(out.end(), r.begin(), r.end()); };
  bool all = suite == "all";
  if (std::find(suite_names().begin(), suite_names().end(), suite) == suite_names().end())
    throw std::invalid_argument("unknown suite '" + suite + "'");
  if (all || suite == "complexes") add(complexes_suite(cfg));
  if (all || suite == "chain-maps") add(chain_maps_suite(cfg));
  if (all || suite == "hkr") add(hkr_suite(cfg));
  if (all || suite == "multidiff") add(multidiff_suite(cfg));
  if (all || suite == "seminorms") add(seminorms_suite(cfg));
  std::sort(out.begin(), out.end(), [](const CheckResult& a, const CheckResult& b) { return a.id < b.id; });
  return out;
}

bool all_passed(const std::vector<CheckResult>& results) {
  return std::all_of(results.begin(), results.end(), [](const CheckResult& r) { return r.pass; });
}

std::string format_report(const std::vector<CheckResult>& results, const RunConfig& cfg, bool machine) {
  size_t passed = 0;
  for (const auto& r : results) passed += r.pass ? 1 : 0;
  if (machine) {
    nlohmann::ordered_json j;
    j["config"] = {{"dim", cfg.dim},       {"max_degree", cfg.max_degree}, {"max_k", cfg.max_k},
                   {"seed", cfg.seed},     {"samples", cfg.samples},       {"inject_fault", cfg.inject_fault}};
    j["checks"] = nlohmann::ordered_json::array();
    for (const auto& r : results)
      j["checks"].push_back({{"id", r.id}, {"status", r.pass ? "pass" : "fail"}, {"count", r.count}, {"detail", r.detail}});
    j["passed"] = passed;
    j["failed"] = results.size() - passed;
    return j.dump(2) + "\n";
  }
  std::ostringstream os;
  os << "config dim=" << cfg.dim << " max-degree=" << cfg.max_degree << " max-k=" << cfg.max_k
     << " seed=" << cfg.seed << " samples=" << cfg.samples << (cfg.inject_fault ? " inject-fault" : "") << "\n";
  for (const auto& r : results) {
    os << (r.pass ? "PASS " : "FAIL ") << r.id << " [" << r.count << "]";
    if (!r.detail.empty()) os << " " << r.detail;
    os << "\n";
  }
  os << "summary " << passed << " passed, " << results.size() - passed << " failed\n";
  return os.str();
}

}  // namespace hkr
