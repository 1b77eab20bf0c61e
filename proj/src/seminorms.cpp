#include "hkr/seminorms.hpp"

#include <algorithm>
#include <numeric>

#include "hkr/chain_maps.hpp"

namespace hkr {

static Scalar power(const Scalar& c, int k) {
  Scalar r = 1;
  for (int j = 0; j < k; ++j) r *= c;
  return r;
}

Scalar pnorm_k(const Scalar& c, const SymElement& w, int k) {
  if (!sym_is_homogeneous(w, k)) throw ShapeError("pnorm_k needs a homogeneous element of degree k");
  Scalar s = 0;
  for (const auto& [a, x] : w) s += abs(x);
  return power(c, k) * s;
}

Scalar pfrak(const Scalar& c, const SymElement& w) {
  Scalar s = 0;
  for (const auto& [d, comp] : grade(w)) s += pnorm_k(c, comp, d);
  return s;
}

SymElement TruncatedSeries::total() const {
  SymElement r(dim);
  for (const auto& [d, comp] : comps) r += comp;
  return r;
}

TruncatedSeries truncate(const SymElement& w, int order) {
  TruncatedSeries s{order, w.dim, {}};
  for (auto& [d, comp] : grade(w))
    if (d <= order) s.comps.emplace(d, std::move(comp));
  return s;
}

TruncatedSeries series_mul(const TruncatedSeries& a, const TruncatedSeries& b) {
  if (a.dim != b.dim) throw DimensionError("series_mul: dimension mismatch");
  return truncate(sym_mul(a.total(), b.total()), std::min(a.order, b.order));
}

Scalar pfrak(const Scalar& c, const TruncatedSeries& s) {
  Scalar r = 0;
  for (const auto& [d, comp] : s.comps) r += pnorm_k(c, comp, d);
  return r;
}

TruncatedSeries series_exp(const SymElement& u, int N) {
  if (!sym_is_homogeneous(u, 1)) throw ShapeError("series_exp needs an element of degree 1");
  TruncatedSeries s{N, u.dim, {}};
  SymElement term = sym_one(u.dim);
  for (int k = 0; k <= N; ++k) {
    if (!term.is_zero()) s.comps.emplace(k, term);
    term = Scalar(1, k + 1) * sym_mul(term, u);
  }
  return s;
}

Scalar exp_partial_sum(const Scalar& x, int N) {
  Scalar r = 0, term = 1;
  for (int k = 0; k <= N; ++k) {
    r += term;
    term = term * x / (k + 1);
  }
  return r;
}

Tensor sym_to_tensor(const SymElement& w, int k) {
  if (!sym_is_homogeneous(w, k)) throw ShapeError("sym_to_tensor needs a homogeneous element of degree k");
  Tensor t{w.dim, k, {}};
  Scalar norm = 1 / factorial(k);
  for (const auto& [a, x] : w) {
    std::vector<int> word;
    for (int i = 0; i < w.dim; ++i)
      for (int j = 0; j < a[static_cast<size_t>(i)]; ++j) word.push_back(i);
    /* each distinct rearrangement appears prod a_i! times among the k! permutations */
    Scalar mult = 1;
    for (int ai : a) mult *= factorial(ai);
    do t.coef[word] += x * norm * mult;
    while (std::next_permutation(word.begin(), word.end()));
  }
  std::erase_if(t.coef, [](const auto& kv) { return sgn(kv.second) == 0; });
  return t;
}

Scalar tensor_norm(const Scalar& c, const Tensor& t) {
  Scalar s = 0;
  for (const auto& [w, x] : t.coef) s += abs(x);
  return power(c, t.rank) * s;
}

static Tensor project(const Tensor& t, bool alternate) {
  Tensor r{t.dim, t.rank, {}};
  Scalar norm = 1 / factorial(t.rank);
  std::vector<int> p(static_cast<size_t>(t.rank));
  for (const auto& [w, x] : t.coef) {
    std::iota(p.begin(), p.end(), 0);
    do {
      std::vector<int> w2(w.size());
      int inv = 0;
      for (size_t i = 0; i < p.size(); ++i) {
        w2[i] = w[static_cast<size_t>(p[i])];
        for (size_t j = i + 1; j < p.size(); ++j)
          if (p[i] > p[j]) ++inv;
      }
      Scalar sign = alternate && inv % 2 ? -1 : 1;
      r.coef[w2] += sign * norm * x;
    } while (std::next_permutation(p.begin(), p.end()));
  }
  std::erase_if(r.coef, [](const auto& kv) { return sgn(kv.second) == 0; });
  return r;
}

Tensor sym_projector(const Tensor& t) { return project(t, false); }
Tensor alt_projector(const Tensor& t) { return project(t, true); }

Scalar koszul_norm(const Scalar& c, const KoszulChain& x) {
  Scalar s = 0;
  for (const auto& [k, v] : x) s += abs(v) * power(c, degree(k.a) + degree(k.b) + k.u.degree());
  return s;
}

Scalar bar_norm(const Scalar& c, const BarChain& x) {
  Scalar s = 0;
  for (const auto& [key, v] : x) {
    int d = 0;
    for (const auto& a : key) d += degree(a);
    s += abs(v) * power(c, d);
  }
  return s;
}

namespace {

void record(BoundEntry& e, int id, const Scalar& num, const Scalar& den) {
  ++e.samples;
  if (sgn(den) == 0) return;
  Scalar r = num / den;
  if (e.argmax < 0 || r > e.max_ratio) {
    e.max_ratio = r;
    e.argmax = id;
  }
  if (r > e.bound) e.pass = false;
}

Tensor random_tensor(Rng& rng, int n, int k, int terms) {
  Tensor t{n, k, {}};
  for (int j = 0; j < terms; ++j) {
    std::vector<int> w(static_cast<size_t>(k));
    for (auto& i : w) i = static_cast<int>(rng.below(static_cast<uint64_t>(n)));
    t.coef[w] += rng.coef();
  }
  std::erase_if(t.coef, [](const auto& kv) { return sgn(kv.second) == 0; });
  return t;
}

}  // namespace

std::vector<BoundEntry> operator_bound_report(Rng& rng, int n, int max_k, int max_deg, int samples,
                                              const Scalar& c) {
  std::vector<BoundEntry> out;
  for (int k = 0; k <= std::min(max_k, n); ++k) {
    BoundEntry f{"F", k, 0, 0, -1, factorial(k), true};
    BoundEntry d{"koszul_partial", k, 0, 0, -1, Scalar(2 * k), true};
    BoundEntry it{"integral_t^k_i_t", k, 0, 0, -1, Scalar(1, k + 1), true};
    BoundEntry de{"koszul_delta_2c", k, 0, 0, -1, Scalar(1), true};
    for (int j = 0; j < samples; ++j) {
      /* alternate single basis elements, where the constants are attained, with sums */
      auto x = random_koszul(rng, n, k, max_deg, j % 2 ? 3 : 1);
      Scalar nx = koszul_norm(c, x);
      record(f, j, bar_norm(c, F(x)), nx);
      if (k >= 1) record(d, j, koszul_norm(c, koszul_partial(x)), nx);
      record(it, j, koszul_norm(c, unit_integrate(koszul_i_t(x), k)), nx);
      record(de, j, koszul_norm(c, koszul_delta(x)), koszul_norm(2 * c, x));
    }
    out.push_back(f);
    if (k >= 1) out.push_back(d);
    out.push_back(it);
    out.push_back(de);
  }
  for (int l = 1; l <= max_k; ++l) {
    BoundEntry s{"Sym", l, 0, 0, -1, Scalar(1), true};
    BoundEntry a{"Alt", l, 0, 0, -1, Scalar(1), true};
    for (int j = 0; j < samples; ++j) {
      auto t = random_tensor(rng, n, l, j % 2 ? 4 : 1);
      Scalar nt = tensor_norm(c, t);
      record(s, j, tensor_norm(c, sym_projector(t)), nt);
      record(a, j, tensor_norm(c, alt_projector(t)), nt);
    }
    out.push_back(s);
    out.push_back(a);
  }
  return out;
}

}  // namespace hkr
