#include <map>

#include "doctest.h"
#include "helpers.hpp"
#include "hkr/random.hpp"

using namespace hkr;
using namespace testing_helpers;

namespace {

const MultiIndex O2{0, 0}, X{1, 0}, Y{0, 1};

/* integral over 1 >= t_1 >= ... >= t_k >= 0 of prod t_j^{e_j}, via gap
   variables g_j = t_j - t_{j+1} (g_k = t_k) and the Dirichlet moment
   formula: integral of prod g^m over the simplex = prod m! / (|m| + k)! */
Scalar dirichlet_oracle(const std::vector<int>& e) {
  size_t k = e.size();
  std::map<std::vector<int>, Scalar> poly{{std::vector<int>(k, 0), 1}};
  for (size_t j = 0; j < k; ++j)
    for (int p = 0; p < e[j]; ++p) {
      std::map<std::vector<int>, Scalar> next;
      for (const auto& [m, c] : poly)
        for (size_t i = j; i < k; ++i) {
          auto m2 = m;
          ++m2[i];
          next[m2] += c;
        }
      poly = std::move(next);
    }
  Scalar total = 0;
  for (const auto& [m, c] : poly) {
    Scalar w = c;
    int sum = 0;
    for (int mi : m) {
      w *= factorial(mi);
      sum += mi;
    }
    total += w / factorial(sum + static_cast<int>(k));
  }
  return total;
}


}  // namespace

TEST_CASE("bar_d examples") {
  CHECK(bar_d(bar({O2, X, O2})) == bar({X, O2}) - bar({O2, X}));
  CHECK(bar_d(bar({O2, X, Y, O2})) ==
        bar({X, Y, O2}) - bar({O2, {1, 1}, O2}) + bar({O2, X, Y}));
  CHECK_THROWS_AS(bar_d(bar({X, Y})), ShapeError);
}

TEST_CASE("bar_d squares to zero") {
  Rng rng(1);
  for (int n = 1; n <= 3; ++n)
    for (int k = 2; k <= 4; ++k)
      for (int j = 0; j < 40; ++j) CHECK(bar_d(bar_d(random_bar(rng, n, k, 3, 3))).is_zero());
}

TEST_CASE("bar homotopy") {
  CHECK(bar_h(bar({X, Y, {1, 1}})) == bar({O2, X, Y, {1, 1}}));
  Rng rng(2);
  for (int n = 1; n <= 3; ++n) {
    for (int j = 0; j < 40; ++j) {
      auto a = random_sym(rng, n, 3, 3);
      CHECK(bar_eps(bar_h_unit(a)) == a);
      auto c0 = random_bar(rng, n, 0, 3, 3);
      CHECK(bar_d(bar_h(c0)) + bar_h_unit(bar_eps(c0)) == c0);
      for (int k = 1; k <= 3; ++k) {
        auto c = random_bar(rng, n, k, 3, 3);
        CHECK(bar_d(bar_h(c)) + bar_h(bar_d(c)) == c);
      }
    }
  }
}

TEST_CASE("augmentation") {
  CHECK(bar_eps(bar({X, Y})) == mono({1, 1}));
  CHECK(bar_eps(bar_d(bar({O2, X, O2}))).is_zero());
  CHECK(bar_eps(bar({O2, O2})) == sym_one(2));
  CHECK(koszul_eps(koszul_partial(kos(O2, O2, {0}))).is_zero());
  CHECK_THROWS_AS(bar_eps(bar({O2, X, O2})), ShapeError);
}

TEST_CASE("module actions") {
  AePair p = ae_tensor(mono({1, 0}), mono({0, 2}));
  CHECK(bar_act(p, bar({X, Y, X})) == bar({{2, 0}, Y, {1, 2}}));
  CHECK(koszul_act(p, kos(X, Y, {1})) == kos({2, 0}, {0, 3}, {1}));
  Rng rng(4);
  for (int j = 0; j < 50; ++j) {
    auto c = random_bar(rng, 2, 2, 3, 3);
    auto q = random_ae(rng, 2, 2, 2), r = random_ae(rng, 2, 2, 2);
    CHECK(bar_act(ae_one(2), c) == c);
    CHECK(bar_act(ae_mul(q, r), c) == bar_act(q, bar_act(r, c)));
    auto kc = random_koszul(rng, 2, 1, 3, 3);
    CHECK(koszul_act(ae_mul(q, r), kc) == koszul_act(q, koszul_act(r, kc)));
  }
}

TEST_CASE("koszul_partial examples") {
  CHECK(koszul_partial(kos(O2, O2, {0})) == kos(X, O2, {}) - kos(O2, X, {}));
  CHECK(koszul_partial(kos(O2, O2, {0, 1})) ==
        kos(X, O2, {1}) - kos(O2, X, {1}) - kos(Y, O2, {0}) + kos(O2, Y, {0}));
  CHECK(koszul_partial(kos(O2, O2, {0, 1})).size() == 4);
  CHECK_THROWS_AS(koszul_partial(kos(X, O2, {})), ShapeError);
  Rng rng(6);
  for (int n = 2; n <= 3; ++n)
    for (int k = 2; k <= n; ++k)
      for (int j = 0; j < 40; ++j)
        CHECK(koszul_partial(koszul_partial(random_koszul(rng, n, k, 3, 3))).is_zero());
}

TEST_CASE("koszul_delta examples") {
  CHECK(koszul_delta(kos(O2, X, {1})).is_zero());
  CHECK(koszul_delta(kos({2, 0}, Y, {})) == kos(X, Y, {0}, 2));
  CHECK(koszul_delta(kos({1, 1}, O2, {})) == kos(Y, O2, {0}) + kos(X, O2, {1}));
}

TEST_CASE("koszul_i_t examples") {
  auto c = kos(O2, Y, {1});
  CHECK(koszul_i_t(c) == TPoly<KoszulKey>::constant(1, c));
  TPoly<KoszulKey> want(1, 2, 1);
  /* t x (x) 1 + (1 - t) 1 (x) x */
  want.add({1}, {X, O2, {{0}}}, 1);
  want.add({0}, {O2, X, {{0}}}, 1);
  want.add({1}, {O2, X, {{0}}}, -1);
  CHECK(koszul_i_t(kos(X, O2, {0})) == want);
  TPoly<KoszulKey> want2(1, 2, 0);
  want2.add_beta_term({0}, 0, 2, 0, {{2, 0}, O2, {}}, 1);
  want2.add_beta_term({0}, 0, 1, 1, {X, X, {}}, 2);
  want2.add_beta_term({0}, 0, 0, 2, {O2, {2, 0}, {}}, 1);
  CHECK(koszul_i_t(kos({2, 0}, O2, {})) == want2);
}

TEST_CASE("koszul_h examples") {
  CHECK(koszul_h(kos(X, O2, {})) == kos(O2, O2, {0}));
  CHECK(koszul_h(kos(O2, {1, 2}, {1})).is_zero());
}

TEST_CASE("koszul homotopy identities") {
  Rng rng(7);
  for (int n = 1; n <= 3; ++n)
    for (int j = 0; j < 40; ++j) {
      auto a = random_sym(rng, n, 3, 3);
      CHECK(koszul_eps(koszul_h_unit(a)) == a);
      auto c0 = random_koszul(rng, n, 0, 3, 3);
      CHECK(koszul_h_unit(koszul_eps(c0)) + koszul_partial(koszul_h(c0)) == c0);
      for (int k = 1; k <= std::min(n, 3); ++k) {
        auto c = random_koszul(rng, n, k, 3, 3);
        CHECK(koszul_h(koszul_partial(c)) + koszul_partial(koszul_h(c)) == c);
      }
    }
}

TEST_CASE("koszul_h equals direct t-integration of i_t o delta") {
  Rng rng(8);
  for (int k = 0; k <= 2; ++k)
    for (int j = 0; j < 30; ++j) {
      auto c = random_koszul(rng, 3, k, 3, 3);
      CHECK(koszul_h(c) == unit_integrate(koszul_i_t(koszul_delta(c)), k));
    }
}

TEST_CASE("Leibniz rules and i_t multiplicativity") {
  Rng rng(9);
  for (int j = 0; j < 60; ++j) {
    int p = rng.range(0, 1), q = rng.range(0, 1);
    auto mu = random_koszul(rng, 3, p, 3, 2), nu = random_koszul(rng, 3, q, 3, 2);
    Scalar sign = p % 2 ? -1 : 1;
    CHECK(koszul_delta(koszul_product(mu, nu)) ==
          koszul_product(koszul_delta(mu), nu) + sign * koszul_product(mu, koszul_delta(nu)));
    if (p + q >= 1) {
      KoszulChain lhs = koszul_partial(koszul_product(mu, nu));
      KoszulChain rhs(3, p + q - 1);
      if (p >= 1) rhs += koszul_product(koszul_partial(mu), nu);
      if (q >= 1) rhs.axpy(sign, koszul_product(mu, koszul_partial(nu)));
      CHECK(lhs == rhs);
    }
    CHECK(koszul_i_t(koszul_product(mu, nu)) == koszul_tproduct(koszul_i_t(mu), koszul_i_t(nu)));
  }
}

TEST_CASE("t-derivative of i_t") {
  for (const auto& a : monomials_upto(2, 3))
    for (const auto& b : monomials_upto(2, 2)) {
      auto c = kos(a, b, {});
      auto lhs = t_derivative(koszul_i_t(c), 0);
      auto rhs = map_payload<KoszulKey, KoszulKey>(
          koszul_i_t(koszul_delta(c)), 0, [](const KoszulKey& key) {
            KoszulChain kc(static_cast<int>(key.a.size()), key.u.degree());
            kc.add(key, 1);
            return koszul_partial(kc);
          });
      CHECK(lhs == rhs);
    }
}

TEST_CASE("simplex integration") {
  for (int k = 0; k <= 5; ++k) {
    TPoly<KoszulKey> one(k, 1, 0);
    one.add(std::vector<int>(static_cast<size_t>(k), 0), {{0}, {0}, {}}, 1);
    CHECK(simplex_integrate(one).coeff({{0}, {0}, {}}) == 1 / factorial(k));
  }
  Rng rng(10);
  for (int j = 0; j < 200; ++j) {
    int k = rng.range(1, 4);
    std::vector<int> e(static_cast<size_t>(k));
    for (auto& x : e) x = rng.range(0, 4);
    TPoly<KoszulKey> p(k, 1, 0);
    p.add(e, {{0}, {0}, {}}, 1);
    CHECK(simplex_integrate(p).coeff({{0}, {0}, {}}) == dirichlet_oracle(e));
  }
}

TEST_CASE("zero maps to zero") {
  CHECK(bar_d(bar_zero(2, 2)).is_zero());
  CHECK(koszul_h(koszul_zero(2, 1)).is_zero());
  CHECK(bar_h(bar_zero(2, 1)) == bar_zero(2, 2));
}
