#include "doctest.h"
#include "helpers.hpp"
#include "hkr/chain_maps.hpp"
#include "hkr/seminorms.hpp"

using namespace hkr;
using namespace testing_helpers;

namespace {
const Scalar scales[] = {Scalar(1), Scalar(1, 2), Scalar(3)};
}

TEST_CASE("pnorm_k examples") {
  Scalar c(5, 3);
  CHECK(pnorm_k(c, mono({1, 0}) + mono({0, 1}), 1) == 2 * c);
  CHECK(pnorm_k(c, mono({1, 1}), 2) == c * c);
  CHECK(pnorm_k(c, mono({0, 0}, -7), 0) == 7);
  auto t = sym_to_tensor(mono({1, 1}), 2);
  CHECK(t.coef.size() == 2);
  CHECK(t.coef.at({0, 1}) == Scalar(1, 2));
  CHECK(t.coef.at({1, 0}) == Scalar(1, 2));
  CHECK_THROWS_AS(pnorm_k(c, mono({1, 0}) + mono({0, 0}), 1), ShapeError);
}

TEST_CASE("pnorm_k matches the expanded tensor l1 sum") {
  Rng rng(1);
  for (int n = 1; n <= 3; ++n)
    for (int k = 0; k <= 4; ++k)
      for (int j = 0; j < 20; ++j) {
        auto w = random_homogeneous(rng, n, k, 3);
        for (const auto& c : scales) CHECK(pnorm_k(c, w, k) == tensor_norm(c, sym_to_tensor(w, k)));
      }
}

TEST_CASE("seminorm axioms and separable products") {
  Rng rng(2);
  for (int j = 0; j < 60; ++j) {
    int k = rng.range(0, 3);
    auto a = random_homogeneous(rng, 3, k, 3), b = random_homogeneous(rng, 3, k, 3);
    Scalar lam = rng.coef() / Scalar(3);
    for (const auto& c : scales) {
      CHECK(pnorm_k(c, lam * a, k) == abs(lam) * pnorm_k(c, a, k));
      CHECK(pnorm_k(c, a + b, k) <= pnorm_k(c, a, k) + pnorm_k(c, b, k));
    }
  }
  /* disjoint supports: u1 in span(e1), u2 in span(e2, e3) */
  for (int j = 0; j < 40; ++j) {
    SymElement u1 = rng.coef() * sym_var(3, 0);
    SymElement u2 = rng.coef() * sym_var(3, 1) + rng.coef() * sym_var(3, 2);
    for (const auto& c : scales)
      CHECK(pnorm_k(c, sym_mul(u1, u2), 2) == pnorm_k(c, u1, 1) * pnorm_k(c, u2, 1));
  }
}

TEST_CASE("pfrak") {
  Scalar c(2, 7);
  CHECK(pfrak(c, mono({0, 0}) + mono({1, 0})) == 1 + c);
  CHECK(pfrak(c, sym_zero(2)) == 0);
  Rng rng(3);
  for (int n = 1; n <= 3; ++n)
    for (int j = 0; j < 80; ++j) {
      auto a = random_sym(rng, n, 4, 4), b = random_sym(rng, n, 4, 4);
      for (const auto& cc : scales) CHECK(pfrak(cc, sym_mul(a, b)) <= pfrak(cc, a) * pfrak(cc, b));
    }
}

TEST_CASE("projectors and chain seminorms") {
  Tensor t{2, 2, {{{0, 1}, 1}}};
  auto s = sym_projector(t);
  CHECK(s.coef.at({0, 1}) == Scalar(1, 2));
  CHECK(s.coef.at({1, 0}) == Scalar(1, 2));
  auto a = alt_projector(t);
  CHECK(a.coef.at({1, 0}) == Scalar(-1, 2));
  CHECK(alt_projector(Tensor{2, 2, {{{0, 0}, 1}}}).coef.empty());
  Scalar c(3);
  CHECK(bar_norm(c, F(kos({0, 0}, {0, 0}, {0, 1}))) == 2 * c * c);
  CHECK(koszul_norm(c, kos({0, 0}, {0, 0}, {0, 1})) == c * c);
}

TEST_CASE("operator bounds") {
  for (const auto& c : scales) {
    Rng rng(4);
    auto rep = operator_bound_report(rng, 2, 3, 3, 60, c);
    for (const auto& e : rep) {
      INFO(e.map, " k=", e.k);
      CHECK(e.pass);
      CHECK(e.max_ratio <= e.bound);
    }
  }
  Rng rng(5);
  auto rep = operator_bound_report(rng, 2, 2, 2, 200, 1);
  for (const auto& e : rep)
    if (e.map == "F" && e.k == 2) CHECK(e.max_ratio == 2);
  auto rep3 = operator_bound_report(rng, 3, 3, 2, 40, 1);
  for (const auto& e : rep3) CHECK(e.pass);
}

TEST_CASE("truncated exponential") {
  auto e0 = series_exp(sym_zero(2), 5);
  CHECK(e0.total() == sym_one(2));
  CHECK_THROWS_AS(series_exp(mono({1, 1}), 3), ShapeError);
  Rng rng(6);
  for (int N = 0; N <= 8; ++N)
    for (int j = 0; j < 10; ++j) {
      auto u = random_homogeneous(rng, 2, 1, 2);
      auto e = series_exp(u, N);
      for (const auto& c : scales) CHECK(pfrak(c, e) <= exp_partial_sum(pnorm_k(c, u, 1), N));
      CHECK(series_mul(e, e).total() == series_exp(Scalar(2) * u, N).total());
    }
  CHECK(exp_partial_sum(1, 3) == Scalar(8, 3));
}
