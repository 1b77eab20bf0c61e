#include "doctest.h"
#include "helpers.hpp"
#include "hkr/cochain_spec.hpp"
#include "hkr/samplers.hpp"
#include "hkr/textio.hpp"

using namespace hkr;
using namespace testing_helpers;

namespace {

template <class T>
T roundtrip(const T& x) {
  return std::get<T>(parse_element(write_element(make_element(x))).value);
}

void expect_error_at(const std::string& text, int line, int col) {
  try {
    parse_element(text);
    FAIL("no parse error for: " << text);
  } catch (const ParseError& e) {
    INFO(e.what());
    CHECK(e.line == line);
    CHECK(e.col == col);
  }
}

}  // namespace

TEST_CASE("text round trip") {
  Rng rng(1);
  for (int j = 0; j < 50; ++j) {
    int n = rng.range(1, 3), k = rng.range(0, 3);
    auto b = random_bar(rng, n, k, 3, 3);
    CHECK(roundtrip(b) == b);
    auto s = random_sym(rng, n, 3, 4);
    CHECK(roundtrip(s) == s);
    int w = std::min(n, k);
    auto q = random_koszul(rng, n, w, 3, 3);
    CHECK(roundtrip(q) == q);
    auto t = koszul_i_t(q);
    CHECK(roundtrip(t) == t);
    ExtElement e = ext_basis(3, {2, 0}, Scalar(5, 7)) + ext_basis(3, {1, 2});
    CHECK(roundtrip(e) == e);
  }
  Tensor t{2, 2, {{{0, 1}, Scalar(1, 2)}, {{1, 1}, -3}}};
  auto t2 = roundtrip(t);
  CHECK(t2.coef == t.coef);
  CHECK(write_element(make_element(bar_zero(2, 1))) == "bar 2 1\n");
}

TEST_CASE("text format details") {
  auto e = parse_element("# comment\n\next 3 2\n2 1 : 1\n3 3 : 4   # repeated index\n");
  CHECK(std::get<ExtElement>(e.value) == ext_basis(3, {0, 1}, -1));
  auto q = parse_element("koszul 2 0\n1 0 | 0 2 | : -2/4\n1 0 | 0 2 | : 1\n");
  CHECK(std::get<KoszulChain>(q.value) == kos({1, 0}, {0, 2}, {}, Scalar(1, 2)));
  auto b = parse_element("bar 1 0\n2 | 0 : 3\n");
  CHECK(write_element(b) == "bar 1 0\n2 | 0 : 3/1\n");
  CHECK(inline_text(b) == "(2 | 0):3/1");
  CHECK(inline_text(make_element(sym_zero(2))) == "0");
  auto k = parse_element("koszul 2 1\n0 0 | 0 0 | 2 : 1\n");
  CHECK(write_element(k) == "koszul 2 1\n0 0 | 0 0 | 2 : 1/1\n");
}

TEST_CASE("parse errors carry positions") {
  expect_error_at("bar 2 1\n0 0 | 1 0 | 0 0 : 1/0\n", 2, 21);
  expect_error_at("foo 2 1\n", 1, 1);
  expect_error_at("bar 2\n", 1, 6);
  expect_error_at("sym 2 1\n", 1, 7);
  expect_error_at("sym 2 0\n1 x : 1\n", 2, 3);
  expect_error_at("sym 2 0\n1 0 1\n", 2, 6);
  expect_error_at("sym 2 0\n1 0 : 1 2\n", 2, 9);
  expect_error_at("sym 2 0\n1 0 :\n", 2, 6);
  expect_error_at("koszul 2 1\n0 0 | 0 0 | 3 : 1\n", 2, 13);
  expect_error_at("koszul 2 1\n0 0 | 0 0 ; 1 : 1\n", 2, 11);
  expect_error_at("koszul 2 1\n0 0 | 1 0 0 | 1 : 1\n", 2, 7);
  expect_error_at("bar 2 1\n0 0 | 1 0 : 1\n", 2, 11);
  expect_error_at("", 1, 1);
  expect_error_at("\n# only a comment\n", 1, 1);
}

TEST_CASE("cochain spec compiles to the library cochains") {
  auto spec = load_cochain_spec(R"({
    "dim": 2,
    "cochain": {"kind": "sum", "terms": [
      {"kind": "xi", "table": [[[1, 2], [[[1, 0], "2/3"]]]]},
      {"kind": "coboundary", "weight": -2,
       "of": {"kind": "monomial_table", "entries": [[[[1, 1]], [[[0, 2], 1]]]]}}]}
  })");
  CHECK(spec.dim == 2);
  CHECK(spec.arity == 2);
  CHECK(spec.module->id() == "sym");
  auto M = spec.module;
  auto res = std::make_shared<Resolution>(2);
  MultilinearTable f = antisymmetric_table(2, 2, {{{0, 1}, M->basis({1, 0}, Scalar(2, 3))}});
  auto psi = monomial_table_cochain(1, M, {{{{1, 1}}, M->basis({0, 2})}});
  auto want = linear_combination(2, M, {{1, xi(f, M, res)}, {-2, hoch_delta(psi)}});
  for (const auto& t : monomial_tuples(2, 2, 3)) CHECK(spec.phi.eval(t) == want.eval(t));

  auto rep = load_cochain_spec(nlohmann::json{{"dim", 2}, {"cochain", {{"kind", "xi"}, {"table", table_to_json(*M, xi_hat(spec.phi))}}}}.dump());
  CHECK(xi_hat(rep.phi) == xi_hat(spec.phi));
  CHECK(xi_hat(rep.phi) == f);
}

TEST_CASE("cochain spec bimodules") {
  auto t = load_cochain_spec(R"({"dim": 1,
    "bimodule": {"type": "table", "rank": 2, "left": [[[0, 1], [0, 0]]], "right": [[[1, "1/2"], [0, 1]]]},
    "cochain": {"kind": "constant", "value": [[[2], 3]]}})");
  CHECK(t.arity == 0);
  CHECK(!t.module->symmetric());
  CHECK(t.phi.eval({}) == t.module->basis({1}, 3));
  CHECK(mod_elem_to_json(*t.module, t.phi.eval({})).dump() == R"([[[2],"3/1"]])");

  auto d = load_cochain_spec(R"({"dim": 2,
    "bimodule": {"type": "derivation", "order": 2,
                 "generators": [[[[[0, 0], 1]], []], [[], [[[0, 0], 1]]]]},
    "cochain": {"kind": "xi", "table": [[[1], [[[0, 0, 1, 0], 1]]]]}})");
  CHECK(d.module->id() == "derivation");
  CHECK(d.arity == 1);

  CHECK_THROWS_AS(load_cochain_spec(R"({"dim": 2,
    "bimodule": {"type": "table", "rank": 2, "left": [[[0, 1], [0, 0]], [[0, 0], [1, 0]]],
                 "right": [[[0, 0], [0, 0]], [[0, 0], [0, 0]]]}, "arity": 1})"),
                  UnsupportedBimodule);
  CHECK_THROWS_AS(load_cochain_spec(R"({"dim": 2,
    "bimodule": {"type": "derivation", "order": 1,
                 "generators": [[[[[0, 1], 1]], []], [[], [[[0, 0], 1]]]]}, "arity": 1})"),
                  UnsupportedBimodule);
}

TEST_CASE("cochain spec errors") {
  auto where = [](const std::string& text) {
    try {
      load_cochain_spec(text);
    } catch (const SpecError& e) {
      return e.where;
    }
    return std::string("no error");
  };
  CHECK(where("{\"dim\": 2,\n \"cochain\": [1 2]}") == "2:16");
  CHECK(where(R"({"dim": 2, "cochain": {"kind": "nope"}})") == "/cochain/kind");
  CHECK(where(R"({"cochain": null, "arity": 1})") == "/");
  CHECK(where(R"({"dim": 2, "cochain": {"kind": "xi", "table": [[[2, 1], []]]}})") == "/cochain/table");
  CHECK(where(R"({"dim": 2, "cochain": {"kind": "xi", "table": [[[1, 3], []]]}})") == "/cochain/table/0/0/1");
  CHECK(where(R"({"dim": 2, "cochain": {"kind": "constant", "value": [[[0, 0], "1/0"]]}})") ==
        "/cochain/value/0/1");
  CHECK(where(R"({"dim": 2, "cochain": null})") == "/");
  CHECK_THROWS_AS(load_cochain_spec(R"({"dim": 2, "cochain": {"kind": "sum", "terms": [
      {"kind": "zero", "arity": 1}, {"kind": "zero", "arity": 2}]}})"),
                  ShapeError);
  CHECK_THROWS_AS(load_cochain_spec(R"({"dim": 2, "arity": 2, "cochain": {"kind": "zero", "arity": 1}})"),
                  ShapeError);
  CHECK_THROWS_AS(load_cochain_spec(R"({"dim": 2, "cochain": {"kind": "corrector", "of": {"kind": "zero", "arity": 0}}})"),
                  ShapeError);
}
