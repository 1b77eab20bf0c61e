#include <sys/wait.h>

#include <cstdio>
#include <filesystem>
#include <fstream>
#include <iterator>
#include <string>

#include "doctest.h"
#include "hkr/chain_maps.hpp"
#include "hkr/cochain_spec.hpp"
#include "hkr/textio.hpp"
#include "json.hpp"

using namespace hkr;
namespace fs = std::filesystem;

namespace {

struct Run {
  int code;
  std::string out;
};

Run run(const std::string& args) {
  std::string cmd = std::string(HKRTOOL_PATH) + " " + args + " 2>&1";
  FILE* p = popen(cmd.c_str(), "r");
  REQUIRE(p != nullptr);
  std::string out;
  char buf[4096];
  size_t got;
  while ((got = fread(buf, 1, sizeof buf, p)) > 0) out.append(buf, got);
  int status = pclose(p);
  return {WIFEXITED(status) ? WEXITSTATUS(status) : -1, out};
}

std::string data(const std::string& name) { return std::string(HKR_TEST_DATA) + "/" + name; }

std::string slurp(const fs::path& p) {
  std::ifstream in(p, std::ios::binary);
  return std::string(std::istreambuf_iterator<char>(in), {});
}

}  // namespace

TEST_CASE("apply G matches the library") {
  auto r = run("apply --map G " + data("bar2.txt"));
  REQUIRE(r.code == 0);
  auto in = parse_element(slurp(data("bar2.txt")));
  auto out = parse_element(r.out);
  CHECK(kind_name(out) == "koszul");
  CHECK(out.arity == 2);
  Resolution res(2);
  CHECK(std::get<KoszulChain>(out.value) == res.G(std::get<BarChain>(in.value)));
}

TEST_CASE("apply reads stdin and writes json") {
  auto r = run("--format json apply --map koszul_partial - < " + data("koszul2.txt"));
  REQUIRE(r.code == 0);
  auto j = nlohmann::json::parse(r.out);
  CHECK(j["kind"] == "koszul");
  CHECK(j["dim"] == 2);
  auto in = parse_element(slurp(data("koszul2.txt")));
  CHECK(j["arity"] == in.arity - 1);
  auto want = element_entries(make_element(koszul_partial(std::get<KoszulChain>(in.value))));
  REQUIRE(j["entries"].size() == want.size());
  for (size_t i = 0; i < want.size(); ++i) CHECK(j["entries"][i][0] == want[i].first);
}

TEST_CASE("exit codes") {
  auto bad = run("apply --map bar_d " + data("malformed.txt"));
  CHECK(bad.code == 2);
  CHECK(bad.out.find("malformed.txt:2:21:") != std::string::npos);
  CHECK(run("apply --map bar_d " + data("badgroups.txt")).code == 2);
  CHECK(run("apply --map koszul_partial " + data("bar2.txt")).code == 3);
  CHECK(run("--dim 3 apply --map bar_d " + data("bar2.txt")).code == 3);
  CHECK(run("apply --map nope " + data("bar2.txt")).code == 2);
  CHECK(run("apply --map bar_d /nonexistent/file.txt").code == 2);
  CHECK(run("--dim 9 verify complexes").code == 2);
  CHECK(run("verify nope").code == 2);
  CHECK(run("hkr " + data("hkr_table.json")).code == 3);
  CHECK(run("hkr " + data("hkr_badjson.json")).code == 2);
  CHECK(run("hkr " + data("hkr_shape.json")).code == 3);
}

TEST_CASE("verify reports") {
  auto r = run("--samples 20 verify complexes");
  CHECK(r.code == 0);
  CHECK(r.out.rfind("config dim=2", 0) == 0);
  CHECK(r.out.find("summary ") != std::string::npos);
  CHECK(r.out.find("FAIL") == std::string::npos);
  auto j = run("--samples 20 --format json verify --suite seminorms");
  REQUIRE(j.code == 0);
  auto doc = nlohmann::json::parse(j.out);
  CHECK(doc["failed"] == 0);
  CHECK(doc["checks"].size() == doc["passed"].get<size_t>());
  auto f = run("--samples 20 verify multidiff --inject-fault");
  CHECK(f.code == 1);
  CHECK(f.out.find("FAIL multidiff.axioms.injected.") != std::string::npos);
}

TEST_CASE("hkr writes reloadable specs") {
  fs::path dir = fs::temp_directory_path() / "hkrtool_test_out";
  fs::remove_all(dir);
  auto r = run("--out " + dir.string() + " hkr " + data("hkr_sym.json"));
  REQUIRE(r.code == 0);
  CHECK(r.out.find("alt equals representative on") != std::string::npos);
  auto orig = load_cochain_spec(slurp(data("hkr_sym.json")));
  auto alt = load_cochain_spec(slurp(dir / "antisymmetric.json"));
  auto rep = load_cochain_spec(slurp(dir / "representative.json"));
  auto corr = load_cochain_spec(slurp(dir / "corrector.json"));
  CHECK(alt.arity == 2);
  CHECK(rep.arity == 2);
  CHECK(corr.arity == 1);
  CHECK(xi_hat(rep.phi) == xi_hat(orig.phi));
  for (const auto& t : monomial_tuples(2, 2, 2)) {
    CHECK(alt.phi.eval(t) == rep.phi.eval(t));
    CHECK(orig.phi.eval(t) == alt.phi.eval(t) + hoch_delta(corr.phi).eval(t));
  }
  CHECK(!slurp(dir / "residuals.txt").empty());
  fs::remove_all(dir);
}
