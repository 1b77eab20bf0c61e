#pragma once

#include <cstdint>
#include <functional>
#include <string>
#include <vector>

namespace hkr {

struct RunConfig {
  int dim = 2;
  int max_degree = 3;
  int max_k = 3;
  uint64_t seed = 1;
  int samples = 200;
  /* run the axiom checks on a bimodule with a corrupted D_2 as well */
  bool inject_fault = false;
};

struct CheckResult {
  std::string id;
  bool pass = true;
  long count = 0;
  std::string detail;
};

const std::vector<std::string>& suite_names();
/* "all" runs every suite; results sorted by id. Throws std::invalid_argument on an unknown name. */
std::vector<CheckResult> run_suite(const std::string& suite, const RunConfig& cfg);
std::string format_report(const std::vector<CheckResult>& results, const RunConfig& cfg, bool machine);
bool all_passed(const std::vector<CheckResult>& results);

}  // namespace hkr
