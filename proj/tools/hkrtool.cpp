#include <filesystem>
#include <fstream>
#include <iostream>
#include <iterator>
#include <sstream>

#include "CLI11.hpp"
#include "hkr/chain_maps.hpp"
#include "hkr/cochain_spec.hpp"
#include "hkr/random.hpp"
#include "hkr/textio.hpp"
#include "hkr/verify.hpp"
#include "json.hpp"

using namespace hkr;
using nlohmann::ordered_json;

namespace {

enum Exit { kOk = 0, kVerifyFailed = 1, kParseError = 2, kShapeError = 3 };

constexpr int kMaxDim = 4;
constexpr size_t kMaxHkrTuples = 20000;

struct Options {
  std::optional<int> dim;
  int max_degree = 3;
  int max_k = 3;
  uint64_t seed = 1;
  int samples = 200;
  std::string out;
  std::string format = "text";

  std::string map;
  std::string input = "-";
  std::string suite = "all";
  bool inject_fault = false;
  std::string spec;
};

/* incompatible input for the requested operation */
struct ShapeFailure : std::runtime_error {
  using std::runtime_error::runtime_error;
};

std::string read_input(const std::string& path) {
  if (path == "-") return std::string(std::istreambuf_iterator<char>(std::cin), {});
  std::ifstream in(path, std::ios::binary);
  if (!in) throw std::runtime_error("cannot open " + path);
  return std::string(std::istreambuf_iterator<char>(in), {});
}

void emit(const Options& o, const std::string& text) {
  if (o.out.empty()) {
    std::cout << text;
    return;
  }
  std::ofstream f(o.out, std::ios::binary);
  if (!f) throw std::runtime_error("cannot write " + o.out);
  f << text;
}

std::string format_index_tuple(const MonoTuple& t) {
  std::string s = "(";
  for (size_t i = 0; i < t.size(); ++i) s += (i ? "," : "") + format_index(t[i]);
  return s + ")";
}

int max_slot_degree(const Element& e) {
  int m = 0;
  if (auto* b = std::get_if<BarChain>(&e.value))
    for (const auto& [k, c] : *b)
      for (const auto& s : k) m = std::max(m, degree(s));
  if (auto* q = std::get_if<KoszulChain>(&e.value))
    for (const auto& [k, c] : *q) m = std::max({m, degree(k.a), degree(k.b)});
  if (auto* s = std::get_if<SymElement>(&e.value)) m = sym_max_degree(*s);
  return m;
}

Element apply_map(const std::string& map, const Element& e, const Options& o) {
  auto bad = [&](const std::string& why) -> ShapeFailure {
    return ShapeFailure("map " + map + " cannot take " + kind_name(e) + " of arity " + std::to_string(e.arity) +
                        (why.empty() ? "" : ": " + why));
  };
  const auto* bar = std::get_if<BarChain>(&e.value);
  const auto* kos = std::get_if<KoszulChain>(&e.value);
  const auto* sym = std::get_if<SymElement>(&e.value);

  if (map == "bar_d") {
    if (!bar || e.arity < 1) throw bad("needs a bar chain of arity >= 1");
    return make_element(bar_d(*bar));
  }
  if (map == "bar_h") {
    if (sym) return make_element(bar_h_unit(*sym));
    if (!bar) throw bad("needs a bar chain or a sym element");
    return make_element(bar_h(*bar));
  }
  if (map == "bar_eps") {
    if (!bar || e.arity != 0) throw bad("needs a bar chain of arity 0");
    return make_element(bar_eps(*bar));
  }
  if (map == "koszul_partial") {
    if (!kos || e.arity < 1) throw bad("needs a koszul chain of degree >= 1");
    return make_element(koszul_partial(*kos));
  }
  if (map == "koszul_delta") {
    if (!kos) throw bad("needs a koszul chain");
    return make_element(koszul_delta(*kos));
  }
  if (map == "koszul_h") {
    if (sym) return make_element(koszul_h_unit(*sym));
    if (!kos) throw bad("needs a koszul chain or a sym element");
    return make_element(koszul_h(*kos));
  }
  if (map == "koszul_eps") {
    if (!kos || e.arity != 0) throw bad("needs a koszul chain of degree 0");
    return make_element(koszul_eps(*kos));
  }
  if (map == "koszul_i_t") {
    if (!kos) throw bad("needs a koszul chain");
    return make_element(koszul_i_t(*kos));
  }
  if (map == "F") {
    if (!kos) throw bad("needs a koszul chain");
    if (e.arity > o.max_k) throw bad("degree above --max-k");
    return make_element(F(*kos));
  }
  if (map == "G" || map == "omega" || map == "s") {
    if (!bar) throw bad("needs a bar chain");
    if (e.arity > o.max_k) throw bad("arity above --max-k");
    if (max_slot_degree(e) > o.max_degree) throw bad("slot degree above --max-degree");
    Resolution res(e.dim);
    if (map == "G") return make_element(res.G(*bar));
    if (map == "omega") return make_element(res.omega(*bar));
    return make_element(res.s(*bar));
  }
  throw std::logic_error("unreachable map " + map);
}

int run_apply(const Options& o) {
  Element e;
  try {
    e = parse_element(read_input(o.input));
  } catch (const ParseError& err) {
    std::cerr << (o.input == "-" ? "<stdin>" : o.input) << ":" << err.what() << "\n";
    return kParseError;
  }
  if (o.dim && *o.dim != e.dim)
    throw ShapeFailure("input has dimension " + std::to_string(e.dim) + ", --dim is " + std::to_string(*o.dim));
  if (e.dim > kMaxDim) throw ShapeFailure("dimension above the limit " + std::to_string(kMaxDim));
  Element r = apply_map(o.map, e, o);
  if (o.format == "json") {
    ordered_json j;
    j["kind"] = kind_name(r);
    j["dim"] = r.dim;
    j["arity"] = r.arity;
    j["entries"] = ordered_json::array();
    for (const auto& [lhs, c] : element_entries(r)) j["entries"].push_back({lhs, format_scalar(c)});
    emit(o, j.dump(2) + "\n");
  } else {
    emit(o, write_element(r));
  }
  return kOk;
}

int run_verify(const Options& o) {
  RunConfig cfg;
  cfg.dim = o.dim.value_or(2);
  cfg.max_degree = o.max_degree;
  cfg.max_k = o.max_k;
  cfg.seed = o.seed;
  cfg.samples = o.samples;
  cfg.inject_fault = o.inject_fault;
  auto results = run_suite(o.suite, cfg);
  emit(o, format_report(results, cfg, o.format == "json"));
  return all_passed(results) ? kOk : kVerifyFailed;
}

/* all k-tuples of degree <= d, or --samples seeded random ones when there are too many */
std::vector<MonoTuple> sample_tuples(int n, int k, int d, const Options& o) {
  size_t per_slot = monomials_upto(n, d).size(), total = 1;
  for (int i = 0; i < k && total <= kMaxHkrTuples; ++i) total *= per_slot;
  if (total <= kMaxHkrTuples) return monomial_tuples(n, k, d);
  Rng rng(o.seed);
  std::vector<MonoTuple> out;
  for (int j = 0; j < o.samples; ++j) {
    MonoTuple t;
    for (int i = 0; i < k; ++i) t.push_back(random_monomial(rng, n, d));
    out.push_back(t);
  }
  return out;
}

void write_file(const std::filesystem::path& p, const std::string& text) {
  std::ofstream f(p, std::ios::binary);
  if (!f) throw std::runtime_error("cannot write " + p.string());
  f << text;
}

int run_hkr(const Options& o) {
  CochainSpec spec = load_cochain_spec(read_input(o.spec));
  if (o.dim && *o.dim != spec.dim)
    throw ShapeFailure("spec has dimension " + std::to_string(spec.dim) + ", --dim is " + std::to_string(*o.dim));
  if (spec.dim > kMaxDim) throw ShapeFailure("dimension above the limit " + std::to_string(kMaxDim));
  if (spec.arity < 1) throw ShapeFailure("the decomposition needs a cochain of arity >= 1");
  if (spec.arity > o.max_k) throw ShapeFailure("arity above --max-k");
  if (!spec.module->symmetric())
    throw UnsupportedBimodule("the antisymmetric decomposition needs a symmetric bimodule, got '" +
                              spec.module->id() + "'");

  int n = spec.dim, k = spec.arity;
  std::vector<MonoTuple> samples = sample_tuples(n, k, o.max_degree, o);
  /* the decomposition identity needs delta(phi) = 0; checked on lower degrees since delta doubles them */
  int cocycle_deg = std::min(o.max_degree, 2);
  std::vector<MonoTuple> cocycle_samples = sample_tuples(n, k + 1, cocycle_deg, o);
  Cochain dphi = hoch_delta(spec.phi);
  size_t cocycle_zero = 0;
  for (const auto& t : cocycle_samples) cocycle_zero += dphi.eval(t).is_zero() ? 1 : 0;

  HkrResult r = hkr_decompose(spec.phi, spec.resolution, samples);
  MultilinearTable rep_table = xi_hat(spec.phi);
  Cochain rep = xi(rep_table, spec.module, spec.resolution);
  size_t residual_zero = 0, rep_ok = 0;
  for (const auto& s : r.samples) residual_zero += s.residual.is_zero() ? 1 : 0;
  for (const auto& t : samples) rep_ok += r.antisymmetric.eval(t) == rep.eval(t) ? 1 : 0;

  auto base_doc = [&] {
    ordered_json j;
    j["dim"] = n;
    if (spec.source.contains("bimodule")) j["bimodule"] = spec.source["bimodule"];
    return j;
  };
  ordered_json original = spec.source.contains("cochain") && !spec.source["cochain"].is_null()
                              ? ordered_json(spec.source["cochain"])
                              : ordered_json{{"kind", "zero"}, {"arity", k}};
  ordered_json alt_doc = base_doc(), corr_doc = base_doc(), rep_doc = base_doc();
  alt_doc["arity"] = k;
  alt_doc["cochain"] = {{"kind", "alt"}, {"of", original}};
  corr_doc["arity"] = k - 1;
  corr_doc["cochain"] = {{"kind", "corrector"}, {"of", original}};
  rep_doc["arity"] = k;
  rep_doc["cochain"] = {{"kind", "xi"}, {"arity", k}, {"table", ordered_json(table_to_json(*spec.module, rep_table))}};

  std::ostringstream res_text;
  for (const auto& s : r.samples) res_text << format_index_tuple(s.args) << " " << format_mod_elem(s.residual) << "\n";

  if (!o.out.empty()) {
    std::filesystem::path dir(o.out);
    std::filesystem::create_directories(dir);
    write_file(dir / "antisymmetric.json", alt_doc.dump(2) + "\n");
    write_file(dir / "representative.json", rep_doc.dump(2) + "\n");
    write_file(dir / "corrector.json", corr_doc.dump(2) + "\n");
    write_file(dir / "residuals.txt", res_text.str());
  }

  bool ok = residual_zero == samples.size();
  if (o.format == "json") {
    ordered_json j;
    j["dim"] = n;
    j["arity"] = k;
    j["bimodule"] = spec.module->id();
    j["samples"] = samples.size();
    j["cocycle_samples"] = cocycle_samples.size();
    j["cocycle_zero"] = cocycle_zero;
    j["residual_zero"] = residual_zero;
    j["representative_agrees"] = rep_ok;
    j["antisymmetric"] = alt_doc;
    j["representative"] = rep_doc;
    j["corrector"] = corr_doc;
    std::cout << j.dump(2) << "\n";
  } else {
    std::cout << "hkr dim=" << n << " arity=" << k << " bimodule=" << spec.module->id()
              << " samples=" << samples.size() << "\n";
    std::cout << "representative xi table:\n";
    for (const auto& [idx, v] : rep_table.values) {
      bool asc = true;
      for (size_t i = 1; i < idx.size(); ++i) asc = asc && idx[i - 1] < idx[i];
      if (!asc || v.is_zero()) continue;
      std::vector<int> one = idx;
      for (auto& x : one) ++x;
      std::cout << "  " << format_index(one) << " " << format_mod_elem(v) << "\n";
    }
    std::cout << "delta(phi) zero on " << cocycle_zero << "/" << cocycle_samples.size() << " tuples of degree <= "
              << cocycle_deg << (cocycle_zero == cocycle_samples.size() ? "" : " (not a cocycle)") << "\n";
    std::cout << "alt equals representative on " << rep_ok << "/" << samples.size() << " samples\n";
    std::cout << "residual phi - alt(phi) - delta(corrector(phi)) zero on " << residual_zero << "/"
              << samples.size() << " samples\n";
    for (const auto& s : r.samples)
      if (!s.residual.is_zero())
        std::cout << "  nonzero at " << format_index_tuple(s.args) << " " << format_mod_elem(s.residual) << "\n";
    if (!o.out.empty()) std::cout << "wrote " << o.out << "\n";
  }
  return ok ? kOk : kVerifyFailed;
}

}  // namespace

int main(int argc, char** argv) {
  Options o;
  CLI::App app{"Exact chain-level toolkit for the Hochschild complex of S(V)"};
  app.require_subcommand(1);
  app.add_option("--dim", o.dim, "ambient dimension n of V")->check(CLI::Range(1, kMaxDim));
  app.add_option("--max-degree", o.max_degree, "largest monomial degree per slot")->check(CLI::Range(1, 4));
  app.add_option("--max-k", o.max_k, "largest chain level / cochain arity")->check(CLI::Range(1, 4));
  app.add_option("--seed", o.seed, "random seed");
  app.add_option("--samples", o.samples, "random elements per identity")->check(CLI::Range(1, 100000));
  app.add_option("--out", o.out, "output file (apply, verify) or directory (hkr)");
  app.add_option("--format", o.format, "text or json")->check(CLI::IsMember({"text", "json"}));

  auto* apply = app.add_subcommand("apply", "apply a chain-level map to an element file");
  apply->fallthrough();
  apply
      ->add_option("--map", o.map, "map name")
      ->required()
      ->check(CLI::IsMember({"bar_d", "bar_h", "bar_eps", "koszul_partial", "koszul_delta", "koszul_h",
                             "koszul_eps", "koszul_i_t", "F", "G", "omega", "s"}));
  apply->add_option("input", o.input, "element file, '-' for stdin");

  auto* verify = app.add_subcommand("verify", "run identity suites");
  verify->fallthrough();
  std::vector<std::string> suites = suite_names();
  verify->add_option("suite,--suite", o.suite, "suite name")->check(CLI::IsMember(suites));
  verify->add_flag("--inject-fault", o.inject_fault, "also check a bimodule with a corrupted D_2");

  auto* hkr_cmd = app.add_subcommand("hkr", "decompose a cochain given as a JSON spec");
  hkr_cmd->fallthrough();
  hkr_cmd->add_option("spec", o.spec, "spec file, '-' for stdin")->required();

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    int rc = app.exit(e);
    return rc == 0 ? kOk : kParseError;
  }

  try {
    if (*apply) return run_apply(o);
    if (*verify) return run_verify(o);
    return run_hkr(o);
  } catch (const SpecError& e) {
    std::cerr << o.spec << ":" << e.what() << "\n";
    return kParseError;
  } catch (const ShapeFailure& e) {
    std::cerr << "shape error: " << e.what() << "\n";
    return kShapeError;
  } catch (const ShapeError& e) {
    std::cerr << "shape error: " << e.what() << "\n";
    return kShapeError;
  } catch (const DimensionError& e) {
    std::cerr << "shape error: " << e.what() << "\n";
    return kShapeError;
  } catch (const UnsupportedBimodule& e) {
    std::cerr << "unsupported bimodule: " << e.what() << "\n";
    return kShapeError;
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kParseError;
  }
}
