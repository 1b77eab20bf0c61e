#pragma once

#include <functional>
#include <map>
#include <memory>
#include <optional>
#include <vector>

#include "hkr/bimodule.hpp"
#include "hkr/chain_maps.hpp"

namespace hkr {

using MonoTuple = std::vector<MultiIndex>;
using ResolutionPtr = std::shared_ptr<const Resolution>;

/*
 * k-multilinear map S(V)^k -> M, given by its values on monomial tuples and
 * extended multilinearly.  Copies share the evaluator and the optional memo.
 */
class Cochain {
 public:
  using Eval = std::function<ModElem(const MonoTuple&)>;

  Cochain(int arity, BimodulePtr M, Eval f, bool memoize = false);

  int arity() const;
  const Bimodule& module() const;
  const BimodulePtr& module_ptr() const;
  int dim() const;

  ModElem eval(const MonoTuple& t) const;
  ModElem operator()(const std::vector<SymElement>& args) const;

 private:
  struct State;
  std::shared_ptr<State> st_;
};

Cochain memoized(const Cochain& phi);
Cochain zero_cochain(int arity, BimodulePtr M);
/* arity 0: the module element itself */
Cochain constant_cochain(BimodulePtr M, const ModElem& m);
Cochain linear_combination(int arity, BimodulePtr M,
                           const std::vector<std::pair<Scalar, Cochain>>& terms);
/* explicit values on monomial tuples, zero on every other tuple */
Cochain monomial_table_cochain(int arity, BimodulePtr M, std::map<MonoTuple, ModElem> values);

/* values f(e_{i_1},...,e_{i_k}) on 0-based index tuples; absent tuples are zero */
struct MultilinearTable {
  int arity = 0;
  int dim = 0;
  bool antisymmetric = false;
  std::map<std::vector<int>, ModElem> values;

  ModElem value(const std::vector<int>& idx) const;
  /* checks the stored values against the antisymmetry law over all index tuples */
  bool check_antisymmetric() const;
  friend bool operator==(const MultilinearTable& a, const MultilinearTable& b);
};

/* extends values given on ascending tuples to an antisymmetric table */
MultilinearTable antisymmetric_table(int n, int k,
                                     const std::map<std::vector<int>, ModElem>& ascending);

Cochain hoch_delta(const Cochain& phi);
Cochain alt_cochain(const Cochain& phi);
Cochain derivative_extension(const MultilinearTable& f, BimodulePtr M);
/* via G: x_1..x_k -> sum coef * alpha *_L f(e_I) *_R beta over G(1 (x) x (x) 1) */
Cochain xi(const MultilinearTable& f, BimodulePtr M, ResolutionPtr res);
/* k! Alt(phi) restricted to V^k */
MultilinearTable xi_hat(const Cochain& phi);

ModElem zeta_eval(const Cochain& phi, const BarChain& c);
Cochain corrector(const Cochain& phi, ResolutionPtr res);
Cochain omega_project(const Cochain& phi, ResolutionPtr res);
ModElem corrector_k2_explicit(const Cochain& phi, const SymElement& x);

struct HkrSample {
  MonoTuple args;
  ModElem residual;
};
struct HkrResult {
  Cochain antisymmetric;
  Cochain correction;
  std::vector<HkrSample> samples;
  bool residuals_zero() const;
};
/* residual = phi - Alt(phi) - delta(corrector(phi)) on every sample tuple */
HkrResult hkr_decompose(const Cochain& phi, ResolutionPtr res, const std::vector<MonoTuple>& samples);

/* all k-tuples of monomials of degree <= max_deg, lexicographic */
std::vector<MonoTuple> monomial_tuples(int n, int k, int max_deg);
/* first tuple where the two cochains differ */
std::optional<MonoTuple> first_difference(const Cochain& a, const Cochain& b,
                                          const std::vector<MonoTuple>& samples);

}  // namespace hkr
