#pragma once

#include <optional>
#include <string>
#include <vector>

#include "hkr/cochains.hpp"

namespace hkr {

/* slot is 0-based here; reports print it 1-based */
struct BracketSpec {
  int slot;
  SymElement a;
};

/* a *_L phi(a_1..a_k) - phi(.., a a_slot, ..) */
Cochain bracket(const BracketSpec& spec, const Cochain& phi);

struct OrderWitness {
  int slot;
  std::vector<MultiIndex> multipliers;
  MonoTuple args;
  ModElem value;
};

/*
 * Bounded certification: for each slot i every bracket of length order[i]+1
 * with monomial multipliers of degree 1..mult_deg annihilates phi on all
 * monomial argument tuples of degree <= arg_deg.  Degree-0 multipliers are
 * skipped since their brackets vanish identically.
 */
struct OrderCertificate {
  bool ok = true;
  std::vector<int> order;
  int mult_deg = 0;
  int arg_deg = 0;
  std::optional<OrderWitness> witness;
};
OrderCertificate diffop_order_check(const Cochain& phi, const std::vector<int>& order, int mult_deg,
                                    int arg_deg);
inline OrderCertificate diffop_order_check(const Cochain& phi, const std::vector<int>& order,
                                           int degree_bound) {
  return diffop_order_check(phi, order, degree_bound, degree_bound);
}

/* a derivation of S(V), given by the images of e_1..e_n */
struct DerivationSpec {
  std::vector<SymElement> images;
};
SymElement apply_derivation(const DerivationSpec& d, const SymElement& v);

/*
 * Elements p * delta^alpha with |alpha| <= s, generators applied as
 * commuting derivations.  Key = exponents of p followed by alpha.
 *   a *_L (p delta^alpha) = (a p) delta^alpha
 *   D_l(v, p delta^alpha) = sum_{|beta| = l, beta <= alpha} C(alpha, beta) delta^beta(v) p delta^(alpha - beta)
 */
class DerivationBimodule : public DiffBimodule {
 public:
  DerivationBimodule(int n, std::vector<DerivationSpec> gens, int s);
  int dim() const override { return n_; }
  std::string id() const override { return "derivation"; }
  bool symmetric() const override;
  int order() const override { return s_; }
  ModElem left_mono(const MultiIndex& a, const ModKey& m) const override;
  ModElem D_mono(int l, const MultiIndex& a, const ModKey& m) const override;
  std::vector<ModKey> sample_keys(int max_deg) const override;

  const std::vector<DerivationSpec>& generators() const { return gens_; }
  /* delta^beta applied to x^a */
  SymElement apply_word(const std::vector<int>& beta, const MultiIndex& a) const;
  ModKey key(const MultiIndex& p, const std::vector<int>& alpha) const;

 private:
  int n_, s_;
  std::vector<DerivationSpec> gens_;
};

/* certifies each generator at order 1 and checks they commute; throws UnsupportedBimodule otherwise */
std::shared_ptr<DerivationBimodule> make_derivation_bimodule(int n, std::vector<DerivationSpec> gens,
                                                             int s, int degree_bound = 2);

/* fault injection: adds `extra` times the basis element to D_2(v, m) for every degree-1 v */
class CorruptedBimodule : public DiffBimodule {
 public:
  CorruptedBimodule(std::shared_ptr<const DiffBimodule> base, Scalar extra)
      : base_(std::move(base)), extra_(std::move(extra)) {}
  int dim() const override { return base_->dim(); }
  std::string id() const override { return base_->id() + "-corrupted"; }
  bool symmetric() const override { return false; }
  int order() const override { return std::max(2, base_->order()); }
  ModElem left_mono(const MultiIndex& a, const ModKey& m) const override { return base_->left_mono(a, m); }
  ModElem D_mono(int l, const MultiIndex& a, const ModKey& m) const override;
  std::vector<ModKey> sample_keys(int max_deg) const override { return base_->sample_keys(max_deg); }

 private:
  std::shared_ptr<const DiffBimodule> base_;
  Scalar extra_;
};

struct AxiomCheck {
  std::string id;
  bool pass = true;
  std::string witness;
};
/* axioms a-e, the bimodule laws, D_l(1, m) = 0 and the i-hat transport identity */
std::vector<AxiomCheck> check_diffbimodule_axioms(const DiffBimodule& M, int degree_bound);

}  // namespace hkr
