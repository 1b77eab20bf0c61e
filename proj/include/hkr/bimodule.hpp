#pragma once

#include <memory>
#include <string>
#include <vector>

#include "hkr/algebra.hpp"

namespace hkr {

/* basis key of a module element; its meaning is up to the bimodule */
using ModKey = std::vector<int>;
/* dim is the dimension of V, not of the module */
using ModElem = Lin<ModKey>;

/* the bimodule cannot be used where it was requested */
struct UnsupportedBimodule : std::invalid_argument {
  using std::invalid_argument::invalid_argument;
};

class Bimodule {
 public:
  virtual ~Bimodule() = default;
  virtual int dim() const = 0;
  virtual std::string id() const = 0;
  /* left and right actions coincide */
  virtual bool symmetric() const = 0;
  virtual ModElem left_mono(const MultiIndex& a, const ModKey& m) const = 0;
  virtual ModElem right_mono(const ModKey& m, const MultiIndex& a) const = 0;
  /* finite set of basis keys used for exhaustive checks; may be truncated */
  virtual std::vector<ModKey> sample_keys(int max_deg) const = 0;

  ModElem zero() const { return ModElem(dim()); }
  ModElem basis(const ModKey& k, const Scalar& c = 1) const;
  ModElem left(const SymElement& a, const ModElem& m) const;
  ModElem right(const ModElem& m, const SymElement& a) const;
  ModElem left(const MultiIndex& a, const ModElem& m) const;
  ModElem right(const ModElem& m, const MultiIndex& a) const;
};

/*
 * Right action *_R = *_L + D_1 + ... + D_s with correction maps D_l.
 */
class DiffBimodule : public Bimodule {
 public:
  virtual int order() const = 0;
  /* D_l(x^a, m) for 1 <= l <= order() */
  virtual ModElem D_mono(int l, const MultiIndex& a, const ModKey& m) const = 0;

  ModElem D(int l, const SymElement& a, const ModElem& m) const;
  ModElem right_mono(const ModKey& m, const MultiIndex& a) const override;
};

/* M = S(V) with multiplication on both sides, a differential bimodule of order 0 */
class SymmetricAlgebraBimodule : public DiffBimodule {
 public:
  explicit SymmetricAlgebraBimodule(int n) : n_(n) {}
  int dim() const override { return n_; }
  std::string id() const override { return "sym"; }
  bool symmetric() const override { return true; }
  int order() const override { return 0; }
  ModElem left_mono(const MultiIndex& a, const ModKey& m) const override;
  ModElem D_mono(int, const MultiIndex&, const ModKey&) const override { return zero(); }
  std::vector<ModKey> sample_keys(int max_deg) const override;

  static ModElem from_sym(const SymElement& a);
  static SymElement to_sym(const ModElem& m);

 private:
  int n_;
};

using Matrix = std::vector<std::vector<Scalar>>;

/*
 * Finite-dimensional bimodule K^m: x_i acts by the matrices L[i] on the
 * left and R[i] on the right.  All L[i], R[j] must commute pairwise.
 */
class TableBimodule : public Bimodule {
 public:
  TableBimodule(int n, int m, std::vector<Matrix> L, std::vector<Matrix> R);
  int dim() const override { return n_; }
  std::string id() const override { return "table"; }
  bool symmetric() const override { return symmetric_; }
  ModElem left_mono(const MultiIndex& a, const ModKey& k) const override;
  ModElem right_mono(const ModKey& k, const MultiIndex& a) const override;
  std::vector<ModKey> sample_keys(int max_deg) const override;
  int rank() const { return m_; }
  const std::vector<Matrix>& left_matrices() const { return L_; }
  const std::vector<Matrix>& right_matrices() const { return R_; }

 private:
  ModElem apply(const std::vector<Matrix>& mats, const MultiIndex& a, const ModKey& k) const;
  int n_, m_;
  std::vector<Matrix> L_, R_;
  bool symmetric_;
};

using BimodulePtr = std::shared_ptr<const Bimodule>;

/* "{[k]:p/q, ...}" in key order; "0" for the zero element */
std::string format_mod_elem(const ModElem& m);

}  // namespace hkr
