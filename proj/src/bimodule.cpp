#include "hkr/bimodule.hpp"

namespace hkr {

ModElem Bimodule::basis(const ModKey& k, const Scalar& c) const {
  ModElem r = zero();
  r.add(k, c);
  return r;
}

ModElem Bimodule::left(const MultiIndex& a, const ModElem& m) const {
  ModElem r = zero();
  for (const auto& [k, c] : m) r.axpy(c, left_mono(a, k));
  return r;
}

ModElem Bimodule::right(const ModElem& m, const MultiIndex& a) const {
  ModElem r = zero();
  for (const auto& [k, c] : m) r.axpy(c, right_mono(k, a));
  return r;
}

ModElem Bimodule::left(const SymElement& a, const ModElem& m) const {
  if (a.dim != dim() || m.dim != dim()) throw DimensionError("bimodule left action: dimension mismatch");
  ModElem r = zero();
  for (const auto& [ka, ca] : a) r.axpy(ca, left(ka, m));
  return r;
}

ModElem Bimodule::right(const ModElem& m, const SymElement& a) const {
  if (a.dim != dim() || m.dim != dim()) throw DimensionError("bimodule right action: dimension mismatch");
  ModElem r = zero();
  for (const auto& [ka, ca] : a) r.axpy(ca, right(m, ka));
  return r;
}

ModElem DiffBimodule::D(int l, const SymElement& a, const ModElem& m) const {
  ModElem r = zero();
  for (const auto& [ka, ca] : a)
    for (const auto& [km, cm] : m) r.axpy(ca * cm, D_mono(l, ka, km));
  return r;
}

ModElem DiffBimodule::right_mono(const ModKey& m, const MultiIndex& a) const {
  ModElem r = left_mono(a, m);
  for (int l = 1; l <= order(); ++l) r += D_mono(l, a, m);
  return r;
}

ModElem SymmetricAlgebraBimodule::left_mono(const MultiIndex& a, const ModKey& m) const {
  return basis(add_index(a, m));
}

std::vector<ModKey> SymmetricAlgebraBimodule::sample_keys(int max_deg) const {
  return monomials_upto(n_, max_deg);
}

ModElem SymmetricAlgebraBimodule::from_sym(const SymElement& a) {
  ModElem r(a.dim);
  for (const auto& [k, c] : a) r.add(k, c);
  return r;
}

SymElement SymmetricAlgebraBimodule::to_sym(const ModElem& m) {
  SymElement r(m.dim);
  for (const auto& [k, c] : m) r.add(k, c);
  return r;
}

static Matrix mat_mul(const Matrix& A, const Matrix& B) {
  size_t m = A.size();
  Matrix C(m, std::vector<Scalar>(m, 0));
  for (size_t i = 0; i < m; ++i)
    for (size_t k = 0; k < m; ++k) {
      if (sgn(A[i][k]) == 0) continue;
      for (size_t j = 0; j < m; ++j) C[i][j] += A[i][k] * B[k][j];
    }
  return C;
}

TableBimodule::TableBimodule(int n, int m, std::vector<Matrix> L, std::vector<Matrix> R)
    : n_(n), m_(m), L_(std::move(L)), R_(std::move(R)) {
  if (static_cast<int>(L_.size()) != n || static_cast<int>(R_.size()) != n)
    throw ShapeError("table bimodule needs one left and one right matrix per generator");
  for (const auto* mats : {&L_, &R_})
    for (const auto& M : *mats) {
      if (static_cast<int>(M.size()) != m) throw ShapeError("table bimodule matrix has wrong size");
      for (const auto& row : M)
        if (static_cast<int>(row.size()) != m) throw ShapeError("table bimodule matrix has wrong size");
    }
  std::vector<const Matrix*> all;
  for (const auto& M : L_) all.push_back(&M);
  for (const auto& M : R_) all.push_back(&M);
  for (size_t i = 0; i < all.size(); ++i)
    for (size_t j = i + 1; j < all.size(); ++j)
      if (mat_mul(*all[i], *all[j]) != mat_mul(*all[j], *all[i]))
        throw UnsupportedBimodule("table bimodule: action matrices do not commute");
  symmetric_ = L_ == R_;
}

ModElem TableBimodule::apply(const std::vector<Matrix>& mats, const MultiIndex& a,
                             const ModKey& k) const {
  if (k.size() != 1 || k[0] < 0 || k[0] >= m_) throw DimensionError("table bimodule: bad basis key");
  std::vector<Scalar> v(static_cast<size_t>(m_), 0);
  v[static_cast<size_t>(k[0])] = 1;
  for (int i = 0; i < n_; ++i)
    for (int p = 0; p < a[static_cast<size_t>(i)]; ++p) {
      const Matrix& M = mats[static_cast<size_t>(i)];
      std::vector<Scalar> w(v.size(), 0);
      for (size_t r = 0; r < v.size(); ++r)
        for (size_t c = 0; c < v.size(); ++c) w[r] += M[r][c] * v[c];
      v = std::move(w);
    }
  ModElem out = zero();
  for (int j = 0; j < m_; ++j) out.add({j}, v[static_cast<size_t>(j)]);
  return out;
}

ModElem TableBimodule::left_mono(const MultiIndex& a, const ModKey& k) const {
  return apply(L_, a, k);
}

ModElem TableBimodule::right_mono(const ModKey& k, const MultiIndex& a) const {
  return apply(R_, a, k);
}

std::vector<ModKey> TableBimodule::sample_keys(int) const {
  std::vector<ModKey> out;
  for (int j = 0; j < m_; ++j) out.push_back({j});
  return out;
}

std::string format_mod_elem(const ModElem& m) {
  if (m.is_zero()) return "0";
  std::string s = "{";
  bool first = true;
  for (const auto& [k, c] : m) {
    if (!first) s += ", ";
    first = false;
    s += format_index(k) + ":" + format_scalar(c);
  }
  return s + "}";
}

}  // namespace hkr
