#include "hkr/samplers.hpp"

namespace hkr {

ModElem random_mod_elem(Rng& rng, const Bimodule& M, int max_deg, int terms) {
  auto keys = M.sample_keys(max_deg);
  ModElem r = M.zero();
  for (int j = 0; j < terms; ++j) r.add(rng.pick(keys), rng.coef());
  return r;
}

static std::vector<int> random_indices(Rng& rng, int n, int k) {
  std::vector<int> idx(static_cast<size_t>(k));
  for (auto& i : idx) i = static_cast<int>(rng.below(static_cast<uint64_t>(n)));
  return idx;
}

MultilinearTable random_antisymmetric_table(Rng& rng, const Bimodule& M, int k, int max_deg,
                                            int terms) {
  int n = M.dim();
  std::map<std::vector<int>, ModElem> asc;
  for (int j = 0; j < terms; ++j) {
    auto w = canonical_wedge(random_indices(rng, n, k));
    if (!w) continue;
    auto [it, fresh] = asc.try_emplace(w->second.idx, M.zero());
    it->second += random_mod_elem(rng, M, max_deg, 2);
  }
  return antisymmetric_table(n, k, asc);
}

MultilinearTable random_table(Rng& rng, const Bimodule& M, int k, int max_deg, int terms) {
  MultilinearTable f{k, M.dim(), false, {}};
  for (int j = 0; j < terms; ++j) {
    auto idx = random_indices(rng, M.dim(), k);
    auto [it, fresh] = f.values.try_emplace(idx, M.zero());
    it->second += random_mod_elem(rng, M, max_deg, 2);
  }
  return f;
}

Cochain random_monomial_cochain(Rng& rng, BimodulePtr M, int k, int slot_deg, int entries,
                                int val_deg) {
  int n = M->dim();
  std::map<MonoTuple, ModElem> vals;
  for (int j = 0; j < entries; ++j) {
    MonoTuple t;
    for (int s = 0; s < k; ++s) t.push_back(random_monomial(rng, n, slot_deg));
    auto [it, fresh] = vals.try_emplace(t, M->zero());
    it->second += random_mod_elem(rng, *M, val_deg, 1);
  }
  return monomial_table_cochain(k, M, std::move(vals));
}

}  // namespace hkr
