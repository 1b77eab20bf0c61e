#pragma once

#include "hkr/cochains.hpp"
#include "hkr/random.hpp"

namespace hkr {

ModElem random_mod_elem(Rng& rng, const Bimodule& M, int max_deg, int terms);
/* antisymmetric table with up to `terms` nonzero ascending entries */
MultilinearTable random_antisymmetric_table(Rng& rng, const Bimodule& M, int k, int max_deg,
                                            int terms);
/* general (not antisymmetric) table */
MultilinearTable random_table(Rng& rng, const Bimodule& M, int k, int max_deg, int terms);
/* sparse arbitrary multilinear map: random values on `entries` monomial tuples */
Cochain random_monomial_cochain(Rng& rng, BimodulePtr M, int k, int slot_deg, int entries,
                                int val_deg);

}  // namespace hkr
