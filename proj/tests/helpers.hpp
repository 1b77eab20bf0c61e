#pragma once

#include <initializer_list>

#include "hkr/complexes.hpp"

namespace testing_helpers {

using namespace hkr;

inline SymElement mono(std::initializer_list<int> a, const Scalar& c = 1) {
  MultiIndex m(a);
  return sym_monomial(static_cast<int>(m.size()), m, c);
}

inline BarChain bar(std::initializer_list<MultiIndex> slots, const Scalar& c = 1) {
  BarKey key(slots);
  return bar_basis(static_cast<int>(key.front().size()), key, c);
}

inline KoszulChain kos(const MultiIndex& a, const MultiIndex& b, std::vector<int> w,
                       const Scalar& c = 1) {
  return koszul_basis(static_cast<int>(a.size()), a, b, w, c);
}

}  // namespace testing_helpers
