#pragma once

#include <compare>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "hkr/lin.hpp"

namespace hkr {

/* exponent vector of a commutative monomial, length = dim V */
using MultiIndex = std::vector<int>;

int degree(const MultiIndex& a);
MultiIndex zero_index(int n);
MultiIndex unit_index(int n, int i);
MultiIndex add_index(const MultiIndex& a, const MultiIndex& b);
/* a - b, requires b <= a componentwise */
MultiIndex sub_index(const MultiIndex& a, const MultiIndex& b);
bool index_leq(const MultiIndex& b, const MultiIndex& a);
/* prod_i C(a_i, b_i) */
Scalar multi_binomial(const MultiIndex& a, const MultiIndex& b);
/* all b <= a, in lexicographic order */
std::vector<MultiIndex> sub_indices(const MultiIndex& a);

/* all monomials in n variables of exact degree d / degree <= d (graded lex order) */
std::vector<MultiIndex> monomials_of_degree(int n, int d);
std::vector<MultiIndex> monomials_upto(int n, int d);

/* strictly ascending 0-based basis indices of a wedge monomial */
struct ExtMonomial {
  std::vector<int> idx;
  auto operator<=>(const ExtMonomial&) const = default;
  int degree() const { return static_cast<int>(idx.size()); }
};

/* sorts an index list into canonical order; nullopt if an index repeats */
std::optional<std::pair<int, ExtMonomial>> canonical_wedge(std::vector<int> idx);

using SymElement = Lin<MultiIndex>;
using ExtElement = Lin<ExtMonomial>;
using AeKey = std::pair<MultiIndex, MultiIndex>;
using AePair = Lin<AeKey>;

SymElement sym_zero(int n);
SymElement sym_one(int n);
SymElement sym_monomial(int n, const MultiIndex& a, const Scalar& c = 1);
/* the degree-one generator e_i (0-based) */
SymElement sym_var(int n, int i);

SymElement sym_mul(const SymElement& a, const SymElement& b);
SymElement sym_mul_monomial(const MultiIndex& a, const SymElement& b);
int sym_max_degree(const SymElement& a);
bool sym_is_homogeneous(const SymElement& a, int d);

/* (degree, homogeneous component) pairs, ascending, zero components omitted */
std::vector<std::pair<int, SymElement>> grade(const SymElement& a);

/* basis wedge from an arbitrary (0-based) index list, sign normalised */
ExtElement ext_basis(int n, const std::vector<int>& idx, const Scalar& c = 1);
ExtElement wedge_mul(const ExtElement& u, const ExtElement& v);

AePair ae_tensor(const SymElement& a, const SymElement& b);
AePair ae_one(int n);
/* (a (x) b)(a' (x) b') = (a a') (x) (b' b) */
AePair ae_mul(const AePair& p, const AePair& q);

/* "[a0,a1,...]" for reports and witnesses */
std::string format_index(const std::vector<int>& a);

}  // namespace hkr
