#pragma once

#include <map>
#include <stdexcept>
#include <string>
#include <utility>

#include "hkr/scalar.hpp"

namespace hkr {

struct DimensionError : std::invalid_argument {
  using std::invalid_argument::invalid_argument;
};

/* wrong arity / degree / level for an operation */
struct ShapeError : std::invalid_argument {
  using std::invalid_argument::invalid_argument;
};

/*
 * Finite rational combination of basis keys.  Zero coefficients are never
 * stored, so equality of canonical forms is plain map equality.
 * dim is the ambient dimension, level the chain arity/degree (0 if unused).
 */
template <class K>
class Lin {
 public:
  using Key = K;
  using Map = std::map<K, Scalar>;

  int dim = 0;
  int level = 0;

  Lin() = default;
  explicit Lin(int n, int lvl = 0) : dim(n), level(lvl) {}

  void add(const K& k, const Scalar& c) {
    if (sgn(c) == 0) return;
    auto [it, fresh] = terms_.try_emplace(k, c);
    if (!fresh) {
      it->second += c;
      if (sgn(it->second) == 0) terms_.erase(it);
    }
  }

  Lin& operator+=(const Lin& o) {
    check_compatible(o);
    for (const auto& [k, c] : o.terms_) add(k, c);
    return *this;
  }
  Lin& operator-=(const Lin& o) {
    check_compatible(o);
    for (const auto& [k, c] : o.terms_) add(k, -c);
    return *this;
  }
  Lin& operator*=(const Scalar& s) {
    if (sgn(s) == 0) {
      terms_.clear();
      return *this;
    }
    for (auto& kv : terms_) kv.second *= s;
    return *this;
  }
  /* add s*o */
  void axpy(const Scalar& s, const Lin& o) {
    check_compatible(o);
    if (sgn(s) == 0) return;
    for (const auto& [k, c] : o.terms_) add(k, s * c);
  }

  friend Lin operator+(Lin a, const Lin& b) { return a += b; }
  friend Lin operator-(Lin a, const Lin& b) { return a -= b; }
  friend Lin operator*(const Scalar& s, Lin a) { return a *= s; }
  friend Lin operator-(Lin a) { return a *= Scalar(-1); }

  friend bool operator==(const Lin& a, const Lin& b) {
    return a.dim == b.dim && a.level == b.level && a.terms_ == b.terms_;
  }

  bool is_zero() const { return terms_.empty(); }
  size_t size() const { return terms_.size(); }
  const Map& terms() const { return terms_; }
  auto begin() const { return terms_.begin(); }
  auto end() const { return terms_.end(); }
  Scalar coeff(const K& k) const {
    auto it = terms_.find(k);
    return it == terms_.end() ? Scalar(0) : it->second;
  }
  void clear() { terms_.clear(); }

  void check_compatible(const Lin& o) const {
    if (dim != o.dim)
      throw DimensionError("dimension mismatch: " + std::to_string(dim) + " vs " +
                           std::to_string(o.dim));
    if (level != o.level)
      throw ShapeError("level mismatch: " + std::to_string(level) + " vs " +
                       std::to_string(o.level));
  }

 private:
  Map terms_;
};

}  // namespace hkr
