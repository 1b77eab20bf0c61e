#pragma once

#include <stdexcept>
#include <string>
#include <utility>
#include <vector>
#include <variant>

#include "hkr/complexes.hpp"
#include "hkr/seminorms.hpp"

namespace hkr {

/* 1-based line and column of the offending character */
struct ParseError : std::runtime_error {
  int line;
  int col;
  ParseError(const std::string& msg, int l, int c)
      : std::runtime_error(std::to_string(l) + ":" + std::to_string(c) + ": " + msg), line(l), col(c) {}
};

using ElementValue =
    std::variant<SymElement, ExtElement, BarChain, KoszulChain, Tensor, TPoly<KoszulKey>>;

struct Element {
  int dim = 0;
  int arity = 0;
  ElementValue value;
};

/* "sym", "ext", "bar", "koszul", "tensor", "tpoly" */
std::string kind_name(const Element& e);

Element parse_element(const std::string& text);
/* header line plus one entry per nonzero term, canonical key order */
std::string write_element(const Element& e);
/* (lhs, coefficient) per nonzero term, lhs as in the text format */
std::vector<std::pair<std::string, Scalar>> element_entries(const Element& e);
/* entries on one line, "(lhs):p/q" separated by ", "; "0" when empty */
std::string inline_text(const Element& e);

Element make_element(const SymElement& x);
Element make_element(const ExtElement& x);
Element make_element(const BarChain& x);
Element make_element(const KoszulChain& x);
Element make_element(const Tensor& x);
Element make_element(const TPoly<KoszulKey>& x);

}  // namespace hkr
