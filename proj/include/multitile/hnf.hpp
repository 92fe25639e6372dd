#pragma once

// Integer Hermite normal form with unimodular transform.

#include <vector>

#include "multitile/qfield.hpp"

namespace multitile {

using IntegerMatrix = std::vector<std::vector<Integer>>;

struct HermiteForm {
  IntegerMatrix form;       // row echelon, positive pivots, reduced above pivots
  IntegerMatrix transform;  // unimodular U with U * input = form
  std::size_t rank = 0;     // nonzero rows of form, which come first
};

// Row-style HNF of an m x n integer matrix. The rows of `form` span the same
// Z-module as the input rows; pivots are positive and every entry above a
// pivot lies in [0, pivot). Rows rank..m-1 of `transform` span the left kernel.
HermiteForm hermite_normal_form(const IntegerMatrix& input);

// Z-basis (as rows) of { u in Z^n : A u = 0 } for an m x n integer matrix A.
IntegerMatrix integer_kernel(const IntegerMatrix& a);

// Rank over Q of a rational matrix (rows are vectors).
std::size_t rational_rank(std::vector<std::vector<Rational>> rows);

}  // namespace multitile
