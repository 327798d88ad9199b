#pragma once

#include <vector>

#include "meixner/rational.hpp"

namespace meixner {

// Dense rational matrix, row-major.
using RationalMatrix = std::vector<std::vector<Rational>>;

RationalMatrix mat_mul(const RationalMatrix& a, const RationalMatrix& b);
RationalMatrix mat_transpose(const RationalMatrix& a);
RationalMatrix mat_diagonal(const std::vector<Rational>& diag);
RationalMatrix mat_scaled_identity(int n, const Rational& scale);

}  // namespace meixner
