#pragma once

#include <vector>

#include "metabel/cyclotomic.hpp"
#include "metabel/matrix.hpp"

namespace metabel {

using IntMatrix = Matrix<Integer>;

// U * A * V = D with D diagonal, d_1 | d_2 | ... and zeros last.
// The inverses are tracked alongside so callers can move between the
// original and the diagonal coordinates without re-inverting.
struct SmithDecomposition {
  IntMatrix U, V;
  IntMatrix U_inv, V_inv;
  std::vector<Integer> divisors;  // length min(rows, cols)
};

SmithDecomposition snf(const IntMatrix& a);

IntMatrix diagonal_matrix(const std::vector<Integer>& d, std::size_t rows, std::size_t cols);

}  // namespace metabel
