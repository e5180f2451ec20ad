#pragma once

#include <cstddef>
#include <vector>

#include "metabel/cyclotomic.hpp"
#include "metabel/matrix.hpp"

namespace metabel {

using CycloMatrix = Matrix<Cyclotomic>;
using CycloVector = std::vector<Cyclotomic>;

// Execution policy for the elimination kernel. Both policies perform the same
// arithmetic in the same order per row, so results are bit-identical.
enum class Exec { serial, parallel };

struct RowEchelon {
  CycloMatrix reduced;                   // reduced row echelon form
  std::vector<std::size_t> pivot_cols;   // one per nonzero row
};

// Gauss-Jordan elimination over Q(zeta). Pivots are chosen per column as the
// lowest-weight nonzero entry (fewest nonzero coefficients, rationals first),
// ties broken by row index, which keeps divisions cheap and the result
// deterministic.
RowEchelon row_reduce(CycloMatrix m, Exec exec = Exec::parallel);

// The serial reference and the OpenMP variant of the inner update: subtract
// multiples of pivot row `pr` from every other row with a nonzero in `pc`.
void eliminate_column_serial(CycloMatrix& m, std::size_t pr, std::size_t pc);
void eliminate_column_parallel(CycloMatrix& m, std::size_t pr, std::size_t pc);

struct RankNullspace {
  std::size_t rank = 0;
  std::vector<CycloVector> nullspace;
};

RankNullspace rank_nullspace(const CycloMatrix& a, Exec exec = Exec::parallel);
std::size_t rank(const CycloMatrix& a, Exec exec = Exec::parallel);

CycloMatrix inverse(const CycloMatrix& a);
Cyclotomic determinant(CycloMatrix a);
Cyclotomic trace(const CycloMatrix& a);
CycloMatrix conjugate_transpose(const CycloMatrix& a);

// Promotes every entry to the lcm of the entry levels so later arithmetic
// never needs to re-promote.
CycloMatrix unify_level(CycloMatrix a);
long max_level(const CycloMatrix& a);

CycloVector apply(const CycloMatrix& a, const CycloVector& v);
CycloMatrix from_columns(const std::vector<CycloVector>& cols, std::size_t nrows);
CycloMatrix vstack(const CycloMatrix& top, const CycloMatrix& bottom);
CycloMatrix hstack(const CycloMatrix& left, const CycloMatrix& right);

}  // namespace metabel
