#include "metabel/snf.hpp"

#include <algorithm>

namespace metabel {

namespace {

class SmithState {
 public:
  explicit SmithState(const IntMatrix& a)
      : A(a),
        U(IntMatrix::identity(a.rows())),
        U_inv(IntMatrix::identity(a.rows())),
        V(IntMatrix::identity(a.cols())),
        V_inv(IntMatrix::identity(a.cols())) {}

  // row_i += q * row_j
  void add_row(std::size_t i, std::size_t j, const Integer& q) {
    for (std::size_t c = 0; c < A.cols(); ++c) A(i, c) += q * A(j, c);
    for (std::size_t c = 0; c < U.cols(); ++c) U(i, c) += q * U(j, c);
    for (std::size_t r = 0; r < U_inv.rows(); ++r) U_inv(r, j) -= q * U_inv(r, i);
  }
  // col_j += q * col_i
  void add_col(std::size_t j, std::size_t i, const Integer& q) {
    for (std::size_t r = 0; r < A.rows(); ++r) A(r, j) += q * A(r, i);
    for (std::size_t r = 0; r < V.rows(); ++r) V(r, j) += q * V(r, i);
    for (std::size_t c = 0; c < V_inv.cols(); ++c) V_inv(i, c) -= q * V_inv(j, c);
  }
  void swap_rows(std::size_t i, std::size_t j) {
    A.swap_rows(i, j);
    U.swap_rows(i, j);
    U_inv.swap_cols(i, j);
  }
  void swap_cols(std::size_t i, std::size_t j) {
    A.swap_cols(i, j);
    V.swap_cols(i, j);
    V_inv.swap_rows(i, j);
  }
  void negate_row(std::size_t i) {
    for (std::size_t c = 0; c < A.cols(); ++c) A(i, c) = -A(i, c);
    for (std::size_t c = 0; c < U.cols(); ++c) U(i, c) = -U(i, c);
    for (std::size_t r = 0; r < U_inv.rows(); ++r) U_inv(r, i) = -U_inv(r, i);
  }

  IntMatrix A, U, U_inv, V, V_inv;
};

}  // namespace

SmithDecomposition snf(const IntMatrix& a) {
  SmithState s(a);
  IntMatrix& A = s.A;
  const std::size_t m = a.rows(), n = a.cols(), k = std::min(m, n);

  for (std::size_t t = 0; t < k; ++t) {
    // smallest nonzero entry of the trailing block becomes the pivot
    bool found = false;
    std::size_t pi = t, pj = t;
    for (std::size_t i = t; i < m; ++i)
      for (std::size_t j = t; j < n; ++j) {
        if (A(i, j) == 0) continue;
        if (!found || abs(A(i, j)) < abs(A(pi, pj))) {
          found = true;
          pi = i;
          pj = j;
        }
      }
    if (!found) break;
    s.swap_rows(t, pi);
    s.swap_cols(t, pj);

    for (;;) {
      bool clean = true;
      for (std::size_t i = t + 1; i < m; ++i) {
        if (A(i, t) == 0) continue;
        Integer q = A(i, t) / A(t, t);
        if (q != 0) s.add_row(i, t, -q);
        if (A(i, t) != 0) clean = false;
      }
      for (std::size_t j = t + 1; j < n; ++j) {
        if (A(t, j) == 0) continue;
        Integer q = A(t, j) / A(t, t);
        if (q != 0) s.add_col(j, t, -q);
        if (A(t, j) != 0) clean = false;
      }
      if (!clean) {
        // a remainder smaller than the pivot survived; promote it
        std::size_t bi = t, bj = t;
        for (std::size_t i = t + 1; i < m; ++i)
          if (A(i, t) != 0 && abs(A(i, t)) < abs(A(bi, bj))) bi = i, bj = t;
        for (std::size_t j = t + 1; j < n; ++j)
          if (A(t, j) != 0 && abs(A(t, j)) < abs(A(bi, bj))) bi = t, bj = j;
        s.swap_rows(t, bi);
        s.swap_cols(t, bj);
        continue;
      }
      bool divisible = true;
      for (std::size_t i = t + 1; i < m && divisible; ++i)
        for (std::size_t j = t + 1; j < n; ++j)
          if (A(i, j) % A(t, t) != 0) {
            s.add_row(t, i, Integer(1));
            divisible = false;
            break;
          }
      if (divisible) break;
    }
    if (A(t, t) < 0) s.negate_row(t);
  }

  SmithDecomposition out;
  out.divisors.resize(k);
  for (std::size_t t = 0; t < k; ++t) out.divisors[t] = A(t, t);
  out.U = std::move(s.U);
  out.V = std::move(s.V);
  out.U_inv = std::move(s.U_inv);
  out.V_inv = std::move(s.V_inv);
  return out;
}

IntMatrix diagonal_matrix(const std::vector<Integer>& d, std::size_t rows, std::size_t cols) {
  IntMatrix m(rows, cols);
  for (std::size_t i = 0; i < d.size() && i < rows && i < cols; ++i) m(i, i) = d[i];
  return m;
}

}  // namespace metabel
