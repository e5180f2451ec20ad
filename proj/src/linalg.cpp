#include "metabel/linalg.hpp"

#include <numeric>
#include <stdexcept>

namespace metabel {

namespace {

constexpr std::size_t kParallelThreshold = 48;  // rows*cols below this stay serial

std::ptrdiff_t choose_pivot(const CycloMatrix& m, std::size_t from_row, std::size_t col) {
  std::ptrdiff_t best = -1;
  int best_weight = 0;
  for (std::size_t r = from_row; r < m.rows(); ++r) {
    const Cyclotomic& x = m(r, col);
    if (x.is_zero()) continue;
    const int w = x.weight() + (x.is_rational() ? 0 : 1000);
    if (best < 0 || w < best_weight) {
      best = static_cast<std::ptrdiff_t>(r);
      best_weight = w;
    }
  }
  return best;
}

void eliminate_row(CycloMatrix& m, std::size_t i, std::size_t pr, std::size_t pc) {
  const Cyclotomic f = m(i, pc);
  for (std::size_t c = pc; c < m.cols(); ++c) {
    const Cyclotomic& p = m(pr, c);
    if (p.is_zero()) continue;
    m(i, c) -= f * p;
  }
}

}  // namespace

void eliminate_column_serial(CycloMatrix& m, std::size_t pr, std::size_t pc) {
  for (std::size_t i = 0; i < m.rows(); ++i) {
    if (i == pr || m(i, pc).is_zero()) continue;
    eliminate_row(m, i, pr, pc);
  }
}

void eliminate_column_parallel(CycloMatrix& m, std::size_t pr, std::size_t pc) {
  const std::ptrdiff_t rows = static_cast<std::ptrdiff_t>(m.rows());
#pragma omp parallel for schedule(dynamic, 1)
  for (std::ptrdiff_t i = 0; i < rows; ++i) {
    const auto row = static_cast<std::size_t>(i);
    if (row == pr || m(row, pc).is_zero()) continue;
    eliminate_row(m, row, pr, pc);
  }
}

RowEchelon row_reduce(CycloMatrix m, Exec exec) {
  m = unify_level(std::move(m));
  const bool parallel = exec == Exec::parallel && m.rows() * m.cols() >= kParallelThreshold;
  RowEchelon out;
  std::size_t r = 0;
  for (std::size_t col = 0; col < m.cols() && r < m.rows(); ++col) {
    const std::ptrdiff_t p = choose_pivot(m, r, col);
    if (p < 0) continue;
    m.swap_rows(r, static_cast<std::size_t>(p));
    const Cyclotomic inv = m(r, col).inverse();
    for (std::size_t c = col; c < m.cols(); ++c)
      if (!m(r, c).is_zero()) m(r, c) *= inv;
    if (parallel)
      eliminate_column_parallel(m, r, col);
    else
      eliminate_column_serial(m, r, col);
    out.pivot_cols.push_back(col);
    ++r;
  }
  out.reduced = std::move(m);
  return out;
}

RankNullspace rank_nullspace(const CycloMatrix& a, Exec exec) {
  RowEchelon e = row_reduce(a, exec);
  RankNullspace out;
  out.rank = e.pivot_cols.size();
  std::vector<bool> is_pivot(a.cols(), false);
  for (auto c : e.pivot_cols) is_pivot[c] = true;
  for (std::size_t f = 0; f < a.cols(); ++f) {
    if (is_pivot[f]) continue;
    CycloVector v(a.cols(), Cyclotomic(0));
    v[f] = Cyclotomic(1);
    for (std::size_t j = 0; j < e.pivot_cols.size(); ++j) v[e.pivot_cols[j]] = -e.reduced(j, f);
    out.nullspace.push_back(std::move(v));
  }
  return out;
}

std::size_t rank(const CycloMatrix& a, Exec exec) { return row_reduce(a, exec).pivot_cols.size(); }

CycloMatrix inverse(const CycloMatrix& a) {
  if (a.rows() != a.cols()) throw std::invalid_argument("inverse of non-square matrix");
  const std::size_t n = a.rows();
  CycloMatrix aug(n, 2 * n);
  aug.set_block(0, 0, a);
  for (std::size_t i = 0; i < n; ++i) aug(i, n + i) = Cyclotomic(1);
  RowEchelon e = row_reduce(std::move(aug), Exec::serial);
  if (e.pivot_cols.size() < n || e.pivot_cols[n - 1] != n - 1)
    throw std::domain_error("matrix is singular");
  return e.reduced.block(0, n, n, n);
}

Cyclotomic determinant(CycloMatrix a) {
  if (a.rows() != a.cols()) throw std::invalid_argument("determinant of non-square matrix");
  a = unify_level(std::move(a));
  const std::size_t n = a.rows();
  Cyclotomic det(1);
  for (std::size_t col = 0; col < n; ++col) {
    const std::ptrdiff_t p = choose_pivot(a, col, col);
    if (p < 0) return Cyclotomic(0);
    if (static_cast<std::size_t>(p) != col) {
      a.swap_rows(col, static_cast<std::size_t>(p));
      det = -det;
    }
    det *= a(col, col);
    const Cyclotomic inv = a(col, col).inverse();
    for (std::size_t i = col + 1; i < n; ++i) {
      if (a(i, col).is_zero()) continue;
      const Cyclotomic f = a(i, col) * inv;
      for (std::size_t c = col; c < n; ++c) a(i, c) -= f * a(col, c);
    }
  }
  return det;
}

Cyclotomic trace(const CycloMatrix& a) {
  Cyclotomic t(0);
  for (std::size_t i = 0; i < std::min(a.rows(), a.cols()); ++i) t += a(i, i);
  return t;
}

CycloMatrix conjugate_transpose(const CycloMatrix& a) {
  CycloMatrix t(a.cols(), a.rows());
  for (std::size_t r = 0; r < a.rows(); ++r)
    for (std::size_t c = 0; c < a.cols(); ++c) t(c, r) = a(r, c).conj();
  return t;
}

long max_level(const CycloMatrix& a) {
  long l = 1;
  for (const auto& x : a.data())
    if (!x.is_rational()) l = std::lcm(l, x.level());
  return l;
}

CycloMatrix unify_level(CycloMatrix a) {
  const long l = max_level(a);
  if (l == 1) return a;
  for (std::size_t r = 0; r < a.rows(); ++r)
    for (std::size_t c = 0; c < a.cols(); ++c)
      if (a(r, c).level() != l) a(r, c) = a(r, c).promote(l);
  return a;
}

CycloVector apply(const CycloMatrix& a, const CycloVector& v) {
  if (a.cols() != v.size()) throw std::invalid_argument("matrix-vector shape mismatch");
  CycloVector out(a.rows(), Cyclotomic(0));
  for (std::size_t r = 0; r < a.rows(); ++r)
    for (std::size_t c = 0; c < a.cols(); ++c)
      if (!a(r, c).is_zero() && !v[c].is_zero()) out[r] += a(r, c) * v[c];
  return out;
}

CycloMatrix from_columns(const std::vector<CycloVector>& cols, std::size_t nrows) {
  CycloMatrix m(nrows, cols.size());
  for (std::size_t c = 0; c < cols.size(); ++c)
    for (std::size_t r = 0; r < nrows; ++r) m(r, c) = cols[c][r];
  return m;
}

CycloMatrix vstack(const CycloMatrix& top, const CycloMatrix& bottom) {
  if (top.rows() == 0) return bottom;
  if (bottom.rows() == 0) return top;
  if (top.cols() != bottom.cols()) throw std::invalid_argument("vstack column mismatch");
  CycloMatrix m(top.rows() + bottom.rows(), top.cols());
  m.set_block(0, 0, top);
  m.set_block(top.rows(), 0, bottom);
  return m;
}

CycloMatrix hstack(const CycloMatrix& left, const CycloMatrix& right) {
  if (left.rows() != right.rows()) throw std::invalid_argument("hstack row mismatch");
  CycloMatrix m(left.rows(), left.cols() + right.cols());
  m.set_block(0, 0, left);
  m.set_block(0, left.cols(), right);
  return m;
}

}  // namespace metabel
