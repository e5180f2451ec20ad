#include "metabel/repbuild.hpp"

#include "metabel/errors.hpp"

namespace metabel {

Cyclotomic z_choice(int n, bool special) {
  if (n < 1) throw InputError("n must be at least 1");
  if (!special || n % 2 == 1) return Cyclotomic(1);
  return Cyclotomic::root_of_unity(2L * n, 1);
}

CycloMatrix cyclic_matrix(int n, const Cyclotomic& z) {
  CycloMatrix Z(n, n);
  Z(0, n - 1) += z;
  for (int k = 0; k + 1 < n; ++k) Z(k + 1, k) = z;
  return Z;
}

Representation build_metabelian(const GroupPresentation& p, const BranchedCoverHomology& h, const Character& chi,
                                const Cyclotomic& z) {
  const int n = h.n;
  const Cyclotomic zn = z.pow(n);
  const bool special = zn == Cyclotomic(n % 2 == 1 ? 1 : -1);
  if (!zn.is_one() && !special) throw InputError("z^n must be 1 or (-1)^(n+1)");
  const CycloMatrix Z = cyclic_matrix(n, z);

  std::vector<CycloMatrix> images(p.generator_count);
  images[p.meridian] = Z;
  for (std::size_t i = 0; i < h.generators.size(); ++i) {
    CycloMatrix D(n, n);
    for (int m = 0; m < n; ++m) D(m, m) = chi.value(h.coord_map[i][(1 + m) % n]);
    images[h.generators[i]] = Z * D;
  }
  Provenance prov{n, chi.divisors, chi.exponents, z};
  Representation rho = Representation::on(p, std::move(images), special, std::move(prov));
  if (p.longitude && rho.evaluate(*p.longitude) != CycloMatrix::identity(n))
    throw InvariantViolation("longitude does not map to the identity under alpha_(n, chi, z)");
  return rho;
}

std::vector<CycloMatrix> sl_basis(int n) {
  std::vector<CycloMatrix> basis;
  for (int i = 0; i < n; ++i)
    for (int j = 0; j < n; ++j)
      if (i != j) {
        CycloMatrix e(n, n);
        e(i, j) = 1;
        basis.push_back(std::move(e));
      }
  for (int k = 0; k + 1 < n; ++k) {
    CycloMatrix h(n, n);
    h(k, k) = 1;
    h(k + 1, k + 1) = -1;
    basis.push_back(std::move(h));
  }
  return basis;
}

CycloVector sl_coordinates(const CycloMatrix& m) {
  const std::size_t n = m.rows();
  CycloVector v;
  v.reserve(n * n - 1);
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = 0; j < n; ++j)
      if (i != j) v.push_back(m(i, j));
  Cyclotomic partial;
  for (std::size_t k = 0; k + 1 < n; ++k) {
    partial += m(k, k);
    v.push_back(partial);
  }
  return v;
}

CycloMatrix sl_matrix(const CycloVector& coords, int n) {
  const auto basis = sl_basis(n);
  CycloMatrix m(n, n);
  for (std::size_t a = 0; a < basis.size(); ++a)
    if (!coords[a].is_zero()) m += coords[a] * basis[a];
  return m;
}

CycloMatrix trace_form_gram(int n) {
  const auto basis = sl_basis(n);
  CycloMatrix g(basis.size(), basis.size());
  for (std::size_t a = 0; a < basis.size(); ++a)
    for (std::size_t b = 0; b < basis.size(); ++b) g(a, b) = trace(basis[a] * basis[b]);
  return g;
}

Representation adjoint(const Representation& rho) {
  if (!rho.det_one()) throw InvariantViolation("adjoint representation needs determinant-one images");
  const int n = static_cast<int>(rho.dim());
  const auto basis = sl_basis(n);
  std::vector<CycloMatrix> images;
  for (std::size_t g = 0; g < rho.generator_count(); ++g) {
    const CycloMatrix& a = rho.image(static_cast<int>(g));
    const CycloMatrix& ai = rho.image_inverse(static_cast<int>(g));
    std::vector<CycloVector> cols;
    for (const auto& b : basis) cols.push_back(sl_coordinates(a * b * ai));
    images.push_back(from_columns(cols, basis.size()));
  }
  return Representation(std::move(images), true);
}

Representation regular_rep(const GroupPresentation& p, int n) {
  const CycloMatrix C = cyclic_matrix(n, Cyclotomic(1));
  std::vector<CycloMatrix> images;
  for (int g = 0; g < p.generator_count; ++g) {
    CycloMatrix m = CycloMatrix::identity(n);
    const CycloMatrix step = p.eps[g] >= 0 ? C : C.transpose();
    for (int e = 0; e < std::abs(p.eps[g]); ++e) m = m * step;
    images.push_back(std::move(m));
  }
  return Representation::on(p, std::move(images));
}

DifferenceCharacters difference_characters(const Character& chi, const BranchedCoverHomology& h, int n) {
  DifferenceCharacters out;
  const bool full_order = order_of(chi, h) == n;
  Character ti = chi;
  for (int i = 1; i < n; ++i) {
    ti = t_act(ti, h);
    Character c{chi.divisors, std::vector<long>(chi.divisors.size())};
    for (std::size_t j = 0; j < c.exponents.size(); ++j)
      c.exponents[j] = ((ti.exponents[j] - chi.exponents[j]) % c.divisors[j] + c.divisors[j]) % c.divisors[j];
    if (full_order && order_of(c, h) != n) out.orders_ok = false;
    out.characters.push_back(std::move(c));
  }
  return out;
}

Representation twist(const GroupPresentation& p, const Representation& rho, const Cyclotomic& theta) {
  std::vector<CycloMatrix> images;
  for (int g = 0; g < p.generator_count; ++g) {
    const Cyclotomic s = theta.pow(p.eps[g]);
    images.push_back(s * rho.image(g));
  }
  const bool det_one = rho.det_one() && theta.pow(static_cast<long>(rho.dim())).is_one();
  return Representation(std::move(images), det_one, rho.provenance());
}

Intertwiners intertwiners(const Representation& rho1, const Representation& rho2) {
  if (rho1.dim() != rho2.dim() || rho1.generator_count() != rho2.generator_count())
    throw InvariantViolation("intertwiners need representations of equal shape");
  const std::size_t d = rho1.dim();
  const std::size_t g = rho1.generator_count();
  CycloMatrix sys(g * d * d, d * d);
  for (std::size_t x = 0; x < g; ++x) {
    const CycloMatrix& a = rho2.image(static_cast<int>(x));
    const CycloMatrix& b = rho1.image(static_cast<int>(x));
    for (std::size_t r = 0; r < d; ++r)
      for (std::size_t c = 0; c < d; ++c) {
        const std::size_t row = x * d * d + r * d + c;
        // (a X)(r, c) - (X b)(r, c)
        for (std::size_t k = 0; k < d; ++k) {
          if (!a(r, k).is_zero()) sys(row, k * d + c) += a(r, k);
          if (!b(k, c).is_zero()) sys(row, r * d + k) -= b(k, c);
        }
      }
  }
  const auto rn = rank_nullspace(sys);
  Intertwiners out;
  out.dimension = rn.nullspace.size();
  for (const auto& v : rn.nullspace) {
    CycloMatrix X(d, d);
    for (std::size_t r = 0; r < d; ++r)
      for (std::size_t c = 0; c < d; ++c) X(r, c) = v[r * d + c];
    out.basis.push_back(std::move(X));
  }
  return out;
}

bool is_irreducible(const Representation& rho) { return intertwiners(rho, rho).dimension == 1; }

LaurentPoly characteristic_polynomial(const CycloMatrix& m) {
  LaurentMatrix a(m.rows(), m.cols());
  for (std::size_t r = 0; r < m.rows(); ++r)
    for (std::size_t c = 0; c < m.cols(); ++c) {
      a(r, c) = LaurentPoly(m(r, c));
      if (r == c) a(r, c) -= LaurentPoly::monomial(Cyclotomic(1), 1);
    }
  return laurent_det(std::move(a));
}

bool proportional(const CycloMatrix& x, const CycloMatrix& y) {
  if (x.rows() != y.rows() || x.cols() != y.cols() || x.is_zero() || y.is_zero()) return false;
  Cyclotomic ratio;
  bool have = false;
  for (std::size_t r = 0; r < x.rows(); ++r)
    for (std::size_t c = 0; c < x.cols(); ++c) {
      if (x(r, c).is_zero() != y(r, c).is_zero()) return false;
      if (x(r, c).is_zero()) continue;
      const Cyclotomic q = x(r, c) / y(r, c);
      if (!have) {
        ratio = q;
        have = true;
      } else if (q != ratio) {
        return false;
      }
    }
  return true;
}

}  // namespace metabel
