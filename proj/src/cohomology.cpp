#include "metabel/cohomology.hpp"

#include "metabel/charenum.hpp"
#include "metabel/errors.hpp"
#include "metabel/foxcalc.hpp"
#include "metabel/repbuild.hpp"

namespace metabel {

namespace {

CycloMatrix stacked_fixed_system(const std::vector<CycloMatrix>& mats, std::size_t d) {
  CycloMatrix sys(mats.size() * d, d);
  const CycloMatrix id = CycloMatrix::identity(d);
  for (std::size_t g = 0; g < mats.size(); ++g) sys.set_block(g * d, 0, mats[g] - id);
  return sys;
}

CycloVector concat(const CycloVector& a, const CycloVector& b) {
  CycloVector v = a;
  v.insert(v.end(), b.begin(), b.end());
  return v;
}

CycloVector sub_vector(const CycloVector& v, std::size_t from, std::size_t len) {
  return CycloVector(v.begin() + static_cast<std::ptrdiff_t>(from), v.begin() + static_cast<std::ptrdiff_t>(from + len));
}

long as_long(std::size_t x) { return static_cast<long>(x); }

}  // namespace

std::size_t h0_dim(const Representation& rho, Exec exec) {
  if (rho.generator_count() == 0) return rho.dim();
  return rho.dim() - rank(stacked_fixed_system(rho.images(), rho.dim()), exec);
}

BettiReport h1_dim(const GroupPresentation& p, const Representation& rho, Exec exec) {
  const long d = as_long(rho.dim());
  const long k = p.generator_count;
  BettiReport b;
  b.h0 = as_long(h0_dim(rho, exec));
  const long rJ = p.relators.empty() ? 0 : as_long(rank(fox_jacobian(p, rho), exec));
  b.h1 = (k * d - rJ) - (d - b.h0);
  b.h2 = as_long(p.relators.size()) * d - rJ;
  if (b.euler() != 0) throw InvariantViolation("Euler characteristic of the exterior complex is not zero");
  return b;
}

BettiReport homology_dims(const GroupPresentation& p, const Representation& rho, Exec exec) {
  const std::size_t d = rho.dim();
  const std::size_t k = p.generator_count;
  const std::size_t r = p.relators.size();
  // boundary_1: C_1 -> C_0, block j = rho(x_j^{-1}) - I
  CycloMatrix d1(d, k * d);
  const CycloMatrix id = CycloMatrix::identity(d);
  for (std::size_t j = 0; j < k; ++j) d1.set_block(0, j * d, rho.image_inverse(static_cast<int>(j)) - id);
  // boundary_2: C_2 -> C_1, block (j, i) = rho(bar(d r_i / d x_j))
  CycloMatrix d2(k * d, r * d);
  for (std::size_t i = 0; i < r; ++i) {
    const auto blocks = fox_images_involuted(p.relators[i], rho);
    for (std::size_t j = 0; j < k; ++j) d2.set_block(j * d, i * d, blocks[j]);
  }
  const long r1 = k == 0 ? 0 : as_long(rank(unify_level(d1), exec));
  const long r2 = r == 0 ? 0 : as_long(rank(unify_level(d2), exec));
  BettiReport b;
  b.h0 = as_long(d) - r1;
  b.h1 = as_long(k * d) - r1 - r2;
  b.h2 = as_long(r * d) - r2;
  if (b.euler() != 0) throw InvariantViolation("Euler characteristic of the exterior chain complex is not zero");
  return b;
}

std::vector<CycloVector> cocycle_basis(const GroupPresentation& p, const Representation& rho) {
  const std::size_t d = rho.dim();
  if (p.relators.empty()) {
    std::vector<CycloVector> basis;
    for (std::size_t q = 0; q < p.generator_count * d; ++q) {
      CycloVector v(p.generator_count * d);
      v[q] = 1;
      basis.push_back(std::move(v));
    }
    return basis;
  }
  return rank_nullspace(fox_jacobian(p, rho)).nullspace;
}

CycloVector evaluate_cocycle(const CycloVector& u, const Word& w, const Representation& rho) {
  const std::size_t d = rho.dim();
  CycloVector acc(d);
  CycloMatrix prefix = CycloMatrix::identity(d);
  for (const Letter& l : w.letters()) {
    const CycloVector ug = sub_vector(u, static_cast<std::size_t>(l.gen) * d, d);
    if (l.exp > 0) {
      const CycloVector add = metabel::apply(prefix, ug);
      for (std::size_t q = 0; q < d; ++q) acc[q] += add[q];
      prefix = prefix * rho.image(l.gen);
    } else {
      prefix = prefix * rho.image_inverse(l.gen);
      const CycloVector sub = metabel::apply(prefix, ug);
      for (std::size_t q = 0; q < d; ++q) acc[q] -= sub[q];
    }
  }
  return acc;
}

BettiReport boundary_dims(const CycloMatrix& M, const CycloMatrix& L) {
  if (M * L != L * M) throw InvariantViolation("meridian and longitude images do not commute");
  const long d = as_long(M.rows());
  const CycloMatrix id = CycloMatrix::identity(M.rows());
  BettiReport b;
  b.h0 = d - as_long(rank(vstack(M - id, L - id)));
  // (I - L) u_mu + (M - I) u_lambda = 0
  const long z1 = 2 * d - as_long(rank(hstack(id - L, M - id)));
  b.h1 = z1 - (d - b.h0);
  b.h2 = b.h1 - b.h0;
  return b;
}

BettiReport boundary_dims(const GroupPresentation& p, const Representation& rho) {
  if (!p.longitude) throw InputError("presentation has no longitude; boundary cohomology needs one");
  return boundary_dims(rho.image(p.meridian), rho.evaluate(*p.longitude));
}

bool is_torus_cocycle(const TorusCocycle& x, const CycloMatrix& M, const CycloMatrix& L) {
  const CycloMatrix id = CycloMatrix::identity(M.rows());
  const CycloVector a = metabel::apply(id - L, x.u_mu);
  const CycloVector b = metabel::apply(M - id, x.u_lambda);
  for (std::size_t q = 0; q < a.size(); ++q)
    if (a[q] + b[q] != Cyclotomic(0)) return false;
  return true;
}

std::vector<TorusCocycle> torus_cocycle_basis(const CycloMatrix& M, const CycloMatrix& L) {
  const std::size_t d = M.rows();
  const CycloMatrix id = CycloMatrix::identity(d);
  std::vector<TorusCocycle> out;
  for (const auto& v : rank_nullspace(hstack(id - L, M - id)).nullspace)
    out.push_back(TorusCocycle{sub_vector(v, 0, d), sub_vector(v, d, d)});
  return out;
}

std::vector<TorusCocycle> torus_coboundaries(const CycloMatrix& M, const CycloMatrix& L) {
  const std::size_t d = M.rows();
  const CycloMatrix id = CycloMatrix::identity(d);
  std::vector<TorusCocycle> out;
  for (std::size_t q = 0; q < d; ++q) {
    CycloVector e(d);
    e[q] = 1;
    out.push_back(TorusCocycle{metabel::apply(M - id, e), metabel::apply(L - id, e)});
  }
  return out;
}

TorusCocycle restrict_cocycle(const CycloVector& u, const GroupPresentation& p, const Representation& rho) {
  if (!p.longitude) throw InputError("presentation has no longitude; restriction to the boundary needs one");
  return {evaluate_cocycle(u, Word::generator(p.meridian), rho), evaluate_cocycle(u, *p.longitude, rho)};
}

RestrictionImage image_i1(const GroupPresentation& p, const Representation& rho) {
  const CycloMatrix M = rho.image(p.meridian);
  if (!p.longitude) throw InputError("presentation has no longitude; restriction to the boundary needs one");
  const CycloMatrix L = rho.evaluate(*p.longitude);
  RestrictionImage out;
  for (const auto& u : cocycle_basis(p, rho)) {
    TorusCocycle t = restrict_cocycle(u, p, rho);
    if (!is_torus_cocycle(t, M, L)) throw InvariantViolation("restricted cocycle fails the torus cocycle condition");
    out.cocycles.push_back(std::move(t));
  }
  const std::size_t d = rho.dim();
  std::vector<CycloVector> cob, all;
  for (const auto& b : torus_coboundaries(M, L)) cob.push_back(concat(b.u_mu, b.u_lambda));
  all = cob;
  for (const auto& c : out.cocycles) all.push_back(concat(c.u_mu, c.u_lambda));
  const std::size_t rb = cob.empty() ? 0 : rank(from_columns(cob, 2 * d));
  const std::size_t ra = all.empty() ? 0 : rank(from_columns(all, 2 * d));
  out.dimension = ra - rb;
  return out;
}

Cyclotomic symplectic_form(const TorusCocycle& x, const TorusCocycle& y, const CycloMatrix& alpha_mu,
                           const CycloMatrix& alpha_lambda) {
  const int n = static_cast<int>(alpha_mu.rows());
  const CycloMatrix xm = sl_matrix(x.u_mu, n), xl = sl_matrix(x.u_lambda, n);
  const CycloMatrix ym = sl_matrix(y.u_mu, n), yl = sl_matrix(y.u_lambda, n);
  const CycloMatrix mu_yl = alpha_mu * yl * inverse(alpha_mu);
  const CycloMatrix la_ym = alpha_lambda * ym * inverse(alpha_lambda);
  return trace(xm * mu_yl) - trace(xl * la_ym);
}

std::size_t symplectic_rank_on_torus(const CycloMatrix& alpha_mu, const CycloMatrix& alpha_lambda) {
  const Representation base({alpha_mu, alpha_lambda}, true);
  const Representation ad = adjoint(base);
  const auto z = torus_cocycle_basis(ad.image(0), ad.image(1));
  if (z.empty()) return 0;
  CycloMatrix g(z.size(), z.size());
  for (std::size_t a = 0; a < z.size(); ++a)
    for (std::size_t b = 0; b < z.size(); ++b) g(a, b) = symplectic_form(z[a], z[b], alpha_mu, alpha_lambda);
  return rank(unify_level(g));
}

LaurentPoly twisted_alexander(const GroupPresentation& p, const Representation& rho, int degree) {
  const std::size_t d = rho.dim();
  if (degree == 1) {
    if (p.relators.empty()) return LaurentPoly(1);
    LaurentMatrix J = twisted_jacobian(p, rho, {p.meridian});
    LaurentPoly prod(1);
    for (const auto& x : laurent_snf(std::move(J))) prod *= x;
    return prod.normalized();
  }
  if (degree == 0) {
    // H_0 is presented by the blocks t^{eps} rho(x_j) - I stacked vertically;
    // its order is the gcd of the maximal minors.
    if (p.generator_count == 0) return LaurentPoly(1);
    LaurentMatrix a(p.generator_count * d, d);
    for (int j = 0; j < p.generator_count; ++j) {
      LaurentMatrix b = to_laurent(rho.image(j));
      for (std::size_t r = 0; r < d; ++r)
        for (std::size_t c = 0; c < d; ++c) {
          b(r, c) = b(r, c).shifted(p.eps[j]);
          if (r == c) b(r, c) -= LaurentPoly(1);
        }
      a.set_block(j * d, 0, b);
    }
    LaurentPoly prod(1);
    for (const auto& x : laurent_snf(std::move(a))) prod *= x;
    return prod.normalized();
  }
  throw InputError("twisted Alexander polynomial degree must be 0 or 1");
}

bool tn_support_check(const LaurentPoly& f, int n) {
  const LaurentPoly g = f.normalized();
  for (const auto& [e, c] : g.terms())
    if (e % n != 0) return false;
  return true;
}

bool twist_identity_check(const GroupPresentation& p, const Representation& rho, const Cyclotomic& theta) {
  const LaurentPoly lhs = twisted_alexander(p, twist(p, rho, theta), 1);
  const LaurentPoly rhs = twisted_alexander(p, rho, 1).scale_variable(theta).normalized();
  return lhs == rhs;
}

CoverBetti cover_b1(const GroupPresentation& p, const BranchedCoverHomology& h) {
  const auto chars = all_characters(h);
  std::vector<long> h1(chars.size(), 0);
#pragma omp parallel for schedule(dynamic, 1)
  for (std::size_t q = 0; q < chars.size(); ++q) {
    const Representation beta = build_metabelian(p, h, chars[q], Cyclotomic(1));
    h1[q] = homology_dims(p, beta, Exec::serial).h1;
  }
  CoverBetti out;
  for (long x : h1) out.b1 += x;
  out.order = static_cast<long>(chars.size());
  out.branched_bound = Integer(out.b1) - out.order;
  return out;
}

}  // namespace metabel
