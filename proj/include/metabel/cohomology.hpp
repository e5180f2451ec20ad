#pragma once

#include <string>
#include <vector>

#include "metabel/alexmod.hpp"
#include "metabel/laurent.hpp"
#include "metabel/linalg.hpp"
#include "metabel/representation.hpp"

namespace metabel {

struct BettiReport {
  long h0 = 0, h1 = 0, h2 = 0;
  long euler() const { return h0 - h1 + h2; }
  bool operator==(const BettiReport&) const = default;
};

// Joint fixed space of all generator images.
std::size_t h0_dim(const Representation& rho, Exec exec = Exec::parallel);

// Cohomology of the presentation 2-complex with coefficients in rho.
BettiReport h1_dim(const GroupPresentation& p, const Representation& rho, Exec exec = Exec::parallel);
// Homology of the same complex, V made a right module through g -> g^{-1}.
BettiReport homology_dims(const GroupPresentation& p, const Representation& rho, Exec exec = Exec::parallel);

// Basis of the 1-cocycles; each vector stacks u(x_1), ..., u(x_k).
std::vector<CycloVector> cocycle_basis(const GroupPresentation& p, const Representation& rho);
// u(w) via u(vw) = u(v) + rho(v) u(w).
CycloVector evaluate_cocycle(const CycloVector& u, const Word& w, const Representation& rho);

struct TorusCocycle {
  CycloVector u_mu, u_lambda;
};

// Cohomology of Z^2 = <mu, lambda> acting through M and L. Throws when M and L
// do not commute.
BettiReport boundary_dims(const CycloMatrix& M, const CycloMatrix& L);
// Uses the meridian and longitude of p; throws InputError without a longitude.
BettiReport boundary_dims(const GroupPresentation& p, const Representation& rho);

bool is_torus_cocycle(const TorusCocycle& x, const CycloMatrix& M, const CycloMatrix& L);
std::vector<TorusCocycle> torus_cocycle_basis(const CycloMatrix& M, const CycloMatrix& L);
// delta(e_k) for the standard basis; spans the torus coboundaries.
std::vector<TorusCocycle> torus_coboundaries(const CycloMatrix& M, const CycloMatrix& L);

TorusCocycle restrict_cocycle(const CycloVector& u, const GroupPresentation& p, const Representation& rho);

struct RestrictionImage {
  std::size_t dimension = 0;           // dim of the image of i^1 in H^1 of the torus
  std::vector<TorusCocycle> cocycles;  // restrictions of a cocycle basis
};
RestrictionImage image_i1(const GroupPresentation& p, const Representation& rho);

// Omega(x, y) = tr(x_mu (mu . y_lambda)) - tr(x_lambda (lambda . y_mu)) for
// cocycles in sl(n) coordinates, where g . A = alpha(g) A alpha(g)^{-1}.
Cyclotomic symplectic_form(const TorusCocycle& x, const TorusCocycle& y, const CycloMatrix& alpha_mu,
                           const CycloMatrix& alpha_lambda);
// Rank of Omega on a cocycle basis of H^1 of the torus with adjoint coefficients.
std::size_t symplectic_rank_on_torus(const CycloMatrix& alpha_mu, const CycloMatrix& alpha_lambda);

// degree 1: order of the twisted Alexander module (meridian column dropped);
// degree 0: order of H_0, the gcd of the maximal minors of the stacked
// blocks t^{eps} rho(x_i) - I. Normalized.
LaurentPoly twisted_alexander(const GroupPresentation& p, const Representation& rho, int degree);

// All exponents of the normalized f are multiples of n. Zero passes.
bool tn_support_check(const LaurentPoly& f, int n);

// Delta_1 of the theta-twist against Delta_1(theta t), after normalization.
bool twist_identity_check(const GroupPresentation& p, const Representation& rho, const Cyclotomic& theta);

struct CoverBetti {
  long b1 = 0;               // b_1 of the unbranched metabelian cover
  Integer order;             // |H_1(L_n)|
  Integer branched_bound;    // lower bound for b_1 of the branched cover
};
// Sum of h1 of beta_(n, sigma) over all characters sigma of H_1(L_n).
CoverBetti cover_b1(const GroupPresentation& p, const BranchedCoverHomology& h);

}  // namespace metabel
