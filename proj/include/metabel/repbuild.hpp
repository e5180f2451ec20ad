#pragma once

#include <vector>

#include "metabel/alexmod.hpp"
#include "metabel/charenum.hpp"
#include "metabel/laurent.hpp"
#include "metabel/representation.hpp"

namespace metabel {

// z with z^n = (-1)^{n+1} when `special`, else 1.
Cyclotomic z_choice(int n, bool special);

// The n x n matrix with z in the top-right corner and on the subdiagonal.
CycloMatrix cyclic_matrix(int n, const Cyclotomic& z);

// alpha_(n, chi, z) pulled back to the knot group. Verifies every relator
// and, when present, that the longitude maps to the identity.
Representation build_metabelian(const GroupPresentation& p, const BranchedCoverHomology& h, const Character& chi,
                                const Cyclotomic& z);

// Fixed basis of sl(n): E_ij (i != j, row-major) then E_kk - E_{k+1,k+1}.
std::vector<CycloMatrix> sl_basis(int n);
// Coordinates of a trace-zero matrix in sl_basis(n).
CycloVector sl_coordinates(const CycloMatrix& m);
CycloMatrix sl_matrix(const CycloVector& coords, int n);
// Gram matrix of (A, B) -> tr(AB) on sl_basis(n).
CycloMatrix trace_form_gram(int n);

// g -> (A -> rho(g) A rho(g)^{-1}) on sl(n).
Representation adjoint(const Representation& rho);

// x_i -> C^{eps(x_i)} with C the cyclic shift e_k -> e_{k+1}.
Representation regular_rep(const GroupPresentation& p, int n);

struct DifferenceCharacters {
  std::vector<Character> characters;  // chi_1, ..., chi_{n-1}
  bool orders_ok = true;              // every chi_i has order n when chi does
};
// chi_i(v) = chi(v)^{-1} chi(t^i v)
DifferenceCharacters difference_characters(const Character& chi, const BranchedCoverHomology& h, int n);

// x_i -> theta^{eps(x_i)} rho(x_i)
Representation twist(const GroupPresentation& p, const Representation& rho, const Cyclotomic& theta);

struct Intertwiners {
  std::size_t dimension = 0;
  std::vector<CycloMatrix> basis;
};
// Solutions X of rho2(x_i) X = X rho1(x_i) for every generator.
Intertwiners intertwiners(const Representation& rho1, const Representation& rho2);
bool is_irreducible(const Representation& rho);

// det(M - tI) as a polynomial in t.
LaurentPoly characteristic_polynomial(const CycloMatrix& m);
// True when X is a nonzero scalar multiple of Y.
bool proportional(const CycloMatrix& x, const CycloMatrix& y);

}  // namespace metabel
