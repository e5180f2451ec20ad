#pragma once

#include <vector>

#include "metabel/laurent.hpp"
#include "metabel/snf.hpp"
#include "metabel/word.hpp"

namespace metabel {

// Presentation of H = H_1 of the infinite cyclic cover over Z[t^{+-1}].
// Column i of `matrix` belongs to the class of x_g * x_mu^{-1} with
// g = generators[i]. Entries are integral.
struct AlexanderModule {
  LaurentMatrix matrix;
  std::vector<int> generators;
  int meridian = 0;
  int presentation_generators = 0;
};

// H_1(L_n) = H / (t^n - 1) in Smith coordinates. Divisors equal to 1 are
// pruned; zeros stand for free summands.
struct BranchedCoverHomology {
  int n = 1;
  std::vector<Integer> divisors;
  // Column k is the image of the k-th Smith generator under t.
  IntMatrix t_action;
  // coord_map[i][j] = coordinates of t^j * a_i.
  std::vector<std::vector<std::vector<Integer>>> coord_map;
  std::vector<int> generators;
  int meridian = 0;

  std::size_t rank() const { return divisors.size(); }
  // Coordinates of t * h.
  std::vector<Integer> apply_t(const std::vector<Integer>& h) const;
  std::vector<Integer> reduce(std::vector<Integer> h) const;
  bool is_finite() const;
  // |H_1(L_n)|, or 0 when infinite.
  Integer order() const;
};

AlexanderModule alexander_module(const GroupPresentation& p);
BranchedCoverHomology branched_homology(const AlexanderModule& m, int n);
int b1_Ln(const BranchedCoverHomology& h);

// Alexander polynomial with integer coefficients, lowest exponent 0 and
// positive leading coefficient.
LaurentPoly alexander_polynomial(const AlexanderModule& m);

// |prod_{j<n} Delta(zeta_n^j)|, an independent count of |H_1(L_n)|
// (0 when some factor vanishes).
Rational fox_goeritz_order(const AlexanderModule& m, int n);

}  // namespace metabel
