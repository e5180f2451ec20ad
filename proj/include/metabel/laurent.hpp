#pragma once

#include <map>
#include <string>
#include <vector>

#include "metabel/cyclotomic.hpp"
#include "metabel/matrix.hpp"

namespace metabel {

// Laurent polynomial in t over Q(zeta). No zero coefficients are stored.
class LaurentPoly {
 public:
  LaurentPoly() = default;
  LaurentPoly(long c);  // NOLINT: constants embed implicitly
  explicit LaurentPoly(const Cyclotomic& c);

  static LaurentPoly monomial(const Cyclotomic& c, int exponent);
  // 1 - t^n and friends are common enough to deserve a builder.
  static LaurentPoly from_coefficients(const std::vector<long>& ascending, int lowest = 0);

  const std::map<int, Cyclotomic>& terms() const { return terms_; }
  bool is_zero() const { return terms_.empty(); }
  int min_exp() const;
  int max_exp() const;
  // max_exp - min_exp; the Euclidean norm of K[t^{+-1}].
  int span() const { return is_zero() ? -1 : max_exp() - min_exp(); }
  Cyclotomic coeff(int e) const;
  const Cyclotomic& leading() const;
  bool is_constant() const { return terms_.empty() || (terms_.size() == 1 && terms_.begin()->first == 0); }
  bool is_unit() const { return terms_.size() == 1; }

  LaurentPoly shifted(int k) const;
  // Shift so the lowest exponent is 0 and scale so the leading coefficient
  // is 1. Two polynomials agree up to units c*t^k iff their normal forms agree.
  LaurentPoly normalized() const;
  // f(theta * t)
  LaurentPoly scale_variable(const Cyclotomic& theta) const;
  Cyclotomic evaluate(const Cyclotomic& x) const;

  LaurentPoly operator-() const;
  LaurentPoly& operator+=(const LaurentPoly& o);
  LaurentPoly& operator-=(const LaurentPoly& o);
  LaurentPoly& operator*=(const LaurentPoly& o);
  LaurentPoly& operator*=(const Cyclotomic& c);

  friend LaurentPoly operator+(LaurentPoly a, const LaurentPoly& b) { return a += b; }
  friend LaurentPoly operator-(LaurentPoly a, const LaurentPoly& b) { return a -= b; }
  friend LaurentPoly operator*(LaurentPoly a, const LaurentPoly& b) { return a *= b; }
  friend bool operator==(const LaurentPoly& a, const LaurentPoly& b) { return a.terms_ == b.terms_; }
  friend bool operator!=(const LaurentPoly& a, const LaurentPoly& b) { return !(a == b); }

  std::string to_string() const;

 private:
  void add_term(int e, const Cyclotomic& c);
  std::map<int, Cyclotomic> terms_;
};

using LaurentMatrix = Matrix<LaurentPoly>;

// Division with remainder in K[t^{+-1}]: a = q*b + r with span(r) < span(b).
void laurent_divmod(const LaurentPoly& a, const LaurentPoly& b, LaurentPoly& q, LaurentPoly& r);
bool laurent_divides(const LaurentPoly& d, const LaurentPoly& a);
// Exact quotient; throws when b does not divide a.
LaurentPoly laurent_exact_div(const LaurentPoly& a, const LaurentPoly& b);
LaurentPoly laurent_gcd(const LaurentPoly& a, const LaurentPoly& b);

// Smith form over the PID K[t^{+-1}]: min(rows, cols) normalized diagonal
// entries, each dividing the next, zeros last.
std::vector<LaurentPoly> laurent_snf(LaurentMatrix a);

// Determinant by fraction-free (Bareiss) elimination with exact division.
LaurentPoly laurent_det(LaurentMatrix a);

}  // namespace metabel
