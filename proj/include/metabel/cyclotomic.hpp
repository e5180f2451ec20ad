#pragma once

#include <gmpxx.h>

#include <iosfwd>
#include <string>
#include <vector>

namespace metabel {

using Integer = mpz_class;
using Rational = mpq_class;

long euler_phi(long n);
long lcm_level(long a, long b);

// Data for the field Q(zeta_N): N, phi(N) and the coefficients of the
// cyclotomic polynomial Phi_N (ascending, monic). Instances are interned and
// never freed, so pointers to them stay valid for the life of the program.
struct CycloField {
  long level;
  long degree;
  std::vector<Integer> modulus;
};

const CycloField& cyclo_field(long level);

// Exact element of Q(zeta_N), stored as a residue modulo Phi_N.
//
// Binary operations on numbers of different levels first promote both
// operands to the lcm of the levels. Promotion is injective, so two numbers
// are equal iff their coefficient vectors agree after promotion.
class Cyclotomic {
 public:
  Cyclotomic();
  Cyclotomic(long value);  // NOLINT: integers embed implicitly
  explicit Cyclotomic(const Rational& value);
  Cyclotomic(long level, std::vector<Rational> coefficients);

  static Cyclotomic root_of_unity(long level, long k);

  long level() const { return field_->level; }
  const std::vector<Rational>& coefficients() const { return coeffs_; }

  bool is_zero() const;
  bool is_one() const;
  // True when the value lies in Q (only the constant coefficient is nonzero).
  bool is_rational() const;
  const Rational& constant_term() const { return coeffs_[0]; }
  // Number of nonzero coefficients; used to prefer simple pivots.
  int weight() const;

  Cyclotomic promote(long new_level) const;
  Cyclotomic inverse() const;
  // Complex conjugation zeta -> zeta^{-1}.
  Cyclotomic conj() const;
  Cyclotomic pow(long e) const;

  Cyclotomic operator-() const;
  Cyclotomic& operator+=(const Cyclotomic& o);
  Cyclotomic& operator-=(const Cyclotomic& o);
  Cyclotomic& operator*=(const Cyclotomic& o);
  Cyclotomic& operator/=(const Cyclotomic& o);

  friend Cyclotomic operator+(Cyclotomic a, const Cyclotomic& b) { return a += b; }
  friend Cyclotomic operator-(Cyclotomic a, const Cyclotomic& b) { return a -= b; }
  friend Cyclotomic operator*(Cyclotomic a, const Cyclotomic& b) { return a *= b; }
  friend Cyclotomic operator/(Cyclotomic a, const Cyclotomic& b) { return a /= b; }
  friend bool operator==(const Cyclotomic& a, const Cyclotomic& b);
  friend bool operator!=(const Cyclotomic& a, const Cyclotomic& b) { return !(a == b); }

  std::string to_string() const;

 private:
  Cyclotomic(const CycloField* field, std::vector<Rational> coeffs)
      : field_(field), coeffs_(std::move(coeffs)) {}
  void align_with(Cyclotomic& other);
  Cyclotomic promote_rational_to(long new_level) const;

  const CycloField* field_;
  std::vector<Rational> coeffs_;
};

std::ostream& operator<<(std::ostream& os, const Cyclotomic& x);

}  // namespace metabel
