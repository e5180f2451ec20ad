#pragma once

#include <map>
#include <set>
#include <vector>

#include "metabel/laurent.hpp"
#include "metabel/representation.hpp"

namespace metabel {

// Element of the integral group ring Z[F] of the free group.
class GroupRingElement {
 public:
  GroupRingElement() = default;
  GroupRingElement(const Word& w, const Integer& c = 1) { add(w, c); }

  void add(const Word& w, const Integer& c);
  const std::map<Word, Integer>& terms() const { return terms_; }
  bool is_zero() const { return terms_.empty(); }
  // Augmentation: sum of coefficients.
  Integer augmentation() const;

  GroupRingElement& operator+=(const GroupRingElement& o);
  GroupRingElement& operator-=(const GroupRingElement& o);
  friend GroupRingElement operator+(GroupRingElement a, const GroupRingElement& b) { return a += b; }
  friend GroupRingElement operator-(GroupRingElement a, const GroupRingElement& b) { return a -= b; }
  friend GroupRingElement operator*(const GroupRingElement& a, const GroupRingElement& b);
  bool operator==(const GroupRingElement&) const = default;

 private:
  std::map<Word, Integer> terms_;
};

// d w / d x_gen, expanded symbolically.
GroupRingElement fox_derivative(const Word& w, int gen);

// Image of a group ring element under g -> t^{eps(g)} rho(g) (or rho(g) when
// eps is empty).
LaurentMatrix evaluate(const GroupRingElement& e, const Representation& rho, std::span<const int> eps);
CycloMatrix evaluate_plain(const GroupRingElement& e, const Representation& rho);

// All derivatives of one word at once by a single prefix sweep. Entry j is
// rho(d w / d x_j).
std::vector<CycloMatrix> fox_images(const Word& w, const Representation& rho);
// Entry j is rho(bar(d w / d x_j)) where bar sends g to g^{-1}.
std::vector<CycloMatrix> fox_images_involuted(const Word& w, const Representation& rho);
// Same as fox_images with the twist g -> t^{eps(g)} rho(g).
std::vector<LaurentMatrix> fox_images_twisted(const Word& w, const Representation& rho, std::span<const int> eps);

// Block Fox Jacobian: block (i, j) is rho(d r_i / d x_j).
CycloMatrix fox_jacobian(const GroupPresentation& p, const Representation& rho);
// Twisted Jacobian with the generator columns in `drop` removed.
LaurentMatrix twisted_jacobian(const GroupPresentation& p, const Representation& rho,
                               const std::set<int>& drop = {});

// Embeds a constant matrix into Laurent matrices.
LaurentMatrix to_laurent(const CycloMatrix& m);

}  // namespace metabel
