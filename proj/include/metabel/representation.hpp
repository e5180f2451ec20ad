#pragma once

#include <optional>
#include <vector>

#include "metabel/linalg.hpp"
#include "metabel/word.hpp"

namespace metabel {

// Where a metabelian representation came from: alpha_(n, chi, z).
struct Provenance {
  int n = 0;
  std::vector<long> divisors;
  std::vector<long> exponents;
  Cyclotomic z;
};

// Generator-indexed matrices over Q(zeta). All images share one cyclotomic
// level and their inverses are cached at construction.
class Representation {
 public:
  Representation() = default;
  explicit Representation(std::vector<CycloMatrix> images, bool det_one = false,
                          std::optional<Provenance> provenance = std::nullopt);

  // Builds and checks that every relator maps to the identity.
  // Throws InvariantViolation otherwise.
  static Representation on(const GroupPresentation& p, std::vector<CycloMatrix> images, bool det_one = false,
                           std::optional<Provenance> provenance = std::nullopt);

  std::size_t dim() const { return dim_; }
  std::size_t generator_count() const { return images_.size(); }
  const CycloMatrix& image(int gen) const { return images_.at(gen); }
  const CycloMatrix& image_inverse(int gen) const { return inverses_.at(gen); }
  const std::vector<CycloMatrix>& images() const { return images_; }
  bool det_one() const { return det_one_; }
  const std::optional<Provenance>& provenance() const { return provenance_; }

  CycloMatrix evaluate(const Word& w) const;
  CycloMatrix letter_image(const Letter& l) const { return l.exp > 0 ? images_[l.gen] : inverses_[l.gen]; }

  void verify_relators(const GroupPresentation& p) const;

 private:
  std::size_t dim_ = 0;
  std::vector<CycloMatrix> images_;
  std::vector<CycloMatrix> inverses_;
  bool det_one_ = false;
  std::optional<Provenance> provenance_;
};

Representation trivial_representation(int generator_count, std::size_t dim = 1);
Representation direct_sum(const Representation& a, const Representation& b);

}  // namespace metabel
