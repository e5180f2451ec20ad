#include "metabel/representation.hpp"

#include <numeric>

#include "metabel/errors.hpp"

namespace metabel {

Representation::Representation(std::vector<CycloMatrix> images, bool det_one, std::optional<Provenance> provenance)
    : images_(std::move(images)), det_one_(det_one), provenance_(std::move(provenance)) {
  long level = 1;
  for (const auto& m : images_) {
    if (m.rows() != m.cols()) throw InvariantViolation("representation images must be square");
    level = std::lcm(level, max_level(m));
  }
  dim_ = images_.empty() ? 0 : images_.front().rows();
  for (auto& m : images_) {
    if (m.rows() != dim_) throw InvariantViolation("representation images differ in dimension");
    for (std::size_t r = 0; r < m.rows(); ++r)
      for (std::size_t c = 0; c < m.cols(); ++c) m(r, c) = m(r, c).promote(level);
  }
  inverses_.reserve(images_.size());
  for (const auto& m : images_) {
    try {
      inverses_.push_back(unify_level(inverse(m)));
    } catch (const std::domain_error&) {
      throw InvariantViolation("representation image is not invertible");
    }
    if (det_one_ && !determinant(m).is_one()) throw InvariantViolation("image does not have determinant 1");
  }
}

Representation Representation::on(const GroupPresentation& p, std::vector<CycloMatrix> images, bool det_one,
                                  std::optional<Provenance> provenance) {
  if (static_cast<int>(images.size()) != p.generator_count)
    throw InvariantViolation("representation must assign a matrix to every generator");
  Representation rho(std::move(images), det_one, std::move(provenance));
  rho.verify_relators(p);
  return rho;
}

CycloMatrix Representation::evaluate(const Word& w) const {
  CycloMatrix out = CycloMatrix::identity(dim_);
  for (const Letter& l : w.letters()) {
    if (l.gen < 0 || static_cast<std::size_t>(l.gen) >= images_.size())
      throw InvariantViolation("word uses a generator outside the representation");
    out = out * (l.exp > 0 ? images_[l.gen] : inverses_[l.gen]);
  }
  return out;
}

void Representation::verify_relators(const GroupPresentation& p) const {
  const CycloMatrix id = CycloMatrix::identity(dim_);
  for (std::size_t i = 0; i < p.relators.size(); ++i)
    if (evaluate(p.relators[i]) != id)
      throw InvariantViolation("relator " + std::to_string(i + 1) + " does not map to the identity");
}

Representation trivial_representation(int generator_count, std::size_t dim) {
  return Representation(std::vector<CycloMatrix>(generator_count, CycloMatrix::identity(dim)), true);
}

Representation direct_sum(const Representation& a, const Representation& b) {
  std::vector<CycloMatrix> images;
  for (std::size_t g = 0; g < a.generator_count(); ++g)
    images.push_back(direct_sum(a.image(static_cast<int>(g)), b.image(static_cast<int>(g))));
  return Representation(std::move(images), a.det_one() && b.det_one());
}

}  // namespace metabel
