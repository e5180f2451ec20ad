#include "metabel/foxcalc.hpp"

#include "metabel/errors.hpp"

namespace metabel {

void GroupRingElement::add(const Word& w, const Integer& c) {
  if (c == 0) return;
  auto [it, inserted] = terms_.try_emplace(w, c);
  if (!inserted) {
    it->second += c;
    if (it->second == 0) terms_.erase(it);
  }
}

Integer GroupRingElement::augmentation() const {
  Integer s = 0;
  for (const auto& [w, c] : terms_) s += c;
  return s;
}

GroupRingElement& GroupRingElement::operator+=(const GroupRingElement& o) {
  for (const auto& [w, c] : o.terms_) add(w, c);
  return *this;
}

GroupRingElement& GroupRingElement::operator-=(const GroupRingElement& o) {
  for (const auto& [w, c] : o.terms_) add(w, -c);
  return *this;
}

GroupRingElement operator*(const GroupRingElement& a, const GroupRingElement& b) {
  GroupRingElement out;
  for (const auto& [u, c] : a.terms_)
    for (const auto& [v, d] : b.terms_) out.add(u * v, c * d);
  return out;
}

GroupRingElement fox_derivative(const Word& w, int gen) {
  GroupRingElement out;
  Word prefix;
  for (const Letter& l : w.letters()) {
    if (l.gen == gen) {
      if (l.exp > 0)
        out.add(prefix, 1);
      else
        out.add(prefix * Word::generator(gen, -1), -1);
    }
    prefix *= Word({l});
  }
  return out;
}

LaurentMatrix to_laurent(const CycloMatrix& m) {
  LaurentMatrix out(m.rows(), m.cols());
  for (std::size_t r = 0; r < m.rows(); ++r)
    for (std::size_t c = 0; c < m.cols(); ++c)
      if (!m(r, c).is_zero()) out(r, c) = LaurentPoly(m(r, c));
  return out;
}

namespace {

// Adds t^deg * m into a Laurent matrix.
void accumulate(LaurentMatrix& acc, const CycloMatrix& m, long deg, int sign) {
  for (std::size_t r = 0; r < m.rows(); ++r)
    for (std::size_t c = 0; c < m.cols(); ++c)
      if (!m(r, c).is_zero())
        acc(r, c) += LaurentPoly::monomial(sign > 0 ? m(r, c) : -m(r, c), static_cast<int>(deg));
}

}  // namespace

LaurentMatrix evaluate(const GroupRingElement& e, const Representation& rho, std::span<const int> eps) {
  LaurentMatrix acc(rho.dim(), rho.dim());
  for (const auto& [w, c] : e.terms()) {
    CycloMatrix m = rho.evaluate(w);
    m *= Cyclotomic(Rational(c));
    accumulate(acc, m, eps.empty() ? 0 : w.degree(eps), 1);
  }
  return acc;
}

CycloMatrix evaluate_plain(const GroupRingElement& e, const Representation& rho) {
  CycloMatrix acc(rho.dim(), rho.dim());
  for (const auto& [w, c] : e.terms()) {
    CycloMatrix m = rho.evaluate(w);
    m *= Cyclotomic(Rational(c));
    acc += m;
  }
  return unify_level(acc);
}

std::vector<CycloMatrix> fox_images(const Word& w, const Representation& rho) {
  const std::size_t d = rho.dim();
  std::vector<CycloMatrix> out(rho.generator_count(), CycloMatrix(d, d));
  CycloMatrix prefix = CycloMatrix::identity(d);
  for (const Letter& l : w.letters()) {
    if (l.exp > 0) {
      out[l.gen] += prefix;
      prefix = prefix * rho.image(l.gen);
    } else {
      prefix = prefix * rho.image_inverse(l.gen);
      out[l.gen] -= prefix;
    }
  }
  for (auto& m : out) m = unify_level(std::move(m));
  return out;
}

std::vector<CycloMatrix> fox_images_involuted(const Word& w, const Representation& rho) {
  const std::size_t d = rho.dim();
  std::vector<CycloMatrix> out(rho.generator_count(), CycloMatrix(d, d));
  // rho(prefix^{-1}) grows on the left
  CycloMatrix inv_prefix = CycloMatrix::identity(d);
  for (const Letter& l : w.letters()) {
    if (l.exp > 0) {
      out[l.gen] += inv_prefix;
      inv_prefix = rho.image_inverse(l.gen) * inv_prefix;
    } else {
      inv_prefix = rho.image(l.gen) * inv_prefix;
      out[l.gen] -= inv_prefix;
    }
  }
  for (auto& m : out) m = unify_level(std::move(m));
  return out;
}

std::vector<LaurentMatrix> fox_images_twisted(const Word& w, const Representation& rho, std::span<const int> eps) {
  const std::size_t d = rho.dim();
  std::vector<LaurentMatrix> out(rho.generator_count(), LaurentMatrix(d, d));
  CycloMatrix prefix = CycloMatrix::identity(d);
  long deg = 0;
  for (const Letter& l : w.letters()) {
    if (l.exp > 0) {
      accumulate(out[l.gen], prefix, deg, 1);
      prefix = prefix * rho.image(l.gen);
      deg += eps[l.gen];
    } else {
      prefix = prefix * rho.image_inverse(l.gen);
      deg -= eps[l.gen];
      accumulate(out[l.gen], prefix, deg, -1);
    }
  }
  return out;
}

CycloMatrix fox_jacobian(const GroupPresentation& p, const Representation& rho) {
  if (static_cast<int>(rho.generator_count()) != p.generator_count)
    throw InvariantViolation("representation and presentation disagree on generator count");
  const std::size_t d = rho.dim();
  const std::size_t rows = p.relators.size();
  CycloMatrix J(rows * d, p.generator_count * d);
  std::vector<std::vector<CycloMatrix>> blocks(rows);
#pragma omp parallel for schedule(dynamic, 1)
  for (std::size_t i = 0; i < rows; ++i) blocks[i] = fox_images(p.relators[i], rho);
  for (std::size_t i = 0; i < rows; ++i)
    for (int j = 0; j < p.generator_count; ++j) J.set_block(i * d, j * d, blocks[i][j]);
  return unify_level(J);
}

LaurentMatrix twisted_jacobian(const GroupPresentation& p, const Representation& rho, const std::set<int>& drop) {
  if (static_cast<int>(rho.generator_count()) != p.generator_count)
    throw InvariantViolation("representation and presentation disagree on generator count");
  const std::size_t d = rho.dim();
  const std::size_t rows = p.relators.size();
  std::vector<int> kept;
  for (int j = 0; j < p.generator_count; ++j)
    if (!drop.count(j)) kept.push_back(j);
  LaurentMatrix J(rows * d, kept.size() * d);
  std::vector<std::vector<LaurentMatrix>> blocks(rows);
#pragma omp parallel for schedule(dynamic, 1)
  for (std::size_t i = 0; i < rows; ++i) blocks[i] = fox_images_twisted(p.relators[i], rho, p.eps);
  for (std::size_t i = 0; i < rows; ++i)
    for (std::size_t jj = 0; jj < kept.size(); ++jj) J.set_block(i * d, jj * d, blocks[i][kept[jj]]);
  return J;
}

}  // namespace metabel
