#include "metabel/alexmod.hpp"

#include "metabel/errors.hpp"
#include "metabel/foxcalc.hpp"

namespace metabel {

namespace {

Integer mod_positive(const Integer& a, const Integer& d) {
  if (d == 0) return a;
  Integer r = a % d;
  if (r < 0) r += abs(d);
  return r;
}

Integer as_integer(const Cyclotomic& c) {
  if (!c.is_rational() || c.constant_term().get_den() != 1)
    throw InvariantViolation("Alexander matrix entry is not integral");
  return c.constant_term().get_num();
}

}  // namespace

std::vector<Integer> BranchedCoverHomology::reduce(std::vector<Integer> h) const {
  for (std::size_t k = 0; k < h.size(); ++k) h[k] = mod_positive(h[k], divisors[k]);
  return h;
}

std::vector<Integer> BranchedCoverHomology::apply_t(const std::vector<Integer>& h) const {
  std::vector<Integer> out(rank(), 0);
  for (std::size_t r = 0; r < rank(); ++r)
    for (std::size_t c = 0; c < rank(); ++c) out[r] += t_action(r, c) * h[c];
  return reduce(std::move(out));
}

bool BranchedCoverHomology::is_finite() const {
  for (const auto& d : divisors)
    if (d == 0) return false;
  return true;
}

Integer BranchedCoverHomology::order() const {
  Integer o = 1;
  for (const auto& d : divisors) o *= d;
  return o;
}

AlexanderModule alexander_module(const GroupPresentation& p) {
  for (int g = 0; g < p.generator_count; ++g)
    if (p.eps[g] != 1)
      throw InputError("generator " + p.names.at(g) + " is not meridional (eps = " + std::to_string(p.eps[g]) +
                       "); the Alexander module needs a meridional presentation");
  AlexanderModule m;
  m.meridian = p.meridian;
  m.presentation_generators = p.generator_count;
  for (int g = 0; g < p.generator_count; ++g)
    if (g != p.meridian) m.generators.push_back(g);
  m.matrix = twisted_jacobian(p, trivial_representation(p.generator_count), {p.meridian});

  IntMatrix at_one(m.matrix.rows(), m.matrix.cols());
  for (std::size_t r = 0; r < at_one.rows(); ++r)
    for (std::size_t c = 0; c < at_one.cols(); ++c) at_one(r, c) = as_integer(m.matrix(r, c).evaluate(1));
  Integer det = 1;
  for (const auto& d : snf(at_one).divisors) det *= d;
  if (abs(det) != 1)
    throw InputError("presentation is not a knot exterior in a homology sphere: |det A(1)| = " +
                     Integer(abs(det)).get_str());
  return m;
}

BranchedCoverHomology branched_homology(const AlexanderModule& m, int n) {
  if (n < 1) throw InputError("cover degree n must be at least 1");
  const std::size_t K = m.generators.size();
  const std::size_t N = K * static_cast<std::size_t>(n);
  BranchedCoverHomology h;
  h.n = n;
  h.generators = m.generators;
  h.meridian = m.meridian;

  // Generator (i, j) = t^j a_i with index i*n + j. The Fox matrix lets t act by
  // conjugation with mu; H uses the opposite direction, so exponents flip sign.
  IntMatrix R(N, N);
  for (std::size_t r = 0; r < m.matrix.rows(); ++r)
    for (std::size_t i = 0; i < K; ++i)
      for (const auto& [e, c] : m.matrix(r, i).terms()) {
        const Integer coeff = as_integer(c);
        for (int s = 0; s < n; ++s) {
          const int j = ((s - e) % n + n) % n;
          R(r * n + s, i * n + j) += coeff;
        }
      }

  const SmithDecomposition sd = snf(R);
  std::vector<std::size_t> kept;
  for (std::size_t k = 0; k < N; ++k)
    if (abs(sd.divisors[k]) != 1) {
      kept.push_back(k);
      h.divisors.push_back(abs(sd.divisors[k]));
    }
  const std::size_t M = kept.size();

  auto to_coords = [&](const std::vector<Integer>& v) {
    std::vector<Integer> out(M, 0);
    for (std::size_t k = 0; k < M; ++k) {
      Integer s = 0;
      for (std::size_t q = 0; q < N; ++q)
        if (v[q] != 0) s += v[q] * sd.V(q, kept[k]);
      out[k] = s;
    }
    return h.reduce(std::move(out));
  };

  h.coord_map.assign(K, std::vector<std::vector<Integer>>(n));
  for (std::size_t i = 0; i < K; ++i)
    for (int j = 0; j < n; ++j) {
      std::vector<Integer> e(N, 0);
      e[i * n + j] = 1;
      h.coord_map[i][j] = to_coords(e);
    }

  h.t_action = IntMatrix(M, M);
  for (std::size_t k = 0; k < M; ++k) {
    std::vector<Integer> shifted(N, 0);
    for (std::size_t i = 0; i < K; ++i)
      for (int j = 0; j < n; ++j) shifted[i * n + (j + 1) % n] = sd.V_inv(kept[k], i * n + j);
    const auto col = to_coords(shifted);
    for (std::size_t r = 0; r < M; ++r) h.t_action(r, k) = col[r];
  }

  for (std::size_t i = 0; i < K; ++i)
    for (int j = 0; j < n; ++j)
      if (h.apply_t(h.coord_map[i][j]) != h.coord_map[i][(j + 1) % n])
        throw InvariantViolation("t-action on H_1(L_n) disagrees with the generator coordinates");
  return h;
}

int b1_Ln(const BranchedCoverHomology& h) {
  int zeros = 0;
  for (const auto& d : h.divisors)
    if (d == 0) ++zeros;
  return zeros;
}

LaurentPoly alexander_polynomial(const AlexanderModule& m) {
  if (m.matrix.rows() == 0) return LaurentPoly(1);
  LaurentPoly d = laurent_det(m.matrix);
  if (d.is_zero()) return d;
  d = d.shifted(-d.min_exp());
  if (d.leading().constant_term() < 0) d = -d;
  return d;
}

Rational fox_goeritz_order(const AlexanderModule& m, int n) {
  const LaurentPoly delta = alexander_polynomial(m);
  Cyclotomic prod(1);
  for (int j = 0; j < n; ++j) prod *= delta.evaluate(Cyclotomic::root_of_unity(n, j));
  if (!prod.is_rational()) throw InvariantViolation("Fox-Goeritz product is not rational");
  return abs(prod.constant_term());
}

}  // namespace metabel
