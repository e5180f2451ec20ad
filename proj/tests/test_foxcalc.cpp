#include <doctest.h>

#include "metabel/foxcalc.hpp"
#include "metabel/repbuild.hpp"
#include "support.hpp"

using namespace metabel;

namespace {

Word parse_word(std::initializer_list<std::pair<int, int>> letters) {
  std::vector<Letter> v;
  for (auto [g, e] : letters) v.push_back({g, e});
  return Word(v);
}

// w - 1 = sum_j (d w / d x_j)(x_j - 1) in Z[F]
GroupRingElement fundamental_rhs(const Word& w, int generators) {
  GroupRingElement sum;
  for (int j = 0; j < generators; ++j)
    sum += fox_derivative(w, j) * (GroupRingElement(Word::generator(j)) - GroupRingElement(Word()));
  return sum;
}

}  // namespace

TEST_CASE("fox_derivative: small words") {
  const Word xyX = parse_word({{0, 1}, {1, 1}, {0, -1}});
  // d/dx (x y X) = 1 - x y X
  GroupRingElement expect(Word(), 1);
  expect.add(xyX, -1);
  CHECK(fox_derivative(xyX, 0) == expect);
  CHECK(fox_derivative(xyX, 1) == GroupRingElement(Word::generator(0)));
  CHECK(fox_derivative(Word(), 0).is_zero());
  CHECK(fox_derivative(Word::generator(0, -1), 0) == GroupRingElement(Word::generator(0, -1), -1));
}

TEST_CASE("fox_derivative: fundamental identity on a relator") {
  const auto p = testing_support::braid(testing_support::kFigureEight);
  for (const auto& r : p.relators) {
    GroupRingElement lhs(r);
    lhs -= GroupRingElement(Word());
    CHECK(lhs == fundamental_rhs(r, p.generator_count));
  }
}

TEST_CASE("fox images agree with symbolic evaluation") {
  const auto p = testing_support::braid(testing_support::kTrefoil);
  const auto h = branched_homology(alexander_module(p), 2);
  const auto cls = irreducible_classes(h, 2);
  REQUIRE(cls.size() == 1);
  const auto alpha = build_metabelian(p, h, cls[0].representative, z_choice(2, true));
  const Word& r = p.relators[0];
  const auto fast = fox_images(r, alpha);
  const auto twisted = fox_images_twisted(r, alpha, p.eps);
  const auto involuted = fox_images_involuted(r, alpha);
  for (int j = 0; j < p.generator_count; ++j) {
    const GroupRingElement d = fox_derivative(r, j);
    CHECK(fast[j] == evaluate_plain(d, alpha));
    CHECK(twisted[j] == evaluate(d, alpha, p.eps));
    GroupRingElement bar;
    for (const auto& [w, c] : d.terms()) bar.add(w.inverse(), c);
    CHECK(involuted[j] == evaluate_plain(bar, alpha));
  }
}

TEST_CASE("jacobians: shapes and trivial representation") {
  const auto p = testing_support::braid(testing_support::kFigureEight);
  const auto triv = trivial_representation(p.generator_count, 2);
  const CycloMatrix J = fox_jacobian(p, triv);
  CHECK(J.rows() == 4);
  CHECK(J.cols() == 6);
  // under the trivial representation every Fox derivative is its exponent sum
  CHECK(rank(J) == 4);
  const LaurentMatrix T = twisted_jacobian(p, triv, {p.meridian});
  CHECK(T.rows() == 4);
  CHECK(T.cols() == 4);
}
