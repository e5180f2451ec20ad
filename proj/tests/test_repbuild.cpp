#include <doctest.h>

#include "metabel/alexmod.hpp"
#include "metabel/analysis.hpp"
#include "metabel/charenum.hpp"
#include "metabel/cohomology.hpp"
#include "metabel/errors.hpp"
#include "metabel/repbuild.hpp"
#include "support.hpp"

using namespace metabel;
using testing_support::braid;

namespace {

struct Fixture {
  GroupPresentation p;
  BranchedCoverHomology h;
  std::vector<CharacterOrbit> classes;
  Fixture(const char* word, int n)
      : p(braid(word)), h(branched_homology(alexander_module(p), n)), classes(irreducible_classes(h, n)) {}
  Representation alpha(std::size_t q) const { return build_metabelian(p, h, classes.at(q).representative, z_choice(h.n, true)); }
};

CycloMatrix conjugate(const CycloMatrix& g, const CycloMatrix& x) { return g * x * inverse(g); }

}  // namespace

TEST_CASE("z_choice and cyclic_matrix") {
  CHECK(z_choice(2, true) == Cyclotomic::root_of_unity(4, 1));
  CHECK(z_choice(3, true) == Cyclotomic(1));
  CHECK(z_choice(4, false) == Cyclotomic(1));
  const CycloMatrix Z = cyclic_matrix(3, Cyclotomic(1));
  CHECK(Z(0, 2) == Cyclotomic(1));
  CHECK(Z(1, 0) == Cyclotomic(1));
  CHECK(Z(2, 1) == Cyclotomic(1));
  CHECK(Z * Z * Z == CycloMatrix::identity(3));
  for (int n : {2, 3, 4, 5}) CHECK(determinant(cyclic_matrix(n, z_choice(n, true))).is_one());
}

TEST_CASE("trefoil dihedral alpha: meridian image") {
  const Fixture f(testing_support::kTrefoil, 2);
  REQUIRE(f.classes.size() == 1);
  const auto a = f.alpha(0);
  const Cyclotomic i = Cyclotomic::root_of_unity(4, 1);
  CycloMatrix expect(2, 2);
  expect(0, 1) = i;
  expect(1, 0) = i;
  CHECK(a.image(f.p.meridian) == expect);
  CHECK(a.det_one());
  CHECK(a.evaluate(*f.p.longitude) == CycloMatrix::identity(2));
  for (std::size_t g = 0; g < a.generator_count(); ++g) CHECK(determinant(a.image(g)).is_one());
  CHECK(characteristic_polynomial(a.image(f.p.meridian)) == LaurentPoly::from_coefficients({1, 0, 1}));
}

TEST_CASE("build_metabelian rejects a bad z") {
  const Fixture f(testing_support::kTrefoil, 2);
  CHECK_THROWS_AS(build_metabelian(f.p, f.h, f.classes[0].representative, Cyclotomic::root_of_unity(3, 1)),
                  InputError);
}

TEST_CASE("sl basis coordinates round trip and trace form") {
  for (int n : {2, 3, 4}) {
    const auto basis = sl_basis(n);
    REQUIRE(basis.size() == static_cast<std::size_t>(n * n - 1));
    for (std::size_t q = 0; q < basis.size(); ++q) {
      CHECK(trace(basis[q]).is_zero());
      const CycloVector c = sl_coordinates(basis[q]);
      for (std::size_t r = 0; r < c.size(); ++r) CHECK(c[r] == Cyclotomic(r == q ? 1 : 0));
      CHECK(sl_matrix(c, n) == basis[q]);
    }
    CHECK(determinant(trace_form_gram(n)) != Cyclotomic(0));
  }
}

TEST_CASE("adjoint is conjugation and preserves the trace form") {
  const Fixture f(testing_support::kFigureEight, 3);
  const auto a = f.alpha(0);
  const auto ad = adjoint(a);
  CHECK(ad.dim() == 8);
  const CycloMatrix G = trace_form_gram(3);
  const auto basis = sl_basis(3);
  for (std::size_t g = 0; g < a.generator_count(); ++g) {
    const CycloMatrix& A = ad.image(g);
    CHECK(A.transpose() * G * A == G);
    for (const auto& x : basis) CHECK(metabel::apply(A, sl_coordinates(x)) == sl_coordinates(conjugate(a.image(g), x)));
  }
}

TEST_CASE("regular representation") {
  const auto p = braid(testing_support::kTrefoil);
  const auto r = regular_rep(p, 3);
  CHECK(r.dim() == 3);
  CHECK(r.evaluate(*p.longitude) == CycloMatrix::identity(3));
  CHECK_FALSE(is_irreducible(r));
  // the trivial summand contributes 1, and t -> -1, t -> zeta_6^{+-1} add one each
  CHECK(h1_dim(p, regular_rep(p, 2)).h1 == 1);
  CHECK(h1_dim(p, regular_rep(p, 6)).h1 == 3);
}

TEST_CASE("difference characters are differences of orbit members") {
  const Fixture f(testing_support::kFigureEight, 3);
  for (const auto& o : f.classes) {
    const auto diff = difference_characters(o.representative, f.h, 3);
    CHECK(diff.orders_ok);
    REQUIRE(diff.characters.size() == 2);
    for (int i = 1; i < 3; ++i)
      for (std::size_t g = 0; g < f.h.rank(); ++g) {
        std::vector<Integer> e(f.h.rank(), 0);
        e[g] = 1;
        CHECK(diff.characters[i - 1].value(e) * o.members[0].value(e) == o.members[i].value(e));
      }
  }
}

TEST_CASE("twist and intertwiners: fixed point of the twist action") {
  for (auto [word, n] : {std::pair{testing_support::kTrefoil, 2}, std::pair{testing_support::kFigureEight, 3}}) {
    const Fixture f(word, n);
    for (std::size_t q = 0; q < f.classes.size(); ++q) {
      const auto a = f.alpha(q);
      const auto tw = twist(f.p, a, Cyclotomic::root_of_unity(n, 1));
      CHECK(tw.image(f.p.meridian) == Cyclotomic::root_of_unity(n, 1) * a.image(f.p.meridian));
      const auto it = intertwiners(a, tw);
      REQUIRE(it.dimension == 1);
      for (std::size_t g = 0; g < a.generator_count(); ++g)
        CHECK(it.basis[0] * a.image(g) == tw.image(g) * it.basis[0]);
      CHECK(proportional(it.basis[0], twist_conjugator(n)));
    }
  }
}

TEST_CASE("distinct classes are not equivalent") {
  const Fixture f(testing_support::kFigureEight, 2);
  REQUIRE(f.classes.size() == 2);
  CHECK(intertwiners(f.alpha(0), f.alpha(1)).dimension == 0);
  CHECK(intertwiners(f.alpha(0), f.alpha(0)).dimension == 1);
  CHECK(is_irreducible(f.alpha(0)));
  CHECK(is_irreducible(f.alpha(1)));
  CHECK_FALSE(is_irreducible(direct_sum(f.alpha(0), f.alpha(1))));
  CHECK_FALSE(is_irreducible(trivial_representation(f.p.generator_count, 2)));
}

TEST_CASE("proportional") {
  CycloMatrix a = CycloMatrix::identity(2);
  CHECK(proportional(a, a * Cyclotomic::root_of_unity(5, 2)));
  CycloMatrix b = a;
  b(1, 1) = 2;
  CHECK_FALSE(proportional(a, b));
  CHECK_FALSE(proportional(a, CycloMatrix(2, 2)));
}
