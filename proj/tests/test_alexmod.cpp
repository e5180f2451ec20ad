#include <doctest.h>

#include <algorithm>
#include <string>

#include "metabel/alexmod.hpp"
#include "metabel/errors.hpp"
#include "support.hpp"

using namespace metabel;
using testing_support::braid;

namespace {

std::vector<long> to_long(const std::vector<Integer>& v) {
  std::vector<long> out;
  for (const auto& x : v) out.push_back(x.get_si());
  return out;
}

IntMatrix power(const IntMatrix& m, int e) {
  IntMatrix r = IntMatrix::identity(m.rows());
  for (int i = 0; i < e; ++i) r = r * m;
  return r;
}

}  // namespace

TEST_CASE("branched homology matches the circulant oracle") {
  const auto g = testing_support::golden("branched_homology");
  const std::pair<const char*, const char*> knots[] = {{"trefoil", testing_support::kTrefoil},
                                                       {"figure_eight", testing_support::kFigureEight},
                                                       {"cinquefoil", testing_support::kCinquefoil}};
  for (auto [name, word] : knots) {
    const auto m = alexander_module(braid(word));
    for (int n : {2, 3, 5, 6}) {
      const std::string key = std::string(name) + "_n" + std::to_string(n);
      CAPTURE(key);
      const auto h = branched_homology(m, n);
      CHECK(to_long(h.divisors) == g.at(key).get<std::vector<long>>());
    }
  }
}

TEST_CASE("t-action: trefoil double cover") {
  const auto h = branched_homology(alexander_module(braid(testing_support::kTrefoil)), 2);
  REQUIRE(h.rank() == 1);
  CHECK(h.t_action(0, 0) == 2);
  CHECK(h.apply_t({1}) == std::vector<Integer>{2});
  CHECK(h.order() == 3);
  CHECK(h.is_finite());
  CHECK(b1_Ln(h) == 0);
}

TEST_CASE("t-action has order dividing n") {
  for (const char* word : {testing_support::kFigureEight, testing_support::kThreeTwist, testing_support::kCinquefoil}) {
    const auto m = alexander_module(braid(word));
    for (int n : {2, 3, 4, 5}) {
      const auto h = branched_homology(m, n);
      if (!h.is_finite()) continue;
      const IntMatrix tn = power(h.t_action, n);
      for (std::size_t j = 0; j < h.rank(); ++j) {
        std::vector<Integer> e(h.rank(), 0);
        e[j] = 1;
        std::vector<Integer> col(h.rank());
        for (std::size_t i = 0; i < h.rank(); ++i) col[i] = tn(i, j);
        CHECK(h.reduce(col) == e);
      }
    }
  }
}

TEST_CASE("coordinates: t shifts lifts") {
  const auto h = branched_homology(alexander_module(braid(testing_support::kFigureEight)), 3);
  REQUIRE(h.coord_map.size() == h.generators.size());
  CHECK(h.generators.size() == 2);
  CHECK(std::find(h.generators.begin(), h.generators.end(), h.meridian) == h.generators.end());
  for (std::size_t g = 0; g < h.coord_map.size(); ++g)
    for (int j = 0; j < h.n; ++j) CHECK(h.apply_t(h.coord_map[g][j]) == h.coord_map[g][(j + 1) % h.n]);
}

TEST_CASE("b1 of cyclic covers and orders") {
  const auto m = alexander_module(braid(testing_support::kTrefoil));
  CHECK(b1_Ln(branched_homology(m, 6)) == 2);
  CHECK_FALSE(branched_homology(m, 6).is_finite());
  CHECK(branched_homology(m, 5).order() == 1);
  CHECK(branched_homology(m, 1).rank() == 0);
}

TEST_CASE("Fox-Goeritz count agrees with |H_1(L_n)|") {
  for (const char* word : {testing_support::kTrefoil, testing_support::kFigureEight, testing_support::kThreeTwist,
                           testing_support::kCinquefoil}) {
    const auto m = alexander_module(braid(word));
    for (int n : {2, 3, 4, 5, 7}) {
      const auto h = branched_homology(m, n);
      if (!h.is_finite()) continue;
      CAPTURE(word);
      CAPTURE(n);
      CHECK(fox_goeritz_order(m, n) == Rational(h.order()));
    }
  }
}

TEST_CASE("unknot has trivial covers") {
  const auto m = alexander_module(braid(""));
  CHECK(alexander_polynomial(m) == LaurentPoly(1));
  for (int n : {2, 3, 7}) CHECK(branched_homology(m, n).rank() == 0);
}

TEST_CASE("alexander_module rejects non-knot presentations") {
  CHECK_THROWS_WITH_AS(alexander_module(parse_presentation("gens: x y\nrel: x y X y\nmeridian: x\neps: 1 0\n")),
                       doctest::Contains("not meridional"), InputError);
  CHECK_THROWS_WITH_AS(alexander_module(parse_presentation("gens: x y\nrel: x y X Y\nmeridian: x\n")),
                       doctest::Contains("det A(1)"), InputError);
  CHECK_THROWS_AS(branched_homology(alexander_module(braid(testing_support::kTrefoil)), 0), InputError);
}

TEST_CASE("file presentation agrees with braid presentation") {
  const auto a = alexander_module(load_presentation_file(testing_support::data_path("trefoil.pres")));
  const auto b = alexander_module(braid(testing_support::kTrefoil));
  CHECK(alexander_polynomial(a) == alexander_polynomial(b));
  for (int n : {2, 3, 4}) CHECK(branched_homology(a, n).divisors == branched_homology(b, n).divisors);
}
