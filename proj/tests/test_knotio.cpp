#include <doctest.h>

#include "metabel/alexmod.hpp"
#include "metabel/errors.hpp"
#include "metabel/knotio.hpp"
#include "support.hpp"

using namespace metabel;
using testing_support::braid;

TEST_CASE("parse_braid: tokens, strands, writhe") {
  const BraidWord b = parse_braid("1 -2 +1 -2");
  CHECK(b.strands == 3);
  CHECK(b.letters.size() == 4);
  CHECK(b.writhe() == 0);
  CHECK(parse_braid("1 1 1").writhe() == 3);
  CHECK(parse_braid("1 1 1 2").strands == 3);
  CHECK_THROWS_AS(parse_braid("1 1 1", 4), InputError);
  CHECK(parse_braid("").strands == 1);
}

TEST_CASE("parse_braid: rejects bad input") {
  CHECK_THROWS_AS(parse_braid("1 x 2"), InputError);
  CHECK_THROWS_AS(parse_braid("1 0 1"), InputError);
  CHECK_THROWS_AS(parse_braid("1.5"), InputError);
  CHECK_THROWS_WITH_AS(parse_braid("1 1"), doctest::Contains("2 components"), InputError);
  CHECK_THROWS_AS(parse_braid("3", 3), InputError);
}

TEST_CASE("braid_to_presentation: shape and contracts") {
  const auto p = braid(testing_support::kFigureEight);
  CHECK(p.generator_count == 3);
  CHECK(p.relators.size() == 2);
  CHECK(p.meridian == 0);
  REQUIRE(p.longitude.has_value());
  CHECK(p.degree(*p.longitude) == 0);
  CHECK_NOTHROW(p.validate());
  const auto u = braid("");
  CHECK(u.generator_count == 1);
  CHECK(u.relators.empty());
}

TEST_CASE("braid_to_presentation: Alexander polynomials") {
  CHECK(alexander_polynomial(alexander_module(braid(testing_support::kTrefoil))) ==
        LaurentPoly::from_coefficients({1, -1, 1}));
  CHECK(alexander_polynomial(alexander_module(braid(testing_support::kFigureEight))) ==
        LaurentPoly::from_coefficients({1, -3, 1}));
  CHECK(alexander_polynomial(alexander_module(braid(testing_support::kThreeTwist))) ==
        LaurentPoly::from_coefficients({2, -3, 2}));
  // a stabilized trefoil, spelled with a cancelling pair
  CHECK(alexander_polynomial(alexander_module(braid("2 1 1 1 -2 2"))) == LaurentPoly::from_coefficients({1, -1, 1}));
}

TEST_CASE("parse_presentation: file format") {
  const auto p = load_presentation_file(testing_support::data_path("trefoil.pres"));
  CHECK(p.generator_count == 2);
  CHECK(p.names == std::vector<std::string>{"x", "y"});
  CHECK(p.relators.size() == 1);
  CHECK(p.relators[0].size() == 6);
  CHECK(p.longitude.has_value());
  CHECK(p.all_meridional());
  const auto again = parse_presentation(format_presentation(p));
  CHECK(again.relators == p.relators);
  CHECK(again.longitude == p.longitude);
}

TEST_CASE("parse_presentation: figure-eight file matches the braid") {
  const auto f = load_presentation_file(testing_support::data_path("figure_eight.pres"));
  const auto b = braid(testing_support::kFigureEight);
  CHECK(f.relators == b.relators);
  CHECK(f.longitude == b.longitude);
  CHECK(f.eps == b.eps);
}

TEST_CASE("parse_presentation: contract violations") {
  CHECK_THROWS_WITH_AS(parse_presentation("gens: x y\nmeridian: x\n"), doctest::Contains("deficiency"), InputError);
  CHECK_THROWS_WITH_AS(parse_presentation("gens: x y\nrel: x q\nmeridian: x\n"), doctest::Contains("unknown generator"),
                       InputError);
  CHECK_THROWS_WITH_AS(parse_presentation("gens: x y\nrel: x y x\nmeridian: x\n"), doctest::Contains("eps-degree"),
                       InputError);
  CHECK_THROWS_AS(parse_presentation("gens: x y\nrel: x Y\n"), InputError);
  CHECK_THROWS_AS(parse_presentation("gens: X\nmeridian: X\n"), InputError);
  CHECK_THROWS_AS(parse_presentation("gens: x\nmeridian: x\nbogus: 1\n"), InputError);
  CHECK_THROWS_AS(load_presentation_file("/nonexistent/file.pres"), InputError);
  CHECK_THROWS_AS(parse_presentation("gens: x y\nrel: x Y\nmeridian: x\nlongitude: x\n"), InputError);
}

TEST_CASE("word: free reduction and inverse") {
  const Word w({{0, 1}, {1, 1}, {1, -1}, {0, 1}});
  CHECK(w.size() == 2);
  CHECK((w * w.inverse()).empty());
  CHECK(Word::generator(2, -1).to_string({"a", "b", "c"}) == "C");
  const std::vector<int> eps{1, 1};
  CHECK(w.degree(eps) == 2);
}
