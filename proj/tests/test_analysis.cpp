#include <doctest.h>

#include "metabel/analysis.hpp"
#include "metabel/errors.hpp"
#include "metabel/report_json.hpp"
#include "support.hpp"

using namespace metabel;
using testing_support::braid;

TEST_CASE("trefoil, n = 2") {
  const auto r = analyze(braid(testing_support::kTrefoil), "trefoil", 2);
  CHECK(r.h1Ln_divisors == std::vector<Integer>{3});
  CHECK(r.b1Ln == 0);
  REQUIRE(r.classes.size() == 1);
  const auto& c = r.classes[0];
  CHECK(c.ad.h1 == 1);
  CHECK(c.verdict == "simple_point");
  CHECK(c.orbit_size == 2);
  CHECK(c.delta0 == LaurentPoly(1));
  CHECK(c.tn_check);
  CHECK(c.lemma6_ok);
  CHECK(c.fixed_point_ok);
  CHECK(c.irreducible);
  CHECK(c.charpoly_ok);
  CHECK(c.image_i1_dim == 1);
  CHECK(c.lagrangian_ok == true);
  CHECK(c.omega_rank == 2);
  CHECK(c.homology_matches == true);
  CHECK(c.twist_identity_ok == true);
  CHECK(r.checks.fox_goeritz_ok);
  CHECK(r.checks.class_count_ok);
  CHECK(r.checks.euler_ok);
  CHECK(r.checks.cover_b1 == 3);
  CHECK(r.checks.cover_b1_ge_order == true);
  CHECK(r.checks.cover_bound_consistent == true);
}

TEST_CASE("figure-eight, n = 2: two smooth classes") {
  const auto r = analyze(braid(testing_support::kFigureEight), "figure-eight", 2);
  CHECK(r.h1Ln_divisors == std::vector<Integer>{5});
  REQUIRE(r.classes.size() == 2);
  for (const auto& c : r.classes) {
    CHECK(c.ad.h1 == 1);
    CHECK(c.verdict == "simple_point");
    CHECK(c.verdict_detail.find("2 metabelian classes") != std::string::npos);
  }
  CHECK(r.classes[0].character < r.classes[1].character);
}

TEST_CASE("unknot and n = 1 report no classes") {
  for (int n : {1, 2, 5}) {
    const auto r = analyze(braid(""), "unknot", n);
    CHECK(r.classes.empty());
    CHECK_FALSE(r.checks.note.empty());
    CHECK(r.checks.class_count_ok);
  }
  CHECK(analyze(braid(testing_support::kTrefoil), "trefoil", 1).classes.empty());
}

TEST_CASE("infinite character group is a structured input error") {
  try {
    analyze(braid(testing_support::kTrefoil), "trefoil", 6);
    FAIL("expected an error");
  } catch (const InfiniteCharacterGroup& e) {
    CHECK(e.b1 == 2);
    CHECK(e.n == 6);
    CHECK(std::string(e.what()).find("prime power") != std::string::npos);
  }
  CHECK_THROWS_AS(analyze(braid(testing_support::kTrefoil), "trefoil", 0), InputError);
}

TEST_CASE("fast checks omit the expensive fields") {
  AnalysisOptions fast;
  fast.all_checks = false;
  const auto r = analyze(braid(testing_support::kFigureEight), "figure-eight", 3, fast);
  CHECK_FALSE(r.checks.cover_b1.has_value());
  for (const auto& c : r.classes) {
    CHECK_FALSE(c.image_i1_dim.has_value());
    CHECK_FALSE(c.twist_identity_ok.has_value());
    CHECK(c.boundary_ad.has_value());
  }
  const auto full = analyze(braid(testing_support::kFigureEight), "figure-eight", 3);
  REQUIRE(full.classes.size() == r.classes.size());
  for (std::size_t q = 0; q < r.classes.size(); ++q) {
    CHECK(full.classes[q].ad == r.classes[q].ad);
    CHECK(full.classes[q].delta1 == r.classes[q].delta1);
  }
}

TEST_CASE("json: required fields, round trip, determinism") {
  const auto r = analyze(braid(testing_support::kThreeTwist), "5_2", 3);
  const auto j = to_json(r);
  for (const char* key : {"schema_version", "knot", "n", "h1Ln_divisors", "b1Ln", "classes", "checks"})
    CHECK(j.contains(key));
  REQUIRE(j.at("classes").size() == r.classes.size());
  for (const auto& c : j.at("classes"))
    for (const char* key : {"character", "orbit_size", "h1_ad", "verdict", "delta0", "delta1", "tn_check",
                            "lemma6_ok", "fixed_point_ok"})
      CHECK(c.contains(key));
  CHECK(report_from_json(j) == r);
  CHECK(report_from_json(nlohmann::json::parse(dump_report(r))) == r);
  CHECK(dump_report(analyze(braid(testing_support::kThreeTwist), "5_2", 3)) == dump_report(r));
}

TEST_CASE("json: polynomial encoding") {
  const LaurentPoly f = LaurentPoly::monomial(Cyclotomic::root_of_unity(4, 1), 2) + LaurentPoly(Cyclotomic(Rational(1, 2)));
  const auto j = poly_to_json(f);
  CHECK(j.contains("0"));
  CHECK(j.contains("2"));
  CHECK(j.at("2").at(1) == 4);
  CHECK(poly_from_json(j) == f);
  CHECK(poly_from_json(poly_to_json(LaurentPoly())) == LaurentPoly());
}

TEST_CASE("file and braid inputs agree") {
  const auto a = analyze(load_presentation_file(testing_support::data_path("trefoil.pres")), "t", 3);
  const auto b = analyze(braid(testing_support::kTrefoil), "t", 3);
  CHECK(a.h1Ln_divisors == b.h1Ln_divisors);
  REQUIRE(a.classes.size() == b.classes.size());
  for (std::size_t q = 0; q < a.classes.size(); ++q) {
    CHECK(a.classes[q].ad == b.classes[q].ad);
    CHECK(a.classes[q].delta1 == b.classes[q].delta1);
    CHECK(a.classes[q].verdict == b.classes[q].verdict);
  }
}

TEST_CASE("table output mentions every class") {
  const auto r = analyze(braid(testing_support::kFigureEight), "figure-eight", 2);
  const std::string t = format_table(r);
  CHECK(t.find("simple_point") != std::string::npos);
  CHECK(t.find("figure-eight") != std::string::npos);
}
