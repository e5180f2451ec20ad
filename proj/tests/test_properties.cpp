#include <doctest.h>

#include "metabel/alexmod.hpp"
#include "metabel/analysis.hpp"
#include "metabel/charenum.hpp"
#include "property_suites.hpp"
#include "support.hpp"

using namespace metabel;
using namespace testing_support;

namespace {

const char* const kKnots[] = {kTrefoil, kFigureEight, kThreeTwist, kCinquefoil};

void require_suite(const SuiteResult& r) {
  INFO(r.first_failure);
  CHECK(r.cases > 0);
  CHECK(r.failures == 0);
}

}  // namespace

TEST_CASE("fox fundamental identity on random words") {
  std::mt19937 rng(20261016);
  for (const char* k : kKnots) require_suite(fox_identity_suite(braid(k), 100, rng));
  require_suite(fox_identity_suite(load_presentation_file(data_path("trefoil.pres")), 100, rng));
}

TEST_CASE("smith normal form reconstruction on random matrices") {
  std::mt19937 rng(7);
  require_suite(snf_suite(200, rng));
}

TEST_CASE("cyclotomic field axioms up to level 60") {
  std::mt19937 rng(11);
  require_suite(cyclotomic_suite(60, 2, rng));
}

TEST_CASE("schur, duality and euler on enumerated classes") {
  for (auto [word, n] : {std::pair{kTrefoil, 2}, std::pair{kFigureEight, 2}, std::pair{kTrefoil, 3},
                         std::pair{kFigureEight, 3}, std::pair{kThreeTwist, 3}}) {
    CAPTURE(word);
    CAPTURE(n);
    const auto p = braid(word);
    const auto h = branched_homology(alexander_module(p), n);
    std::vector<Representation> alphas, unitarizable;
    for (const auto& o : irreducible_classes(h, n)) {
      const auto a = build_metabelian(p, h, o.representative, z_choice(n, true));
      alphas.push_back(a);
      unitarizable.push_back(a);
      unitarizable.push_back(adjoint(a));
      unitarizable.push_back(build_metabelian(p, h, o.representative, Cyclotomic(1)));
    }
    require_suite(schur_suite(alphas, true));
    require_suite(duality_suite(p, unitarizable));
  }
}

TEST_CASE("parallel kernels reproduce the serial reference") {
  std::mt19937 rng(3);
  for (long level : {1L, 4L, 9L}) {
    CycloMatrix m(9, 11);
    for (std::size_t r = 0; r < m.rows(); ++r)
      for (std::size_t c = 0; c < m.cols(); ++c) m(r, c) = random_cyclotomic(level, rng);
    for (std::size_t c = 0; c < m.cols(); ++c) m(8, c) = m(0, c) + m(1, c);
    const auto s = row_reduce(m, Exec::serial), q = row_reduce(m, Exec::parallel);
    CHECK(s.reduced == q.reduced);
    CHECK(s.pivot_cols == q.pivot_cols);
  }
  for (const char* k : {kFigureEight, kThreeTwist}) {
    AnalysisOptions serial, parallel;
    serial.exec = Exec::serial;
    CHECK(analyze(braid(k), k, 3, serial) == analyze(braid(k), k, 3, parallel));
  }
}
