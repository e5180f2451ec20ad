#include <doctest.h>

#include <set>

#include "metabel/alexmod.hpp"
#include "metabel/charenum.hpp"
#include "metabel/errors.hpp"
#include "support.hpp"

using namespace metabel;
using testing_support::braid;

namespace {

BranchedCoverHomology cover(const char* word, int n) { return branched_homology(alexander_module(braid(word)), n); }

}  // namespace

TEST_CASE("all_characters enumerates the dual group") {
  CHECK(all_characters(cover(testing_support::kTrefoil, 2)).size() == 3);
  CHECK(all_characters(cover(testing_support::kTrefoil, 3)).size() == 4);
  CHECK(all_characters(cover(testing_support::kFigureEight, 3)).size() == 16);
  CHECK(all_characters(cover(testing_support::kTrefoil, 5)).size() == 1);
  CHECK(all_characters(cover(testing_support::kTrefoil, 5))[0].is_trivial());
  CHECK_THROWS_AS(all_characters(cover(testing_support::kTrefoil, 6)), InfiniteCharacterGroup);
}

TEST_CASE("character values are roots of unity of the right level") {
  const auto h = cover(testing_support::kFigureEight, 3);
  for (const auto& chi : all_characters(h)) {
    CHECK(chi.divisors == torsion_divisors(h));
    for (std::size_t i = 0; i < h.rank(); ++i) {
      std::vector<Integer> e(h.rank(), 0);
      e[i] = 1;
      CHECK(chi.value(e).pow(chi.level()).is_one());
    }
  }
}

TEST_CASE("t_act is compatible with evaluation") {
  const auto h = cover(testing_support::kThreeTwist, 3);
  for (const auto& chi : all_characters(h)) {
    const Character tchi = t_act(chi, h);
    for (std::size_t i = 0; i < h.rank(); ++i) {
      std::vector<Integer> e(h.rank(), 0);
      e[i] = 1;
      CHECK(tchi.value(e) == chi.value(h.apply_t(e)));
    }
  }
}

TEST_CASE("order_of: trivial has order 1, others order n for prime n") {
  const auto h = cover(testing_support::kFigureEight, 3);
  for (const auto& chi : all_characters(h)) CHECK(order_of(chi, h) == (chi.is_trivial() ? 1 : 3));
  const auto h2 = cover(testing_support::kFigureEight, 2);
  for (const auto& chi : all_characters(h2)) CHECK(order_of(chi, h2) == (chi.is_trivial() ? 1 : 2));
}

TEST_CASE("irreducible classes: counts") {
  CHECK(irreducible_classes(cover(testing_support::kTrefoil, 2), 2).size() == 1);
  CHECK(irreducible_classes(cover(testing_support::kFigureEight, 2), 2).size() == 2);
  CHECK(irreducible_classes(cover(testing_support::kTrefoil, 3), 3).size() == 1);
  CHECK(irreducible_classes(cover(testing_support::kFigureEight, 3), 3).size() == 5);
  CHECK(irreducible_classes(cover(testing_support::kThreeTwist, 3), 3).size() == 8);
  CHECK(irreducible_classes(cover(testing_support::kTrefoil, 5), 5).empty());
}

TEST_CASE("irreducible classes partition the order-n characters") {
  for (auto [word, n] : {std::pair{testing_support::kFigureEight, 3}, std::pair{testing_support::kCinquefoil, 5},
                         std::pair{testing_support::kFigureEight, 4}}) {
    const auto h = cover(word, n);
    std::set<Character> order_n;
    for (const auto& chi : all_characters(h))
      if (order_of(chi, h) == n) order_n.insert(chi);
    std::set<Character> seen;
    const auto classes = irreducible_classes(h, n);
    for (const auto& o : classes) {
      CHECK(o.members.size() == static_cast<std::size_t>(n));
      CHECK(o.representative == *std::min_element(o.members.begin(), o.members.end()));
      for (const auto& m : o.members) CHECK(seen.insert(m).second);
    }
    CHECK(seen == order_n);
    CHECK(std::is_sorted(classes.begin(), classes.end(),
                         [](const auto& a, const auto& b) { return a.representative < b.representative; }));
  }
}
