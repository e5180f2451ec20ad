#pragma once

#include <vector>

#include "metabel/alexmod.hpp"
#include "metabel/cyclotomic.hpp"

namespace metabel {

// chi(gen_j) = zeta_{d_j}^{e_j} against the Smith divisors d_j.
struct Character {
  std::vector<long> divisors;
  std::vector<long> exponents;

  long level() const;
  bool is_trivial() const;
  // Exponent of zeta_level in chi(h) for h in Smith coordinates.
  long log_value(const std::vector<Integer>& h) const;
  Cyclotomic value(const std::vector<Integer>& h) const;

  auto operator<=>(const Character&) const = default;
};

struct CharacterOrbit {
  Character representative;
  std::vector<Character> members;  // t^0 chi, t^1 chi, ...
};

std::vector<Character> all_characters(const BranchedCoverHomology& h);
// (t chi)(h) = chi(t h)
Character t_act(const Character& chi, const BranchedCoverHomology& h);
// Smallest l >= 1 with t^l chi = chi.
int order_of(const Character& chi, const BranchedCoverHomology& h);
// One orbit per t-orbit of order-n characters, sorted by representative.
std::vector<CharacterOrbit> irreducible_classes(const BranchedCoverHomology& h, int n);

// Divisors as machine integers; throws InputError for infinite groups.
std::vector<long> torsion_divisors(const BranchedCoverHomology& h);

}  // namespace metabel
