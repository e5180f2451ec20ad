#include "metabel/charenum.hpp"

#include <algorithm>
#include <numeric>
#include <set>

#include "metabel/errors.hpp"

namespace metabel {

long Character::level() const {
  long l = 1;
  for (long d : divisors) l = std::lcm(l, d);
  return l;
}

bool Character::is_trivial() const {
  return std::all_of(exponents.begin(), exponents.end(), [](long e) { return e == 0; });
}

long Character::log_value(const std::vector<Integer>& h) const {
  const long L = level();
  Integer s = 0;
  for (std::size_t j = 0; j < divisors.size(); ++j) s += Integer(exponents[j]) * h[j] * (L / divisors[j]);
  Integer r = s % L;
  if (r < 0) r += L;
  return r.get_si();
}

Cyclotomic Character::value(const std::vector<Integer>& h) const {
  return Cyclotomic::root_of_unity(level(), log_value(h));
}

std::vector<long> torsion_divisors(const BranchedCoverHomology& h) {
  std::vector<long> d;
  for (const auto& x : h.divisors) {
    if (x == 0) throw InfiniteCharacterGroup(h.n, b1_Ln(h));
    if (!x.fits_slong_p()) throw InputError("H_1(L_n) has a divisor too large to enumerate");
    d.push_back(x.get_si());
  }
  return d;
}

std::vector<Character> all_characters(const BranchedCoverHomology& h) {
  const auto d = torsion_divisors(h);
  long double total = 1;
  for (long x : d) total *= static_cast<long double>(x);
  if (total > 1e7) throw InputError("H_1(L_n) is too large to enumerate its characters");
  std::vector<Character> out;
  std::vector<long> e(d.size(), 0);
  while (true) {
    out.push_back({d, e});
    std::size_t k = d.size();
    while (k > 0) {
      --k;
      if (++e[k] < d[k]) break;
      e[k] = 0;
      if (k == 0) return out;
    }
    if (d.empty()) return out;
  }
}

Character t_act(const Character& chi, const BranchedCoverHomology& h) {
  Character out{chi.divisors, std::vector<long>(chi.divisors.size(), 0)};
  const long L = chi.level();
  for (std::size_t k = 0; k < chi.divisors.size(); ++k) {
    std::vector<Integer> col(chi.divisors.size());
    for (std::size_t r = 0; r < col.size(); ++r) col[r] = h.t_action(r, k);
    const long v = chi.log_value(col);
    const long step = L / chi.divisors[k];
    if (v % step != 0) throw InvariantViolation("t-action does not preserve the character lattice");
    out.exponents[k] = v / step;
  }
  return out;
}

int order_of(const Character& chi, const BranchedCoverHomology& h) {
  Character c = t_act(chi, h);
  int l = 1;
  while (c != chi) {
    c = t_act(c, h);
    if (++l > h.n) throw InvariantViolation("t-orbit of a character exceeds n");
  }
  return l;
}

std::vector<CharacterOrbit> irreducible_classes(const BranchedCoverHomology& h, int n) {
  const auto chars = all_characters(h);
  std::set<Character> seen;
  std::vector<CharacterOrbit> out;
  for (const auto& chi : chars) {
    if (seen.count(chi)) continue;
    CharacterOrbit orbit;
    Character c = chi;
    do {
      orbit.members.push_back(c);
      seen.insert(c);
      c = t_act(c, h);
    } while (c != chi && static_cast<int>(orbit.members.size()) <= n);
    if (c != chi) throw InvariantViolation("t-orbit of a character exceeds n");
    if (static_cast<int>(orbit.members.size()) != n) continue;
    orbit.representative = *std::min_element(orbit.members.begin(), orbit.members.end());
    out.push_back(std::move(orbit));
  }
  std::sort(out.begin(), out.end(),
            [](const CharacterOrbit& a, const CharacterOrbit& b) { return a.representative < b.representative; });
  return out;
}

}  // namespace metabel
