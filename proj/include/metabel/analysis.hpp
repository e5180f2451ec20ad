#pragma once

#include <optional>
#include <string>
#include <vector>

#include "metabel/charenum.hpp"
#include "metabel/cohomology.hpp"
#include "metabel/laurent.hpp"
#include "metabel/linalg.hpp"

namespace metabel {

inline constexpr int kSchemaVersion = 1;

struct AnalysisOptions {
  bool all_checks = true;  // false: skip cover_b1, duality, twist identities, Lagrangian check
  Exec exec = Exec::parallel;
  bool timing = false;
};

struct ClassReport {
  Character character;                // orbit representative
  std::vector<Character> orbit;       // t^0 chi, t^1 chi, ...
  int orbit_size = 0;
  BettiReport ad;                     // cohomology with sl(n) coefficients
  std::string verdict;                // "simple_point" or "no_verdict"
  std::string verdict_detail;
  LaurentPoly delta0, delta1;
  bool tn_check = false;
  bool lemma6_ok = false;
  bool fixed_point_ok = false;
  bool irreducible = false;
  bool charpoly_ok = false;
  std::optional<BettiReport> boundary_standard;  // beta_(n, chi)
  std::optional<BettiReport> boundary_ad;
  std::optional<long> image_i1_dim;
  std::optional<bool> lagrangian_ok;
  std::optional<long> omega_rank;
  std::optional<bool> homology_matches;
  std::optional<bool> twist_identity_ok;

  bool operator==(const ClassReport&) const = default;
};

struct ReportChecks {
  LaurentPoly alexander_polynomial;
  Integer h1Ln_order;
  Rational fox_goeritz_order;
  bool fox_goeritz_ok = false;
  long characters_total = 0;
  long order_n_characters = 0;
  bool class_count_ok = false;
  bool euler_ok = true;
  std::optional<long> cover_b1;
  std::optional<bool> cover_b1_ge_order;
  std::optional<Integer> branched_b1_lower_bound;
  std::optional<bool> cover_bound_consistent;
  std::string note;

  bool operator==(const ReportChecks&) const = default;
};

struct AnalysisReport {
  int schema_version = kSchemaVersion;
  std::string knot;
  int n = 0;
  std::vector<Integer> h1Ln_divisors;
  int b1Ln = 0;
  std::vector<ClassReport> classes;
  ReportChecks checks;
  std::optional<double> seconds;

  bool operator==(const AnalysisReport&) const = default;
};

// Full analysis of every irreducible metabelian SL(n) class.
// Throws InfiniteCharacterGroup when b1(L_n) > 0 and InvariantViolation when
// a checked identity fails in a way that rules out a trustworthy report.
AnalysisReport analyze(const GroupPresentation& p, const std::string& knot, int n,
                       const AnalysisOptions& opts = {});

// Per-class work, exposed for tests and the benchmark.
ClassReport analyze_class(const GroupPresentation& p, const BranchedCoverHomology& h, const CharacterOrbit& orbit,
                          bool all_checks);

// P = diag(1, omega, ..., omega^{n-1}) with omega = zeta_n.
CycloMatrix twist_conjugator(int n);

}  // namespace metabel
