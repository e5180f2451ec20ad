#include "metabel/report_json.hpp"

#include <iomanip>
#include <sstream>

#include "metabel/errors.hpp"

namespace metabel {

using nlohmann::json;

namespace {

json integer_to_json(const Integer& x) {
  if (x.fits_slong_p()) return x.get_si();
  return x.get_str();
}

Integer integer_from_json(const json& j) {
  if (j.is_string()) return Integer(j.get<std::string>());
  return Integer(j.get<long>());
}

json betti_to_json(const BettiReport& b) { return json::array({b.h0, b.h1, b.h2}); }
BettiReport betti_from_json(const json& j) { return {j.at(0).get<long>(), j.at(1).get<long>(), j.at(2).get<long>()}; }

json character_to_json(const Character& c) { return {{"divisors", c.divisors}, {"exponents", c.exponents}}; }
Character character_from_json(const json& j) {
  return {j.at("divisors").get<std::vector<long>>(), j.at("exponents").get<std::vector<long>>()};
}

template <class T, class F>
void put_optional(json& j, const char* key, const std::optional<T>& v, F conv) {
  if (v) j[key] = conv(*v);
}

template <class T>
std::optional<T> get_optional(const json& j, const char* key) {
  if (!j.contains(key)) return std::nullopt;
  return j.at(key).get<T>();
}

json class_to_json(const ClassReport& c) {
  json j;
  j["character"] = character_to_json(c.character);
  j["orbit"] = json::array();
  for (const auto& m : c.orbit) j["orbit"].push_back(m.exponents);
  j["orbit_size"] = c.orbit_size;
  j["h0_ad"] = c.ad.h0;
  j["h1_ad"] = c.ad.h1;
  j["h2_ad"] = c.ad.h2;
  j["verdict"] = c.verdict;
  j["verdict_detail"] = c.verdict_detail;
  j["delta0"] = poly_to_json(c.delta0);
  j["delta1"] = poly_to_json(c.delta1);
  j["tn_check"] = c.tn_check;
  j["lemma6_ok"] = c.lemma6_ok;
  j["fixed_point_ok"] = c.fixed_point_ok;
  j["irreducible"] = c.irreducible;
  j["charpoly_ok"] = c.charpoly_ok;
  put_optional(j, "boundary_standard", c.boundary_standard, betti_to_json);
  put_optional(j, "boundary_ad", c.boundary_ad, betti_to_json);
  auto same = [](const auto& x) { return x; };
  put_optional(j, "image_i1_dim", c.image_i1_dim, same);
  put_optional(j, "lagrangian_ok", c.lagrangian_ok, same);
  put_optional(j, "omega_rank", c.omega_rank, same);
  put_optional(j, "homology_matches", c.homology_matches, same);
  put_optional(j, "twist_identity_ok", c.twist_identity_ok, same);
  return j;
}

ClassReport class_from_json(const json& j) {
  ClassReport c;
  c.character = character_from_json(j.at("character"));
  for (const auto& m : j.at("orbit")) c.orbit.push_back({c.character.divisors, m.get<std::vector<long>>()});
  c.orbit_size = j.at("orbit_size").get<int>();
  c.ad = {j.at("h0_ad").get<long>(), j.at("h1_ad").get<long>(), j.at("h2_ad").get<long>()};
  c.verdict = j.at("verdict").get<std::string>();
  c.verdict_detail = j.at("verdict_detail").get<std::string>();
  c.delta0 = poly_from_json(j.at("delta0"));
  c.delta1 = poly_from_json(j.at("delta1"));
  c.tn_check = j.at("tn_check").get<bool>();
  c.lemma6_ok = j.at("lemma6_ok").get<bool>();
  c.fixed_point_ok = j.at("fixed_point_ok").get<bool>();
  c.irreducible = j.at("irreducible").get<bool>();
  c.charpoly_ok = j.at("charpoly_ok").get<bool>();
  if (j.contains("boundary_standard")) c.boundary_standard = betti_from_json(j.at("boundary_standard"));
  if (j.contains("boundary_ad")) c.boundary_ad = betti_from_json(j.at("boundary_ad"));
  c.image_i1_dim = get_optional<long>(j, "image_i1_dim");
  c.lagrangian_ok = get_optional<bool>(j, "lagrangian_ok");
  c.omega_rank = get_optional<long>(j, "omega_rank");
  c.homology_matches = get_optional<bool>(j, "homology_matches");
  c.twist_identity_ok = get_optional<bool>(j, "twist_identity_ok");
  return c;
}

}  // namespace

json poly_to_json(const LaurentPoly& f) {
  json j = json::object();
  for (const auto& [e, c] : f.terms()) {
    json coeffs = json::array();
    for (const auto& q : c.coefficients()) coeffs.push_back(q.get_str());
    j[std::to_string(e)] = json::array({coeffs, c.level()});
  }
  return j;
}

LaurentPoly poly_from_json(const json& j) {
  LaurentPoly f;
  for (const auto& [key, val] : j.items()) {
    std::vector<Rational> coeffs;
    for (const auto& q : val.at(0)) {
      Rational r(q.get<std::string>());
      r.canonicalize();
      coeffs.push_back(r);
    }
    f += LaurentPoly::monomial(Cyclotomic(val.at(1).get<long>(), std::move(coeffs)), std::stoi(key));
  }
  return f;
}

json to_json(const AnalysisReport& r) {
  json j;
  j["schema_version"] = r.schema_version;
  j["knot"] = r.knot;
  j["n"] = r.n;
  j["h1Ln_divisors"] = json::array();
  for (const auto& d : r.h1Ln_divisors) j["h1Ln_divisors"].push_back(integer_to_json(d));
  j["b1Ln"] = r.b1Ln;
  j["classes"] = json::array();
  for (const auto& c : r.classes) j["classes"].push_back(class_to_json(c));

  const ReportChecks& k = r.checks;
  json ch;
  ch["alexander_polynomial"] = poly_to_json(k.alexander_polynomial);
  ch["h1Ln_order"] = integer_to_json(k.h1Ln_order);
  ch["fox_goeritz_order"] = k.fox_goeritz_order.get_str();
  ch["fox_goeritz_ok"] = k.fox_goeritz_ok;
  ch["characters_total"] = k.characters_total;
  ch["order_n_characters"] = k.order_n_characters;
  ch["class_count_ok"] = k.class_count_ok;
  ch["euler_ok"] = k.euler_ok;
  if (k.cover_b1) ch["cover_b1"] = *k.cover_b1;
  if (k.cover_b1_ge_order) ch["cover_b1_ge_order"] = *k.cover_b1_ge_order;
  if (k.branched_b1_lower_bound) ch["branched_b1_lower_bound"] = integer_to_json(*k.branched_b1_lower_bound);
  if (k.cover_bound_consistent) ch["cover_bound_consistent"] = *k.cover_bound_consistent;
  if (!k.note.empty()) ch["note"] = k.note;
  j["checks"] = ch;
  if (r.seconds) j["seconds"] = *r.seconds;
  return j;
}

AnalysisReport report_from_json(const json& j) {
  AnalysisReport r;
  r.schema_version = j.at("schema_version").get<int>();
  if (r.schema_version != kSchemaVersion)
    throw InputError("unsupported report schema_version " + std::to_string(r.schema_version));
  r.knot = j.at("knot").get<std::string>();
  r.n = j.at("n").get<int>();
  for (const auto& d : j.at("h1Ln_divisors")) r.h1Ln_divisors.push_back(integer_from_json(d));
  r.b1Ln = j.at("b1Ln").get<int>();
  for (const auto& c : j.at("classes")) r.classes.push_back(class_from_json(c));
  const json& ch = j.at("checks");
  ReportChecks& k = r.checks;
  k.alexander_polynomial = poly_from_json(ch.at("alexander_polynomial"));
  k.h1Ln_order = integer_from_json(ch.at("h1Ln_order"));
  k.fox_goeritz_order = Rational(ch.at("fox_goeritz_order").get<std::string>());
  k.fox_goeritz_order.canonicalize();
  k.fox_goeritz_ok = ch.at("fox_goeritz_ok").get<bool>();
  k.characters_total = ch.at("characters_total").get<long>();
  k.order_n_characters = ch.at("order_n_characters").get<long>();
  k.class_count_ok = ch.at("class_count_ok").get<bool>();
  k.euler_ok = ch.at("euler_ok").get<bool>();
  k.cover_b1 = get_optional<long>(ch, "cover_b1");
  k.cover_b1_ge_order = get_optional<bool>(ch, "cover_b1_ge_order");
  if (ch.contains("branched_b1_lower_bound")) k.branched_b1_lower_bound = integer_from_json(ch.at("branched_b1_lower_bound"));
  k.cover_bound_consistent = get_optional<bool>(ch, "cover_bound_consistent");
  if (ch.contains("note")) k.note = ch.at("note").get<std::string>();
  if (j.contains("seconds")) r.seconds = j.at("seconds").get<double>();
  return r;
}

std::string dump_report(const AnalysisReport& r) { return to_json(r).dump(2) + "\n"; }

namespace {

std::string group_string(const std::vector<Integer>& divisors) {
  if (divisors.empty()) return "0";
  std::string s;
  for (std::size_t i = 0; i < divisors.size(); ++i) {
    if (i) s += " + ";
    s += divisors[i] == 0 ? std::string("Z") : "Z/" + divisors[i].get_str();
  }
  return s;
}

std::string exps(const std::vector<long>& e) {
  std::string s = "(";
  for (std::size_t i = 0; i < e.size(); ++i) s += (i ? "," : "") + std::to_string(e[i]);
  return s + ")";
}

std::string yes_no(const std::optional<bool>& b) { return b ? (*b ? "yes" : "NO") : "-"; }

std::string betti(const std::optional<BettiReport>& b) {
  if (!b) return "-";
  return "(" + std::to_string(b->h0) + "," + std::to_string(b->h1) + "," + std::to_string(b->h2) + ")";
}

}  // namespace

std::string format_table(const AnalysisReport& r) {
  std::ostringstream os;
  os << "knot        " << r.knot << "\n";
  os << "n           " << r.n << "\n";
  os << "H1(L_n)     " << group_string(r.h1Ln_divisors) << "   (order " << r.checks.h1Ln_order.get_str()
     << ", Fox-Goeritz " << r.checks.fox_goeritz_order.get_str() << ")\n";
  os << "Alexander   " << r.checks.alexander_polynomial.to_string() << "\n";
  os << "classes     " << r.classes.size() << "\n";
  if (!r.checks.note.empty()) os << "note        " << r.checks.note << "\n";
  if (r.checks.cover_b1)
    os << "cover b1    " << *r.checks.cover_b1 << "   (branched cover b1 >= " << r.checks.branched_b1_lower_bound->get_str()
       << ")\n";
  for (std::size_t i = 0; i < r.classes.size(); ++i) {
    const ClassReport& c = r.classes[i];
    os << "\n[" << i + 1 << "] chi = " << exps(c.character.exponents) << "  orbit size " << c.orbit_size << "\n";
    os << "    h*(ad)       " << betti(c.ad) << "   verdict: " << c.verdict << "\n";
    os << "    " << c.verdict_detail << "\n";
    os << "    Delta_0      " << c.delta0.to_string() << "\n";
    os << "    Delta_1      " << c.delta1.to_string() << "   t^n support: " << (c.tn_check ? "yes" : "NO") << "\n";
    os << "    boundary     std " << betti(c.boundary_standard) << "  ad " << betti(c.boundary_ad) << "\n";
    os << "    i1 image     " << (c.image_i1_dim ? std::to_string(*c.image_i1_dim) : "-")
       << "   Lagrangian: " << yes_no(c.lagrangian_ok) << "\n";
    os << "    h1 splitting " << (c.lemma6_ok ? "yes" : "NO") << "  fixed point " << (c.fixed_point_ok ? "yes" : "NO")
       << "  duality " << yes_no(c.homology_matches) << "  twist identity " << yes_no(c.twist_identity_ok) << "\n";
  }
  if (r.seconds) os << "\nelapsed     " << std::fixed << std::setprecision(3) << *r.seconds << " s\n";
  return os.str();
}

std::string format_homology(const BranchedCoverHomology& h) {
  std::ostringstream os;
  os << "H1(L_" << h.n << ") = " << group_string(h.divisors) << "\n";
  os << "b1(L_" << h.n << ") = " << b1_Ln(h) << "\n";
  if (!h.divisors.empty()) {
    os << "t acts by\n";
    for (std::size_t r = 0; r < h.rank(); ++r) {
      os << "  [";
      for (std::size_t c = 0; c < h.rank(); ++c) os << (c ? " " : "") << h.t_action(r, c).get_str();
      os << "]\n";
    }
  }
  return os.str();
}

}  // namespace metabel
