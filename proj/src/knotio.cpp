#include "metabel/knotio.hpp"

#include <algorithm>
#include <cctype>
#include <charconv>
#include <fstream>
#include <map>
#include <sstream>

#include "metabel/errors.hpp"
#include "metabel/snf.hpp"

namespace metabel {

int BraidWord::writhe() const {
  int w = 0;
  for (const auto& l : letters) w += l.sign;
  return w;
}

std::vector<int> BraidWord::permutation() const {
  // perm[p] = final position of the strand starting at position p
  std::vector<int> at(strands);  // at[position] = starting strand
  for (int p = 0; p < strands; ++p) at[p] = p;
  for (const auto& l : letters) std::swap(at[l.index - 1], at[l.index]);
  std::vector<int> perm(strands);
  for (int p = 0; p < strands; ++p) perm[at[p]] = p;
  return perm;
}

int BraidWord::closure_components() const {
  const auto perm = permutation();
  std::vector<bool> seen(strands, false);
  int cycles = 0;
  for (int s = 0; s < strands; ++s) {
    if (seen[s]) continue;
    ++cycles;
    for (int p = s; !seen[p]; p = perm[p]) seen[p] = true;
  }
  return cycles;
}

BraidWord parse_braid(std::string_view text, std::optional<int> strands) {
  BraidWord b;
  std::istringstream in{std::string(text)};
  std::string token;
  int max_index = 0;
  while (in >> token) {
    int value = 0;
    const char* first = token.data();
    const char* last = token.data() + token.size();
    if (*first == '+') ++first;
    auto [ptr, ec] = std::from_chars(first, last, value);
    if (ec != std::errc() || ptr != last) throw InputError("malformed braid token '" + token + "'");
    if (value == 0) throw InputError("braid generator index 0 is not allowed");
    b.letters.push_back({std::abs(value), value > 0 ? 1 : -1});
    max_index = std::max(max_index, std::abs(value));
  }
  b.strands = strands.value_or(max_index + 1);
  if (b.strands < 1) throw InputError("strand count must be positive");
  if (max_index > b.strands - 1)
    throw InputError("braid index " + std::to_string(max_index) + " needs more than " +
                     std::to_string(b.strands) + " strands");
  const int components = b.closure_components();
  if (components != 1)
    throw InputError("braid closure has " + std::to_string(components) + " components; a knot is required");
  return b;
}

GroupPresentation braid_to_presentation(const BraidWord& b) {
  if (b.closure_components() != 1) throw InputError("braid closure is not a knot");
  const int m = b.strands;
  // label[p] = conj[p] * x_{start[p]} * conj[p]^{-1} for the strand at position p
  std::vector<Word> label(m), conj(m);
  std::vector<int> start(m);
  for (int p = 0; p < m; ++p) {
    label[p] = Word::generator(p);
    start[p] = p;
  }
  for (const auto& l : b.letters) {
    const int i = l.index - 1;
    const Word a = label[i], bb = label[i + 1];
    if (l.sign > 0) {
      // strand i passes over to i+1; strand i+1 passes under to i
      Word under_label = a * bb * a.inverse();
      Word under_conj = a * conj[i + 1];
      const int under_start = start[i + 1];
      label[i + 1] = a;
      conj[i + 1] = conj[i];
      start[i + 1] = start[i];
      label[i] = std::move(under_label);
      conj[i] = std::move(under_conj);
      start[i] = under_start;
    } else {
      // strand i+1 passes over to i; strand i passes under to i+1
      Word under_label = bb.inverse() * a * bb;
      Word under_conj = bb.inverse() * conj[i];
      const int under_start = start[i];
      label[i] = bb;
      conj[i] = conj[i + 1];
      start[i] = start[i + 1];
      label[i + 1] = std::move(under_label);
      conj[i + 1] = std::move(under_conj);
      start[i + 1] = under_start;
    }
  }

  GroupPresentation p;
  p.generator_count = m;
  p.names = default_generator_names(m);
  p.eps.assign(m, 1);
  p.meridian = 0;
  for (int j = 0; j + 1 < m; ++j) p.relators.push_back(Word::generator(j, -1) * label[j]);

  // Walk the closure from the top of strand 0, accumulating the conjugators
  // picked up under each crossing.
  std::vector<int> end_of(m);
  for (int q = 0; q < m; ++q) end_of[start[q]] = q;
  Word around;
  int s = 0;
  do {
    const int q = end_of[s];
    around = conj[q] * around;
    s = q;
  } while (s != 0);
  const long winding = around.degree(p.eps);
  p.longitude = around * Word(std::vector<Letter>(static_cast<std::size_t>(std::labs(winding)),
                                                  Letter{0, winding > 0 ? -1 : 1}));

  // Wirtinger relators of a knot abelianize to a rank k-1 system.
  IntMatrix ab(p.relators.size(), m);
  for (std::size_t r = 0; r < p.relators.size(); ++r) {
    const auto v = p.relators[r].abelianized(m);
    for (int j = 0; j < m; ++j) ab(r, j) = v[j];
  }
  const auto d = snf(ab).divisors;
  const auto nonzero = std::count_if(d.begin(), d.end(), [](const Integer& x) { return x != 0; });
  if (nonzero != m - 1) throw InvariantViolation("abelianized Wirtinger relators do not have rank k-1");
  p.validate();
  return p;
}

namespace {

std::string trim_copy(std::string_view s) {
  std::size_t a = 0, b = s.size();
  while (a < b && std::isspace(static_cast<unsigned char>(s[a]))) ++a;
  while (b > a && std::isspace(static_cast<unsigned char>(s[b - 1]))) --b;
  return std::string(s.substr(a, b - a));
}

std::vector<std::string> split_ws(const std::string& s) {
  std::istringstream in(s);
  std::vector<std::string> out;
  std::string t;
  while (in >> t) out.push_back(t);
  return out;
}

std::string upper(std::string s) {
  std::transform(s.begin(), s.end(), s.begin(), [](unsigned char c) { return std::toupper(c); });
  return s;
}

Word parse_word(const std::vector<std::string>& tokens, const std::map<std::string, int>& pos,
                const std::map<std::string, int>& neg, int line_no) {
  std::vector<Letter> letters;
  for (const auto& tok : tokens) {
    if (auto it = pos.find(tok); it != pos.end())
      letters.push_back({it->second, 1});
    else if (auto jt = neg.find(tok); jt != neg.end())
      letters.push_back({jt->second, -1});
    else
      throw InputError("line " + std::to_string(line_no) + ": unknown generator '" + tok + "'");
  }
  return Word(std::move(letters));
}

}  // namespace

GroupPresentation parse_presentation(std::string_view text) {
  GroupPresentation p;
  std::map<std::string, int> pos, neg;
  std::vector<std::pair<int, std::vector<std::string>>> rel_lines;
  std::optional<std::pair<int, std::vector<std::string>>> meridian_line, longitude_line, eps_line;
  bool have_gens = false;

  std::istringstream in{std::string(text)};
  std::string raw;
  int line_no = 0;
  while (std::getline(in, raw)) {
    ++line_no;
    if (auto h = raw.find('#'); h != std::string::npos) raw.erase(h);
    const std::string line = trim_copy(raw);
    if (line.empty()) continue;
    const auto colon = line.find(':');
    if (colon == std::string::npos) throw InputError("line " + std::to_string(line_no) + ": expected 'key: value'");
    const std::string key = trim_copy(std::string_view(line).substr(0, colon));
    auto values = split_ws(line.substr(colon + 1));
    if (key == "gens") {
      if (have_gens) throw InputError("line " + std::to_string(line_no) + ": duplicate gens line");
      have_gens = true;
      for (const auto& name : values) {
        if (std::any_of(name.begin(), name.end(), [](unsigned char c) { return std::isupper(c); }))
          throw InputError("generator name '" + name + "' must not contain upper-case letters");
        if (upper(name) == name) throw InputError("generator name '" + name + "' needs a letter");
        if (pos.count(name)) throw InputError("duplicate generator '" + name + "'");
        pos[name] = static_cast<int>(p.names.size());
        neg[upper(name)] = static_cast<int>(p.names.size());
        p.names.push_back(name);
      }
    } else if (key == "rel") {
      rel_lines.emplace_back(line_no, std::move(values));
    } else if (key == "meridian") {
      meridian_line.emplace(line_no, std::move(values));
    } else if (key == "longitude") {
      longitude_line.emplace(line_no, std::move(values));
    } else if (key == "eps") {
      eps_line.emplace(line_no, std::move(values));
    } else {
      throw InputError("line " + std::to_string(line_no) + ": unknown key '" + key + "'");
    }
  }
  if (!have_gens) throw InputError("missing 'gens:' line");
  p.generator_count = static_cast<int>(p.names.size());
  for (const auto& [ln, toks] : rel_lines) p.relators.push_back(parse_word(toks, pos, neg, ln));

  if (!meridian_line) throw InputError("missing 'meridian:' line");
  if (meridian_line->second.size() != 1 || !pos.count(meridian_line->second[0]))
    throw InputError("line " + std::to_string(meridian_line->first) + ": meridian must be one generator name");
  p.meridian = pos.at(meridian_line->second[0]);

  if (longitude_line) p.longitude = parse_word(longitude_line->second, pos, neg, longitude_line->first);

  if (eps_line) {
    if (static_cast<int>(eps_line->second.size()) != p.generator_count)
      throw InputError("line " + std::to_string(eps_line->first) + ": eps needs one entry per generator");
    for (const auto& tok : eps_line->second) {
      int v = 0;
      auto [ptr, ec] = std::from_chars(tok.data(), tok.data() + tok.size(), v);
      if (ec != std::errc() || ptr != tok.data() + tok.size()) throw InputError("malformed eps entry '" + tok + "'");
      p.eps.push_back(v);
    }
  } else {
    p.eps.assign(p.generator_count, 1);
  }
  p.validate();
  return p;
}

GroupPresentation load_presentation_file(const std::string& path) {
  std::ifstream f(path);
  if (!f) throw InputError("cannot open presentation file '" + path + "'");
  std::ostringstream ss;
  ss << f.rdbuf();
  return parse_presentation(ss.str());
}

std::string format_presentation(const GroupPresentation& p) {
  std::ostringstream os;
  os << "gens:";
  for (const auto& n : p.names) os << ' ' << n;
  os << '\n';
  for (const auto& r : p.relators) os << "rel: " << r.to_string(p.names) << '\n';
  os << "meridian: " << p.names[p.meridian] << '\n';
  if (p.longitude) os << "longitude: " << p.longitude->to_string(p.names) << '\n';
  os << "eps:";
  for (int e : p.eps) os << ' ' << e;
  os << '\n';
  return os.str();
}

}  // namespace metabel
