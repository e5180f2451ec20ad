#include "metabel/word.hpp"

#include <algorithm>
#include <cctype>
#include <sstream>

#include "metabel/errors.hpp"

namespace metabel {

std::vector<Letter> free_reduce(const std::vector<Letter>& letters) {
  std::vector<Letter> out;
  out.reserve(letters.size());
  for (const Letter& l : letters) {
    if (!out.empty() && out.back().gen == l.gen && out.back().exp == -l.exp)
      out.pop_back();
    else
      out.push_back(l);
  }
  return out;
}

Word::Word(std::vector<Letter> letters) : letters_(free_reduce(letters)) {}

Word Word::inverse() const {
  Word w;
  w.letters_.reserve(letters_.size());
  for (auto it = letters_.rbegin(); it != letters_.rend(); ++it) w.letters_.push_back({it->gen, -it->exp});
  return w;
}

Word& Word::operator*=(const Word& o) {
  std::size_t i = 0;
  while (i < o.letters_.size() && !letters_.empty() && letters_.back().gen == o.letters_[i].gen &&
         letters_.back().exp == -o.letters_[i].exp) {
    letters_.pop_back();
    ++i;
  }
  letters_.insert(letters_.end(), o.letters_.begin() + static_cast<std::ptrdiff_t>(i), o.letters_.end());
  return *this;
}

long Word::degree(std::span<const int> eps) const {
  long d = 0;
  for (const Letter& l : letters_) d += static_cast<long>(l.exp) * eps[l.gen];
  return d;
}

std::vector<long> Word::abelianized(int generator_count) const {
  std::vector<long> v(generator_count, 0);
  for (const Letter& l : letters_) v[l.gen] += l.exp;
  return v;
}

int Word::max_generator() const {
  int m = -1;
  for (const Letter& l : letters_) m = std::max(m, l.gen);
  return m;
}

std::string Word::to_string(const std::vector<std::string>& names) const {
  std::ostringstream os;
  for (std::size_t i = 0; i < letters_.size(); ++i) {
    if (i) os << ' ';
    std::string name = names.at(letters_[i].gen);
    if (letters_[i].exp < 0)
      std::transform(name.begin(), name.end(), name.begin(), [](unsigned char c) { return std::toupper(c); });
    os << name;
  }
  return os.str();
}

std::vector<std::string> default_generator_names(int k) {
  std::vector<std::string> names;
  for (int i = 1; i <= k; ++i) names.push_back("x" + std::to_string(i));
  return names;
}

bool GroupPresentation::all_meridional() const {
  return std::all_of(eps.begin(), eps.end(), [](int e) { return e == 1; });
}

void GroupPresentation::validate() const {
  const int k = generator_count;
  if (k < 1) throw InputError("presentation needs at least one generator");
  if (static_cast<int>(eps.size()) != k) throw InputError("eps must list one degree per generator");
  if (static_cast<int>(relators.size()) != k - 1)
    throw InputError("deficiency must be one: " + std::to_string(k) + " generators but " +
                     std::to_string(relators.size()) + " relators");
  for (std::size_t i = 0; i < relators.size(); ++i) {
    if (relators[i].max_generator() >= k)
      throw InputError("relator " + std::to_string(i + 1) + " uses an unknown generator");
    const long d = degree(relators[i]);
    if (d != 0)
      throw InputError("relator " + std::to_string(i + 1) + " has eps-degree " + std::to_string(d) +
                       " (must be 0)");
  }
  if (meridian < 0 || meridian >= k) throw InputError("meridian index out of range");
  if (eps[meridian] != 1) throw InputError("meridian must have eps-degree 1");
  if (longitude) {
    if (longitude->max_generator() >= k) throw InputError("longitude uses an unknown generator");
    if (degree(*longitude) != 0) throw InputError("longitude must have eps-degree 0");
  }
}

}  // namespace metabel
