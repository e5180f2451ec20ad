#pragma once

#include <compare>
#include <optional>
#include <span>
#include <string>
#include <vector>

namespace metabel {

// Generator indices are 0-based internally; file formats and the CLI use
// 1-based names.
struct Letter {
  int gen;
  int exp;  // +1 or -1
  auto operator<=>(const Letter&) const = default;
};

// A word in the free group, kept freely reduced by every operation here.
class Word {
 public:
  Word() = default;
  explicit Word(std::vector<Letter> letters);
  static Word generator(int gen, int exp = 1) { return Word({Letter{gen, exp}}); }

  const std::vector<Letter>& letters() const { return letters_; }
  std::size_t size() const { return letters_.size(); }
  bool empty() const { return letters_.empty(); }

  Word inverse() const;
  Word& operator*=(const Word& o);
  friend Word operator*(Word a, const Word& b) { return a *= b; }
  auto operator<=>(const Word&) const = default;
  bool operator==(const Word&) const = default;

  // Total exponent weighted by per-generator degrees.
  long degree(std::span<const int> eps) const;
  // Exponent sum of each generator.
  std::vector<long> abelianized(int generator_count) const;
  int max_generator() const;

  std::string to_string(const std::vector<std::string>& names) const;

 private:
  std::vector<Letter> letters_;
};

// Free reduction of an arbitrary letter sequence.
std::vector<Letter> free_reduce(const std::vector<Letter>& letters);

struct GroupPresentation {
  int generator_count = 0;
  std::vector<Word> relators;
  int meridian = 0;
  std::optional<Word> longitude;
  std::vector<int> eps;
  std::vector<std::string> names;

  // Throws InputError when the deficiency, degree or index contracts fail.
  void validate() const;
  long degree(const Word& w) const { return w.degree(eps); }
  bool all_meridional() const;
};

std::vector<std::string> default_generator_names(int k);

}  // namespace metabel
