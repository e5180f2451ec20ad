#pragma once

#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "metabel/word.hpp"

namespace metabel {

struct BraidLetter {
  int index;  // 1 <= index <= strands - 1
  int sign;   // +1 for sigma_i, -1 for its inverse
};

struct BraidWord {
  int strands = 1;
  std::vector<BraidLetter> letters;

  int writhe() const;
  // Image of each strand position under the underlying permutation.
  std::vector<int> permutation() const;
  int closure_components() const;
};

// Whitespace-separated signed generator indices, e.g. "1 -2 1 -2".
// Strand count defaults to max|index| + 1. Rejects closures that are links.
BraidWord parse_braid(std::string_view text, std::optional<int> strands = std::nullopt);

// Wirtinger presentation of the braid closure: one generator per strand,
// relators x_j^{-1} * (braid image of x_j) with the last one dropped,
// meridian x_1 and the longitude read off along the closure.
GroupPresentation braid_to_presentation(const BraidWord& b);

// Line-oriented presentation file:
//   gens: x1 x2 ...      rel: <word>     meridian: x1
//   longitude: <word>    eps: 1 1 ...
// Upper-case spelling of a generator name denotes its inverse; '#' starts a
// comment.
GroupPresentation parse_presentation(std::string_view text);
GroupPresentation load_presentation_file(const std::string& path);

std::string format_presentation(const GroupPresentation& p);

}  // namespace metabel
