#pragma once

#include <stdexcept>
#include <string>

namespace metabel {

// Malformed or unsupported user input. The CLI maps this to exit code 2.
class InputError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

// b_1(L_n) > 0: the character group of H_1(L_n) is infinite.
class InfiniteCharacterGroup : public InputError {
 public:
  InfiniteCharacterGroup(int n, int b1)
      : InputError("b1(L_" + std::to_string(n) + ") = " + std::to_string(b1) +
                   " > 0: the character group of H_1(L_n) is infinite and cannot be enumerated; "
                   "b1(L_n) = 0 is guaranteed when n is a prime power"),
        n(n),
        b1(b1) {}
  int n;
  int b1;
};

// A checked mathematical invariant failed. The CLI maps this to exit code 3.
class InvariantViolation : public std::logic_error {
 public:
  using std::logic_error::logic_error;
};

}  // namespace metabel
