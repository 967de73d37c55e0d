#pragma once

#include <string>
#include <vector>

#include "substfreq/rational.hpp"

namespace substfreq {

// Dense exact linear system. Rows may be redundant; they must be consistent
// and pin a unique solution, otherwise solve_unique reports the offending
// row by its tag.
struct LinearSystem {
  std::size_t cols = 0;
  std::vector<std::vector<Rational>> rows;
  std::vector<Rational> rhs;
  std::vector<std::string> tags;

  void add_row(std::vector<Rational> row, Rational r, std::string tag);
};

struct SolveOutcome {
  bool ok = false;
  std::vector<Rational> solution;
  std::string error;
};

SolveOutcome solve_unique(const LinearSystem& sys);

}  // namespace substfreq
