#pragma once

#include <optional>
#include <vector>

#include "substfreq/morphism.hpp"
#include "substfreq/rational.hpp"

namespace substfreq {

using Matrix = std::vector<std::vector<long long>>;

// Classification of a morphism together with its exact letter frequencies.
// letter_frequencies stays empty unless the morphism is uniform and
// primitive; callers must not read frequencies off a non-primitive profile.
struct MorphismProfile {
  Matrix incidence;
  std::optional<int> uniform_length;
  bool is_marked = false;
  bool is_primitive = false;
  std::optional<Rational> dominant_eigenvalue;
  std::vector<Rational> letter_frequencies;
};

/// incidence[i][j] = occurrences of letter i in phi(j).
Matrix incidence_matrix(const Morphism& phi);

/// True iff some power up to the Wielandt bound (d^2 - 2d + 2) is entrywise
/// positive. Works on saturating booleans, so no overflow for large powers.
bool is_primitive_matrix(const Matrix& M);

MorphismProfile profile(const Morphism& phi);

}  // namespace substfreq
