#pragma once

#include <vector>

#include "substfreq/word.hpp"

namespace substfreq {

class Morphism {
 public:
  // One non-empty image per letter, image letters inside the same alphabet.
  Morphism(int alphabet_size, std::vector<Word> images);

  int alphabet_size() const { return m_; }
  const Word& image(Letter a) const { return images_.at(a); }
  const std::vector<Word>& images() const { return images_; }

 private:
  int m_;
  std::vector<Word> images_;
};

/// The generalized Thue-Morse morphism k -> k (k+1) ... (k+b-1) mod m.
Morphism gtm_morphism(int b, int m);

Word apply(const Morphism& phi, const Word& w);

/// Length-len prefix of the fixed point of phi starting in seed. Requires a
/// prolongable seed: phi(seed) starts with seed and has length >= 2.
Word fixed_point_prefix(const Morphism& phi, Letter seed, std::size_t len);

/// Overlapping occurrence count; the pattern must be non-empty.
long long count_occurrences(const Word& text, const Word& pattern);

}  // namespace substfreq
