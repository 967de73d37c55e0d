#pragma once

#include <set>
#include <unordered_map>
#include <vector>

#include "substfreq/morphism.hpp"

namespace substfreq {

enum class SpecialClass { none, left_special, right_special, bispecial, weak_bispecial };

struct Extensions {
  std::set<Letter> left;
  std::set<Letter> right;
};

// Factor sets of a fixed point up to a fixed depth, with extension data.
// Built once by scanning prefixes of doubling length until the factor set
// stabilizes; afterwards immutable and safe for concurrent queries.
class LanguageIndex {
 public:
  const Morphism& morphism() const { return phi_; }
  Letter seed() const { return seed_; }
  int max_len() const { return max_len_; }

  const std::set<Word>& factors(int n) const;
  long long complexity(int n) const { return static_cast<long long>(factors(n).size()); }
  bool contains(const Word& w) const;

  /// Left/right extensions of an indexed factor; requires |w| < max_len.
  const Extensions& extensions(const Word& w) const;

  /// LS/RS/BS/weak-BS classification; the weak test needs depth |w| + 2.
  SpecialClass classify(const Word& w) const;
  bool is_special(const Word& w) const;

 private:
  friend LanguageIndex build_index(const Morphism&, Letter, int, long long);
  Morphism phi_{1, {Word{0}}};
  Letter seed_ = 0;
  int max_len_ = 0;
  std::vector<std::set<Word>> by_len_;  // [n] = L_n for n in 1..max_len
  std::vector<std::unordered_map<Word, Extensions, WordHash>> ext_;
};

LanguageIndex build_index(const Morphism& phi, Letter seed, int max_len,
                          long long prefix_cap = (1LL << 22));

}  // namespace substfreq
