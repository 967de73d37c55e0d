#pragma once

#include <map>
#include <memory>
#include <mutex>
#include <set>
#include <unordered_map>
#include <vector>

#include "substfreq/language.hpp"
#include "substfreq/profile.hpp"
#include "substfreq/rational.hpp"

namespace substfreq {

// An interpretation (b_0...b_t, i, j): the factor is phi(ancestor) with i
// letters erased on the left and j on the right.
struct Interpretation {
  Word ancestor;
  int left_cut = 0;
  int right_cut = 0;
  auto operator<=>(const Interpretation&) const = default;
};

struct DecompositionParams {
  int p = 0;
  long long k = 0;      // in [K, b(K-1)]
  long long delta = 0;  // in [1, b^p]
  long long reconstruct(int b) const;
};

/// Unique triplet with n = b^p (k-1) + delta, computed with exact integer
/// ceilings (no floating-point logarithm). Requires n >= K.
DecompositionParams decomposition(long long n, int b, int K);

struct CircularityReport {
  bool all_circular = true;
  std::vector<Word> counterexamples;
};

// Exact frequency engine for circular fixed points of uniform marked
// primitive morphisms. Construction solves the base system once; queries on
// a built context are read-only apart from an internal memo.
class FridContext {
 public:
  FridContext(const Morphism& phi, Letter seed, int index_depth,
              long long scan_prefix_len = (1LL << 20));

  const Morphism& morphism() const { return phi_; }
  const MorphismProfile& profile() const { return profile_; }
  const LanguageIndex& index() const { return *index_; }
  int image_length() const { return b_; }
  int sync_delay() const { return sync_delay_; }
  int ordering_number() const { return ordering_number_; }
  int base_max_len() const { return base_max_len_; }
  const Word& scan_prefix() const { return scan_prefix_; }

  /// Offsets c in [0, |w|] that are phi-image boundaries in every occurrence
  /// of w, decided from the alignment classes of all occurrences in the scan
  /// prefix. Empty set means w is not circular.
  std::set<int> synchronization_points(const Word& w) const;

  /// Checks that every factor of length in [delay, check_up_to] has at least
  /// one synchronization point. Counterexamples are reported, not thrown.
  CircularityReport verify_circularity(int delay, int check_up_to) const;

  std::vector<Interpretation> interpretations(const Word& v) const;

  /// Exact frequencies of all factors of length <= b(K-1)+1, from the global
  /// rational linear solve.
  const std::map<Word, Rational>& base_frequencies() const { return base_; }

  /// Exact frequency of any indexed factor; beyond the base lengths this
  /// follows the unique interpretation chain downwards.
  Rational frequency(const Word& w) const;

  /// Frequency multiset of L_{n+1} as value -> multiplicity.
  std::map<Rational, long long> frequency_multiset(long long n) const;
  std::set<Rational> distinct_frequencies(long long n) const;

 private:
  void solve_base();

  Morphism phi_;
  Letter seed_;
  int b_ = 0;
  int sync_delay_ = 0;
  int ordering_number_ = 0;
  int base_max_len_ = 0;
  MorphismProfile profile_;
  std::shared_ptr<const LanguageIndex> index_;
  Word scan_prefix_;
  std::map<Word, Rational> base_;
  mutable std::unordered_map<Word, Rational, WordHash> memo_;
  mutable std::mutex memo_mutex_;
};

}  // namespace substfreq
