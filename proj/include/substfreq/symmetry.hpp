#pragma once

#include <span>
#include <vector>

#include "substfreq/language.hpp"
#include "substfreq/rational.hpp"
#include "substfreq/rauzy.hpp"

namespace substfreq {

// Elements of D_m: the shift morphisms Pi_x (k -> x+k) and the reflection
// antimorphisms Psi_x (k -> x-k, word order reversed).
struct GroupElement {
  bool antimorphic = false;
  Letter shift = 0;
  auto operator<=>(const GroupElement&) const = default;
};

std::vector<GroupElement> dihedral_group(int m);

Word apply_element(const GroupElement& g, const Word& w, int m);
GroupElement compose(const GroupElement& g, const GroupElement& h, int m);

/// True iff g(w) stays in L_n for every group element and every w in L_n.
bool verify_invariance(const LanguageIndex& idx, std::span<const GroupElement> group, int n);

/// Orbits of the group action on L_n, each sorted; frequencies are asserted
/// equal within every orbit and a violation throws.
std::vector<std::vector<Word>> frequency_orbits(const LanguageIndex& idx,
                                                const FrequencySource& freqs,
                                                std::span<const GroupElement> group, int n);

struct UpperBoundReport {
  int n = 0;
  long long complexity_gap = 0;       // C(n+1) - C(n)
  int group_size = 0;                 // #G
  long long bs_count = 0;             // X
  long long palindromic_bs_count = 0; // Y
  Rational bound;                     // (4 gap + #G - X - Y) / #G
  long long observed = 0;             // # distinct frequencies over L_{n+1}
};

UpperBoundReport upper_bound_report(const LanguageIndex& idx, const FrequencySource& freqs,
                                    std::span<const GroupElement> group, int n);

}  // namespace substfreq
