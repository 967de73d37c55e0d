#include "substfreq/symmetry.hpp"

#include <algorithm>
#include <set>
#include <stdexcept>

namespace substfreq {

std::vector<GroupElement> dihedral_group(int m) {
  if (m < 1) throw std::invalid_argument("dihedral_group: m must be >= 1");
  std::vector<GroupElement> g;
  for (int x = 0; x < m; ++x) g.push_back({false, static_cast<Letter>(x)});
  for (int x = 0; x < m; ++x) g.push_back({true, static_cast<Letter>(x)});
  return g;
}

Word apply_element(const GroupElement& g, const Word& w, int m) {
  Word out;
  out.reserve(w.size());
  if (g.antimorphic) {
    for (std::size_t i = w.size(); i-- > 0;)
      out.push_back(reduce_mod(g.shift - w[i], m));
  } else {
    for (std::size_t i = 0; i < w.size(); ++i)
      out.push_back(reduce_mod(g.shift + w[i], m));
  }
  return out;
}

GroupElement compose(const GroupElement& g, const GroupElement& h, int m) {
  // (g o h)(w) = g(h(w)).
  GroupElement out;
  out.antimorphic = g.antimorphic != h.antimorphic;
  const int sign = g.antimorphic ? -1 : 1;
  out.shift = reduce_mod(g.shift + sign * h.shift, m);
  return out;
}

bool verify_invariance(const LanguageIndex& idx, std::span<const GroupElement> group, int n) {
  for (const Word& w : idx.factors(n))
    for (const GroupElement& g : group)
      if (!idx.contains(apply_element(g, w, idx.morphism().alphabet_size()))) return false;
  return true;
}

std::vector<std::vector<Word>> frequency_orbits(const LanguageIndex& idx,
                                                const FrequencySource& freqs,
                                                std::span<const GroupElement> group, int n) {
  const int m = idx.morphism().alphabet_size();
  std::set<Word> remaining(idx.factors(n).begin(), idx.factors(n).end());
  std::vector<std::vector<Word>> orbits;
  while (!remaining.empty()) {
    const Word seed = *remaining.begin();
    std::set<Word> orbit;
    for (const GroupElement& g : group) {
      Word img = apply_element(g, seed, m);
      if (!remaining.count(img))
        throw std::runtime_error("frequency_orbits: image " + img.str() +
                                 " escapes the language or its orbit class");
      orbit.insert(std::move(img));
    }
    const Rational ref = freqs(seed);
    for (const Word& w : orbit) {
      if (freqs(w) != ref)
        throw std::runtime_error("frequency_orbits: frequency mismatch inside orbit of " +
                                 seed.str() + " at " + w.str());
      remaining.erase(w);
    }
    orbits.emplace_back(orbit.begin(), orbit.end());
  }
  std::sort(orbits.begin(), orbits.end());
  return orbits;
}

UpperBoundReport upper_bound_report(const LanguageIndex& idx, const FrequencySource& freqs,
                                    std::span<const GroupElement> group, int n) {
  const int m = idx.morphism().alphabet_size();
  UpperBoundReport rep;
  rep.n = n;
  rep.complexity_gap = idx.complexity(n + 1) - idx.complexity(n);
  rep.group_size = static_cast<int>(group.size());

  for (const Word& w : idx.factors(n)) {
    const SpecialClass cls = idx.classify(w);
    if (cls != SpecialClass::bispecial && cls != SpecialClass::weak_bispecial) continue;
    ++rep.bs_count;
    bool palindromic = false;
    for (const GroupElement& g : group)
      if (g.antimorphic && apply_element(g, w, m) == w) {
        palindromic = true;
        break;
      }
    if (palindromic) ++rep.palindromic_bs_count;
  }

  rep.bound = Rational(4 * rep.complexity_gap + rep.group_size - rep.bs_count -
                           rep.palindromic_bs_count,
                       rep.group_size);

  std::set<Rational> distinct;
  for (const Word& w : idx.factors(n + 1)) distinct.insert(freqs(w));
  rep.observed = static_cast<long long>(distinct.size());
  return rep;
}

}  // namespace substfreq
