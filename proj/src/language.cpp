#include "substfreq/language.hpp"

#include <algorithm>
#include <cstdint>
#include <stdexcept>
#include <unordered_set>

namespace substfreq {

namespace {

struct PairHash {
  std::size_t operator()(const std::pair<std::uint64_t, std::uint64_t>& p) const noexcept {
    return p.first ^ (p.second * 0x9e3779b97f4a7c15ULL);
  }
};

// One factor-set snapshot per length, collected from a single prefix. A
// 128-bit rolling hash pre-filters repeated windows so the scan stays O(P)
// per length.
std::vector<std::set<Word>> collect_factors(const Word& prefix, int max_len) {
  constexpr std::uint64_t kBase1 = 0x100000001b3ULL;
  constexpr std::uint64_t kBase2 = 0xc6a4a7935bd1e995ULL;
  const auto& text = prefix.letters();
  const std::size_t P = text.size();
  std::vector<std::set<Word>> by_len(max_len + 1);
  for (int n = 1; n <= max_len; ++n) {
    if (static_cast<std::size_t>(n) > P) break;
    std::uint64_t pow1 = 1, pow2 = 1;
    for (int i = 0; i + 1 < n; ++i) {
      pow1 *= kBase1;
      pow2 *= kBase2;
    }
    std::uint64_t h1 = 0, h2 = 0;
    std::unordered_set<std::pair<std::uint64_t, std::uint64_t>, PairHash> seen;
    for (std::size_t pos = 0; pos + n <= P; ++pos) {
      if (pos == 0) {
        for (int i = 0; i < n; ++i) {
          h1 = h1 * kBase1 + text[i] + 1;
          h2 = h2 * kBase2 + text[i] + 1;
        }
      } else {
        h1 = (h1 - (text[pos - 1] + 1) * pow1) * kBase1 + text[pos + n - 1] + 1;
        h2 = (h2 - (text[pos - 1] + 1) * pow2) * kBase2 + text[pos + n - 1] + 1;
      }
      if (seen.emplace(h1, h2).second) by_len[n].insert(prefix.subword(pos, n));
    }
  }
  return by_len;
}

}  // namespace

const std::set<Word>& LanguageIndex::factors(int n) const {
  if (n < 1 || n > max_len_)
    throw std::out_of_range("LanguageIndex::factors: length " + std::to_string(n) +
                            " outside indexed range [1, " + std::to_string(max_len_) + "]");
  return by_len_[n];
}

bool LanguageIndex::contains(const Word& w) const {
  if (w.empty()) return true;
  const int n = static_cast<int>(w.size());
  if (n > max_len_)
    throw std::out_of_range("LanguageIndex::contains: word longer than indexed depth");
  return by_len_[n].count(w) > 0;
}

const Extensions& LanguageIndex::extensions(const Word& w) const {
  const int n = static_cast<int>(w.size());
  if (n < 1 || n >= max_len_)
    throw std::out_of_range("LanguageIndex::extensions: need |w| in [1, max_len)");
  auto it = ext_[n].find(w);
  if (it == ext_[n].end())
    throw std::invalid_argument("LanguageIndex::extensions: factor not in the language: " + w.str());
  return it->second;
}

SpecialClass LanguageIndex::classify(const Word& w) const {
  const int n = static_cast<int>(w.size());
  if (n + 2 > max_len_)
    throw std::out_of_range("LanguageIndex::classify: index depth must be >= |w| + 2");
  const Extensions& e = extensions(w);
  const bool ls = e.left.size() >= 2;
  const bool rs = e.right.size() >= 2;
  if (ls && rs) {
    // Weak: every left extension pairs with exactly one right extension.
    bool weak = true;
    for (Letter a : e.left) {
      int matches = 0;
      for (Letter b : e.right) {
        Word awb;
        awb.reserve(w.size() + 2);
        awb.push_back(a);
        awb.append(w);
        awb.push_back(b);
        if (contains(awb)) ++matches;
      }
      if (matches != 1) {
        weak = false;
        break;
      }
    }
    return weak ? SpecialClass::weak_bispecial : SpecialClass::bispecial;
  }
  if (ls) return SpecialClass::left_special;
  if (rs) return SpecialClass::right_special;
  return SpecialClass::none;
}

bool LanguageIndex::is_special(const Word& w) const {
  const Extensions& e = extensions(w);
  return e.left.size() >= 2 || e.right.size() >= 2;
}

LanguageIndex build_index(const Morphism& phi, Letter seed, int max_len, long long prefix_cap) {
  if (max_len < 1) throw std::invalid_argument("build_index: max_len must be >= 1");

  long long P = std::max<long long>(4096, 32LL * max_len);
  std::vector<std::set<Word>> prev;
  std::vector<std::set<Word>> cur;
  bool stable = false;
  while (P <= prefix_cap) {
    Word prefix = fixed_point_prefix(phi, seed, static_cast<std::size_t>(P));
    cur = collect_factors(prefix, max_len);
    if (!prev.empty()) {
      bool same = true;
      for (int n = 1; n <= max_len && same; ++n)
        if (prev[n].size() != cur[n].size()) same = false;
      if (same && prev[max_len] == cur[max_len]) {
        stable = true;
        break;
      }
    }
    prev = std::move(cur);
    P *= 2;
  }
  if (!stable)
    throw std::runtime_error("build_index: factor sets did not stabilize within the prefix cap");

  LanguageIndex idx;
  idx.phi_ = phi;
  idx.seed_ = seed;
  idx.max_len_ = max_len;
  idx.by_len_ = std::move(cur);

  idx.ext_.resize(max_len);
  for (int n = 1; n < max_len; ++n) {
    for (const Word& u : idx.by_len_[n + 1]) {
      idx.ext_[n][u.suffix(n)].left.insert(u.front());
      idx.ext_[n][u.prefix(n)].right.insert(u.back());
    }
  }
  return idx;
}

}  // namespace substfreq
