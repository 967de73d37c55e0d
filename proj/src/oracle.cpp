#include "substfreq/oracle.hpp"

#include <algorithm>
#include <cstdint>
#include <future>
#include <stdexcept>
#include <thread>

namespace substfreq {

namespace {

bool fits_packed(int m, int n) {
  std::uint64_t v = 1;
  for (int i = 0; i < n; ++i) {
    if (v > (std::uint64_t{1} << 62) / m) return false;
    v *= m;
  }
  return true;
}

// Exact packed-key counting: each window is read as a base-m integer.
std::unordered_map<Word, long long, WordHash> count_packed(const Word& prefix, int n, int m,
                                                           std::size_t lo, std::size_t hi) {
  std::uint64_t top = 1;
  for (int i = 0; i < n - 1; ++i) top *= m;
  std::unordered_map<std::uint64_t, std::pair<long long, std::size_t>> by_key;
  std::uint64_t key = 0;
  for (std::size_t i = lo; i < hi; ++i) {
    key = key * m + prefix[i];
    if (i + 1 >= lo + static_cast<std::size_t>(n)) {
      const std::size_t start = i + 1 - n;
      auto [it, fresh] = by_key.try_emplace(key, 0, start);
      ++it->second.first;
      key -= top * prefix[start];
    }
  }
  std::unordered_map<Word, long long, WordHash> counts;
  counts.reserve(by_key.size());
  for (const auto& [k, cf] : by_key) counts.emplace(prefix.subword(cf.second, n), cf.first);
  return counts;
}

struct U128Hash {
  std::size_t operator()(const std::pair<std::uint64_t, std::uint64_t>& p) const noexcept {
    return p.first * 0x9e3779b97f4a7c15ULL ^ p.second;
  }
};

std::unordered_map<Word, long long, WordHash> count_hash(const Word& prefix, int n,
                                                         std::size_t lo, std::size_t hi) {
  std::unordered_map<Word, long long, WordHash> counts;
  if (hi < lo + static_cast<std::size_t>(n)) return counts;

  constexpr std::uint64_t B1 = 0x100000001b3ULL;
  constexpr std::uint64_t B2 = 0xc6a4a7935bd1e995ULL;
  std::uint64_t pow1 = 1, pow2 = 1;
  for (int i = 0; i < n - 1; ++i) {
    pow1 *= B1;
    pow2 *= B2;
  }
  std::unordered_map<std::pair<std::uint64_t, std::uint64_t>,
                     std::pair<long long, std::size_t>, U128Hash>
      by_hash;  // hash -> (count, first position)
  std::uint64_t h1 = 0, h2 = 0;
  for (std::size_t i = lo; i < hi; ++i) {
    h1 = h1 * B1 + prefix[i] + 1;
    h2 = h2 * B2 + prefix[i] + 1;
    if (i + 1 >= lo + static_cast<std::size_t>(n)) {
      const std::size_t start = i + 1 - n;
      auto [it, fresh] = by_hash.try_emplace({h1, h2}, 0, start);
      ++it->second.first;
      h1 -= pow1 * (prefix[start] + 1);
      h2 -= pow2 * (prefix[start] + 1);
    }
  }
  counts.reserve(by_hash.size());
  for (const auto& [key, cf] : by_hash)
    counts.emplace(prefix.subword(cf.second, n), cf.first);
  return counts;
}

std::unordered_map<Word, long long, WordHash> count_windows(const Word& prefix, int n, int m,
                                                            std::size_t lo, std::size_t hi) {
  if (fits_packed(m, n)) return count_packed(prefix, n, m, lo, hi);
  return count_hash(prefix, n, lo, hi);
}

}  // namespace

std::unordered_map<Word, long long, WordHash> window_counts(const Word& prefix, int n,
                                                            int threads) {
  if (n < 1) throw std::invalid_argument("window_counts: n must be >= 1");
  if (threads < 1) throw std::invalid_argument("window_counts: threads must be >= 1");
  if (prefix.size() < static_cast<std::size_t>(n)) return {};

  Letter top = 0;
  for (Letter a : prefix.letters()) top = std::max(top, a);
  const int m = top + 1;

  const std::size_t windows = prefix.size() - n + 1;
  const std::size_t want = std::min<std::size_t>(threads, std::max<std::size_t>(windows / 4096, 1));
  if (want <= 1) return count_windows(prefix, n, m, 0, prefix.size());

  // Chunk i counts windows starting in [starts[i], starts[i+1]); chunks
  // overlap by n-1 letters so every window is seen exactly once.
  std::vector<std::future<std::unordered_map<Word, long long, WordHash>>> parts;
  const std::size_t per = windows / want;
  for (std::size_t i = 0; i < want; ++i) {
    const std::size_t first = i * per;
    const std::size_t last = i + 1 == want ? windows : (i + 1) * per;
    parts.push_back(std::async(std::launch::async, [&prefix, n, m, first, last] {
      return count_windows(prefix, n, m, first, last + n - 1);
    }));
  }
  std::unordered_map<Word, long long, WordHash> merged = parts[0].get();
  for (std::size_t i = 1; i < parts.size(); ++i)
    for (auto& [w, c] : parts[i].get()) merged[w] += c;
  return merged;
}

EstimateReport estimate(const Morphism& phi, Letter seed, int n, long long prefix_len,
                        const std::map<Word, Rational>* exact, int threads) {
  EstimateReport rep;
  rep.n = n;
  rep.prefix_len = prefix_len;
  if (prefix_len < n) return rep;
  const Word prefix = fixed_point_prefix(phi, seed, static_cast<std::size_t>(prefix_len));
  const long long windows = prefix_len - n + 1;
  for (auto& [w, c] : window_counts(prefix, n, threads)) {
    rep.counts.emplace(w, c);
    rep.estimates.emplace(w, Rational(c, windows));
  }
  if (exact) {
    for (const auto& [w, rho] : *exact) {
      auto it = rep.estimates.find(w);
      const Rational est = it == rep.estimates.end() ? Rational(0) : it->second;
      rep.max_abs_error = std::max(rep.max_abs_error, abs_value(est - rho));
    }
    for (const auto& [w, est] : rep.estimates)
      if (!exact->count(w))
        rep.max_abs_error = std::max(rep.max_abs_error, est);
  }
  return rep;
}

std::vector<Rational> convergence_scan(const Morphism& phi, Letter seed, int n,
                                       const std::vector<long long>& prefix_lens,
                                       const std::map<Word, Rational>& exact) {
  std::vector<Rational> errors;
  errors.reserve(prefix_lens.size());
  for (long long len : prefix_lens)
    errors.push_back(estimate(phi, seed, n, len, &exact).max_abs_error);
  return errors;
}

}  // namespace substfreq
