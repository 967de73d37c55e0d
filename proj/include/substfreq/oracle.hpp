#pragma once

#include <map>
#include <unordered_map>
#include <vector>

#include "substfreq/morphism.hpp"
#include "substfreq/rational.hpp"

namespace substfreq {

struct EstimateReport {
  int n = 0;
  long long prefix_len = 0;
  std::map<Word, long long> counts;
  std::map<Word, Rational> estimates;  // count / (P - n + 1), exact rationals
  Rational max_abs_error;              // vs supplied exact table, else 0
};

/// Occurrence counts of every length-n window of the prefix. Windows that
/// pack into 64 bits (m^n < 2^63) use exact packed keys; longer windows fall
/// back to a 128-bit rolling hash with word reconstruction. threads > 1
/// splits the prefix into overlapping chunks; the merged result is
/// bit-identical to the single-scan one.
std::unordered_map<Word, long long, WordHash> window_counts(const Word& prefix, int n,
                                                            int threads = 1);

EstimateReport estimate(const Morphism& phi, Letter seed, int n, long long prefix_len,
                        const std::map<Word, Rational>* exact = nullptr, int threads = 1);

/// Max absolute error against the exact table for each prefix length.
std::vector<Rational> convergence_scan(const Morphism& phi, Letter seed, int n,
                                       const std::vector<long long>& prefix_lens,
                                       const std::map<Word, Rational>& exact);

}  // namespace substfreq
