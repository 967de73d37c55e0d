#pragma once

#include <map>
#include <optional>
#include <set>
#include <string>
#include <utility>

#include "substfreq/rational.hpp"
#include "substfreq/word.hpp"

namespace substfreq {

// Closed-form frequency data for t_{b,m}. q is the least positive integer
// with q(b-1) = 0 mod m; the word is periodic iff b = 1 mod m, in which case
// f is unset and every frequency is 1/m.
struct ClosedFormContext {
  int b = 0;
  int m = 0;
  int q = 0;
  bool periodic = false;
  Rational f;  // rho(01), aperiodic case only
};

ClosedFormContext closed_form_context(int b, int m);

// Vertex and edge frequencies of the reduced Rauzy graph of order n for
// 1 <= n <= 2b-1, attached to the canonical vertices 01...(n-1) and (for
// n > b) 01...(b-1)1...(n-b). Every other vertex/edge is a symmetry image.
struct GammaSmall {
  int n = 0;
  Word bs_vertex;
  Rational bs_vertex_freq;
  std::map<Word, Rational> edges_into_bs;
  std::optional<Word> ls_vertex;
  Rational ls_vertex_freq;
  std::map<Word, Rational> edges_into_ls;
  std::optional<std::pair<Word, Rational>> edge_out_of_ls;

  /// Distinct edge-frequency values of the full reduced graph.
  std::set<Rational> edge_values() const;
};

GammaSmall gamma_small_frequencies(const ClosedFormContext& ctx, int n);

struct FrequencyRow {
  std::string row;
  long long n = 0;
  long long ell = 0;
  std::set<Rational> values;
};

/// The set {rho(e) : e in L_{N+1}(t_{b,m})} with the matched table row.
FrequencyRow frequency_set(const ClosedFormContext& ctx, long long N);

}  // namespace substfreq
