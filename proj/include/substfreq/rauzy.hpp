#pragma once

#include <functional>
#include <map>
#include <stdexcept>
#include <string>
#include <vector>

#include "substfreq/frid.hpp"
#include "substfreq/language.hpp"
#include "substfreq/rational.hpp"

namespace substfreq {

using FrequencySource = std::function<Rational(const Word&)>;

FrequencySource frid_source(const FridContext& ctx);
FrequencySource constant_source(Rational value);

struct RauzyEdge {
  Word word;  // length n+1; source = prefix, target = suffix
  Rational freq;
  Word source() const { return word.prefix(word.size() - 1); }
  Word target() const { return word.suffix(word.size() - 1); }
};

struct RauzyGraph {
  int order = 0;
  std::map<Word, Rational> vertices;
  std::vector<RauzyEdge> edges;  // sorted by edge word
};

struct ReducedEdge {
  Word source;
  Word target;
  Word path;  // simple-path word; special prefix/suffix, no interior specials
  Rational freq;
};

struct ReducedRauzyGraph {
  int order = 0;
  std::map<Word, Rational> vertices;  // LS and RS factors only
  std::vector<ReducedEdge> edges;
};

/// Raised by reduce() when the word has no special factors at this order.
class PeriodicLanguageError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

RauzyGraph rauzy(const LanguageIndex& idx, const FrequencySource& freqs, int n);

ReducedRauzyGraph reduce(const RauzyGraph& g, const LanguageIndex& idx);

struct KirchhoffViolation {
  Word vertex;
  Rational in_sum;
  Rational out_sum;
  Rational vertex_freq;
};

std::vector<KirchhoffViolation> verify_kirchhoff(const RauzyGraph& g);
std::vector<KirchhoffViolation> verify_kirchhoff(const ReducedRauzyGraph& g);

// Deterministic exports: lexicographic vertex/edge order, LF newlines.
std::string export_dot(const RauzyGraph& g);
std::string export_dot(const ReducedRauzyGraph& g);
std::string export_json(const RauzyGraph& g);
std::string export_json(const ReducedRauzyGraph& g);

}  // namespace substfreq
