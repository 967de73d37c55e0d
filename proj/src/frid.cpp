#include "substfreq/frid.hpp"

#include <algorithm>
#include <cstdint>
#include <stdexcept>

#include "substfreq/linalg.hpp"

namespace substfreq {

namespace {

struct PairHash {
  std::size_t operator()(const std::pair<std::uint64_t, std::uint64_t>& p) const noexcept {
    return p.first ^ (p.second * 0x9e3779b97f4a7c15ULL);
  }
};

using HashKey = std::pair<std::uint64_t, std::uint64_t>;

constexpr std::uint64_t kBase1 = 0x100000001b3ULL;
constexpr std::uint64_t kBase2 = 0xc6a4a7935bd1e995ULL;

HashKey word_key(const Word& w) {
  std::uint64_t h1 = 0, h2 = 0;
  for (Letter a : w.letters()) {
    h1 = h1 * kBase1 + a + 1;
    h2 = h2 * kBase2 + a + 1;
  }
  return {h1, h2};
}

// Alignment classes (occurrence position mod b) of every length-n window of
// the prefix, keyed by window hash. Bit k of the mask marks residue k.
std::unordered_map<HashKey, std::uint32_t, PairHash> residue_masks(const Word& prefix, int n,
                                                                   int b) {
  if (b > 32) throw std::invalid_argument("residue_masks: image length > 32 unsupported");
  const auto& text = prefix.letters();
  const std::size_t P = text.size();
  std::unordered_map<HashKey, std::uint32_t, PairHash> out;
  if (static_cast<std::size_t>(n) > P) return out;
  std::uint64_t pow1 = 1, pow2 = 1;
  for (int i = 0; i + 1 < n; ++i) {
    pow1 *= kBase1;
    pow2 *= kBase2;
  }
  std::uint64_t h1 = 0, h2 = 0;
  for (int i = 0; i < n; ++i) {
    h1 = h1 * kBase1 + text[i] + 1;
    h2 = h2 * kBase2 + text[i] + 1;
  }
  for (std::size_t pos = 0;; ++pos) {
    out[{h1, h2}] |= 1u << (pos % b);
    if (pos + n >= P) break;
    h1 = (h1 - (text[pos] + 1) * pow1) * kBase1 + text[pos + n] + 1;
    h2 = (h2 - (text[pos] + 1) * pow2) * kBase2 + text[pos + n] + 1;
  }
  return out;
}

}  // namespace

long long DecompositionParams::reconstruct(int b) const {
  long long pw = 1;
  for (int i = 0; i < p; ++i) pw *= b;
  return pw * (k - 1) + delta;
}

DecompositionParams decomposition(long long n, int b, int K) {
  if (b < 2 || K < 2) throw std::invalid_argument("decomposition: need b >= 2 and K >= 2");
  if (n < K) throw std::invalid_argument("decomposition: n must be >= K");
  // p = ceil(log_b(n / (K-1))) - 1 via integer search: the least e with
  // b^e (K-1) >= n, minus one.
  int e = 0;
  long long pw = 1;  // b^e
  while (pw * (K - 1) < n) {
    pw *= b;
    ++e;
  }
  DecompositionParams d;
  d.p = e - 1;
  const long long bp = pw / b;  // b^p
  d.k = (n + bp - 1) / bp;      // ceil(n / b^p)
  d.delta = n - bp * (d.k - 1);
  if (d.k < K || d.k > static_cast<long long>(b) * (K - 1) || d.delta < 1 || d.delta > bp ||
      d.reconstruct(b) != n)
    throw std::logic_error("decomposition: triplet out of range");
  return d;
}

FridContext::FridContext(const Morphism& phi, Letter seed, int index_depth,
                         long long scan_prefix_len)
    : phi_(phi), seed_(seed) {
  profile_ = substfreq::profile(phi_);
  if (!profile_.uniform_length)
    throw std::invalid_argument("FridContext: morphism is not uniform");
  if (!profile_.is_marked) throw std::invalid_argument("FridContext: morphism is not marked");
  if (!profile_.is_primitive)
    throw std::invalid_argument("FridContext: morphism is not primitive");
  b_ = *profile_.uniform_length;
  if (b_ < 2) throw std::invalid_argument("FridContext: image length must be >= 2");

  sync_delay_ = 2 * b_;
  // Least K with b(K-1)+1 >= L.
  ordering_number_ = 1 + (sync_delay_ - 2 + b_) / b_;
  base_max_len_ = b_ * (ordering_number_ - 1) + 1;

  const int depth = std::max(index_depth, base_max_len_ + 1);
  index_ = std::make_shared<const LanguageIndex>(build_index(phi_, seed_, depth));
  scan_prefix_ = fixed_point_prefix(phi_, seed_, static_cast<std::size_t>(scan_prefix_len));

  CircularityReport rep = verify_circularity(sync_delay_, std::min(depth, base_max_len_ + 1));
  if (!rep.all_circular)
    throw std::runtime_error("FridContext: fixed point is not circular at delay " +
                             std::to_string(sync_delay_) + "; counterexample " +
                             rep.counterexamples.front().str());
  solve_base();
}

std::set<int> FridContext::synchronization_points(const Word& w) const {
  if (w.empty() || !index_->contains(w))
    throw std::invalid_argument("synchronization_points: factor not in the language");
  const int n = static_cast<int>(w.size());
  auto masks = residue_masks(scan_prefix_, n, b_);
  auto it = masks.find(word_key(w));
  if (it == masks.end())
    throw std::runtime_error("synchronization_points: factor not observed in the scan prefix");
  const std::uint32_t mask = it->second;
  std::set<int> points;
  if ((mask & (mask - 1)) != 0) return points;  // several alignment classes
  int residue = 0;
  while (!(mask & (1u << residue))) ++residue;
  for (int c = 0; c <= n; ++c)
    if ((residue + c) % b_ == 0) points.insert(c);
  return points;
}

CircularityReport FridContext::verify_circularity(int delay, int check_up_to) const {
  if (delay < 1) throw std::invalid_argument("verify_circularity: delay must be >= 1");
  CircularityReport rep;
  for (int n = delay; n <= check_up_to; ++n) {
    auto masks = residue_masks(scan_prefix_, n, b_);
    for (const Word& w : index_->factors(n)) {
      auto it = masks.find(word_key(w));
      const std::uint32_t mask = it == masks.end() ? 0 : it->second;
      bool circular = false;
      if (mask != 0 && (mask & (mask - 1)) == 0) {
        int residue = 0;
        while (!(mask & (1u << residue))) ++residue;
        for (int c = 0; c <= n && !circular; ++c)
          if ((residue + c) % b_ == 0) circular = true;
      }
      if (!circular) {
        rep.all_circular = false;
        rep.counterexamples.push_back(w);
      }
    }
  }
  return rep;
}

std::vector<Interpretation> FridContext::interpretations(const Word& v) const {
  if (v.empty()) throw std::invalid_argument("interpretations: empty factor");
  if (!index_->contains(v))
    throw std::invalid_argument("interpretations: factor not in the language: " + v.str());
  const int b = b_;
  const int len = static_cast<int>(v.size());
  std::vector<Interpretation> out;
  for (int i = 0; i < b; ++i) {
    const int t = (i + len + b - 1) / b;  // ancestor length
    const int j = t * b - i - len;
    if (static_cast<std::size_t>(t) > static_cast<std::size_t>(index_->max_len()))
      throw std::out_of_range("interpretations: index depth too small for ancestor length " +
                              std::to_string(t));
    // Candidate letters per block; partial first/last blocks may admit
    // several, full blocks are unique because the morphism is marked.
    std::vector<std::vector<Letter>> candidates(t);
    bool feasible = true;
    for (int r = 0; r < t && feasible; ++r) {
      const int lo = std::max(r * b, i);
      const int hi = std::min((r + 1) * b, i + len);
      for (int c = 0; c < phi_.alphabet_size(); ++c) {
        const Word& img = phi_.image(static_cast<Letter>(c));
        bool match = true;
        for (int x = lo; x < hi && match; ++x)
          if (img[x - r * b] != v[x - i]) match = false;
        if (match) candidates[r].push_back(static_cast<Letter>(c));
      }
      if (candidates[r].empty()) feasible = false;
    }
    if (!feasible) continue;
    std::vector<std::size_t> pick(t, 0);
    while (true) {
      Word ancestor;
      ancestor.reserve(t);
      for (int r = 0; r < t; ++r) ancestor.push_back(candidates[r][pick[r]]);
      if (index_->contains(ancestor)) out.push_back({std::move(ancestor), i, j});
      int r = t - 1;
      while (r >= 0 && ++pick[r] == candidates[r].size()) pick[r--] = 0;
      if (r < 0) break;
    }
  }
  std::sort(out.begin(), out.end());
  return out;
}

void FridContext::solve_base() {
  // Unknowns: all factors of length 1..b(K-1)+1.
  std::map<Word, std::size_t> var;
  for (int n = 1; n <= base_max_len_; ++n)
    for (const Word& w : index_->factors(n)) var.emplace(w, var.size());

  LinearSystem sys;
  sys.cols = var.size();
  auto zero_row = [&] { return std::vector<Rational>(sys.cols, Rational(0)); };

  // Letter frequencies from the eigenvector.
  for (const Word& w : index_->factors(1)) {
    auto row = zero_row();
    row[var.at(w)] = 1;
    sys.add_row(std::move(row), profile_.letter_frequencies[w[0]], "letter " + w.str());
  }

  // rho(v) = (1/b) sum over interpretations of rho(ancestor).
  const Rational inv_b(1, b_);
  for (int n = 2; n <= base_max_len_; ++n) {
    for (const Word& v : index_->factors(n)) {
      auto row = zero_row();
      row[var.at(v)] = 1;
      for (const Interpretation& s : interpretations(v)) row[var.at(s.ancestor)] -= inv_b;
      sys.add_row(std::move(row), Rational(0), "interpretations " + v.str());
    }
  }

  // Kirchhoff rows and per-length normalization (redundant; consistency of
  // the whole system doubles as a language-index sanity check).
  for (int n = 1; n < base_max_len_; ++n) {
    for (const Word& w : index_->factors(n)) {
      const Extensions& e = index_->extensions(w);
      auto row = zero_row();
      row[var.at(w)] = 1;
      for (Letter a : e.right) {
        Word wa = w;
        wa.push_back(a);
        row[var.at(wa)] -= 1;
      }
      sys.add_row(std::move(row), Rational(0), "kirchhoff-right " + w.str());
      row = zero_row();
      row[var.at(w)] = 1;
      for (Letter a : e.left) {
        Word aw{a};
        aw.append(w);
        row[var.at(aw)] -= 1;
      }
      sys.add_row(std::move(row), Rational(0), "kirchhoff-left " + w.str());
    }
  }
  for (int n = 1; n <= base_max_len_; ++n) {
    auto row = zero_row();
    for (const Word& w : index_->factors(n)) row[var.at(w)] = 1;
    sys.add_row(std::move(row), Rational(1), "normalization length " + std::to_string(n));
  }

  SolveOutcome sol = solve_unique(sys);
  if (!sol.ok) throw std::runtime_error("FridContext: base frequency solve failed: " + sol.error);
  for (const auto& [w, idx] : var) {
    if (sol.solution[idx] <= 0)
      throw std::runtime_error("FridContext: non-positive frequency for factor " + w.str());
    base_.emplace(w, sol.solution[idx]);
  }
}

Rational FridContext::frequency(const Word& w) const {
  if (w.empty()) throw std::invalid_argument("frequency: empty factor");
  if (static_cast<int>(w.size()) <= base_max_len_) {
    auto it = base_.find(w);
    if (it == base_.end())
      throw std::invalid_argument("frequency: factor not in the language: " + w.str());
    return it->second;
  }
  {
    std::lock_guard<std::mutex> lock(memo_mutex_);
    auto it = memo_.find(w);
    if (it != memo_.end()) return it->second;
  }
  // |w| > b(K-1)+1 >= L, so w is circular and its interpretation is unique.
  auto interp = interpretations(w);
  if (interp.size() != 1)
    throw std::logic_error("frequency: expected a unique interpretation for " + w.str() +
                           ", found " + std::to_string(interp.size()));
  Rational value = frequency(interp.front().ancestor) / b_;
  std::lock_guard<std::mutex> lock(memo_mutex_);
  memo_.emplace(w, value);
  return value;
}

std::map<Rational, long long> FridContext::frequency_multiset(long long n) const {
  if (n < 0) throw std::invalid_argument("frequency_multiset: negative length");
  std::map<Rational, long long> out;
  if (n < ordering_number_) {
    for (const Word& w : index_->factors(static_cast<int>(n) + 1)) ++out[base_.at(w)];
    return out;
  }
  const DecompositionParams d = decomposition(n, b_, ordering_number_);
  long long bp = 1;
  for (int i = 0; i < d.p; ++i) bp *= b_;
  Rational scale(1, bp);
  for (const Word& v : index_->factors(static_cast<int>(d.k) + 1))
    out[base_.at(v) * scale] += d.delta;
  if (bp - d.delta > 0)
    for (const Word& v : index_->factors(static_cast<int>(d.k)))
      out[base_.at(v) * scale] += bp - d.delta;
  return out;
}

std::set<Rational> FridContext::distinct_frequencies(long long n) const {
  std::set<Rational> out;
  for (const auto& [value, count] : frequency_multiset(n)) out.insert(value);
  return out;
}

}  // namespace substfreq
