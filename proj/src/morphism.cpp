#include "substfreq/morphism.hpp"

#include <stdexcept>

namespace substfreq {

Morphism::Morphism(int alphabet_size, std::vector<Word> images)
    : m_(alphabet_size), images_(std::move(images)) {
  if (m_ < 1) throw std::invalid_argument("Morphism: alphabet size must be >= 1");
  if (images_.size() != static_cast<std::size_t>(m_))
    throw std::invalid_argument("Morphism: need exactly one image per letter");
  for (const Word& img : images_) {
    if (img.empty()) throw std::invalid_argument("Morphism: empty letter image");
    for (Letter a : img.letters())
      if (a >= m_) throw std::invalid_argument("Morphism: image letter outside alphabet");
  }
}

Morphism gtm_morphism(int b, int m) {
  if (b < 2) throw std::invalid_argument("gtm_morphism: b must be >= 2");
  if (m < 1) throw std::invalid_argument("gtm_morphism: m must be >= 1");
  std::vector<Word> images;
  images.reserve(m);
  for (int k = 0; k < m; ++k) {
    Word img;
    img.reserve(b);
    for (int i = 0; i < b; ++i) img.push_back(reduce_mod(k + i, m));
    images.push_back(std::move(img));
  }
  return Morphism(m, std::move(images));
}

Word apply(const Morphism& phi, const Word& w) {
  std::size_t total = 0;
  for (Letter a : w.letters()) {
    if (a >= phi.alphabet_size()) throw std::invalid_argument("apply: letter outside alphabet");
    total += phi.image(a).size();
  }
  Word out;
  out.reserve(total);
  for (Letter a : w.letters()) out.append(phi.image(a));
  return out;
}

Word fixed_point_prefix(const Morphism& phi, Letter seed, std::size_t len) {
  if (seed >= phi.alphabet_size())
    throw std::invalid_argument("fixed_point_prefix: seed outside alphabet");
  const Word& seed_img = phi.image(seed);
  if (seed_img.size() < 2 || seed_img[0] != seed)
    throw std::invalid_argument("fixed_point_prefix: seed is not prolongable");
  Word cur{seed};
  // phi(u[0..n)) is a prefix of u, so truncating between rounds is safe and
  // keeps memory proportional to len.
  while (cur.size() < len) {
    Word next = apply(phi, cur);
    if (next.size() > len) next = next.prefix(len);
    if (next.size() <= cur.size())
      throw std::invalid_argument("fixed_point_prefix: morphism does not expand the seed");
    cur = std::move(next);
  }
  return cur.prefix(len);
}

long long count_occurrences(const Word& text, const Word& pattern) {
  if (pattern.empty()) throw std::invalid_argument("count_occurrences: empty pattern");
  if (pattern.size() > text.size()) return 0;
  const auto& t = text.letters();
  const auto& p = pattern.letters();
  long long count = 0;
  for (std::size_t pos = 0; pos + p.size() <= t.size(); ++pos) {
    bool hit = true;
    for (std::size_t i = 0; i < p.size(); ++i) {
      if (t[pos + i] != p[i]) {
        hit = false;
        break;
      }
    }
    if (hit) ++count;
  }
  return count;
}

}  // namespace substfreq
