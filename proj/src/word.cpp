#include "substfreq/word.hpp"

#include <stdexcept>

namespace substfreq {

char letter_char(Letter a) {
  if (a < 10) return static_cast<char>('0' + a);
  if (a < 36) return static_cast<char>('a' + (a - 10));
  throw std::invalid_argument("letter_char: letter value out of printable range");
}

Letter letter_from_char(char c, int alphabet_size) {
  int v;
  if (c >= '0' && c <= '9')
    v = c - '0';
  else if (c >= 'a' && c <= 'z')
    v = 10 + (c - 'a');
  else
    throw std::invalid_argument(std::string("letter_from_char: bad character '") + c + "'");
  if (v >= alphabet_size)
    throw std::invalid_argument(std::string("letter_from_char: '") + c + "' outside alphabet");
  return static_cast<Letter>(v);
}

Letter reduce_mod(long long v, int alphabet_size) {
  if (alphabet_size < 1) throw std::invalid_argument("reduce_mod: alphabet size < 1");
  long long r = v % alphabet_size;
  if (r < 0) r += alphabet_size;
  return static_cast<Letter>(r);
}

Word Word::parse(std::string_view text, int alphabet_size) {
  std::vector<Letter> letters;
  letters.reserve(text.size());
  for (char c : text) letters.push_back(letter_from_char(c, alphabet_size));
  return Word(std::move(letters));
}

void Word::append(const Word& w) {
  letters_.insert(letters_.end(), w.letters_.begin(), w.letters_.end());
}

Word Word::subword(std::size_t pos, std::size_t len) const {
  if (pos + len > letters_.size()) throw std::out_of_range("Word::subword: range out of bounds");
  return Word(std::vector<Letter>(letters_.begin() + pos, letters_.begin() + pos + len));
}

Word Word::reversed() const {
  return Word(std::vector<Letter>(letters_.rbegin(), letters_.rend()));
}

std::string Word::str() const {
  std::string s;
  s.reserve(letters_.size());
  for (Letter a : letters_) s.push_back(letter_char(a));
  return s;
}

Word operator+(const Word& a, const Word& b) {
  Word r = a;
  r.append(b);
  return r;
}

std::size_t WordHash::operator()(const Word& w) const noexcept {
  // FNV-1a over the letter bytes.
  std::size_t h = 1469598103934665603ULL;
  for (Letter a : w.letters()) {
    h ^= static_cast<std::size_t>(a);
    h *= 1099511628211ULL;
  }
  return h;
}

}  // namespace substfreq
