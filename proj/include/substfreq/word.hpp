#pragma once

#include <compare>
#include <cstddef>
#include <cstdint>
#include <initializer_list>
#include <string>
#include <string_view>
#include <vector>

namespace substfreq {

// Letters are residues mod m. The alphabet size m travels with the morphism,
// not with every word; words only promise their letters were validated at
// construction time.
using Letter = std::uint8_t;

char letter_char(Letter a);
Letter letter_from_char(char c, int alphabet_size);
Letter reduce_mod(long long v, int alphabet_size);

class Word {
 public:
  Word() = default;
  explicit Word(std::vector<Letter> letters) : letters_(std::move(letters)) {}
  Word(std::initializer_list<Letter> letters) : letters_(letters) {}

  static Word parse(std::string_view text, int alphabet_size);

  std::size_t size() const { return letters_.size(); }
  bool empty() const { return letters_.empty(); }
  Letter operator[](std::size_t i) const { return letters_[i]; }
  Letter front() const { return letters_.front(); }
  Letter back() const { return letters_.back(); }

  void push_back(Letter a) { letters_.push_back(a); }
  void reserve(std::size_t n) { letters_.reserve(n); }
  void append(const Word& w);
  Word subword(std::size_t pos, std::size_t len) const;
  Word prefix(std::size_t len) const { return subword(0, len); }
  Word suffix(std::size_t len) const { return subword(size() - len, len); }
  Word reversed() const;

  std::string str() const;
  const std::vector<Letter>& letters() const { return letters_; }

  auto operator<=>(const Word&) const = default;

 private:
  std::vector<Letter> letters_;
};

Word operator+(const Word& a, const Word& b);

struct WordHash {
  std::size_t operator()(const Word& w) const noexcept;
};

}  // namespace substfreq
