#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include "doctest.h"

#include "substfreq/rational.hpp"
#include "substfreq/word.hpp"

using namespace substfreq;

TEST_CASE("fraction rendering keeps the denominator") {
  CHECK(fraction_string(Rational(1, 3)) == "1/3");
  CHECK(fraction_string(Rational(0)) == "0/1");
  CHECK(fraction_string(Rational(-2, 4)) == "-1/2");
  CHECK(abs_value(Rational(-1, 6)) == Rational(1, 6));
}

TEST_CASE("parse and render round-trip") {
  const Word w = Word::parse("0121", 3);
  CHECK(w.size() == 4);
  CHECK(w.str() == "0121");
  CHECK(w[2] == 2);
  CHECK_THROWS(Word::parse("03", 3));
  CHECK_THROWS(Word::parse("0x", 3));
}

TEST_CASE("subword, prefix, suffix, reversal") {
  const Word w = Word::parse("01234", 10);
  CHECK(w.subword(1, 3).str() == "123");
  CHECK(w.prefix(2).str() == "01");
  CHECK(w.suffix(2).str() == "34");
  CHECK(w.reversed().str() == "43210");
  CHECK_THROWS(w.subword(3, 5));
}

TEST_CASE("concatenation and ordering") {
  const Word a = Word::parse("01", 2);
  const Word b = Word::parse("10", 2);
  CHECK((a + b).str() == "0110");
  CHECK(a < b);
  CHECK(a == Word::parse("01", 2));
}

TEST_CASE("letters reduce mod m") {
  CHECK(reduce_mod(-1, 3) == 2);
  CHECK(reduce_mod(7, 3) == 1);
  CHECK(reduce_mod(-5, 2) == 1);
  CHECK(letter_char(10) == 'a');
  CHECK(letter_from_char('a', 12) == 10);
}
