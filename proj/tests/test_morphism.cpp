#include "doctest.h"

#include "substfreq/morphism.hpp"

using namespace substfreq;

TEST_CASE("gtm images are shifted runs") {
  const Morphism phi = gtm_morphism(2, 2);
  CHECK(phi.image(0).str() == "01");
  CHECK(phi.image(1).str() == "10");
  const Morphism psi = gtm_morphism(3, 4);
  CHECK(psi.image(0).str() == "012");
  CHECK(psi.image(2).str() == "230");
  CHECK(psi.image(3).str() == "301");
  CHECK_THROWS(gtm_morphism(1, 2));
}

TEST_CASE("apply concatenates images") {
  const Morphism phi = gtm_morphism(2, 3);
  CHECK(apply(phi, Word::parse("012", 3)).str() == "011220");
  CHECK(apply(phi, Word{}).empty());
}

TEST_CASE("fixed point prefixes") {
  CHECK(fixed_point_prefix(gtm_morphism(2, 2), 0, 16).str() == "0110100110010110");
  CHECK(fixed_point_prefix(gtm_morphism(2, 3), 0, 8).str() == "01121220");
  CHECK(fixed_point_prefix(gtm_morphism(3, 2), 0, 6).str() == "010101");
  // seed 1 of t_{2,2}: the exchanged word.
  CHECK(fixed_point_prefix(gtm_morphism(2, 2), 1, 8).str() == "10010110");
}

TEST_CASE("prefix is consistent under phi") {
  const Morphism phi = gtm_morphism(3, 3);
  const Word p = fixed_point_prefix(phi, 0, 81);
  CHECK(apply(phi, p.prefix(27)) == p);
}

TEST_CASE("occurrence counting overlaps") {
  const Word t = Word::parse("0110100110010110", 2);
  CHECK(count_occurrences(t, Word::parse("0", 2)) == 8);
  CHECK(count_occurrences(t, Word::parse("0110", 2)) == 3);
  CHECK(count_occurrences(t, Word::parse("00", 2)) == 2);
  CHECK(count_occurrences(t, Word::parse("0000", 2)) == 0);
  CHECK_THROWS(count_occurrences(t, Word{}));
}
