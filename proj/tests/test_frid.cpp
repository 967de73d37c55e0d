#include "doctest.h"

#include "substfreq/frid.hpp"

using namespace substfreq;

TEST_CASE("decomposition formula matches exhaustive search") {
  for (int b : {2, 3, 4}) {
    for (long long n = 3; n <= 500; ++n) {
      const DecompositionParams d = decomposition(n, b, 3);
      CHECK(d.reconstruct(b) == n);
      CHECK(d.k >= 3);
      CHECK(d.k <= 2 * b);
      CHECK(d.delta >= 1);
    }
  }
  const DecompositionParams d = decomposition(7, 2, 3);
  CHECK(d.p == 1);
  CHECK(d.k == 4);
  CHECK(d.delta == 1);
  CHECK_THROWS(decomposition(2, 2, 3));
}

TEST_CASE("context rejects unsuitable morphisms") {
  // non-marked
  CHECK_THROWS(FridContext(Morphism(2, {Word::parse("01", 2), Word::parse("00", 2)}), 0, 8));
  // periodic t_{3,2} is not circular
  CHECK_THROWS(FridContext(gtm_morphism(3, 2), 0, 8));
}

TEST_CASE("synchronization points of t_{2,2} factors") {
  const FridContext ctx(gtm_morphism(2, 2), 0, 12);
  CHECK(ctx.image_length() == 2);
  CHECK(ctx.sync_delay() == 4);
  CHECK(ctx.ordering_number() == 3);
  CHECK(ctx.base_max_len() == 5);
  // 00 occurs only at odd positions, so the image boundary sits after its
  // first letter.
  CHECK(ctx.synchronization_points(Word::parse("00", 2)) == std::set<int>{1});
  // 0110 = phi(01) only occurs image-aligned.
  CHECK(ctx.synchronization_points(Word::parse("0110", 2)) == std::set<int>{0, 2, 4});
  const CircularityReport rep = ctx.verify_circularity(4, 6);
  CHECK(rep.all_circular);
  CHECK(rep.counterexamples.empty());
}

TEST_CASE("interpretations of 1001 in t_{2,2}") {
  const FridContext ctx(gtm_morphism(2, 2), 0, 12);
  const auto interp = ctx.interpretations(Word::parse("1001", 2));
  REQUIRE(interp.size() == 1);
  CHECK(interp[0].ancestor == Word::parse("10", 2));
  CHECK(interp[0].left_cut == 0);
  CHECK(interp[0].right_cut == 0);
}

TEST_CASE("base frequencies of t_{2,2} reproduce the worked example") {
  const FridContext ctx(gtm_morphism(2, 2), 0, 12);
  const auto& base = ctx.base_frequencies();
  CHECK(base.at(Word::parse("0", 2)) == Rational(1, 2));
  CHECK(base.at(Word::parse("01", 2)) == Rational(1, 3));
  CHECK(base.at(Word::parse("00", 2)) == Rational(1, 6));
  CHECK(base.at(Word::parse("010", 2)) == Rational(1, 6));
  CHECK(base.at(Word::parse("0011", 2)) == Rational(1, 12));
  CHECK(base.at(Word::parse("0101", 2)) == Rational(1, 12));
  CHECK(base.at(Word::parse("0010", 2)) == Rational(1, 12));
}

TEST_CASE("base frequencies of t_{2,3} and t_{3,3}") {
  const FridContext c23(gtm_morphism(2, 3), 0, 8);
  CHECK(c23.frequency(Word::parse("20", 3)) == Rational(4, 21));
  CHECK(c23.frequency(Word::parse("00", 3)) == Rational(2, 21));
  CHECK(c23.frequency(Word::parse("10", 3)) == Rational(1, 21));
  CHECK(c23.frequency(Word::parse("012", 3)) == Rational(1, 21));

  const FridContext c33(gtm_morphism(3, 3), 0, 8);
  CHECK(c33.frequency(Word::parse("01", 3)) == Rational(3, 13));
  CHECK(c33.frequency(Word::parse("012", 3)) == Rational(5, 39));
  CHECK(c33.frequency(Word::parse("00", 3)) == Rational(1, 39));
  CHECK(c33.frequency(Word::parse("11", 3)) == Rational(1, 39));
}

TEST_CASE("frequency recursion beyond the base lengths") {
  const FridContext ctx(gtm_morphism(2, 2), 0, 20);
  // phi(0110) = 01101001 with unique interpretation, so rho = rho(0110)/2
  CHECK(ctx.frequency(Word::parse("01101001", 2)) ==
        ctx.frequency(Word::parse("0110", 2)) / 2);
  Rational total = 0;
  for (const Word& w : ctx.index().factors(8)) total += ctx.frequency(w);
  CHECK(total == Rational(1));
}

TEST_CASE("frequency multisets of t_{2,2}") {
  const FridContext ctx(gtm_morphism(2, 2), 0, 12);
  const auto m2 = ctx.frequency_multiset(2);
  REQUIRE(m2.size() == 1);
  CHECK(m2.at(Rational(1, 6)) == 6);

  const auto m4 = ctx.frequency_multiset(4);
  REQUIRE(m4.size() == 1);
  CHECK(m4.at(Rational(1, 12)) == 12);

  const auto m5 = ctx.frequency_multiset(5);
  REQUIRE(m5.size() == 2);
  CHECK(m5.at(Rational(1, 12)) == 8);
  CHECK(m5.at(Rational(1, 24)) == 8);
  CHECK(ctx.distinct_frequencies(5) == std::set<Rational>{Rational(1, 12), Rational(1, 24)});

  for (long long n = 0; n <= 64; ++n) {
    Rational total = 0;
    long long words = 0;
    for (const auto& [v, c] : ctx.frequency_multiset(n)) {
      total += v * Rational(c);
      words += c;
    }
    CHECK(total == Rational(1));
    if (n <= 7) CHECK(words == ctx.index().complexity(static_cast<int>(n) + 1));
  }
}
