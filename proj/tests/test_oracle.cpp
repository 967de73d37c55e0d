#include "doctest.h"

#include "substfreq/frid.hpp"
#include "substfreq/oracle.hpp"

using namespace substfreq;

TEST_CASE("window counts on a tiny word") {
  const Word w = Word::parse("010101", 2);
  const auto counts = window_counts(w, 2);
  CHECK(counts.at(Word::parse("01", 2)) == 3);
  CHECK(counts.at(Word::parse("10", 2)) == 2);
  CHECK(counts.size() == 2);
  CHECK(window_counts(w, 7).empty());
}

TEST_CASE("periodic word estimates are exact fractions of the window count") {
  const EstimateReport rep = estimate(gtm_morphism(3, 2), 0, 2, 10000);
  CHECK(rep.counts.at(Word::parse("01", 2)) == 5000);
  CHECK(rep.counts.at(Word::parse("10", 2)) == 4999);
  CHECK(rep.estimates.at(Word::parse("01", 2)) == Rational(5000, 9999));
  Rational total = 0;
  for (const auto& [w, e] : rep.estimates) total += e;
  CHECK(total == Rational(1));
}

TEST_CASE("chunked counting is identical to single-scan") {
  const Word prefix = fixed_point_prefix(gtm_morphism(2, 3), 0, 1 << 16);
  for (int n : {1, 3, 9, 40}) {
    const auto single = window_counts(prefix, n, 1);
    const auto chunked = window_counts(prefix, n, 7);
    CHECK(single.size() == chunked.size());
    for (const auto& [w, c] : single) CHECK(chunked.at(w) == c);
  }
}

TEST_CASE("long windows fall back to hashing and stay exact") {
  const Word prefix = fixed_point_prefix(gtm_morphism(2, 2), 0, 1 << 14);
  const int n = 70;  // 2^70 does not pack into 64 bits
  const auto counts = window_counts(prefix, n, 3);
  long long total = 0;
  for (const auto& [w, c] : counts) {
    CHECK(w.size() == static_cast<std::size_t>(n));
    CHECK(count_occurrences(prefix, w) == c);
    total += c;
  }
  CHECK(total == static_cast<long long>(prefix.size()) - n + 1);
}

TEST_CASE("estimates converge to the exact frequencies") {
  const FridContext frid(gtm_morphism(2, 2), 0, 8);
  std::map<Word, Rational> exact;
  for (const Word& w : frid.index().factors(3)) exact.emplace(w, frid.frequency(w));
  const auto errors = convergence_scan(gtm_morphism(2, 2), 0, 3,
                                       {1 << 10, 1 << 14, 1 << 18}, exact);
  REQUIRE(errors.size() == 3);
  CHECK(errors.back() < Rational(1, 1000));
  CHECK(errors.back() <= errors.front());
}

TEST_CASE("n larger than the prefix yields an empty report") {
  const EstimateReport rep = estimate(gtm_morphism(2, 2), 0, 50, 10);
  CHECK(rep.counts.empty());
  CHECK(rep.estimates.empty());
  CHECK(rep.max_abs_error == Rational(0));
}
