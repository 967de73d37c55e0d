#include "doctest.h"

#include <set>

#include "substfreq/symmetry.hpp"

using namespace substfreq;

TEST_CASE("group structure of D_m") {
  for (int m : {2, 3, 4}) {
    const auto g = dihedral_group(m);
    REQUIRE(g.size() == static_cast<std::size_t>(2 * m));
    std::set<GroupElement> elems(g.begin(), g.end());
    CHECK(elems.size() == g.size());
    // closure and antimorphism involutions
    for (const GroupElement& a : g) {
      for (const GroupElement& b : g) CHECK(elems.count(compose(a, b, m)) == 1);
      if (a.antimorphic) CHECK(compose(a, a, m) == GroupElement{false, 0});
    }
  }
}

TEST_CASE("element action") {
  const Word w = Word::parse("012", 3);
  CHECK(apply_element({false, 1}, w, 3).str() == "120");
  CHECK(apply_element({true, 0}, w, 3).str() == "120");
  CHECK(apply_element({true, 2}, w, 3).str() == "012");  // 012 is a Psi_2 palindrome
  // composition consistency: (g o h)(w) == g(h(w))
  for (int sa = 0; sa < 3; ++sa)
    for (int sb = 0; sb < 3; ++sb)
      for (bool aa : {false, true})
        for (bool ab : {false, true}) {
          const GroupElement g{aa, static_cast<Letter>(sa)}, h{ab, static_cast<Letter>(sb)};
          CHECK(apply_element(compose(g, h, 3), w, 3) ==
                apply_element(g, apply_element(h, w, 3), 3));
        }
}

TEST_CASE("language invariance and orbits for t_{2,3}") {
  const FridContext ctx(gtm_morphism(2, 3), 0, 10);
  const auto group = dihedral_group(3);
  for (int n = 1; n <= 6; ++n) CHECK(verify_invariance(ctx.index(), group, n));

  const auto orbits = frequency_orbits(ctx.index(), frid_source(ctx), group, 2);
  long long covered = 0;
  for (const auto& orbit : orbits) {
    covered += static_cast<long long>(orbit.size());
    const Rational ref = ctx.frequency(orbit.front());
    for (const Word& w : orbit) CHECK(ctx.frequency(w) == ref);
  }
  CHECK(covered == ctx.index().complexity(2));
}

TEST_CASE("pointwise invariance of frequencies") {
  const FridContext ctx(gtm_morphism(3, 3), 0, 10);
  const auto group = dihedral_group(3);
  for (int n = 1; n <= 8; ++n)
    for (const Word& w : ctx.index().factors(n))
      for (const GroupElement& g : group)
        CHECK(ctx.frequency(apply_element(g, w, 3)) == ctx.frequency(w));
}

TEST_CASE("upper bound report for t_{2,2} at n=6") {
  const FridContext ctx(gtm_morphism(2, 2), 0, 10);
  const auto group = dihedral_group(2);
  const UpperBoundReport rep = upper_bound_report(ctx.index(), frid_source(ctx), group, 6);
  CHECK(rep.complexity_gap == 4);
  CHECK(rep.group_size == 4);
  CHECK(rep.bs_count == 2);
  CHECK(rep.palindromic_bs_count == 2);
  CHECK(rep.bound == Rational(4));
  // at n = (2b-1)b^1 = 6 the b=2 value sets collapse to two entries
  CHECK(rep.observed == 2);
}

TEST_CASE("upper bound report for t_{3,4} at n=5") {
  const FridContext ctx(gtm_morphism(3, 4), 0, 10);
  const auto group = dihedral_group(4);
  const UpperBoundReport rep = upper_bound_report(ctx.index(), frid_source(ctx), group, 5);
  CHECK(rep.complexity_gap == 8);
  CHECK(rep.group_size == 8);
  CHECK(rep.bs_count == 4);
  CHECK(rep.palindromic_bs_count == 4);
  CHECK(rep.bound == Rational(4));
  CHECK(rep.observed == 3);
}
