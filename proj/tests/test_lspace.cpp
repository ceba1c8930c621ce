#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "su2cert/lspace.hpp"
#include "test_util.hpp"

using namespace su2cert;
using namespace su2cert::testutil;

namespace {

RatPoly tpoly(std::initializer_list<std::pair<long, long>> terms) {
  RatPoly p("t");
  for (auto [e, c] : terms) p.set(e, Rational(c));
  return p;
}

}  // namespace

TEST_CASE("L-space at 1/2 on a nontrivial knot contradicts") {
  LSpaceKB kb;
  kb.knot.nontrivial = true;
  kb.assert_lspace(Slope(1, 2));
  kb.deduce();
  REQUIRE(kb.contradicted());
  // the excluded-interval rule carries the citation
  bool cites = false;
  for (size_t i : {kb.conflict()->fact_a, kb.conflict()->fact_b}) {
    const auto& rule = kb.facts()[i].how.rule;
    cites = cites || rule == "below-one-excluded" || rule == "half-slope-excluded";
  }
  CHECK(cites);
}

TEST_CASE("any L-space slope in (0,1) on a nontrivial knot contradicts") {
  for (auto s : {Slope(1, 3), Slope(2, 3), Slope(99, 100), Slope(5, 7)}) {
    LSpaceKB kb;
    kb.knot.nontrivial = true;
    kb.assert_lspace(s);
    kb.deduce();
    CHECK(kb.contradicted());
  }
}

TEST_CASE("L-space at 7/2 spreads to every slope at and above 3") {
  LSpaceKB kb;
  kb.knot.nontrivial = true;
  kb.assert_lspace(Slope(7, 2));
  kb.deduce();
  REQUIRE(!kb.contradicted());
  CHECK(kb.lspace_status(Slope(3, 1)) == LSpaceStatus::yes);
  CHECK(kb.lspace_status(Slope(7, 2)) == LSpaceStatus::yes);
  for (auto s : {Slope(10, 3), Slope(4, 1), Slope(22, 7), Slope(1001, 13), Slope(3000001, 1000000)})
    CHECK(kb.lspace_status(s) == LSpaceStatus::yes);
  // below the derived threshold nothing is claimed positively...
  CHECK(kb.lspace_status(Slope(5, 2)) == LSpaceStatus::unknown);
  // ...and the small slopes stay excluded
  CHECK(kb.lspace_status(Slope(1, 2)) == LSpaceStatus::no);
}

TEST_CASE("genus >= 2 contradicts an L-space at 3/2") {
  LSpaceKB kb;
  kb.knot.nontrivial = true;
  kb.knot.genus = 2;
  kb.assert_lspace(Slope(3, 2));
  kb.deduce();
  REQUIRE(kb.contradicted());
  bool cites_genus = false;
  for (size_t i : {kb.conflict()->fact_a, kb.conflict()->fact_b})
    cites_genus |= kb.facts()[i].how.rule == "genus-ge-2-window";
  cites_genus |= kb.conflict()->note.find("small-slope-dichotomy") != std::string::npos;
  CHECK(cites_genus);
}

TEST_CASE("alexander polynomial outside the dichotomy contradicts at 3/2") {
  LSpaceKB kb;
  kb.knot.nontrivial = true;
  kb.knot.alexander = tpoly({{1, 2}, {0, -3}, {-1, 2}});
  kb.assert_lspace(Slope(3, 2));
  kb.deduce();
  REQUIRE(kb.contradicted());
  CHECK(kb.conflict()->note.find("small-slope-dichotomy") != std::string::npos);
}

TEST_CASE("dichotomy admits the two allowed polynomials") {
  CHECK(alexander_in_small_slope_dichotomy(tpoly({{1, 1}, {0, -1}, {-1, 1}})));
  CHECK(alexander_in_small_slope_dichotomy(tpoly({{1, -1}, {0, 3}, {-1, -1}})));
  CHECK(!alexander_in_small_slope_dichotomy(tpoly({{1, 2}, {0, -3}, {-1, 2}})));

  LSpaceKB kb;
  kb.knot.nontrivial = true;
  kb.knot.genus = 1;
  kb.knot.alexander = tpoly({{1, 1}, {0, -1}, {-1, 1}});
  kb.assert_lspace(Slope(3, 2));
  kb.deduce();
  CHECK(!kb.contradicted());
}

TEST_CASE("rank facts split by the euler characteristic") {
  LSpaceKB kb;
  kb.assert_rank(Slope(5, 1), Integer(5), true);
  kb.deduce();
  CHECK(kb.lspace_status(Slope(5, 1)) == LSpaceStatus::yes);
  CHECK(kb.lspace_status(Slope(11, 2)) == LSpaceStatus::yes);  // ladder from 5

  LSpaceKB kb2;
  kb2.assert_rank(Slope(3, 1), Integer(7), true);
  kb2.deduce();
  CHECK(kb2.lspace_status(Slope(3, 1)) == LSpaceStatus::no);

  LSpaceKB kb3;
  kb3.assert_rank(Slope(4, 1), Integer(7), true);  // parity violation
  kb3.deduce();
  CHECK(kb3.contradicted());
}

TEST_CASE("rank lower bounds exceeding the homology order exclude L-spaces") {
  LSpaceKB kb;
  kb.assert_rank(Slope(4, 1), Integer(5), false);
  kb.deduce();
  CHECK(kb.lspace_status(Slope(4, 1)) == LSpaceStatus::no);

  // bound equal to the order says nothing
  LSpaceKB kb2;
  kb2.assert_rank(Slope(4, 1), Integer(4), false);
  kb2.deduce();
  CHECK(kb2.lspace_status(Slope(4, 1)) == LSpaceStatus::unknown);
}

TEST_CASE("interval rule below one collides with the exclusion window") {
  LSpaceKB kb;
  kb.knot.nontrivial = true;
  kb.assert_lspace(Slope(3, 4));  // m = max(floor(3), 1) = 3 -> [3/4, 1]
  kb.deduce();
  REQUIRE(kb.contradicted());
}

TEST_CASE("deduction is monotone and idempotent") {
  LSpaceKB kb;
  kb.knot.nontrivial = true;
  kb.assert_lspace(Slope(7, 2));
  kb.deduce();
  size_t n1 = kb.facts().size();
  kb.deduce();
  CHECK(kb.facts().size() == n1);

  // adding another fact only grows the store
  kb.assert_lspace(Slope(9, 1));
  kb.deduce();
  CHECK(kb.facts().size() >= n1 + 1);
  CHECK(!kb.contradicted());

  LSpaceKB closed = lspace_deduce(kb);
  CHECK(closed.facts().size() == kb.facts().size());
}

TEST_CASE("surgery triangle interacts with the three-sphere rank") {
  // rank 3 at slope 1 and rank 1 at infinity force rank >= 2 at slope 2;
  // no excess there, so nothing is claimed. But a rank-9 fact at slope 1
  // with rank 1 at infinity forces rank >= 8 > 2 at the mediant 2/1.
  LSpaceKB kb;
  kb.assert_rank(Slope(1, 1), Integer(9), true);
  kb.deduce();
  CHECK(kb.lspace_status(Slope(2, 1)) == LSpaceStatus::no);
}

TEST_CASE("conflicting exact ranks are reported") {
  LSpaceKB kb;
  kb.assert_rank(Slope(3, 1), Integer(3), true);
  kb.assert_rank(Slope(3, 1), Integer(5), true);
  kb.deduce();
  CHECK(kb.contradicted());
}

TEST_CASE("trace includes derivations and chains") {
  LSpaceKB kb;
  kb.knot.nontrivial = true;
  kb.assert_lspace(Slope(7, 2));
  kb.deduce();
  std::string t = kb.trace();
  CHECK(t.find("L-space at 7/2") != std::string::npos);
  CHECK(t.find("floor-step") != std::string::npos);
  CHECK(t.find("integer-ladder") != std::string::npos);

  LSpaceKB bad;
  bad.knot.nontrivial = true;
  bad.assert_lspace(Slope(1, 2));
  bad.deduce();
  CHECK(bad.trace().find("CONTRADICTION") != std::string::npos);
}
