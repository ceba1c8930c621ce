#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "su2cert/intmath.hpp"
#include "su2cert/slopes.hpp"
#include "test_util.hpp"

using namespace su2cert;
using namespace su2cert::testutil;

TEST_CASE("slope normalization and ordering") {
  CHECK(Slope(10, 7).str() == "10/7");
  CHECK(Slope(-6, 4) == Slope(-3, 2));
  CHECK(Slope(6, -4) == Slope(-3, 2));
  CHECK(Slope::infinity().is_infinite());
  CHECK(Slope(5, 0) == Slope::infinity());
  CHECK_THROWS(Slope(0, 0));
  CHECK(Slope(1, 2) < Slope(2, 3));
  CHECK(Slope(-1, 2) < Slope(0, 1));
  CHECK(Slope(1000000, 1) < Slope::infinity());
  CHECK(Slope::from_string("7/2") == Slope(7, 2));
  CHECK(Slope::from_string("inf") == Slope::infinity());
  CHECK(Slope(7, 2).floor() == 3);
  CHECK(Slope(-7, 2).floor() == -4);
  CHECK(mediant(Slope(1, 2), Slope(2, 3)) == Slope(3, 5));
  CHECK(farey_neighbors(Slope(1, 2), Slope(2, 3)));
  CHECK(!farey_neighbors(Slope(1, 2), Slope(3, 4)));
}

TEST_CASE("positive continued fractions") {
  auto cf = positive_cf(Slope(7, 2), Integer(3));
  REQUIRE(cf.size() == 2);
  CHECK(cf[0] == 4);
  CHECK(cf[1] == 2);

  auto cf5 = positive_cf(Slope(5, 1), Integer(4));
  REQUIRE(cf5.size() == 1);
  CHECK(cf5[0] == 5);

  auto cf107 = positive_cf(Slope(10, 7), Integer(1));
  CHECK(eval_cf(cf107) == Slope(10, 7));
  CHECK(cf107[0] >= 2);
  for (size_t i = 1; i < cf107.size(); ++i) CHECK(cf107[i] >= 2);

  CHECK_THROWS(positive_cf(Slope(3, 1), Integer(3)));
}

TEST_CASE("negative continued fractions") {
  auto a = negative_cf(Slope(-3, 2));
  CHECK(a == std::vector<Integer>{-2, -2});
  auto b = negative_cf(Slope(-11, 9));
  CHECK(b == std::vector<Integer>{-2, -2, -2, -2, -3});
  auto c = negative_cf(Slope(-2, 1));
  CHECK(c == std::vector<Integer>{-2});
  CHECK_THROWS(negative_cf(Slope(-1, 1)));
  CHECK_THROWS(negative_cf(Slope(-1, 2)));
}

TEST_CASE("continued-fraction back-evaluation is the identity on random slopes") {
  auto rng = make_rng(77);
  for (int trial = 0; trial < 10000; ++trial) {
    long p = random_int(rng, 1, 400);
    long q = random_int(rng, 1, 120);
    Slope r(p, q);
    long n = random_int(rng, -3, 2);
    if (!(r > Slope(n, 1))) continue;
    auto cf = positive_cf(r, Integer(n));
    CHECK(eval_cf(cf) == r);
    CHECK(cf[0] >= n + 1);
    for (size_t i = 1; i < cf.size(); ++i) CHECK(cf[i] >= 2);

    Slope neg(-p - q, q);  // guaranteed < -1
    auto nf = negative_cf(neg);
    CHECK(eval_cf(nf) == neg);
    for (const auto& e : nf) CHECK(e <= -2);
  }
}

TEST_CASE("farey sequence: the 10/7 descent") {
  auto seq = farey_sequence(Slope(10, 7));
  REQUIRE(seq.size() == 7);
  CHECK(seq[0].value == Slope::infinity());
  CHECK(seq[1].value == Slope(1, 1));
  CHECK(seq[2].value == Slope(2, 1));
  CHECK(seq[3].value == Slope(3, 2));
  CHECK(seq[4].value == Slope(4, 3));
  CHECK(seq[5].value == Slope(7, 5));
  CHECK(seq[6].value == Slope(10, 7));
  REQUIRE(seq[6].parent.has_value());
  CHECK(*seq[6].parent == 3);
  CHECK(*seq[2].parent == 0);
  CHECK(*seq[3].parent == 1);
}

TEST_CASE("farey sequence: small cases") {
  auto a = farey_sequence(Slope(3, 2));
  REQUIRE(a.size() == 4);
  CHECK(a[3].value == Slope(3, 2));

  auto b = farey_sequence(Slope(5, 2));
  REQUIRE(b.size() == 4);
  CHECK(b[1].value == Slope(2, 1));
  CHECK(b[2].value == Slope(3, 1));
  CHECK(b[3].value == Slope(5, 2));

  CHECK_THROWS(farey_sequence(Slope(3, 1)));
  CHECK_THROWS(farey_sequence(Slope(-1, 2)));
  CHECK_THROWS(farey_sequence(Slope::infinity()));
}

TEST_CASE("farey sequence determinant conditions on random slopes") {
  auto rng = make_rng(101);
  for (int trial = 0; trial < 10000; ++trial) {
    long q = random_int(rng, 2, 60);
    long p = random_int(rng, 1, 240);
    if (gcd_long(p, q) != 1) continue;
    Slope r(p, q);
    if (r.is_integer()) continue;
    auto seq = farey_sequence(r);
    CHECK(seq.back().value == r);
    for (size_t i = 2; i < seq.size(); ++i) {
      REQUIRE(seq[i].parent.has_value());
      size_t j = *seq[i].parent;
      CHECK(j <= i - 2);
      const Slope& cur = seq[i].value;
      const Slope& prev = seq[i - 1].value;
      const Slope& par = seq[j].value;
      CHECK(cur == mediant(par, prev));
      CHECK(farey_neighbors(par, prev));
      CHECK(farey_neighbors(cur, prev));
      CHECK(farey_neighbors(cur, par));
      if (i >= 3) CHECK(seq[i].value.denominator() > seq[i - 1].value.denominator());
    }
  }
}

TEST_CASE("rank decomposition") {
  CHECK(rank_decompose(Integer(5), Integer(5)) == 0);
  CHECK(rank_decompose(Integer(3), Integer(7)) == 2);
  CHECK_THROWS(rank_decompose(Integer(4), Integer(7)));  // parity
  CHECK_THROWS(rank_decompose(Integer(5), Integer(3)));  // bound
  CHECK_THROWS(rank_decompose(Integer(0), Integer(2)));
}

TEST_CASE("triangle rank interval") {
  RankInterval i = triangle_rank_interval(Integer(1), Integer(6));
  CHECK(i.lo == 5);
  CHECK(i.hi == 7);

  RankInterval z = triangle_rank_interval(Integer(0), Integer(9));
  CHECK(z.lo == 9);
  CHECK(z.hi == 9);
  CHECK(z.values() == std::vector<Integer>{9});

  RankInterval t = triangle_rank_interval(Integer(2), Integer(2));
  CHECK(t.values() == std::vector<Integer>{0, 2, 4});
  CHECK(t.contains(Integer(2)));
  CHECK(!t.contains(Integer(3)));
}

TEST_CASE("gordon cable identities") {
  auto a = gordon_cable(1, 2, Slope(2, 1));
  CHECK(a.companion_slope == Slope(1, 2));
  REQUIRE(a.lens_summand.has_value());
  CHECK(a.lens_summand->first == 2);   // L(2,1), i.e. RP^3
  CHECK(a.lens_summand->second == 1);

  auto b = gordon_cable(2, 3, Slope(6, 1));
  CHECK(b.companion_slope == Slope(2, 3));
  REQUIRE(b.lens_summand.has_value());
  CHECK(b.lens_summand->first == 3);
  CHECK(b.lens_summand->second == 2);

  auto c = gordon_cable(1, 2, Slope(3, 1));
  CHECK(c.companion_slope == Slope(3, 4));
  CHECK(!c.lens_summand.has_value());

  CHECK_THROWS(gordon_cable(2, 3, Slope(9, 1)));
  CHECK_THROWS(gordon_cable(2, 4, Slope(8, 1)));
  CHECK_THROWS(gordon_cable(2, 3, Slope(13, 2)));
}

TEST_CASE("gordon cable preserves the first homology order") {
  for (long p = 1; p <= 12; ++p)
    for (long q = 1; q <= 12; ++q) {
      if (gcd_long(p, q) != 1) continue;
      {
        Integer m = Integer(p) * Integer(q);
        if (m != 0) {
          auto r = gordon_cable(p, q, Slope(m, Integer(1)));
          Integer h1 = abs(r.companion_slope.numerator());
          if (r.lens_summand) h1 *= r.lens_summand->first;
          CHECK(h1 == abs(m));
        }
      }
      for (long d : {-1, 1}) {
        Integer m = Integer(p) * Integer(q) + d;
        auto r = gordon_cable(p, q, Slope(m, Integer(1)));
        CHECK(!r.lens_summand.has_value());
        CHECK(abs(r.companion_slope.numerator()) == abs(m));
        CHECK(r.companion_slope.denominator() == Integer(q) * Integer(q));
      }
    }
}

TEST_CASE("kunneth and base ranks") {
  CHECK(kunneth_rank(Integer(3), Integer(2)) == 6);
  CHECK(kunneth_rank(Integer(5), Integer(1)) == 5);
  CHECK(lens_rank(Integer(5)) == 5);
  CHECK(rp3_rank() == 2);
  CHECK_THROWS(lens_rank(Integer(0)));
  // instance n = 1: (n+2)(n+1) = 6
  CHECK(kunneth_rank(Integer(3), lens_rank(Integer(2))) == 6);
}
