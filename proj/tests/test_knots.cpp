#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "su2cert/intmath.hpp"
#include "su2cert/knots.hpp"
#include "test_util.hpp"

using namespace su2cert;
using namespace su2cert::testutil;

namespace {

RatPoly zp(std::initializer_list<std::pair<long, long>> terms) {
  RatPoly p("z");
  for (auto [e, c] : terms) p.set(e, Rational(c));
  return p;
}

RatPoly tp(std::initializer_list<std::pair<long, long>> terms) {
  RatPoly p("t");
  for (auto [e, c] : terms) p.set(e, Rational(c));
  return p;
}

}  // namespace

TEST_CASE("conway to alexander") {
  CHECK(conway_to_alexander(zp({{0, 1}})) == tp({{0, 1}}));
  CHECK(conway_to_alexander(zp({{0, 1}, {2, 1}})) == tp({{1, 1}, {0, -1}, {-1, 1}}));
  CHECK(conway_to_alexander(zp({{0, 1}, {4, -1}})) ==
        tp({{2, -1}, {1, 4}, {0, -5}, {-1, 4}, {-2, -1}}));
  CHECK_THROWS(conway_to_alexander(zp({{1, 1}})));  // odd power

  auto rng = make_rng(3);
  for (int trial = 0; trial < 100; ++trial) {
    RatPoly conway("z");
    for (long e = 0; e <= 4; ++e) {
      long c = random_int(rng, -4, 4);
      if (c) conway.set(2 * e, Rational(c));
    }
    RatPoly delta = conway_to_alexander(conway);
    CHECK(delta.eval(Rational(1)) == conway.coeff(0));
    CHECK(delta.is_symmetric());
    CHECK(alexander_to_conway(delta) == conway);  // round trip
  }
}

TEST_CASE("phi1 of plain polynomials") {
  CHECK(phi1(zp({{0, 1}, {4, -1}}), 1) == Rational(0));
  CHECK(phi1(zp({{0, 1}, {4, -5}, {6, -3}}), 1) == Rational(0));
  CHECK(phi1(zp({{0, 1}, {2, 7}}), 1) == Rational(7));
  CHECK(phi1(zp({{1, 2}, {3, 5}}), 2) == Rational(5));
  CHECK_THROWS(phi1(zp({{0, 1}}), 2));       // parity violation for 2 components
  CHECK_THROWS(phi1(zp({{-2, 1}}), 1));      // negative exponent
}

TEST_CASE("hoste surgery formula") {
  CHECK(hoste_casson(3, 7, Rational(0), Rational(0), Rational(0)) == Rational(0));
  CHECK(hoste_casson(1, 1, Rational(1), Rational(0), Rational(0)) == Rational(-1));
  CHECK(hoste_casson(2, 3, Rational(1), Rational(1), Rational(1)) == Rational(1));

  // bilinearity: lambda(m,n) + lambda(0,0) = lambda(m,0) + lambda(0,n) + mn*phi1(L)
  auto rng = make_rng(17);
  for (int trial = 0; trial < 200; ++trial) {
    Rational f1 = random_rational(rng), f2 = random_rational(rng), fl = random_rational(rng);
    for (long m = -10; m <= 10; ++m)
      for (long n = -10; n <= 10; ++n) {
        Rational lhs = hoste_casson(m, n, f1, f2, fl) + hoste_casson(0, 0, f1, f2, fl);
        Rational rhs = hoste_casson(m, 0, f1, f2, fl) + hoste_casson(0, n, f1, f2, fl) +
                       Rational(m) * Rational(n) * fl;
        CHECK(lhs == rhs);
      }
    if (trial >= 2) break;  // the inner grid is already 441 checks
  }
}

TEST_CASE("casson invariant of +1 surgeries") {
  CHECK(casson_plus_one_surgery(tp({{1, 1}, {0, -1}, {-1, 1}})) == Rational(1));
  CHECK(casson_plus_one_surgery(tp({{1, -1}, {0, 3}, {-1, -1}})) == Rational(-1));
  CHECK(casson_plus_one_surgery(tp({{0, 1}})) == Rational(0));
}

TEST_CASE("torus knot alexander polynomials") {
  // unknots
  CHECK(torus_knot_alexander(1, 2) == RatPoly::one());
  // trefoil = T(2,3)
  CHECK(torus_knot_alexander(2, 3) == tp({{1, 1}, {0, -1}, {-1, 1}}));
  CHECK(torus_knot_alexander(3, 2) == tp({{1, 1}, {0, -1}, {-1, 1}}));

  // defining identity (t^p-1)(t^q-1) * cleared = (t^pq-1)(t-1) * t^shift,
  // symmetry, and value 1 at t = 1 -- checked multiplication-only.
  for (long p = 2; p <= 6; ++p)
    for (long q = p + 1; q <= 7; ++q) {
      if (gcd_long(p, q) != 1) continue;
      RatPoly d = torus_knot_alexander(p, q);
      CHECK(d.is_symmetric());
      CHECK(d.eval(Rational(1)) == Rational(1));
      auto tpow = [](long e) { return RatPoly::monomial(e, Rational(1)) - RatPoly::one(); };
      long shift = (p - 1) * (q - 1) / 2;
      CHECK(tpow(p) * tpow(q) * d.shifted(shift) == tpow(p * q) * tpow(1));
    }
}

TEST_CASE("cable alexander polynomials and genus") {
  RatPoly delta = tp({{1, 2}, {0, -3}, {-1, 2}});
  CHECK(cable_alexander(delta, 1, 2) == delta.substitute_power(2));
  CHECK(cable_alexander(RatPoly::one(), 1, 2) == RatPoly::one());
  for (long n = 2; n <= 5; ++n)
    CHECK(cable_alexander(RatPoly::one(), n, n + 1) == torus_knot_alexander(n, n + 1));
  CHECK_THROWS(cable_alexander(delta, 2, 4));

  CHECK(cable_genus(1, 1, 2) == 2);
  CHECK(cable_genus(3, 1, 2) == 6);
  for (long g = 0; g <= 5; ++g)
    for (long q = 1; q <= 6; ++q) CHECK(cable_genus(g, 1, q) == q * g);
  CHECK(cable_genus(2, 3, 4) == 2 * 4 + 3);
}

TEST_CASE("genus-one alexander family") {
  CHECK(genus1_alexander(1) == tp({{1, 1}, {0, -1}, {-1, 1}}));
  CHECK(genus1_alexander(-1) == tp({{1, -1}, {0, 3}, {-1, -1}}));
  CHECK(genus1_alexander(0) == RatPoly::one());

  // second derivative of the doubled polynomial is 8a
  for (long a = -100; a <= 100; ++a) {
    RatPoly doubled = genus1_alexander(a).substitute_power(2);
    CHECK(doubled.second_derivative_at_one() == Rational(8 * a));
  }
}

TEST_CASE("built-in table: stated polynomials, verbatim") {
  const KnotTable& t = KnotTable::builtin();
  CHECK(t.validate_all().empty());

  CHECK(*t.knot("unknot").conway == zp({{0, 1}}));
  CHECK(*t.knot("3_1").conway == zp({{0, 1}, {2, 1}}));
  CHECK(*t.knot("3_1").alexander == tp({{1, 1}, {0, -1}, {-1, 1}}));
  CHECK(*t.knot("4_1").conway == zp({{0, 1}, {2, -1}}));
  CHECK(*t.knot("4_1").alexander == tp({{1, -1}, {0, 3}, {-1, -1}}));
  CHECK(*t.knot("5_2").conway == zp({{0, 1}, {2, 2}}));
  CHECK(*t.knot("5_2").alexander == tp({{1, 2}, {0, -3}, {-1, 2}}));
  CHECK(*t.knot("5_2m").conway == zp({{0, 1}, {2, 2}}));
  CHECK(*t.knot("8_21m").conway == zp({{0, 1}, {4, -1}}));
  CHECK(*t.knot("11a20m").conway == zp({{0, 1}, {4, -5}, {6, -3}}));

  // derived alexander polynomials are palindromic with value 1 at t = 1
  for (const auto& name : t.knot_names()) {
    const KnotRecord& r = t.knot(name);
    REQUIRE(r.alexander.has_value());
    CHECK(r.alexander->is_symmetric());
    CHECK(r.alexander->eval(Rational(1)) == Rational(1));
  }

  CHECK(t.knot("5_2m").sl_bar_mirror == 1);
  CHECK(t.knot("P(-2,3,7)").sl_bar_mirror == 9);
  CHECK(t.knot("P(-2,3,7)").mirror_positive);
  CHECK(t.knot("P(-2,3,7)").genus == 5);
  CHECK(!t.knot("P(-2,3,7)m").mirror_positive);
  CHECK(!t.knot("unknot").nontrivial);

  const LinkRecord& l = t.link("Y-mn");
  CHECK(l.linking_number == 0);
  CHECK(*l.phi1_link == Rational(0));
  CHECK(l.phi1_components[0] == Rational(0));
  CHECK(l.phi1_components[1] == Rational(0));

  CHECK_THROWS(t.knot("no_such_knot"));
}

TEST_CASE("skein recombination reproduces the two-bridge computation") {
  const KnotTable& t = KnotTable::builtin();
  SkeinValue n11 = t.conway_value("11a20m");
  SkeinValue n31 = t.conway_value("3_1");
  SkeinValue n52 = t.conway_value("5_2m");

  // first stage: -z*A + z*(A - z * nabla(3_1 # (5_2m with a negative
  // meridian))) collapses to z^3 (1+z^2)(1+2z^2)
  SkeinValue sum_with_meridian = n31 * n52.meridian(-1);
  SkeinValue l1 = (-n11.meridian(1)) + (n11 - sum_with_meridian.meridian(1)).meridian(1);
  CHECK(!l1.has_unknowns());
  CHECK(l1.known() == zp({{3, 1}}) * zp({{0, 1}, {2, 1}}) * zp({{0, 1}, {2, 2}}));
  CHECK(l1.known() == zp({{3, 1}, {5, 3}, {7, 2}}));

  // second stage introduces the four-component unknown, divisible by z^3
  SkeinValue l4 = SkeinValue::unknown("L4", 3);
  SkeinValue l2 = (-(zp({{2, 1}}) * n11)) + l4.meridian(1);
  SkeinValue total = l1 + l2.meridian(1);

  CHECK(total.known() == zp({{5, 3}, {7, 7}, {9, 3}}));
  REQUIRE(total.unknowns().count("L4"));
  CHECK(total.unknowns().at("L4").coeff == zp({{2, 1}}));

  // phi1 = z^3 coefficient, provably unaffected by the unknown
  auto f = phi1(total, 2);
  REQUIRE(f.has_value());
  CHECK(*f == Rational(0));

  // whereas the z^5 coefficient is not determined
  CHECK(!total.coefficient(5).has_value());

  // split unions vanish
  CHECK(SkeinValue::split_union().known().is_zero());

  CHECK_THROWS(l4 * l4);  // nonlinear in the unknowns
  CHECK_THROWS(t.conway_value("missing"));
}

TEST_CASE("meridian constructors scale by +-z") {
  const KnotTable& t = KnotTable::builtin();
  SkeinValue v = t.conway_value("3_1");
  CHECK(v.meridian(1).known() == zp({{1, 1}, {3, 1}}));
  CHECK(v.meridian(-1).known() == zp({{1, -1}, {3, -1}}));
  CHECK_THROWS(v.meridian(0));
}

TEST_CASE("record validation catches inconsistencies") {
  KnotRecord r;
  r.name = "bad";
  r.conway = zp({{0, 1}, {2, 1}});
  r.alexander = tp({{1, 2}, {0, -3}, {-1, 2}});  // wrong pair
  CHECK_THROWS(r.validate());

  KnotRecord r2;
  r2.name = "bad2";
  r2.alexander = tp({{1, 1}, {0, -1}});  // not symmetric
  CHECK_THROWS(r2.validate());

  KnotRecord r3;
  r3.name = "bad3";
  r3.alexander = tp({{1, 1}, {0, -1}, {-1, 1}});
  r3.genus = 0;  // degree exceeds genus
  CHECK_THROWS(r3.validate());

  KnotRecord r4;
  r4.name = "bad4";
  r4.sl_bar_mirror = 2;  // self-linking numbers are odd
  CHECK_THROWS(r4.validate());
}
