#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <fstream>
#include <sstream>

#include "su2cert/knots.hpp"
#include "su2cert/textio.hpp"
#include "test_util.hpp"

using namespace su2cert;
using namespace su2cert::testutil;

TEST_CASE("structured text parsing") {
  std::istringstream in(
      "schema = demo/1\n"
      "# a comment\n"
      "key = value with spaces\n"
      "begin block\n"
      "  inner = 1\n"
      "  begin nested\n"
      "  deep = yes\n"
      "  end nested\n"
      "end block\n"
      "key = second\n");
  TextNode node = parse_structured_text(in);
  check_schema(node, "demo");
  CHECK(node.get("key") == std::string("value with spaces"));
  CHECK(node.get_all("key").size() == 2);
  CHECK(!node.get("missing").has_value());
  CHECK_THROWS_AS((void)node.require("missing"), ParseError);
  REQUIRE(node.blocks_named("block").size() == 1);
  const TextNode* b = node.blocks_named("block").front();
  CHECK(b->get("inner") == std::string("1"));
  REQUIRE(b->blocks_named("nested").size() == 1);
  CHECK(b->blocks_named("nested").front()->get("deep") == std::string("yes"));

  CHECK_THROWS_AS(node.reject_unknown({"schema"}, {"block"}, "demo"), ParseError);
  node.reject_unknown({"schema", "key"}, {"block"}, "demo");
}

TEST_CASE("structured text error handling") {
  {
    std::istringstream in("schema = demo/1\nbegin x\n");
    CHECK_THROWS_AS(parse_structured_text(in), ParseError);
  }
  {
    std::istringstream in("schema = demo/1\nend x\n");
    CHECK_THROWS_AS(parse_structured_text(in), ParseError);
  }
  {
    std::istringstream in("schema = demo/1\nnot a pair\n");
    CHECK_THROWS_AS(parse_structured_text(in), ParseError);
  }
  {
    std::istringstream in("schema = demo/1\nbegin a\nend b\n");
    CHECK_THROWS_AS(parse_structured_text(in), ParseError);
  }
  {
    std::istringstream in("key = 1\nschema = demo/1\n");
    TextNode n = parse_structured_text(in);
    CHECK_THROWS_AS(check_schema(n, "demo"), ParseError);
  }
  {
    std::istringstream in("schema = demo/2\n");
    TextNode n = parse_structured_text(in);
    CHECK_THROWS_AS(check_schema(n, "demo"), ParseError);
  }
}

TEST_CASE("polynomial text round trip") {
  auto rng = make_rng(7);
  for (int trial = 0; trial < 200; ++trial) {
    RatPoly p("t");
    for (long e = -4; e <= 4; ++e) {
      long num = random_int(rng, -9, 9);
      long den = random_int(rng, 1, 5);
      if (num) p.set(e, Rational(num, den));
    }
    CHECK(poly_from_text(poly_to_text(p)) == p);
  }
  CHECK(poly_to_text(RatPoly::zero("z")) == "z:");
  CHECK(poly_from_text("z:").is_zero());
  RatPoly q = poly_from_text("t: 1:2 0:-3 -1:2");
  CHECK(q.coeff(1) == Rational(2));
  CHECK(q.coeff(0) == Rational(-3));
  CHECK(q.coeff(-1) == Rational(2));
  CHECK(poly_from_text("t: 2:1/2").coeff(2) == Rational(1, 2));
  CHECK_THROWS_AS(poly_from_text("no-colon"), ParseError);
  CHECK_THROWS_AS(poly_from_text("t: junk"), ParseError);
}

TEST_CASE("knot table text round trip and shipped data file") {
  const KnotTable& builtin = KnotTable::builtin();
  std::string text = knot_table_to_text(builtin);
  std::istringstream in(text);
  KnotTable parsed = parse_knot_table(parse_structured_text(in));

  CHECK(parsed.knot_names() == builtin.knot_names());
  CHECK(parsed.link_names() == builtin.link_names());
  for (const auto& name : builtin.knot_names()) {
    const KnotRecord& a = builtin.knot(name);
    const KnotRecord& b = parsed.knot(name);
    CHECK(a.conway == b.conway);
    CHECK(a.alexander == b.alexander);
    CHECK(a.genus == b.genus);
    CHECK(a.sl_bar_mirror == b.sl_bar_mirror);
    CHECK(a.tb_bar_mirror == b.tb_bar_mirror);
    CHECK(a.mirror_positive == b.mirror_positive);
    CHECK(a.nontrivial == b.nontrivial);
  }
  CHECK(parsed.validate_all().empty());

  // the file shipped under data/ matches the built-in table
  std::ifstream shipped("../data/knot_table.txt");
  if (!shipped.is_open()) shipped.open("data/knot_table.txt");
  if (!shipped.is_open()) shipped.open("../../data/knot_table.txt");
  REQUIRE(shipped.is_open());
  std::ostringstream contents;
  contents << shipped.rdbuf();
  CHECK(contents.str() == text);
}

TEST_CASE("serialization is deterministic") {
  std::string a = knot_table_to_text(KnotTable::builtin());
  std::string b = knot_table_to_text(KnotTable::builtin());
  CHECK(a == b);
}
