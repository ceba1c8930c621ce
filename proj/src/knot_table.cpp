#include "su2cert/knots.hpp"

#include <sstream>

#include "su2cert/textio.hpp"

namespace su2cert {

namespace {

RatPoly zpoly(std::initializer_list<std::pair<long, long>> terms) {
  RatPoly p("z");
  for (auto [e, c] : terms) p.set(e, Rational(c));
  return p;
}

RatPoly tpoly(std::initializer_list<std::pair<long, long>> terms) {
  RatPoly p("t");
  for (auto [e, c] : terms) p.set(e, Rational(c));
  return p;
}

KnotTable build_table() {
  KnotTable table;

  {
    KnotRecord r;
    r.name = "unknot";
    r.conway = zpoly({{0, 1}});
    r.alexander = tpoly({{0, 1}});
    r.genus = 0;
    r.nontrivial = false;
    table.add(r);
  }
  {
    // right-handed (positive) trefoil
    KnotRecord r;
    r.name = "3_1";
    r.conway = zpoly({{0, 1}, {2, 1}});
    r.alexander = conway_to_alexander(*r.conway);
    r.genus = 1;
    r.sl_bar_mirror = -5;   // left-handed trefoil invariants
    r.tb_bar_mirror = -6;
    r.notes = "right-handed chirality; mirror data refers to the left-handed trefoil";
    table.add(r);
  }
  {
    // left-handed trefoil
    KnotRecord r;
    r.name = "3_1m";
    r.conway = zpoly({{0, 1}, {2, 1}});
    r.alexander = conway_to_alexander(*r.conway);
    r.genus = 1;
    r.sl_bar_mirror = 1;
    r.tb_bar_mirror = 1;
    r.mirror_positive = true;
    r.notes = "left-handed chirality; its mirror is the positive trefoil";
    table.add(r);
  }
  {
    // figure eight (amphichiral)
    KnotRecord r;
    r.name = "4_1";
    r.conway = zpoly({{0, 1}, {2, -1}});
    r.alexander = conway_to_alexander(*r.conway);
    r.genus = 1;
    r.sl_bar_mirror = -3;
    r.tb_bar_mirror = -3;
    r.notes = "amphichiral";
    table.add(r);
  }
  {
    // 5_2, the strongly quasipositive chirality
    KnotRecord r;
    r.name = "5_2";
    r.conway = zpoly({{0, 1}, {2, 2}});
    r.alexander = conway_to_alexander(*r.conway);
    r.genus = 1;
    r.notes =
        "positive chirality (maximal self-linking 1 = 2g-1); the mirror "
        "invariants of this entry are not recorded";
    table.add(r);
  }
  {
    KnotRecord r;
    r.name = "5_2m";
    r.conway = zpoly({{0, 1}, {2, 2}});
    r.alexander = conway_to_alexander(*r.conway);
    r.genus = 1;
    r.sl_bar_mirror = 1;
    r.tb_bar_mirror = 1;
    r.mirror_positive = true;
    r.notes = "mirror of 5_2; surgery certificates use the mirror's invariants";
    table.add(r);
  }
  {
    // mirror of 8_21 (Conway polynomial is mirror-invariant)
    KnotRecord r;
    r.name = "8_21m";
    r.conway = zpoly({{0, 1}, {4, -1}});
    r.alexander = conway_to_alexander(*r.conway);
    r.genus = 2;
    r.notes = "component of the zero-Casson surgery family; Legendrian form has tb 1";
    table.add(r);
  }
  {
    KnotRecord r;
    r.name = "11a20m";
    r.conway = zpoly({{0, 1}, {4, -5}, {6, -3}});
    r.alexander = conway_to_alexander(*r.conway);
    r.genus = 3;
    r.notes = "component of the zero-Casson surgery family; Legendrian form has tb 1";
    table.add(r);
  }
  {
    // The (-2,3,7)-pretzel family. The base name carries the chirality whose
    // MIRROR is the positive pretzel: surgery certificates consume mirror
    // invariants, and the positive pretzel has genus 5 with maximal
    // self-linking and Thurston-Bennequin numbers 2g-1 = 9.
    KnotRecord r;
    r.name = "P(-2,3,7)";
    r.alexander = tpoly({{5, -1}, {4, -1}, {2, 1}, {1, 1}, {0, 1},
                         {-1, 1}, {-2, 1}, {-4, -1}, {-5, -1}});
    r.conway = alexander_to_conway(*r.alexander);
    r.genus = 5;
    r.sl_bar_mirror = 9;
    r.tb_bar_mirror = 9;
    r.mirror_positive = true;
    r.notes =
        "chirality with positive mirror; alexander polynomial normalized to "
        "value 1 at t = 1 (sign flip of the degree-10 integral form)";
    table.add(r);
  }
  {
    KnotRecord r;
    r.name = "P(-2,3,7)m";
    r.alexander = tpoly({{5, -1}, {4, -1}, {2, 1}, {1, 1}, {0, 1},
                         {-1, 1}, {-2, 1}, {-4, -1}, {-5, -1}});
    r.conway = alexander_to_conway(*r.alexander);
    r.genus = 5;
    r.notes = "the positive pretzel itself; its mirror invariants are not recorded";
    table.add(r);
  }

  {
    // Two-component surgery family: -1/m and -1/n surgeries on a hyperbolic
    // link with components of type 8_21m and 11a20m and linking number zero.
    LinkRecord l;
    l.name = "Y-mn";
    l.components = {"8_21m", "11a20m"};
    l.linking_number = 0;
    l.phi1_components = {Rational(0), Rational(0)};
    l.phi1_link = Rational(0);
    l.notes =
        "phi1 of the link is pinned by the skein recombination "
        "z^3(1+z^2)(1+2z^2) + z^2*(rest), whose z^3-coefficient vanishes; "
        "the full conway polynomial is not recorded";
    table.add_link(l);
  }

  return table;
}

}  // namespace

const KnotTable& KnotTable::builtin() {
  static const KnotTable table = build_table();
  return table;
}

}  // namespace su2cert

// ---- structured-text round trip ------------------------------------------

namespace su2cert {

KnotTable parse_knot_table(const TextNode& node) {
  check_schema(node, "knot-table");
  node.reject_unknown({"schema"}, {"knot", "link"}, "knot-table");
  KnotTable table;
  for (const TextNode* k : node.blocks_named("knot")) {
    k->reject_unknown({"name", "conway", "alexander", "genus", "sl-bar-mirror",
                       "tb-bar-mirror", "mirror-positive", "nontrivial", "notes"},
                      {}, "knot block");
    KnotRecord r;
    r.name = k->require("name");
    if (auto v = k->get("conway")) r.conway = poly_from_text(*v);
    if (auto v = k->get("alexander")) r.alexander = poly_from_text(*v);
    if (auto v = k->get("genus")) r.genus = std::stol(*v);
    if (auto v = k->get("sl-bar-mirror")) r.sl_bar_mirror = std::stol(*v);
    if (auto v = k->get("tb-bar-mirror")) r.tb_bar_mirror = std::stol(*v);
    if (auto v = k->get("mirror-positive")) r.mirror_positive = parse_bool(*v, r.name);
    if (auto v = k->get("nontrivial")) r.nontrivial = parse_bool(*v, r.name);
    if (auto v = k->get("notes")) r.notes = *v;
    table.add(std::move(r));
  }
  for (const TextNode* l : node.blocks_named("link")) {
    l->reject_unknown({"name", "components", "linking-number", "conway", "phi1",
                       "phi1-components", "notes"},
                      {}, "link block");
    LinkRecord r;
    r.name = l->require("name");
    r.components = split_ws(l->require("components"));
    if (auto v = l->get("linking-number")) r.linking_number = std::stol(*v);
    if (auto v = l->get("conway")) r.conway = poly_from_text(*v);
    if (auto v = l->get("phi1")) r.phi1_link = Rational::from_string(*v);
    if (auto v = l->get("phi1-components"))
      for (const auto& tok : split_ws(*v)) r.phi1_components.push_back(Rational::from_string(tok));
    if (auto v = l->get("notes")) r.notes = *v;
    table.add_link(std::move(r));
  }
  return table;
}

std::string knot_table_to_text(const KnotTable& table) {
  std::ostringstream os;
  os << "schema = knot-table/1\n";
  for (const auto& name : table.knot_names()) {
    const KnotRecord& r = table.knot(name);
    os << "\nbegin knot\n";
    os << "name = " << r.name << "\n";
    if (r.conway) os << "conway = " << poly_to_text(*r.conway) << "\n";
    if (r.alexander) os << "alexander = " << poly_to_text(*r.alexander) << "\n";
    if (r.genus) os << "genus = " << *r.genus << "\n";
    if (r.sl_bar_mirror) os << "sl-bar-mirror = " << *r.sl_bar_mirror << "\n";
    if (r.tb_bar_mirror) os << "tb-bar-mirror = " << *r.tb_bar_mirror << "\n";
    if (r.mirror_positive) os << "mirror-positive = true\n";
    os << "nontrivial = " << (r.nontrivial ? "true" : "false") << "\n";
    if (!r.notes.empty()) os << "notes = " << r.notes << "\n";
    os << "end knot\n";
  }
  for (const auto& name : table.link_names()) {
    const LinkRecord& l = table.link(name);
    os << "\nbegin link\n";
    os << "name = " << l.name << "\n";
    os << "components =";
    for (const auto& c : l.components) os << " " << c;
    os << "\n";
    os << "linking-number = " << l.linking_number << "\n";
    if (l.conway) os << "conway = " << poly_to_text(*l.conway) << "\n";
    if (l.phi1_link) os << "phi1 = " << *l.phi1_link << "\n";
    if (!l.phi1_components.empty()) {
      os << "phi1-components =";
      for (const auto& f : l.phi1_components) os << " " << f;
      os << "\n";
    }
    if (!l.notes.empty()) os << "notes = " << l.notes << "\n";
    os << "end link\n";
  }
  return os.str();
}

}  // namespace su2cert
