// Command-line front end: certify, lspace, casson, seifert, donaldson-check,
// knot-table. Deterministic output; exit codes 0 success / positive
// certificate, 1 abstention, 2 contradiction or inconsistent input, 64 usage,
// 65 parse error.

#include <CLI11.hpp>
#include <fstream>
#include <future>
#include <iostream>
#include <json.hpp>
#include <sstream>

#include "su2cert/certify.hpp"
#include "su2cert/donaldson.hpp"
#include "su2cert/knots.hpp"
#include "su2cert/lspace.hpp"
#include "su2cert/seifert.hpp"
#include "su2cert/textio.hpp"

using namespace su2cert;
using nlohmann::json;

namespace {

constexpr int kExitOk = 0;
constexpr int kExitAbstain = 1;
constexpr int kExitInconsistent = 2;
constexpr int kExitUsage = 64;
constexpr int kExitParse = 65;
constexpr const char* kVersion = "su2cert/1";

struct Options {
  bool json = false;
  bool trace = false;
};

// ---- certify ------------------------------------------------------------

KnotRecord parse_knot_block(const TextNode& k) {
  k.reject_unknown({"name", "conway", "alexander", "genus", "sl-bar-mirror",
                    "tb-bar-mirror", "mirror-positive", "nontrivial", "notes"},
                   {}, "knot block");
  KnotRecord r;
  r.name = k.require("name");
  if (auto v = k.get("conway")) r.conway = poly_from_text(*v);
  if (auto v = k.get("alexander")) r.alexander = poly_from_text(*v);
  if (auto v = k.get("genus")) r.genus = std::stol(*v);
  if (auto v = k.get("sl-bar-mirror")) r.sl_bar_mirror = std::stol(*v);
  if (auto v = k.get("tb-bar-mirror")) r.tb_bar_mirror = std::stol(*v);
  if (auto v = k.get("mirror-positive")) r.mirror_positive = parse_bool(*v, r.name);
  if (auto v = k.get("nontrivial")) r.nontrivial = parse_bool(*v, r.name);
  if (auto v = k.get("notes")) r.notes = *v;
  r.validate();
  return r;
}

CertifyQuery parse_certify_node(const TextNode& node, const KnotTable& table) {
  check_schema(node, "certify");
  std::string type = node.require("type");
  if (type == "surgery") {
    node.reject_unknown({"schema", "type", "knot", "slope", "cyclically-finite"}, {"knot"},
                        "certify/surgery");
    SurgeryQuery q;
    auto blocks = node.blocks_named("knot");
    if (!blocks.empty())
      q.knot = parse_knot_block(*blocks.front());
    else
      q.knot = table.knot(node.require("knot"));
    q.slope = Slope::from_string(node.require("slope"));
    if (auto v = node.get("cyclically-finite"))
      q.user_cyclically_finite = parse_bool(*v, "cyclically-finite");
    return q;
  }
  if (type == "stein") {
    node.reject_unknown({"schema", "type", "component", "linking", "chern", "torsion-free",
                         "universal-abelian-cover"},
                        {}, "certify/stein");
    SteinQuery q;
    for (const auto& line : node.get_all("component")) {
      auto parts = split_ws(line);
      if (parts.size() != 2) throw ParseError("component: expected 'tb rot'");
      q.model.components.push_back({std::stol(parts[0]), std::stol(parts[1]), false});
    }
    long n = static_cast<long>(q.model.components.size());
    if (n == 0) throw ParseError("certify/stein: no components");
    q.model.smooth_linking = IntMatrix(n, n);
    for (const auto& line : node.get_all("linking")) {
      auto parts = split_ws(line);
      if (parts.size() != 3) throw ParseError("linking: expected 'i j value'");
      long i = std::stol(parts[0]), j = std::stol(parts[1]);
      if (i < 0 || j < 0 || i >= n || j >= n || i == j)
        throw ParseError("linking: indices out of range");
      Integer v(parts[2]);
      q.model.smooth_linking(i, j) = v;
      q.model.smooth_linking(j, i) = v;
    }
    for (const auto& line : node.get_all("chern")) {
      std::vector<long> vec;
      for (const auto& tok : split_ws(line)) vec.push_back(std::stol(tok));
      if (static_cast<long>(vec.size()) != n)
        throw ParseError("chern: vector length must match the component count");
      q.extra_chern_vectors.push_back(std::move(vec));
    }
    if (auto v = node.get("torsion-free")) q.torsion_free = parse_bool(*v, "torsion-free");
    if (auto v = node.get("universal-abelian-cover"))
      q.universal_abelian_cover_qhs = parse_bool(*v, "universal-abelian-cover");
    return q;
  }
  if (type == "seifert") {
    node.reject_unknown({"schema", "type", "seifert"}, {}, "certify/seifert");
    return SeifertQuery{SeifertData::parse(node.require("seifert"))};
  }
  if (type == "raw") {
    node.reject_unknown({"schema", "type", "h1", "rank-exact", "rank-lower",
                         "universal-abelian-cover", "alexander", "surgery-p"},
                        {}, "certify/raw");
    RawQuery q;
    std::string h1 = node.require("h1");
    if (h1 == "trivial") {
      q.h1 = FiniteAbelianGroup::trivial();
    } else {
      std::vector<Integer> factors;
      for (const auto& tok : split_ws(h1)) factors.emplace_back(tok);
      q.h1 = FiniteAbelianGroup::from_cyclic_factors(factors);
    }
    if (auto v = node.get("rank-exact")) {
      q.rank_value = Integer(*v);
      q.rank_is_exact = true;
    } else if (auto w = node.get("rank-lower")) {
      q.rank_value = Integer(*w);
    }
    if (auto v = node.get("universal-abelian-cover"))
      q.universal_abelian_cover_qhs = parse_bool(*v, "universal-abelian-cover");
    if (auto v = node.get("alexander")) q.alexander = poly_from_text(*v);
    if (auto v = node.get("surgery-p")) q.surgery_p = Integer(*v);
    return q;
  }
  throw ParseError("certify: unknown type '" + type + "'");
}

std::string describe_query(const CertifyQuery& q) {
  if (const auto* s = std::get_if<SurgeryQuery>(&q))
    return "surgery on " + s->knot.name + " at slope " + s->slope.str();
  if (const auto* s = std::get_if<SteinQuery>(&q))
    return "stein handlebody with " + std::to_string(s->model.components.size()) +
           " component(s)";
  if (const auto* s = std::get_if<SeifertQuery>(&q)) return "seifert data " + s->data.str();
  return "raw homological evidence";
}

json certificate_json(const CertifyQuery& q, const Certificate& cert) {
  json chain = json::array();
  for (const auto& s : cert.chain) {
    json step;
    step["rule"] = s.rule;
    step["statement"] = s.statement;
    json params = json::object();
    for (const auto& [k, v] : s.params) params[k] = v;
    step["params"] = params;
    chain.push_back(step);
  }
  json out;
  out["conclusion"] = to_string(cert.conclusion);
  out["chain"] = chain;
  out["inputs"] = describe_query(q);
  out["caveat"] = cert.caveat;
  out["version"] = kVersion;
  return out;
}

int report_certificate(const CertifyQuery& q, const Certificate& cert, const Options& opt,
                       std::ostream& os) {
  if (opt.json) {
    os << certificate_json(q, cert).dump(2) << "\n";
  } else {
    os << "query: " << describe_query(q) << "\n";
    os << "conclusion: " << to_string(cert.conclusion) << "\n";
    for (size_t i = 0; i < cert.chain.size(); ++i) {
      const auto& s = cert.chain[i];
      os << "  " << (i + 1) << ". [" << s.rule << "] " << s.statement << "\n";
      if (opt.trace)
        for (const auto& [k, v] : s.params) os << "       " << k << " = " << v << "\n";
    }
    if (!cert.caveat.empty()) os << "caveat: " << cert.caveat << "\n";
  }
  return cert.positive() ? kExitOk : kExitAbstain;
}

int run_certify_one(const CertifyQuery& q, const Options& opt, std::ostream& os) {
  Certificate cert = certify(q);
  if (cert.positive() && !validate_certificate(q, cert))
    throw std::logic_error("internal error: certificate chain failed re-validation");
  return report_certificate(q, cert, opt, os);
}

int run_certify_batch(const std::string& path, const KnotTable& table, const Options& opt) {
  std::ifstream in(path);
  if (!in) throw ParseError("cannot open batch file '" + path + "'");
  std::vector<std::string> files;
  std::string line;
  while (std::getline(in, line)) {
    auto a = line.find_first_not_of(" \t\r");
    if (a == std::string::npos) continue;
    auto b = line.find_last_not_of(" \t\r");
    std::string trimmed = line.substr(a, b - a + 1);
    if (!trimmed.empty() && trimmed[0] != '#') files.push_back(trimmed);
  }
  struct Item {
    int code;
    std::string text;
  };
  std::vector<std::future<Item>> futures;
  futures.reserve(files.size());
  for (const auto& f : files)
    futures.push_back(std::async(std::launch::async, [f, &table, &opt]() -> Item {
      std::ostringstream os;
      try {
        CertifyQuery q = parse_certify_node(parse_structured_text_file(f), table);
        int code = run_certify_one(q, opt, os);
        return {code, os.str()};
      } catch (const ParseError& e) {
        return {kExitParse, std::string("parse error: ") + e.what() + "\n"};
      } catch (const std::invalid_argument& e) {
        return {kExitInconsistent, std::string("inconsistent input: ") + e.what() + "\n"};
      }
    }));
  // buffered reordering: output order matches input order
  int worst = kExitOk;
  for (size_t i = 0; i < futures.size(); ++i) {
    Item item = futures[i].get();
    std::cout << "== " << files[i] << "\n" << item.text;
    if (item.code == kExitParse)
      worst = kExitParse;
    else if (item.code == kExitInconsistent && worst != kExitParse)
      worst = kExitInconsistent;
    else if (item.code == kExitAbstain && worst == kExitOk)
      worst = kExitAbstain;
  }
  return worst;
}

// ---- lspace ---------------------------------------------------------------

LSpaceKB parse_lspace_node(const TextNode& node) {
  check_schema(node, "lspace");
  node.reject_unknown({"schema", "nontrivial", "genus", "alexander", "assert"}, {}, "lspace");
  LSpaceKB kb;
  if (auto v = node.get("nontrivial")) kb.knot.nontrivial = parse_bool(*v, "nontrivial");
  if (auto v = node.get("genus")) kb.knot.genus = std::stol(*v);
  if (auto v = node.get("alexander")) kb.knot.alexander = poly_from_text(*v);
  for (const auto& line : node.get_all("assert")) {
    auto parts = split_ws(line);
    if (parts.size() == 2 && parts[0] == "lspace")
      kb.assert_lspace(Slope::from_string(parts[1]));
    else if (parts.size() == 2 && parts[0] == "not-lspace")
      kb.assert_not_lspace(Slope::from_string(parts[1]));
    else if (parts.size() == 3 && parts[0] == "rank-exact")
      kb.assert_rank(Slope::from_string(parts[1]), Integer(parts[2]), true);
    else if (parts.size() == 3 && parts[0] == "rank-lower")
      kb.assert_rank(Slope::from_string(parts[1]), Integer(parts[2]), false);
    else
      throw ParseError(
          "assert: expected 'lspace S', 'not-lspace S', 'rank-exact S N' or "
          "'rank-lower S N', got '" + line + "'");
  }
  return kb;
}

int run_lspace(const std::string& path, const Options& opt) {
  LSpaceKB kb = parse_lspace_node(parse_structured_text_file(path));
  kb.deduce();
  if (opt.json) {
    json facts = json::array();
    for (size_t i = 0; i < kb.facts().size(); ++i) facts.push_back(kb.fact_string(i));
    json out;
    out["facts"] = facts;
    out["contradiction"] = kb.contradicted();
    if (kb.contradicted()) {
      out["witness"] = kb.conflict()->witness.str();
      out["note"] = kb.conflict()->note;
    }
    out["version"] = kVersion;
    std::cout << out.dump(2) << "\n";
  } else {
    std::cout << kb.trace();
  }
  return kb.contradicted() ? kExitInconsistent : kExitOk;
}

// ---- casson ---------------------------------------------------------------

int run_casson(const KnotTable& table, const std::string& link, const std::string& knot,
               long m, long n, const Options& opt) {
  if (!link.empty()) {
    const LinkRecord& l = table.link(link);
    if (l.components.size() != 2 || !l.phi1_link || l.phi1_components.size() != 2)
      throw std::invalid_argument("casson: link record lacks phi1 data");
    if (l.linking_number != 0)
      throw std::invalid_argument("casson: the surgery formula needs linking number zero");
    Rational lambda = hoste_casson(Integer(m), Integer(n), l.phi1_components[0],
                                   l.phi1_components[1], *l.phi1_link);
    if (opt.json) {
      json out;
      out["link"] = link;
      out["m"] = m;
      out["n"] = n;
      out["lambda"] = lambda.str();
      out["version"] = kVersion;
      std::cout << out.dump(2) << "\n";
    } else {
      std::cout << "link " << link << " with coefficients -1/" << m << ", -1/" << n << "\n";
      std::cout << "lambda = " << lambda << "\n";
    }
    return kExitOk;
  }
  const KnotRecord& r = table.knot(knot);
  if (!r.alexander) throw std::invalid_argument("casson: no alexander polynomial for " + knot);
  Rational lambda = casson_plus_one_surgery(*r.alexander);
  if (opt.json) {
    json out;
    out["knot"] = knot;
    out["lambda_plus_one_surgery"] = lambda.str();
    out["version"] = kVersion;
    std::cout << out.dump(2) << "\n";
  } else {
    std::cout << "+1-surgery on " << knot << ": lambda = " << lambda << "\n";
  }
  return kExitOk;
}

// ---- seifert ----------------------------------------------------------------

int run_seifert(const std::string& text, const Options& opt) {
  SeifertData d = SeifertData::parse(text);
  auto h1 = seifert_h1(d);
  SeifertData rev = seifert_reverse(d);

  json out;
  std::ostringstream os;
  os << "data: " << d.str() << "\n";
  os << "reversal: " << rev.str() << "\n";
  out["data"] = d.str();
  out["reversal"] = rev.str();
  if (!h1) {
    os << "|H1|: infinite (b1 > 0)\n";
    out["h1"] = "infinite";
  } else {
    os << "|H1| = " << *h1 << "\n";
    out["h1"] = h1->get_str();
  }

  bool plumbable = d.e <= -2 || d.fiber_count() >= 3;
  if (plumbable) {
    SteinPlumbing p = seifert_stein_diagram(d);
    os << "stein plumbing (" << (p.built_on_reverse ? "reversed orientation" : "as given")
       << "): central " << p.central;
    json chains = json::array();
    for (const auto& chain : p.chains) {
      os << " | chain";
      json jc = json::array();
      for (const auto& a : chain) {
        os << " " << a;
        jc.push_back(a.get_str());
      }
      chains.push_back(jc);
    }
    os << "\n";
    bool c1 = seifert_c1_nonzero_filling(d);
    os << "c1 nonzero filling: " << (c1 ? "yes" : "no") << "\n";
    out["plumbing"] = {{"central", p.central.get_str()},
                      {"chains", chains},
                      {"reversed", p.built_on_reverse}};
    out["c1_nonzero"] = c1;
  } else {
    os << "stein plumbing: none (lens-space data)\n";
    out["plumbing"] = nullptr;
  }

  if (h1 && *h1 == 1 && d.fiber_count() >= 3) {
    bool ls = sfs_lspace_classify(d);
    os << "instanton L-space: " << (ls ? "yes (the Poincare sphere class)" : "no") << "\n";
    out["lspace"] = ls;
  }
  out["version"] = kVersion;

  if (opt.json)
    std::cout << out.dump(2) << "\n";
  else
    std::cout << os.str();
  return kExitOk;
}

// ---- donaldson-check -------------------------------------------------------

int run_donaldson(const std::string& path, const Options& opt) {
  TextNode node = parse_structured_text_file(path);
  check_schema(node, "donaldson");
  node.reject_unknown({"schema"}, {"model"}, "donaldson");
  std::vector<DonaldsonSeriesModel> models;
  for (const TextNode* b : node.blocks_named("model")) {
    b->reject_unknown({"genus", "q", "class"}, {}, "model block");
    DonaldsonSeriesModel m;
    m.genus = std::stol(b->require("genus"));
    m.q_sigma = Rational::from_string(b->require("q"));
    for (const auto& line : b->get_all("class")) {
      auto parts = split_ws(line);
      if (parts.size() != 3) throw ParseError("class: expected 'alpha a k'");
      m.classes.push_back({Rational::from_string(parts[0]), Rational::from_string(parts[1]),
                           Rational::from_string(parts[2])});
    }
    models.push_back(std::move(m));
  }
  if (models.empty()) throw ParseError("donaldson: no models");
  RatMatrix matrix = orthogonality_matrix(models);
  if (opt.json) {
    json rows = json::array();
    for (long i = 0; i < matrix.rows(); ++i) {
      json row = json::array();
      for (long j = 0; j < matrix.cols(); ++j) row.push_back(matrix(i, j).str());
      rows.push_back(row);
    }
    json out;
    out["orthogonality_matrix"] = rows;
    out["models"] = models.size();
    out["version"] = kVersion;
    std::cout << out.dump(2) << "\n";
  } else {
    std::cout << "orthogonality matrix (" << matrix.rows() << " x " << matrix.cols()
              << "):\n";
    for (long i = 0; i < matrix.rows(); ++i) {
      for (long j = 0; j < matrix.cols(); ++j) std::cout << (j ? " " : "") << matrix(i, j);
      std::cout << "\n";
    }
  }
  return kExitOk;
}

// ---- knot-table -------------------------------------------------------------

int run_knot_table(const KnotTable& table, const std::vector<std::string>& names,
                   bool validate, bool export_text, const Options& opt) {
  if (export_text) {
    std::cout << knot_table_to_text(table);
    return kExitOk;
  }
  if (validate) {
    auto problems = table.validate_all();
    for (const auto& p : problems) std::cout << "problem: " << p << "\n";
    std::cout << (problems.empty() ? "table is consistent\n" : "table has problems\n");
    return problems.empty() ? kExitOk : kExitInconsistent;
  }
  std::vector<std::string> wanted = names.empty() ? table.knot_names() : names;
  if (opt.json) {
    json out = json::array();
    for (const auto& name : wanted) {
      const KnotRecord& r = table.knot(name);
      json k;
      k["name"] = r.name;
      if (r.conway) k["conway"] = poly_to_text(*r.conway);
      if (r.alexander) k["alexander"] = poly_to_text(*r.alexander);
      if (r.genus) k["genus"] = *r.genus;
      if (r.sl_bar_mirror) k["sl_bar_mirror"] = *r.sl_bar_mirror;
      if (r.tb_bar_mirror) k["tb_bar_mirror"] = *r.tb_bar_mirror;
      k["mirror_positive"] = r.mirror_positive;
      k["nontrivial"] = r.nontrivial;
      out.push_back(k);
    }
    std::cout << out.dump(2) << "\n";
    return kExitOk;
  }
  for (const auto& name : wanted) {
    const KnotRecord& r = table.knot(name);
    std::cout << r.name << "\n";
    if (r.conway) std::cout << "  conway:    " << r.conway->str() << "\n";
    if (r.alexander) std::cout << "  alexander: " << r.alexander->str() << "\n";
    if (r.genus) std::cout << "  genus: " << *r.genus << "\n";
    if (r.sl_bar_mirror) std::cout << "  sl(mirror): " << *r.sl_bar_mirror << "\n";
    if (r.tb_bar_mirror) std::cout << "  tb(mirror): " << *r.tb_bar_mirror << "\n";
    if (r.mirror_positive) std::cout << "  mirror is positive\n";
    if (!r.nontrivial) std::cout << "  trivial knot\n";
    if (!r.notes.empty() && opt.trace) std::cout << "  notes: " << r.notes << "\n";
  }
  if (names.empty()) {
    for (const auto& name : table.link_names()) {
      const LinkRecord& l = table.link(name);
      std::cout << l.name << " (link)\n  components:";
      for (const auto& c : l.components) std::cout << " " << c;
      std::cout << "\n  linking number: " << l.linking_number << "\n";
      if (l.phi1_link) std::cout << "  phi1: " << *l.phi1_link << "\n";
    }
  }
  return kExitOk;
}

KnotTable load_table(const std::string& table_path) {
  if (table_path.empty()) return KnotTable::builtin();
  return parse_knot_table(parse_structured_text_file(table_path));
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"exact certification toolkit for SU(2) representation existence"};
  app.require_subcommand(1);

  Options opt;
  std::string table_path;

  auto* certify_cmd = app.add_subcommand(
      "certify", "decide nontrivial/irreducible representation certificates");
  std::string certify_file, certify_knot, certify_slope, batch_file;
  bool certify_cf = false;
  certify_cmd->add_option("file", certify_file, "structured-text query file");
  certify_cmd->add_option("--knot", certify_knot, "knot name from the table");
  certify_cmd->add_option("--slope", certify_slope, "surgery slope p/q");
  certify_cmd->add_flag("--cyclically-finite", certify_cf,
                        "assert cyclical finiteness as a user hypothesis");
  certify_cmd->add_option("--batch", batch_file, "file listing query files, one per line");
  certify_cmd->add_flag("--json", opt.json, "machine-readable output");
  certify_cmd->add_flag("--trace", opt.trace, "print chain parameters");
  certify_cmd->add_option("--table", table_path, "knot table file replacing the built-in");

  auto* lspace_cmd = app.add_subcommand("lspace", "close an L-space fact store");
  std::string lspace_file;
  lspace_cmd->add_option("file", lspace_file, "structured-text fact file")->required();
  lspace_cmd->add_flag("--json", opt.json, "machine-readable output");
  lspace_cmd->add_flag("--trace", opt.trace, "print derivations (default)");

  auto* casson_cmd = app.add_subcommand("casson", "casson invariants from surgery formulas");
  std::string casson_link, casson_knot;
  long casson_m = 1, casson_n = 1;
  casson_cmd->add_option("--link", casson_link, "two-component link name");
  casson_cmd->add_option("--knot", casson_knot, "knot name (+1-surgery formula)");
  casson_cmd->add_option("--m", casson_m, "first surgery parameter");
  casson_cmd->add_option("--n", casson_n, "second surgery parameter");
  casson_cmd->add_flag("--json", opt.json, "machine-readable output");
  casson_cmd->add_option("--table", table_path, "knot table file replacing the built-in");

  auto* seifert_cmd = app.add_subcommand("seifert", "seifert data calculator");
  std::string seifert_text;
  seifert_cmd->add_option("data", seifert_text, "M(e; q1/p1, ...)")->required();
  seifert_cmd->add_flag("--json", opt.json, "machine-readable output");

  auto* don_cmd =
      app.add_subcommand("donaldson-check", "orthogonality matrix of a series-model family");
  std::string don_file;
  don_cmd->add_option("file", don_file, "structured-text model file")->required();
  don_cmd->add_flag("--json", opt.json, "machine-readable output");

  auto* table_cmd = app.add_subcommand("knot-table", "list or validate the knot table");
  std::vector<std::string> table_names;
  bool table_validate = false, table_export = false;
  table_cmd->add_option("names", table_names, "entries to show (default: all)");
  table_cmd->add_flag("--validate", table_validate, "run consistency checks");
  table_cmd->add_flag("--export", table_export, "print the table as structured text");
  table_cmd->add_flag("--json", opt.json, "machine-readable output");
  table_cmd->add_flag("--trace", opt.trace, "include provenance notes");
  table_cmd->add_option("--table", table_path, "knot table file replacing the built-in");

  try {
    app.parse(argc, argv);
  } catch (const CLI::CallForHelp& e) {
    return app.exit(e);
  } catch (const CLI::ParseError& e) {
    app.exit(e);
    return kExitUsage;
  }

  try {
    if (certify_cmd->parsed()) {
      KnotTable table = load_table(table_path);
      if (!batch_file.empty()) return run_certify_batch(batch_file, table, opt);
      if (!certify_file.empty()) {
        CertifyQuery q = parse_certify_node(parse_structured_text_file(certify_file), table);
        return run_certify_one(q, opt, std::cout);
      }
      if (certify_knot.empty() || certify_slope.empty()) {
        std::cerr << "certify: need a query file, --batch, or --knot with --slope\n";
        return kExitUsage;
      }
      CertifyQuery q = SurgeryQuery{table.knot(certify_knot),
                                    Slope::from_string(certify_slope), certify_cf};
      return run_certify_one(q, opt, std::cout);
    }
    if (lspace_cmd->parsed()) return run_lspace(lspace_file, opt);
    if (casson_cmd->parsed()) {
      if (casson_link.empty() && casson_knot.empty()) {
        std::cerr << "casson: need --link or --knot\n";
        return kExitUsage;
      }
      return run_casson(load_table(table_path), casson_link, casson_knot, casson_m, casson_n,
                        opt);
    }
    if (seifert_cmd->parsed()) return run_seifert(seifert_text, opt);
    if (don_cmd->parsed()) return run_donaldson(don_file, opt);
    if (table_cmd->parsed())
      return run_knot_table(load_table(table_path), table_names, table_validate, table_export,
                            opt);
  } catch (const ParseError& e) {
    std::cerr << "parse error: " << e.what() << "\n";
    return kExitParse;
  } catch (const std::invalid_argument& e) {
    std::cerr << "inconsistent input: " << e.what() << "\n";
    return kExitInconsistent;
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kExitInconsistent;
  }
  return kExitUsage;
}
