#pragma once

#include <map>
#include <optional>
#include <string>
#include <variant>
#include <vector>

#include "su2cert/groups.hpp"
#include "su2cert/knots.hpp"
#include "su2cert/legendrian.hpp"
#include "su2cert/seifert.hpp"
#include "su2cert/slopes.hpp"

namespace su2cert {

enum class Conclusion { nontrivial_rep, irreducible_rep, no_certificate };
const char* to_string(Conclusion c);

struct ChainStep {
  std::string rule;
  std::string statement;
  std::map<std::string, std::string> params;
};

/// Machine-checkable certification outcome. A positive conclusion carries a
/// chain of cited steps that re-validates against the original query;
/// no_certificate is an honest abstention and never asserts nonexistence.
struct Certificate {
  Conclusion conclusion = Conclusion::no_certificate;
  std::vector<ChainStep> chain;
  std::string caveat;

  bool positive() const { return conclusion != Conclusion::no_certificate; }
};

/// (a) Explicit Stein 2-handlebody, possibly with the Chern vectors of
/// further Stein structures on the same smooth handlebody.
struct SteinQuery {
  SteinHandlebodyModel model;
  std::vector<std::vector<long>> extra_chern_vectors;
  bool torsion_free = true;  // automatic for 2-handlebodies
  bool universal_abelian_cover_qhs = false;
};

/// (b) Surgery on a knot from the table (or user-supplied record).
struct SurgeryQuery {
  KnotRecord knot;
  Slope slope;
  bool user_cyclically_finite = false;
};

/// (c) Seifert data over the sphere.
struct SeifertQuery {
  SeifertData data;
};

/// (d) Raw homological evidence.
struct RawQuery {
  FiniteAbelianGroup h1;
  std::optional<Integer> rank_value;
  bool rank_is_exact = false;
  bool universal_abelian_cover_qhs = false;
  std::optional<RatPoly> alexander;  // with surgery_p: surgery-style evidence
  std::optional<Integer> surgery_p;
};

using CertifyQuery = std::variant<SteinQuery, SurgeryQuery, SeifertQuery, RawQuery>;

/// The decision tree. Inconsistent input data throws std::invalid_argument;
/// it is never coerced into an answer.
Certificate certify(const CertifyQuery& query);

/// Re-executes every chain step of a certificate against the query; true iff
/// each step's claim checks out and the conclusion is reproduced.
bool validate_certificate(const CertifyQuery& query, const Certificate& cert);

}  // namespace su2cert
