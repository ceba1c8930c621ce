#pragma once

#include <optional>
#include <string>
#include <vector>

#include "su2cert/laurent.hpp"
#include "su2cert/slopes.hpp"

namespace su2cert {

enum class FactKind {
  lspace_at,            // Y_a is an instanton L-space
  not_lspace_at,        // Y_a is not an instanton L-space
  lspace_from,          // Y_s is an L-space for every rational s >= a
  lspace_interval,      // Y_s is an L-space for every rational s in [a, b]
  not_lspace_interval,  // Y_s is not an L-space for any rational s in (a, b)
  rank_exact,           // rank of the framed instanton homology of Y_a
  rank_lower,           // lower bound for that rank
};

struct Derivation {
  std::string rule;              // stable rule identifier
  std::string detail;            // human-readable justification
  std::vector<size_t> premises;  // indices of supporting facts
};

struct Fact {
  FactKind kind;
  Slope a;
  Slope b;        // upper end for interval kinds
  Integer value;  // rank kinds only
  Derivation how;
};

struct Contradiction {
  size_t fact_a;
  size_t fact_b;
  Slope witness;
  std::string note;
};

struct KnotHypotheses {
  std::optional<bool> nontrivial;
  std::optional<long> genus;
  std::optional<RatPoly> alexander;
};

enum class LSpaceStatus { yes, no, unknown };

/// Fact store for L-space assertions about surgeries on a single knot,
/// closed under the surgery-triangle slope rules. Deduction is a
/// deterministic fixpoint (rules applied in a fixed priority order); every
/// derived fact carries its rule and premise chain. Contradictions are
/// recorded with both supporting chains, never silently.
class LSpaceKB {
 public:
  KnotHypotheses knot;

  size_t assert_lspace(const Slope& s, const std::string& detail = "asserted");
  size_t assert_not_lspace(const Slope& s, const std::string& detail = "asserted");
  size_t assert_rank(const Slope& s, const Integer& value, bool exact,
                     const std::string& detail = "asserted");

  /// Runs the rules to a fixpoint. Safe to call repeatedly (idempotent).
  void deduce();

  bool contradicted() const { return conflict_.has_value(); }
  const std::optional<Contradiction>& conflict() const { return conflict_; }

  LSpaceStatus lspace_status(const Slope& s) const;
  std::optional<Integer> rank_exact_at(const Slope& s) const;

  const std::vector<Fact>& facts() const { return facts_; }
  std::string fact_string(size_t i) const;
  /// Premise-closure of one fact, oldest first.
  std::vector<size_t> chain(size_t i) const;
  std::string trace() const;

 private:
  size_t add(Fact f);
  bool have(const Fact& f) const;
  void check_conflicts(size_t idx);
  void record_conflict(size_t a, size_t b, const Slope& witness, const std::string& note);
  bool pass();

  std::vector<Fact> facts_;
  std::optional<Contradiction> conflict_;
  bool axioms_seeded_ = false;
};

/// Closure entry point mirroring the module operation: returns the closed
/// store (input is copied, closed, and handed back).
LSpaceKB lspace_deduce(LSpaceKB kb);

/// The two genus-1 polynomials allowed for small L-space slopes:
/// t - 1 + 1/t and -t + 3 - 1/t.
bool alexander_in_small_slope_dichotomy(const RatPoly& delta);

}  // namespace su2cert
