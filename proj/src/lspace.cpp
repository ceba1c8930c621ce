#include "su2cert/lspace.hpp"

#include <algorithm>
#include <sstream>

namespace su2cert {

namespace {

bool same_fact(const Fact& x, const Fact& y) {
  return x.kind == y.kind && x.a == y.a && x.b == y.b && x.value == y.value;
}

Slope interval_witness(const Slope& lo, const Slope& hi) {
  // Some rational strictly between lo < hi.
  if (lo.is_infinite() || hi.is_infinite())
    throw std::logic_error("interval_witness: infinite endpoint");
  Rational mid = (lo.to_rational() + hi.to_rational()) / Rational(2);
  return Slope(mid);
}

}  // namespace

bool alexander_in_small_slope_dichotomy(const RatPoly& delta) {
  RatPoly trefoil("t"), fig8("t");
  trefoil.set(1, Rational(1));
  trefoil.set(0, Rational(-1));
  trefoil.set(-1, Rational(1));
  fig8.set(1, Rational(-1));
  fig8.set(0, Rational(3));
  fig8.set(-1, Rational(-1));
  return delta == trefoil || delta == fig8;
}

size_t LSpaceKB::assert_lspace(const Slope& s, const std::string& detail) {
  return add({FactKind::lspace_at, s, Slope(), Integer(0), {"input", detail, {}}});
}

size_t LSpaceKB::assert_not_lspace(const Slope& s, const std::string& detail) {
  return add({FactKind::not_lspace_at, s, Slope(), Integer(0), {"input", detail, {}}});
}

size_t LSpaceKB::assert_rank(const Slope& s, const Integer& value, bool exact,
                             const std::string& detail) {
  return add({exact ? FactKind::rank_exact : FactKind::rank_lower, s, Slope(), value,
              {"input", detail, {}}});
}

bool LSpaceKB::have(const Fact& f) const {
  for (const auto& g : facts_)
    if (same_fact(f, g)) return true;
  return false;
}

size_t LSpaceKB::add(Fact f) {
  for (size_t i = 0; i < facts_.size(); ++i)
    if (same_fact(f, facts_[i])) return i;
  facts_.push_back(std::move(f));
  size_t idx = facts_.size() - 1;
  check_conflicts(idx);
  return idx;
}

void LSpaceKB::record_conflict(size_t a, size_t b, const Slope& witness,
                               const std::string& note) {
  if (conflict_) return;  // keep the first conflict found
  conflict_ = Contradiction{a, b, witness, note};
}

void LSpaceKB::check_conflicts(size_t idx) {
  const Fact f = facts_[idx];
  for (size_t j = 0; j < facts_.size(); ++j) {
    if (j == idx) continue;
    const Fact& g = facts_[j];
    auto pos = [&](FactKind k) { return f.kind == k ? idx : j; };
    const Fact& ls = f.kind == FactKind::lspace_at ? f : g;
    // point vs point
    if (((f.kind == FactKind::lspace_at && g.kind == FactKind::not_lspace_at) ||
         (g.kind == FactKind::lspace_at && f.kind == FactKind::not_lspace_at)) &&
        f.a == g.a) {
      record_conflict(pos(FactKind::lspace_at), pos(FactKind::not_lspace_at), f.a,
                      "L-space and non-L-space at the same slope");
      return;
    }
    // lspace point vs open not-interval
    if ((f.kind == FactKind::lspace_at && g.kind == FactKind::not_lspace_interval) ||
        (g.kind == FactKind::lspace_at && f.kind == FactKind::not_lspace_interval)) {
      const Fact& in = f.kind == FactKind::not_lspace_interval ? f : g;
      if (ls.a > in.a && ls.a < in.b) {
        record_conflict(pos(FactKind::lspace_at), pos(FactKind::not_lspace_interval), ls.a,
                        "asserted L-space slope lies in an excluded interval");
        return;
      }
    }
    // not-lspace point vs closed lspace-interval
    if ((f.kind == FactKind::not_lspace_at && g.kind == FactKind::lspace_interval) ||
        (g.kind == FactKind::not_lspace_at && f.kind == FactKind::lspace_interval)) {
      const Fact& pt = f.kind == FactKind::not_lspace_at ? f : g;
      const Fact& in = f.kind == FactKind::lspace_interval ? f : g;
      if (pt.a >= in.a && pt.a <= in.b) {
        record_conflict(pos(FactKind::not_lspace_at), pos(FactKind::lspace_interval), pt.a,
                        "non-L-space slope lies in a derived L-space interval");
        return;
      }
    }
    // not-lspace point vs lspace-from
    if ((f.kind == FactKind::not_lspace_at && g.kind == FactKind::lspace_from) ||
        (g.kind == FactKind::not_lspace_at && f.kind == FactKind::lspace_from)) {
      const Fact& pt = f.kind == FactKind::not_lspace_at ? f : g;
      const Fact& fr = f.kind == FactKind::lspace_from ? f : g;
      if (!pt.a.is_infinite() && pt.a >= fr.a) {
        record_conflict(pos(FactKind::not_lspace_at), pos(FactKind::lspace_from), pt.a,
                        "non-L-space slope above an all-L-space threshold");
        return;
      }
    }
    // lspace-from vs open not-interval: [a, inf) meets (x, y) iff y > a
    if ((f.kind == FactKind::lspace_from && g.kind == FactKind::not_lspace_interval) ||
        (g.kind == FactKind::lspace_from && f.kind == FactKind::not_lspace_interval)) {
      const Fact& fr = f.kind == FactKind::lspace_from ? f : g;
      const Fact& in = f.kind == FactKind::not_lspace_interval ? f : g;
      if (in.b > fr.a) {
        Slope w = (fr.a > in.a && fr.a < in.b) ? fr.a : interval_witness(in.a, in.b);
        record_conflict(pos(FactKind::lspace_from), pos(FactKind::not_lspace_interval), w,
                        "all-L-space threshold overlaps an excluded interval");
        return;
      }
    }
    // closed lspace-interval vs open not-interval
    if ((f.kind == FactKind::lspace_interval && g.kind == FactKind::not_lspace_interval) ||
        (g.kind == FactKind::lspace_interval && f.kind == FactKind::not_lspace_interval)) {
      const Fact& cl = f.kind == FactKind::lspace_interval ? f : g;
      const Fact& op = f.kind == FactKind::not_lspace_interval ? f : g;
      if (cl.b > op.a && cl.a < op.b) {
        Slope w = (cl.a > op.a && cl.a < op.b)
                      ? cl.a
                      : interval_witness(op.a, std::min(cl.b, op.b));
        record_conflict(pos(FactKind::lspace_interval), pos(FactKind::not_lspace_interval), w,
                        "L-space interval overlaps an excluded interval");
        return;
      }
    }
    // conflicting rank facts at one slope
    if (f.kind == FactKind::rank_exact && g.kind == FactKind::rank_exact && f.a == g.a &&
        f.value != g.value) {
      record_conflict(idx, j, f.a, "two different exact ranks at one slope");
      return;
    }
    if (((f.kind == FactKind::rank_exact && g.kind == FactKind::rank_lower) ||
         (g.kind == FactKind::rank_exact && f.kind == FactKind::rank_lower)) &&
        f.a == g.a) {
      const Fact& ex = f.kind == FactKind::rank_exact ? f : g;
      const Fact& lo = f.kind == FactKind::rank_lower ? f : g;
      if (lo.value > ex.value) {
        record_conflict(pos(FactKind::rank_exact), pos(FactKind::rank_lower), f.a,
                        "rank lower bound exceeds the exact rank");
        return;
      }
    }
  }
}

bool LSpaceKB::pass() {
  bool grew = false;
  auto derive = [&](Fact f) {
    if (conflict_) return;
    if (!have(f)) {
      add(std::move(f));
      grew = true;
    }
  };

  // Hypothesis axioms.
  if (!axioms_seeded_) {
    axioms_seeded_ = true;
    derive({FactKind::rank_exact, Slope::infinity(), Slope(), Integer(1),
            {"three-sphere-rank", "the trivial surgery has rank 1", {}}});
    if (knot.genus && *knot.genus > 1)
      derive({FactKind::not_lspace_interval, Slope(0, 1), Slope(2, 1), Integer(0),
              {"genus-ge-2-window",
               "genus >= 2 excludes L-space surgeries at slopes in (0, 2)",
               {}}});
    if (knot.nontrivial && *knot.nontrivial) {
      derive({FactKind::not_lspace_interval, Slope(0, 1), Slope(1, 1), Integer(0),
              {"below-one-excluded",
               "a nontrivial knot has no L-space surgery at slopes in (0, 1)",
               {}}});
      derive({FactKind::not_lspace_at, Slope(1, 2), Slope(), Integer(0),
              {"half-slope-excluded",
               "a nontrivial knot has no L-space 1/2-surgery",
               {}}});
    }
    grew = true;
  }

  size_t count = facts_.size();
  for (size_t i = 0; i < count && !conflict_; ++i) {
    const Fact f = facts_[i];
    switch (f.kind) {
      case FactKind::rank_exact: {
        if (f.a.is_infinite()) break;
        Integer p = f.a.numerator();
        if (p <= 0) break;
        Integer e;
        try {
          e = rank_decompose(p, f.value);
        } catch (const std::invalid_argument& ex) {
          record_conflict(i, i, f.a, std::string("inconsistent rank data: ") + ex.what());
          break;
        }
        if (e == 0)
          derive({FactKind::lspace_at, f.a, Slope(), Integer(0),
                  {"euler-rank-split", "rank equals the first homology order", {i}}});
        else
          derive({FactKind::not_lspace_at, f.a, Slope(), Integer(0),
                  {"euler-rank-split", "rank exceeds the first homology order", {i}}});
        break;
      }
      case FactKind::rank_lower: {
        if (f.a.is_infinite()) break;
        Integer p = f.a.numerator();
        if (p <= 0) break;
        Integer eff = f.value;
        if ((eff - p) % 2 != 0) eff += 1;  // ranks match |H1| parity
        if (eff > p)
          derive({FactKind::not_lspace_at, f.a, Slope(), Integer(0),
                  {"rank-lower-excess",
                   "rank bound exceeds the first homology order",
                   {i}}});
        break;
      }
      case FactKind::lspace_at: {
        if (f.a.is_infinite() || f.a.sign() <= 0) break;
        Integer p = f.a.numerator();
        if (p > 0)
          derive({FactKind::rank_exact, f.a, Slope(), p,
                  {"lspace-rank", "an L-space has rank equal to its first homology order", {i}}});
        // floor-step
        Integer m = f.a.floor();
        if (m < 1) m = 1;
        if (Slope(m, Integer(1)) != f.a)
          derive({FactKind::lspace_at, Slope(m, Integer(1)), Slope(), Integer(0),
                  {"floor-step",
                   "a positive L-space slope forces the floor (at least 1) to be one too",
                   {i}}});
        // integer-ladder
        if (f.a.is_integer() && f.a.numerator() >= 1)
          derive({FactKind::lspace_from, f.a, Slope(), Integer(0),
                  {"integer-ladder",
                   "an integer L-space slope n >= 1 gives L-spaces at every rational s >= n",
                   {i}}});
        // interval-below-one (kept for contradiction mining; subsumed by the
        // below-one exclusion once the knot is known nontrivial)
        if (f.a < Slope(1, 1)) {
          Rational r = f.a.to_rational();
          Rational ratio = r / (Rational(1) - r);
          Integer m2 = ratio.floor();
          if (m2 < 1) m2 = 1;
          Slope lo(m2, m2 + 1);
          derive({FactKind::lspace_interval, lo, Slope(1, 1), Integer(0),
                  {"interval-below-one",
                   "an L-space slope in (0,1) gives L-spaces on [m/(m+1), 1]",
                   {i}}});
        }
        // small-slope dichotomy
        if (knot.nontrivial && *knot.nontrivial && f.a < Slope(2, 1)) {
          if (knot.genus && *knot.genus != 1) {
            size_t self = i;
            record_conflict(self, self, f.a,
                            "small-slope-dichotomy: an L-space slope below 2 on a nontrivial "
                            "knot forces genus 1, but the stored genus differs");
          } else if (knot.alexander && !alexander_in_small_slope_dichotomy(*knot.alexander)) {
            size_t self = i;
            record_conflict(self, self, f.a,
                            "small-slope-dichotomy: an L-space slope below 2 on a nontrivial "
                            "knot forces the Alexander polynomial of the trefoil or the "
                            "figure eight, but the stored polynomial is neither");
          }
        }
        break;
      }
      case FactKind::lspace_from: {
        // membership is evaluated lazily; nothing to expand
        break;
      }
      default:
        break;
    }
  }

  // Surgery-triangle interaction between exact ranks at Farey-neighbor
  // slopes and their mediant.
  for (size_t i = 0; i < count && !conflict_; ++i) {
    if (facts_[i].kind != FactKind::rank_exact) continue;
    for (size_t j = i + 1; j < count && !conflict_; ++j) {
      if (facts_[j].kind != FactKind::rank_exact) continue;
      const Fact& fa = facts_[i];
      const Fact& fb = facts_[j];
      if (!farey_neighbors(fa.a, fb.a)) continue;
      Slope med = mediant(fa.a, fb.a);
      RankInterval iv = triangle_rank_interval(fa.value, fb.value);
      // conflict if the mediant has an exact rank outside the interval
      for (size_t k = 0; k < count; ++k) {
        if (facts_[k].kind == FactKind::rank_exact && facts_[k].a == med &&
            !iv.contains(facts_[k].value)) {
          record_conflict(j, k, med, "surgery-triangle-bound: rank outside the admissible range");
          break;
        }
      }
      if (conflict_) break;
      if (med.numerator() > 0 && iv.lo > med.numerator())
        derive({FactKind::rank_lower, med, Slope(), iv.lo,
                {"surgery-triangle-bound",
                 "the surgery triangle forces the mediant rank above the homology order",
                 {i, j}}});
    }
  }

  return grew && !conflict_;
}

void LSpaceKB::deduce() {
  while (pass()) {
  }
}

LSpaceKB lspace_deduce(LSpaceKB kb) {
  kb.deduce();
  return kb;
}

LSpaceStatus LSpaceKB::lspace_status(const Slope& s) const {
  for (const auto& f : facts_) {
    switch (f.kind) {
      case FactKind::lspace_at:
        if (f.a == s) return LSpaceStatus::yes;
        break;
      case FactKind::not_lspace_at:
        if (f.a == s) return LSpaceStatus::no;
        break;
      case FactKind::lspace_from:
        if (!s.is_infinite() && s >= f.a) return LSpaceStatus::yes;
        break;
      case FactKind::lspace_interval:
        if (s >= f.a && s <= f.b) return LSpaceStatus::yes;
        break;
      case FactKind::not_lspace_interval:
        if (s > f.a && s < f.b) return LSpaceStatus::no;
        break;
      default:
        break;
    }
  }
  return LSpaceStatus::unknown;
}

std::optional<Integer> LSpaceKB::rank_exact_at(const Slope& s) const {
  for (const auto& f : facts_)
    if (f.kind == FactKind::rank_exact && f.a == s) return f.value;
  return std::nullopt;
}

std::string LSpaceKB::fact_string(size_t i) const {
  const Fact& f = facts_[i];
  std::ostringstream os;
  os << "[" << i << "] ";
  switch (f.kind) {
    case FactKind::lspace_at: os << "L-space at " << f.a.str(); break;
    case FactKind::not_lspace_at: os << "not an L-space at " << f.a.str(); break;
    case FactKind::lspace_from: os << "L-space at every s >= " << f.a.str(); break;
    case FactKind::lspace_interval:
      os << "L-space on [" << f.a.str() << ", " << f.b.str() << "]";
      break;
    case FactKind::not_lspace_interval:
      os << "no L-spaces on (" << f.a.str() << ", " << f.b.str() << ")";
      break;
    case FactKind::rank_exact: os << "rank at " << f.a.str() << " = " << f.value; break;
    case FactKind::rank_lower: os << "rank at " << f.a.str() << " >= " << f.value; break;
  }
  os << "  (" << f.how.rule;
  if (!f.how.premises.empty()) {
    os << "; from";
    for (size_t p : f.how.premises) os << " #" << p;
  }
  os << ")";
  return os.str();
}

std::vector<size_t> LSpaceKB::chain(size_t i) const {
  std::vector<size_t> out;
  std::vector<size_t> stack{i};
  std::vector<bool> seen(facts_.size(), false);
  while (!stack.empty()) {
    size_t c = stack.back();
    stack.pop_back();
    if (seen[c]) continue;
    seen[c] = true;
    out.push_back(c);
    for (size_t p : facts_[c].how.premises) stack.push_back(p);
  }
  std::sort(out.begin(), out.end());
  return out;
}

std::string LSpaceKB::trace() const {
  std::ostringstream os;
  for (size_t i = 0; i < facts_.size(); ++i) os << fact_string(i) << "\n";
  if (conflict_) {
    os << "CONTRADICTION at slope " << conflict_->witness.str() << ": " << conflict_->note
       << "\n";
    for (size_t c : chain(conflict_->fact_a)) os << "  " << fact_string(c) << "\n";
    if (conflict_->fact_b != conflict_->fact_a)
      for (size_t c : chain(conflict_->fact_b)) os << "  " << fact_string(c) << "\n";
  }
  return os.str();
}

}  // namespace su2cert
