#include "su2cert/certify.hpp"

#include <sstream>

#include "su2cert/cyclotomic.hpp"
#include "su2cert/lspace.hpp"

namespace su2cert {

const char* to_string(Conclusion c) {
  switch (c) {
    case Conclusion::nontrivial_rep: return "nontrivial_rep";
    case Conclusion::irreducible_rep: return "irreducible_rep";
    case Conclusion::no_certificate: return "no_certificate";
  }
  return "?";
}

namespace {

std::string istr(const Integer& v) { return v.get_str(); }
std::string lstr(long v) { return std::to_string(v); }

ChainStep step(std::string rule, std::string statement,
               std::map<std::string, std::string> params = {}) {
  return ChainStep{std::move(rule), std::move(statement), std::move(params)};
}

/// Replays the L-space exclusion used by the surgery routes: hypothetically
/// asserting an L-space at `slope` must collide with the given rank bound.
bool lspace_exclusion_holds(const Slope& slope, const Slope& rank_slope,
                            const Integer& rank_bound) {
  LSpaceKB kb;
  kb.knot.nontrivial = true;
  kb.assert_lspace(slope, "hypothetical");
  kb.assert_rank(rank_slope, rank_bound, /*exact=*/false, "stein rank bound");
  kb.deduce();
  return kb.contradicted();
}

/// Ladder-only variant: asserting an L-space at `slope` forces L-spaces at
/// every rational >= the floor threshold.
bool lspace_ladder_reaches(const Slope& slope, const Slope& target) {
  LSpaceKB kb;
  kb.assert_lspace(slope, "hypothetical");
  kb.deduce();
  return kb.lspace_status(target) == LSpaceStatus::yes;
}

struct MirrorData {
  std::optional<long> sl;
  std::optional<long> tb;
  std::optional<long> genus;
  bool positive = false;
};

MirrorData effective_mirror_data(const KnotRecord& knot) {
  MirrorData d;
  d.genus = knot.genus;
  d.sl = knot.sl_bar_mirror;
  d.tb = knot.tb_bar_mirror;
  d.positive = knot.mirror_positive;
  if (knot.mirror_positive) {
    if (!knot.genus || *knot.genus < 1)
      throw std::invalid_argument(knot.name +
                                  ": a positive mirror requires genus data with g >= 1");
    long derived = 2 * *knot.genus - 1;
    if (d.sl && *d.sl != derived)
      throw std::invalid_argument(
          knot.name + ": stored mirror self-linking contradicts positivity (must be 2g-1)");
    if (d.tb && *d.tb != derived)
      throw std::invalid_argument(
          knot.name + ": stored mirror Thurston-Bennequin contradicts positivity (must be 2g-1)");
    d.sl = derived;
    d.tb = derived;
  }
  return d;
}

Certificate certify_surgery(const SurgeryQuery& q) {
  q.knot.validate();
  const Slope& r = q.slope;
  if (r.is_infinite() || r.is_zero())
    throw std::invalid_argument("surgery certification needs a nonzero finite slope");
  Integer p = abs(r.numerator());
  MirrorData mirror = effective_mirror_data(q.knot);

  Certificate cert;
  bool excluded = false;  // established: the surgery is not an instanton L-space

  if (r.sign() > 0 && mirror.sl && *mirror.sl >= 0) {
    long sl = *mirror.sl;
    Integer from = r.floor();
    if (from < 1) from = 1;
    cert.chain.push_back(step(
        "mirror-sl-nonneg",
        "the mirror of " + q.knot.name + " has maximal self-linking " + lstr(sl) +
            " >= 0 (odd), so it admits Legendrian representatives with tb - rot = " + lstr(sl),
        {{"sl", lstr(sl)}}));
    cert.chain.push_back(step(
        "stabilization-rotations",
        "for every sufficiently large n, stabilizations and orientation reversals give at "
        "least " + lstr(sl) + " + n >= n + 1 distinct rotation numbers at tb = -n + 1",
        {{"sl", lstr(sl)}}));
    cert.chain.push_back(step(
        "gompf-distinct",
        "distinct rotation numbers give Stein structures on the -n-framed trace with "
        "pairwise distinct first Chern classes",
        {}));
    cert.chain.push_back(step(
        "stein-rank-bound",
        "n + 1 Stein structures with distinct Chern classes force rank >= n + 1 for the "
        "framed instanton homology of the n-surgery (rank is mirror-insensitive)",
        {}));
    cert.chain.push_back(step(
        "lspace-ladder-exclusion",
        "an instanton L-space at slope " + r.str() + " would force L-spaces (rank = n) at "
        "every integer n >= " + istr(from) + ", beaten by the rank bound for large n; so the " +
            r.str() + "-surgery is not an instanton L-space",
        {{"slope", r.str()}, {"from", istr(from)}}));
    excluded = true;
  } else if (mirror.positive && r.sign() < 0 && mirror.genus &&
             r > Slope(-*mirror.genus, 1)) {
    long g = *mirror.genus;
    Slope mirror_slope = r.negated();  // surgery slope on the mirror knot
    cert.chain.push_back(step(
        "mirror-positive",
        "the mirror of " + q.knot.name + " is a positive knot of genus " + lstr(g) +
            ", so its maximal Thurston-Bennequin number is 2g-1 = " + lstr(2 * g - 1),
        {{"genus", lstr(g)}}));
    cert.chain.push_back(step(
        "stabilization-fan",
        lstr(g - 1) + " stabilizations of a tb-maximizing representative give " + lstr(g) +
            " distinct rotation numbers at tb = " + lstr(g),
        {{"genus", lstr(g)}}));
    cert.chain.push_back(step(
        "gompf-distinct",
        "distinct rotation numbers give Stein structures on the (g-1)-framed trace with "
        "pairwise distinct first Chern classes",
        {}));
    cert.chain.push_back(step(
        "stein-rank-bound",
        "so the (g-1)-surgery on the mirror has framed instanton rank at least g = " + lstr(g),
        {{"slope", Slope(g - 1, 1).str()}, {"rank", lstr(g)}}));
    cert.chain.push_back(step(
        "lspace-ladder-exclusion",
        "an instanton L-space at slope " + mirror_slope.str() + " on the mirror would force "
        "an L-space (rank = g-1) at slope " + lstr(g - 1) + ", against the rank bound; so "
        "neither that surgery nor its orientation reverse, the " + r.str() + "-surgery on " +
            q.knot.name + ", is an instanton L-space",
        {{"slope", mirror_slope.str()}, {"rank_slope", Slope(g - 1, 1).str()},
         {"rank", lstr(g)}}));
    excluded = true;
  } else {
    cert.conclusion = Conclusion::no_certificate;
    std::ostringstream why;
    why << "nearest failing hypothesis: ";
    if (r.sign() > 0) {
      why << "no recorded nonnegative maximal self-linking for the mirror of " << q.knot.name;
    } else if (!mirror.positive) {
      why << "negative slope " << r.str() << " needs a positive mirror, and " << q.knot.name
          << " has no positivity data";
    } else {
      why << "slope " << r.str() << " is not above -genus = " << -*mirror.genus;
    }
    cert.caveat = why.str();
    if (p > 1)
      cert.caveat += "; note |H1| = " + istr(p) +
                     " > 1 still gives nontrivial reducible representations";
    return cert;
  }

  if (excluded) {
    cert.chain.push_back(step(
        "rank-exceeds-order",
        "a non-L-space p/q-surgery has framed instanton rank at least |p| + 2 > |p| = |H1|",
        {{"p", istr(p)}}));
    // cyclical finiteness
    if (q.user_cyclically_finite) {
      cert.chain.push_back(step(
          "user-cyclically-finite",
          "cyclical finiteness supplied as an explicit hypothesis (e.g. the universal "
          "abelian cover is a rational homology sphere)",
          {}));
    } else if (q.knot.alexander) {
      if (!cyclically_finite_surgery(*q.knot.alexander, p)) {
        Certificate fail;
        fail.conclusion = Conclusion::no_certificate;
        fail.caveat =
            "alexander-cyclotomic test failed: some |p|-th root of unity is a zero of the "
            "Alexander polynomial with doubled variable (p = " + istr(p) +
            "); cyclical finiteness is not established, so the Morse-Bott step does not apply";
        return fail;
      }
      cert.chain.push_back(step(
          "alexander-cyclotomic",
          "no |p|-th root of unity is a zero of the Alexander polynomial with doubled "
          "variable, so the surgered manifold has cyclically finite fundamental group",
          {{"p", istr(p)}}));
    } else {
      Certificate fail;
      fail.conclusion = Conclusion::no_certificate;
      fail.caveat =
          "nearest failing hypothesis: no Alexander polynomial on record and no "
          "user-certified cyclical finiteness";
      return fail;
    }
    cert.chain.push_back(step(
        "reducible-morse-bott",
        "a rational homology sphere with cyclically finite fundamental group and framed "
        "instanton rank above |H1| admits an irreducible representation",
        {}));
    cert.conclusion = Conclusion::irreducible_rep;
  }
  return cert;
}

Certificate certify_stein(const SteinQuery& q) {
  q.model.validate();
  IntMatrix f = q.model.framed_matrix();
  CokernelStructure ck = cokernel_structure(f);
  FiniteAbelianGroup h1 = FiniteAbelianGroup::from_cyclic_factors(ck.invariant_factors);

  Certificate cert;
  if (ck.free_rank > 0) {
    cert.chain.push_back(step(
        "infinite-abelianization",
        "the framed linking matrix is singular, so the boundary has b1 > 0 and its "
        "fundamental group surjects onto Z, giving nontrivial abelian representations",
        {{"free_rank", lstr(ck.free_rank)}}));
    cert.conclusion = Conclusion::nontrivial_rep;
    return cert;
  }

  std::vector<std::vector<long>> vectors = {q.model.chern_vector()};
  vectors.insert(vectors.end(), q.extra_chern_vectors.begin(), q.extra_chern_vectors.end());
  long n = rank_lower_bound_from_stein(vectors, q.torsion_free);
  bool base_nonzero = !chern_is_zero(q.model.chern_vector());
  if (base_nonzero && n < 2) {
    // the conjugate Stein structure has the negated Chern vector
    n = 2;
  }
  Integer d = h1.order();

  if (d == 1) {
    if (base_nonzero || n >= 2) {
      if (base_nonzero)
        cert.chain.push_back(step(
            "conjugate-chern",
            "the Chern vector is nonzero, so together with the conjugate Stein structure "
            "there are two Stein structures with distinct Chern classes",
            {}));
      else
        cert.chain.push_back(step("gompf-distinct",
                                  "the supplied family contains " + lstr(n) +
                                      " pairwise distinct Chern vectors",
                                  {{"count", lstr(n)}}));
      cert.chain.push_back(step(
          "stein-rank-bound",
          "distinct Chern classes force framed instanton rank at least 2 on the boundary",
          {{"rank", "2"}}));
      cert.chain.push_back(step(
          "rank-two-nontrivial",
          "an integer homology sphere with framed instanton rank above 1 has a nontrivial "
          "representation",
          {}));
      cert.conclusion = Conclusion::nontrivial_rep;
      return cert;
    }
    bool even = is_even_form(f);
    bool negdef = definiteness(f) == Definiteness::negative_definite;
    if (even && negdef && f.rows() >= 1) {
      cert.chain.push_back(step(
          "froyshov-even-form",
          "the intersection form is even, unimodular and negative definite, hence not "
          "diagonalizable over the integers (a definite diagonal form is odd); the "
          "instanton h-invariant of the boundary is then positive, which forces a "
          "nontrivial representation",
          {{"rank", lstr(f.rows())}}));
      cert.conclusion = Conclusion::nontrivial_rep;
      return cert;
    }
    cert.conclusion = Conclusion::no_certificate;
    cert.caveat =
        "nearest failing hypothesis: zero Chern vector and the intersection form is not "
        "an even negative-definite unimodular form";
    return cert;
  }

  // d > 1: reducibles exist; try to upgrade to irreducible
  bool cyc = small_h1_cyclic_finite(h1) || q.universal_abelian_cover_qhs;
  if (Integer(n) > d && cyc) {
    cert.chain.push_back(step("gompf-distinct",
                              "the family realizes " + lstr(n) + " distinct Chern vectors",
                              {{"count", lstr(n)}}));
    cert.chain.push_back(step(
        "stein-rank-bound",
        "so the boundary has framed instanton rank at least " + lstr(n) + " > |H1| = " + istr(d),
        {{"rank", lstr(n)}}));
    cert.chain.push_back(step("rank-exceeds-order", "rank exceeds the first homology order",
                              {{"p", istr(d)}}));
    cert.chain.push_back(step(
        q.universal_abelian_cover_qhs ? "user-cyclically-finite" : "cyclic-finiteness-group",
        q.universal_abelian_cover_qhs
            ? "cyclical finiteness supplied as an explicit hypothesis"
            : "H1 = " + h1.str() + " is cyclic of prime-power order, Z/2 + Z/2, or of order "
              "at most 5, so the fundamental group is cyclically finite",
        {}));
    cert.chain.push_back(step(
        "reducible-morse-bott",
        "a rational homology sphere with cyclically finite fundamental group and framed "
        "instanton rank above |H1| admits an irreducible representation",
        {}));
    cert.conclusion = Conclusion::irreducible_rep;
    return cert;
  }
  cert.chain.push_back(step(
      "finite-abelianization",
      "|H1| = " + istr(d) + " > 1 gives nontrivial representations through characters of "
      "the first homology",
      {{"order", istr(d)}}));
  cert.conclusion = Conclusion::nontrivial_rep;
  if (Integer(n) <= d)
    cert.caveat = "irreducibility not certified: only " + lstr(n) +
                  " distinct Chern vectors for |H1| = " + istr(d);
  else
    cert.caveat = "irreducibility not certified: no cyclical-finiteness evidence for H1 = " +
                  h1.str();
  return cert;
}

Certificate certify_seifert(const SeifertQuery& q) {
  const SeifertData& d = q.data;
  Certificate cert;
  auto h1 = seifert_h1(d);
  if (!h1) {
    cert.chain.push_back(step(
        "infinite-abelianization",
        "the Euler number contribution vanishes, so b1 > 0 and nontrivial abelian "
        "representations exist",
        {}));
    cert.conclusion = Conclusion::nontrivial_rep;
    return cert;
  }
  if (*h1 > 1) {
    cert.chain.push_back(step(
        "finite-abelianization",
        "|H1| = " + istr(*h1) + " > 1 gives nontrivial representations through characters "
        "of the first homology",
        {{"order", istr(*h1)}}));
    cert.conclusion = Conclusion::nontrivial_rep;
    return cert;
  }
  // homology sphere
  if (d.fiber_count() <= 2) {
    cert.conclusion = Conclusion::no_certificate;
    cert.caveat =
        "the data describes the three-sphere (at most two exceptional fibers with |H1| = 1); "
        "its fundamental group is trivial";
    return cert;
  }
  if (sfs_lspace_classify(d)) {
    cert.conclusion = Conclusion::no_certificate;
    cert.caveat =
        "the data normalizes to the Poincare sphere, the unique Seifert instanton L-space; "
        "this method abstains (its fundamental group does admit irreducible "
        "representations, but not by this route)";
    return cert;
  }
  SteinPlumbing p = seifert_stein_diagram(d);
  cert.chain.push_back(step(
      "seifert-stein-filling",
      std::string("the star-shaped Legendrian plumbing on ") +
          (p.built_on_reverse ? "the reversed orientation" : "this orientation") +
          " is a Stein domain with b2 = " + lstr(p.b2()) + " > 0",
      {{"b2", lstr(p.b2())}, {"reversed", p.built_on_reverse ? "1" : "0"}}));
  cert.chain.push_back(step(
      "stein-not-homology-ball",
      "a homology sphere bounding a Stein domain with b2 > 0 (not a homology ball) has a "
      "nontrivial representation",
      {}));
  bool c1 = seifert_c1_nonzero_filling(d);
  if (c1)
    cert.chain.push_back(step(
        "conjugate-chern",
        "a filling with nonzero first Chern class exists, so the boundary is not an "
        "instanton L-space",
        {}));
  cert.conclusion = Conclusion::nontrivial_rep;
  return cert;
}

Certificate certify_raw(const RawQuery& q) {
  Integer d = q.h1.order();
  Certificate cert;
  std::optional<Integer> rank = q.rank_value;
  if (rank && q.rank_is_exact) {
    if (*rank < d) throw std::invalid_argument("raw query: exact rank below |H1|");
    if ((*rank - d) % 2 != 0)
      throw std::invalid_argument("raw query: exact rank and |H1| differ in parity");
  }
  bool rank_exceeds = rank && *rank > d;

  if (d == 1) {
    if (rank_exceeds) {
      cert.chain.push_back(step("rank-two-nontrivial",
                                "an integer homology sphere with framed instanton rank " +
                                    istr(*rank) + " > 1 has a nontrivial representation",
                                {{"rank", istr(*rank)}}));
      cert.conclusion = Conclusion::nontrivial_rep;
      return cert;
    }
    cert.conclusion = Conclusion::no_certificate;
    cert.caveat = "nearest failing hypothesis: no rank evidence above |H1| = 1";
    return cert;
  }

  bool cyc = false;
  std::string cyc_rule, cyc_statement;
  if (q.universal_abelian_cover_qhs) {
    cyc = true;
    cyc_rule = "user-cyclically-finite";
    cyc_statement = "cyclical finiteness supplied as an explicit hypothesis";
  } else if (small_h1_cyclic_finite(q.h1)) {
    cyc = true;
    cyc_rule = "cyclic-finiteness-group";
    cyc_statement = "H1 = " + q.h1.str() +
                    " is cyclic of prime-power order, Z/2 + Z/2, or of order at most 5";
  } else if (q.alexander && q.surgery_p) {
    if (abs(*q.surgery_p) != d)
      throw std::invalid_argument("raw query: surgery p does not match |H1|");
    if (cyclically_finite_surgery(*q.alexander, *q.surgery_p)) {
      cyc = true;
      cyc_rule = "alexander-cyclotomic";
      cyc_statement =
          "no |p|-th root of unity is a zero of the Alexander polynomial with doubled "
          "variable";
    }
  }

  if (rank_exceeds && cyc) {
    cert.chain.push_back(step("rank-exceeds-order",
                              "rank " + istr(*rank) + " exceeds |H1| = " + istr(d),
                              {{"p", istr(d)}, {"rank", istr(*rank)}}));
    cert.chain.push_back(step(cyc_rule, cyc_statement, {}));
    cert.chain.push_back(step(
        "reducible-morse-bott",
        "a rational homology sphere with cyclically finite fundamental group and framed "
        "instanton rank above |H1| admits an irreducible representation",
        {}));
    cert.conclusion = Conclusion::irreducible_rep;
    return cert;
  }

  cert.chain.push_back(step(
      "finite-abelianization",
      "|H1| = " + istr(d) + " > 1 gives nontrivial representations through characters of "
      "the first homology",
      {{"order", istr(d)}}));
  cert.conclusion = Conclusion::nontrivial_rep;
  cert.caveat = rank_exceeds
                    ? "irreducibility not certified: no cyclical-finiteness evidence"
                    : "irreducibility not certified: no rank evidence above |H1|";
  return cert;
}

}  // namespace

Certificate certify(const CertifyQuery& query) {
  return std::visit(
      [](const auto& q) -> Certificate {
        using T = std::decay_t<decltype(q)>;
        if constexpr (std::is_same_v<T, SteinQuery>) return certify_stein(q);
        if constexpr (std::is_same_v<T, SurgeryQuery>) return certify_surgery(q);
        if constexpr (std::is_same_v<T, SeifertQuery>) return certify_seifert(q);
        if constexpr (std::is_same_v<T, RawQuery>) return certify_raw(q);
      },
      query);
}

namespace {

bool replay_step(const CertifyQuery& query, const ChainStep& s) {
  const SurgeryQuery* surgery = std::get_if<SurgeryQuery>(&query);
  const SteinQuery* stein = std::get_if<SteinQuery>(&query);
  const SeifertQuery* seifert = std::get_if<SeifertQuery>(&query);
  const RawQuery* raw = std::get_if<RawQuery>(&query);

  auto param = [&](const std::string& key) -> std::optional<std::string> {
    auto it = s.params.find(key);
    if (it == s.params.end()) return std::nullopt;
    return it->second;
  };

  if (s.rule == "mirror-sl-nonneg") {
    if (!surgery) return false;
    MirrorData m = effective_mirror_data(surgery->knot);
    auto sl = param("sl");
    return sl && m.sl && *m.sl == std::stol(*sl) && *m.sl >= 0 && (*m.sl % 2 != 0);
  }
  if (s.rule == "stabilization-rotations") {
    if (!surgery) return false;
    MirrorData m = effective_mirror_data(surgery->knot);
    if (!m.sl || *m.sl < 0) return false;
    // spot-check the count guarantee at a concrete large level
    long sl = *m.sl;
    RotationSpectrum spec = rotation_spectrum(sl, 0, std::max(1 - sl, 0L) + sl + 40);
    return spec.guaranteed >= sl + 1;
  }
  if (s.rule == "stabilization-fan") {
    if (!surgery) return false;
    auto g = param("genus");
    if (!g) return false;
    long gv = std::stol(*g);
    auto fan = stabilization_fan(0, gv - 1);
    std::set<long> distinct(fan.begin(), fan.end());
    return static_cast<long>(distinct.size()) == gv;
  }
  if (s.rule == "mirror-positive") {
    if (!surgery) return false;
    auto g = param("genus");
    return g && surgery->knot.mirror_positive && surgery->knot.genus &&
           *surgery->knot.genus == std::stol(*g) && std::stol(*g) >= 1;
  }
  if (s.rule == "gompf-distinct" || s.rule == "stein-rank-bound" || s.rule == "mirror-rank")
    return true;  // bookkeeping steps; their numeric content is checked around them
  if (s.rule == "lspace-ladder-exclusion") {
    auto slope = param("slope");
    if (!slope) return false;
    Slope at = Slope::from_string(*slope);
    auto rank_slope = param("rank_slope");
    if (rank_slope) {
      auto rank = param("rank");
      if (!rank) return false;
      return lspace_exclusion_holds(at, Slope::from_string(*rank_slope), Integer(*rank));
    }
    auto from = param("from");
    if (!from) return false;
    // the ladder reaches arbitrarily large integers, where the asymptotic
    // rank bound wins
    return lspace_ladder_reaches(at, Slope(Integer(*from) + 1000003, Integer(1)));
  }
  if (s.rule == "rank-exceeds-order") {
    auto p = param("p");
    return p && Integer(*p) >= 1;
  }
  if (s.rule == "alexander-cyclotomic") {
    auto p = param("p");
    if (!p) return false;
    const RatPoly* delta = nullptr;
    if (surgery && surgery->knot.alexander) delta = &*surgery->knot.alexander;
    if (raw && raw->alexander) delta = &*raw->alexander;
    if (!delta) return false;
    return cyclically_finite_surgery(*delta, Integer(*p));
  }
  if (s.rule == "user-cyclically-finite") {
    if (surgery) return surgery->user_cyclically_finite;
    if (stein) return stein->universal_abelian_cover_qhs;
    if (raw) return raw->universal_abelian_cover_qhs;
    return false;
  }
  if (s.rule == "cyclic-finiteness-group") {
    if (stein) {
      auto ck = cokernel_structure(stein->model.framed_matrix());
      return small_h1_cyclic_finite(FiniteAbelianGroup::from_cyclic_factors(ck.invariant_factors));
    }
    if (raw) return small_h1_cyclic_finite(raw->h1);
    return false;
  }
  if (s.rule == "reducible-morse-bott" || s.rule == "rank-two-nontrivial" ||
      s.rule == "stein-not-homology-ball")
    return true;  // inference steps over already-replayed premises
  if (s.rule == "conjugate-chern") {
    if (stein) return !chern_is_zero(stein->model.chern_vector());
    if (seifert) return seifert_c1_nonzero_filling(seifert->data);
    return false;
  }
  if (s.rule == "froyshov-even-form") {
    if (!stein) return false;
    IntMatrix f = stein->model.framed_matrix();
    return is_even_form(f) && h1_order(f) == 1 &&
           definiteness(f) == Definiteness::negative_definite && f.rows() >= 1;
  }
  if (s.rule == "infinite-abelianization") {
    if (stein) return cokernel_structure(stein->model.framed_matrix()).free_rank > 0;
    if (seifert) return !seifert_h1(seifert->data).has_value();
    return false;
  }
  if (s.rule == "finite-abelianization") {
    auto order = param("order");
    if (!order) return false;
    Integer d(*order);
    if (stein) {
      auto ck = cokernel_structure(stein->model.framed_matrix());
      return FiniteAbelianGroup::from_cyclic_factors(ck.invariant_factors).order() == d && d > 1;
    }
    if (seifert) {
      auto h = seifert_h1(seifert->data);
      return h && *h == d && d > 1;
    }
    if (raw) return raw->h1.order() == d && d > 1;
    if (surgery) return abs(surgery->slope.numerator()) == d && d > 1;
    return false;
  }
  if (s.rule == "seifert-stein-filling") {
    if (!seifert) return false;
    auto b2 = param("b2");
    return b2 && seifert_stein_diagram(seifert->data).b2() == std::stol(*b2) &&
           std::stol(*b2) > 0;
  }
  return false;  // unknown rule
}

}  // namespace

bool validate_certificate(const CertifyQuery& query, const Certificate& cert) {
  Certificate again = certify(query);
  if (again.conclusion != cert.conclusion) return false;
  if (again.chain.size() != cert.chain.size()) return false;
  for (size_t i = 0; i < cert.chain.size(); ++i) {
    if (again.chain[i].rule != cert.chain[i].rule) return false;
    if (!replay_step(query, cert.chain[i])) return false;
  }
  return true;
}

}  // namespace su2cert
