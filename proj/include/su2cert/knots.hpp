#pragma once

#include <map>
#include <optional>
#include <string>
#include <vector>

#include "su2cert/laurent.hpp"

namespace su2cert {

/// Curated knot data. Conway polynomials live in z, Alexander polynomials in
/// t with the symmetric normalization Delta(1) = 1, Delta(t) = Delta(1/t),
/// and the two are related by z^2 = t - 2 + 1/t.
///
/// The hypothesis fields sl_bar_mirror, tb_bar_mirror and mirror_positive all
/// describe the MIRROR of the named knot: the certification theorems consume
/// invariants of the mirror of the knot being surgered.
struct KnotRecord {
  std::string name;
  std::optional<RatPoly> conway;     // in z, even powers only
  std::optional<RatPoly> alexander;  // in t, symmetric, value 1 at t = 1
  std::optional<long> genus;         // Seifert genus (mirror-invariant)
  std::optional<long> sl_bar_mirror;
  std::optional<long> tb_bar_mirror;
  bool mirror_positive = false;
  bool nontrivial = true;
  std::string notes;

  /// Cross-checks every populated field; throws with a description on the
  /// first violation.
  void validate() const;
};

/// Two-component-link data used by the Casson machinery. phi1 values are
/// curated (with provenance recorded in `notes`), not recomputed from
/// diagrams.
struct LinkRecord {
  std::string name;
  std::vector<std::string> components;
  long linking_number = 0;
  std::optional<RatPoly> conway;  // in z
  std::optional<Rational> phi1_link;
  std::vector<Rational> phi1_components;
  std::string notes;
};

// ---- Conversions ------------------------------------------------------

/// Substitutes z^2 = t - 2 + 1/t. Requires even powers only (knot case).
RatPoly conway_to_alexander(const RatPoly& conway);

/// Inverse basis change: writes a symmetric Alexander polynomial as a
/// polynomial in z^2 via t^j + t^-j = P_j(z^2), P_0 = 2, P_1 = z^2 + 2,
/// P_{j+1} = (z^2 + 2) P_j - P_{j-1}.
RatPoly alexander_to_conway(const RatPoly& alexander);

/// The z^{k+1} coefficient of a Conway polynomial in Hoste normal form
/// z^{k-1}(a_0 + a_1 z^2 + ...); throws if the normal form is violated.
Rational phi1(const RatPoly& conway, long components);

/// lambda = -m phi1(K1) - n phi1(K2) + m n phi1(L), for a two-component
/// link with linking number zero surgered with coefficients -1/m, -1/n.
Rational hoste_casson(const Integer& m, const Integer& n, const Rational& phi1_k1,
                      const Rational& phi1_k2, const Rational& phi1_link);

/// Casson invariant of +1-surgery: half the second derivative of the
/// Alexander polynomial at 1.
Rational casson_plus_one_surgery(const RatPoly& alexander);

/// Symmetric Alexander polynomial of the (p,q)-torus knot, from the exact
/// quotient (t^{pq}-1)(t-1) / ((t^p-1)(t^q-1)).
RatPoly torus_knot_alexander(long p, long q);

/// Alexander polynomial of the (p,q)-cable (longitudinal winding q >= 1):
/// Delta_K(t^q) times the (p,q)-torus factor.
RatPoly cable_alexander(const RatPoly& alexander, long p, long q);

/// Seifert genus of the (p,q)-cable of a genus-g knot: q g + (p-1)(q-1)/2.
long cable_genus(long g, long p, long q);

/// a t - (2a - 1) + a/t, the general genus-one symmetric form.
RatPoly genus1_alexander(long a);

// ---- Skein combination -------------------------------------------------

/// Value of a skein expression: a known Conway polynomial plus a Q[z]-linear
/// combination of named formal unknowns, each carrying a guaranteed
/// z-divisibility (its Conway polynomial is divisible by z^divisibility).
class SkeinValue {
 public:
  struct UnknownPart {
    RatPoly coeff;       // in z
    long divisibility;   // unknown = z^divisibility * (polynomial in z^2)
  };

  SkeinValue() : known_(RatPoly::zero("z")) {}
  explicit SkeinValue(RatPoly known) : known_(std::move(known)) {}
  static SkeinValue unknown(const std::string& name, long divisibility);

  const RatPoly& known() const { return known_; }
  const std::map<std::string, UnknownPart>& unknowns() const { return unknowns_; }
  bool has_unknowns() const { return !unknowns_.empty(); }

  SkeinValue operator-() const;
  SkeinValue& operator+=(const SkeinValue& o);
  friend SkeinValue operator+(SkeinValue a, const SkeinValue& b) { return a += b; }
  friend SkeinValue operator-(SkeinValue a, const SkeinValue& b) { return a += -b; }
  /// Products must stay linear in the unknowns.
  friend SkeinValue operator*(const SkeinValue& a, const SkeinValue& b);
  friend SkeinValue operator*(const RatPoly& p, const SkeinValue& v);

  /// Adding a positively (sign = +1) or negatively (-1) oriented meridian
  /// multiplies the Conway polynomial by +-z.
  SkeinValue meridian(int sign) const;

  /// A split union has vanishing Conway polynomial.
  static SkeinValue split_union() { return SkeinValue(); }

  /// The z^e coefficient, when the unknown parts provably cannot contribute
  /// to it (their coefficient times z^divisibility starts above e).
  std::optional<Rational> coefficient(long e) const;

 private:
  RatPoly known_;
  std::map<std::string, UnknownPart> unknowns_;
};

/// phi1 for a skein value with a k-component normal form; nullopt when the
/// unknowns could contribute.
std::optional<Rational> phi1(const SkeinValue& v, long components);

// ---- Registry ----------------------------------------------------------

/// Append-only store of curated knot and link records.
class KnotTable {
 public:
  /// The built-in table.
  static const KnotTable& builtin();

  void add(KnotRecord record);
  void add_link(LinkRecord record);

  const KnotRecord& knot(const std::string& name) const;
  const LinkRecord& link(const std::string& name) const;
  bool has_knot(const std::string& name) const { return knots_.count(name) > 0; }
  bool has_link(const std::string& name) const { return links_.count(name) > 0; }
  std::vector<std::string> knot_names() const;
  std::vector<std::string> link_names() const;

  /// Conway polynomial of a registered knot as a skein value.
  SkeinValue conway_value(const std::string& name) const;

  /// validate() on every record; returns problem descriptions (empty = ok).
  std::vector<std::string> validate_all() const;

 private:
  std::map<std::string, KnotRecord> knots_;
  std::map<std::string, LinkRecord> links_;
};

struct TextNode;  // textio.hpp

/// Structured-text round trip for knot tables (schema "knot-table/1").
KnotTable parse_knot_table(const TextNode& node);
std::string knot_table_to_text(const KnotTable& table);

}  // namespace su2cert
