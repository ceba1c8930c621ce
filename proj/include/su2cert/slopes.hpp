#pragma once

#include <optional>
#include <string>
#include <vector>

#include "su2cert/rational.hpp"

namespace su2cert {

/// Dehn surgery coefficient: reduced fraction p/q with q >= 0 and
/// gcd(|p|, q) = 1; (1, 0) encodes infinity. Infinity compares above every
/// finite slope.
class Slope {
 public:
  Slope() : p_(0), q_(1) {}
  Slope(const Integer& p, const Integer& q) { normalize(p, q); }
  Slope(long p, long q) { normalize(Integer(p), Integer(q)); }
  explicit Slope(long n) : p_(n), q_(1) {}
  explicit Slope(const Rational& r) : p_(r.numerator()), q_(r.denominator()) {}

  static Slope infinity() { return Slope(1, 0); }
  /// Accepts "p/q", "p", and "inf".
  static Slope from_string(const std::string& s);

  const Integer& numerator() const { return p_; }
  const Integer& denominator() const { return q_; }
  bool is_infinite() const { return q_ == 0; }
  bool is_integer() const { return q_ == 1; }
  bool is_zero() const { return p_ == 0 && q_ == 1; }
  int sign() const { return is_infinite() ? 1 : sgn(p_); }

  Rational to_rational() const {
    if (is_infinite()) throw std::domain_error("Slope: infinity is not rational");
    return Rational(p_, q_);
  }
  Integer floor() const { return to_rational().floor(); }

  Slope negated() const { return is_infinite() ? *this : Slope(-p_, q_); }

  friend bool operator==(const Slope& a, const Slope& b) { return a.p_ == b.p_ && a.q_ == b.q_; }
  friend bool operator!=(const Slope& a, const Slope& b) { return !(a == b); }
  friend bool operator<(const Slope& a, const Slope& b) {
    if (a.is_infinite()) return false;
    if (b.is_infinite()) return true;
    return a.p_ * b.q_ < b.p_ * a.q_;
  }
  friend bool operator<=(const Slope& a, const Slope& b) { return a == b || a < b; }
  friend bool operator>(const Slope& a, const Slope& b) { return b < a; }
  friend bool operator>=(const Slope& a, const Slope& b) { return b <= a; }

  friend Slope mediant(const Slope& a, const Slope& b) {
    return Slope(a.p_ + b.p_, a.q_ + b.q_);
  }
  /// |p_a q_b - q_a p_b| = 1, the Farey-neighbor condition.
  friend bool farey_neighbors(const Slope& a, const Slope& b) {
    Integer d = a.p_ * b.q_ - a.q_ * b.p_;
    return d == 1 || d == -1;
  }

  std::string str() const;

 private:
  void normalize(Integer p, Integer q);

  Integer p_, q_;
};

/// Continued fraction r = a0 - 1/(a1 - 1/(... - 1/ak)) with a0 >= n+1 and
/// a1..ak >= 2. Requires finite r > n.
std::vector<Integer> positive_cf(const Slope& r, const Integer& n);

/// Same shape with every entry <= -2. Requires finite r < -1.
std::vector<Integer> negative_cf(const Slope& r);

/// Back-evaluation of a continued fraction [a0; a1, ..., ak].
Slope eval_cf(const std::vector<Integer>& cf);

struct FareyEntry {
  Slope value;
  /// For i >= 2: value = mediant(sequence[parent], sequence[i-1]).
  std::optional<size_t> parent;
};

/// The mediant descent from 1/0 and floor(r) down to r, for finite r > 0
/// nonintegral. Entry 0 is 1/0, entry 1 is floor(r)/1, entry 2 their
/// mediant; each later entry is the mediant of the previous entry and an
/// earlier one chosen so that r stays inside the bracketing interval.
std::vector<FareyEntry> farey_sequence(const Slope& r);

/// rank = p + 2e with e >= 0; returns e. Throws on parity or bound
/// violations (these signal inconsistent input data).
Integer rank_decompose(const Integer& p, const Integer& rank);

/// Admissible values for the third rank in a surgery triangle with the other
/// two ranks a and b: the interval [|a-b|, a+b] stepping by 2 (a + b - c is
/// even).
struct RankInterval {
  Integer lo;
  Integer hi;
  bool contains(const Integer& c) const {
    return c >= lo && c <= hi && (hi - c) % 2 == 0;
  }
  std::vector<Integer> values() const {
    std::vector<Integer> out;
    for (Integer v = lo; v <= hi; v += 2) out.push_back(v);
    return out;
  }
};
RankInterval triangle_rank_interval(const Integer& rank_a, const Integer& rank_b);

/// m-surgery on the (p,q)-cable, for integral m with |m - pq| <= 1:
/// m = pq      -> (p/q)-surgery on the companion, plus a L(q, p) summand;
/// |m - pq| = 1 -> (m/q^2)-surgery on the companion, no summand.
/// Other slopes are rejected.
struct GordonCableResult {
  Slope companion_slope;
  std::optional<std::pair<Integer, Integer>> lens_summand;  // (q, p) of L(q, p)
};
GordonCableResult gordon_cable(long p, long q, const Slope& m);

inline Integer kunneth_rank(const Integer& r1, const Integer& r2) { return r1 * r2; }
inline Integer lens_rank(const Integer& p) {
  if (p <= 0) throw std::invalid_argument("lens_rank: p must be positive");
  return p;
}
inline Integer rp3_rank() { return 2; }

}  // namespace su2cert
