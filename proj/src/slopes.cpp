#include "su2cert/slopes.hpp"

#include <sstream>

#include "su2cert/intmath.hpp"

namespace su2cert {

void Slope::normalize(Integer p, Integer q) {
  if (q < 0) {
    p = -p;
    q = -q;
  }
  if (q == 0) {
    if (p == 0) throw std::invalid_argument("Slope: 0/0");
    p_ = 1;
    q_ = 0;
    return;
  }
  Integer g = gcd(p, q);
  p_ = p / g;
  q_ = q / g;
}

Slope Slope::from_string(const std::string& s) {
  if (s == "inf" || s == "infinity" || s == "1/0") return infinity();
  auto slash = s.find('/');
  try {
    if (slash == std::string::npos) return Slope(Integer(s), Integer(1));
    return Slope(Integer(s.substr(0, slash)), Integer(s.substr(slash + 1)));
  } catch (const std::invalid_argument&) {
    throw std::invalid_argument("Slope: cannot parse '" + s + "'");
  }
}

std::string Slope::str() const {
  if (is_infinite()) return "1/0";
  std::ostringstream os;
  os << p_;
  if (q_ != 1) os << '/' << q_;
  return os.str();
}

std::vector<Integer> positive_cf(const Slope& r, const Integer& n) {
  if (r.is_infinite()) throw std::invalid_argument("positive_cf: infinite slope");
  if (!(r > Slope(n, Integer(1)))) throw std::invalid_argument("positive_cf: requires r > n");
  std::vector<Integer> out;
  Integer p = r.numerator(), q = r.denominator();
  // a = ceil(p/q) >= n+1 at the head; the tail values q/num exceed 1, so
  // every later entry is >= 2.
  for (;;) {
    Integer a;
    mpz_cdiv_q(a.get_mpz_t(), p.get_mpz_t(), q.get_mpz_t());
    out.push_back(a);
    Integer num = a * q - p;  // a - p/q = num/q with 0 <= num < q
    if (num == 0) break;
    p = q;
    q = num;
  }
  return out;
}

std::vector<Integer> negative_cf(const Slope& r) {
  if (r.is_infinite()) throw std::invalid_argument("negative_cf: infinite slope");
  if (!(r < Slope(-1, 1))) throw std::invalid_argument("negative_cf: requires r < -1");
  std::vector<Integer> out;
  Integer p = r.numerator(), q = r.denominator();
  // a = floor(p/q) <= -2; the residual -q/num stays below -1.
  for (;;) {
    Integer a;
    mpz_fdiv_q(a.get_mpz_t(), p.get_mpz_t(), q.get_mpz_t());
    out.push_back(a);
    Integer num = p - a * q;  // 0 <= num < q
    if (num == 0) break;
    p = -q;
    q = num;
  }
  return out;
}

Slope eval_cf(const std::vector<Integer>& cf) {
  if (cf.empty()) throw std::invalid_argument("eval_cf: empty continued fraction");
  Integer num = cf.back(), den = 1;
  for (auto it = cf.rbegin() + 1; it != cf.rend(); ++it) {
    // a - den/num = (a*num - den)/num
    Integer t = *it * num - den;
    den = num;
    num = t;
  }
  return Slope(num, den);
}

std::vector<FareyEntry> farey_sequence(const Slope& r) {
  if (r.is_infinite() || !(r > Slope(0, 1)) || r.is_integer())
    throw std::invalid_argument("farey_sequence: requires finite positive nonintegral r");
  Integer n = r.floor();
  std::vector<FareyEntry> seq;
  seq.push_back({Slope::infinity(), std::nullopt});
  seq.push_back({Slope(n, Integer(1)), std::nullopt});
  // r lies strictly between seq.back() and seq[other] from the second
  // iteration on; each new entry is the mediant of those two.
  size_t other = 0;
  for (;;) {
    size_t prev = seq.size() - 1;
    Slope mid = mediant(seq[other].value, seq[prev].value);
    seq.push_back({mid, other});
    if (mid == r) break;
    const Slope& a = seq[prev].value;
    bool r_below = r < mid;
    bool a_below = a < mid;
    if (r_below == a_below) other = prev;
  }
  return seq;
}

Integer rank_decompose(const Integer& p, const Integer& rank) {
  if (p <= 0) throw std::invalid_argument("rank_decompose: p must be positive");
  if (rank < p)
    throw std::invalid_argument("rank_decompose: rank below |H1| (inconsistent data)");
  if ((rank - p) % 2 != 0)
    throw std::invalid_argument("rank_decompose: rank and p differ in parity (inconsistent data)");
  return (rank - p) / 2;
}

RankInterval triangle_rank_interval(const Integer& rank_a, const Integer& rank_b) {
  return {abs(rank_a - rank_b), rank_a + rank_b};
}

GordonCableResult gordon_cable(long p, long q, const Slope& m) {
  if (q < 1) throw std::invalid_argument("gordon_cable: q must be >= 1");
  if (gcd_long(p, q) != 1) throw std::invalid_argument("gordon_cable: p, q must be coprime");
  if (!m.is_integer())
    throw std::invalid_argument("gordon_cable: only integral surgery slopes are supported");
  Integer mm = m.numerator();
  Integer pq = Integer(p) * Integer(q);
  Integer diff = mm - pq;
  if (diff == 0)
    return {Slope(Integer(p), Integer(q)), std::make_pair(Integer(q), Integer(p))};
  if (diff == 1 || diff == -1) return {Slope(mm, Integer(q) * Integer(q)), std::nullopt};
  throw std::invalid_argument("gordon_cable: unsupported slope (|m - pq| > 1)");
}

}  // namespace su2cert
