#include "su2cert/seifert.hpp"

#include <algorithm>
#include <sstream>

#include "su2cert/intmath.hpp"

namespace su2cert {

SeifertData SeifertData::normalized(Integer e, std::vector<Rational> fractions) {
  std::vector<Rational> kept;
  for (const auto& f : fractions) {
    Integer ip = f.floor();
    Rational frac = f - Rational(ip);
    e += ip;  // keeps e + sum r_i fixed
    if (!frac.is_zero()) kept.push_back(frac);
  }
  std::sort(kept.begin(), kept.end());
  return SeifertData{e, std::move(kept)};
}

SeifertData SeifertData::parse(const std::string& text) {
  auto fail = [&]() -> SeifertData {
    throw std::invalid_argument("SeifertData: cannot parse '" + text + "'");
  };
  std::string s;
  for (char c : text)
    if (!isspace(static_cast<unsigned char>(c))) s += c;
  if (s.size() < 4 || (s[0] != 'M' && s[0] != 'm') || s[1] != '(' || s.back() != ')')
    return fail();
  std::string body = s.substr(2, s.size() - 3);
  auto semi = body.find(';');
  std::string e_part = semi == std::string::npos ? body : body.substr(0, semi);
  if (e_part.empty()) return fail();
  Integer e;
  try {
    e = Integer(e_part);
  } catch (const std::invalid_argument&) {
    return fail();
  }
  std::vector<Rational> fracs;
  if (semi != std::string::npos && semi + 1 < body.size()) {
    std::string rest = body.substr(semi + 1);
    std::istringstream is(rest);
    std::string tok;
    while (std::getline(is, tok, ',')) {
      if (tok.empty()) return fail();
      fracs.push_back(Rational::from_string(tok));
    }
  }
  return normalized(e, std::move(fracs));
}

std::string SeifertData::str() const {
  std::ostringstream os;
  os << "M(" << e;
  if (!fractions.empty()) {
    os << "; ";
    for (size_t i = 0; i < fractions.size(); ++i) {
      if (i) os << ", ";
      os << fractions[i];
    }
  }
  os << ")";
  return os.str();
}

std::optional<Integer> seifert_h1(const SeifertData& d) {
  Rational total(d.e);
  Integer product = 1;
  for (const auto& r : d.fractions) {
    total += r;
    product *= r.denominator();
  }
  Rational h1 = Rational(product) * total;
  if (!h1.is_integer()) throw std::logic_error("seifert_h1: non-integer order");
  Integer out = abs(h1.numerator());
  if (out == 0) return std::nullopt;  // b_1 > 0
  return out;
}

SeifertData seifert_reverse(const SeifertData& d) {
  Integer e = -d.e - Integer(static_cast<long>(d.fractions.size()));
  std::vector<Rational> fracs;
  for (auto it = d.fractions.rbegin(); it != d.fractions.rend(); ++it)
    fracs.push_back(Rational(1) - *it);
  return SeifertData::normalized(e, std::move(fracs));
}

SteinPlumbing seifert_stein_diagram(const SeifertData& d) {
  if (d.e >= -1) {
    if (d.fractions.size() >= 3) {
      SteinPlumbing p = seifert_stein_diagram(seifert_reverse(d));
      p.built_on_reverse = !p.built_on_reverse;
      return p;
    }
    throw std::invalid_argument(
        "seifert_stein_diagram: lens-space data (k <= 2 with e >= -1) has no star plumbing");
  }
  SteinPlumbing p;
  p.central = d.e;
  p.c1_nonzero = d.e < -2;
  for (const auto& r : d.fractions) {
    // -1/r < -1 since 0 < r < 1
    Slope s(-r.denominator(), r.numerator());
    auto chain = negative_cf(s);
    for (const auto& a : chain) p.c1_nonzero = p.c1_nonzero || a < -2;
    p.chains.push_back(std::move(chain));
  }
  return p;
}

SeifertData poincare_sphere() {
  return SeifertData::normalized(
      -2, {Rational(1, 2), Rational(2, 3), Rational(4, 5)});
}

SeifertData trefoil_exception() {
  return SeifertData::normalized(
      -2, {Rational(1, 2), Rational(2, 3), Rational(6, 7)});
}

bool seifert_c1_nonzero_filling(const SeifertData& d) {
  SeifertData r = seifert_reverse(d);
  if (d == trefoil_exception() || r == trefoil_exception()) return true;  // trefoil filling
  return seifert_stein_diagram(d).c1_nonzero;
}

bool sfs_lspace_classify(const SeifertData& d) {
  auto h1 = seifert_h1(d);
  if (!h1 || *h1 != 1)
    throw std::invalid_argument("sfs_lspace_classify: input is not a homology sphere");
  return d == poincare_sphere() || seifert_reverse(d) == poincare_sphere();
}

namespace {

void collect_coprime_subsets(long pmax, long start, std::vector<long>& current,
                             std::vector<std::vector<long>>& out) {
  if (current.size() >= 3) out.push_back(current);
  for (long p = start; p <= pmax; ++p) {
    bool ok = true;
    for (long q : current) ok = ok && gcd_long(p, q) == 1;
    if (!ok) continue;
    current.push_back(p);
    collect_coprime_subsets(pmax, p + 1, current, out);
    current.pop_back();
  }
}

}  // namespace

std::vector<SeifertData> enumerate_homology_spheres(long pmax) {
  // |H1| = 1 forces the multiplicities p_i to be pairwise coprime, and then
  // for each choice of numerators there is at most one integer e per sign of
  // e + sum q_i/p_i.
  std::vector<std::vector<long>> psets;
  std::vector<long> current;
  collect_coprime_subsets(pmax, 2, current, psets);

  std::vector<SeifertData> out;
  for (const auto& ps : psets) {
    Integer product = 1;
    for (long p : ps) product *= p;
    size_t k = ps.size();
    std::vector<long> qs(k, 1);
    for (;;) {
      bool valid = true;
      for (size_t i = 0; i < k; ++i) valid = valid && gcd_long(qs[i], ps[i]) == 1;
      if (valid) {
        Rational sum(0);
        for (size_t i = 0; i < k; ++i) sum += Rational(qs[i], ps[i]);
        for (int sign : {1, -1}) {
          // e + sum = sign/product
          Rational e = Rational(Integer(sign), product) - sum;
          if (!e.is_integer()) continue;
          std::vector<Rational> fracs;
          for (size_t i = 0; i < k; ++i) fracs.emplace_back(qs[i], ps[i]);
          SeifertData d = SeifertData::normalized(e.numerator(), fracs);
          if (d.fractions.size() == k) out.push_back(d);
        }
      }
      // next numerator tuple
      size_t i = 0;
      while (i < k) {
        ++qs[i];
        if (qs[i] < ps[i]) break;
        qs[i] = 1;
        ++i;
      }
      if (i == k) break;
    }
  }
  std::sort(out.begin(), out.end(), [](const SeifertData& a, const SeifertData& b) {
    if (a.e != b.e) return a.e < b.e;
    return a.fractions < b.fractions;
  });
  out.erase(std::unique(out.begin(), out.end()), out.end());
  return out;
}

}  // namespace su2cert
