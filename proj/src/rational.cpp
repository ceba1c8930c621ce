#include "su2cert/rational.hpp"

#include <ostream>
#include <sstream>

namespace su2cert {

Rational Rational::from_string(const std::string& s) {
  auto slash = s.find('/');
  try {
    if (slash == std::string::npos) return Rational(Integer(s));
    Integer num(s.substr(0, slash));
    Integer den(s.substr(slash + 1));
    return Rational(num, den);
  } catch (const std::invalid_argument&) {
    throw std::invalid_argument("Rational: cannot parse '" + s + "'");
  }
}

Rational Rational::pow(long e) const {
  if (e == 0) return Rational(1);
  if (is_zero()) {
    if (e < 0) throw std::domain_error("Rational: 0 to a negative power");
    return Rational(0);
  }
  Rational base = e < 0 ? inverse() : *this;
  unsigned long n = e < 0 ? static_cast<unsigned long>(-e) : static_cast<unsigned long>(e);
  Integer num, den;
  mpz_pow_ui(num.get_mpz_t(), base.numerator().get_mpz_t(), n);
  mpz_pow_ui(den.get_mpz_t(), base.denominator().get_mpz_t(), n);
  return Rational(num, den);
}

std::string Rational::str() const {
  std::ostringstream os;
  os << *this;
  return os.str();
}

std::ostream& operator<<(std::ostream& os, const Rational& r) {
  os << r.v_.get_num();
  if (r.v_.get_den() != 1) os << '/' << r.v_.get_den();
  return os;
}

std::string GaussianRational::str() const {
  std::ostringstream os;
  os << *this;
  return os.str();
}

std::ostream& operator<<(std::ostream& os, const GaussianRational& z) {
  if (z.im().is_zero()) return os << z.re();
  if (z.re().is_zero()) return os << z.im() << "i";
  os << z.re() << (z.im().sign() >= 0 ? "+" : "") << z.im() << "i";
  return os;
}

}  // namespace su2cert
