#include "cuspidal/rational.hpp"

#include <ostream>

namespace cuspidal {

Rational Rational::from_string(std::string_view s) {
  auto slash = s.find('/');
  try {
    if (slash == std::string_view::npos) {
      return Rational(mpz_class(std::string(s)));
    }
    mpz_class num(std::string(s.substr(0, slash)));
    mpz_class den(std::string(s.substr(slash + 1)));
    return Rational(num, den);
  } catch (const std::invalid_argument&) {
    fail(ErrorCode::parse_error, "malformed rational: '" + std::string(s) + "'");
  }
}

Rational Rational::pow(unsigned long e) const {
  mpz_class num, den;
  mpz_pow_ui(num.get_mpz_t(), q_.get_num().get_mpz_t(), e);
  mpz_pow_ui(den.get_mpz_t(), q_.get_den().get_mpz_t(), e);
  Rational r;
  r.q_ = mpq_class(num, den);  // already canonical: num/den coprime implies powers coprime
  return r;
}

std::string Rational::str() const {
  if (q_.get_den() == 1) return q_.get_num().get_str();
  return q_.get_num().get_str() + "/" + q_.get_den().get_str();
}

std::ostream& operator<<(std::ostream& os, const Rational& r) { return os << r.str(); }

}  // namespace cuspidal
