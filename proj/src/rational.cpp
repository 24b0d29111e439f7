#include "gtsymp/rational.hpp"

#include "gtsymp/error.hpp"

namespace gtsymp {

Rational::Rational(long num, long den) {
  if (den == 0) throw Error(ErrorCode::ZeroDenominator, "rational with zero denominator");
  q_ = mpq_class(num, den);
  q_.canonicalize();
}

Rational Rational::parse(std::string_view text) {
  std::string s(text);
  mpq_class q;
  if (s.empty() || q.set_str(s, 10) != 0) {
    throw Error(ErrorCode::ParseError, "bad rational '" + s + "'");
  }
  if (q.get_den() == 0) throw Error(ErrorCode::ZeroDenominator, "bad rational '" + s + "'");
  q.canonicalize();
  return Rational(q);
}

Rational Rational::inverse() const {
  if (is_zero()) throw Error(ErrorCode::ZeroDenominator, "inverse of zero");
  return Rational(mpq_class(1 / q_));
}

Rational& Rational::operator/=(const Rational& o) {
  if (o.is_zero()) throw Error(ErrorCode::ZeroDenominator, "division by zero");
  q_ /= o.q_;
  return *this;
}

std::string Rational::str() const { return q_.get_str(); }

Rational factorial(unsigned k) {
  mpz_class f = 1;
  for (unsigned i = 2; i <= k; ++i) f *= i;
  return Rational(mpq_class(f));
}

}  // namespace gtsymp
