#pragma once

#include <gmpxx.h>

#include <compare>
#include <cstdint>
#include <ostream>
#include <string>
#include <string_view>

namespace gtsymp {

/// Exact rational scalar. Always in lowest terms with a positive denominator.
class Rational {
 public:
  Rational() = default;
  Rational(long value) : q_(value) {}  // NOLINT(google-explicit-constructor)
  Rational(long num, long den);
  explicit Rational(mpq_class q) : q_(std::move(q)) { q_.canonicalize(); }

  /// Accepts "p" or "p/q" with optional sign.
  static Rational parse(std::string_view text);

  const mpq_class& raw() const { return q_; }
  mpz_class numerator() const { return q_.get_num(); }
  mpz_class denominator() const { return q_.get_den(); }

  bool is_zero() const { return sgn(q_) == 0; }
  bool is_one() const { return q_ == 1; }
  bool is_integer() const { return q_.get_den() == 1; }
  int sign() const { return sgn(q_); }

  Rational inverse() const;
  Rational abs() const { return Rational(mpq_class(::abs(q_))); }

  /// "p" for integers, "p/q" otherwise.
  std::string str() const;

  Rational& operator+=(const Rational& o) { q_ += o.q_; return *this; }
  Rational& operator-=(const Rational& o) { q_ -= o.q_; return *this; }
  Rational& operator*=(const Rational& o) { q_ *= o.q_; return *this; }
  Rational& operator/=(const Rational& o);

  friend Rational operator+(Rational a, const Rational& b) { return a += b; }
  friend Rational operator-(Rational a, const Rational& b) { return a -= b; }
  friend Rational operator*(Rational a, const Rational& b) { return a *= b; }
  friend Rational operator/(Rational a, const Rational& b) { return a /= b; }
  Rational operator-() const { return Rational(mpq_class(-q_)); }

  friend bool operator==(const Rational& a, const Rational& b) { return a.q_ == b.q_; }
  friend std::strong_ordering operator<=>(const Rational& a, const Rational& b) {
    const int c = cmp(a.q_, b.q_);
    return c < 0 ? std::strong_ordering::less
                 : (c > 0 ? std::strong_ordering::greater : std::strong_ordering::equal);
  }

  friend std::ostream& operator<<(std::ostream& os, const Rational& r) { return os << r.str(); }

 private:
  mpq_class q_{0};
};

Rational factorial(unsigned k);

}  // namespace gtsymp
