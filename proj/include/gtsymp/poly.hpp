#pragma once

#include <cstdint>
#include <functional>
#include <map>
#include <optional>
#include <span>
#include <string>
#include <utility>
#include <vector>

#include "gtsymp/rational.hpp"

namespace gtsymp {

/// A polynomial variable. Either a matrix entry x[row][col] with signed,
/// nonzero indices, or a free parameter t[k] (used for parametrized group
/// elements). Entry ids sort by (row, col) in signed order.
class Var {
 public:
  static Var entry(int row, int col);
  static Var param(int k);

  bool is_entry() const { return (id_ & 0x8000u) == 0; }
  int row() const { return static_cast<int>(id_ >> 7) - 64; }
  int col() const { return static_cast<int>(id_ & 0x7fu) - 64; }
  int param_index() const { return static_cast<int>(id_ & 0x7fffu); }

  std::uint16_t id() const { return id_; }
  std::string name() const;

  friend bool operator==(Var a, Var b) { return a.id_ == b.id_; }
  friend auto operator<=>(Var a, Var b) { return a.id_ <=> b.id_; }

 private:
  explicit Var(std::uint16_t id) : id_(id) {}
  std::uint16_t id_;
};

/// Exponent vector stored sparsely as (var, exponent) pairs sorted by var.
class Monomial {
 public:
  using Factor = std::pair<Var, unsigned>;

  Monomial() = default;
  explicit Monomial(Var v, unsigned e = 1);

  std::span<const Factor> factors() const { return factors_; }
  unsigned degree() const { return degree_; }
  unsigned exponent(Var v) const;
  bool is_one() const { return factors_.empty(); }

  /// Multiply by v^delta (delta may be negative as long as the result stays valid).
  Monomial shifted(Var v, int delta) const;
  Monomial operator*(const Monomial& o) const;

  std::string str() const;

  friend bool operator==(const Monomial& a, const Monomial& b) {
    return a.factors_ == b.factors_;
  }
  /// Graded lexicographic order; the smaller variable id is the more
  /// significant one.
  friend std::strong_ordering operator<=>(const Monomial& a, const Monomial& b);

 private:
  std::vector<Factor> factors_;
  unsigned degree_ = 0;
};

struct MonomialDescending {
  bool operator()(const Monomial& a, const Monomial& b) const { return b < a; }
};

/// Sparse multivariate polynomial with rational coefficients. Terms are kept
/// sorted in descending monomial order with no zero coefficients.
class Poly {
 public:
  struct Term {
    Monomial mono;
    Rational coef;
    friend bool operator==(const Term&, const Term&) = default;
  };

  Poly() = default;
  Poly(const Rational& c);  // NOLINT(google-explicit-constructor)
  Poly(long c) : Poly(Rational(c)) {}  // NOLINT(google-explicit-constructor)
  static Poly variable(Var v);
  static Poly entry(int row, int col) { return variable(Var::entry(row, col)); }
  static Poly monomial(Monomial m, Rational c = Rational(1));

  const std::vector<Term>& terms() const { return terms_; }
  std::size_t size() const { return terms_.size(); }
  bool is_zero() const { return terms_.empty(); }
  const Term& leading() const { return terms_.front(); }
  Rational coefficient(const Monomial& m) const;
  unsigned degree() const;

  Poly& operator+=(const Poly& o);
  Poly& operator-=(const Poly& o);
  Poly& operator*=(const Rational& c);
  friend Poly operator+(Poly a, const Poly& b) { return a += b; }
  friend Poly operator-(Poly a, const Poly& b) { return a -= b; }
  friend Poly operator*(Poly a, const Rational& c) { return a *= c; }
  friend Poly operator*(const Rational& c, Poly a) { return a *= c; }
  friend Poly operator*(const Poly& a, const Poly& b);
  Poly operator-() const;
  Poly pow(unsigned e) const;

  Poly derivative(Var v) const;
  Rational evaluate(const std::function<Rational(Var)>& value) const;
  Poly substitute(const std::function<Poly(Var)>& image) const;

  /// Scaled to coprime integer coefficients with a positive leading coefficient.
  Poly normalized() const;
  /// Scaled so that the leading coefficient is 1.
  Poly monic() const;

  /// Deterministic text form: terms in descending monomial order, e.g.
  /// "2*x[-2][-2]^2 - 1/3*x[-1][-2]*x[2][-1]".
  std::string str() const;
  static Poly parse(std::string_view text);

  friend bool operator==(const Poly&, const Poly&) = default;

 private:
  friend class PolyBuilder;
  std::vector<Term> terms_;
};

/// Accumulates terms in arbitrary order and produces a canonical Poly.
class PolyBuilder {
 public:
  void add(const Monomial& m, const Rational& c);
  void add(const Poly& p, const Rational& scale = Rational(1));
  Poly build() &&;
  bool empty() const { return acc_.empty(); }

 private:
  std::map<Monomial, Rational, MonomialDescending> acc_;
};

/// True iff p = c*q for some nonzero rational c (two zeros count as proportional).
bool proportional(const Poly& p, const Poly& q);
/// The c with p = c*q, when it exists and q != 0.
std::optional<Rational> proportionality_factor(const Poly& p, const Poly& q);

/// Determinant of the rows `rows` against the columns `cols` of the generic
/// matrix of entry variables. Sizes must agree; rows must be distinct.
Poly minor(std::span<const int> rows, std::span<const int> cols);

/// Minor with columns taken as the first |rows| entries of -n,...,-1,1,...,n.
Poly minor(std::span<const int> rows, int n);

/// Column order -n,...,-1,1,...,n.
std::vector<int> symplectic_column_order(int n);

}  // namespace gtsymp
