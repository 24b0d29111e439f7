#pragma once

#include <map>
#include <optional>
#include <vector>

#include "gtsymp/poly.hpp"
#include "gtsymp/rational.hpp"

namespace gtsymp {

using QVector = std::vector<Rational>;

/// Dense row-major matrix over the rationals.
class QMatrix {
 public:
  QMatrix() = default;
  QMatrix(std::size_t rows, std::size_t cols) : rows_(rows), cols_(cols), data_(rows * cols) {}
  static QMatrix identity(std::size_t n);
  static QMatrix from_rows(const std::vector<QVector>& rows);

  std::size_t rows() const { return rows_; }
  std::size_t cols() const { return cols_; }
  Rational& at(std::size_t r, std::size_t c) { return data_[r * cols_ + c]; }
  const Rational& at(std::size_t r, std::size_t c) const { return data_[r * cols_ + c]; }

  QMatrix operator*(const QMatrix& o) const;
  QVector operator*(const QVector& v) const;
  QMatrix transpose() const;
  bool is_zero() const;

  friend bool operator==(const QMatrix&, const QMatrix&) = default;

 private:
  std::size_t rows_ = 0;
  std::size_t cols_ = 0;
  std::vector<Rational> data_;
};

/// Reduced row echelon form; `pivots` receives the pivot column of each nonzero row.
QMatrix rref(QMatrix m, std::vector<std::size_t>* pivots = nullptr);
std::size_t rank(const QMatrix& m);

/// Basis of the right null space. Each vector has coprime integer entries
/// and a positive leading nonzero entry.
std::vector<QVector> kernel_basis(const QMatrix& m);

/// Scale to coprime integers with positive leading nonzero entry.
QVector canonical_vector(QVector v);

/// Incremental echelon form for polynomials. Rows are kept monic with
/// distinct leading monomials; every row remembers its expansion in the
/// originally inserted polynomials so that coordinates can be recovered.
class PolyEchelon {
 public:
  /// Inserts p. Returns false (and stores nothing) when p is already in the span.
  bool insert(const Poly& p);

  /// Remainder of p after reduction against all rows.
  Poly reduce(const Poly& p) const;
  bool contains(const Poly& p) const { return reduce(p).is_zero(); }

  /// Coefficients c with p = sum c[i] * inserted[i], or nullopt if p is not in the span.
  std::optional<QVector> coordinates(const Poly& p) const;

  std::size_t size() const { return inserted_.size(); }
  const std::vector<Poly>& inserted() const { return inserted_; }

 private:
  struct Row {
    Poly poly;
    QVector combo;
  };
  Poly reduce_tracking(const Poly& p, QVector* combo) const;

  std::vector<Poly> inserted_;
  std::vector<Row> rows_;
  std::map<Monomial, std::size_t, MonomialDescending> pivot_;
};

}  // namespace gtsymp
