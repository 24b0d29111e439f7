#include "gtsymp/linalg.hpp"

#include "gtsymp/error.hpp"

namespace gtsymp {

QMatrix QMatrix::identity(std::size_t n) {
  QMatrix m(n, n);
  for (std::size_t i = 0; i < n; ++i) m.at(i, i) = Rational(1);
  return m;
}

QMatrix QMatrix::from_rows(const std::vector<QVector>& rows) {
  if (rows.empty()) return QMatrix();
  QMatrix m(rows.size(), rows[0].size());
  for (std::size_t r = 0; r < rows.size(); ++r) {
    if (rows[r].size() != m.cols()) throw Error(ErrorCode::ShapeError, "ragged rows");
    for (std::size_t c = 0; c < m.cols(); ++c) m.at(r, c) = rows[r][c];
  }
  return m;
}

QMatrix QMatrix::operator*(const QMatrix& o) const {
  if (cols_ != o.rows_) throw Error(ErrorCode::ShapeError, "matrix product dimensions");
  QMatrix out(rows_, o.cols_);
  for (std::size_t i = 0; i < rows_; ++i) {
    for (std::size_t k = 0; k < cols_; ++k) {
      const Rational& a = at(i, k);
      if (a.is_zero()) continue;
      for (std::size_t j = 0; j < o.cols_; ++j) {
        if (!o.at(k, j).is_zero()) out.at(i, j) += a * o.at(k, j);
      }
    }
  }
  return out;
}

QVector QMatrix::operator*(const QVector& v) const {
  if (cols_ != v.size()) throw Error(ErrorCode::ShapeError, "matrix-vector dimensions");
  QVector out(rows_);
  for (std::size_t i = 0; i < rows_; ++i) {
    for (std::size_t k = 0; k < cols_; ++k) {
      if (!at(i, k).is_zero() && !v[k].is_zero()) out[i] += at(i, k) * v[k];
    }
  }
  return out;
}

QMatrix QMatrix::transpose() const {
  QMatrix out(cols_, rows_);
  for (std::size_t i = 0; i < rows_; ++i) {
    for (std::size_t j = 0; j < cols_; ++j) out.at(j, i) = at(i, j);
  }
  return out;
}

bool QMatrix::is_zero() const {
  for (const auto& x : data_) {
    if (!x.is_zero()) return false;
  }
  return true;
}

QMatrix rref(QMatrix m, std::vector<std::size_t>* pivots) {
  if (pivots) pivots->clear();
  std::size_t row = 0;
  for (std::size_t col = 0; col < m.cols() && row < m.rows(); ++col) {
    std::size_t p = row;
    while (p < m.rows() && m.at(p, col).is_zero()) ++p;
    if (p == m.rows()) continue;
    if (p != row) {
      for (std::size_t c = 0; c < m.cols(); ++c) std::swap(m.at(p, c), m.at(row, c));
    }
    const Rational inv = m.at(row, col).inverse();
    for (std::size_t c = col; c < m.cols(); ++c) m.at(row, c) *= inv;
    for (std::size_t r = 0; r < m.rows(); ++r) {
      if (r == row || m.at(r, col).is_zero()) continue;
      const Rational f = m.at(r, col);
      for (std::size_t c = col; c < m.cols(); ++c) {
        if (!m.at(row, c).is_zero()) m.at(r, c) -= f * m.at(row, c);
      }
    }
    if (pivots) pivots->push_back(col);
    ++row;
  }
  return m;
}

std::size_t rank(const QMatrix& m) {
  std::vector<std::size_t> pivots;
  rref(m, &pivots);
  return pivots.size();
}

QVector canonical_vector(QVector v) {
  mpz_class g = 0;
  mpz_class l = 1;
  const Rational* lead = nullptr;
  for (const auto& x : v) {
    if (x.is_zero()) continue;
    if (!lead) lead = &x;
    mpz_gcd(g.get_mpz_t(), g.get_mpz_t(), x.raw().get_num_mpz_t());
    mpz_lcm(l.get_mpz_t(), l.get_mpz_t(), x.raw().get_den_mpz_t());
  }
  if (!lead) return v;
  mpq_class s(l, g);
  s.canonicalize();
  if (lead->sign() < 0) s = -s;
  const Rational scale(s);
  for (auto& x : v) x *= scale;
  return v;
}

std::vector<QVector> kernel_basis(const QMatrix& m) {
  std::vector<std::size_t> pivots;
  const QMatrix r = rref(m, &pivots);
  std::vector<bool> is_pivot(m.cols(), false);
  for (auto p : pivots) is_pivot[p] = true;
  std::vector<QVector> basis;
  for (std::size_t free = 0; free < m.cols(); ++free) {
    if (is_pivot[free]) continue;
    QVector v(m.cols());
    v[free] = Rational(1);
    for (std::size_t i = 0; i < pivots.size(); ++i) v[pivots[i]] = -r.at(i, free);
    basis.push_back(canonical_vector(std::move(v)));
  }
  return basis;
}

Poly PolyEchelon::reduce_tracking(const Poly& p, QVector* combo) const {
  Poly rem = p;
  std::optional<Monomial> bound;
  while (true) {
    const Poly::Term* hit = nullptr;
    for (const auto& t : rem.terms()) {
      if (bound && !(t.mono < *bound)) continue;
      if (pivot_.count(t.mono)) {
        hit = &t;
        break;
      }
    }
    if (!hit) break;
    const Monomial mono = hit->mono;
    const Rational c = hit->coef;
    const Row& row = rows_[pivot_.at(mono)];
    rem -= row.poly * c;
    if (combo) {
      for (std::size_t i = 0; i < row.combo.size(); ++i) {
        if (!row.combo[i].is_zero()) (*combo)[i] += c * row.combo[i];
      }
    }
    bound = mono;
  }
  return rem;
}

Poly PolyEchelon::reduce(const Poly& p) const { return reduce_tracking(p, nullptr); }

bool PolyEchelon::insert(const Poly& p) {
  QVector combo(inserted_.size() + 1);
  Poly rem = reduce_tracking(p, &combo);
  if (rem.is_zero()) return false;
  // rem = p - sum combo[i] * inserted[i]
  for (std::size_t i = 0; i + 1 < combo.size(); ++i) combo[i] = -combo[i];
  combo.back() = Rational(1);
  const Rational inv = rem.leading().coef.inverse();
  for (auto& x : combo) x *= inv;
  rem *= inv;
  pivot_.emplace(rem.leading().mono, rows_.size());
  rows_.push_back(Row{std::move(rem), std::move(combo)});
  inserted_.push_back(p);
  return true;
}

std::optional<QVector> PolyEchelon::coordinates(const Poly& p) const {
  QVector combo(inserted_.size());
  if (!reduce_tracking(p, &combo).is_zero()) return std::nullopt;
  return combo;
}

}  // namespace gtsymp
