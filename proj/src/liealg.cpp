#include "gtsymp/liealg.hpp"

#include <algorithm>
#include <sstream>

#include "gtsymp/error.hpp"

namespace gtsymp {

std::vector<int> AlgebraKind::indices() const {
  std::vector<int> out;
  for (int i = -n; i <= -1; ++i) out.push_back(i);
  switch (tag) {
    case AlgebraTag::Sp2n:
      for (int i = 1; i <= n; ++i) out.push_back(i);
      break;
    case AlgebraTag::GlZh:
      out.push_back(1);
      break;
    case AlgebraTag::GlM:
      out.push_back(n);
      break;
  }
  return out;
}

bool AlgebraKind::contains(int i) const {
  if (i >= -n && i <= -1) return true;
  switch (tag) {
    case AlgebraTag::Sp2n: return i >= 1 && i <= n;
    case AlgebraTag::GlZh: return i == 1;
    case AlgebraTag::GlM: return i == n;
  }
  return false;
}

std::string AlgebraKind::name() const {
  switch (tag) {
    case AlgebraTag::Sp2n: return "sp" + std::to_string(2 * n);
    case AlgebraTag::GlZh: return "gl" + std::to_string(n + 1) + "-zh";
    case AlgebraTag::GlM: return "gl" + std::to_string(n + 1) + "-m";
  }
  return "?";
}

LinOperator LinOperator::unit(int i, int j, const Rational& c) {
  LinOperator op;
  op.set(i, j, c);
  return op;
}

void LinOperator::set(int i, int j, const Rational& c) {
  if (c.is_zero()) {
    m_.erase({i, j});
  } else {
    m_[{i, j}] = c;
  }
}

Rational LinOperator::entry(int i, int j) const {
  auto it = m_.find({i, j});
  return it == m_.end() ? Rational(0) : it->second;
}

bool LinOperator::is_diagonal() const {
  for (const auto& [k, c] : m_) {
    if (k.first != k.second) return false;
  }
  return true;
}

LinOperator& LinOperator::operator+=(const LinOperator& o) {
  for (const auto& [k, c] : o.m_) set(k.first, k.second, entry(k.first, k.second) + c);
  return *this;
}

LinOperator& LinOperator::operator*=(const Rational& c) {
  if (c.is_zero()) {
    m_.clear();
  } else {
    for (auto& [k, v] : m_) v *= c;
  }
  return *this;
}

LinOperator operator*(const LinOperator& a, const LinOperator& b) {
  LinOperator out;
  for (const auto& [ka, ca] : a.m_) {
    for (const auto& [kb, cb] : b.m_) {
      if (ka.second != kb.first) continue;
      out.set(ka.first, kb.second, out.entry(ka.first, kb.second) + ca * cb);
    }
  }
  return out;
}

Poly LinOperator::apply(const Poly& p) const {
  if (m_.empty() || p.is_zero()) return Poly();
  std::map<int, std::vector<std::pair<int, Rational>>> by_col;
  for (const auto& [k, c] : m_) by_col[k.second].emplace_back(k.first, c);
  PolyBuilder acc;
  for (const auto& t : p.terms()) {
    for (const auto& [v, e] : t.mono.factors()) {
      if (!v.is_entry()) continue;
      auto it = by_col.find(v.row());
      if (it == by_col.end()) continue;
      const Monomial lowered = t.mono.shifted(v, -1);
      const Rational base = t.coef * Rational(static_cast<long>(e));
      for (const auto& [i, c] : it->second) {
        acc.add(lowered.shifted(Var::entry(i, v.col()), 1), base * c);
      }
    }
  }
  return std::move(acc).build();
}

std::string LinOperator::str() const {
  std::ostringstream os;
  bool first = true;
  for (const auto& [k, c] : m_) {
    if (!first) os << " + ";
    os << c << "*E[" << k.first << "][" << k.second << "]";
    first = false;
  }
  return first ? "0" : os.str();
}

LinOperator commutator(const LinOperator& a, const LinOperator& b) { return a * b - b * a; }

LinOperator realize_generator(const AlgebraKind& kind, int i, int j) {
  if (!kind.contains(i) || !kind.contains(j)) {
    throw Error(ErrorCode::IndexOutOfAlgebra, "generator (" + std::to_string(i) + "," +
                                                  std::to_string(j) + ") not in " + kind.name());
  }
  LinOperator op = LinOperator::unit(i, j);
  if (kind.is_sp()) op = op - LinOperator::unit(-j, -i, Rational(sign(i) * sign(j)));
  return op;
}

CanonicalPair canonical_generator(int i, int j) {
  const std::pair<int, int> a{i, j};
  const std::pair<int, int> b{-j, -i};
  if (a <= b) return {i, j, 1};
  return {-j, -i, -sign(i) * sign(j)};
}

std::vector<std::pair<int, int>> root_generators(const AlgebraKind& kind, bool raising) {
  std::vector<std::pair<int, int>> out;
  const auto idx = kind.indices();
  for (int i : idx) {
    for (int j : idx) {
      if (i == j || (i < j) != raising) continue;
      if (kind.is_sp()) {
        const auto c = canonical_generator(i, j);
        if (c.i != i || c.j != j) continue;
      }
      out.emplace_back(i, j);
    }
  }
  return out;
}

namespace {

std::size_t weight_position(const AlgebraKind& kind, int i) {
  if (kind.is_sp()) return static_cast<std::size_t>(kind.n - std::abs(i));
  const auto idx = kind.indices();
  return static_cast<std::size_t>(std::find(idx.begin(), idx.end(), i) - idx.begin());
}

}  // namespace

std::vector<int> monomial_weight(const AlgebraKind& kind, const Monomial& m) {
  std::vector<int> w(kind.rank(), 0);
  for (const auto& [v, e] : m.factors()) {
    if (!v.is_entry()) continue;
    const int r = v.row();
    if (!kind.contains(r)) throw Error(ErrorCode::IndexOutOfAlgebra, "row outside algebra");
    const int s = kind.is_sp() ? -sign(r) : 1;
    w[weight_position(kind, r)] += s * static_cast<int>(e);
  }
  return w;
}

std::vector<int> poly_weight(const AlgebraKind& kind, const Poly& p) {
  if (p.is_zero()) throw Error(ErrorCode::InvalidWeight, "zero vector has no weight");
  const auto w = monomial_weight(kind, p.leading().mono);
  for (const auto& t : p.terms()) {
    if (monomial_weight(kind, t.mono) != w) throw Error(ErrorCode::InvalidWeight, "not a weight vector");
  }
  return w;
}

std::map<std::vector<int>, Poly> weight_components(const AlgebraKind& kind, const Poly& p) {
  std::map<std::vector<int>, PolyBuilder> acc;
  for (const auto& t : p.terms()) acc[monomial_weight(kind, t.mono)].add(t.mono, t.coef);
  std::map<std::vector<int>, Poly> out;
  for (auto& [w, b] : acc) out.emplace(w, std::move(b).build());
  return out;
}

Rational diagonal_value(const AlgebraKind& kind, const LinOperator& h, const std::vector<int>& w) {
  Rational total(0);
  for (const auto& [k, c] : h.entries()) {
    if (k.first != k.second) throw Error(ErrorCode::ShapeError, "operator is not diagonal");
    const int i = k.first;
    if (kind.is_sp()) {
      if (h.entry(-i, -i) != -c) throw Error(ErrorCode::ShapeError, "diagonal operator not in sp");
      if (i < 0) total += c * Rational(w[weight_position(kind, i)]);
    } else {
      total += c * Rational(w[weight_position(kind, i)]);
    }
  }
  return total;
}

const char* to_string(Approach a) { return a == Approach::Zh ? "zhelobenko" : "molev"; }

const char* to_string(Embedding e) {
  switch (e) {
    case Embedding::ZhSp: return "ZhSp";
    case Embedding::MSp: return "MSp";
    case Embedding::ZhGl: return "ZhGl";
    case Embedding::MGl: return "MGl";
  }
  return "?";
}

AlgebraKind ambient_kind(Embedding e, int n) {
  switch (e) {
    case Embedding::ZhSp:
    case Embedding::MSp: return {AlgebraTag::Sp2n, n};
    case Embedding::ZhGl: return {AlgebraTag::GlZh, n};
    case Embedding::MGl: return {AlgebraTag::GlM, n};
  }
  return {};
}

std::vector<int> preserved_indices(Embedding e, int n) {
  std::vector<int> out;
  switch (e) {
    case Embedding::ZhSp:
      for (int i = -n; i <= -2; ++i) out.push_back(i);
      for (int i = 2; i <= n; ++i) out.push_back(i);
      break;
    case Embedding::MSp:
      for (int i = -n + 1; i <= -1; ++i) out.push_back(i);
      for (int i = 1; i <= n - 1; ++i) out.push_back(i);
      break;
    case Embedding::ZhGl:
      for (int i = -n; i <= -2; ++i) out.push_back(i);
      break;
    case Embedding::MGl:
      for (int i = -n + 1; i <= -1; ++i) out.push_back(i);
      break;
  }
  return out;
}

std::vector<std::size_t> subweight_positions(Embedding e, int n) {
  std::vector<std::size_t> out;
  const bool zh = e == Embedding::ZhSp || e == Embedding::ZhGl;
  const std::size_t first = zh ? 0 : 1;
  for (std::size_t p = 0; p + 1 < static_cast<std::size_t>(n); ++p) out.push_back(first + p);
  return out;
}

std::vector<int> subweight(Embedding e, int n, const std::vector<int>& ambient) {
  std::vector<int> out;
  for (auto p : subweight_positions(e, n)) out.push_back(ambient[p]);
  return out;
}

namespace {

std::vector<Rational> root_coords(const AlgebraKind& kind, int i, int j) {
  std::vector<Rational> v(kind.rank());
  auto add = [&](int idx, int s) {
    const int sgn = kind.is_sp() ? -sign(idx) : 1;
    v[weight_position(kind, idx)] += Rational(s * sgn);
  };
  add(i, 1);
  add(j, -1);
  return v;
}

Rational dot(const std::vector<Rational>& a, const std::vector<Rational>& b) {
  Rational s(0);
  for (std::size_t k = 0; k < a.size(); ++k) s += a[k] * b[k];
  return s;
}

std::vector<Rational> reflect(const std::vector<Rational>& v, const std::vector<Rational>& a) {
  const Rational c = Rational(2) * dot(v, a) / dot(a, a);
  std::vector<Rational> out = v;
  for (std::size_t k = 0; k < v.size(); ++k) out[k] -= c * a[k];
  return out;
}

bool same(const std::vector<Rational>& a, const std::vector<Rational>& b) { return a == b; }

std::vector<Rational> sum(const std::vector<Rational>& a, const std::vector<Rational>& b) {
  std::vector<Rational> out = a;
  for (std::size_t k = 0; k < a.size(); ++k) out[k] += b[k];
  return out;
}

}  // namespace

bool is_normal_ordering(const std::vector<PositiveRoot>& roots) {
  for (std::size_t a = 0; a < roots.size(); ++a) {
    for (std::size_t b = 0; b < roots.size(); ++b) {
      for (std::size_t c = b + 1; c < roots.size(); ++c) {
        if (!same(roots[a].coords, sum(roots[b].coords, roots[c].coords))) continue;
        if (!(b < a && a < c)) return false;
      }
    }
  }
  return true;
}

RootDatum subalgebra_roots(Embedding e, int n) {
  RootDatum d = roots_for(ambient_kind(e, n), preserved_indices(e, n));
  d.embedding = e;
  return d;
}

RootDatum roots_for(const AlgebraKind& kind, const std::vector<int>& keep) {
  RootDatum d;
  d.n = kind.n;
  d.kind = kind;

  std::vector<PositiveRoot> roots;
  for (int i : keep) {
    for (int j : keep) {
      if (i >= j) continue;
      if (d.kind.is_sp()) {
        const auto c = canonical_generator(i, j);
        if (c.i != i || c.j != j) continue;
      }
      PositiveRoot r;
      r.i = i;
      r.j = j;
      r.e_pos = realize_generator(d.kind, i, j);
      r.e_neg = realize_generator(d.kind, j, i);
      LinOperator h = commutator(r.e_pos, r.e_neg);
      // [h, e_pos] = alpha(h) e_pos
      const LinOperator he = commutator(h, r.e_pos);
      const auto& [key, val] = *r.e_pos.entries().begin();
      const Rational alpha_h = he.entry(key.first, key.second) / val;
      const Rational scale = Rational(2) / alpha_h;
      r.e_neg *= scale;
      r.h = h * scale;
      r.coords = root_coords(d.kind, i, j);
      roots.push_back(std::move(r));
    }
  }

  // rho(h_alpha) = 1/2 sum_beta beta(h_alpha), beta(h) = h_ii - h_jj for beta = (i,j).
  for (auto& r : roots) {
    Rational s(0);
    for (const auto& b : roots) s += r.h.entry(b.i, b.i) - r.h.entry(b.j, b.j);
    r.rho_h = s * Rational(1, 2);
  }

  // Normal ordering from a reduced word of the longest element.
  std::vector<std::size_t> simple;
  for (std::size_t a = 0; a < roots.size(); ++a) {
    bool decomposable = false;
    for (std::size_t b = 0; b < roots.size() && !decomposable; ++b) {
      for (std::size_t c = b + 1; c < roots.size(); ++c) {
        if (same(roots[a].coords, sum(roots[b].coords, roots[c].coords))) {
          decomposable = true;
          break;
        }
      }
    }
    if (!decomposable) simple.push_back(a);
  }
  std::vector<Rational> v(d.kind.rank());
  for (const auto& r : roots) {
    for (std::size_t k = 0; k < v.size(); ++k) v[k] += r.coords[k];
  }
  std::vector<std::size_t> word;
  while (true) {
    auto it = std::find_if(simple.begin(), simple.end(),
                           [&](std::size_t s) { return dot(v, roots[s].coords).sign() > 0; });
    if (it == simple.end()) break;
    word.push_back(*it);
    v = reflect(v, roots[*it].coords);
  }
  std::vector<PositiveRoot> ordered;
  for (std::size_t k = 0; k < word.size(); ++k) {
    std::vector<Rational> beta = roots[word[k]].coords;
    for (std::size_t l = k; l-- > 0;) beta = reflect(beta, roots[word[l]].coords);
    auto found = std::find_if(roots.begin(), roots.end(),
                              [&](const PositiveRoot& r) { return same(r.coords, beta); });
    if (found == roots.end()) throw Error(ErrorCode::ShapeError, "reduced word produced a non-root");
    ordered.push_back(*found);
  }
  if (ordered.size() != roots.size() || !is_normal_ordering(ordered)) {
    throw Error(ErrorCode::ShapeError, "failed to build a normal ordering");
  }
  d.roots = std::move(ordered);
  return d;
}

RootDatum reversed(RootDatum d) {
  std::reverse(d.roots.begin(), d.roots.end());
  return d;
}

}  // namespace gtsymp
