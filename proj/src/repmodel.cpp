#include "gtsymp/repmodel.hpp"

#include <algorithm>
#include <cstdlib>
#include <deque>
#include <set>
#include <sstream>

#include "gtsymp/error.hpp"

namespace gtsymp {

bool HighestWeight::is_zero() const {
  for (int x : m) {
    if (x != 0) return false;
  }
  return true;
}

std::string HighestWeight::str() const {
  std::string out;
  for (std::size_t i = 0; i < m.size(); ++i) {
    if (i) out += ",";
    out += std::to_string(m[i]);
  }
  return out;
}

void HighestWeight::validate() const {
  if (m.empty()) throw Error(ErrorCode::InvalidWeight, "empty highest weight");
  for (std::size_t i = 0; i < m.size(); ++i) {
    if (m[i] < 0) throw Error(ErrorCode::InvalidWeight, "entries must be nonnegative");
    if (i + 1 < m.size() && m[i] < m[i + 1]) {
      throw Error(ErrorCode::InvalidWeight, "not weakly decreasing: " + str());
    }
  }
}

HighestWeight HighestWeight::parse(const std::string& text) {
  HighestWeight w;
  std::stringstream ss(text);
  std::string item;
  while (std::getline(ss, item, ',')) {
    try {
      std::size_t used = 0;
      w.m.push_back(std::stoi(item, &used));
      if (used != item.size()) throw std::invalid_argument(item);
    } catch (const std::exception&) {
      throw Error(ErrorCode::ParseError, "bad highest weight entry '" + item + "'");
    }
  }
  return w;
}

Poly highest_vector(const HighestWeight& lambda, const AlgebraKind& kind) {
  lambda.validate();
  const int n = lambda.n();
  if (n != kind.n) throw Error(ErrorCode::ShapeError, "weight length differs from rank");
  Poly v(1);
  std::vector<int> rows;
  for (int k = n; k >= 1; --k) {
    rows.push_back(-k);
    const int e = lambda.at(k) - lambda.at(k - 1);
    if (e > 0) v = v * minor(rows, n).pow(static_cast<unsigned>(e));
  }
  return v;
}

std::vector<int> highest_weight_vector(const HighestWeight& lambda, const AlgebraKind& kind) {
  std::vector<int> w = lambda.m;
  if (!kind.is_sp()) w.push_back(0);
  return w;
}

bool ModuleBasis::add(const Poly& v) {
  if (v.is_zero()) return false;
  const auto w = poly_weight(kind_, v);
  const Poly nv = v.normalized();
  if (!echelon_[w].insert(nv)) return false;
  index_[w].push_back(vectors_.size());
  vectors_.push_back(nv);
  weights_.push_back(w);
  return true;
}

bool ModuleBasis::contains(const Poly& v) const {
  for (const auto& [w, part] : weight_components(kind_, v)) {
    auto it = echelon_.find(w);
    if (it == echelon_.end() || !it->second.contains(part)) return false;
  }
  return true;
}

QVector ModuleBasis::coordinatize(const Poly& v) const {
  QVector out(vectors_.size());
  for (const auto& [w, part] : weight_components(kind_, v)) {
    auto it = echelon_.find(w);
    std::optional<QVector> c;
    if (it != echelon_.end()) c = it->second.coordinates(part);
    if (!c) throw Error(ErrorCode::NotInSpan, "vector not in module span: " + part.str());
    const auto& idx = index_.at(w);
    for (std::size_t k = 0; k < idx.size(); ++k) out[idx[k]] = (*c)[k];
  }
  return out;
}

Poly ModuleBasis::reconstruct(const QVector& c) const {
  PolyBuilder acc;
  for (std::size_t i = 0; i < c.size() && i < vectors_.size(); ++i) acc.add(vectors_[i], c[i]);
  return std::move(acc).build();
}

std::vector<std::vector<int>> ModuleBasis::weight_list() const {
  std::vector<std::vector<int>> out;
  for (const auto& [w, idx] : index_) out.push_back(w);
  return out;
}

std::vector<std::size_t> ModuleBasis::block(const std::vector<int>& w) const {
  auto it = index_.find(w);
  return it == index_.end() ? std::vector<std::size_t>{} : it->second;
}

std::size_t default_dim_cap() {
  if (const char* env = std::getenv("GTSYMP_DIM_CAP")) {
    try {
      const long v = std::stol(env);
      if (v > 0) return static_cast<std::size_t>(v);
    } catch (const std::exception&) {
    }
  }
  return 5000;
}

ModuleBasis generate_module(const HighestWeight& lambda, const AlgebraKind& kind,
                            const ModuleOptions& options) {
  const std::size_t cap = options.cap ? options.cap : default_dim_cap();
  ModuleBasis m(kind, lambda);
  const Poly top = highest_vector(lambda, kind);
  m.add(top);
  std::vector<LinOperator> lowering;
  for (const auto& [i, j] : root_generators(kind, false)) lowering.push_back(realize_generator(kind, i, j));
  std::deque<std::size_t> queue{0};
  while (!queue.empty()) {
    const Poly v = m.vectors()[queue.front()];
    queue.pop_front();
    for (const auto& op : lowering) {
      const Poly w = op.apply(v);
      if (w.is_zero()) continue;
      if (m.add(w)) {
        queue.push_back(m.dim() - 1);
        if (m.dim() > cap) {
          throw Error(ErrorCode::DimensionCapExceeded,
                      "module dimension exceeds cap " + std::to_string(cap));
        }
        if (options.progress && m.dim() % 100 == 0) {
          options.progress("dimension reached " + std::to_string(m.dim()));
        }
      }
    }
  }
  if (options.progress) options.progress(kind.name() + " [" + lambda.str() + "] dim " + std::to_string(m.dim()));
  return m;
}

namespace {

std::vector<LinOperator> subalgebra_raising(Embedding e, int n) {
  const AlgebraKind kind = ambient_kind(e, n);
  const auto keep = preserved_indices(e, n);
  std::vector<LinOperator> ops;
  for (const auto& [i, j] : root_generators(kind, true)) {
    const bool in = std::find(keep.begin(), keep.end(), i) != keep.end() &&
                    std::find(keep.begin(), keep.end(), j) != keep.end();
    if (in) ops.push_back(realize_generator(kind, i, j));
  }
  return ops;
}

}  // namespace

bool is_subalgebra_highest(const Poly& v, Embedding e, int n) {
  for (const auto& op : subalgebra_raising(e, n)) {
    if (!op.apply(v).is_zero()) return false;
  }
  return true;
}

ModuleBasis highest_subspace(const ModuleBasis& m, Embedding e) {
  const int n = m.kind().n;
  if (!(ambient_kind(e, n) == m.kind())) throw Error(ErrorCode::ShapeError, "embedding does not match module");
  const auto ops = subalgebra_raising(e, n);
  ModuleBasis out(m.kind(), m.lambda());
  for (const auto& w : m.weight_list()) {
    const auto idx = m.block(w);
    // Rows: (operator, monomial) coefficients; columns: block vectors.
    std::vector<std::vector<Poly>> images(ops.size());
    std::map<Monomial, std::size_t, MonomialDescending> mono_index;
    for (std::size_t a = 0; a < ops.size(); ++a) {
      for (auto i : idx) {
        images[a].push_back(ops[a].apply(m.vectors()[i]));
        for (const auto& t : images[a].back().terms()) mono_index.emplace(t.mono, 0);
      }
    }
    std::size_t pos = 0;
    for (auto& [mono, p] : mono_index) p = pos++;
    QMatrix mat(ops.size() * mono_index.size(), idx.size());
    for (std::size_t a = 0; a < ops.size(); ++a) {
      for (std::size_t c = 0; c < idx.size(); ++c) {
        for (const auto& t : images[a][c].terms()) {
          mat.at(a * mono_index.size() + mono_index.at(t.mono), c) = t.coef;
        }
      }
    }
    for (const auto& k : kernel_basis(mat)) {
      PolyBuilder acc;
      for (std::size_t c = 0; c < idx.size(); ++c) acc.add(m.vectors()[idx[c]], k[c]);
      out.add(std::move(acc).build());
    }
  }
  return out;
}

}  // namespace gtsymp
