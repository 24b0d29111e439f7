#pragma once

#include <functional>
#include <map>
#include <string>
#include <vector>

#include "gtsymp/liealg.hpp"
#include "gtsymp/linalg.hpp"
#include "gtsymp/poly.hpp"

namespace gtsymp {

/// Highest weight [m_{-n}, ..., m_{-1}], weakly decreasing and nonnegative.
struct HighestWeight {
  std::vector<int> m;

  int n() const { return static_cast<int>(m.size()); }
  /// m_{-i} for i = 1..n; m_{-i} = 0 for i = 0.
  int at(int i) const { return i == 0 ? 0 : m[static_cast<std::size_t>(n() - i)]; }
  bool is_zero() const;
  std::string str() const;

  /// Throws InvalidWeight with a message naming the violated condition.
  void validate() const;
  /// Parses "3,1,0" (entries m_{-n},...,m_{-1}).
  static HighestWeight parse(const std::string& text);

  friend bool operator==(const HighestWeight&, const HighestWeight&) = default;
};

/// prod_{k=-n}^{-1} a_{-n,...,k}^{m_k - m_{k+1}} with m_0 = 0.
Poly highest_vector(const HighestWeight& lambda, const AlgebraKind& kind);

/// Weight of the highest vector in the kind's weight coordinates.
std::vector<int> highest_weight_vector(const HighestWeight& lambda, const AlgebraKind& kind);

/// Linearly independent weight vectors with exact coordinatization,
/// organised by weight blocks.
class ModuleBasis {
 public:
  ModuleBasis() = default;
  ModuleBasis(AlgebraKind kind, HighestWeight lambda) : kind_(kind), lambda_(std::move(lambda)) {}

  const AlgebraKind& kind() const { return kind_; }
  const HighestWeight& lambda() const { return lambda_; }
  const std::vector<Poly>& vectors() const { return vectors_; }
  const std::vector<std::vector<int>>& weights() const { return weights_; }
  std::size_t dim() const { return vectors_.size(); }

  /// Adds a weight vector if it is independent of the current span; returns whether it was added.
  bool add(const Poly& v);

  bool contains(const Poly& v) const;
  /// Exact coordinates in `vectors()`; throws NotInSpan.
  QVector coordinatize(const Poly& v) const;
  Poly reconstruct(const QVector& c) const;

  std::vector<std::vector<int>> weight_list() const;
  /// Indices of the basis vectors with the given weight.
  std::vector<std::size_t> block(const std::vector<int>& w) const;

 private:
  AlgebraKind kind_;
  HighestWeight lambda_;
  std::vector<Poly> vectors_;
  std::vector<std::vector<int>> weights_;
  std::map<std::vector<int>, PolyEchelon> echelon_;
  std::map<std::vector<int>, std::vector<std::size_t>> index_;
};

struct ModuleOptions {
  std::size_t cap = 0;  // 0: GTSYMP_DIM_CAP or 5000
  std::function<void(const std::string&)> progress;
};

std::size_t default_dim_cap();

/// Cyclic span of the highest vector under the lowering generators.
ModuleBasis generate_module(const HighestWeight& lambda, const AlgebraKind& kind,
                            const ModuleOptions& options = {});

/// Vectors of m killed by every raising generator of the subalgebra.
ModuleBasis highest_subspace(const ModuleBasis& m, Embedding e);

/// True iff every subalgebra raising generator kills v.
bool is_subalgebra_highest(const Poly& v, Embedding e, int n);

}  // namespace gtsymp
