#pragma once

#include <map>
#include <string>
#include <utility>
#include <vector>

#include "gtsymp/poly.hpp"
#include "gtsymp/rational.hpp"

namespace gtsymp {

enum class AlgebraTag { Sp2n, GlZh, GlM };

/// Sp2n acts on rows -n..-1,1..n; GlZh on -n..-1,1; GlM on -n..-1,n.
struct AlgebraKind {
  AlgebraTag tag = AlgebraTag::Sp2n;
  int n = 1;

  std::vector<int> indices() const;
  bool contains(int i) const;
  bool is_sp() const { return tag == AlgebraTag::Sp2n; }
  std::string name() const;
  /// Number of weight components (n for sp, n+1 for gl).
  std::size_t rank() const { return is_sp() ? n : n + 1; }

  friend bool operator==(const AlgebraKind&, const AlgebraKind&) = default;
};

inline int sign(int i) { return i < 0 ? -1 : 1; }

/// First-order operator D_M = sum_{i,j} M_ij sum_k x[i][k] d/dx[j][k], i.e. the
/// polarization operator attached to the matrix M acting on row indices.
/// The map M -> D_M is a Lie algebra homomorphism.
class LinOperator {
 public:
  using Key = std::pair<int, int>;

  LinOperator() = default;
  static LinOperator unit(int i, int j, const Rational& c = Rational(1));

  const std::map<Key, Rational>& entries() const { return m_; }
  Rational entry(int i, int j) const;
  bool is_zero() const { return m_.empty(); }
  bool is_diagonal() const;

  LinOperator& operator+=(const LinOperator& o);
  LinOperator& operator*=(const Rational& c);
  friend LinOperator operator+(LinOperator a, const LinOperator& b) { return a += b; }
  friend LinOperator operator-(LinOperator a, const LinOperator& b) {
    return a += b * Rational(-1);
  }
  friend LinOperator operator*(LinOperator a, const Rational& c) { return a *= c; }
  /// Matrix product (composition in the defining representation).
  friend LinOperator operator*(const LinOperator& a, const LinOperator& b);

  Poly apply(const Poly& p) const;
  std::string str() const;

  friend bool operator==(const LinOperator&, const LinOperator&) = default;

 private:
  void set(int i, int j, const Rational& c);
  std::map<Key, Rational> m_;
};

/// ab - ba.
LinOperator commutator(const LinOperator& a, const LinOperator& b);

/// F_{i,j} = E_{i,j} - sign(i)sign(j) E_{-j,-i} for Sp2n, E_{i,j} for the gl kinds.
LinOperator realize_generator(const AlgebraKind& kind, int i, int j);

/// For Sp2n, F_{i,j} = sign * F_{i',j'} where (i',j') is the lexicographically
/// smaller of (i,j) and (-j,-i).
struct CanonicalPair {
  int i;
  int j;
  int sign;
};
CanonicalPair canonical_generator(int i, int j);

/// All raising (i<j) or lowering (i>j) generators of the algebra, canonical
/// representatives only.
std::vector<std::pair<int, int>> root_generators(const AlgebraKind& kind, bool raising);

/// Weight of a monomial: for Sp2n the component for -k is #row(-k) - #row(k)
/// (k = n..1); for gl kinds the row counts in index order.
std::vector<int> monomial_weight(const AlgebraKind& kind, const Monomial& m);

/// Weight of a weight vector; throws InvalidWeight if p is not one.
std::vector<int> poly_weight(const AlgebraKind& kind, const Poly& p);

/// Split p into weight components.
std::map<std::vector<int>, Poly> weight_components(const AlgebraKind& kind, const Poly& p);

/// Value of a diagonal operator on a vector of the given weight.
Rational diagonal_value(const AlgebraKind& kind, const LinOperator& h, const std::vector<int>& w);

enum class Embedding { ZhSp, MSp, ZhGl, MGl };

/// Zhelobenko (sp(2n-2) on +-2..+-n) or Molev (sp(2n-2) on +-1..+-(n-1)) reduction.
enum class Approach { Zh, M };
const char* to_string(Approach a);

const char* to_string(Embedding e);
AlgebraKind ambient_kind(Embedding e, int n);
/// Row indices preserved by the subalgebra.
std::vector<int> preserved_indices(Embedding e, int n);
/// Positions (into the ambient weight vector) of the subalgebra Cartan components.
std::vector<std::size_t> subweight_positions(Embedding e, int n);
std::vector<int> subweight(Embedding e, int n, const std::vector<int>& ambient);

struct PositiveRoot {
  int i = 0;  // e_alpha is F_{i,j} (resp. E_{i,j}), i < j
  int j = 0;
  LinOperator e_pos;
  LinOperator e_neg;  // scaled so that alpha(h) = 2
  LinOperator h;      // [e_pos, e_neg], diagonal
  Rational rho_h;     // rho(h) for the subalgebra's rho
  std::vector<Rational> coords;  // root in orthonormal epsilon coordinates
};

struct RootDatum {
  Embedding embedding = Embedding::ZhSp;
  int n = 1;
  AlgebraKind kind;
  std::vector<PositiveRoot> roots;  // in normal order alpha_1 < ... < alpha_m
};

RootDatum subalgebra_roots(Embedding e, int n);
/// Root datum of the subalgebra of `kind` acting on the rows `keep`.
RootDatum roots_for(const AlgebraKind& kind, const std::vector<int>& keep);

/// True iff whenever alpha = beta + gamma, alpha stands between beta and gamma.
bool is_normal_ordering(const std::vector<PositiveRoot>& roots);

/// Same root system listed in reverse order (also normal).
RootDatum reversed(RootDatum d);

}  // namespace gtsymp
