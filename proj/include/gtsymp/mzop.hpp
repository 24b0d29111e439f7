#pragma once

#include <string>
#include <vector>

#include "gtsymp/liealg.hpp"
#include "gtsymp/poly.hpp"

namespace gtsymp {

/// One factor p_alpha applied to one weight component.
struct ProjectorStep {
  int i = 0;
  int j = 0;
  std::vector<int> weight;
  unsigned depth = 0;                 // largest k with e_alpha^k v != 0
  std::vector<Rational> denominators;  // h(alpha) + rho(h_alpha) + k, k = 1..depth
};

struct ProjectorTrace {
  std::vector<ProjectorStep> steps;
  std::string json() const;
};

/// Extremal projector p = p_{alpha_1} ... p_{alpha_m} of a subalgebra, with
///   p_alpha = sum_k (-1)^k / (k! prod_{j<=k} (h_alpha + rho(h_alpha) + j)) e_{-alpha}^k e_alpha^k.
/// Factors are applied right to left; each series stops once e_alpha^k v = 0.
class Projector {
 public:
  explicit Projector(RootDatum datum) : datum_(std::move(datum)) {}
  static const Projector& get(Embedding e, int n);

  const RootDatum& datum() const { return datum_; }
  Poly apply(const Poly& v, ProjectorTrace* trace = nullptr) const;

 private:
  Poly apply_root(const PositiveRoot& r, const Poly& v, ProjectorTrace* trace) const;
  RootDatum datum_;
};

enum class MZFamily { Zeta, Eta, E, Epsilon };

const char* to_string(MZFamily f);
Embedding embedding_of(MZFamily f);
AlgebraKind kind_of(MZFamily f, int n);

/// Generator indices listed for the family (raising/lowering ones and the extra pair).
bool is_legal(MZFamily f, int n, int i, int j);
std::vector<std::pair<int, int>> legal_generators(MZFamily f, int n);

struct MZGenerator {
  MZFamily family = MZFamily::Zeta;
  int i = 0;
  int j = 0;
  std::string str() const;
};

/// One level of a reduction chain. The Zhelobenko chain at local rank k acts on
/// rows +-(n-k+1)..+-n and reduces to +-(n-k+2)..+-n; the Molev chain at local
/// rank k acts on +-1..+-k and reduces to +-1..+-(k-1). Local indices +-1..+-k
/// are mapped to global rows by `global`.
struct ChainLevel {
  Approach chain = Approach::Zh;
  int n = 1;
  int k = 1;

  int global(int local) const;
  std::vector<int> keep() const;
  MZFamily family() const { return chain == Approach::Zh ? MZFamily::Zeta : MZFamily::Eta; }
};

const Projector& level_projector(const ChainLevel& level);
bool level_highest(const ChainLevel& level, const Poly& v);
/// p F_{i,j} v for local indices, with the sp alias rule applied in local terms.
Poly level_apply(const ChainLevel& level, int i, int j, const Poly& v);

/// p F_{i,j} v (resp. p E_{i,j} v) on a subalgebra-highest v. Cartan generators act
/// by their eigenvalue. For the sp families an index pair that is not listed but
/// whose mirror (-j,-i) is, is read through F_{i,j} = -sign(i)sign(j) F_{-j,-i}.
/// Throws NotHighest when v is not subalgebra-highest.
Poly mz_apply(const MZGenerator& g, int n, const Poly& v, bool check_highest = true);

/// Scalars of the Molev algebra on a weight vector (weight components -n..-1):
/// rho_{-i} = -rho_i = i, f_j = F_{j,j} + rho_j, g_j = f_j + 1/2.
struct ShiftConstants {
  int n = 0;
  std::vector<int> weight;

  Rational rho(int j) const;
  Rational cartan(int j) const;
  Rational f(int j) const;
  Rational g(int j) const;
};

/// eta-check_{i,pm n} v = eta_{i,pm n} prod_{j=i-1}^{-n+1} (f_i - f_j) v, j != 0.
/// eta-check_{pm n, i} is read through the alias rule. `note` receives a message
/// when a vanishing scalar annihilates the output.
Poly checked_eta_apply(int i, int j, int n, const Poly& v, std::string* note = nullptr);

/// Z_{n,-n}(u) v = -F_{n,-n} prod_i (u + g_i) v
///               + sum_i eta-check_{n,i} eta-check_{i,-n} prod_{j != i} (u+g_j)/(g_i-g_j) v,
/// i, j ranging over -n+1..n-1 without 0. Throws DegenerateWeight when g_i = g_j.
Poly z_nn_apply(const Rational& u, int n, const Poly& v);

}  // namespace gtsymp
