#pragma once

#include <string>
#include <vector>

#include "gtsymp/gtpattern.hpp"
#include "gtsymp/liealg.hpp"
#include "gtsymp/mzop.hpp"
#include "gtsymp/poly.hpp"
#include "gtsymp/repmodel.hpp"

namespace gtsymp {

/// One factor g^exponent of a construction word. Plain letters are MZ generators
/// (for sp families acting at chain level `level` with local indices), Checked
/// letters are eta-check operators, Z letters are Z_{n,-n}(u).
struct Letter {
  enum class Kind { Plain, Checked, Z };
  Kind kind = Kind::Plain;
  MZFamily family = MZFamily::Zeta;
  int level = 0;  // local rank k of the chain level; ignored by gl families
  int i = 0;
  int j = 0;
  int exponent = 1;
  Rational u;

  std::string str() const;
};

/// Letters are applied right to left: the last letter acts first.
struct Word {
  int n = 0;
  std::vector<Letter> letters;

  std::size_t length() const;  // sum of exponents
  bool empty() const { return length() == 0; }
  std::string str() const;
};

Poly apply_word(const Word& w, const Poly& v);

/// prod_{i=2}^n zeta_{-1,-i}^{m'_{-i}-m_{-i,n-1}} prod_{i=1}^n zeta_{1,-i}^{m_{-i}-m'_{-i}} at chain level k.
/// The gl version uses e generators of the GlZh model.
Word zhelobenko_word(const OneStepPattern& p, int n, int level, bool gl = false);
Poly zhelobenko_vector(const OneStepPattern& p, bool gl = false);

enum class MolevMode { Simplified, Full };
/// Range of the Z_{n,-n}(k) product in full mode: k - 1/2 runs from m'_{-n} - n upwards,
/// either m_{-n} - m'_{-n} factors (MatchExponent) or through m_{-n} - n inclusive.
enum class ZRange { MatchExponent, Inclusive };

const char* to_string(MolevMode m);

/// Simplified: prod_{i=1}^{n-1} eta_{-i,-n}^{m_{-(i+1),n-1}-m'_{-i}} prod_{i=1}^n eta_{n,-i}^{m_{-i}-m'_{-i}}.
/// Full: prod_i etacheck_{-i,-n}^{...} etacheck_{n,-i}^{...} prod_k Z_{n,-n}(k) with the same exponents.
/// The gl version uses epsilon generators of the GlM model (simplified form only).
Word molev_word(const OneStepPattern& p, int n, int level, MolevMode mode = MolevMode::Simplified,
                ZRange range = ZRange::MatchExponent, bool gl = false);
Poly molev_vector(const OneStepPattern& p, MolevMode mode = MolevMode::Simplified,
                  ZRange range = ZRange::MatchExponent);
Poly molev_vector_gl(const OneStepPattern& p);

/// Prefix word and semimaximal pattern with (m) = const * prefix * (semimaximal m).
struct Decomposition {
  Word prefix;
  OneStepPattern semimaximal;
};
Decomposition semimaximal_decompose(const OneStepPattern& p, Approach a);

struct BasisVectorRecord {
  std::vector<std::vector<int>> rows;  // one-step pattern rows or full tableau rows
  Approach approach = Approach::Zh;
  std::vector<int> weight;
  Poly vector;  // normalized
  Word word;
};

/// One-step basis of the subalgebra-highest subspace, one record per pattern.
std::vector<BasisVectorRecord> one_step_basis(const HighestWeight& lambda, Approach a,
                                              MolevMode mode = MolevMode::Simplified);

/// Recursive basis of V(lambda): level k applies the one-step word of the tableau's
/// k-th block to the vector built so far. `mode` selects the Molev word at the top
/// level; lower levels use simplified words. Throws DimensionCapExceeded.
std::vector<BasisVectorRecord> full_gt_basis(const HighestWeight& lambda, Approach a, std::size_t cap = 0,
                                             MolevMode mode = MolevMode::Simplified);

/// JSON array of {tableau, approach, weight, vector, word}.
std::string basis_json(const std::vector<BasisVectorRecord>& records);

}  // namespace gtsymp
