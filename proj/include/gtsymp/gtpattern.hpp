#pragma once

#include <string>
#include <vector>

#include "gtsymp/repmodel.hpp"

namespace gtsymp {

/// Three-row branching pattern: top = lambda (length n), mid = m' (length n),
/// bottom = highest weight of the subalgebra (length n-1). Entry p of each
/// row is the component with index -(n-p).
struct OneStepPattern {
  std::vector<int> top;
  std::vector<int> mid;
  std::vector<int> bottom;

  int n() const { return static_cast<int>(top.size()); }
  /// m'_{-i} and bottom entry m_{-i,n-1} by the signed label i (1..n, resp. 2..n).
  int mid_at(int i) const { return mid[static_cast<std::size_t>(n() - i)]; }
  int top_at(int i) const { return i == 0 ? 0 : top[static_cast<std::size_t>(n() - i)]; }
  int bottom_at(int i) const { return bottom[static_cast<std::size_t>(n() - i)]; }
  std::string str() const;

  friend bool operator==(const OneStepPattern&, const OneStepPattern&) = default;
  friend auto operator<=>(const OneStepPattern&, const OneStepPattern&) = default;
};

/// Full interleaved tableau: rows[2(n-k)] = m_{.,k}, rows[2(n-k)+1] = m'_{.,k}
/// for k = n..1; both rows of level k have length k.
struct SpTableau {
  int n = 0;
  std::vector<std::vector<int>> rows;

  const std::vector<int>& m(int k) const { return rows[static_cast<std::size_t>(2 * (n - k))]; }
  const std::vector<int>& mp(int k) const { return rows[static_cast<std::size_t>(2 * (n - k) + 1)]; }
  /// Levels k and k-1 as a one-step pattern (k >= 2).
  OneStepPattern step(int k) const;
  std::vector<int> flattened() const;
  std::string str() const;

  friend bool operator==(const SpTableau&, const SpTableau&) = default;
};

/// Empty list means valid. Throws ShapeError on malformed shapes.
std::vector<std::string> validate(const OneStepPattern& p);
std::vector<std::string> validate(const SpTableau& t);

std::vector<OneStepPattern> enumerate_one_step(const HighestWeight& lambda);
std::vector<SpTableau> enumerate(const HighestWeight& lambda);

/// Weight components -n..-1. For the Zhelobenko chain level k fixes component
/// -(n-k+1); for the Molev chain it fixes component -k.
std::vector<int> weight(const SpTableau& t, Approach chain = Approach::Zh);

/// Weyl dimension of the sp(2n) irrep.
unsigned long weyl_dim(const HighestWeight& lambda);
/// Weyl dimension of the gl(N) irrep with highest weight lambda (weakly decreasing).
unsigned long gl_weyl_dim(const std::vector<int>& lambda);

/// m_bar_{-i} = m'_{-i} + m'_{-i+1} - m_{-i} on the bottom row; throws BarNotValid.
OneStepPattern bar(const OneStepPattern& p);
/// Applies the one-step rule to every level when `levelwise` is set, otherwise only
/// to the top block.
SpTableau bar(const SpTableau& t, bool levelwise = false);

bool is_semimaximal(const OneStepPattern& p, Approach a);

std::string tableau_json(const SpTableau& t);
std::string tableaux_csv(const std::vector<SpTableau>& ts, Approach chain = Approach::Zh);

}  // namespace gtsymp
