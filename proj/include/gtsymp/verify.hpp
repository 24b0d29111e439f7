#pragma once

#include <cstdint>
#include <functional>
#include <optional>
#include <random>
#include <string>
#include <utility>
#include <vector>

#include <json.hpp>

#include "gtsymp/linalg.hpp"
#include "gtsymp/mzop.hpp"
#include "gtsymp/poly.hpp"
#include "gtsymp/repmodel.hpp"

namespace gtsymp {

/// Desk-scale test weights: all lambda with entries <= 3 for n = 2, and
/// [1,0,0], [1,1,0], [2,1,0] for n = 3.
std::vector<HighestWeight> test_weights(int n);

/// 2n x 2n matrix with rows and columns indexed -n..-1,1..n.
struct SympMatrix {
  int n = 0;
  QMatrix m;

  static std::size_t pos(int n, int i) { return static_cast<std::size_t>(i < 0 ? i + n : i + n - 1); }
  const Rational& at(int i, int j) const { return m.at(pos(n, i), pos(n, j)); }
};

/// Matrix of sum_i dx_{-i} ^ dx_i.
QMatrix symplectic_form(int n);
bool is_symplectic(const QMatrix& x, int n);
/// I + alpha F_{i,j}; for i != j this is exp(alpha F_{i,j}).
QMatrix elementary_symplectic(int n, int i, int j, const Rational& alpha);
/// Product of 15..30 random elementary matrices (left or right factors) with
/// alpha = p/q, p, q in [-5,5] \ {0}.
SympMatrix random_symplectic(int n, std::mt19937_64& rng);
/// Matrix with random entries p/q (not symplectic in general).
SympMatrix random_general(int n, std::mt19937_64& rng);
Rational evaluate_at(const Poly& p, const SympMatrix& x);

/// Seeded symplectic sample points used to compare functions on the group.
struct GroupSamples {
  int n = 0;
  std::vector<SympMatrix> points;
  static GroupSamples make(int n, std::size_t count, std::uint64_t seed);
};

/// Relation between p and q as functions on the group: p = factor * q.
struct GroupComparison {
  enum class Kind { BothZero, Proportional, LeftZero, RightZero, NotProportional };
  Kind kind = Kind::NotProportional;
  Rational factor;

  bool proportional() const { return kind == Kind::BothZero || kind == Kind::Proportional; }
};
GroupComparison compare_on_group(const Poly& p, const Poly& q, const GroupSamples& s);
/// Exact polynomial comparison with the same classification.
GroupComparison compare_exact(const Poly& p, const Poly& q);

struct CheckReport {
  std::string id;
  int n = 0;
  std::vector<int> lambda;
  std::uint64_t seed = 0;
  bool pass = true;
  std::size_t assertions = 0;
  std::size_t failures = 0;
  std::vector<std::string> witnesses;                   // first failures
  std::vector<std::pair<std::string, std::string>> ledger;  // per-item constants
  std::vector<std::string> notes;

  /// Records one assertion; a failure keeps `witness` (up to a cap).
  void expect(bool ok, const std::string& witness);
  void record(const std::string& key, const std::string& value) { ledger.emplace_back(key, value); }
  void note(const std::string& text) { notes.push_back(text); }
  /// Folds a sub-report in, prefixing its witnesses and ledger keys.
  void merge(const CheckReport& sub);

  nlohmann::json to_json() const;
  std::string text() const;
};

CheckReport make_report(const std::string& id, int n, const HighestWeight* lambda = nullptr, std::uint64_t seed = 0);

// Module and basis checks.
CheckReport check_dimensions(const HighestWeight& lambda);
CheckReport check_highest_vectors(const HighestWeight& lambda);
CheckReport check_projector(const HighestWeight& lambda);
CheckReport check_basis(const HighestWeight& lambda);

// Claims about the operator algebras.
enum class DiagramFamily { EZh, ZetaZh, EpsilonM, EtaM };
const char* to_string(DiagramFamily f);
CheckReport check_diagrams(DiagramFamily family, int n, std::uint64_t seed);
CheckReport check_minor_identity(int n, std::size_t trials, std::uint64_t seed);
CheckReport check_soo(const HighestWeight& lambda, std::uint64_t seed);
CheckReport check_znnac(const HighestWeight& lambda);
CheckReport check_l8(const HighestWeight& lambda, std::uint64_t seed);
CheckReport check_restriction_equivalence(const HighestWeight& lambda, std::uint64_t seed);
CheckReport check_relations(const HighestWeight& lambda);

/// Literal: the four pairings as stated. Weighted: pairings forced by the weight
/// bookkeeping of the bar map. SignFlip: Weighted with the zeta side computed
/// from the perturbed operator E_{i,j} + sign(i)sign(j) E_{-j,-i}; it must fail.
enum class TheoremVariant { Literal, Weighted, SignFlip };
const char* to_string(TheoremVariant v);
CheckReport check_main_theorem(const HighestWeight& lambda, TheoremVariant variant);

/// Check ids accepted by run_check.
const std::vector<std::string>& check_ids();

struct CheckConfig {
  std::string id;
  int n = 2;
  std::optional<HighestWeight> lambda;  // unset: every test weight of rank n
  std::uint64_t seed = 1;
  std::size_t trials = 100;
};

/// Runs one check id (or "all") over the configured weights; reports are ordered
/// by check id and weight. Jobs run on `threads` workers.
std::vector<CheckReport> run_checks(const CheckConfig& cfg, unsigned threads = 0);

/// Runs jobs on a worker pool and returns the results in job order.
std::vector<CheckReport> run_parallel(const std::vector<std::function<CheckReport()>>& jobs, unsigned threads = 0);

nlohmann::json reports_json(const std::vector<CheckReport>& reports);

}  // namespace gtsymp
