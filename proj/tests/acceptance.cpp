#include <algorithm>
#include <chrono>
#include <cstdio>
#include <fstream>
#include <optional>
#include <string>
#include <vector>

#include "gtsymp/verify.hpp"

using namespace gtsymp;

namespace {

constexpr std::uint64_t kSeed = 1;
constexpr std::size_t kTrials = 100;
constexpr double kDimensionBudget = 60.0;  // seconds per n=3 case
constexpr double kSuiteBudget = 600.0;     // seconds for the whole run

using Clock = std::chrono::steady_clock;

double seconds_since(Clock::time_point t0) {
  return std::chrono::duration<double>(Clock::now() - t0).count();
}

std::vector<CheckReport> run(const std::string& id, int n, std::optional<HighestWeight> lambda = std::nullopt,
                             unsigned threads = 0) {
  CheckConfig cfg;
  cfg.id = id;
  cfg.n = n;
  cfg.lambda = std::move(lambda);
  cfg.seed = kSeed;
  cfg.trials = kTrials;
  return run_checks(cfg, threads);
}

std::vector<CheckReport> both_ranks(const std::string& id) {
  auto out = run(id, 2);
  const auto three = run(id, 3);
  out.insert(out.end(), three.begin(), three.end());
  return out;
}

std::string label(const CheckReport& r) {
  std::string s = r.id + " n=" + std::to_string(r.n);
  if (!r.lambda.empty()) {
    s += " [";
    for (std::size_t k = 0; k < r.lambda.size(); ++k) s += (k ? "," : "") + std::to_string(r.lambda[k]);
    s += "]";
  }
  return s;
}

struct Line {
  int number;
  std::string name;
  bool pass = true;
  std::string detail;
};

Line summarize(int number, const std::string& name, const std::vector<CheckReport>& reports) {
  Line l{number, name, true, ""};
  std::size_t ok = 0;
  std::string first;
  for (const auto& r : reports) {
    ok += r.pass;
    if (!r.pass && first.empty()) first = label(r) + ": " + (r.witnesses.empty() ? "no witness" : r.witnesses.front());
  }
  l.pass = ok == reports.size();
  l.detail = std::to_string(ok) + "/" + std::to_string(reports.size()) + " reports pass";
  if (!first.empty()) l.detail += "; first failure " + first;
  return l;
}

void print(const Line& l, const std::string& tolerance) {
  std::printf("C%02d %s %-22s tol=%s  %s\n", l.number, l.pass ? "PASS" : "FAIL", l.name.c_str(), tolerance.c_str(),
              l.detail.c_str());
  std::fflush(stdout);
}

}  // namespace

int main(int argc, char** argv) {
  const auto suite_start = Clock::now();
  bool all = true;
  std::vector<CheckReport> everything;
  const auto keep = [&](const std::vector<CheckReport>& rs) { everything.insert(everything.end(), rs.begin(), rs.end()); };

  {
    auto reports = run("dimensions", 2);
    double worst = 0;
    for (const auto& w : test_weights(3)) {
      const auto t0 = Clock::now();
      const auto r = run("dimensions", 3, w);
      worst = std::max(worst, seconds_since(t0));
      reports.insert(reports.end(), r.begin(), r.end());
    }
    keep(reports);
    Line l = summarize(1, "dimension coherence", reports);
    l.pass = l.pass && worst < kDimensionBudget;
    l.detail += "; slowest n=3 case " + std::to_string(worst) + " s (budget 60 s)";
    print(l, "exact");
    all = all && l.pass;
  }

  const std::vector<std::pair<std::string, std::string>> simple = {
      {"highest-vector", "highest-vector"}, {"projector", "projector contract"}, {"basis", "basis completeness"}};
  int number = 2;
  for (const auto& [id, name] : simple) {
    const auto reports = both_ranks(id);
    keep(reports);
    const Line l = summarize(number++, name, reports);
    print(l, "exact");
    all = all && l.pass;
  }

  {
    const auto reports = both_ranks("diagrams");
    keep(reports);
    const Line l = summarize(5, "diagram fidelity", reports);
    print(l, "exact");
    all = all && l.pass;
  }

  {
    const auto reports = both_ranks("minor-identity");
    keep(reports);
    Line l = summarize(6, "minor identity", reports);
    l.detail += "; n=2 symbolic, n=3 " + std::to_string(kTrials) + " samples, non-symplectic control included";
    print(l, "exact");
    all = all && l.pass;
  }

  const std::vector<std::pair<std::string, std::string>> claims = {{"soo", "paired actions"},
                                                                   {"znnac", "Z interpolation"},
                                                                   {"l8", "semimaximal monomials"},
                                                                   {"restriction", "restriction equivalence"}};
  number = 7;
  for (const auto& [id, name] : claims) {
    const auto reports = both_ranks(id);
    keep(reports);
    const Line l = summarize(number++, name, reports);
    print(l, "exact");
    all = all && l.pass;
  }

  {
    auto literal = run("main-theorem", 2);
    const auto literal3 = run("main-theorem", 3, HighestWeight{{1, 1, 0}});
    literal.insert(literal.end(), literal3.begin(), literal3.end());
    keep(literal);
    Line l = summarize(11, "main theorem", literal);

    auto flip = run("main-theorem-signflip", 2);
    const auto flip3 = run("main-theorem-signflip", 3, HighestWeight{{1, 1, 0}});
    flip.insert(flip.end(), flip3.begin(), flip3.end());
    keep(flip);
    std::size_t caught = 0, nontrivial = 0;
    for (const auto& r : flip) {
      bool zero = true;
      for (const int m : r.lambda) zero = zero && m == 0;
      if (zero) continue;
      ++nontrivial;
      caught += !r.pass && !r.witnesses.empty();
    }
    const bool control = caught == nontrivial;
    l.pass = l.pass && control;
    l.detail += "; sign-flip control fails with a witness on " + std::to_string(caught) + "/" +
                std::to_string(nontrivial) + " nontrivial weights";

    auto weighted = run("main-theorem-weighted", 2);
    const auto weighted3 = run("main-theorem-weighted", 3, HighestWeight{{1, 1, 0}});
    weighted.insert(weighted.end(), weighted3.begin(), weighted3.end());
    keep(weighted);
    std::size_t wok = 0;
    for (const auto& r : weighted) wok += r.pass;
    l.detail += "; weight-forced pairing (informational) " + std::to_string(wok) + "/" + std::to_string(weighted.size());

    const double elapsed = seconds_since(suite_start);
    l.pass = l.pass && elapsed < kSuiteBudget;
    l.detail += "; suite so far " + std::to_string(elapsed) + " s (budget 600 s)";
    print(l, "exact");
    all = all && l.pass;
  }

  {
    // Rerun everything single-threaded and compare the serialized reports.
    std::vector<CheckReport> again;
    for (const int n : {2, 3}) {
      const auto r = run("all", n, std::nullopt, 1);
      again.insert(again.end(), r.begin(), r.end());
    }
    std::vector<CheckReport> first;
    for (const int n : {2, 3}) {
      const auto r = run("all", n);
      first.insert(first.end(), r.begin(), r.end());
    }
    const std::string a = reports_json(first).dump();
    const std::string b = reports_json(again).dump();
    Line l{12, "determinism", a == b, ""};
    l.detail = std::to_string(first.size()) + " reports, " + std::to_string(a.size()) + " JSON bytes, " +
               (a == b ? "byte-identical" : "outputs differ") + " across thread counts";
    print(l, "byte-identical");
    all = all && l.pass;
  }

  if (argc > 1) {
    std::ofstream out(argv[1]);
    out << reports_json(everything).dump(2) << "\n";
  }
  std::printf("acceptance: %s (%.1f s)\n", all ? "ALL PASS" : "FAILURES PRESENT", seconds_since(suite_start));
  return all ? 0 : 1;
}
