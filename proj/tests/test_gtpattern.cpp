#include <algorithm>
#include <map>
#include <sstream>
#include <string>
#include <vector>

#include <doctest.h>

#include "gtsymp/error.hpp"
#include "gtsymp/gtpattern.hpp"

using namespace gtsymp;

namespace {

std::vector<HighestWeight> small_weights() {
  std::vector<HighestWeight> out;
  for (int a = 0; a <= 3; ++a)
    for (int b = 0; b <= a; ++b) out.push_back(HighestWeight{{a, b}});
  for (const auto& m : std::vector<std::vector<int>>{{1, 0, 0}, {1, 1, 0}, {2, 1, 0}, {2, 2, 1}, {1, 1, 1}}) out.push_back(HighestWeight{m});
  out.push_back(HighestWeight{{4}});
  return out;
}

// Canonical representative of a weight's Weyl group orbit: sorted absolute values.
std::vector<int> dominant(std::vector<int> w) {
  for (auto& x : w) x = std::abs(x);
  std::sort(w.rbegin(), w.rend());
  return w;
}

}  // namespace

TEST_SUITE("gtpattern") {
  TEST_CASE("examples") {
    CHECK(enumerate(HighestWeight{{1, 0}}).size() == 4);
    CHECK(enumerate(HighestWeight{{0, 0}}).size() == 1);
    CHECK(enumerate(HighestWeight{{3}}).size() == 4);
  }

  TEST_CASE("every enumerated tableau is valid and distinct") {
    for (const auto& w : small_weights()) {
      const auto ts = enumerate(w);
      CHECK(ts.size() == weyl_dim(w));
      for (const auto& t : ts) CHECK(validate(t).empty());
      for (std::size_t a = 1; a < ts.size(); ++a) CHECK_FALSE(ts[a] == ts[a - 1]);
      for (const auto& p : enumerate_one_step(w)) CHECK(validate(p).empty());
    }
  }

  TEST_CASE("weight multiset is Weyl group invariant") {
    for (const auto& w : small_weights()) {
      for (const auto chain : {Approach::Zh, Approach::M}) {
        std::map<std::vector<int>, int> mult;
        for (const auto& t : enumerate(w)) ++mult[weight(t, chain)];
        for (const auto& [wt, k] : mult) {
          // each sign change and each transposition maps the multiset to itself
          for (std::size_t i = 0; i < wt.size(); ++i) {
            auto f = wt;
            f[i] = -f[i];
            CHECK(mult[f] == k);
            if (i + 1 < wt.size()) {
              auto s = wt;
              std::swap(s[i], s[i + 1]);
              CHECK(mult[s] == k);
            }
          }
        }
        // highest weight occurs once, and everything is dominated by it
        std::vector<int> top(w.m.begin(), w.m.end());
        CHECK(mult[top] == 1);
        for (const auto& [wt, k] : mult) {
          const auto d = dominant(wt);
          int partial_d = 0, partial_top = 0;
          for (std::size_t i = 0; i < d.size(); ++i) {
            partial_d += d[i];
            partial_top += top[i];
            CHECK(partial_d <= partial_top);
          }
        }
      }
    }
  }

  TEST_CASE("validation rejects broken interlacing") {
    OneStepPattern p{{2, 1}, {2, 0}, {1}};
    CHECK(validate(p).empty());
    p.mid = {3, 0};
    CHECK_FALSE(validate(p).empty());
    p.mid = {2, 0};
    p.bottom = {3};
    CHECK_FALSE(validate(p).empty());
    CHECK_THROWS_AS(validate(OneStepPattern{{2, 1}, {2}, {1}}), Error);
  }

  TEST_CASE("bar is an involution on one-step patterns") {
    for (const auto& w : small_weights()) {
      if (w.n() < 2) continue;
      for (const auto& p : enumerate_one_step(w)) {
        const OneStepPattern b = bar(p);
        CHECK(validate(b).empty());
        CHECK(b.top == p.top);
        CHECK(b.mid == p.mid);
        CHECK(bar(b) == p);
      }
    }
  }

  TEST_CASE("semimaximal patterns pin the bottom row") {
    for (const auto& p : enumerate_one_step(HighestWeight{{3, 1, 0}})) {
      CHECK(is_semimaximal(p, Approach::Zh) == (p.bottom_at(2) == p.mid_at(2) && p.bottom_at(3) == p.mid_at(3)));
      CHECK(is_semimaximal(p, Approach::M) == (p.bottom_at(2) == p.mid_at(1) && p.bottom_at(3) == p.mid_at(2)));
    }
  }

  TEST_CASE("csv export") {
    const auto ts = enumerate(HighestWeight{{2, 1}});
    const std::string csv = tableaux_csv(ts);
    CHECK(static_cast<std::size_t>(std::count(csv.begin(), csv.end(), '\n')) == ts.size() + 1);
    CHECK(tableau_json(ts.front()).front() == '{');
  }
}
