#include <random>
#include <vector>

#include <doctest.h>

#include "gtsymp/error.hpp"
#include "gtsymp/verify.hpp"

using namespace gtsymp;

TEST_SUITE("verify") {
  TEST_CASE("test weights") {
    CHECK(test_weights(2).size() == 10);
    CHECK(test_weights(3).size() == 3);
    CHECK_THROWS_AS(test_weights(4), Error);
  }

  TEST_CASE("random samples are symplectic") {
    for (const int n : {1, 2, 3}) {
      std::mt19937_64 rng(static_cast<std::uint64_t>(n) * 17);
      for (int t = 0; t < 30; ++t) {
        const SympMatrix x = random_symplectic(n, rng);
        CHECK(is_symplectic(x.m, n));
        // X^T J X = J computed here from scratch
        const QMatrix j = symplectic_form(n);
        CHECK(x.m.transpose() * j * x.m == j);
      }
    }
  }

  TEST_CASE("the symplectic form") {
    const QMatrix j = symplectic_form(2);
    CHECK(j.at(SympMatrix::pos(2, -1), SympMatrix::pos(2, 1)) == Rational(1));
    CHECK(j.at(SympMatrix::pos(2, 1), SympMatrix::pos(2, -1)) == Rational(-1));
    CHECK(j.at(SympMatrix::pos(2, -2), SympMatrix::pos(2, -1)).is_zero());
    CHECK(j.transpose() * j == QMatrix::identity(4));
  }

  TEST_CASE("elementary factors are symplectic and invertible") {
    const int n = 2;
    const std::vector<int> idx = {-2, -1, 1, 2};
    for (const int i : idx)
      for (const int j : idx) {
        if (i == j) continue;
        const QMatrix a = elementary_symplectic(n, i, j, Rational(3, 2));
        const QMatrix b = elementary_symplectic(n, i, j, Rational(-3, 2));
        CHECK(is_symplectic(a, n));
        CHECK(a * b == QMatrix::identity(4));
      }
  }

  TEST_CASE("general samples are usually not symplectic") {
    std::mt19937_64 rng(3);
    int symplectic = 0;
    for (int t = 0; t < 20; ++t) symplectic += is_symplectic(random_general(2, rng).m, 2);
    CHECK(symplectic == 0);
  }

  TEST_CASE("sampling is seed-deterministic") {
    const auto a = GroupSamples::make(3, 5, 42);
    const auto b = GroupSamples::make(3, 5, 42);
    const auto c = GroupSamples::make(3, 5, 43);
    for (std::size_t k = 0; k < 5; ++k) CHECK(a.points[k].m == b.points[k].m);
    CHECK_FALSE(a.points[0].m == c.points[0].m);
  }

  TEST_CASE("evaluation at a matrix") {
    SympMatrix x{2, QMatrix::identity(4)};
    x.m.at(SympMatrix::pos(2, 1), SympMatrix::pos(2, -2)) = Rational(5);
    CHECK(evaluate_at(Poly::entry(1, -2), x) == Rational(5));
    CHECK(evaluate_at(Poly::entry(-2, -2) * Poly::entry(-1, -1), x) == Rational(1));
  }

  TEST_CASE("comparison classification") {
    const Poly p = Poly::entry(-1, -1) + Poly::entry(1, -2);
    CHECK(compare_exact(Poly(), Poly()).kind == GroupComparison::Kind::BothZero);
    const auto c = compare_exact(Rational(-2) * p, p);
    CHECK(c.kind == GroupComparison::Kind::Proportional);
    CHECK(c.factor == Rational(-2));
    CHECK(compare_exact(Poly(), p).kind == GroupComparison::Kind::LeftZero);
    CHECK(compare_exact(p, Poly()).kind == GroupComparison::Kind::RightZero);
    CHECK(compare_exact(p, p * p).kind == GroupComparison::Kind::NotProportional);
  }

  TEST_CASE("group comparison sees relations of the group") {
    // det of the whole symplectic matrix is 1 on the group, not as a polynomial
    const int n = 1;
    const std::vector<int> rows = {-1, 1};
    const std::vector<int> cols = {-1, 1};
    const Poly det = minor(rows, cols);
    const auto s = GroupSamples::make(n, 8, 1);
    const auto c = compare_on_group(det, Poly(1), s);
    CHECK(c.kind == GroupComparison::Kind::Proportional);
    CHECK(c.factor == Rational(1));
    CHECK_FALSE(compare_exact(det, Poly(1)).proportional());
  }

  TEST_CASE("minor identity with its control") {
    const CheckReport r2 = check_minor_identity(2, 10, 7);
    CHECK(r2.pass);
    const CheckReport r3 = check_minor_identity(3, 10, 7);
    CHECK(r3.pass);
    CHECK(r3.assertions >= 10);
  }

  TEST_CASE("reports") {
    CheckReport r = make_report("x", 2);
    r.expect(true, "fine");
    r.expect(false, "broken");
    CHECK_FALSE(r.pass);
    CHECK(r.assertions == 2);
    CHECK(r.failures == 1);
    CHECK(r.witnesses == std::vector<std::string>{"broken"});
    CHECK(r.to_json()["status"] == "fail");
    CHECK(r.text().find("FAIL") == 0);
  }

  TEST_CASE("runner") {
    CheckConfig cfg;
    cfg.id = "dimensions";
    cfg.n = 2;
    const auto one = run_checks(cfg, 1);
    const auto four = run_checks(cfg, 4);
    REQUIRE(one.size() == 10);
    CHECK(reports_json(one).dump() == reports_json(four).dump());
    CHECK(reports_json(one)["schema"] == "gtsymp/1");
    cfg.id = "nope";
    CHECK_THROWS_AS(run_checks(cfg), Error);
    cfg.id = "basis";
    cfg.lambda = HighestWeight{{1, 0, 0}};
    CHECK_THROWS_AS(run_checks(cfg), Error);
  }

  TEST_CASE("trivial weight passes the weight-driven checks") {
    const HighestWeight zero{{0, 0}};
    for (const auto& r : {check_dimensions(zero), check_highest_vectors(zero), check_projector(zero), check_basis(zero),
                          check_znnac(zero), check_l8(zero, 1), check_restriction_equivalence(zero, 1),
                          check_relations(zero), check_main_theorem(zero, TheoremVariant::Literal),
                          check_main_theorem(zero, TheoremVariant::Weighted)})
      CHECK_MESSAGE(r.pass, r.text());
  }
}
