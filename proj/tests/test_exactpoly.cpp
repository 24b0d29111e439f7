#include <algorithm>
#include <numeric>
#include <random>
#include <vector>

#include <doctest.h>

#include "gtsymp/error.hpp"
#include "gtsymp/linalg.hpp"
#include "gtsymp/poly.hpp"
#include "gtsymp/rational.hpp"

using namespace gtsymp;

namespace {

// Leibniz expansion, independent of the library's minor().
Poly leibniz(const std::vector<int>& rows, const std::vector<int>& cols) {
  std::vector<std::size_t> perm(rows.size());
  std::iota(perm.begin(), perm.end(), 0);
  Poly out;
  do {
    int inversions = 0;
    for (std::size_t a = 0; a < perm.size(); ++a)
      for (std::size_t b = a + 1; b < perm.size(); ++b) inversions += perm[a] > perm[b];
    Poly term(inversions % 2 ? -1L : 1L);
    for (std::size_t a = 0; a < perm.size(); ++a) term = term * Poly::entry(rows[a], cols[perm[a]]);
    out += term;
  } while (std::next_permutation(perm.begin(), perm.end()));
  return out;
}

Poly random_poly(std::mt19937_64& rng, int n) {
  Poly p;
  for (int t = 0; t < 4; ++t) {
    Poly m(Rational(static_cast<long>(rng() % 7) - 3, static_cast<long>(rng() % 3) + 1));
    for (int f = 0; f < 2; ++f) {
      const int r = static_cast<int>(rng() % (2 * n)) - n;
      const int c = static_cast<int>(rng() % n) + 1;
      m = m * Poly::entry(r >= 0 ? r + 1 : r, -c);
    }
    p += m;
  }
  return p;
}

}  // namespace

TEST_SUITE("exactpoly") {
  TEST_CASE("rationals stay in lowest terms") {
    CHECK(Rational(2, 4) == Rational(1, 2));
    CHECK(Rational(3, -6) == Rational(-1, 2));
    CHECK(Rational(1, 3) + Rational(1, 6) == Rational(1, 2));
    CHECK((Rational(2, 3) * Rational(3, 2)).is_one());
    CHECK(Rational::parse("-7/21") == Rational(-1, 3));
    CHECK(Rational::parse("5").is_integer());
    CHECK(Rational(-4, 6).str() == "-2/3");
    CHECK_THROWS(Rational(1, 0));
    CHECK_THROWS(Rational(0).inverse());
  }

  TEST_CASE("polynomial ring axioms on random inputs") {
    std::mt19937_64 rng(11);
    for (int t = 0; t < 20; ++t) {
      const Poly a = random_poly(rng, 2), b = random_poly(rng, 2), c = random_poly(rng, 2);
      CHECK(a * b == b * a);
      CHECK((a * b) * c == a * (b * c));
      CHECK(a * (b + c) == a * b + a * c);
      CHECK((a - a).is_zero());
    }
  }

  TEST_CASE("binomial expansion") {
    const Poly x = Poly::entry(-1, -1), y = Poly::entry(1, -1);
    const Poly lhs = (x + y).pow(3);
    const Poly rhs = x.pow(3) + Rational(3) * x.pow(2) * y + Rational(3) * x * y.pow(2) + y.pow(3);
    CHECK(lhs == rhs);
    CHECK(lhs.degree() == 3);
  }

  TEST_CASE("text form round-trips") {
    std::mt19937_64 rng(5);
    for (int t = 0; t < 20; ++t) {
      const Poly p = random_poly(rng, 3);
      CHECK(Poly::parse(p.str()) == p);
    }
    CHECK(Poly().str() == "0");
  }

  TEST_CASE("derivative obeys the product rule") {
    std::mt19937_64 rng(3);
    const Var v = Var::entry(-1, -1);
    for (int t = 0; t < 10; ++t) {
      const Poly a = random_poly(rng, 2) + Poly::entry(-1, -1), b = random_poly(rng, 2);
      CHECK((a * b).derivative(v) == a.derivative(v) * b + a * b.derivative(v));
    }
  }

  TEST_CASE("evaluation is a ring homomorphism") {
    std::mt19937_64 rng(9);
    const auto value = [](Var v) { return Rational(v.row() * 3 + v.col(), 7); };
    for (int t = 0; t < 10; ++t) {
      const Poly a = random_poly(rng, 3), b = random_poly(rng, 3);
      CHECK((a * b).evaluate(value) == a.evaluate(value) * b.evaluate(value));
      CHECK((a + b).evaluate(value) == a.evaluate(value) + b.evaluate(value));
    }
  }

  TEST_CASE("minors agree with the Leibniz expansion") {
    const std::vector<std::vector<int>> row_sets = {{-2}, {-2, -1}, {-1, 2}, {-3, -1, 1}, {-3, -2, -1}, {-2, 1, 3}};
    for (const auto& rows : row_sets) {
      std::vector<int> cols;
      for (int c = -3; c <= -3 + static_cast<int>(rows.size()) - 1; ++c) cols.push_back(c);
      CHECK(minor(rows, cols) == leibniz(rows, cols));
      CHECK(minor(rows, 3) == leibniz(rows, cols));
    }
    const std::vector<int> swapped = {-1, -2};
    const std::vector<int> sorted = {-2, -1};
    CHECK(minor(swapped, 2) == -minor(sorted, 2));
    CHECK(symplectic_column_order(2) == std::vector<int>{-2, -1, 1, 2});
  }

  TEST_CASE("proportionality") {
    const Poly p = Poly::entry(-1, -1) * Poly::entry(1, -2) + Poly::entry(-2, -1);
    CHECK(proportional(p, Rational(-3, 2) * p));
    CHECK(*proportionality_factor(Rational(4) * p, p) == Rational(4));
    CHECK_FALSE(proportional(p, p + Poly(1)));
    CHECK(proportional(Poly(), Poly()));
    CHECK_FALSE(proportional(p, Poly()));
  }
}

TEST_SUITE("linalg") {
  TEST_CASE("rank and kernel of a known matrix") {
    const QMatrix m = QMatrix::from_rows({{1, 2, 3}, {2, 4, 6}, {1, 0, 1}});
    CHECK(rank(m) == 2);
    const auto ker = kernel_basis(m);
    REQUIRE(ker.size() == 1);
    CHECK(ker[0] == QVector{Rational(1), Rational(1), Rational(-1)});
    const QVector image = m * ker[0];
    CHECK(std::all_of(image.begin(), image.end(), [](const Rational& r) { return r.is_zero(); }));
  }

  TEST_CASE("kernel vectors are annihilated and independent") {
    std::mt19937_64 rng(4);
    for (int t = 0; t < 10; ++t) {
      QMatrix m(3, 6);
      for (std::size_t r = 0; r < 3; ++r)
        for (std::size_t c = 0; c < 6; ++c) m.at(r, c) = Rational(static_cast<long>(rng() % 5) - 2);
      const auto ker = kernel_basis(m);
      CHECK(ker.size() + rank(m) == 6);
      for (const auto& v : ker) {
        const QVector z = m * v;
        CHECK(std::all_of(z.begin(), z.end(), [](const Rational& r) { return r.is_zero(); }));
      }
      if (!ker.empty()) CHECK(rank(QMatrix::from_rows(ker)) == ker.size());
    }
  }

  TEST_CASE("canonical vectors") {
    CHECK(canonical_vector({Rational(0), Rational(-2, 3), Rational(4, 3)}) ==
          QVector{Rational(0), Rational(1), Rational(-2)});
  }

  TEST_CASE("polynomial echelon coordinates reconstruct the input") {
    std::mt19937_64 rng(2);
    PolyEchelon e;
    std::vector<Poly> ps;
    for (int t = 0; t < 6; ++t) {
      ps.push_back(random_poly(rng, 2));
      e.insert(ps.back());
    }
    const Poly combo = Rational(2) * ps[0] - Rational(1, 3) * ps[4] + ps[5];
    CHECK_FALSE(e.insert(combo));
    const auto coords = e.coordinates(combo);
    REQUIRE(coords);
    Poly back;
    for (std::size_t k = 0; k < e.size(); ++k) back += (*coords)[k] * e.inserted()[k];
    CHECK(back == combo);
    CHECK_FALSE(e.coordinates(Poly::entry(2, -2).pow(5)));
  }
}
