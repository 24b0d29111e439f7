#include <cstdlib>
#include <vector>

#include <doctest.h>

#include "gtsymp/error.hpp"
#include "gtsymp/gtpattern.hpp"
#include "gtsymp/repmodel.hpp"

using namespace gtsymp;

namespace {

// Weyl dimension formula for C_n with lambda_1 >= ... >= lambda_n in epsilon
// coordinates: prod over e_i - e_j, e_i + e_j (i<j) and 2e_i of (lambda+rho, a)/(rho, a).
Rational weyl_c(const std::vector<int>& l) {
  const int n = static_cast<int>(l.size());
  std::vector<long> lr(l.size()), r(l.size());
  for (int i = 0; i < n; ++i) {
    r[i] = n - i;
    lr[i] = l[i] + r[i];
  }
  Rational d(1);
  for (int i = 0; i < n; ++i) {
    d *= Rational(lr[i], r[i]);
    for (int j = i + 1; j < n; ++j) d *= Rational(lr[i] - lr[j], r[i] - r[j]) * Rational(lr[i] + lr[j], r[i] + r[j]);
  }
  return d;
}

// Weyl dimension for gl(m): prod_{i<j} (l_i - l_j + j - i)/(j - i).
Rational weyl_a(const std::vector<int>& l) {
  Rational d(1);
  for (std::size_t i = 0; i < l.size(); ++i)
    for (std::size_t j = i + 1; j < l.size(); ++j)
      d *= Rational(l[i] - l[j] + static_cast<long>(j - i), static_cast<long>(j - i));
  return d;
}

}  // namespace

TEST_SUITE("repmodel") {
  TEST_CASE("weight parsing and validation") {
    CHECK(HighestWeight::parse("3,1,0").m == std::vector<int>{3, 1, 0});
    CHECK_NOTHROW(HighestWeight::parse("2,2").validate());
    try {
      HighestWeight::parse("0,1").validate();
      FAIL("expected InvalidWeight");
    } catch (const Error& e) {
      CHECK(e.code() == ErrorCode::InvalidWeight);
      CHECK(std::string(e.what()).find("not weakly decreasing") != std::string::npos);
    }
    CHECK_THROWS_AS(HighestWeight::parse("1,-1").validate(), Error);
    CHECK_THROWS_AS(HighestWeight::parse("1,x"), Error);
    CHECK(HighestWeight::parse("0,0").is_zero());
  }

  TEST_CASE("Weyl dimension agrees with the formula") {
    CHECK(weyl_dim(HighestWeight{{1, 0}}) == 4);
    CHECK(weyl_dim(HighestWeight{{1, 1}}) == 5);
    CHECK(weyl_dim(HighestWeight{{2, 0}}) == 10);
    for (int a = 0; a <= 4; ++a)
      for (int b = 0; b <= a; ++b) {
        CHECK(Rational(static_cast<long>(weyl_dim(HighestWeight{{a, b}}))) == weyl_c({a, b}));
        for (int c = 0; c <= b; ++c)
          CHECK(Rational(static_cast<long>(weyl_dim(HighestWeight{{a, b, c}}))) == weyl_c({a, b, c}));
      }
    CHECK(Rational(static_cast<long>(gl_weyl_dim({2, 1, 0}))) == weyl_a({2, 1, 0}));
    CHECK(Rational(static_cast<long>(gl_weyl_dim({3, 1, 1, 0}))) == weyl_a({3, 1, 1, 0}));
  }

  TEST_CASE("module dimensions for the three algebra kinds") {
    for (const auto& w : {HighestWeight{{1, 0}}, HighestWeight{{2, 1}}, HighestWeight{{3, 3}}, HighestWeight{{1, 1, 0}}}) {
      const int n = w.n();
      CHECK(Rational(static_cast<long>(generate_module(w, AlgebraKind{AlgebraTag::Sp2n, n}).dim())) == weyl_c(w.m));
      std::vector<int> gl = w.m;
      gl.push_back(0);
      CHECK(Rational(static_cast<long>(generate_module(w, AlgebraKind{AlgebraTag::GlZh, n}).dim())) == weyl_a(gl));
      CHECK(Rational(static_cast<long>(generate_module(w, AlgebraKind{AlgebraTag::GlM, n}).dim())) == weyl_a(gl));
    }
  }

  TEST_CASE("highest vector is annihilated by raising generators") {
    for (const auto tag : {AlgebraTag::Sp2n, AlgebraTag::GlZh, AlgebraTag::GlM}) {
      const AlgebraKind kind{tag, 2};
      const Poly v = highest_vector(HighestWeight{{3, 1}}, kind);
      CHECK_FALSE(v.is_zero());
      for (const auto& [i, j] : root_generators(kind, true)) CHECK(realize_generator(kind, i, j).apply(v).is_zero());
      CHECK(poly_weight(kind, v) == highest_weight_vector(HighestWeight{{3, 1}}, kind));
    }
  }

  TEST_CASE("highest vector of [2,1] is a product of minors") {
    const std::vector<int> r1 = {-2};
    const std::vector<int> r2 = {-2, -1};
    CHECK(highest_vector(HighestWeight{{2, 1}}, AlgebraKind{AlgebraTag::Sp2n, 2}) == minor(r1, 2) * minor(r2, 2));
  }

  TEST_CASE("coordinates and reconstruction") {
    const ModuleBasis m = generate_module(HighestWeight{{2, 1}}, AlgebraKind{AlgebraTag::Sp2n, 2});
    const Poly v = Rational(3) * m.vectors()[2] - m.vectors()[7];
    CHECK(m.contains(v));
    CHECK(m.reconstruct(m.coordinatize(v)) == v);
    CHECK_FALSE(m.contains(Poly::entry(1, -1).pow(5)));
    CHECK_THROWS_AS(m.coordinatize(Poly::entry(1, -1).pow(5)), Error);
  }

  TEST_CASE("dimension cap") {
    ModuleOptions o;
    o.cap = 10;
    CHECK_THROWS_AS(generate_module(HighestWeight{{2, 1}}, AlgebraKind{AlgebraTag::Sp2n, 2}, o), Error);
    setenv("GTSYMP_DIM_CAP", "123", 1);
    CHECK(default_dim_cap() == 123);
    unsetenv("GTSYMP_DIM_CAP");
    CHECK(default_dim_cap() == 5000);
  }

  TEST_CASE("highest subspace dimension matches branching count") {
    for (const auto& w : {HighestWeight{{2, 1}}, HighestWeight{{3, 1}}, HighestWeight{{1, 1, 0}}}) {
      const ModuleBasis m = generate_module(w, AlgebraKind{AlgebraTag::Sp2n, w.n()});
      for (const auto e : {Embedding::ZhSp, Embedding::MSp}) {
        const ModuleBasis h = highest_subspace(m, e);
        CHECK(h.dim() == enumerate_one_step(w).size());
        for (const auto& v : h.vectors()) CHECK(is_subalgebra_highest(v, e, w.n()));
      }
    }
  }
}
