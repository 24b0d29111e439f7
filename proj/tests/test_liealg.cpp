#include <random>
#include <set>
#include <vector>

#include <doctest.h>

#include "gtsymp/error.hpp"
#include "gtsymp/liealg.hpp"

using namespace gtsymp;

namespace {

Poly sample_poly(int n) {
  Poly p = Poly::entry(-n, -n) * Poly::entry(n, -1) + Rational(2) * Poly::entry(-1, -n).pow(2);
  p += Poly::entry(1, -1) * Poly::entry(-1, -n) * Poly::entry(n, -n);
  return p;
}

// Matrix of sum_i (E_{-i,i} - E_{i,-i}) as a map (i,j) -> value.
int form(int i, int j) { return i == -j ? (i < 0 ? 1 : -1) : 0; }

}  // namespace

TEST_SUITE("liealg") {
  TEST_CASE("sp generators preserve the symplectic form") {
    for (int n = 1; n <= 3; ++n) {
      const AlgebraKind kind{AlgebraTag::Sp2n, n};
      for (const int i : kind.indices())
        for (const int j : kind.indices()) {
          const LinOperator f = realize_generator(kind, i, j);
          // (F^T J + J F)_{a,b} = sum_c F_{c,a} J_{c,b} + J_{a,c} F_{c,b}
          for (const int a : kind.indices())
            for (const int b : kind.indices()) {
              Rational s;
              for (const int c : kind.indices()) s += f.entry(c, a) * Rational(form(c, b)) + Rational(form(a, c)) * f.entry(c, b);
              CHECK(s.is_zero());
            }
        }
    }
  }

  TEST_CASE("mirror identity F_{i,j} = -sign(i)sign(j) F_{-j,-i}") {
    const AlgebraKind kind{AlgebraTag::Sp2n, 3};
    for (const int i : kind.indices())
      for (const int j : kind.indices())
        CHECK(realize_generator(kind, i, j) == realize_generator(kind, -j, -i) * Rational(-sign(i) * sign(j)));
  }

  TEST_CASE("polarization is a Lie homomorphism") {
    for (const auto tag : {AlgebraTag::Sp2n, AlgebraTag::GlZh, AlgebraTag::GlM}) {
      const AlgebraKind kind{tag, 2};
      const Poly p = sample_poly(2);
      for (const int i : kind.indices())
        for (const int j : kind.indices())
          for (const int k : kind.indices())
            for (const int l : kind.indices()) {
              const LinOperator a = realize_generator(kind, i, j), b = realize_generator(kind, k, l);
              CHECK(commutator(a, b).apply(p) == a.apply(b.apply(p)) - b.apply(a.apply(p)));
            }
    }
  }

  TEST_CASE("root generator counts") {
    for (int n = 1; n <= 4; ++n) {
      CHECK(root_generators(AlgebraKind{AlgebraTag::Sp2n, n}, true).size() == static_cast<std::size_t>(n * n));
      CHECK(root_generators(AlgebraKind{AlgebraTag::Sp2n, n}, false).size() == static_cast<std::size_t>(n * n));
      CHECK(root_generators(AlgebraKind{AlgebraTag::GlZh, n}, true).size() == static_cast<std::size_t>(n * (n + 1) / 2));
    }
  }

  TEST_CASE("canonical generator") {
    const CanonicalPair c = canonical_generator(2, -1);
    CHECK(c.i == 1);
    CHECK(c.j == -2);
    CHECK(realize_generator(AlgebraKind{AlgebraTag::Sp2n, 2}, 2, -1) ==
          realize_generator(AlgebraKind{AlgebraTag::Sp2n, 2}, c.i, c.j) * Rational(c.sign));
  }

  TEST_CASE("subalgebra root data are normally ordered sl2 triples") {
    for (int n = 2; n <= 3; ++n)
      for (const auto e : {Embedding::ZhSp, Embedding::MSp, Embedding::ZhGl, Embedding::MGl}) {
        const RootDatum d = subalgebra_roots(e, n);
        CHECK(is_normal_ordering(d.roots));
        CHECK(is_normal_ordering(reversed(d).roots));
        const std::size_t expected = e == Embedding::ZhSp || e == Embedding::MSp
                                         ? static_cast<std::size_t>((n - 1) * (n - 1))
                                         : static_cast<std::size_t>((n - 1) * (n - 2) / 2);
        CHECK(d.roots.size() == expected);
        for (const auto& r : d.roots) {
          CHECK(commutator(r.e_pos, r.e_neg) == r.h);
          CHECK(r.h.is_diagonal());
          CHECK(commutator(r.h, r.e_pos) == r.e_pos * Rational(2));
          CHECK(commutator(r.h, r.e_neg) == r.e_neg * Rational(-2));
        }
      }
  }

  TEST_CASE("weights of monomials and vectors") {
    const AlgebraKind sp{AlgebraTag::Sp2n, 2};
    const Poly v = Poly::entry(-1, -2) * Poly::entry(-2, -1);
    CHECK(poly_weight(sp, v) == std::vector<int>{1, 1});
    CHECK(poly_weight(sp, Poly::entry(2, -1)) == std::vector<int>{-1, 0});
    CHECK_THROWS_AS(poly_weight(sp, v + Poly::entry(2, -1)), Error);
    CHECK(weight_components(sp, v + Poly::entry(2, -1)).size() == 2);
  }

  TEST_CASE("generators shift weights by their root") {
    const AlgebraKind sp{AlgebraTag::Sp2n, 2};
    const Poly v = Poly::entry(-2, -2) * Poly::entry(-1, -1);
    const auto w = poly_weight(sp, v);
    for (const int i : sp.indices())
      for (const int j : sp.indices()) {
        if (i == j) continue;
        const Poly u = realize_generator(sp, i, j).apply(v);
        if (u.is_zero()) continue;
        const auto wu = poly_weight(sp, u);
        std::vector<int> d(2, 0);
        const auto bump = [&](int idx, int s) { d[static_cast<std::size_t>(2 - std::abs(idx))] += idx < 0 ? s : -s; };
        bump(i, 1);
        bump(j, -1);
        CHECK(wu == std::vector<int>{w[0] + d[0], w[1] + d[1]});
      }
  }

  TEST_CASE("algebra kinds") {
    CHECK(AlgebraKind{AlgebraTag::GlZh, 2}.indices() == std::vector<int>{-2, -1, 1});
    CHECK(AlgebraKind{AlgebraTag::GlM, 2}.indices() == std::vector<int>{-2, -1, 2});
    CHECK(AlgebraKind{AlgebraTag::Sp2n, 2}.rank() == 2);
    CHECK_FALSE(AlgebraKind{AlgebraTag::GlZh, 2}.contains(2));
  }
}
