#include <optional>
#include <vector>

#include <doctest.h>

#include "gtsymp/error.hpp"
#include "gtsymp/gtpattern.hpp"
#include "gtsymp/mzop.hpp"
#include "gtsymp/repmodel.hpp"

using namespace gtsymp;

namespace {

const std::vector<HighestWeight>& weights() {
  static const std::vector<HighestWeight> ws = {HighestWeight{{2, 1}}, HighestWeight{{3, 0}}, HighestWeight{{1, 1, 0}}};
  return ws;
}

// The projector has poles on some low weight vectors of a finite-dimensional module.
std::optional<Poly> project(const Projector& p, const Poly& v) {
  try {
    return p.apply(v);
  } catch (const Error& e) {
    if (e.code() != ErrorCode::ZeroDenominator) throw;
    return std::nullopt;
  }
}

bool killed_by_raising(const Poly& v, Embedding e, int n) {
  const RootDatum d = subalgebra_roots(e, n);
  for (const auto& r : d.roots)
    if (!r.e_pos.apply(v).is_zero()) return false;
  return true;
}

}  // namespace

TEST_SUITE("mzop") {
  TEST_CASE("projector output is subalgebra-highest and idempotent") {
    for (const auto& w : weights()) {
      const int n = w.n();
      const ModuleBasis m = generate_module(w, AlgebraKind{AlgebraTag::Sp2n, n});
      for (const auto e : {Embedding::ZhSp, Embedding::MSp}) {
        const Projector& p = Projector::get(e, n);
        std::size_t regular = 0;
        for (std::size_t t = 0; t < m.dim(); t += 3) {
          const auto pv = project(p, m.vectors()[t]);
          if (!pv) continue;
          ++regular;
          CHECK(killed_by_raising(*pv, e, n));
          CHECK(p.apply(*pv) == *pv);
        }
        CHECK(regular > 0);
      }
    }
  }

  TEST_CASE("projector kills lowering images") {
    const HighestWeight w{{2, 1}};
    const ModuleBasis m = generate_module(w, AlgebraKind{AlgebraTag::Sp2n, 2});
    for (const auto e : {Embedding::ZhSp, Embedding::MSp}) {
      const Projector& p = Projector::get(e, 2);
      std::size_t regular = 0;
      for (const auto& r : p.datum().roots)
        for (const auto& v : m.vectors()) {
          const auto out = project(p, r.e_neg.apply(v));
          if (!out) continue;
          ++regular;
          CHECK(out->is_zero());
        }
      CHECK(regular > 0);
    }
  }

  TEST_CASE("projector trace records denominators") {
    const HighestWeight w{{2, 1}};
    const ModuleBasis m = generate_module(w, AlgebraKind{AlgebraTag::Sp2n, 2});
    ProjectorTrace trace;
    Projector::get(Embedding::ZhSp, 2).apply(m.vectors().front() + m.vectors()[1], &trace);
    CHECK_FALSE(trace.steps.empty());
    for (const auto& s : trace.steps) {
      CHECK(s.denominators.size() == s.depth);
      for (const auto& d : s.denominators) CHECK_FALSE(d.is_zero());
    }
    CHECK(trace.json().front() == '[');
  }

  TEST_CASE("generators act as projected polarizations") {
    for (const auto& w : weights()) {
      const int n = w.n();
      const ModuleBasis m = generate_module(w, AlgebraKind{AlgebraTag::Sp2n, n});
      for (const auto f : {MZFamily::Zeta, MZFamily::Eta}) {
        const Embedding e = embedding_of(f);
        const ModuleBasis h = highest_subspace(m, e);
        for (const auto& [i, j] : legal_generators(f, n)) {
          if (i == j) continue;
          const LinOperator op = realize_generator(AlgebraKind{AlgebraTag::Sp2n, n}, i, j);
          for (const auto& v : h.vectors()) {
            const Poly out = mz_apply(MZGenerator{f, i, j}, n, v);
            CHECK(out == Projector::get(e, n).apply(op.apply(v)));
            CHECK(killed_by_raising(out, e, n));
          }
        }
      }
    }
  }

  TEST_CASE("mirror alias") {
    const int n = 2;
    const ModuleBasis m = generate_module(HighestWeight{{2, 1}}, AlgebraKind{AlgebraTag::Sp2n, n});
    const ModuleBasis h = highest_subspace(m, Embedding::ZhSp);
    for (const auto& [i, j] : legal_generators(MZFamily::Zeta, n)) {
      if (is_legal(MZFamily::Zeta, n, -j, -i)) continue;
      for (const auto& v : h.vectors())
        CHECK(mz_apply(MZGenerator{MZFamily::Zeta, -j, -i}, n, v) ==
              Rational(-sign(i) * sign(j)) * mz_apply(MZGenerator{MZFamily::Zeta, i, j}, n, v));
    }
  }

  TEST_CASE("non-highest input is rejected") {
    const ModuleBasis m = generate_module(HighestWeight{{2, 1}}, AlgebraKind{AlgebraTag::Sp2n, 2});
    for (const auto& v : m.vectors()) {
      if (is_subalgebra_highest(v, Embedding::ZhSp, 2)) continue;
      CHECK_THROWS_AS(mz_apply(MZGenerator{MZFamily::Zeta, 1, -2}, 2, v), Error);
      break;
    }
  }

  TEST_CASE("gl families act inside the gl model") {
    const int n = 2;
    const HighestWeight w{{2, 1}};
    const ModuleBasis m = generate_module(w, kind_of(MZFamily::E, n));
    for (const auto f : {MZFamily::E, MZFamily::Epsilon}) {
      const ModuleBasis gm = generate_module(w, kind_of(f, n));
      const ModuleBasis h = highest_subspace(gm, embedding_of(f));
      for (const auto& [i, j] : legal_generators(f, n))
        for (const auto& v : h.vectors()) {
          const Poly out = mz_apply(MZGenerator{f, i, j}, n, v);
          CHECK(gm.contains(out));
          CHECK(is_subalgebra_highest(out, embedding_of(f), n));
        }
    }
    CHECK(m.dim() == gl_weyl_dim({2, 1, 0}));
  }

  TEST_CASE("shift constants") {
    const ShiftConstants s{2, {3, 1}};
    CHECK(s.rho(-1) == Rational(1));
    CHECK(s.rho(2) == Rational(-2));
    CHECK(s.cartan(-2) == Rational(3));
    CHECK(s.cartan(2) == Rational(-3));
    CHECK(s.f(-1) == s.cartan(-1) + s.rho(-1));
    CHECK(s.g(1) == s.f(1) + Rational(1, 2));
  }
}
