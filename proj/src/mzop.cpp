#include "gtsymp/mzop.hpp"

#include <algorithm>
#include <memory>
#include <tuple>
#include <mutex>

#include <json.hpp>

#include "gtsymp/error.hpp"
#include "gtsymp/repmodel.hpp"

namespace gtsymp {

std::string ProjectorTrace::json() const {
  nlohmann::json out = nlohmann::json::array();
  for (const auto& s : steps) {
    nlohmann::json d = nlohmann::json::array();
    for (const auto& x : s.denominators) d.push_back(x.str());
    out.push_back({{"root", {s.i, s.j}}, {"weight", s.weight}, {"depth", s.depth}, {"denominators", d}});
  }
  return out.dump();
}

const Projector& Projector::get(Embedding e, int n) {
  static std::mutex mu;
  static std::map<std::pair<int, int>, std::unique_ptr<Projector>> cache;
  std::lock_guard<std::mutex> lock(mu);
  auto& slot = cache[{static_cast<int>(e), n}];
  if (!slot) slot = std::make_unique<Projector>(subalgebra_roots(e, n));
  return *slot;
}

Poly Projector::apply_root(const PositiveRoot& r, const Poly& v, ProjectorTrace* trace) const {
  const auto& kind = datum_.kind;
  PolyBuilder acc;
  for (const auto& [w, part] : weight_components(kind, v)) {
    const Rational base = diagonal_value(kind, r.h, w) + r.rho_h;
    ProjectorStep step{r.i, r.j, w, 0, {}};
    acc.add(part);
    std::vector<Poly> raised{part};
    Rational scale(1);
    for (unsigned k = 1;; ++k) {
      Poly next = r.e_pos.apply(raised.back());
      if (next.is_zero()) break;
      const Rational denom = base + Rational(static_cast<long>(k));
      step.depth = k;
      step.denominators.push_back(denom);
      if (denom.is_zero()) {
        if (trace) trace->steps.push_back(step);
        throw Error(ErrorCode::ZeroDenominator,
                    "h + rho(h) + " + std::to_string(k) + " vanishes for root (" + std::to_string(r.i) + "," +
                        std::to_string(r.j) + ")");
      }
      scale *= Rational(-1) / (Rational(static_cast<long>(k)) * denom);
      Poly term = next;
      for (unsigned l = 0; l < k; ++l) term = r.e_neg.apply(term);
      acc.add(term, scale);
      raised.push_back(std::move(next));
    }
    if (trace) trace->steps.push_back(std::move(step));
  }
  return std::move(acc).build();
}

Poly Projector::apply(const Poly& v, ProjectorTrace* trace) const {
  Poly out = v;
  for (auto it = datum_.roots.rbegin(); it != datum_.roots.rend(); ++it) {
    if (out.is_zero()) break;
    out = apply_root(*it, out, trace);
  }
  return out;
}

const char* to_string(MZFamily f) {
  switch (f) {
    case MZFamily::Zeta: return "zeta";
    case MZFamily::Eta: return "eta";
    case MZFamily::E: return "e";
    case MZFamily::Epsilon: return "epsilon";
  }
  return "?";
}

Embedding embedding_of(MZFamily f) {
  switch (f) {
    case MZFamily::Zeta: return Embedding::ZhSp;
    case MZFamily::Eta: return Embedding::MSp;
    case MZFamily::E: return Embedding::ZhGl;
    case MZFamily::Epsilon: return Embedding::MGl;
  }
  return Embedding::ZhSp;
}

AlgebraKind kind_of(MZFamily f, int n) { return ambient_kind(embedding_of(f), n); }

bool is_legal(MZFamily f, int n, int i, int j) {
  const bool zh = f == MZFamily::Zeta || f == MZFamily::E;
  const int outer = zh ? 1 : n;
  auto inner = [&](int x) { return zh ? (x >= -n && x <= -2) : (x >= -n + 1 && x <= -1); };
  if ((i == outer || i == -outer) && inner(j)) return true;
  if ((j == outer || j == -outer) && inner(i)) return true;
  return (i == outer && j == -outer) || (i == -outer && j == outer);
}

std::vector<std::pair<int, int>> legal_generators(MZFamily f, int n) {
  std::vector<std::pair<int, int>> out;
  const auto idx = AlgebraKind{AlgebraTag::Sp2n, n}.indices();
  for (int i : idx) {
    for (int j : idx) {
      if (is_legal(f, n, i, j)) out.emplace_back(i, j);
    }
  }
  return out;
}

std::string MZGenerator::str() const {
  return std::string(to_string(family)) + "[" + std::to_string(i) + "," + std::to_string(j) + "]";
}

int ChainLevel::global(int local) const {
  if (local == 0 || std::abs(local) > k) throw Error(ErrorCode::IndexOutOfAlgebra, "local index out of level");
  return chain == Approach::Zh ? sign(local) * (std::abs(local) + n - k) : local;
}

std::vector<int> ChainLevel::keep() const {
  std::vector<int> out;
  const int lo = chain == Approach::Zh ? 2 : 1;
  const int hi = chain == Approach::Zh ? k : k - 1;
  for (int l = -hi; l <= -lo; ++l) out.push_back(global(l));
  for (int l = lo; l <= hi; ++l) out.push_back(global(l));
  std::sort(out.begin(), out.end());
  return out;
}

const Projector& level_projector(const ChainLevel& level) {
  static std::mutex mu;
  static std::map<std::tuple<int, int, int>, std::unique_ptr<Projector>> cache;
  std::lock_guard<std::mutex> lock(mu);
  auto& slot = cache[{static_cast<int>(level.chain), level.n, level.k}];
  if (!slot) {
    RootDatum d = roots_for(AlgebraKind{AlgebraTag::Sp2n, level.n}, level.keep());
    d.embedding = level.chain == Approach::Zh ? Embedding::ZhSp : Embedding::MSp;
    slot = std::make_unique<Projector>(std::move(d));
  }
  return *slot;
}

bool level_highest(const ChainLevel& level, const Poly& v) {
  for (const auto& r : level_projector(level).datum().roots) {
    if (!r.e_pos.apply(v).is_zero()) return false;
  }
  return true;
}

namespace {

Poly cartan_apply(const AlgebraKind& kind, const LinOperator& op, const Poly& v, const Rational& scale) {
  PolyBuilder acc;
  for (const auto& [w, part] : weight_components(kind, v)) acc.add(part, scale * diagonal_value(kind, op, w));
  return std::move(acc).build();
}

}  // namespace

Poly level_apply(const ChainLevel& level, int i, int j, const Poly& v) {
  if (v.is_zero()) return Poly();
  const AlgebraKind kind{AlgebraTag::Sp2n, level.n};
  Rational scale(1);
  const MZFamily f = level.family();
  if (!is_legal(f, level.k, i, j) && is_legal(f, level.k, -j, -i)) {
    scale = Rational(-sign(i) * sign(j));
    std::swap(i, j);
    i = -i;
    j = -j;
  }
  const LinOperator op = realize_generator(kind, level.global(i), level.global(j));
  if (i == j) return cartan_apply(kind, op, v, scale);
  return level_projector(level).apply(op.apply(v)) * scale;
}

Poly mz_apply(const MZGenerator& g, int n, const Poly& v, bool check_highest) {
  const Embedding e = embedding_of(g.family);
  const AlgebraKind kind = kind_of(g.family, n);
  if (v.is_zero()) return Poly();
  if (check_highest && !is_subalgebra_highest(v, e, n)) {
    throw Error(ErrorCode::NotHighest, g.str() + " applied to a vector that is not subalgebra-highest");
  }
  if (kind.is_sp()) {
    return level_apply(ChainLevel{g.family == MZFamily::Zeta ? Approach::Zh : Approach::M, n, n}, g.i, g.j, v);
  }
  const LinOperator op = realize_generator(kind, g.i, g.j);
  if (g.i == g.j) return cartan_apply(kind, op, v, Rational(1));
  return Projector::get(e, n).apply(op.apply(v));
}

Rational ShiftConstants::rho(int j) const { return Rational(-j); }

Rational ShiftConstants::cartan(int j) const {
  const int w = weight[static_cast<std::size_t>(n - std::abs(j))];
  return Rational(j < 0 ? w : -w);
}

Rational ShiftConstants::f(int j) const { return cartan(j) + rho(j); }

Rational ShiftConstants::g(int j) const { return f(j) + Rational(1, 2); }

Poly checked_eta_apply(int i, int j, int n, const Poly& v, std::string* note) {
  if (std::abs(i) == n && std::abs(j) < n && j != 0) {
    return checked_eta_apply(-j, -i, n, v, note) * Rational(-sign(i) * sign(j));
  }
  if (!(std::abs(j) == n && std::abs(i) < n && i != 0)) {
    throw Error(ErrorCode::IndexOutOfAlgebra, "checked operator needs one index equal to +-n");
  }
  const AlgebraKind kind{AlgebraTag::Sp2n, n};
  PolyBuilder acc;
  for (const auto& [w, part] : weight_components(kind, v)) {
    const ShiftConstants sc{n, w};
    Rational s(1);
    for (int l = i - 1; l >= -n + 1; --l) {
      if (l == 0) continue;
      s *= sc.f(i) - sc.f(l);
    }
    if (s.is_zero()) {
      if (note) *note = "scalar factor vanishes on weight component";
      continue;
    }
    acc.add(mz_apply(MZGenerator{MZFamily::Eta, i, j}, n, part, false), s);
  }
  return std::move(acc).build();
}

Poly z_nn_apply(const Rational& u, int n, const Poly& v) {
  const AlgebraKind kind{AlgebraTag::Sp2n, n};
  const LinOperator lower = realize_generator(kind, n, -n);
  std::vector<int> range;
  for (int i = -n + 1; i <= n - 1; ++i) {
    if (i != 0) range.push_back(i);
  }
  PolyBuilder acc;
  for (const auto& [w, part] : weight_components(kind, v)) {
    const ShiftConstants sc{n, w};
    Rational first(-1);
    for (int i : range) first *= u + sc.g(i);
    acc.add(lower.apply(part), first);
    for (int i : range) {
      Rational c(1);
      for (int j : range) {
        if (j == i) continue;
        const Rational d = sc.g(i) - sc.g(j);
        if (d.is_zero()) {
          throw Error(ErrorCode::DegenerateWeight,
                      "g_" + std::to_string(i) + " = g_" + std::to_string(j) + " on this weight");
        }
        c *= (u + sc.g(j)) / d;
      }
      if (c.is_zero()) continue;
      const Poly inner = checked_eta_apply(i, -n, n, part);
      if (inner.is_zero()) continue;
      acc.add(checked_eta_apply(n, i, n, inner), c);
    }
  }
  return std::move(acc).build();
}

}  // namespace gtsymp
