#include "gtsymp/basisbuild.hpp"

#include <algorithm>
#include <map>

#include <json.hpp>

#include "gtsymp/error.hpp"

namespace gtsymp {

namespace {

void push(std::vector<Letter>& out, Letter l) {
  if (l.exponent > 0) out.push_back(std::move(l));
}

Letter plain(MZFamily f, int level, int i, int j, int e) {
  Letter l;
  l.family = f;
  l.level = level;
  l.i = i;
  l.j = j;
  l.exponent = e;
  return l;
}

bool is_sp_family(MZFamily f) { return f == MZFamily::Zeta || f == MZFamily::Eta; }

AlgebraKind model_kind(Approach a, bool gl, int n) {
  if (!gl) return AlgebraKind{AlgebraTag::Sp2n, n};
  return AlgebraKind{a == Approach::Zh ? AlgebraTag::GlZh : AlgebraTag::GlM, n};
}

Poly checked_nonzero(Poly v, const OneStepPattern& p, const char* what) {
  if (v.is_zero()) throw Error(ErrorCode::ZeroVector, std::string(what) + " vanishes on pattern " + p.str());
  return v;
}

void check_pattern(const OneStepPattern& p) {
  const auto issues = validate(p);
  if (!issues.empty()) throw Error(ErrorCode::ShapeError, "invalid pattern " + p.str() + ": " + issues.front());
}

OneStepPattern level_pattern(const SpTableau& t, int k) {
  if (k >= 2) return t.step(k);
  return OneStepPattern{t.m(1), t.mp(1), {}};
}

}  // namespace

std::string Letter::str() const {
  std::string out;
  switch (kind) {
    case Kind::Plain: out = to_string(family); break;
    case Kind::Checked: out = "etacheck"; break;
    case Kind::Z: return "Z(" + u.str() + ")" + (exponent > 1 ? "^" + std::to_string(exponent) : "");
  }
  out += "_{" + std::to_string(i) + "," + std::to_string(j) + "}";
  if (exponent > 1) out += "^" + std::to_string(exponent);
  return out;
}

std::size_t Word::length() const {
  std::size_t s = 0;
  for (const auto& l : letters) s += static_cast<std::size_t>(l.exponent);
  return s;
}

std::string Word::str() const {
  std::string out;
  for (const auto& l : letters) {
    if (!out.empty()) out += " ";
    out += l.str();
    if (l.kind == Letter::Kind::Plain && is_sp_family(l.family) && l.level != n) {
      out += "@" + std::to_string(l.level);
    }
  }
  return out.empty() ? "1" : out;
}

Poly apply_word(const Word& w, const Poly& v) {
  Poly out = v;
  for (auto it = w.letters.rbegin(); it != w.letters.rend(); ++it) {
    const Letter& l = *it;
    for (int t = 0; t < l.exponent && !out.is_zero(); ++t) {
      switch (l.kind) {
        case Letter::Kind::Plain:
          if (is_sp_family(l.family)) {
            const ChainLevel level{l.family == MZFamily::Zeta ? Approach::Zh : Approach::M, w.n, l.level};
            out = level_apply(level, l.i, l.j, out);
          } else {
            out = mz_apply(MZGenerator{l.family, l.i, l.j}, w.n, out, false);
          }
          break;
        case Letter::Kind::Checked: out = checked_eta_apply(l.i, l.j, w.n, out); break;
        case Letter::Kind::Z: out = z_nn_apply(l.u, w.n, out); break;
      }
    }
  }
  return out;
}

Word zhelobenko_word(const OneStepPattern& p, int n, int level, bool gl) {
  const int k = p.n();
  const MZFamily f = gl ? MZFamily::E : MZFamily::Zeta;
  Word w{n, {}};
  for (int i = 2; i <= k; ++i) push(w.letters, plain(f, level, -1, -i, p.mid_at(i) - p.bottom_at(i)));
  for (int i = 1; i <= k; ++i) push(w.letters, plain(f, level, 1, -i, p.top_at(i) - p.mid_at(i)));
  return w;
}

Poly zhelobenko_vector(const OneStepPattern& p, bool gl) {
  check_pattern(p);
  const int n = p.n();
  const Poly v0 = highest_vector(HighestWeight{p.top}, model_kind(Approach::Zh, gl, n));
  return checked_nonzero(apply_word(zhelobenko_word(p, n, n, gl), v0), p, "Zhelobenko vector");
}

const char* to_string(MolevMode m) { return m == MolevMode::Simplified ? "simplified" : "full"; }

Word molev_word(const OneStepPattern& p, int n, int level, MolevMode mode, ZRange range, bool gl) {
  const int k = p.n();
  const MZFamily f = gl ? MZFamily::Epsilon : MZFamily::Eta;
  Word w{n, {}};
  if (mode == MolevMode::Simplified || gl) {
    for (int i = 1; i <= k - 1; ++i) push(w.letters, plain(f, level, -i, -k, p.bottom_at(i + 1) - p.mid_at(i)));
    for (int i = 1; i <= k; ++i) push(w.letters, plain(f, level, k, -i, p.top_at(i) - p.mid_at(i)));
    return w;
  }
  if (level != n) throw Error(ErrorCode::ShapeError, "full Molev construction exists only at the top level");
  for (int i = 1; i <= n - 1; ++i) {
    Letter a = plain(f, level, -i, -n, p.bottom_at(i + 1) - p.mid_at(i));
    a.kind = Letter::Kind::Checked;
    push(w.letters, a);
    Letter b = plain(f, level, n, -i, p.top_at(i) - p.mid_at(i));
    b.kind = Letter::Kind::Checked;
    push(w.letters, b);
  }
  const int lo = p.mid_at(n) - n;
  const int hi = range == ZRange::Inclusive ? p.top_at(n) - n : p.top_at(n) - n - 1;
  for (int s = lo; s <= hi; ++s) {
    Letter z = plain(f, level, n, -n, 1);
    z.kind = Letter::Kind::Z;
    z.u = Rational(2 * s + 1, 2);
    w.letters.push_back(z);
  }
  return w;
}

Poly molev_vector(const OneStepPattern& p, MolevMode mode, ZRange range) {
  check_pattern(p);
  const int n = p.n();
  const Poly v0 = highest_vector(HighestWeight{p.top}, AlgebraKind{AlgebraTag::Sp2n, n});
  return checked_nonzero(apply_word(molev_word(p, n, n, mode, range), v0), p, "Molev vector");
}

Poly molev_vector_gl(const OneStepPattern& p) {
  check_pattern(p);
  const int n = p.n();
  const Poly v0 = highest_vector(HighestWeight{p.top}, AlgebraKind{AlgebraTag::GlM, n});
  return checked_nonzero(apply_word(molev_word(p, n, n, MolevMode::Simplified, ZRange::MatchExponent, true), v0),
                         p, "Molev gl vector");
}

Decomposition semimaximal_decompose(const OneStepPattern& p, Approach a) {
  check_pattern(p);
  const int n = p.n();
  Decomposition d{Word{n, {}}, p};
  for (int i = 2; i <= n; ++i) {
    auto& b = d.semimaximal.bottom[static_cast<std::size_t>(n - i)];
    if (a == Approach::Zh) {
      push(d.prefix.letters, plain(MZFamily::Zeta, n, -1, -i, p.mid_at(i) - p.bottom_at(i)));
      b = p.mid_at(i);
    } else {
      push(d.prefix.letters, plain(MZFamily::Eta, n, n, i - 1, p.bottom_at(i) - p.mid_at(i - 1)));
      b = p.mid_at(i - 1);
    }
  }
  return d;
}

std::vector<BasisVectorRecord> one_step_basis(const HighestWeight& lambda, Approach a, MolevMode mode) {
  const int n = lambda.n();
  const AlgebraKind kind{AlgebraTag::Sp2n, n};
  const Poly v0 = highest_vector(lambda, kind);
  std::vector<BasisVectorRecord> out;
  for (const auto& p : enumerate_one_step(lambda)) {
    BasisVectorRecord r;
    r.rows = {p.top, p.mid, p.bottom};
    r.approach = a;
    r.word = a == Approach::Zh ? zhelobenko_word(p, n, n) : molev_word(p, n, n, mode);
    const Poly v = checked_nonzero(apply_word(r.word, v0), p, a == Approach::Zh ? "Zhelobenko vector" : "Molev vector");
    r.weight = poly_weight(kind, v);
    r.vector = v.normalized();
    out.push_back(std::move(r));
  }
  return out;
}

std::vector<BasisVectorRecord> full_gt_basis(const HighestWeight& lambda, Approach a, std::size_t cap,
                                             MolevMode mode) {
  const std::size_t limit = cap ? cap : default_dim_cap();
  const unsigned long dim = weyl_dim(lambda);
  if (dim > limit) {
    throw Error(ErrorCode::DimensionCapExceeded,
                "dim V = " + std::to_string(dim) + " exceeds cap " + std::to_string(limit));
  }
  const int n = lambda.n();
  const AlgebraKind kind{AlgebraTag::Sp2n, n};
  const Poly v0 = highest_vector(lambda, kind);
  // Vectors after levels n..k, keyed by the tableau rows consumed so far.
  std::map<std::vector<std::vector<int>>, std::pair<Poly, Word>> memo;
  std::vector<BasisVectorRecord> out;
  for (const auto& t : enumerate(lambda)) {
    Poly v = v0;
    Word word{n, {}};
    for (int k = n; k >= 1; --k) {
      const std::size_t used = std::min<std::size_t>(t.rows.size(), static_cast<std::size_t>(2 * (n - k) + 3));
      const std::vector<std::vector<int>> key(t.rows.begin(), t.rows.begin() + static_cast<std::ptrdiff_t>(used));
      if (auto it = memo.find(key); it != memo.end()) {
        v = it->second.first;
        word = it->second.second;
        continue;
      }
      const OneStepPattern p = level_pattern(t, k);
      const Word step = a == Approach::Zh ? zhelobenko_word(p, n, k)
                                            : molev_word(p, n, k, k == n ? mode : MolevMode::Simplified);
      v = checked_nonzero(apply_word(step, v), p, "chain level vector");
      word.letters.insert(word.letters.begin(), step.letters.begin(), step.letters.end());
      memo.emplace(key, std::make_pair(v, word));
    }
    BasisVectorRecord r;
    r.rows = t.rows;
    r.approach = a;
    r.weight = poly_weight(kind, v);
    r.vector = v.normalized();
    r.word = std::move(word);
    out.push_back(std::move(r));
  }
  return out;
}

std::string basis_json(const std::vector<BasisVectorRecord>& records) {
  nlohmann::json arr = nlohmann::json::array();
  for (const auto& r : records) {
    nlohmann::json j;
    j["tableau"] = r.rows;
    j["approach"] = to_string(r.approach);
    j["weight"] = r.weight;
    j["vector"] = r.vector.str();
    j["word"] = r.word.str();
    arr.push_back(std::move(j));
  }
  return arr.dump(2);
}

}  // namespace gtsymp
