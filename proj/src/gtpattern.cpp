#include "gtsymp/gtpattern.hpp"

#include <algorithm>
#include <sstream>

#include <json.hpp>

#include "gtsymp/error.hpp"

namespace gtsymp {

namespace {

std::string row_str(const std::vector<int>& r) {
  std::string out = "[";
  for (std::size_t i = 0; i < r.size(); ++i) {
    if (i) out += ",";
    out += std::to_string(r[i]);
  }
  return out + "]";
}

// Appends violations of top[p] >= mid[p] >= top[p+1] (top[k] = 0) and
// mid[p] >= bottom[p] >= mid[p+1].
void check_level(const std::vector<int>& top, const std::vector<int>& mid, const std::vector<int>* bottom,
                 const std::string& where, std::vector<std::string>& out) {
  const std::size_t k = top.size();
  for (std::size_t p = 0; p < k; ++p) {
    const int next = p + 1 < k ? top[p + 1] : 0;
    if (mid[p] > top[p] || mid[p] < next) {
      out.push_back(where + ": m' entry " + std::to_string(p) + " = " + std::to_string(mid[p]) +
                    " outside [" + std::to_string(next) + "," + std::to_string(top[p]) + "]");
    }
  }
  if (!bottom) return;
  for (std::size_t p = 0; p + 1 < k; ++p) {
    const int b = (*bottom)[p];
    if (b > mid[p] || b < mid[p + 1]) {
      out.push_back(where + ": lower entry " + std::to_string(p) + " = " + std::to_string(b) +
                    " outside [" + std::to_string(mid[p + 1]) + "," + std::to_string(mid[p]) + "]");
    }
  }
}

std::vector<std::vector<int>> between(const std::vector<int>& upper, const std::vector<int>& lower) {
  // All rows r with upper[p] >= r[p] >= lower[p].
  std::vector<std::vector<int>> out{{}};
  for (std::size_t p = 0; p < upper.size(); ++p) {
    std::vector<std::vector<int>> next;
    for (const auto& partial : out) {
      for (int v = lower[p]; v <= upper[p]; ++v) {
        auto r = partial;
        r.push_back(v);
        next.push_back(std::move(r));
      }
    }
    out = std::move(next);
  }
  return out;
}

std::vector<std::vector<int>> mid_rows(const std::vector<int>& top) {
  std::vector<int> lower(top.size());
  for (std::size_t p = 0; p < top.size(); ++p) lower[p] = p + 1 < top.size() ? top[p + 1] : 0;
  return between(top, lower);
}

std::vector<std::vector<int>> bottom_rows(const std::vector<int>& mid) {
  std::vector<int> upper(mid.begin(), mid.end() - 1);
  std::vector<int> lower(mid.begin() + 1, mid.end());
  return between(upper, lower);
}

void extend(const std::vector<int>& top, std::vector<std::vector<int>>& rows, std::vector<SpTableau>& out,
            int n) {
  for (const auto& mid : mid_rows(top)) {
    rows.push_back(top);
    rows.push_back(mid);
    if (mid.size() == 1) {
      out.push_back(SpTableau{n, rows});
    } else {
      for (const auto& b : bottom_rows(mid)) extend(b, rows, out, n);
    }
    rows.pop_back();
    rows.pop_back();
  }
}

}  // namespace

std::string OneStepPattern::str() const { return row_str(top) + row_str(mid) + row_str(bottom); }

OneStepPattern SpTableau::step(int k) const {
  if (k < 2 || k > n) throw Error(ErrorCode::ShapeError, "step level out of range");
  return OneStepPattern{m(k), mp(k), m(k - 1)};
}

std::vector<int> SpTableau::flattened() const {
  std::vector<int> out;
  for (const auto& r : rows) out.insert(out.end(), r.begin(), r.end());
  return out;
}

std::string SpTableau::str() const {
  std::string out;
  for (const auto& r : rows) out += row_str(r);
  return out;
}

std::vector<std::string> validate(const OneStepPattern& p) {
  const std::size_t n = p.top.size();
  if (n == 0 || p.mid.size() != n || p.bottom.size() + 1 != n) {
    throw Error(ErrorCode::ShapeError, "one-step pattern rows must have lengths n, n, n-1");
  }
  std::vector<std::string> out;
  for (int x : p.top) {
    if (x < 0) out.push_back("negative entry in top row");
  }
  check_level(p.top, p.mid, &p.bottom, "level " + std::to_string(n), out);
  return out;
}

std::vector<std::string> validate(const SpTableau& t) {
  if (t.n <= 0 || t.rows.size() != static_cast<std::size_t>(2 * t.n)) {
    throw Error(ErrorCode::ShapeError, "tableau must have 2n rows");
  }
  for (int k = t.n; k >= 1; --k) {
    if (t.m(k).size() != static_cast<std::size_t>(k) || t.mp(k).size() != static_cast<std::size_t>(k)) {
      throw Error(ErrorCode::ShapeError, "level " + std::to_string(k) + " rows must have length k");
    }
  }
  std::vector<std::string> out;
  for (const auto& r : t.rows) {
    for (int x : r) {
      if (x < 0) out.push_back("negative entry");
    }
  }
  for (int k = t.n; k >= 1; --k) {
    check_level(t.m(k), t.mp(k), k > 1 ? &t.m(k - 1) : nullptr, "level " + std::to_string(k), out);
  }
  return out;
}

std::vector<OneStepPattern> enumerate_one_step(const HighestWeight& lambda) {
  lambda.validate();
  std::vector<OneStepPattern> out;
  for (const auto& mid : mid_rows(lambda.m)) {
    if (mid.size() == 1) {
      out.push_back(OneStepPattern{lambda.m, mid, {}});
      continue;
    }
    for (const auto& b : bottom_rows(mid)) out.push_back(OneStepPattern{lambda.m, mid, b});
  }
  std::sort(out.begin(), out.end());
  return out;
}

std::vector<SpTableau> enumerate(const HighestWeight& lambda) {
  lambda.validate();
  std::vector<SpTableau> out;
  std::vector<std::vector<int>> rows;
  extend(lambda.m, rows, out, lambda.n());
  std::sort(out.begin(), out.end(),
            [](const SpTableau& a, const SpTableau& b) { return a.flattened() < b.flattened(); });
  return out;
}

std::vector<int> weight(const SpTableau& t, Approach chain) {
  std::vector<int> w(static_cast<std::size_t>(t.n));
  auto total = [](const std::vector<int>& r) {
    int s = 0;
    for (int x : r) s += x;
    return s;
  };
  for (int k = t.n; k >= 1; --k) {
    const int lower = k > 1 ? total(t.m(k - 1)) : 0;
    const int value = 2 * total(t.mp(k)) - lower - total(t.m(k));
    const int index = chain == Approach::Zh ? t.n - k + 1 : k;  // component -index
    w[static_cast<std::size_t>(t.n - index)] = value;
  }
  return w;
}

unsigned long weyl_dim(const HighestWeight& lambda) {
  lambda.validate();
  const int n = lambda.n();
  Rational d(1);
  std::vector<long> l(n), r(n);
  for (int i = 0; i < n; ++i) {
    l[i] = lambda.m[i] + n - i;
    r[i] = n - i;
  }
  for (int i = 0; i < n; ++i) {
    d *= Rational(l[i], r[i]);
    for (int j = i + 1; j < n; ++j) {
      d *= Rational((l[i] - l[j]) * (l[i] + l[j]), (r[i] - r[j]) * (r[i] + r[j]));
    }
  }
  return d.numerator().get_ui();
}

unsigned long gl_weyl_dim(const std::vector<int>& lambda) {
  Rational d(1);
  const long N = static_cast<long>(lambda.size());
  for (long i = 0; i < N; ++i) {
    for (long j = i + 1; j < N; ++j) d *= Rational(lambda[i] - lambda[j] + j - i, j - i);
  }
  return d.numerator().get_ui();
}

OneStepPattern bar(const OneStepPattern& p) {
  if (!validate(p).empty()) throw Error(ErrorCode::BarNotValid, "input pattern is not valid: " + p.str());
  OneStepPattern out = p;
  for (std::size_t q = 0; q < p.bottom.size(); ++q) out.bottom[q] = p.mid[q] + p.mid[q + 1] - p.bottom[q];
  if (!validate(out).empty()) throw Error(ErrorCode::BarNotValid, "image violates interlacing: " + out.str());
  return out;
}

SpTableau bar(const SpTableau& t, bool levelwise) {
  if (!validate(t).empty()) throw Error(ErrorCode::BarNotValid, "input tableau is not valid: " + t.str());
  SpTableau out = t;
  const int last = levelwise ? 2 : t.n;
  for (int k = t.n; k >= last && k >= 2; --k) {
    auto& row = out.rows[static_cast<std::size_t>(2 * (t.n - k + 1))];
    for (std::size_t q = 0; q < row.size(); ++q) row[q] = t.mp(k)[q] + t.mp(k)[q + 1] - t.m(k - 1)[q];
  }
  const auto issues = validate(out);
  if (!issues.empty()) throw Error(ErrorCode::BarNotValid, issues.front());
  return out;
}

bool is_semimaximal(const OneStepPattern& p, Approach a) {
  for (std::size_t q = 0; q < p.bottom.size(); ++q) {
    const int target = a == Approach::Zh ? p.mid[q] : p.mid[q + 1];
    if (p.bottom[q] != target) return false;
  }
  return true;
}

std::string tableau_json(const SpTableau& t) {
  nlohmann::json j;
  j["n"] = t.n;
  j["rows"] = t.rows;
  return j.dump();
}

std::string tableaux_csv(const std::vector<SpTableau>& ts, Approach chain) {
  std::ostringstream os;
  os << "id,tableau";
  if (!ts.empty()) {
    for (int i = ts.front().n; i >= 1; --i) os << ",w" << -i;
  }
  os << "\n";
  for (std::size_t id = 0; id < ts.size(); ++id) {
    os << id << ",\"" << ts[id].str() << "\"";
    for (int x : weight(ts[id], chain)) os << "," << x;
    os << "\n";
  }
  return os.str();
}

}  // namespace gtsymp
