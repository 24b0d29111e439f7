#include "gtsymp/poly.hpp"

#include <algorithm>
#include <cctype>
#include <sstream>

#include "gtsymp/error.hpp"

namespace gtsymp {

Var Var::entry(int row, int col) {
  if (row == 0 || col == 0 || row < -63 || row > 63 || col < -63 || col > 63) {
    throw Error(ErrorCode::IndexOutOfAlgebra, "matrix entry index out of range");
  }
  return Var(static_cast<std::uint16_t>(((row + 64) << 7) | (col + 64)));
}

Var Var::param(int k) {
  if (k < 0 || k >= 0x7fff) throw Error(ErrorCode::IndexOutOfAlgebra, "parameter index");
  return Var(static_cast<std::uint16_t>(0x8000u | static_cast<unsigned>(k)));
}

std::string Var::name() const {
  if (is_entry()) return "x[" + std::to_string(row()) + "][" + std::to_string(col()) + "]";
  return "t[" + std::to_string(param_index()) + "]";
}

Monomial::Monomial(Var v, unsigned e) {
  if (e > 0) {
    factors_.emplace_back(v, e);
    degree_ = e;
  }
}

unsigned Monomial::exponent(Var v) const {
  auto it = std::lower_bound(factors_.begin(), factors_.end(), v,
                             [](const Factor& f, Var x) { return f.first < x; });
  return (it != factors_.end() && it->first == v) ? it->second : 0;
}

Monomial Monomial::shifted(Var v, int delta) const {
  Monomial out = *this;
  auto it = std::lower_bound(out.factors_.begin(), out.factors_.end(), v,
                             [](const Factor& f, Var x) { return f.first < x; });
  if (it != out.factors_.end() && it->first == v) {
    const int e = static_cast<int>(it->second) + delta;
    if (e < 0) throw Error(ErrorCode::ShapeError, "negative exponent");
    if (e == 0) {
      out.factors_.erase(it);
    } else {
      it->second = static_cast<unsigned>(e);
    }
  } else {
    if (delta < 0) throw Error(ErrorCode::ShapeError, "negative exponent");
    if (delta > 0) out.factors_.insert(it, Factor{v, static_cast<unsigned>(delta)});
  }
  out.degree_ = static_cast<unsigned>(static_cast<int>(out.degree_) + delta);
  return out;
}

Monomial Monomial::operator*(const Monomial& o) const {
  Monomial out;
  out.factors_.reserve(factors_.size() + o.factors_.size());
  auto a = factors_.begin();
  auto b = o.factors_.begin();
  while (a != factors_.end() || b != o.factors_.end()) {
    if (b == o.factors_.end() || (a != factors_.end() && a->first < b->first)) {
      out.factors_.push_back(*a++);
    } else if (a == factors_.end() || b->first < a->first) {
      out.factors_.push_back(*b++);
    } else {
      out.factors_.emplace_back(a->first, a->second + b->second);
      ++a;
      ++b;
    }
  }
  out.degree_ = degree_ + o.degree_;
  return out;
}

std::strong_ordering operator<=>(const Monomial& a, const Monomial& b) {
  if (a.degree_ != b.degree_) return a.degree_ <=> b.degree_;
  auto x = a.factors_.begin();
  auto y = b.factors_.begin();
  while (x != a.factors_.end() && y != b.factors_.end()) {
    if (x->first != y->first) {
      // The monomial containing the more significant variable is larger.
      return x->first < y->first ? std::strong_ordering::greater : std::strong_ordering::less;
    }
    if (x->second != y->second) return x->second <=> y->second;
    ++x;
    ++y;
  }
  if (x != a.factors_.end()) return std::strong_ordering::greater;
  if (y != b.factors_.end()) return std::strong_ordering::less;
  return std::strong_ordering::equal;
}

std::string Monomial::str() const {
  std::string out;
  for (const auto& [v, e] : factors_) {
    if (!out.empty()) out += '*';
    out += v.name();
    if (e != 1) out += "^" + std::to_string(e);
  }
  return out.empty() ? "1" : out;
}

Poly::Poly(const Rational& c) {
  if (!c.is_zero()) terms_.push_back(Term{Monomial{}, c});
}

Poly Poly::variable(Var v) { return monomial(Monomial(v), Rational(1)); }

Poly Poly::monomial(Monomial m, Rational c) {
  Poly p;
  if (!c.is_zero()) p.terms_.push_back(Term{std::move(m), std::move(c)});
  return p;
}

Rational Poly::coefficient(const Monomial& m) const {
  auto it = std::lower_bound(terms_.begin(), terms_.end(), m,
                             [](const Term& t, const Monomial& x) { return x < t.mono; });
  return (it != terms_.end() && it->mono == m) ? it->coef : Rational(0);
}

unsigned Poly::degree() const {
  unsigned d = 0;
  for (const auto& t : terms_) d = std::max(d, t.mono.degree());
  return d;
}

namespace {

std::vector<Poly::Term> merge(const std::vector<Poly::Term>& a, const std::vector<Poly::Term>& b,
                              bool subtract) {
  std::vector<Poly::Term> out;
  out.reserve(a.size() + b.size());
  auto x = a.begin();
  auto y = b.begin();
  while (x != a.end() || y != b.end()) {
    if (y == b.end() || (x != a.end() && y->mono < x->mono)) {
      out.push_back(*x++);
    } else if (x == a.end() || x->mono < y->mono) {
      out.push_back(subtract ? Poly::Term{y->mono, -y->coef} : *y);
      ++y;
    } else {
      Rational c = subtract ? x->coef - y->coef : x->coef + y->coef;
      if (!c.is_zero()) out.push_back(Poly::Term{x->mono, std::move(c)});
      ++x;
      ++y;
    }
  }
  return out;
}

}  // namespace

Poly& Poly::operator+=(const Poly& o) {
  terms_ = merge(terms_, o.terms_, false);
  return *this;
}

Poly& Poly::operator-=(const Poly& o) {
  terms_ = merge(terms_, o.terms_, true);
  return *this;
}

Poly& Poly::operator*=(const Rational& c) {
  if (c.is_zero()) {
    terms_.clear();
  } else {
    for (auto& t : terms_) t.coef *= c;
  }
  return *this;
}

Poly operator*(const Poly& a, const Poly& b) {
  PolyBuilder acc;
  for (const auto& s : a.terms_) {
    for (const auto& t : b.terms_) acc.add(s.mono * t.mono, s.coef * t.coef);
  }
  return std::move(acc).build();
}

Poly Poly::operator-() const {
  Poly p = *this;
  for (auto& t : p.terms_) t.coef = -t.coef;
  return p;
}

Poly Poly::pow(unsigned e) const {
  Poly result(1);
  Poly base = *this;
  while (e > 0) {
    if (e & 1u) result = result * base;
    e >>= 1u;
    if (e > 0) base = base * base;
  }
  return result;
}

Poly Poly::derivative(Var v) const {
  PolyBuilder acc;
  for (const auto& t : terms_) {
    const unsigned e = t.mono.exponent(v);
    if (e == 0) continue;
    acc.add(t.mono.shifted(v, -1), t.coef * Rational(static_cast<long>(e)));
  }
  return std::move(acc).build();
}

Rational Poly::evaluate(const std::function<Rational(Var)>& value) const {
  std::map<std::pair<std::uint16_t, unsigned>, Rational> powers;
  Rational total(0);
  for (const auto& t : terms_) {
    Rational term = t.coef;
    for (const auto& [v, e] : t.mono.factors()) {
      auto key = std::make_pair(v.id(), e);
      auto it = powers.find(key);
      if (it == powers.end()) {
        const Rational base = value(v);
        Rational p(1);
        for (unsigned i = 0; i < e; ++i) p *= base;
        it = powers.emplace(key, p).first;
      }
      term *= it->second;
    }
    total += term;
  }
  return total;
}

Poly Poly::substitute(const std::function<Poly(Var)>& image) const {
  std::map<std::uint16_t, Poly> cache;
  Poly total;
  for (const auto& t : terms_) {
    Poly term(t.coef);
    for (const auto& [v, e] : t.mono.factors()) {
      auto it = cache.find(v.id());
      if (it == cache.end()) it = cache.emplace(v.id(), image(v)).first;
      term = term * it->second.pow(e);
    }
    total += term;
  }
  return total;
}

Poly Poly::normalized() const {
  if (is_zero()) return *this;
  mpz_class g = 0;
  mpz_class l = 1;
  for (const auto& t : terms_) {
    mpz_gcd(g.get_mpz_t(), g.get_mpz_t(), t.coef.raw().get_num_mpz_t());
    mpz_lcm(l.get_mpz_t(), l.get_mpz_t(), t.coef.raw().get_den_mpz_t());
  }
  mpq_class scale(l, g);
  scale.canonicalize();
  if (leading().coef.sign() < 0) scale = -scale;
  return *this * Rational(scale);
}

Poly Poly::monic() const {
  if (is_zero()) return *this;
  return *this * leading().coef.inverse();
}

std::string Poly::str() const {
  if (terms_.empty()) return "0";
  std::string out;
  bool first = true;
  for (const auto& t : terms_) {
    Rational c = t.coef;
    if (first) {
      if (c.sign() < 0) {
        out += "-";
        c = -c;
      }
    } else {
      out += c.sign() < 0 ? " - " : " + ";
      if (c.sign() < 0) c = -c;
    }
    if (t.mono.is_one()) {
      out += c.str();
    } else {
      if (!c.is_one()) out += c.str() + "*";
      out += t.mono.str();
    }
    first = false;
  }
  return out;
}

namespace {

class PolyParser {
 public:
  explicit PolyParser(std::string_view s) : s_(s) {}

  Poly run() {
    PolyBuilder acc;
    skip();
    if (peek() == '0' && rest_is_blank(pos_ + 1)) return Poly();
    int sign = 1;
    if (peek() == '-') {
      sign = -1;
      ++pos_;
      skip();
    }
    while (true) {
      auto [m, c] = term();
      acc.add(m, c * Rational(sign));
      skip();
      if (pos_ >= s_.size()) break;
      const char op = s_[pos_++];
      if (op != '+' && op != '-') fail("expected + or -");
      sign = op == '-' ? -1 : 1;
      skip();
    }
    return std::move(acc).build();
  }

 private:
  std::pair<Monomial, Rational> term() {
    Rational c(1);
    Monomial m;
    if (std::isdigit(static_cast<unsigned char>(peek()))) {
      std::size_t start = pos_;
      while (pos_ < s_.size() && (std::isdigit(static_cast<unsigned char>(s_[pos_])) || s_[pos_] == '/')) {
        ++pos_;
      }
      c = Rational::parse(s_.substr(start, pos_ - start));
      if (peek() != '*') return {m, c};
      ++pos_;
    }
    while (true) {
      m = m * factor();
      if (peek() != '*') break;
      ++pos_;
    }
    return {m, c};
  }

  Monomial factor() {
    const char kind = peek();
    if (kind != 'x' && kind != 't') fail("expected variable");
    ++pos_;
    const int a = bracket();
    Var v = kind == 'x' ? Var::entry(a, bracket()) : Var::param(a);
    unsigned e = 1;
    if (peek() == '^') {
      ++pos_;
      e = static_cast<unsigned>(integer());
    }
    return Monomial(v, e);
  }

  int bracket() {
    if (peek() != '[') fail("expected [");
    ++pos_;
    const int v = integer();
    if (peek() != ']') fail("expected ]");
    ++pos_;
    return v;
  }

  int integer() {
    std::size_t start = pos_;
    if (peek() == '-') ++pos_;
    while (pos_ < s_.size() && std::isdigit(static_cast<unsigned char>(s_[pos_]))) ++pos_;
    if (start == pos_) fail("expected integer");
    return std::stoi(std::string(s_.substr(start, pos_ - start)));
  }

  char peek() const { return pos_ < s_.size() ? s_[pos_] : '\0'; }
  void skip() {
    while (pos_ < s_.size() && s_[pos_] == ' ') ++pos_;
  }
  bool rest_is_blank(std::size_t from) const {
    for (std::size_t i = from; i < s_.size(); ++i) {
      if (s_[i] != ' ') return false;
    }
    return true;
  }
  [[noreturn]] void fail(const std::string& msg) const {
    throw Error(ErrorCode::ParseError, msg + " at offset " + std::to_string(pos_));
  }

  std::string_view s_;
  std::size_t pos_ = 0;
};

}  // namespace

Poly Poly::parse(std::string_view text) { return PolyParser(text).run(); }

void PolyBuilder::add(const Monomial& m, const Rational& c) {
  if (c.is_zero()) return;
  auto [it, inserted] = acc_.try_emplace(m, c);
  if (!inserted) {
    it->second += c;
    if (it->second.is_zero()) acc_.erase(it);
  }
}

void PolyBuilder::add(const Poly& p, const Rational& scale) {
  if (scale.is_zero()) return;
  for (const auto& t : p.terms()) add(t.mono, t.coef * scale);
}

Poly PolyBuilder::build() && {
  Poly p;
  p.terms_.reserve(acc_.size());
  for (auto& [m, c] : acc_) p.terms_.push_back(Poly::Term{m, c});
  acc_.clear();
  return p;
}

std::optional<Rational> proportionality_factor(const Poly& p, const Poly& q) {
  if (q.is_zero()) return std::nullopt;
  if (p.is_zero()) return Rational(0);
  if (p.size() != q.size()) return std::nullopt;
  const Rational c = p.leading().coef / q.leading().coef;
  for (std::size_t i = 0; i < p.size(); ++i) {
    if (!(p.terms()[i].mono == q.terms()[i].mono)) return std::nullopt;
    if (p.terms()[i].coef != c * q.terms()[i].coef) return std::nullopt;
  }
  return c;
}

bool proportional(const Poly& p, const Poly& q) {
  if (p.is_zero() || q.is_zero()) return p.is_zero() && q.is_zero();
  return proportionality_factor(p, q).has_value();
}

namespace {

Poly determinant(std::span<const int> rows, std::span<const int> cols) {
  if (rows.empty()) return Poly(1);
  if (rows.size() == 1) return Poly::entry(rows[0], cols[0]);
  // Laplace expansion along the first column.
  PolyBuilder acc;
  std::vector<int> sub_rows(rows.begin(), rows.end());
  for (std::size_t r = 0; r < rows.size(); ++r) {
    std::vector<int> rest;
    rest.reserve(rows.size() - 1);
    for (std::size_t s = 0; s < rows.size(); ++s) {
      if (s != r) rest.push_back(rows[s]);
    }
    Poly sub = determinant(rest, cols.subspan(1));
    Poly term = Poly::entry(rows[r], cols[0]) * sub;
    acc.add(term, Rational(r % 2 == 0 ? 1 : -1));
  }
  return std::move(acc).build();
}

}  // namespace

Poly minor(std::span<const int> rows, std::span<const int> cols) {
  if (rows.size() != cols.size()) throw Error(ErrorCode::ShapeError, "minor: size mismatch");
  for (std::size_t a = 0; a < rows.size(); ++a) {
    for (std::size_t b = a + 1; b < rows.size(); ++b) {
      if (rows[a] == rows[b]) {
        throw Error(ErrorCode::RepeatedIndex, "minor: row " + std::to_string(rows[a]) + " repeated");
      }
    }
  }
  return determinant(rows, cols);
}

std::vector<int> symplectic_column_order(int n) {
  std::vector<int> cols;
  for (int i = -n; i <= n; ++i) {
    if (i != 0) cols.push_back(i);
  }
  return cols;
}

Poly minor(std::span<const int> rows, int n) {
  const auto order = symplectic_column_order(n);
  if (rows.size() > order.size()) throw Error(ErrorCode::ShapeError, "minor larger than matrix");
  return minor(rows, std::span<const int>(order).first(rows.size()));
}

}  // namespace gtsymp
