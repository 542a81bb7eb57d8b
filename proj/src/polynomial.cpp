#include <algorithm>
#include <cctype>
#include <set>

#include "braidsplice/exactalg.hpp"

namespace bsp {

// ---- Monomial ----

Monomial::Monomial(std::vector<Factor> f) : f_(std::move(f)) {
  std::sort(f_.begin(), f_.end());
  std::vector<Factor> out;
  for (auto& [v, e] : f_) {
    if (!out.empty() && out.back().first == v)
      out.back().second += e;
    else
      out.push_back({v, e});
  }
  std::erase_if(out, [](const Factor& x) { return x.second == 0; });
  f_ = std::move(out);
}

Monomial Monomial::var(Var v, unsigned e) {
  Monomial m;
  if (e) m.f_.push_back({v, e});
  return m;
}

unsigned Monomial::degree() const {
  unsigned d = 0;
  for (auto& x : f_) d += x.second;
  return d;
}

unsigned Monomial::exponent(Var v) const {
  for (auto& x : f_)
    if (x.first == v) return x.second;
  return 0;
}

bool Monomial::divides(const Monomial& o) const {
  std::size_t j = 0;
  for (auto& [v, e] : f_) {
    while (j < o.f_.size() && o.f_[j].first < v) ++j;
    if (j == o.f_.size() || o.f_[j].first != v || o.f_[j].second < e) return false;
  }
  return true;
}

Monomial Monomial::without(Var v) const {
  Monomial m;
  for (auto& x : f_)
    if (x.first != v) m.f_.push_back(x);
  return m;
}

Monomial operator*(const Monomial& a, const Monomial& b) {
  Monomial r;
  r.f_.reserve(a.f_.size() + b.f_.size());
  std::size_t i = 0, j = 0;
  while (i < a.f_.size() || j < b.f_.size()) {
    if (j == b.f_.size() || (i < a.f_.size() && a.f_[i].first < b.f_[j].first)) {
      r.f_.push_back(a.f_[i++]);
    } else if (i == a.f_.size() || b.f_[j].first < a.f_[i].first) {
      r.f_.push_back(b.f_[j++]);
    } else {
      r.f_.push_back({a.f_[i].first, a.f_[i].second + b.f_[j].second});
      ++i, ++j;
    }
  }
  return r;
}

Monomial operator/(const Monomial& a, const Monomial& b) {
  Monomial r;
  std::size_t j = 0;
  for (auto& [v, e] : a.f_) {
    unsigned d = 0;
    if (j < b.f_.size() && b.f_[j].first == v) d = b.f_[j++].second;
    if (d > e) throw NotExact("monomial division");
    if (e > d) r.f_.push_back({v, e - d});
  }
  if (j != b.f_.size()) throw NotExact("monomial division");
  return r;
}

Monomial Monomial::gcd(const Monomial& a, const Monomial& b) {
  Monomial r;
  std::size_t j = 0;
  for (auto& [v, e] : a.f_) {
    while (j < b.f_.size() && b.f_[j].first < v) ++j;
    if (j < b.f_.size() && b.f_[j].first == v) r.f_.push_back({v, std::min(e, b.f_[j].second)});
  }
  return r;
}

std::string Monomial::str() const {
  std::string s;
  for (auto& [v, e] : f_) {
    if (!s.empty()) s += '*';
    s += var_name(v);
    if (e != 1) s += '^' + std::to_string(e);
  }
  return s.empty() ? "1" : s;
}

int grlex_compare(const Monomial& a, const Monomial& b) {
  unsigned da = a.degree(), db = b.degree();
  if (da != db) return da < db ? -1 : 1;
  auto& fa = a.factors();
  auto& fb = b.factors();
  auto ia = fa.rbegin(), ib = fb.rbegin();
  for (; ia != fa.rend() && ib != fb.rend(); ++ia, ++ib) {
    if (ia->first != ib->first) return ia->first > ib->first ? 1 : -1;
    if (ia->second != ib->second) return ia->second > ib->second ? 1 : -1;
  }
  if (ia != fa.rend()) return 1;
  if (ib != fb.rend()) return -1;
  return 0;
}

// ---- Polynomial ----

Polynomial::Polynomial(const Rational& c) {
  if (!c.is_zero()) t_.push_back({Monomial(), c});
}

Polynomial Polynomial::var(Var v) { return monomial(Monomial::var(v)); }

Polynomial Polynomial::monomial(const Monomial& m, const Rational& c) {
  Polynomial p;
  if (!c.is_zero()) p.t_.push_back({m, c});
  return p;
}

Polynomial Polynomial::from_terms(std::vector<Term> t) {
  std::sort(t.begin(), t.end(),
            [](const Term& a, const Term& b) { return grlex_compare(a.m, b.m) > 0; });
  Polynomial p;
  for (auto& x : t) {
    if (!p.t_.empty() && p.t_.back().m == x.m)
      p.t_.back().c += x.c;
    else
      p.t_.push_back(std::move(x));
    if (p.t_.back().c.is_zero()) p.t_.pop_back();
  }
  return p;
}

Rational Polynomial::constant_value() const {
  if (!is_constant()) throw NotExact("polynomial is not constant");
  return t_.empty() ? Rational(0) : t_[0].c;
}

Rational Polynomial::constant_term() const {
  if (!t_.empty() && t_.back().m.is_one()) return t_.back().c;
  return 0;
}

unsigned Polynomial::total_degree() const { return t_.empty() ? 0 : t_.front().m.degree(); }

unsigned Polynomial::degree(Var v) const {
  unsigned d = 0;
  for (auto& x : t_) d = std::max(d, x.m.exponent(v));
  return d;
}

std::vector<Var> Polynomial::variables() const {
  std::set<Var> s;
  for (auto& x : t_)
    for (auto& f : x.m.factors()) s.insert(f.first);
  return {s.begin(), s.end()};
}

Monomial Polynomial::monomial_content() const {
  if (t_.empty()) return Monomial();
  Monomial g = t_[0].m;
  for (std::size_t i = 1; i < t_.size() && !g.is_one(); ++i) g = Monomial::gcd(g, t_[i].m);
  return g;
}

std::vector<Polynomial> Polynomial::coefficients(Var v) const {
  std::vector<Polynomial> c(degree(v) + 1);
  for (auto& x : t_) {
    unsigned e = x.m.exponent(v);
    c[e].t_.push_back({x.m.without(v), x.c});
  }
  return c;
}

Polynomial Polynomial::from_coefficients(Var v, const std::vector<Polynomial>& c) {
  Polynomial p;
  for (std::size_t e = 0; e < c.size(); ++e)
    if (!c[e].is_zero()) p += c[e].mul_monomial(Monomial::var(v, static_cast<unsigned>(e)), 1);
  return p;
}

Polynomial Polynomial::monic() const {
  if (t_.empty() || t_[0].c.is_one()) return *this;
  return *this * t_[0].c.inverse();
}

Polynomial Polynomial::derivative(Var v) const {
  std::vector<Term> out;
  for (auto& x : t_) {
    unsigned e = x.m.exponent(v);
    if (e == 0) continue;
    out.push_back({x.m / Monomial::var(v), x.c * Rational(static_cast<long>(e))});
  }
  return from_terms(std::move(out));
}

namespace {
Rational power(const Rational& a, unsigned e) {
  mpq_class r;
  mpz_pow_ui(r.get_num_mpz_t(), a.raw().get_num_mpz_t(), e);
  mpz_pow_ui(r.get_den_mpz_t(), a.raw().get_den_mpz_t(), e);
  return Rational(r);
}
}  // namespace

Rational Polynomial::evaluate(const Assignment& a) const {
  Rational s = 0;
  for (auto& x : t_) {
    Rational v = x.c;
    for (auto& [var, e] : x.m.factors()) {
      auto it = a.find(var);
      if (it == a.end()) throw MissingVariable("missing value for " + var_name(var));
      v *= power(it->second, e);
    }
    s += v;
  }
  return s;
}

Polynomial Polynomial::partial_evaluate(const Assignment& a) const {
  std::vector<Term> out;
  for (auto& x : t_) {
    Rational c = x.c;
    std::vector<Monomial::Factor> rest;
    for (auto& [var, e] : x.m.factors()) {
      auto it = a.find(var);
      if (it == a.end())
        rest.push_back({var, e});
      else
        c *= power(it->second, e);
    }
    if (!c.is_zero()) out.push_back({Monomial(std::move(rest)), c});
  }
  return from_terms(std::move(out));
}

namespace {
std::vector<Term> merge_add(const std::vector<Term>& a, const std::vector<Term>& b, bool subtract) {
  std::vector<Term> r;
  r.reserve(a.size() + b.size());
  std::size_t i = 0, j = 0;
  while (i < a.size() || j < b.size()) {
    int c;
    if (i == a.size())
      c = -1;
    else if (j == b.size())
      c = 1;
    else
      c = grlex_compare(a[i].m, b[j].m);
    if (c > 0) {
      r.push_back(a[i++]);
    } else if (c < 0) {
      r.push_back(b[j++]);
      if (subtract) r.back().c = -r.back().c;
    } else {
      Rational s = subtract ? a[i].c - b[j].c : a[i].c + b[j].c;
      if (!s.is_zero()) r.push_back({a[i].m, s});
      ++i, ++j;
    }
  }
  return r;
}
}  // namespace

Polynomial& Polynomial::operator+=(const Polynomial& o) {
  if (o.t_.empty()) return *this;
  if (t_.empty()) return *this = o;
  t_ = merge_add(t_, o.t_, false);
  return *this;
}

Polynomial& Polynomial::operator-=(const Polynomial& o) {
  if (o.t_.empty()) return *this;
  t_ = merge_add(t_, o.t_, true);
  return *this;
}

Polynomial& Polynomial::operator*=(const Polynomial& o) { return *this = *this * o; }

Polynomial& Polynomial::operator*=(const Rational& c) {
  if (c.is_zero()) {
    t_.clear();
    return *this;
  }
  for (auto& x : t_) x.c *= c;
  return *this;
}

Polynomial operator*(const Polynomial& a, const Polynomial& b) {
  if (a.t_.empty() || b.t_.empty()) return {};
  if (a.t_.size() == 1) return b.mul_monomial(a.t_[0].m, a.t_[0].c);
  if (b.t_.size() == 1) return a.mul_monomial(b.t_[0].m, b.t_[0].c);
  const Polynomial& s = a.t_.size() <= b.t_.size() ? a : b;
  const Polynomial& l = a.t_.size() <= b.t_.size() ? b : a;
  if (s.t_.size() <= 8) {
    Polynomial r;
    for (auto& x : s.t_) r += l.mul_monomial(x.m, x.c);
    return r;
  }
  std::vector<Term> out;
  out.reserve(a.t_.size() * b.t_.size());
  for (auto& x : a.t_)
    for (auto& y : b.t_) out.push_back({x.m * y.m, x.c * y.c});
  return Polynomial::from_terms(std::move(out));
}

Polynomial operator-(const Polynomial& a) {
  Polynomial r = a;
  for (auto& x : r.t_) x.c = -x.c;
  return r;
}

bool operator==(const Polynomial& a, const Polynomial& b) {
  if (a.t_.size() != b.t_.size()) return false;
  for (std::size_t i = 0; i < a.t_.size(); ++i)
    if (a.t_[i].c != b.t_[i].c || a.t_[i].m != b.t_[i].m) return false;
  return true;
}

Polynomial Polynomial::mul_monomial(const Monomial& m, const Rational& c) const {
  Polynomial r;
  if (c.is_zero()) return r;
  r.t_.reserve(t_.size());
  for (auto& x : t_) r.t_.push_back({x.m * m, x.c * c});
  return r;
}

Polynomial Polynomial::div_monomial(const Monomial& m) const {
  Polynomial r;
  r.t_.reserve(t_.size());
  for (auto& x : t_) r.t_.push_back({x.m / m, x.c});
  return r;
}

Polynomial Polynomial::pow(unsigned e) const {
  Polynomial r(1), b = *this;
  while (e) {
    if (e & 1) r *= b;
    e >>= 1;
    if (e) b = b * b;
  }
  return r;
}

std::string Polynomial::str() const {
  if (t_.empty()) return "0";
  std::string s;
  bool first = true;
  for (auto& x : t_) {
    Rational c = x.c;
    if (!first) {
      s += c.sign() < 0 ? " - " : " + ";
      if (c.sign() < 0) c = -c;
    }
    if (x.m.is_one()) {
      s += c.str();
    } else {
      if (c == Rational(-1))
        s += "-";
      else if (!c.is_one())
        s += c.str() + "*";
      s += x.m.str();
    }
    first = false;
  }
  return s;
}

// ---- division ----

std::optional<Polynomial> divide_exact(const Polynomial& p, const Polynomial& q) {
  if (q.is_zero()) throw ZeroDenominator();
  if (p.is_zero()) return Polynomial();
  if (q.is_constant()) return p * q.constant_value().inverse();
  if (q.is_monomial()) {
    const Term& lt = q.leading();
    Rational ci = lt.c.inverse();
    std::vector<Term> out;
    out.reserve(p.size());
    for (auto& x : p.terms()) {
      if (!lt.m.divides(x.m)) return std::nullopt;
      out.push_back({x.m / lt.m, x.c * ci});
    }
    // dividing by a monomial keeps the order
    Polynomial r;
    r = Polynomial::from_terms(std::move(out));
    return r;
  }
  const Term& lq = q.leading();
  if (p.total_degree() < q.total_degree()) return std::nullopt;
  Rational ci = lq.c.inverse();
  Polynomial r = p;
  std::vector<Term> quot;
  while (!r.is_zero()) {
    const Term& lr = r.leading();
    if (!lq.m.divides(lr.m)) return std::nullopt;
    Monomial m = lr.m / lq.m;
    Rational c = lr.c * ci;
    r -= q.mul_monomial(m, c);
    quot.push_back({std::move(m), c});
  }
  return Polynomial::from_terms(std::move(quot));
}

Polynomial exact_quotient(const Polynomial& p, const Polynomial& q) {
  auto r = divide_exact(p, q);
  if (!r) throw NotExact("(" + p.str() + ") / (" + q.str() + ") is not exact");
  return *r;
}

// ---- parsing ----

namespace {

class Parser {
 public:
  explicit Parser(std::string_view s) : s_(s) {}

  RationalFunction parse() {
    RationalFunction r = expr();
    skip();
    if (pos_ != s_.size()) fail("unexpected character");
    return r;
  }

 private:
  std::string_view s_;
  std::size_t pos_ = 0;

  [[noreturn]] void fail(const std::string& what) {
    throw ParseError(what + " at offset " + std::to_string(pos_) + " in '" + std::string(s_) + "'");
  }
  void skip() {
    while (pos_ < s_.size() && std::isspace(static_cast<unsigned char>(s_[pos_]))) ++pos_;
  }
  bool accept(char c) {
    skip();
    if (pos_ < s_.size() && s_[pos_] == c) {
      ++pos_;
      return true;
    }
    return false;
  }

  RationalFunction expr() {
    RationalFunction r;
    bool neg = false;
    if (accept('-'))
      neg = true;
    else
      accept('+');
    r = term();
    if (neg) r = -r;
    for (;;) {
      if (accept('+'))
        r += term();
      else if (accept('-'))
        r -= term();
      else
        return r;
    }
  }

  RationalFunction term() {
    RationalFunction r = factor();
    for (;;) {
      if (accept('*')) {
        r *= factor();
      } else if (accept('/')) {
        RationalFunction d = factor();
        if (d.is_zero()) fail("division by zero");
        r /= d;
      } else {
        return r;
      }
    }
  }

  RationalFunction factor() {
    RationalFunction b = base();
    if (accept('^')) {
      bool neg = accept('-');
      skip();
      std::size_t st = pos_;
      while (pos_ < s_.size() && std::isdigit(static_cast<unsigned char>(s_[pos_]))) ++pos_;
      if (st == pos_) fail("expected exponent");
      unsigned e = static_cast<unsigned>(std::stoul(std::string(s_.substr(st, pos_ - st))));
      RationalFunction r(1);
      for (unsigned i = 0; i < e; ++i) r *= b;
      if (neg) {
        if (r.is_zero()) fail("division by zero");
        r = r.inverse();
      }
      return r;
    }
    return b;
  }

  RationalFunction base() {
    skip();
    if (pos_ >= s_.size()) fail("unexpected end");
    char c = s_[pos_];
    if (c == '(') {
      ++pos_;
      RationalFunction r = expr();
      if (!accept(')')) fail("expected ')'");
      return r;
    }
    if (c == '-') {
      ++pos_;
      return -factor();
    }
    if (std::isdigit(static_cast<unsigned char>(c))) {
      std::size_t st = pos_;
      while (pos_ < s_.size() && std::isdigit(static_cast<unsigned char>(s_[pos_]))) ++pos_;
      return RationalFunction(Rational(mpz_class(std::string(s_.substr(st, pos_ - st)))));
    }
    if (std::islower(static_cast<unsigned char>(c))) {
      std::size_t st = pos_++;
      while (pos_ < s_.size() && std::isdigit(static_cast<unsigned char>(s_[pos_]))) ++pos_;
      return RationalFunction::var(parse_var(s_.substr(st, pos_ - st)));
    }
    fail("unexpected character");
  }
};

}  // namespace

RationalFunction RationalFunction::parse(std::string_view s) { return Parser(s).parse(); }

Polynomial Polynomial::parse(std::string_view s) {
  RationalFunction r = RationalFunction::parse(s);
  if (!r.is_polynomial()) throw ParseError("not a polynomial: '" + std::string(s) + "'");
  return r.num() * r.den().constant_value().inverse();
}

}  // namespace bsp
