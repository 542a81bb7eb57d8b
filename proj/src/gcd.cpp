#include <algorithm>
#include <set>

#include "braidsplice/exactalg.hpp"

namespace bsp {

namespace {

std::vector<Var> common_vars(const std::vector<Var>& a, const std::vector<Var>& b) {
  std::vector<Var> r;
  std::set_intersection(a.begin(), a.end(), b.begin(), b.end(), std::back_inserter(r));
  return r;
}

// univariate gcd over Q, monic
Polynomial gcd_univariate(Polynomial a, Polynomial b, Var x) {
  if (a.degree(x) < b.degree(x)) std::swap(a, b);
  while (!b.is_zero()) {
    // a mod b
    auto cb = b.coefficients(x);
    unsigned db = static_cast<unsigned>(cb.size() - 1);
    Rational lb = cb.back().constant_value();
    while (!a.is_zero() && a.degree(x) >= db) {
      auto ca = a.coefficients(x);
      unsigned da = static_cast<unsigned>(ca.size() - 1);
      Rational f = ca.back().constant_value() / lb;
      a -= b.mul_monomial(Monomial::var(x, da - db), f);
    }
    std::swap(a, b);
  }
  return a.monic();
}

Polynomial poly_gcd_rec(const Polynomial& p, const Polynomial& q);

Polynomial content_in(const Polynomial& p, Var x) {
  auto c = p.coefficients(x);
  Polynomial g;
  // small coefficients first: the gcd reaches 1 sooner
  std::sort(c.begin(), c.end(), [](const Polynomial& a, const Polynomial& b) { return a.size() < b.size(); });
  for (auto& ci : c) {
    if (ci.is_zero()) continue;
    g = g.is_zero() ? ci.monic() : poly_gcd_rec(g, ci);
    if (g.is_constant()) return Polynomial(1);
  }
  return g;
}

// Deterministic evaluation points for the coprimality shortcut.
Rational eval_point(Var v, unsigned attempt) {
  long base = static_cast<long>((var_index(v) * 7 + (v >> 16) * 13 + attempt * 29) % 97) + 2;
  return Rational(attempt % 2 ? -base : base);
}

// True when every common variable has a degree-0 gcd after specializing the
// others. This certifies gcd(p, q) = 1; false means "unknown".
bool certify_coprime(const Polynomial& p, const Polynomial& q, const std::vector<Var>& common) {
  auto vp = p.variables(), vq = q.variables();
  std::set<Var> all(vp.begin(), vp.end());
  all.insert(vq.begin(), vq.end());
  for (Var x : common) {
    auto lp = p.coefficients(x).back();
    auto lq = q.coefficients(x).back();
    bool ok = false;
    for (unsigned attempt = 0; attempt < 4 && !ok; ++attempt) {
      Assignment a;
      for (Var v : all)
        if (v != x) a[v] = eval_point(v, attempt);
      if (lp.evaluate(a).is_zero() || lq.evaluate(a).is_zero()) continue;
      Polynomial pe = p.partial_evaluate(a), qe = q.partial_evaluate(a);
      if (gcd_univariate(pe, qe, x).degree(x) > 0) return false;
      ok = true;
    }
    if (!ok) return false;
  }
  return true;
}

Polynomial prem(const Polynomial& a, const Polynomial& b, Var x) {
  auto cb = b.coefficients(x);
  unsigned db = static_cast<unsigned>(cb.size() - 1);
  const Polynomial& lb = cb.back();
  Polynomial r = a;
  while (!r.is_zero()) {
    unsigned dr = r.degree(x);
    if (dr < db) break;
    Polynomial lr = r.coefficients(x).back();
    r = r * lb - (b * lr).mul_monomial(Monomial::var(x, dr - db), 1);
  }
  return r;
}

Polynomial primitive_part(const Polynomial& p, Var x) {
  Polynomial c = content_in(p, x);
  return c.is_constant() ? p.monic() : exact_quotient(p, c).monic();
}

// p, q nonzero, no common monomial factor guaranteed by the caller
Polynomial poly_gcd_rec(const Polynomial& p0, const Polynomial& q0) {
  if (p0.is_zero()) return q0.monic();
  if (q0.is_zero()) return p0.monic();
  if (p0.is_constant() || q0.is_constant()) return Polynomial(1);

  Monomial mp = p0.monomial_content(), mq = q0.monomial_content();
  Monomial mg = Monomial::gcd(mp, mq);
  Polynomial p = mp.is_one() ? p0 : p0.div_monomial(mp);
  Polynomial q = mq.is_one() ? q0 : q0.div_monomial(mq);
  Polynomial mono = Polynomial::monomial(mg);

  // strip variables that occur in only one argument
  for (;;) {
    if (p.is_constant() || q.is_constant()) return mono;
    auto vp = p.variables(), vq = q.variables();
    bool changed = false;
    for (Var x : vp)
      if (!std::binary_search(vq.begin(), vq.end(), x)) {
        p = content_in(p, x);
        changed = true;
        break;
      }
    if (changed) continue;
    for (Var x : vq)
      if (!std::binary_search(vp.begin(), vp.end(), x)) {
        q = content_in(q, x);
        changed = true;
        break;
      }
    if (!changed) break;
  }
  if (p.is_constant() || q.is_constant()) return mono;
  if (p.monic() == q.monic()) return (mono * p).monic();

  auto vars = p.variables();
  if (vars.size() == 1) return (mono * gcd_univariate(p, q, vars[0])).monic();

  if (p.size() <= q.size()) {
    if (auto d = divide_exact(q, p)) return (mono * p).monic();
  } else {
    if (auto d = divide_exact(p, q)) return (mono * q).monic();
  }
  if (certify_coprime(p, q, common_vars(vars, q.variables()))) return mono;

  // main variable: smallest degree
  Var x = vars[0];
  unsigned best = ~0u;
  for (Var v : vars) {
    unsigned d = std::max(p.degree(v), q.degree(v));
    if (d < best) best = d, x = v;
  }
  Polynomial cp = content_in(p, x), cq = content_in(q, x);
  Polynomial c = poly_gcd_rec(cp, cq);
  Polynomial a = cp.is_constant() ? p : exact_quotient(p, cp);
  Polynomial b = cq.is_constant() ? q : exact_quotient(q, cq);
  if (a.degree(x) < b.degree(x)) std::swap(a, b);
  Polynomial g;
  for (;;) {
    Polynomial r = prem(a, b, x);
    if (r.is_zero()) {
      g = primitive_part(b, x);
      break;
    }
    if (r.degree(x) == 0) {
      g = Polynomial(1);
      break;
    }
    a = std::move(b);
    b = primitive_part(r, x);
  }
  return (mono * c * g).monic();
}

}  // namespace

Polynomial poly_gcd(const Polynomial& p, const Polynomial& q) { return poly_gcd_rec(p, q); }

// ---- RationalFunction ----

RationalFunction rf_normalize(const Polynomial& num, const Polynomial& den) {
  return RationalFunction(num, den);
}

RationalFunction::RationalFunction(Polynomial num, Polynomial den) {
  if (den.is_zero()) throw ZeroDenominator();
  if (num.is_zero()) {
    num_ = Polynomial();
    den_ = Polynomial(1);
    return;
  }
  if (!den.is_constant()) {
    Polynomial g = poly_gcd(num, den);
    if (!g.is_constant()) {
      num = exact_quotient(num, g);
      den = exact_quotient(den, g);
    }
  }
  Rational lc = den.leading_coefficient();
  num_ = num * lc.inverse();
  den_ = den * lc.inverse();
}

Rational RationalFunction::constant_value() const {
  return num_.constant_value() / den_.constant_value();
}

std::vector<Var> RationalFunction::variables() const {
  auto a = num_.variables(), b = den_.variables();
  std::vector<Var> r;
  std::set_union(a.begin(), a.end(), b.begin(), b.end(), std::back_inserter(r));
  return r;
}

Rational RationalFunction::evaluate(const Assignment& a) const {
  Rational d = den_.evaluate(a);
  if (d.is_zero()) throw PoleAtPoint("denominator " + den_.str() + " vanishes");
  return num_.evaluate(a) / d;
}

RationalFunction RationalFunction::inverse() const {
  if (num_.is_zero()) throw ZeroDenominator();
  RationalFunction r;
  Rational lc = num_.leading_coefficient().inverse();
  r.num_ = den_ * lc;
  r.den_ = num_ * lc;
  return r;
}

RationalFunction operator-(const RationalFunction& a) {
  RationalFunction r = a;
  r.num_ = -r.num_;
  return r;
}

RationalFunction& RationalFunction::operator+=(const RationalFunction& o) {
  if (o.num_.is_zero()) return *this;
  if (num_.is_zero()) return *this = o;
  if (den_ == o.den_) {
    if (den_.is_constant()) {
      num_ += o.num_;
      return *this;
    }
    return *this = RationalFunction(num_ + o.num_, den_);
  }
  if (den_.is_constant() || o.den_.is_constant()) {
    Polynomial n = num_ * o.den_ + o.num_ * den_;
    return *this = RationalFunction(std::move(n), den_ * o.den_);
  }
  Polynomial g = poly_gcd(den_, o.den_);
  Polynomial d1 = exact_quotient(den_, g), d2 = exact_quotient(o.den_, g);
  Polynomial n = num_ * d2 + o.num_ * d1;
  if (n.is_zero()) return *this = RationalFunction();
  // only factors of g can cancel
  Polynomial h = g.is_constant() ? Polynomial(1) : poly_gcd(n, g);
  Polynomial den = den_ * d2;
  if (!h.is_constant()) {
    n = exact_quotient(n, h);
    den = exact_quotient(den, h);
  }
  Rational lc = den.leading_coefficient().inverse();
  num_ = n * lc;
  den_ = den * lc;
  return *this;
}

RationalFunction& RationalFunction::operator-=(const RationalFunction& o) { return *this += -o; }

RationalFunction& RationalFunction::operator*=(const RationalFunction& o) {
  if (num_.is_zero() || o.num_.is_zero()) return *this = RationalFunction();
  if (den_.is_constant() && o.den_.is_constant()) {
    num_ = num_ * o.num_ * (den_.constant_value() * o.den_.constant_value()).inverse();
    den_ = Polynomial(1);
    return *this;
  }
  Polynomial g1 = o.den_.is_constant() ? Polynomial(1) : poly_gcd(num_, o.den_);
  Polynomial g2 = den_.is_constant() ? Polynomial(1) : poly_gcd(o.num_, den_);
  Polynomial a = g1.is_constant() ? num_ : exact_quotient(num_, g1);
  Polynomial b = g2.is_constant() ? o.num_ : exact_quotient(o.num_, g2);
  Polynomial c = g2.is_constant() ? den_ : exact_quotient(den_, g2);
  Polynomial d = g1.is_constant() ? o.den_ : exact_quotient(o.den_, g1);
  Polynomial den = c * d;
  Rational lc = den.leading_coefficient().inverse();
  num_ = a * b * lc;
  den_ = den * lc;
  return *this;
}

RationalFunction& RationalFunction::operator/=(const RationalFunction& o) { return *this *= o.inverse(); }

std::string RationalFunction::str() const {
  if (den_.is_constant()) {
    Rational d = den_.constant_value();
    if (d.is_one()) return num_.str();
    return (num_ * d.inverse()).str();
  }
  std::string n = num_.str(), d = den_.str();
  if (num_.size() > 1) n = "(" + n + ")";
  if (den_.size() > 1 || !den_.leading().c.is_one()) d = "(" + d + ")";
  return n + "/" + d;
}

// ---- LaurentMonomial ----

LaurentMonomial& LaurentMonomial::operator*=(const LaurentMonomial& o) {
  for (auto& [v, e] : o.exps) {
    int& x = exps[v];
    x += e;
    if (x == 0) exps.erase(v);
  }
  return *this;
}

LaurentMonomial LaurentMonomial::inverse() const {
  LaurentMonomial r;
  for (auto& [v, e] : exps) r.exps[v] = -e;
  return r;
}

RationalFunction LaurentMonomial::to_rf() const {
  return substitute([](Var v) { return RationalFunction::var(v); });
}

RationalFunction LaurentMonomial::substitute(const std::function<RationalFunction(Var)>& f) const {
  RationalFunction num(1), den(1);
  for (auto& [v, e] : exps) {
    RationalFunction x = f(v);
    for (int i = 0; i < std::abs(e); ++i) (e > 0 ? num : den) *= x;
  }
  return num / den;
}

std::string LaurentMonomial::str() const {
  if (exps.empty()) return "1";
  std::string s;
  for (auto& [v, e] : exps) {
    if (!s.empty()) s += '*';
    s += var_name(v);
    if (e != 1) s += "^" + std::to_string(e);
  }
  return s;
}

}  // namespace bsp
