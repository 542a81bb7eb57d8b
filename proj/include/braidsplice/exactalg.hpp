#pragma once

#include <cstdint>
#include <functional>
#include <map>
#include <optional>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

#include <gmpxx.h>

#include "braidsplice/errors.hpp"

namespace bsp {

class Rational {
 public:
  Rational() = default;
  Rational(long n) : v_(n) {}  // NOLINT implicit on purpose
  Rational(long n, long d);
  explicit Rational(const mpq_class& q) : v_(q) { v_.canonicalize(); }
  explicit Rational(const mpz_class& z) : v_(z) {}

  static Rational parse(std::string_view s);

  const mpq_class& raw() const { return v_; }
  mpz_class num() const { return v_.get_num(); }
  mpz_class den() const { return v_.get_den(); }
  bool is_zero() const { return sgn(v_) == 0; }
  bool is_one() const { return v_ == 1; }
  bool is_integer() const { return v_.get_den() == 1; }
  int sign() const { return sgn(v_); }
  Rational inverse() const;
  std::string str() const;

  Rational& operator+=(const Rational& o) { v_ += o.v_; return *this; }
  Rational& operator-=(const Rational& o) { v_ -= o.v_; return *this; }
  Rational& operator*=(const Rational& o) { v_ *= o.v_; return *this; }
  Rational& operator/=(const Rational& o);

  friend Rational operator+(Rational a, const Rational& b) { return a += b; }
  friend Rational operator-(Rational a, const Rational& b) { return a -= b; }
  friend Rational operator*(Rational a, const Rational& b) { return a *= b; }
  friend Rational operator/(Rational a, const Rational& b) { return a /= b; }
  friend Rational operator-(const Rational& a) { return Rational(mpq_class(-a.v_)); }
  friend bool operator==(const Rational& a, const Rational& b) { return a.v_ == b.v_; }
  friend bool operator!=(const Rational& a, const Rational& b) { return a.v_ != b.v_; }
  friend bool operator<(const Rational& a, const Rational& b) { return a.v_ < b.v_; }

 private:
  mpq_class v_;
};

// A variable is a family letter plus an index: z1, z2, y3, p1, u4, ...
// Ids sort by family first, then by index.
using Var = std::uint32_t;

Var make_var(char family, unsigned index);
inline char var_family(Var v) { return static_cast<char>('a' + (v >> 16)); }
inline unsigned var_index(Var v) { return v & 0xffffu; }
std::string var_name(Var v);
Var parse_var(std::string_view s);
std::vector<Var> var_range(char family, unsigned first, unsigned count);

class Monomial {
 public:
  using Factor = std::pair<Var, unsigned>;

  Monomial() = default;
  explicit Monomial(std::vector<Factor> f);
  static Monomial var(Var v, unsigned e = 1);

  const std::vector<Factor>& factors() const { return f_; }
  bool is_one() const { return f_.empty(); }
  unsigned degree() const;
  unsigned exponent(Var v) const;
  bool divides(const Monomial& o) const;
  Monomial without(Var v) const;

  friend Monomial operator*(const Monomial& a, const Monomial& b);
  // requires b | a
  friend Monomial operator/(const Monomial& a, const Monomial& b);
  friend bool operator==(const Monomial& a, const Monomial& b) { return a.f_ == b.f_; }
  friend bool operator!=(const Monomial& a, const Monomial& b) { return a.f_ != b.f_; }
  static Monomial gcd(const Monomial& a, const Monomial& b);

  std::string str() const;

 private:
  std::vector<Factor> f_;  // sorted by variable, exponents positive
};

// Graded lexicographic order: total degree first, then the exponent of the
// largest variable, then the next largest, and so on (z1 < z2 < ...).
int grlex_compare(const Monomial& a, const Monomial& b);

struct Term {
  Monomial m;
  Rational c;
};

using Assignment = std::map<Var, Rational>;

class Polynomial {
 public:
  Polynomial() = default;
  Polynomial(long c) : Polynomial(Rational(c)) {}  // NOLINT
  Polynomial(const Rational& c);                    // NOLINT
  static Polynomial var(Var v);
  static Polynomial monomial(const Monomial& m, const Rational& c = 1);
  static Polynomial parse(std::string_view s);
  // terms in any order; equal monomials are merged
  static Polynomial from_terms(std::vector<Term> t);

  // descending grlex order, no zero coefficients
  const std::vector<Term>& terms() const { return t_; }
  std::size_t size() const { return t_.size(); }
  bool is_zero() const { return t_.empty(); }
  bool is_constant() const { return t_.empty() || (t_.size() == 1 && t_[0].m.is_one()); }
  bool is_monomial() const { return t_.size() == 1; }
  Rational constant_value() const;  // requires is_constant
  Rational constant_term() const;
  const Term& leading() const { return t_.front(); }
  Rational leading_coefficient() const { return t_.empty() ? Rational(0) : t_.front().c; }

  unsigned total_degree() const;
  unsigned degree(Var v) const;
  std::vector<Var> variables() const;
  Monomial monomial_content() const;

  // coefficients with respect to v, index = exponent of v
  std::vector<Polynomial> coefficients(Var v) const;
  static Polynomial from_coefficients(Var v, const std::vector<Polynomial>& c);

  Polynomial monic() const;
  Polynomial derivative(Var v) const;
  Rational evaluate(const Assignment& a) const;
  Polynomial partial_evaluate(const Assignment& a) const;

  Polynomial& operator+=(const Polynomial& o);
  Polynomial& operator-=(const Polynomial& o);
  Polynomial& operator*=(const Polynomial& o);
  Polynomial& operator*=(const Rational& c);
  friend Polynomial operator+(Polynomial a, const Polynomial& b) { return a += b; }
  friend Polynomial operator-(Polynomial a, const Polynomial& b) { return a -= b; }
  friend Polynomial operator*(const Polynomial& a, const Polynomial& b);
  friend Polynomial operator*(Polynomial a, const Rational& c) { return a *= c; }
  friend Polynomial operator-(const Polynomial& a);
  friend bool operator==(const Polynomial& a, const Polynomial& b);
  friend bool operator!=(const Polynomial& a, const Polynomial& b) { return !(a == b); }
  Polynomial mul_monomial(const Monomial& m, const Rational& c) const;
  Polynomial div_monomial(const Monomial& m) const;  // requires divisibility
  Polynomial pow(unsigned e) const;

  std::string str() const;

 private:
  std::vector<Term> t_;
};

std::optional<Polynomial> divide_exact(const Polynomial& p, const Polynomial& q);
// throws NotExact when q does not divide p
Polynomial exact_quotient(const Polynomial& p, const Polynomial& q);

Polynomial poly_gcd(const Polynomial& p, const Polynomial& q);

class RationalFunction {
 public:
  RationalFunction() : den_(1) {}
  RationalFunction(long c) : num_(c), den_(1) {}                 // NOLINT
  RationalFunction(const Rational& c) : num_(c), den_(1) {}      // NOLINT
  RationalFunction(const Polynomial& p) : num_(p), den_(1) {}    // NOLINT
  RationalFunction(Polynomial num, Polynomial den);
  static RationalFunction var(Var v) { return Polynomial::var(v); }
  static RationalFunction parse(std::string_view s);

  const Polynomial& num() const { return num_; }
  const Polynomial& den() const { return den_; }
  bool is_zero() const { return num_.is_zero(); }
  bool is_polynomial() const { return den_.is_constant(); }
  bool is_constant() const { return num_.is_constant() && den_.is_constant(); }
  Rational constant_value() const;
  std::vector<Var> variables() const;

  Rational evaluate(const Assignment& a) const;
  RationalFunction inverse() const;

  RationalFunction& operator+=(const RationalFunction& o);
  RationalFunction& operator-=(const RationalFunction& o);
  RationalFunction& operator*=(const RationalFunction& o);
  RationalFunction& operator/=(const RationalFunction& o);
  friend RationalFunction operator+(RationalFunction a, const RationalFunction& b) { return a += b; }
  friend RationalFunction operator-(RationalFunction a, const RationalFunction& b) { return a -= b; }
  friend RationalFunction operator*(RationalFunction a, const RationalFunction& b) { return a *= b; }
  friend RationalFunction operator/(RationalFunction a, const RationalFunction& b) { return a /= b; }
  friend RationalFunction operator-(const RationalFunction& a);
  friend bool operator==(const RationalFunction& a, const RationalFunction& b) {
    return a.num_ == b.num_ && a.den_ == b.den_;
  }
  friend bool operator!=(const RationalFunction& a, const RationalFunction& b) { return !(a == b); }

  std::string str() const;

 private:
  Polynomial num_, den_;  // den monic under grlex
};

RationalFunction rf_normalize(const Polynomial& num, const Polynomial& den);

// Laurent monomial in named variables, e.g. u1^-1 u3^-1.
struct LaurentMonomial {
  std::map<Var, int> exps;  // no zero exponents

  LaurentMonomial& operator*=(const LaurentMonomial& o);
  friend LaurentMonomial operator*(LaurentMonomial a, const LaurentMonomial& b) { return a *= b; }
  LaurentMonomial inverse() const;
  friend bool operator==(const LaurentMonomial& a, const LaurentMonomial& b) { return a.exps == b.exps; }
  RationalFunction to_rf() const;
  // substitute a rational function for every variable
  RationalFunction substitute(const std::function<RationalFunction(Var)>& f) const;
  std::string str() const;
};

struct PoolFactorization {
  std::vector<unsigned> pool_exponents;        // parallel to the pool
  std::vector<std::pair<Var, unsigned>> vars;  // variable factors found
  Polynomial remainder;                        // divisible by no pool element
  Rational unit;                               // p = unit * remainder * prod
};

PoolFactorization factor_against_pool(const Polynomial& p, const std::vector<Polynomial>& pool);

}  // namespace bsp
