#include "braidsplice/exactalg.hpp"

#include <cctype>

namespace bsp {

Rational::Rational(long n, long d) {
  if (d == 0) throw ZeroDenominator();
  v_ = mpq_class(n, d);
  v_.canonicalize();
}

Rational Rational::parse(std::string_view s) {
  std::string t;
  for (char c : s)
    if (!std::isspace(static_cast<unsigned char>(c))) t.push_back(c);
  if (t.empty()) throw ParseError("empty rational");
  if (t[0] == '+') t.erase(0, 1);
  auto slash = t.find('/');
  auto check = [](const std::string& part) {
    std::size_t i = (!part.empty() && part[0] == '-') ? 1 : 0;
    if (i == part.size()) return false;
    for (; i < part.size(); ++i)
      if (!std::isdigit(static_cast<unsigned char>(part[i]))) return false;
    return true;
  };
  if (slash == std::string::npos) {
    if (!check(t)) throw ParseError("bad rational '" + std::string(s) + "'");
    return Rational(mpz_class(t));
  }
  std::string a = t.substr(0, slash), b = t.substr(slash + 1);
  if (!check(a) || !check(b)) throw ParseError("bad rational '" + std::string(s) + "'");
  mpz_class d(b);
  if (d == 0) throw ZeroDenominator();
  return Rational(mpq_class(mpz_class(a), d));
}

Rational Rational::inverse() const {
  if (is_zero()) throw ZeroDenominator();
  mpq_class r = 1 / v_;
  return Rational(r);
}

Rational& Rational::operator/=(const Rational& o) {
  if (o.is_zero()) throw ZeroDenominator();
  v_ /= o.v_;
  return *this;
}

std::string Rational::str() const { return v_.get_str(); }

Var make_var(char family, unsigned index) {
  if (family < 'a' || family > 'z' || index > 0xffffu) throw ParseError("bad variable");
  return (static_cast<Var>(family - 'a') << 16) | index;
}

std::string var_name(Var v) {
  std::string s(1, var_family(v));
  if (var_index(v) != 0) s += std::to_string(var_index(v));
  return s;
}

Var parse_var(std::string_view s) {
  if (s.empty() || !std::islower(static_cast<unsigned char>(s[0]))) throw ParseError("bad variable");
  unsigned idx = 0;
  for (std::size_t i = 1; i < s.size(); ++i) {
    if (!std::isdigit(static_cast<unsigned char>(s[i]))) throw ParseError("bad variable '" + std::string(s) + "'");
    idx = idx * 10 + static_cast<unsigned>(s[i] - '0');
    if (idx > 0xffffu) throw ParseError("variable index too large");
  }
  return make_var(s[0], idx);
}

std::vector<Var> var_range(char family, unsigned first, unsigned count) {
  std::vector<Var> out;
  for (unsigned i = 0; i < count; ++i) out.push_back(make_var(family, first + i));
  return out;
}

}  // namespace bsp
