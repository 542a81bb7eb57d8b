#include "braidsplice/richardson.hpp"

#include <algorithm>
#include <set>

namespace bsp {

BraidWord richardson_braid(const Permutation& u, const Permutation& w) {
  if (!bruhat_leq(u, w)) throw BruhatViolation(u.str() + " is not below " + w.str());
  return positive_lift(w) * positive_lift(u.inverse() * Permutation::longest(u.k()));
}

int frozen_count_base(const Permutation& w) {
  auto l = positive_lift(w).letters();
  return static_cast<int>(std::set<int>(l.begin(), l.end()).size());
}

namespace {

// x_0 = 1 homogenization of a quadric, as a symmetric matrix over Q
QMatrix quadric_matrix(const Polynomial& p) {
  auto vars = p.variables();
  int n = static_cast<int>(vars.size());
  auto idx = [&](Var v) { return 1 + static_cast<int>(std::find(vars.begin(), vars.end(), v) - vars.begin()); };
  QMatrix a(n + 1, n + 1);
  Rational half(1, 2);
  for (const auto& t : p.terms()) {
    const auto& f = t.m.factors();
    if (f.empty()) {
      a(0, 0) += t.c;
    } else if (f.size() == 1 && f[0].second == 1) {
      a(0, idx(f[0].first)) += t.c * half;
      a(idx(f[0].first), 0) += t.c * half;
    } else if (f.size() == 1) {
      a(idx(f[0].first), idx(f[0].first)) += t.c;
    } else {
      int i = idx(f[0].first), j = idx(f[1].first);
      a(i, j) += t.c * half;
      a(j, i) += t.c * half;
    }
  }
  return a;
}

Polynomial as_polynomial(const RationalFunction& f) {
  if (!f.is_polynomial()) throw NotExact("expected a polynomial entry");
  return f.num() * f.den().constant_value().inverse();
}

}  // namespace

bool certified_irreducible(const Polynomial& p) {
  if (p.is_constant()) return false;
  for (Var v : p.variables()) {
    if (p.degree(v) != 1) continue;
    auto c = p.coefficients(v);
    if (c[0].is_zero()) return c[1].is_constant();  // p = c1 * v
    if (poly_gcd(c[0], c[1]).is_constant()) return true;
  }
  if (p.total_degree() == 2) return rank(quadric_matrix(p)) >= 3;
  return false;
}

SCount s_count(const Permutation& v, const Permutation& w, const std::vector<Polynomial>& pool_hints) {
  if (!bruhat_leq(v, w)) throw BruhatViolation(v.str() + " is not below " + w.str());
  int k = w.k();
  BraidWord lw = positive_lift(w);
  SymMatrix B = braid_word_matrix(lw, var_range('z', 1, lw.size()));
  SCount out;
  auto add_pool = [&](const Polynomial& p) {
    if (p.is_constant()) return;
    Polynomial m = p.monic();
    if (std::find(out.pool.begin(), out.pool.end(), m) == out.pool.end()) out.pool.push_back(m);
  };
  for (int i = 1; i <= k; ++i) add_pool(as_polynomial(minor(B, interval(1, i), interval(1, i))));
  std::size_t n_principal = out.pool.size();
  for (const auto& h : pool_hints) add_pool(h);
  auto is_principal = [&](const Polynomial& m) {
    return std::find(out.pool.begin(), out.pool.begin() + n_principal, m) != out.pool.begin() + n_principal;
  };

  std::vector<Polynomial> fresh;
  auto note_new = [&](const Polynomial& m) {
    if (std::find(fresh.begin(), fresh.end(), m) == fresh.end()) fresh.push_back(m);
  };
  for (int i = 1; i < k; ++i) {
    auto rows = perm_prefix_set(v, i);
    if (rows == interval(1, i)) continue;
    MinorEntry e{i, rows, as_polynomial(minor(B, rows, interval(1, i))), {}};
    if (e.minor.is_zero()) throw NotExact("minor vanishes identically although v <= w");
    PoolFactorization f = factor_against_pool(e.minor, out.pool);
    for (std::size_t j = 0; j < out.pool.size(); ++j) {
      if (!f.pool_exponents[j]) continue;
      FactorKind kind = FactorKind::Principal;
      if (j >= n_principal) kind = certified_irreducible(out.pool[j]) ? FactorKind::New : FactorKind::Uncertified;
      e.factors.push_back({out.pool[j], f.pool_exponents[j], kind});
    }
    for (auto& [var, ex] : f.vars) {
      Polynomial m = Polynomial::var(var);
      e.factors.push_back({m, ex, is_principal(m) ? FactorKind::Principal : FactorKind::New});
    }
    if (!f.remainder.is_constant())
      e.factors.push_back({f.remainder, 1, certified_irreducible(f.remainder) ? FactorKind::New : FactorKind::Uncertified});
    for (auto& mf : e.factors) {
      if (mf.kind == FactorKind::New) note_new(mf.factor);
      if (mf.kind == FactorKind::Uncertified) out.complete = false;
    }
    out.minors.push_back(std::move(e));
  }
  out.new_factors = fresh;
  out.s = static_cast<int>(fresh.size());
  return out;
}

int frozen_count(const Permutation& v, const Permutation& w, const std::vector<Polynomial>& pool_hints) {
  SCount s = s_count(v, w, pool_hints);
  if (!s.complete) throw IncompleteFactorization("s(" + v.str() + ", " + w.str() + ") has uncertified factors");
  return frozen_count_base(w) - frozen_count_base(v) + s.s;
}

bool frozen_inequality_check(const Permutation& u, const Permutation& v, const Permutation& w) {
  if (!bruhat_leq(u, v) || !bruhat_leq(v, w)) throw BruhatViolation("need u <= v <= w");
  return frozen_count(u, v) + frozen_count(v, w) >= frozen_count(u, w);
}

namespace {
Permutation star(const Permutation& v) {
  Permutation w0 = Permutation::longest(v.k());
  return w0 * v * w0;
}
}  // namespace

bool richardson_chart_membership(const Permutation& u, const Permutation& v, const Permutation& w, const Point& pt) {
  BraidWord b = richardson_braid(u, w);
  int r1 = w.length();
  if (r1 == 0 || r1 == b.size()) throw DimensionMismatch("nothing to splice: one side is empty");
  return chart_membership(pt, b, r1, star(v));
}

RichardsonSplit richardson_splice(const Permutation& u, const Permutation& v, const Permutation& w, const Point& pt) {
  if (!bruhat_leq(u, v) || !bruhat_leq(v, w)) throw BruhatViolation("need u <= v <= w");
  BraidWord b = richardson_braid(u, w);
  int r1 = w.length();
  if (r1 == 0 || r1 == b.size()) throw DimensionMismatch("nothing to splice: one side is empty");
  auto [p1, p2] = braid_splice_forward(b, r1, star(v), pt);
  auto [t1, t2] = braid_splice_targets(b, r1, star(v));
  return {t1, t2, p1, p2};
}

Point richardson_unsplice(const Permutation& u, const Permutation& v, const Permutation& w, const Point& pt_vw,
                          const Point& pt_uv) {
  if (!bruhat_leq(u, v) || !bruhat_leq(v, w)) throw BruhatViolation("need u <= v <= w");
  BraidWord b = richardson_braid(u, w);
  int r1 = w.length();
  if (r1 == 0 || r1 == b.size()) throw DimensionMismatch("nothing to splice: one side is empty");
  return braid_splice_inverse(b, r1, star(v), pt_vw, pt_uv);
}

std::vector<ChainFactor> chain_splice(const std::vector<Permutation>& chain, const Point& pt) {
  if (chain.size() < 2) throw DimensionMismatch("a chain needs two elements");
  const Permutation &u = chain.front(), &w = chain.back();
  if (chain.size() == 2) return {{u, w, richardson_braid(u, w), pt}};
  const Permutation& v = chain[1];
  RichardsonSplit s = richardson_splice(u, v, w, pt);
  Permutation w0 = Permutation::longest(u.k());
  // the R(v, w) factor is the Richardson braid of (w0 w^-1, w0 v^-1); the
  // chain above v maps to it through c -> w0 c^-1, reversing the order
  std::vector<Permutation> rest;
  for (auto it = chain.rbegin(); it + 1 != chain.rend(); ++it) rest.push_back(w0 * it->inverse());
  if (s.braid_vw != richardson_braid(rest.front(), rest.back())) throw NotExact("unexpected factor braid");
  std::vector<ChainFactor> out = {{v.inverse() * w0, u.inverse() * w0, s.braid_uv, s.pt_uv}};
  for (auto& f : chain_splice(rest, s.pt_vw)) out.push_back(std::move(f));
  return out;
}

int braid_variety_dimension_at(const BraidWord& b, const Point& z) {
  int k = b.k(), r = b.size();
  auto vars = var_range('z', 1, r);
  SymMatrix m = to_sym(perm_matrix<Rational>(Permutation::longest(k))) * braid_word_matrix(b, vars);
  Assignment a;
  for (int j = 0; j < r; ++j) a[vars[j]] = z[j];
  std::vector<Polynomial> eqs;
  for (int i = 0; i < k; ++i)
    for (int j = 0; j < i; ++j) eqs.push_back(as_polynomial(m(i, j)));
  QMatrix jac(static_cast<int>(eqs.size()), r);
  for (std::size_t e = 0; e < eqs.size(); ++e)
    for (int j = 0; j < r; ++j) jac(static_cast<int>(e), j) = eqs[e].derivative(vars[j]).evaluate(a);
  return r - rank(jac);
}

}  // namespace bsp
