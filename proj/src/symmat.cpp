#include "braidsplice/symmat.hpp"

#include <algorithm>

namespace bsp {

std::vector<int> interval(int a, int b) {
  std::vector<int> v;
  for (int i = a; i <= b; ++i) v.push_back(i);
  return v;
}

std::vector<int> perm_prefix_set(const Permutation& w, int i) {
  std::vector<int> v;
  for (int j = 1; j <= i; ++j) v.push_back(w(j));
  std::sort(v.begin(), v.end());
  return v;
}

Rational det(const QMatrix& m0) {
  int n = m0.rows();
  if (m0.cols() != n) throw DimensionMismatch("determinant of non-square matrix");
  QMatrix m = m0;
  Rational d = 1;
  for (int c = 0; c < n; ++c) {
    int p = c;
    while (p < n && m(p, c).is_zero()) ++p;
    if (p == n) return 0;
    if (p != c) {
      for (int j = c; j < n; ++j) std::swap(m(p, j), m(c, j));
      d = -d;
    }
    d *= m(c, c);
    Rational inv = m(c, c).inverse();
    for (int r = c + 1; r < n; ++r) {
      if (m(r, c).is_zero()) continue;
      Rational f = m(r, c) * inv;
      for (int j = c; j < n; ++j) m(r, j) -= f * m(c, j);
    }
  }
  return d;
}

int rank(const QMatrix& m0) {
  QMatrix m = m0;
  int r = 0;
  for (int c = 0; c < m.cols() && r < m.rows(); ++c) {
    int p = r;
    while (p < m.rows() && m(p, c).is_zero()) ++p;
    if (p == m.rows()) continue;
    for (int j = 0; j < m.cols(); ++j) std::swap(m(p, j), m(r, j));
    Rational inv = m(r, c).inverse();
    for (int i = r + 1; i < m.rows(); ++i) {
      if (m(i, c).is_zero()) continue;
      Rational f = m(i, c) * inv;
      for (int j = c; j < m.cols(); ++j) m(i, j) -= f * m(r, j);
    }
    ++r;
  }
  return r;
}

std::vector<std::vector<Rational>> nullspace(const QMatrix& m0) {
  QMatrix m = m0;
  int rows = m.rows(), cols = m.cols();
  std::vector<int> pivot_col;
  int r = 0;
  for (int c = 0; c < cols && r < rows; ++c) {
    int p = r;
    while (p < rows && m(p, c).is_zero()) ++p;
    if (p == rows) continue;
    for (int j = 0; j < cols; ++j) std::swap(m(p, j), m(r, j));
    Rational inv = m(r, c).inverse();
    for (int j = 0; j < cols; ++j) m(r, j) *= inv;
    for (int i = 0; i < rows; ++i) {
      if (i == r || m(i, c).is_zero()) continue;
      Rational f = m(i, c);
      for (int j = 0; j < cols; ++j) m(i, j) -= f * m(r, j);
    }
    pivot_col.push_back(c);
    ++r;
  }
  std::vector<std::vector<Rational>> basis;
  std::vector<bool> is_pivot(cols, false);
  for (int c : pivot_col) is_pivot[c] = true;
  for (int f = 0; f < cols; ++f) {
    if (is_pivot[f]) continue;
    std::vector<Rational> x(cols, Rational(0));
    x[f] = 1;
    for (std::size_t i = 0; i < pivot_col.size(); ++i) x[pivot_col[i]] = -m(static_cast<int>(i), f);
    basis.push_back(x);
  }
  return basis;
}

namespace {

Polynomial lcm(const Polynomial& a, const Polynomial& b) {
  if (a.is_constant()) return b;
  if (b.is_constant()) return a;
  return exact_quotient(a * b, poly_gcd(a, b));
}

Polynomial bareiss(std::vector<std::vector<Polynomial>> m) {
  int n = static_cast<int>(m.size());
  if (n == 0) return Polynomial(1);
  bool neg = false;
  Polynomial prev(1);
  for (int k = 0; k + 1 < n; ++k) {
    int best = -1;
    for (int r = k; r < n; ++r)
      if (!m[r][k].is_zero() && (best < 0 || m[r][k].size() < m[best][k].size())) best = r;
    if (best < 0) return Polynomial();
    if (best != k) {
      std::swap(m[best], m[k]);
      neg = !neg;
    }
    for (int i = k + 1; i < n; ++i) {
      for (int j = k + 1; j < n; ++j) {
        Polynomial t = m[i][j] * m[k][k];
        if (!m[i][k].is_zero() && !m[k][j].is_zero()) t -= m[i][k] * m[k][j];
        m[i][j] = prev.is_constant() ? t * prev.constant_value().inverse() : exact_quotient(t, prev);
      }
      m[i][k] = Polynomial();
    }
    prev = m[k][k];
  }
  return neg ? -m[n - 1][n - 1] : m[n - 1][n - 1];
}

}  // namespace

RationalFunction det(const SymMatrix& m) {
  int n = m.rows();
  if (m.cols() != n) throw DimensionMismatch("determinant of non-square matrix");
  if (n == 0) return RationalFunction(1);
  if (n == 1) return m(0, 0);
  if (n == 2) return m(0, 0) * m(1, 1) - m(0, 1) * m(1, 0);
  std::vector<std::vector<Polynomial>> p(n, std::vector<Polynomial>(n));
  Polynomial scale(1);
  for (int i = 0; i < n; ++i) {
    Polynomial l(1);
    for (int j = 0; j < n; ++j) l = lcm(l, m(i, j).den());
    for (int j = 0; j < n; ++j)
      p[i][j] = m(i, j).den().is_constant() && l.is_constant()
                    ? m(i, j).num() * m(i, j).den().constant_value().inverse()
                    : m(i, j).num() * exact_quotient(l, m(i, j).den());
    scale *= l;
  }
  return RationalFunction(bareiss(std::move(p)), scale);
}

Rational minor(const QMatrix& m, const std::vector<int>& I, const std::vector<int>& J) {
  if (I.size() != J.size()) throw DimensionMismatch("minor needs |I| = |J|");
  return det(m.submatrix(I, J));
}

RationalFunction minor(const SymMatrix& m, const std::vector<int>& I, const std::vector<int>& J) {
  if (I.size() != J.size()) throw DimensionMismatch("minor needs |I| = |J|");
  return det(m.submatrix(I, J));
}

SymMatrix evaluate(const SymMatrix& m, const Assignment& a) {
  return m.map([&](const RationalFunction& f) { return RationalFunction(f.evaluate(a)); });
}

QMatrix evaluate_q(const SymMatrix& m, const Assignment& a) {
  return m.map([&](const RationalFunction& f) { return f.evaluate(a); });
}

SymMatrix to_sym(const QMatrix& m) {
  return m.map([](const Rational& x) { return RationalFunction(x); });
}

SymMatrix braid_letter_matrix(int k, int i, Var v) {
  return braid_letter_matrix<RationalFunction>(k, i, RationalFunction::var(v));
}

SymMatrix braid_word_matrix(const BraidWord& b, const std::vector<Var>& vars) {
  std::vector<RationalFunction> z;
  for (Var v : vars) z.push_back(RationalFunction::var(v));
  return braid_word_matrix<RationalFunction>(b, z);
}

SymMatrix delta_matrix_closed_form(int k, const std::vector<Var>& vars) {
  if (static_cast<int>(vars.size()) != k * (k - 1) / 2) throw DimensionMismatch("need k(k-1)/2 variables");
  SymMatrix m(k, k);
  int offset = 0;  // letters used by earlier columns
  for (int c = 1; c <= k; ++c) {
    RationalFunction sign = (c - 1) % 2 ? RationalFunction(-1) : RationalFunction(1);
    for (int r = 1; r + c <= k; ++r)
      m(r - 1, c - 1) = sign * RationalFunction::var(vars[offset + (k - c) - r]);
    m(k - c, c - 1) = sign;
    offset += k - c;
  }
  return m;
}

SymMatrix partial_coxeter_closed_form(int k, int i, const std::vector<Var>& vars) {
  if (i < 1 || i >= k || static_cast<int>(vars.size()) != i) throw DimensionMismatch("partial Coxeter shape");
  SymMatrix m = SymMatrix::identity(k);
  int o = k - i - 1;  // size of the identity block
  for (int a = o; a < k; ++a)
    for (int b = o; b < k; ++b) m(a, b) = RationalFunction(0);
  for (int j = 1; j <= i; ++j) {
    m(o + j - 1, o) = RationalFunction::var(vars[i - j]);
    m(o + j - 1, o + j) = RationalFunction(-1);
  }
  m(k - 1, o) = RationalFunction(1);
  return m;
}

std::string matrix_str(const SymMatrix& m) {
  std::string s;
  for (int i = 0; i < m.rows(); ++i) {
    s += "[";
    for (int j = 0; j < m.cols(); ++j) {
      if (j) s += ", ";
      s += m(i, j).str();
    }
    s += "]\n";
  }
  return s;
}

}  // namespace bsp
