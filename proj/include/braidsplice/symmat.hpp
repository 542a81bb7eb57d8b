#pragma once

#include <string>
#include <vector>

#include "braidsplice/combinat.hpp"
#include "braidsplice/exactalg.hpp"

namespace bsp {

// Dense matrix over an exact field (Rational or RationalFunction).
// operator() is 0-based; index sets passed to minor() are 1-based.
template <class T>
class Matrix {
 public:
  Matrix() = default;
  Matrix(int r, int c) : r_(r), c_(c), a_(static_cast<std::size_t>(r) * c, T(0)) {}
  static Matrix identity(int n) {
    Matrix m(n, n);
    for (int i = 0; i < n; ++i) m(i, i) = T(1);
    return m;
  }
  static Matrix diagonal(const std::vector<T>& d) {
    Matrix m(static_cast<int>(d.size()), static_cast<int>(d.size()));
    for (std::size_t i = 0; i < d.size(); ++i) m(i, i) = d[i];
    return m;
  }

  int rows() const { return r_; }
  int cols() const { return c_; }
  T& operator()(int i, int j) { return a_[static_cast<std::size_t>(i) * c_ + j]; }
  const T& operator()(int i, int j) const { return a_[static_cast<std::size_t>(i) * c_ + j]; }

  friend Matrix operator*(const Matrix& a, const Matrix& b) {
    if (a.c_ != b.r_) throw DimensionMismatch("matrix product");
    Matrix m(a.r_, b.c_);
    for (int i = 0; i < a.r_; ++i)
      for (int l = 0; l < a.c_; ++l) {
        if (a(i, l).is_zero()) continue;
        for (int j = 0; j < b.c_; ++j)
          if (!b(l, j).is_zero()) m(i, j) += a(i, l) * b(l, j);
      }
    return m;
  }
  friend Matrix operator+(Matrix a, const Matrix& b) {
    for (std::size_t i = 0; i < a.a_.size(); ++i) a.a_[i] += b.a_[i];
    return a;
  }
  friend Matrix operator-(Matrix a, const Matrix& b) {
    for (std::size_t i = 0; i < a.a_.size(); ++i) a.a_[i] -= b.a_[i];
    return a;
  }
  friend bool operator==(const Matrix& a, const Matrix& b) {
    return a.r_ == b.r_ && a.c_ == b.c_ && a.a_ == b.a_;
  }
  friend bool operator!=(const Matrix& a, const Matrix& b) { return !(a == b); }

  Matrix transpose() const {
    Matrix m(c_, r_);
    for (int i = 0; i < r_; ++i)
      for (int j = 0; j < c_; ++j) m(j, i) = (*this)(i, j);
    return m;
  }
  std::vector<T> diag() const {
    std::vector<T> d;
    for (int i = 0; i < std::min(r_, c_); ++i) d.push_back((*this)(i, i));
    return d;
  }
  bool is_upper_triangular() const {
    for (int i = 0; i < r_; ++i)
      for (int j = 0; j < std::min(i, c_); ++j)
        if (!(*this)(i, j).is_zero()) return false;
    return true;
  }
  bool is_lower_triangular() const { return transpose().is_upper_triangular(); }
  bool is_diagonal() const { return is_upper_triangular() && is_lower_triangular(); }
  bool is_unit_lower_triangular() const {
    if (!is_lower_triangular()) return false;
    for (int i = 0; i < r_; ++i)
      if ((*this)(i, i) != T(1)) return false;
    return true;
  }
  bool is_identity() const { return *this == identity(r_); }

  // rows I, columns J, both 1-based
  Matrix submatrix(const std::vector<int>& I, const std::vector<int>& J) const {
    Matrix m(static_cast<int>(I.size()), static_cast<int>(J.size()));
    for (std::size_t a = 0; a < I.size(); ++a)
      for (std::size_t b = 0; b < J.size(); ++b) m(a, b) = (*this)(I[a] - 1, J[b] - 1);
    return m;
  }

  template <class F>
  auto map(F f) const {
    using R = decltype(f(std::declval<T>()));
    Matrix<R> m(r_, c_);
    for (int i = 0; i < r_; ++i)
      for (int j = 0; j < c_; ++j) m(i, j) = f((*this)(i, j));
    return m;
  }

 private:
  int r_ = 0, c_ = 0;
  std::vector<T> a_;
};

using QMatrix = Matrix<Rational>;
using SymMatrix = Matrix<RationalFunction>;

std::vector<int> interval(int a, int b);  // {a, ..., b}
// w[i] = {w(1), ..., w(i)}, sorted
std::vector<int> perm_prefix_set(const Permutation& w, int i);

// exact determinants: Gaussian elimination over Q, Bareiss over the
// polynomial ring for rational-function entries
Rational det(const QMatrix& m);
RationalFunction det(const SymMatrix& m);
Rational minor(const QMatrix& m, const std::vector<int>& I, const std::vector<int>& J);
RationalFunction minor(const SymMatrix& m, const std::vector<int>& I, const std::vector<int>& J);
int rank(const QMatrix& m);
// basis of {x : m x = 0}
std::vector<std::vector<Rational>> nullspace(const QMatrix& m);

SymMatrix evaluate(const SymMatrix& m, const Assignment& a);  // entries become constants
QMatrix evaluate_q(const SymMatrix& m, const Assignment& a);
SymMatrix to_sym(const QMatrix& m);

template <class T>
Matrix<T> inverse(const Matrix<T>& m) {
  int n = m.rows();
  if (m.cols() != n) throw DimensionMismatch("inverse of non-square matrix");
  Matrix<T> a = m, inv = Matrix<T>::identity(n);
  for (int c = 0; c < n; ++c) {
    int p = c;
    while (p < n && a(p, c).is_zero()) ++p;
    if (p == n) throw ZeroDenominator("singular matrix");
    if (p != c)
      for (int j = 0; j < n; ++j) {
        std::swap(a(p, j), a(c, j));
        std::swap(inv(p, j), inv(c, j));
      }
    T piv_inv = T(1) / a(c, c);
    for (int j = 0; j < n; ++j) {
      a(c, j) *= piv_inv;
      inv(c, j) *= piv_inv;
    }
    for (int r = 0; r < n; ++r) {
      if (r == c || a(r, c).is_zero()) continue;
      T f = a(r, c);
      for (int j = 0; j < n; ++j) {
        if (!a(c, j).is_zero()) a(r, j) -= f * a(c, j);
        if (!inv(c, j).is_zero()) inv(r, j) -= f * inv(c, j);
      }
    }
  }
  return inv;
}

// 1 in row w(j), column j
template <class T>
Matrix<T> perm_matrix(const Permutation& w) {
  Matrix<T> m(w.k(), w.k());
  for (int j = 1; j <= w.k(); ++j) m(w(j) - 1, j - 1) = T(1);
  return m;
}

// B_i(z): identity with the block [[z, -1], [1, 0]] in rows/columns i, i+1
template <class T>
Matrix<T> braid_letter_matrix(int k, int i, const T& z) {
  if (i < 1 || i >= k) throw ParseError("generator out of range");
  Matrix<T> m = Matrix<T>::identity(k);
  m(i - 1, i - 1) = z;
  m(i - 1, i) = T(-1);
  m(i, i - 1) = T(1);
  m(i, i) = T(0);
  return m;
}

template <class T>
Matrix<T> braid_word_matrix(const BraidWord& b, const std::vector<T>& z) {
  if (static_cast<int>(z.size()) != b.size()) throw DimensionMismatch("one value per letter required");
  Matrix<T> m = Matrix<T>::identity(b.k());
  // right multiplication by B_i(z) only touches columns i, i+1
  for (int j = 0; j < b.size(); ++j) {
    int i = b.letters()[j] - 1;
    for (int r = 0; r < b.k(); ++r) {
      T a = m(r, i), c = m(r, i + 1);
      m(r, i) = a * z[j] + c;
      m(r, i + 1) = -a;
    }
  }
  return m;
}

SymMatrix braid_letter_matrix(int k, int i, Var v);
SymMatrix braid_word_matrix(const BraidWord& b, const std::vector<Var>& vars);
SymMatrix delta_matrix_closed_form(int k, const std::vector<Var>& vars);
SymMatrix partial_coxeter_closed_form(int k, int i, const std::vector<Var>& vars);

// Signed permutation matrix B_gamma(0) for a reduced word gamma.
template <class T>
Matrix<T> signed_perm_matrix(const BraidWord& b) {
  return braid_word_matrix<T>(b, std::vector<T>(b.size(), T(0)));
}

template <class T>
struct LUPair {
  Matrix<T> L, U;
};

template <class T>
LUPair<T> lu_decompose(const Matrix<T>& m) {
  int n = m.rows();
  std::vector<T> pm(n + 1, T(1));  // pm[i] = Delta_{[i],[i]}
  for (int i = 1; i <= n; ++i) {
    pm[i] = minor(m, interval(1, i), interval(1, i));
    if (pm[i].is_zero()) throw SingularPrincipalMinor(i);
  }
  LUPair<T> r{Matrix<T>::identity(n), Matrix<T>(n, n)};
  for (int j = 1; j <= n; ++j)
    for (int i = j + 1; i <= n; ++i) {
      auto I = interval(1, j - 1);
      I.push_back(i);
      r.L(i - 1, j - 1) = minor(m, I, interval(1, j)) / pm[j];
    }
  for (int i = 1; i <= n; ++i)
    for (int j = i; j <= n; ++j) {
      auto J = interval(1, i - 1);
      J.push_back(j);
      r.U(i - 1, j - 1) = j == i ? pm[i] / pm[i - 1] : minor(m, interval(1, i), J) / pm[i - 1];
    }
  return r;
}

// M = P L U with P the permutation matrix of w*w0.
template <class T>
LUPair<T> generalized_lu(const Matrix<T>& m, const Permutation& w) {
  Permutation p = w * Permutation::longest(w.k());
  // P^{-1} M has rows permuted: row i of P^{-1}M is row p(i) of M
  Matrix<T> pm(m.rows(), m.cols());
  for (int i = 1; i <= m.rows(); ++i)
    for (int j = 0; j < m.cols(); ++j) pm(i - 1, j) = m(p(i) - 1, j);
  try {
    return lu_decompose(pm);
  } catch (const SingularPrincipalMinor& e) {
    throw SingularChartMinor(e.index);
  }
}

template <class T>
struct SlideResult {
  std::vector<T> z;  // primed variables
  Matrix<T> U;       // U_out
};

// U * B_beta(z) = B_beta(z') * U_out, one letter at a time:
// z' = (U_ii z + U_{i,i+1}) / U_{i+1,i+1},  U <- B_i(z')^{-1} U B_i(z).
template <class T>
SlideResult<T> slide_upper_through(const Matrix<T>& U0, const BraidWord& b, const std::vector<T>& z) {
  if (static_cast<int>(z.size()) != b.size()) throw DimensionMismatch("one value per letter required");
  SlideResult<T> r{{}, U0};
  Matrix<T>& U = r.U;
  int k = U.rows();
  for (int j = 0; j < b.size(); ++j) {
    int i = b.letters()[j] - 1;
    T zp = (U(i, i) * z[j] + U(i, i + 1)) / U(i + 1, i + 1);
    // U B_i(z): columns i, i+1
    for (int row = 0; row <= i + 1; ++row) {
      T a = U(row, i), c = U(row, i + 1);
      U(row, i) = a * z[j] + c;
      U(row, i + 1) = -a;
    }
    // B_i(z')^{-1} = [[0, 1], [-1, z']] on rows i, i+1
    for (int col = i; col < k; ++col) {
      T a = U(i, col), c = U(i + 1, col);
      U(i, col) = c;
      U(i + 1, col) = c * zp - a;
    }
    if (!U(i + 1, i).is_zero()) throw NotExact("slide produced a non-triangular matrix");
    r.z.push_back(std::move(zp));
  }
  return r;
}

// For N in U * B_word(0) with word reduced, the unique y with B_word(y) = N.
// Throws PatternMismatch when N is not of that form.
template <class T>
std::vector<T> cell_coordinates(Matrix<T> N, const BraidWord& word) {
  int k = word.k(), n = word.size();
  std::vector<T> y;
  for (int j = 1; j <= n; ++j) {
    int a = word[j] - 1;
    // S = B_rest(0) is a signed permutation matrix; S^{-1} = S^T
    Matrix<T> S = signed_perm_matrix<T>(word.suffix_from(j));
    Matrix<T> X = N * S.transpose();
    if (X(a + 1, a).is_zero()) throw PatternMismatch("cell coordinate pivot vanishes");
    T yj = X(a, a) / X(a + 1, a);
    // N <- B_a(yj)^{-1} N
    for (int col = 0; col < k; ++col) {
      T p = N(a, col), q = N(a + 1, col);
      N(a, col) = q;
      N(a + 1, col) = q * yj - p;
    }
    y.push_back(std::move(yj));
  }
  if (!N.is_identity()) throw PatternMismatch("matrix is not in the cell of the word");
  return y;
}

// y with M * B_tdelta(y) diagonal (tdelta a reduced word for w0).
template <class T>
std::vector<T> back_to_standard(const Matrix<T>& M, const BraidWord& tdelta) {
  int k = M.rows();
  if (tdelta.size() != k * (k - 1) / 2 || word_permutation(tdelta) != Permutation::longest(k))
    throw PatternMismatch("word is not a reduced word for w0");
  Matrix<T> w0 = perm_matrix<T>(Permutation::longest(k));
  Matrix<T> UM = w0 * M;
  if (!UM.is_upper_triangular()) throw PatternMismatch("w0 M is not upper-triangular");
  Matrix<T> E = Matrix<T>::diagonal(UM.diag());
  Matrix<T> D = w0 * E * signed_perm_matrix<T>(tdelta);
  return cell_coordinates(inverse(M) * D, tdelta);
}

std::string matrix_str(const SymMatrix& m);

}  // namespace bsp
