#include "braidsplice/flags.hpp"

#include <map>

namespace bsp {

FlagPoint::FlagPoint(QMatrix m) : M(std::move(m)) {
  if (M.rows() != M.cols() || det(M).is_zero()) throw DimensionMismatch("flag matrix must be invertible");
}

namespace {
int intersection_dim(const QMatrix& a, const QMatrix& b, int i, int j) {
  int k = a.rows();
  QMatrix s(k, i + j);
  for (int r = 0; r < k; ++r) {
    for (int c = 0; c < i; ++c) s(r, c) = a(r, c);
    for (int c = 0; c < j; ++c) s(r, i + c) = b(r, c);
  }
  return i + j - rank(s);
}
}  // namespace

Permutation relative_position(const FlagPoint& a, const FlagPoint& b) {
  int k = a.M.rows();
  if (b.M.rows() != k) throw DimensionMismatch("flags of different size");
  std::vector<std::vector<int>> d(k + 1, std::vector<int>(k + 1, 0));
  for (int i = 1; i <= k; ++i)
    for (int j = 1; j <= k; ++j) d[i][j] = intersection_dim(a.M, b.M, i, j);
  std::vector<int> w(k, 0);
  for (int j = 1; j <= k; ++j)
    for (int i = 1; i <= k; ++i)
      if (d[i][j] - d[i - 1][j] - d[i][j - 1] + d[i - 1][j - 1] == 1) w[j - 1] = i;
  return Permutation(w);
}

bool is_transverse(const FlagPoint& a, const FlagPoint& b) {
  int k = a.M.rows();
  for (int i = 1; i < k; ++i)
    if (intersection_dim(a.M, b.M, i, k - i) != 0) return false;
  return true;
}

bool in_braid_variety(const Point& z, const BraidWord& b) {
  QMatrix m = braid_word_matrix<Rational>(b, z);
  return (perm_matrix<Rational>(Permutation::longest(b.k())) * m).is_upper_triangular();
}

bool in_dbs(const Point& z, const BraidWord& b) {
  QMatrix m = braid_word_matrix<Rational>(b, z);
  for (int i = 1; i <= b.k(); ++i)
    if (minor(m, interval(1, i), interval(1, i)).is_zero()) return false;
  return true;
}

bool transverse_minors_nonzero(const QMatrix& m, const Permutation& v) {
  Permutation p = v * Permutation::longest(v.k());
  for (int i = 1; i <= v.k(); ++i)
    if (minor(m, perm_prefix_set(p, i), interval(1, i)).is_zero()) return false;
  return true;
}

bool chart_membership(const Point& z, const BraidWord& b, int r1, const Permutation& w) {
  if (r1 < 1 || r1 > b.size()) throw DimensionMismatch("split index out of range");
  if (!in_braid_variety(z, b)) throw NotOnVariety();
  QMatrix m = braid_word_matrix<Rational>(b.prefix(r1), Point(z.begin(), z.begin() + r1));
  return transverse_minors_nonzero(m, Permutation::longest(b.k()) * w);
}

Rational Sampler::rational() {
  std::uniform_int_distribution<int> num(-9, 9), den(1, 9);
  return Rational(num(rng_), den(rng_));
}

Rational Sampler::nonzero() {
  for (;;) {
    Rational r = rational();
    if (!r.is_zero()) return r;
  }
}

Point Sampler::free_point(int n) {
  Point p;
  for (int i = 0; i < n; ++i) p.push_back(rational());
  return p;
}

Point Sampler::dbs_point(const BraidWord& b) {
  for (int t = 0; t < 64; ++t) {
    Point p = free_point(b.size());
    if (in_dbs(p, b)) return p;
  }
  throw NotInDBS("no point of BS found in 64 draws");
}

int w0_suffix_start(const BraidWord& b) {
  int L = b.k() * (b.k() - 1) / 2;
  if (b.size() < L) return -1;
  BraidWord tail = b.suffix_from(b.size() - L);
  return word_permutation(tail) == Permutation::longest(b.k()) ? b.size() - L : -1;
}

Point complete_to_w0(const Point& z, const BraidWord& b, const BraidWord& tail) {
  QMatrix m = braid_word_matrix<Rational>(b, z);
  auto lu = lu_decompose(m);
  // U^{-1} diag(U) is unipotent, and L diag(U) sdot(w0) lies in w0 B
  QMatrix n = inverse(lu.U) * QMatrix::diagonal(lu.U.diag()) * signed_perm_matrix<Rational>(tail);
  return cell_coordinates(n, tail);
}

Point Sampler::braid_point_from_bs(const BraidWord& b) {
  int s = w0_suffix_start(b);
  if (s < 0) throw DimensionMismatch("braid does not end in a reduced word for w0");
  BraidWord head = b.prefix(s), tail = b.suffix_from(s);
  Point z = dbs_point(head);
  Point y = complete_to_w0(z, head, tail);
  z.insert(z.end(), y.begin(), y.end());
  return z;
}

namespace {

// feasible[j] = positions u (relative to F(w0)) after j letters from which
// the remaining letters can still reach e
std::vector<std::map<std::vector<int>, bool>> feasibility(const BraidWord& b) {
  int r = b.size();
  auto perms = Permutation::all(b.k());
  std::vector<std::map<std::vector<int>, bool>> f(r + 1);
  for (const auto& u : perms) f[r][u.images()] = u.is_identity();
  for (int j = r; j >= 1; --j) {
    Permutation s = Permutation::simple(b.k(), b[j]);
    for (const auto& u : perms) {
      Permutation su = s * u;
      bool ok = su.length() > u.length() ? f[j][su.images()] : (f[j][u.images()] || f[j][su.images()]);
      f[j - 1][u.images()] = ok;
    }
  }
  return f;
}

// candidates for the z at which F(M B_i(z)) moves closer to F(w0)
std::vector<Rational> special_values(const QMatrix& m, int i) {
  int k = m.rows();
  std::vector<Rational> out;
  for (int b = 1; b <= k; ++b) {
    // vectors of span(M_1..M_{i+1}) lying in span(e_{k-b+1}, ..., e_k)
    QMatrix sys(k - b, i + 1);
    for (int r = 0; r < k - b; ++r)
      for (int c = 0; c <= i; ++c) sys(r, c) = m(r, c);
    for (const auto& x : nullspace(sys)) {
      const Rational &ci = x[i - 1], &cn = x[i];
      if (ci.is_zero() && cn.is_zero()) continue;
      if (!cn.is_zero()) out.push_back(ci / cn);
    }
  }
  return out;
}

}  // namespace

Point Sampler::braid_point(const BraidWord& b, double stay_bias) {
  int k = b.k();
  Permutation w0 = Permutation::longest(k);
  auto feasible = feasibility(b);
  if (!feasible[0][w0.images()]) throw NotOnVariety("X(beta) is empty: Demazure product is not w0");
  FlagPoint target = FlagPoint::of(w0);
  std::uniform_real_distribution<double> coin(0.0, 1.0);
  QMatrix m = QMatrix::identity(k);
  Permutation u = w0;
  Point z;
  for (int j = 1; j <= b.size(); ++j) {
    int i = b[j];
    Permutation su = Permutation::simple(k, i) * u;
    bool up = su.length() > u.length();
    bool stay = !up && feasible[j][u.images()] && (!feasible[j][su.images()] || coin(rng_) < stay_bias);
    Rational t;
    Permutation expect = (up || !stay) ? su : u;
    if (!up && !stay) {
      bool found = false;
      for (const Rational& c : special_values(m, i))
        if (relative_position(FlagPoint(m * braid_letter_matrix<Rational>(k, i, c)), target) == su) {
          t = c;
          found = true;
          break;
        }
      if (!found) throw NotOnVariety("sampler found no value dropping the relative position");
    } else {
      for (int tries = 0;; ++tries) {
        t = rational();
        if (up || relative_position(FlagPoint(m * braid_letter_matrix<Rational>(k, i, t)), target) == u) break;
        if (tries > 64) throw NotOnVariety("sampler could not avoid the special value");
      }
    }
    m = m * braid_letter_matrix<Rational>(k, i, t);
    u = expect;
    if (relative_position(FlagPoint(m), target) != u) throw NotOnVariety("sampler lost track of the relative position");
    z.push_back(t);
  }
  return z;
}

Point Sampler::chart_point(const BraidWord& b, int r1, const Permutation& w) {
  for (int t = 0; t < 64; ++t) {
    Point z = braid_point(b);
    if (chart_membership(z, b, r1, w)) return z;
  }
  throw NotInChart("no chart point found in 64 draws");
}

}  // namespace bsp
