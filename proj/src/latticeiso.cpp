#include "braidsplice/latticeiso.hpp"

#include <algorithm>
#include <deque>
#include <numeric>
#include <queue>
#include <set>

#include "braidsplice/errors.hpp"

namespace bsp {

ZMatrix to_z(const IntMatrix& a) {
  ZMatrix z;
  for (auto& row : a) z.emplace_back(row.begin(), row.end());
  return z;
}

mpz_class det(const ZMatrix& in) {
  int n = static_cast<int>(in.size());
  if (n == 0) return 1;
  ZMatrix a = in;
  mpz_class prev = 1;
  int sign = 1;
  for (int k = 0; k < n - 1; ++k) {
    if (a[k][k] == 0) {
      int p = k + 1;
      while (p < n && a[p][k] == 0) ++p;
      if (p == n) return 0;
      std::swap(a[k], a[p]);
      sign = -sign;
    }
    for (int i = k + 1; i < n; ++i)
      for (int j = k + 1; j < n; ++j) {
        mpz_class t = a[i][j] * a[k][k] - a[i][k] * a[k][j];
        mpz_divexact(a[i][j].get_mpz_t(), t.get_mpz_t(), prev.get_mpz_t());
      }
    prev = a[k][k];
  }
  return sign * a[n - 1][n - 1];
}

HermiteForm hermite_form(const ZMatrix& a) {
  int rows = static_cast<int>(a.size()), cols = rows ? static_cast<int>(a[0].size()) : 0;
  HermiteForm h{a, ZMatrix(rows, std::vector<mpz_class>(rows, 0)), {}};
  for (int i = 0; i < rows; ++i) h.U[i][i] = 1;
  auto& H = h.H;
  auto& U = h.U;
  auto addmul = [&](int dst, int src, const mpz_class& c) {  // row dst -= c row src
    for (int j = 0; j < cols; ++j) H[dst][j] -= c * H[src][j];
    for (int j = 0; j < rows; ++j) U[dst][j] -= c * U[src][j];
  };
  int r = 0;
  for (int c = 0; c < cols && r < rows; ++c) {
    // Euclid down the column until a single nonzero entry remains at row r
    for (;;) {
      int best = -1;
      for (int i = r; i < rows; ++i)
        if (H[i][c] != 0 && (best < 0 || abs(H[i][c]) < abs(H[best][c]))) best = i;
      if (best < 0) break;
      std::swap(H[r], H[best]);
      std::swap(U[r], U[best]);
      bool done = true;
      for (int i = r + 1; i < rows; ++i) {
        if (H[i][c] == 0) continue;
        mpz_class q;
        mpz_fdiv_q(q.get_mpz_t(), H[i][c].get_mpz_t(), H[r][c].get_mpz_t());
        addmul(i, r, q);
        if (H[i][c] != 0) done = false;
      }
      if (done) break;
    }
    if (H[r][c] == 0) continue;
    if (H[r][c] < 0) {
      for (auto& e : H[r]) e = -e;
      for (auto& e : U[r]) e = -e;
    }
    for (int i = 0; i < r; ++i) {
      mpz_class q;
      mpz_fdiv_q(q.get_mpz_t(), H[i][c].get_mpz_t(), H[r][c].get_mpz_t());
      if (q != 0) addmul(i, r, q);
    }
    h.pivots.push_back(c);
    ++r;
  }
  return h;
}

int rank(const ZMatrix& a) { return static_cast<int>(hermite_form(a).pivots.size()); }

std::vector<mpz_class> smith_invariants(const ZMatrix& in) {
  ZMatrix a = in;
  int rows = static_cast<int>(a.size()), cols = rows ? static_cast<int>(a[0].size()) : 0;
  std::vector<mpz_class> d;
  for (int t = 0; t < std::min(rows, cols); ++t) {
    // move a smallest nonzero entry of the trailing block to (t, t)
    for (;;) {
      int bi = -1, bj = -1;
      for (int i = t; i < rows; ++i)
        for (int j = t; j < cols; ++j)
          if (a[i][j] != 0 && (bi < 0 || abs(a[i][j]) < abs(a[bi][bj]))) bi = i, bj = j;
      if (bi < 0) goto finished;
      std::swap(a[t], a[bi]);
      for (auto& row : a) std::swap(row[t], row[bj]);
      bool clean = true;
      for (int i = t + 1; i < rows; ++i) {
        mpz_class q = a[i][t] / a[t][t];
        if (q != 0)
          for (int j = t; j < cols; ++j) a[i][j] -= q * a[t][j];
        if (a[i][t] != 0) clean = false;
      }
      for (int j = t + 1; j < cols; ++j) {
        mpz_class q = a[t][j] / a[t][t];
        if (q != 0)
          for (int i = t; i < rows; ++i) a[i][j] -= q * a[i][t];
        if (a[t][j] != 0) clean = false;
      }
      if (!clean) continue;
      // the pivot must divide the rest of the block
      int fi = -1;
      for (int i = t + 1; i < rows && fi < 0; ++i)
        for (int j = t + 1; j < cols; ++j)
          if (a[i][j] % a[t][t] != 0) {
            fi = i;
            break;
          }
      if (fi < 0) break;
      for (int j = t; j < cols; ++j) a[t][j] += a[fi][j];
    }
    d.push_back(abs(a[t][t]));
  }
finished:
  return d;
}

bool really_full_rank(const IntMatrix& b) {
  if (b.empty()) return true;
  auto d = smith_invariants(to_z(b));
  if (d.size() != b[0].size()) return false;
  return std::all_of(d.begin(), d.end(), [](const mpz_class& x) { return x == 1; });
}

std::optional<std::vector<long>> solve_integer_row(const IntMatrix& b, const std::vector<long>& t) {
  int rows = static_cast<int>(b.size());
  int cols = static_cast<int>(t.size());
  if (rows && static_cast<int>(b[0].size()) != cols) throw DimensionMismatch("row length does not match");
  HermiteForm h = hermite_form(to_z(b));
  // y H = t by forward substitution on the pivot columns, then x = y U
  std::vector<mpz_class> rest(t.begin(), t.end()), y(rows, 0);
  for (std::size_t r = 0; r < h.pivots.size(); ++r) {
    int c = h.pivots[r];
    if (rest[c] % h.H[r][c] != 0) return std::nullopt;
    y[r] = rest[c] / h.H[r][c];
    for (int j = 0; j < cols; ++j) rest[j] -= y[r] * h.H[r][j];
  }
  if (std::any_of(rest.begin(), rest.end(), [](const mpz_class& v) { return v != 0; })) return std::nullopt;
  std::vector<long> x(rows, 0);
  for (int j = 0; j < rows; ++j) {
    mpz_class s = 0;
    for (int r = 0; r < rows; ++r) s += y[r] * h.U[r][j];
    if (!s.fits_slong_p()) throw NotExact("solution does not fit a machine integer");
    x[j] = s.get_si();
  }
  return x;
}

IntMatrix WitnessMatrix::P() const {
  IntMatrix p;
  for (int i = n; i < n + m; ++i) p.emplace_back(R[i].begin(), R[i].begin() + n);
  return p;
}

IntMatrix WitnessMatrix::Q() const {
  IntMatrix q;
  for (int i = n; i < n + m; ++i) q.emplace_back(R[i].begin() + n, R[i].end());
  return q;
}

mpz_class WitnessMatrix::det_Q() const { return det(to_z(Q())); }

WitnessMatrix identity_witness(int n, int m) {
  WitnessMatrix w{n, m, IntMatrix(n + m, std::vector<long>(n + m, 0))};
  for (int i = 0; i < n + m; ++i) w.R[i][i] = 1;
  return w;
}

namespace {

bool block_shape(const WitnessMatrix& r) {
  int N = r.n + r.m;
  if (static_cast<int>(r.R.size()) != N) return false;
  for (auto& row : r.R)
    if (static_cast<int>(row.size()) != N) return false;
  for (int i = 0; i < r.n; ++i)
    for (int j = 0; j < N; ++j)
      if (r.R[i][j] != (i == j ? 1 : 0)) return false;
  return true;
}

IntMatrix product(const IntMatrix& a, const IntMatrix& b) {
  std::size_t cols = b.empty() ? 0 : b[0].size();
  IntMatrix c(a.size(), std::vector<long>(cols, 0));
  for (std::size_t i = 0; i < a.size(); ++i)
    for (std::size_t k = 0; k < b.size(); ++k)
      if (a[i][k])
        for (std::size_t j = 0; j < cols; ++j) c[i][j] += a[i][k] * b[k][j];
  return c;
}

void check_shapes(const ExtendedExchangeMatrix& src, const ExtendedExchangeMatrix& tgt) {
  if (src.n_mutable() != tgt.n_mutable() || src.n_frozen() != tgt.n_frozen())
    throw DimensionMismatch("exchange matrices have different shapes");
  for (int i = 0; i < src.n_mutable(); ++i)
    if (src.b[i] != tgt.b[i]) throw PrincipalMismatch("principal parts differ");
}

}  // namespace

bool verify_witness(const WitnessMatrix& r, const ExtendedExchangeMatrix& src, const ExtendedExchangeMatrix& tgt) {
  if (r.n != src.n_mutable() || r.m != src.n_frozen()) return false;
  if (r.n != tgt.n_mutable() || r.m != tgt.n_frozen()) return false;
  if (!block_shape(r)) return false;
  if (abs(r.det_Q()) != 1) return false;
  return product(r.R, src.b) == tgt.b;
}

WitnessMatrix compose(const WitnessMatrix& r2, const WitnessMatrix& r1) {
  if (r1.n != r2.n || r1.m != r2.m) throw DimensionMismatch("witnesses of different sizes");
  return {r1.n, r1.m, product(r2.R, r1.R)};
}

namespace {

using Row = std::vector<long>;

struct RankKey {
  long l1, linf;
  Row x;
  bool operator<(const RankKey& o) const { return std::tie(l1, linf, x) < std::tie(o.l1, o.linf, o.x); }
};

constexpr std::size_t kRowCap = 100000;
constexpr long kBoxCap = 60000000;
constexpr long kNodeCap = 3000000;

// Integer solutions of x B = t inside the box, best kRowCap by RankKey
// against the unit vector e_home.
struct RowCandidates {
  std::vector<Row> rows;
  bool truncated = false;
  bool box_too_large = false;
};

RowCandidates row_candidates(const IntMatrix& B, const Row& t, int home, long bound) {
  int N = static_cast<int>(B.size()), n = static_cast<int>(t.size());
  RowCandidates out;
  // RREF of the n x N system B^T x = t over Q, rows scaled to integers
  std::vector<std::vector<mpq_class>> a(n, std::vector<mpq_class>(N + 1));
  for (int c = 0; c < n; ++c) {
    for (int i = 0; i < N; ++i) a[c][i] = B[i][c];
    a[c][N] = t[c];
  }
  std::vector<int> piv;
  int r = 0;
  for (int c = 0; c < N && r < n; ++c) {
    int p = r;
    while (p < n && a[p][c] == 0) ++p;
    if (p == n) continue;
    std::swap(a[r], a[p]);
    mpq_class lead = a[r][c];
    for (auto& e : a[r]) e /= lead;
    for (int i = 0; i < n; ++i)
      if (i != r && a[i][c] != 0) {
        mpq_class f = a[i][c];
        for (int j = 0; j <= N; ++j) a[i][j] -= f * a[r][j];
      }
    piv.push_back(c);
    ++r;
  }
  for (int i = r; i < n; ++i)
    if (a[i][N] != 0) return out;  // inconsistent
  std::vector<int> free;
  for (int c = 0; c < N; ++c)
    if (std::find(piv.begin(), piv.end(), c) == piv.end()) free.push_back(c);
  long leaves = 1;
  for (std::size_t i = 0; i < free.size(); ++i) {
    leaves *= 2 * bound + 1;
    if (leaves > kBoxCap) {
      out.box_too_large = true;
      return out;
    }
  }
  // D_r x_{piv r} = E_r - sum_f e_{r f} x_f
  std::vector<long> D(r), E(r);
  std::vector<std::vector<long>> e(r, std::vector<long>(free.size()));
  for (int i = 0; i < r; ++i) {
    mpz_class l = 1;
    for (auto& v : a[i]) mpz_lcm(l.get_mpz_t(), l.get_mpz_t(), v.get_den_mpz_t());
    D[i] = l.get_si();
    E[i] = mpz_class(a[i][N] * l).get_si();
    for (std::size_t f = 0; f < free.size(); ++f) e[i][f] = mpz_class(a[i][free[f]] * l).get_si();
  }

  std::priority_queue<RankKey> best;  // max-heap: worst on top
  Row x(N, 0);
  std::vector<long> acc(E);  // E_r minus the free part chosen so far
  auto leaf = [&] {
    for (int i = 0; i < r; ++i) {
      if (acc[i] % D[i] != 0) return;
      long v = acc[i] / D[i];
      if (v > bound || v < -bound) return;
      x[piv[i]] = v;
    }
    RankKey k{0, 0, x};
    for (int j = 0; j < N; ++j) {
      long d = std::labs(x[j] - (j == home ? 1 : 0));
      k.l1 += d;
      k.linf = std::max(k.linf, d);
    }
    if (best.size() < kRowCap) {
      best.push(std::move(k));
    } else {
      out.truncated = true;
      if (k < best.top()) {
        best.pop();
        best.push(std::move(k));
      }
    }
  };
  auto rec = [&](auto&& self, std::size_t f) -> void {
    if (f == free.size()) return leaf();
    for (long v = -bound; v <= bound; ++v) {
      x[free[f]] = v;
      for (int i = 0; i < r; ++i) acc[i] -= e[i][f] * v;
      self(self, f + 1);
      for (int i = 0; i < r; ++i) acc[i] += e[i][f] * v;
    }
  };
  rec(rec, 0);
  std::vector<RankKey> sorted;
  while (!best.empty()) {
    sorted.push_back(best.top());
    best.pop();
  }
  std::reverse(sorted.begin(), sorted.end());
  for (auto& k : sorted) out.rows.push_back(std::move(k.x));
  return out;
}

// rows span a saturated sublattice of rank equal to their number
bool primitive(const IntMatrix& rows) {
  auto d = smith_invariants(to_z(rows));
  return d.size() == rows.size() && std::all_of(d.begin(), d.end(), [](const mpz_class& v) { return v == 1; });
}

}  // namespace

WitnessSearch find_witness(const ExtendedExchangeMatrix& src, const ExtendedExchangeMatrix& tgt, int bound) {
  check_shapes(src, tgt);
  int n = src.n_mutable(), m = src.n_frozen();
  WitnessSearch out;
  out.bound = bound;
  std::vector<std::vector<Row>> cand(m);
  bool truncated = false;
  for (int i = 0; i < m; ++i) {
    RowCandidates c = row_candidates(src.b, tgt.b[n + i], n + i, bound);
    if (c.box_too_large) {
      out.reason = "coefficient box too large to enumerate at bound " + std::to_string(bound);
      return out;
    }
    truncated |= c.truncated;
    if (c.rows.empty()) {
      out.reason = "frozen row " + std::to_string(i + 1) + " has no integer solution within bound " +
                   std::to_string(bound);
      return out;
    }
    cand[i] = std::move(c.rows);
  }
  IntMatrix qrows;
  std::vector<const Row*> chosen;
  bool capped = false;
  auto dfs = [&](auto&& self, int i) -> bool {
    if (i == m) return true;
    for (const Row& x : cand[i]) {
      if (++out.nodes > kNodeCap) {
        capped = true;
        return false;
      }
      qrows.emplace_back(x.begin() + n, x.end());
      if (primitive(qrows)) {
        chosen.push_back(&x);
        if (self(self, i + 1)) return true;
        chosen.pop_back();
      }
      qrows.pop_back();
      if (capped) return false;
    }
    return false;
  };
  if (dfs(dfs, 0)) {
    WitnessMatrix w = identity_witness(n, m);
    for (int i = 0; i < m; ++i) w.R[n + i] = *chosen[i];
    out.witness = w;
    return out;
  }
  if (capped)
    out.reason = "search node limit reached";
  else
    out.reason = "no witness with entries bounded by " + std::to_string(bound);
  if (truncated) out.reason += " (candidate lists truncated)";
  return out;
}

ExtendedExchangeMatrix mutate(const ExtendedExchangeMatrix& b, int c) {
  int n = b.n_mutable();
  if (c < 1 || c > n) throw DimensionMismatch("column out of range");
  int k = c - 1;
  ExtendedExchangeMatrix out = b;
  for (std::size_t i = 0; i < b.b.size(); ++i)
    for (int j = 0; j < n; ++j) {
      if (static_cast<int>(i) == k || j == k)
        out.b[i][j] = -b.b[i][j];
      else
        out.b[i][j] = b.b[i][j] + (std::labs(b.b[i][k]) * b.b[k][j] + b.b[i][k] * std::labs(b.b[k][j])) / 2;
    }
  return out;
}

WitnessSearch find_witness_up_to_mutation(const ExtendedExchangeMatrix& src, const ExtendedExchangeMatrix& tgt,
                                          int bound, int depth) {
  if (src.n_mutable() != tgt.n_mutable() || src.n_frozen() != tgt.n_frozen())
    throw DimensionMismatch("exchange matrices have different shapes");
  std::deque<std::pair<ExtendedExchangeMatrix, std::vector<int>>> queue{{tgt, {}}};
  std::set<IntMatrix> seen{tgt.b};
  long nodes = 0;
  bool principal_seen = false;
  while (!queue.empty()) {
    auto [t, seq] = queue.front();
    queue.pop_front();
    bool principal = true;
    for (int i = 0; i < src.n_mutable(); ++i) principal &= src.b[i] == t.b[i];
    if (principal) {
      principal_seen = true;
      WitnessSearch s = find_witness(src, t, bound);
      nodes += s.nodes;
      if (s.witness) {
        s.mutations = seq;
        s.nodes = nodes;
        return s;
      }
    }
    if (static_cast<int>(seq.size()) == depth) continue;
    for (int c = 1; c <= t.n_mutable(); ++c) {
      ExtendedExchangeMatrix u = mutate(t, c);
      if (!seen.insert(u.b).second) continue;
      auto next = seq;
      next.push_back(c);
      queue.push_back({u, next});
    }
  }
  WitnessSearch out;
  out.bound = bound;
  out.nodes = nodes;
  out.reason = principal_seen ? "no witness within bound " + std::to_string(bound) + " up to mutation depth " +
                                    std::to_string(depth)
                              : "principal parts never agree up to mutation depth " + std::to_string(depth);
  return out;
}

ExtendedExchangeMatrix direct_sum(const ExtendedExchangeMatrix& a, const ExtendedExchangeMatrix& b) {
  int na = a.n_mutable(), nb = b.n_mutable(), cols = na + nb;
  int shift = static_cast<int>(a.row_labels.size());
  ExtendedExchangeMatrix s;
  auto put = [&](const ExtendedExchangeMatrix& x, int i, int offset, int label_shift) {
    std::vector<long> row(cols, 0);
    for (int j = 0; j < x.n_mutable(); ++j) row[offset + j] = x.b[i][j];
    s.b.push_back(row);
    s.row_labels.push_back(x.row_labels[i] + label_shift);
  };
  for (int i = 0; i < na; ++i) put(a, i, 0, 0);
  for (int i = 0; i < nb; ++i) put(b, i, na, shift);
  for (int i = na; i < static_cast<int>(a.b.size()); ++i) put(a, i, 0, 0);
  for (int i = nb; i < static_cast<int>(b.b.size()); ++i) put(b, i, na, shift);
  for (int c : a.col_labels) s.col_labels.push_back(c);
  for (int c : b.col_labels) s.col_labels.push_back(c + shift);
  return s;
}

std::map<int, LaurentMonomial> variable_map_from_witness(const WitnessMatrix& r, const ExtendedExchangeMatrix& src,
                                                         const ExtendedExchangeMatrix& tgt, char prefix) {
  int N = r.n + r.m;
  if (static_cast<int>(src.row_labels.size()) != N || static_cast<int>(tgt.row_labels.size()) != N)
    throw DimensionMismatch("witness and exchange matrices have different sizes");
  std::map<int, LaurentMonomial> out;
  for (int j = 0; j < N; ++j) {
    LaurentMonomial mono;
    for (int i = 0; i < N; ++i)
      if (r.R[i][j]) mono.exps[make_var(prefix, tgt.row_labels[i])] = static_cast<int>(r.R[i][j]);
    out[src.row_labels[j]] = mono;
  }
  return out;
}

ProductWitness dbs_product_witness(const BraidWord& b, int r1) {
  if (r1 < 1 || r1 >= b.size()) throw DimensionMismatch("r1 must split beta into two nonempty words");
  BraidWord b1 = b.prefix(r1), b2 = b.suffix_from(r1);
  Quiver q1 = quiver_from_braid(b1), q2 = quiver_from_braid(b2);
  int r = b.size();
  Quiver prod(r);
  for (auto& a : q1.arrows()) prod.add_arrows(a[0], a[1], a[2]);
  for (auto& a : q2.arrows()) prod.add_arrows(a[0] + r1, a[1] + r1, a[2]);
  for (int f : q1.frozen()) prod.set_frozen(f);
  for (int f : q2.frozen()) prod.set_frozen(f + r1);
  auto last1 = last_positions(b1);
  std::vector<int> fz;
  for (int s = 1; s < b.k(); ++s)
    if (last1[s]) fz.push_back(last1[s]);
  Quiver open = freeze(quiver_from_braid(b), fz);

  ProductWitness out{extended_exchange_matrix(prod), extended_exchange_matrix(open), {}};
  if (out.product.row_labels != out.open.row_labels)
    throw PatternMismatch("product and open seeds freeze different vertices");
  int n = out.product.n_mutable(), m = out.product.n_frozen();
  out.R = {n, m, IntMatrix(n + m, std::vector<long>(n + m, 0))};
  std::map<int, int> row_of;
  for (int i = 0; i < n + m; ++i) row_of[out.open.row_labels[i]] = i;
  for (int j = 0; j < n + m; ++j) {
    int label = out.product.row_labels[j];
    out.R.R[row_of[label]][j] += 1;
    if (label > r1)
      for (auto& [v, e] : splice_monomial_in_x(b, r1, label).exps) out.R.R[row_of[var_index(v)]][j] += e;
  }
  return out;
}

CheckReport verify_product_witness(const BraidWord& b, int r1, int bound) {
  CheckReport rep{"product-witness", 1, {}, {}};
  ProductWitness pw;
  try {
    pw = dbs_product_witness(b, r1);
  } catch (const Error& e) {
    rep.fail(e.what());
    return rep;
  }
  if (!verify_witness(pw.R, pw.product, pw.open)) rep.fail("transported witness does not verify");
  WitnessSearch s = find_witness(pw.product, pw.open, bound);
  if (!s.witness)
    rep.fail("find_witness: " + s.reason);
  else if (!verify_witness(*s.witness, pw.product, pw.open))
    rep.fail("found witness does not verify");
  CheckReport fb = frozen_bookkeeping(b, r1);
  for (auto& f : fb.failures) rep.fail(f);
  // the witness pairs the frozen rows of both sides one to one
  int f_open = pw.open.n_frozen();
  rep.data = fb.data;
  rep.data.push_back({"witness_frozen", std::to_string(f_open)});
  rep.data.push_back({"det_Q", pw.R.det_Q().get_str()});
  if (fb.data.size() >= 4 && std::to_string(f_open) != fb.data[3].second) rep.fail("witness frozen count mismatch");
  return rep;
}

}  // namespace bsp
