#include "braidsplice/cluster.hpp"

#include <algorithm>
#include <map>

#include "braidsplice/symmat.hpp"

namespace bsp {

std::size_t Quiver::idx(int i, int j) const {
  if (i < 1 || i > n_ || j < 1 || j > n_) throw DimensionMismatch("vertex out of range");
  return static_cast<std::size_t>(i - 1) * n_ + (j - 1);
}

void Quiver::add_arrows(int i, int j, int mult) {
  if (i == j) throw DimensionMismatch("quivers have no loops");
  b_[idx(i, j)] += mult;
  b_[idx(j, i)] -= mult;
}

std::vector<int> Quiver::frozen() const {
  std::vector<int> v;
  for (int i = 1; i <= n_; ++i)
    if (frozen_[i - 1]) v.push_back(i);
  return v;
}

std::vector<int> Quiver::mutable_vertices() const {
  std::vector<int> v;
  for (int i = 1; i <= n_; ++i)
    if (!frozen_[i - 1]) v.push_back(i);
  return v;
}

std::vector<std::array<int, 3>> Quiver::arrows() const {
  std::vector<std::array<int, 3>> a;
  for (int i = 1; i <= n_; ++i)
    for (int j = 1; j <= n_; ++j)
      if (b(i, j) > 0) a.push_back({i, j, b(i, j)});
  return a;
}

std::vector<int> last_positions(const BraidWord& b) {
  std::vector<int> last(b.k(), 0);
  for (int j = 1; j <= b.size(); ++j) last[b[j]] = j;
  return last;
}

namespace {
// next appearance of the same color after each position, 0 if none
std::vector<int> next_same(const BraidWord& b) {
  std::vector<int> nxt(b.size() + 1, 0), seen(b.k(), 0);
  for (int j = b.size(); j >= 1; --j) {
    nxt[j] = seen[b[j]];
    seen[b[j]] = j;
  }
  return nxt;
}

void freeze_lasts(Quiver& q, const BraidWord& b) {
  auto last = last_positions(b);
  for (int s = 1; s < b.k(); ++s)
    if (last[s]) q.set_frozen(last[s]);
}
}  // namespace

Quiver quiver_from_braid(const BraidWord& b) {
  int r = b.size();
  Quiver q(r);
  auto nxt = next_same(b);
  for (int j = 1; j <= r; ++j)
    if (nxt[j]) q.add_arrows(j, nxt[j]);
  for (int j1 = 1; j1 <= r; ++j1) {
    if (!nxt[j1]) continue;
    for (int j2 = j1 + 1; j2 < nxt[j1]; ++j2) {
      if (std::abs(b[j2] - b[j1]) != 1) continue;
      if (nxt[j2] == 0 || nxt[j2] > nxt[j1]) q.add_arrows(j2, j1);
    }
  }
  freeze_lasts(q, b);
  return q;
}

Quiver quiver_from_braid_sweep(const BraidWord& b) {
  int r = b.size(), k = b.k();
  Quiver q(r);
  std::vector<int> open(k + 1, 0);  // latest letter of each color so far
  for (int j = 1; j <= r; ++j) {
    int c = b[j];
    if (int j1 = open[c]) {
      // the region right of j1 closes here; neighbours opened inside it and
      // still open point back to j1
      q.add_arrows(j1, j);
      for (int d : {c - 1, c + 1})
        if (d >= 1 && d < k && open[d] > j1) q.add_arrows(open[d], j1);
    }
    open[c] = j;
  }
  freeze_lasts(q, b);
  return q;
}

Seed dbs_seed(const BraidWord& b, const std::vector<Var>& vars) {
  if (static_cast<int>(vars.size()) != b.size()) throw DimensionMismatch("one variable per letter required");
  Seed s{quiver_from_braid(b), {}};
  SymMatrix m = SymMatrix::identity(b.k());
  for (int j = 1; j <= b.size(); ++j) {
    int i = b[j] - 1;
    RationalFunction z = RationalFunction::var(vars[j - 1]);
    for (int r = 0; r < b.k(); ++r) {
      RationalFunction a = m(r, i), c = m(r, i + 1);
      m(r, i) = a * z + c;
      m(r, i + 1) = -a;
    }
    s.x.push_back(minor(m, interval(1, b[j]), interval(1, b[j])));
  }
  return s;
}

Seed dbs_seed(const BraidWord& b) { return dbs_seed(b, var_range('z', 1, b.size())); }

Quiver mutate(const Quiver& q, int v) {
  if (q.is_frozen(v)) throw FrozenVertex("vertex " + std::to_string(v) + " is frozen");
  Quiver out(q.n());
  for (int f : q.frozen()) out.set_frozen(f);
  for (int i = 1; i <= q.n(); ++i)
    for (int j = i + 1; j <= q.n(); ++j) {
      int bij;
      if (i == v || j == v)
        bij = -q.b(i, j);
      else
        bij = q.b(i, j) + (std::abs(q.b(i, v)) * q.b(v, j) + q.b(i, v) * std::abs(q.b(v, j))) / 2;
      if (bij) out.add_arrows(i, j, bij);
    }
  return out;
}

Quiver mutate_by_arrows(const Quiver& q, int v) {
  if (q.is_frozen(v)) throw FrozenVertex("vertex " + std::to_string(v) + " is frozen");
  // multigraph as a count of arrows per ordered pair
  std::map<std::pair<int, int>, int> cnt;
  for (auto& a : q.arrows()) cnt[{a[0], a[1]}] += a[2];
  std::map<std::pair<int, int>, int> next = cnt;
  for (auto& [in, m1] : cnt) {
    if (in.second != v) continue;
    for (auto& [out, m2] : cnt)
      if (out.first == v && out.second != in.first) next[{in.first, out.second}] += m1 * m2;
  }
  std::map<std::pair<int, int>, int> rev;
  for (auto& [e, m] : next) {
    if (e.first == v || e.second == v)
      rev[{e.second, e.first}] += m;
    else
      rev[e] += m;
  }
  Quiver out(q.n());
  for (int f : q.frozen()) out.set_frozen(f);
  // 2-cycle cancellation happens in the signed sum
  for (auto& [e, m] : rev)
    if (m) out.add_arrows(e.first, e.second, m);
  return out;
}

namespace {
RationalFunction power(const RationalFunction& x, int e) {
  RationalFunction r(1);
  for (int i = 0; i < e; ++i) r *= x;
  return r;
}
}  // namespace

Seed mutate(const Seed& s, int v) {
  const Quiver& q = s.quiver;
  if (q.is_frozen(v)) throw FrozenVertex("vertex " + std::to_string(v) + " is frozen");
  RationalFunction in(1), out(1);
  for (int j = 1; j <= q.n(); ++j) {
    if (q.b(j, v) > 0) in *= power(s.var(j), q.b(j, v));
    if (q.b(v, j) > 0) out *= power(s.var(j), q.b(v, j));
  }
  Seed t{mutate(q, v), s.x};
  t.x[v - 1] = (in + out) / s.var(v);
  return t;
}

RationalFunction exchange_ratio(const Seed& s, int v) {
  const Quiver& q = s.quiver;
  if (q.is_frozen(v)) throw FrozenVertex("vertex " + std::to_string(v) + " is frozen");
  RationalFunction r(1);
  for (int j = 1; j <= q.n(); ++j) {
    int e = q.b(j, v);
    if (e > 0) r *= power(s.var(j), e);
    if (e < 0) r /= power(s.var(j), -e);
  }
  return r;
}

Quiver freeze(Quiver q, const std::vector<int>& vertices) {
  for (int v : vertices) q.set_frozen(v);
  return q;
}

Seed freeze(Seed s, const std::vector<int>& vertices) {
  s.quiver = freeze(std::move(s.quiver), vertices);
  return s;
}

ExtendedExchangeMatrix extended_exchange_matrix(const Quiver& q) {
  ExtendedExchangeMatrix e;
  e.col_labels = q.mutable_vertices();
  e.row_labels = e.col_labels;
  for (int f : q.frozen()) e.row_labels.push_back(f);
  for (int i : e.row_labels) {
    std::vector<long> row;
    for (int j : e.col_labels) row.push_back(q.b(i, j));
    e.b.push_back(row);
  }
  return e;
}

std::vector<LaurentMonomial> frozen_diag_units(const BraidWord& b) {
  auto last = last_positions(b);
  auto x = [&](int s) {
    LaurentMonomial m;
    if (s >= 1 && s < b.k() && last[s]) m.exps[make_var('x', last[s])] = 1;
    return m;
  };
  std::vector<LaurentMonomial> u;
  for (int s = 1; s <= b.k(); ++s) u.push_back(x(s) * x(s - 1).inverse());
  return u;
}

bool mutable_part_is_union(const Quiver& q, const std::vector<std::pair<Quiver, int>>& blocks) {
  // block vertex v sits at q-vertex v + offset
  std::vector<int> owner(q.n() + 1, -1);
  for (std::size_t t = 0; t < blocks.size(); ++t) {
    const auto& [p, off] = blocks[t];
    for (int v : p.mutable_vertices()) {
      if (v + off > q.n() || owner[v + off] != -1) return false;
      owner[v + off] = static_cast<int>(t);
    }
  }
  for (int v = 1; v <= q.n(); ++v)
    if ((owner[v] != -1) == q.is_frozen(v)) return false;
  for (int i = 1; i <= q.n(); ++i)
    for (int j = 1; j <= q.n(); ++j) {
      if (owner[i] == -1 || owner[j] == -1) continue;
      int expect = 0;
      if (owner[i] == owner[j]) {
        const auto& [p, off] = blocks[owner[i]];
        expect = p.b(i - off, j - off);
      }
      if (q.b(i, j) != expect) return false;
    }
  return true;
}

}  // namespace bsp
