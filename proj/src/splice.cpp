#include "braidsplice/splice.hpp"

#include <numeric>

namespace bsp {

namespace {

void check_split(const BraidWord& b, int r1) {
  if (r1 < 1 || r1 >= b.size()) throw DimensionMismatch("split index must satisfy 1 <= r1 < length");
}

LaurentMonomial power(const LaurentMonomial& m, int e) {
  LaurentMonomial r;
  LaurentMonomial base = e < 0 ? m.inverse() : m;
  for (int i = 0; i < std::abs(e); ++i) r *= base;
  return r;
}

LaurentMonomial x_var(int j) {
  LaurentMonomial m;
  m.exps[make_var('x', j)] = 1;
  return m;
}

std::string point_str(const Point& p) {
  std::string s = "(";
  for (std::size_t i = 0; i < p.size(); ++i) s += (i ? ", " : "") + p[i].str();
  return s + ")";
}

Point concat(Point a, const Point& b) {
  a.insert(a.end(), b.begin(), b.end());
  return a;
}

// LU of B_word(z) at a point, NotInDBS when a principal minor vanishes
LUPair<Rational> point_lu(const BraidWord& b, const Point& z) {
  try {
    return lu_decompose(braid_word_matrix<Rational>(b, z));
  } catch (const SingularPrincipalMinor& e) {
    throw NotInDBS("principal minor " + std::to_string(e.index) + " vanishes");
  }
}

QMatrix w0_signed(int k) { return signed_perm_matrix<Rational>(delta_word(k)); }

// point of U_{r1}(beta): principal minors of B_beta and B_beta1 nonzero
Point dbs_chart_point(Sampler& s, const BraidWord& b, int r1) {
  for (int t = 0; t < 64; ++t) {
    Point z = s.dbs_point(b);
    if (in_dbs(Point(z.begin(), z.begin() + r1), b.prefix(r1))) return z;
  }
  throw NotInChart("no point of U_r1 found in 64 draws");
}

}  // namespace

SpliceWitness dbs_splice_forward(const BraidWord& b, int r1) {
  check_split(b, r1);
  SpliceWitness w;
  w.beta = b;
  w.r1 = r1;
  auto vars = var_range('z', 1, b.size());
  SymMatrix m1 = braid_word_matrix(b.prefix(r1), std::vector<Var>(vars.begin(), vars.begin() + r1));
  auto lu = lu_decompose(m1);
  w.L1 = lu.L;
  w.U1 = lu.U;
  std::vector<RationalFunction> zr;
  for (int j = r1; j < b.size(); ++j) zr.push_back(RationalFunction::var(vars[j]));
  auto sl = slide_upper_through(w.U1, b.suffix_from(r1), zr);
  w.zprime = std::move(sl.z);
  w.U1_out = std::move(sl.U);
  return w;
}

std::pair<Point, Point> dbs_splice_forward(const BraidWord& b, int r1, const Point& z) {
  check_split(b, r1);
  if (static_cast<int>(z.size()) != b.size()) throw DimensionMismatch("one value per letter required");
  Point zL(z.begin(), z.begin() + r1), zR(z.begin() + r1, z.end());
  if (!in_dbs(z, b)) throw NotInDBS("point is not in BS(beta)");
  auto lu = point_lu(b.prefix(r1), zL);
  return {zL, slide_upper_through(lu.U, b.suffix_from(r1), zR).z};
}

Point dbs_splice_inverse(const BraidWord& b, int r1, const Point& zL, const Point& zRprime) {
  check_split(b, r1);
  BraidWord b1 = b.prefix(r1), b2 = b.suffix_from(r1);
  if (static_cast<int>(zL.size()) != b1.size() || static_cast<int>(zRprime.size()) != b2.size())
    throw DimensionMismatch("point sizes do not match the split");
  if (!in_dbs(zRprime, b2)) throw NotInDBS("second point is not in BS(beta2)");
  auto lu = point_lu(b1, zL);
  return concat(zL, slide_upper_through(inverse(lu.U), b2, zRprime).z);
}

LaurentMonomial splice_monomial(const BraidWord& b, int r1, int l) {
  if (l <= r1 || l > b.size()) throw DimensionMismatch("need r1 < l <= length");
  Permutation pi = word_permutation(b.slice(r1 + 1, l));
  LaurentMonomial m;
  for (int t = 1; t <= b[l]; ++t) m.exps[make_var('u', pi(t))] = -1;
  return m;
}

LaurentMonomial splice_monomial_by_strands(const BraidWord& b, int r1, int l) {
  if (l <= r1 || l > b.size()) throw DimensionMismatch("need r1 < l <= length");
  // walk right to left from just after crossing l, tracking where each
  // strand sits; strand t ends at label[t] on the left edge of beta2
  std::vector<int> pos(b.k() + 1);
  std::iota(pos.begin(), pos.end(), 0);
  for (int j = l; j > r1; --j)
    for (int t = 1; t <= b.k(); ++t) {
      if (pos[t] == b[j])
        pos[t] = b[j] + 1;
      else if (pos[t] == b[j] + 1)
        pos[t] = b[j];
    }
  LaurentMonomial m;
  for (int t = 1; t <= b[l]; ++t) m.exps[make_var('u', pos[t])] = -1;
  return m;
}

LaurentMonomial splice_monomial_in_x(const BraidWord& b, int r1, int l) {
  auto u = frozen_diag_units(b.prefix(r1));
  LaurentMonomial out;
  for (auto& [v, e] : splice_monomial(b, r1, l).exps) out *= power(u[var_index(v) - 1], e);
  return out;
}

CheckReport verify_variable_transport(const BraidWord& b, int r1) {
  check_split(b, r1);
  CheckReport rep{"transport", 0, {}, {}};
  BraidWord b1 = b.prefix(r1), b2 = b.suffix_from(r1);
  Seed big = dbs_seed(b);
  Seed s1 = dbs_seed(b1);
  for (int j = 1; j <= r1; ++j) {
    ++rep.instances;
    if (s1.var(j) != big.var(j)) rep.fail("x" + std::to_string(j) + ": " + (s1.var(j) - big.var(j)).str());
  }
  SpliceWitness w = dbs_splice_forward(b, r1);
  // slide identity and the permuted diagonal
  SymMatrix lhs = w.U1 * braid_word_matrix(b2, var_range('z', r1 + 1, b2.size()));
  SymMatrix rhs = braid_word_matrix<RationalFunction>(b2, w.zprime) * w.U1_out;
  ++rep.instances;
  if (lhs != rhs) rep.fail("slide identity");
  Permutation pi = word_permutation(b2);
  for (int t = 1; t <= b.k(); ++t)
    if (w.U1_out(t - 1, t - 1) != w.U1(pi(t) - 1, pi(t) - 1)) rep.fail("diagonal entry " + std::to_string(t));

  auto xsub = [&](Var v) { return big.var(var_index(v)); };
  SymMatrix m = SymMatrix::identity(b.k());
  for (int l = r1 + 1; l <= b.size(); ++l) {
    int i = b[l] - 1;
    const RationalFunction& z = w.zprime[l - r1 - 1];
    for (int row = 0; row < b.k(); ++row) {
      RationalFunction a = m(row, i), c = m(row, i + 1);
      m(row, i) = a * z + c;
      m(row, i + 1) = -a;
    }
    RationalFunction pulled = minor(m, interval(1, b[l]), interval(1, b[l]));
    RationalFunction expect = splice_monomial_in_x(b, r1, l).substitute(xsub) * big.var(l);
    ++rep.instances;
    if (pulled != expect) rep.fail("x'" + std::to_string(l) + ": residual " + (pulled - expect).str());
    rep.data.push_back({"m" + std::to_string(l), splice_monomial(b, r1, l).str()});
  }
  return rep;
}

CheckReport verify_exchange_ratios(const BraidWord& b, int r1, const std::vector<int>& vertices) {
  check_split(b, r1);
  CheckReport rep{"exchange-ratios", 0, {}, {}};
  BraidWord b1 = b.prefix(r1), b2 = b.suffix_from(r1);
  auto last1 = last_positions(b1);
  std::vector<int> fz;
  for (int s = 1; s < b.k(); ++s)
    if (last1[s]) fz.push_back(last1[s]);
  Quiver open = freeze(quiver_from_braid(b), fz);
  Quiver q1 = quiver_from_braid(b1), q2 = quiver_from_braid(b2);

  // transported product-seed variables, as monomials in the x_j of beta
  std::vector<LaurentMonomial> image(b.size() + 1);
  for (int j = 1; j <= b.size(); ++j)
    image[j] = j <= r1 ? x_var(j) : splice_monomial_in_x(b, r1, j) * x_var(j);
  auto product_b = [&](int i, int j) {
    if (i <= r1 && j <= r1) return q1.b(i, j);
    if (i > r1 && j > r1) return q2.b(i - r1, j - r1);
    return 0;
  };

  std::vector<int> vs = vertices.empty() ? open.mutable_vertices() : vertices;
  for (int v : vs) {
    ++rep.instances;
    if (open.is_frozen(v)) {
      rep.fail("vertex " + std::to_string(v) + " is frozen in the open seed");
      continue;
    }
    bool frozen_in_product = v <= r1 ? q1.is_frozen(v) : q2.is_frozen(v - r1);
    if (frozen_in_product) {
      rep.fail("vertex " + std::to_string(v) + " is frozen in the product seed");
      continue;
    }
    LaurentMonomial yo, yp;
    for (int j = 1; j <= b.size(); ++j) {
      if (j == v) continue;
      yo *= power(x_var(j), open.b(j, v));
      yp *= power(image[j], product_b(j, v));
    }
    if (yo.to_rf() != yp.to_rf()) rep.fail("vertex " + std::to_string(v) + ": " + yo.str() + " vs " + yp.str());
    rep.data.push_back({"y" + std::to_string(v), yo.str()});
  }
  return rep;
}

CheckReport frozen_bookkeeping(const BraidWord& b, int r1) {
  check_split(b, r1);
  CheckReport rep{"frozen-inequality", 0, {}, {}};
  BraidWord b1 = b.prefix(r1), b2 = b.suffix_from(r1);
  auto nf = [](const BraidWord& w) { return static_cast<int>(quiver_from_braid(w).frozen().size()); };
  int f = nf(b), f1 = nf(b1), f2 = nf(b2);
  auto last = last_positions(b), last1 = last_positions(b1);
  std::vector<int> fz;
  int extra = 0;
  for (int s = 1; s < b.k(); ++s)
    if (last1[s]) {
      fz.push_back(last1[s]);
      extra += last1[s] != last[s];
    }
  int fo = static_cast<int>(freeze(quiver_from_braid(b), fz).frozen().size());
  rep.instances = 1;
  if (fo != f + extra) rep.fail("open frozen count " + std::to_string(fo) + " != f + new frozens");
  if (fo != f1 + f2) rep.fail("open frozen count " + std::to_string(fo) + " != f1 + f2");
  if (f1 + f2 < f) rep.fail("f1 + f2 < f");
  rep.data = {{"f", std::to_string(f)}, {"f1", std::to_string(f1)}, {"f2", std::to_string(f2)},
              {"f_open", std::to_string(fo)}};
  return rep;
}

Point phi1(const BraidWord& b, const Point& z) {
  if (!in_dbs(z, b)) throw NotInDBS("point is not in BS(beta)");
  return concat(z, complete_to_w0(z, b, delta_word(b.k())));
}

Point phi2(const BraidWord& b, const Point& z) {
  if (static_cast<int>(z.size()) != b.size()) throw DimensionMismatch("one value per letter required");
  auto lu = point_lu(b, z);
  // B_Delta(p) = w0 L^{-1} with the signed lift B_Delta(0) of w0
  return concat(cell_coordinates(w0_signed(b.k()) * inverse(lu.L), delta_word(b.k())), z);
}

std::pair<BraidWord, BraidWord> braid_splice_targets(const BraidWord& b, int r1, const Permutation& w) {
  BraidWord lw = lift_with_prefix(w);
  int lw_len = w.length();
  return {lw.suffix_from(lw_len) * b.prefix(r1), b.suffix_from(r1) * lw.prefix(lw_len)};
}

namespace {

// signed lift of w0 w w0 and the unit lower L with B_{beta1}(zL) = P L U
struct SignedLU {
  QMatrix P, L, U;
};

SignedLU signed_generalized_lu(const QMatrix& m, const Permutation& w) {
  int k = m.rows();
  Permutation w0 = Permutation::longest(k);
  LUPair<Rational> lu;
  try {
    lu = generalized_lu(m, w0 * w);
  } catch (const SingularChartMinor&) {
    throw NotInChart("flag is not transverse to F(w0 w)");
  }
  Permutation p = w0 * w * w0;
  QMatrix P = signed_perm_matrix<Rational>(positive_lift(p));
  // P = Pplain S with S = diag(+-1)
  QMatrix S = perm_matrix<Rational>(p).transpose() * P;
  return {P, S * lu.L * S, S * lu.U};
}

}  // namespace

std::pair<Point, Point> braid_splice_forward(const BraidWord& b, int r1, const Permutation& w, const Point& z) {
  check_split(b, r1);
  int k = b.k();
  if (w.k() != k) throw DimensionMismatch("permutation size differs from braid index");
  if (!chart_membership(z, b, r1, w)) throw NotInChart("point is outside U_{r1,w}");
  BraidWord b1 = b.prefix(r1), b2 = b.suffix_from(r1);
  BraidWord lw = lift_with_prefix(w);
  int lw_len = w.length();
  BraidWord lift_w = lw.prefix(lw_len), gamma = lw.suffix_from(lw_len);
  Point zL(z.begin(), z.begin() + r1), zR(z.begin() + r1, z.end());

  QMatrix full = braid_word_matrix<Rational>(b, z);
  Point y = back_to_standard(full, lw);
  Point yR(y.begin(), y.begin() + lw_len), yL(y.begin() + lw_len, y.end());
  QMatrix D = full * braid_word_matrix<Rational>(lw, y);

  SignedLU lu = signed_generalized_lu(braid_word_matrix<Rational>(b1, zL), w);
  Point pt2 = slide_upper_through(lu.U, b2 * lift_w, concat(zR, yR)).z;

  QMatrix g1 = w0_signed(k) * inverse(lu.P * lu.L);
  QMatrix N0 = g1 * full * braid_word_matrix<Rational>(lift_w, yR);
  // F^j = F(D D^{-1} B_{beta1<=j}(zL)), rewritten from the representative D
  Point z1 = slide_upper_through(inverse(D), b1, zL).z;
  Point pt1 = slide_upper_through(N0, gamma * b1, concat(yL, z1)).z;
  return {pt1, pt2};
}

Point braid_splice_inverse(const BraidWord& b, int r1, const Permutation& w, const Point& pt1, const Point& pt2) {
  check_split(b, r1);
  int k = b.k();
  BraidWord b1 = b.prefix(r1), b2 = b.suffix_from(r1);
  auto [t1, t2] = braid_splice_targets(b, r1, w);
  if (static_cast<int>(pt1.size()) != t1.size() || static_cast<int>(pt2.size()) != t2.size())
    throw DimensionMismatch("point sizes do not match the target braids");
  if (!in_braid_variety(pt1, t1) || !in_braid_variety(pt2, t2)) throw NotOnVariety("input is not on the target varieties");
  int glen = t1.size() - r1;
  BraidWord gamma = t1.prefix(glen);
  Point a(pt1.begin(), pt1.begin() + glen), bb(pt1.begin() + glen, pt1.end());
  Point c(pt2.begin(), pt2.begin() + b2.size());

  QMatrix sw0 = w0_signed(k), w0 = perm_matrix<Rational>(Permutation::longest(k));
  QMatrix M1 = inverse(sw0) * braid_word_matrix<Rational>(gamma, a);
  QMatrix M2inv = inverse(braid_word_matrix<Rational>(b2, c));
  // M2^{-1} M1 = U' w0 V' with U' = w0 L'' w0 unipotent
  LUPair<Rational> lu;
  try {
    lu = lu_decompose(w0 * M2inv * M1);
  } catch (const SingularPrincipalMinor&) {
    throw NotOnVariety("the two flags are not transverse");
  }
  QMatrix g = inverse(lu.L) * w0 * M2inv;
  Permutation p = Permutation::longest(k) * w * Permutation::longest(k);
  QMatrix P = signed_perm_matrix<Rational>(positive_lift(p));
  QMatrix X = inverse(P) * g;
  if (!X.is_lower_triangular()) throw NotOnVariety("translate is not in the expected Bruhat cell");
  std::vector<Rational> t;
  for (auto& d : X.diag()) t.push_back(d.inverse());
  QMatrix h = P * QMatrix::diagonal(t) * X;

  QMatrix S0 = h * M1;
  if (!S0.is_upper_triangular()) throw NotExact("normalized translate does not fix the standard flag");
  Point zL = slide_upper_through(S0, b1, bb).z;
  QMatrix X2 = inverse(braid_word_matrix<Rational>(b1, zL)) * h;
  if (!X2.is_upper_triangular()) throw NotExact("flag F^{r1} mismatch");
  return concat(zL, slide_upper_through(X2, b2, c).z);
}

CheckReport verify_compat_diagrams(const BraidWord& b, int r1, int samples, std::uint64_t seed) {
  check_split(b, r1);
  CheckReport rep{"compat-diagrams", 0, {}, {}};
  int k = b.k(), L = k * (k - 1) / 2;
  BraidWord delta = delta_word(k);
  BraidWord b1 = b.prefix(r1), b2 = b.suffix_from(r1);
  Sampler s(seed);
  for (int n = 0; n < samples; ++n) {
    Point z = dbs_chart_point(s, b, r1);
    auto [zL, zRp] = dbs_splice_forward(b, r1, z);
    std::pair<Point, Point> expect{phi2(b1, zL), phi1(b2, zRp)};
    auto d1 = braid_splice_forward(b * delta, r1, Permutation::identity(k), phi1(b, z));
    auto d2 = braid_splice_forward(delta * b, r1 + L, Permutation::longest(k), phi2(b, z));
    rep.instances += 2;
    if (d1 != expect) rep.fail("first diagram at z = " + point_str(z));
    if (d2 != expect) rep.fail("second diagram at z = " + point_str(z));
  }
  return rep;
}

CheckReport verify_dbs_round_trips(const BraidWord& b, int r1, int samples, std::uint64_t seed) {
  check_split(b, r1);
  CheckReport rep{"dbs-round-trip", 0, {}, {}};
  Sampler s(seed);
  BraidWord b1 = b.prefix(r1), b2 = b.suffix_from(r1);
  for (int n = 0; n < samples; ++n) {
    Point z = dbs_chart_point(s, b, r1);
    auto [zL, zRp] = dbs_splice_forward(b, r1, z);
    ++rep.instances;
    if (dbs_splice_inverse(b, r1, zL, zRp) != z) rep.fail("inverse after forward at " + point_str(z));
    // forward after inverse, from an independent point of BS(beta1) x BS(beta2)
    Point a = s.dbs_point(b1), c = s.dbs_point(b2);
    Point back = dbs_splice_inverse(b, r1, a, c);
    ++rep.instances;
    if (!in_dbs(back, b) || dbs_splice_forward(b, r1, back) != std::pair<Point, Point>{a, c})
      rep.fail("forward after inverse at " + point_str(a) + " " + point_str(c));
  }
  return rep;
}

CheckReport verify_braid_round_trips(const BraidWord& b, int r1, int samples, std::uint64_t seed) {
  check_split(b, r1);
  CheckReport rep{"braid-round-trip", 0, {}, {}};
  Sampler s(seed);
  int charts = 0;
  for (const auto& w : Permutation::all(b.k())) {
    Point first;
    try {
      first = s.chart_point(b, r1, w);
    } catch (const NotInChart&) {
      rep.data.push_back({"chart " + w.str(), "empty"});
      continue;
    }
    ++charts;
    auto [t1, t2] = braid_splice_targets(b, r1, w);
    for (int n = 0; n < samples; ++n) {
      Point z = n == 0 ? first : s.chart_point(b, r1, w);
      auto [p1, p2] = braid_splice_forward(b, r1, w, z);
      ++rep.instances;
      if (!in_braid_variety(p1, t1) || !in_braid_variety(p2, t2)) {
        rep.fail("w = " + w.str() + ": output off the target varieties at " + point_str(z));
        continue;
      }
      Point back = braid_splice_inverse(b, r1, w, p1, p2);
      if (back != z) rep.fail("w = " + w.str() + ": inverse after forward at " + point_str(z));
      // forward after inverse, from independent points of the two factors
      Point q1 = s.braid_point(t1), q2 = s.braid_point(t2);
      Point mid = braid_splice_inverse(b, r1, w, q1, q2);
      ++rep.instances;
      if (!in_braid_variety(mid, b) || !chart_membership(mid, b, r1, w))
        rep.fail("w = " + w.str() + ": inverse left the chart");
      else if (braid_splice_forward(b, r1, w, mid) != std::pair<Point, Point>{q1, q2})
        rep.fail("w = " + w.str() + ": forward after inverse at " + point_str(q1) + " " + point_str(q2));
    }
    rep.data.push_back({"chart " + w.str(), "nonempty"});
  }
  rep.data.push_back({"charts", std::to_string(charts)});
  return rep;
}

}  // namespace bsp
