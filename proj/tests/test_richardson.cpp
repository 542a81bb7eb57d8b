#include <map>

#include "braidsplice/cluster.hpp"
#include "braidsplice/richardson.hpp"
#include "doctest.h"

using namespace bsp;

namespace {

Permutation S(const char* s, int k) { return Permutation::parse(s, k); }

// R-polynomials by the standard descent recursion, coefficients in q
using QPoly = std::vector<long>;

QPoly r_poly(const Permutation& u, const Permutation& w, std::map<std::pair<Permutation, Permutation>, QPoly>& memo) {
  if (!bruhat_leq(u, w)) return {};
  if (u == w) return {1};
  auto key = std::make_pair(u, w);
  if (auto it = memo.find(key); it != memo.end()) return it->second;
  int s = 1;
  while (!(w(s) > w(s + 1))) ++s;
  Permutation ws = w.times_simple(s), us = u.times_simple(s);
  QPoly out;
  if (us.length() < u.length()) {
    out = r_poly(us, ws, memo);
  } else {
    QPoly a = r_poly(u, ws, memo), b = r_poly(us, ws, memo);
    out.assign(std::max(a.size(), b.size()) + 1, 0);
    for (std::size_t i = 0; i < a.size(); ++i) {
      out[i + 1] += a[i];
      out[i] -= a[i];
    }
    for (std::size_t i = 0; i < b.size(); ++i) out[i + 1] += b[i];
    while (!out.empty() && out.back() == 0) out.pop_back();
  }
  return memo[key] = out;
}

long second_coefficient(const QPoly& p) { return p.size() >= 2 ? p[p.size() - 2] : 0; }

}  // namespace

TEST_CASE("richardson braids") {
  Permutation e = Permutation::identity(4), w0 = Permutation::longest(4);
  CHECK(richardson_braid(e, w0) == delta_word(4) * delta_word(4));
  BraidWord b = richardson_braid(S("s2", 4), S("3 2 1 2 3", 4));
  CHECK(b.size() == 5 + (w0.length() - 1));
  CHECK(b.prefix(5) == BraidWord(4, {3, 2, 1, 2, 3}));
  CHECK_THROWS_AS(richardson_braid(S("s1", 3), S("s2", 3)), BruhatViolation);
  for (const auto& u : Permutation::all(3))
    for (const auto& w : Permutation::all(3)) {
      if (!bruhat_leq(u, w)) continue;
      BraidWord rb = richardson_braid(u, w);
      CHECK(demazure_product(rb) == Permutation::longest(3));
      CHECK(rb.size() - 3 == w.length() - u.length());
    }
}

TEST_CASE("frozen count base") {
  CHECK(frozen_count_base(Permutation::identity(4)) == 0);
  CHECK(frozen_count_base(Permutation::longest(5)) == 4);
  CHECK(frozen_count_base(S("3 2 1 2 3", 4)) == 3);
  CHECK(frozen_count_base(S("s2", 4)) == 1);
}

TEST_CASE("irreducibility certificates") {
  auto P = [](const char* s) { return Polynomial::parse(s); };
  CHECK(certified_irreducible(P("z1")));
  CHECK(certified_irreducible(P("z1*z5 + z3 - z2*z4")));
  CHECK_FALSE(certified_irreducible(P("z1*z2")));
  CHECK_FALSE(certified_irreducible(P("z1^2 - z2^2")));  // quadric of rank 2
  CHECK(certified_irreducible(P("z1^2 + z2^2 + 1")));
  CHECK_FALSE(certified_irreducible(P("z1*z3 + z2*z3")));  // z3 (z1 + z2)
  CHECK_FALSE(certified_irreducible(P("7")));
}

TEST_CASE("frozen counts of the worked example") {
  Permutation v = S("s2", 4), w = S("3 2 1 2 3", 4);
  SCount s = s_count(v, w);
  CHECK(s.complete);
  CHECK(s.s == 2);
  REQUIRE(s.minors.size() == 1);
  CHECK(s.minors[0].rows == std::vector<int>{1, 3});
  CHECK(s.minors[0].minor == Polynomial::parse("z1*z4"));
  CHECK(frozen_count(v, w) == 4);
  CHECK(frozen_count(Permutation::identity(4), w) == 3);
  CHECK(frozen_count(Permutation::identity(4), v) == 1);
  CHECK(s_count(Permutation::identity(4), w).s == 0);

  // mutating the inductive seed at z2 gives z4
  Quiver chain(5);
  for (int j = 1; j < 5; ++j) chain.add_arrows(j, j + 1);
  for (int f : {1, 3, 5}) chain.set_frozen(f);
  auto R = [](const char* t) { return RationalFunction::parse(t); };
  Seed seed{chain, {R("z3"), R("z2"), R("z4*z2 - z3"), R("z1"), R("z1*z5 + z3 - z2*z4")}};
  CHECK(mutate(seed, 2).var(2) == R("z4"));
}

TEST_CASE("growth family of transpositions") {
  for (int k : {4, 6}) {
    std::vector<int> img(k);
    for (int j = 0; j < k; ++j) img[j] = j + 1;
    std::swap(img[0], img[k - 1]);
    Permutation w(img), v = Permutation::identity(k);
    for (int a = 2; a <= k - 2; a += 2) v = v.times_simple(a);
    // pool hints: the matrix entries
    BraidWord lw = positive_lift(w);
    SymMatrix B = braid_word_matrix(lw, var_range('z', 1, lw.size()));
    std::vector<Polynomial> hints;
    for (int i = 0; i < k; ++i)
      for (int j = 0; j < k; ++j) hints.push_back(B(i, j).num());
    SCount s = s_count(v, w, hints);
    CHECK(s.complete);
    CHECK(s.s == 2 * (k / 2 - 1));
    int f = frozen_count(v, w, hints);
    CHECK(f == k - 1 + k / 2 - 1);
    CHECK(f == w.length() - v.length());  // a torus
  }
}

TEST_CASE("frozen counts agree with R-polynomial coefficients") {
  std::map<std::pair<Permutation, Permutation>, QPoly> memo;
  int checked = 0;
  for (int k : {3, 4}) {
    for (const auto& v : Permutation::all(k))
      for (const auto& w : Permutation::all(k)) {
        if (!bruhat_leq(v, w) || v == w) continue;
        SCount s = s_count(v, w);
        if (!s.complete) continue;
        long c = second_coefficient(r_poly(v, w, memo));
        CHECK(frozen_count(v, w) == -c);
        ++checked;
      }
  }
  CHECK(checked > 150);
}

TEST_CASE("frozen inequality on chains") {
  int checked = 0;
  for (const auto& u : Permutation::all(3))
    for (const auto& w : Permutation::all(3))
      for (const auto& v : Permutation::all(3)) {
        if (!bruhat_leq(u, v) || !bruhat_leq(v, w)) continue;
        CHECK(frozen_inequality_check(u, v, w));
        ++checked;
      }
  CHECK(checked == 44);
  CHECK(frozen_inequality_check(Permutation::identity(4), S("s2", 4), S("3 2 1 2 3", 4)));
}

TEST_CASE("richardson splicing") {
  Sampler smp(31);
  Permutation e = Permutation::identity(3), w0 = Permutation::longest(3);
  // the chart is nonempty exactly for u <= v <= w
  for (const auto& u : Permutation::all(3))
    for (const auto& w : Permutation::all(3)) {
      if (!bruhat_leq(u, w)) continue;
      BraidWord b = richardson_braid(u, w);
      if (w.length() == 0 || w.length() == b.size()) continue;
      for (const auto& v : Permutation::all(3)) {
        bool hit = false;
        for (int t = 0; t < 40 && !hit; ++t) hit = richardson_chart_membership(u, v, w, smp.braid_point(b));
        CHECK(hit == (bruhat_leq(u, v) && bruhat_leq(v, w)));
      }
    }

  Permutation s1 = S("s1", 3);
  BraidWord b = richardson_braid(e, w0);
  for (int t = 0; t < 20; ++t) {
    Point pt = smp.chart_point(b, 3, w0 * s1 * w0);
    RichardsonSplit sp = richardson_splice(e, s1, w0, pt);
    CHECK(sp.braid_vw == richardson_braid(w0 * w0.inverse(), w0 * s1.inverse()));
    CHECK(sp.braid_uv == richardson_braid(s1.inverse() * w0, w0));
    CHECK(braid_variety_dimension_at(sp.braid_vw, sp.pt_vw) == 2);
    CHECK(braid_variety_dimension_at(sp.braid_uv, sp.pt_uv) == 1);
    CHECK(richardson_unsplice(e, s1, w0, sp.pt_vw, sp.pt_uv) == pt);
  }
  // v = w: the R(w, w) factor is a point
  Point pt = smp.chart_point(b, 3, e);
  RichardsonSplit sp = richardson_splice(e, w0, w0, pt);
  CHECK(braid_variety_dimension_at(sp.braid_vw, sp.pt_vw) == 0);
}

TEST_CASE("dimension at sampled points") {
  Sampler smp(32);
  for (const auto& u : Permutation::all(3))
    for (const auto& w : Permutation::all(3)) {
      if (!bruhat_leq(u, w)) continue;
      BraidWord b = richardson_braid(u, w);
      Point z = smp.braid_point(b);
      CHECK(braid_variety_dimension_at(b, z) == w.length() - u.length());
    }
}

TEST_CASE("maximal chains split into tori") {
  Sampler smp(33);
  Permutation e = Permutation::identity(3), w0 = Permutation::longest(3);
  for (auto mid : {std::pair{"s1", "s1s2"}, std::pair{"s2", "s2s1"}, std::pair{"s1", "s2s1"}}) {
    std::vector<Permutation> chain = {e, S(mid.first, 3), S(mid.second, 3), w0};
    BraidWord b = richardson_braid(e, w0);
    for (int t = 0; t < 5; ++t) {
      Point pt = smp.braid_point(b);
      std::vector<ChainFactor> fs;
      try {
        fs = chain_splice(chain, pt);
      } catch (const NotInChart&) {
        continue;
      }
      REQUIRE(fs.size() == 3);
      for (auto& f : fs) {
        CHECK(f.braid == richardson_braid(f.u, f.w));
        CHECK(in_braid_variety(f.pt, f.braid));
        CHECK(braid_variety_dimension_at(f.braid, f.pt) == 1);
        // a one-dimensional Richardson variety is C^x: the flag after lift(w)
        // is cut out by a single nonvanishing coordinate
        CHECK(f.w.length() - f.u.length() == 1);
      }
    }
  }
}
