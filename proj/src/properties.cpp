#include "braidsplice/properties.hpp"

#include <random>

#include "braidsplice/cluster.hpp"
#include "braidsplice/symmat.hpp"

namespace bsp {

namespace {

struct Draw {
  std::mt19937_64 rng;
  explicit Draw(std::uint64_t seed) : rng(seed) {}
  int between(int lo, int hi) { return lo + static_cast<int>(rng() % static_cast<std::uint64_t>(hi - lo + 1)); }
  BraidWord word(int kmax, int max_len, int min_len = 1) {
    int k = between(2, kmax);
    std::vector<int> l;
    int len = between(min_len, max_len);
    for (int i = 0; i < len; ++i) l.push_back(between(1, k - 1));
    return BraidWord(k, l);
  }
  Rational small() { return Rational(between(-9, 9), between(1, 9)); }
};

std::vector<RationalFunction> formal(const std::vector<Var>& vs) {
  std::vector<RationalFunction> out;
  for (Var v : vs) out.push_back(RationalFunction::var(v));
  return out;
}

std::string where(const BraidWord& b) { return "k=" + std::to_string(b.k()) + " beta=" + b.str(); }

}  // namespace

CheckReport check_slide_identity(int samples, std::uint64_t seed, int kmax, int max_len) {
  CheckReport rep{"slide", 0, {}, {}};
  Draw d(seed);
  for (int t = 0; t < samples; ++t) {
    BraidWord b = d.word(kmax, max_len);
    int k = b.k();
    SymMatrix U(k, k);
    for (int i = 0; i < k; ++i) {
      U(i, i) = RationalFunction::var(make_var('u', static_cast<unsigned>(i + 1)));
      for (int j = i + 1; j < k; ++j) U(i, j) = RationalFunction(d.small());
    }
    auto z = formal(var_range('z', 1, b.size()));
    auto s = slide_upper_through(U, b, z);
    ++rep.instances;
    if (!s.U.is_upper_triangular()) rep.fail(where(b) + ": U' not upper triangular");
    if (U * braid_word_matrix<RationalFunction>(b, z) != braid_word_matrix<RationalFunction>(b, s.z) * s.U)
      rep.fail(where(b) + ": slide identity");
    Permutation pi = word_permutation(b);
    for (int i = 1; i <= k; ++i)
      if (s.U(i - 1, i - 1) != U(pi(i) - 1, pi(i) - 1)) rep.fail(where(b) + ": diagonal not permuted");
  }
  return rep;
}

CheckReport check_cauchy_binet(int samples, std::uint64_t seed, int kmax, int max_len) {
  CheckReport rep{"cauchy-binet", 0, {}, {}};
  Draw d(seed);
  for (int t = 0; t < samples; ++t) {
    BraidWord b = d.word(kmax, max_len);
    int k = b.k();
    SymMatrix m = braid_word_matrix(b, var_range('z', 1, b.size()));
    int j = d.between(1, k - 1);
    SymMatrix mb = m * braid_letter_matrix(k, j, make_var('y', 1));
    ++rep.instances;
    for (int i = 1; i < k; ++i) {
      if (i == j) continue;
      for (unsigned mask = 0; mask < (1u << k); ++mask) {
        if (__builtin_popcount(mask) != i) continue;
        std::vector<int> I;
        for (int a = 0; a < k; ++a)
          if (mask >> a & 1) I.push_back(a + 1);
        if (minor(mb, I, interval(1, i)) != minor(m, I, interval(1, i)))
          rep.fail(where(b) + " j=" + std::to_string(j) + ": minor on " + std::to_string(mask));
      }
    }
  }
  return rep;
}

CheckReport check_lu_reconstruction(int samples, std::uint64_t seed, int kmax, int max_len) {
  CheckReport rep{"lu", 0, {}, {}};
  Draw d(seed);
  int singular = 0;
  for (int t = 0; t < samples; ++t) {
    BraidWord b = d.word(kmax, max_len);
    SymMatrix m = braid_word_matrix(b, var_range('z', 1, b.size()));
    ++rep.instances;
    LUPair<RationalFunction> lu;
    try {
      lu = lu_decompose(m);
    } catch (const SingularPrincipalMinor& e) {
      ++singular;
      if (!minor(m, interval(1, e.index), interval(1, e.index)).is_zero())
        rep.fail(where(b) + ": reported singular minor is nonzero");
      continue;
    }
    if (!lu.L.is_unit_lower_triangular() || !lu.U.is_upper_triangular()) rep.fail(where(b) + ": shape");
    if (lu.L * lu.U != m) rep.fail(where(b) + ": L U != B");
  }
  rep.data.push_back({"singular", std::to_string(singular)});
  return rep;
}

CheckReport check_delta_closed_form(int kmax) {
  CheckReport rep{"delta-closed-form", 0, {}, {}};
  for (int k = 2; k <= kmax; ++k) {
    auto v = var_range('z', 1, k * (k - 1) / 2);
    ++rep.instances;
    if (braid_word_matrix(delta_word(k), v) != delta_matrix_closed_form(k, v)) rep.fail("k=" + std::to_string(k));
  }
  return rep;
}

CheckReport check_mutation_involution(int samples, std::uint64_t seed) {
  CheckReport rep{"mutation-involution", 0, {}, {}};
  Draw d(seed);
  for (int t = 0; t < samples; ++t) {
    int n = d.between(1, 7);
    Quiver q(n);
    for (int i = 1; i <= n; ++i)
      for (int j = i + 1; j <= n; ++j)
        if (int m = d.between(-2, 2)) q.add_arrows(i, j, m);
    for (int i = 1; i <= n; ++i)
      if (d.between(0, 3) == 0) q.set_frozen(i);
    ++rep.instances;
    Seed s{q, formal(var_range('x', 1, n))};
    for (int v : q.mutable_vertices()) {
      if (mutate(q, v) != mutate_by_arrows(q, v)) rep.fail("sample " + std::to_string(t) + ": rules differ");
      if (mutate(mutate(q, v), v) != q) rep.fail("sample " + std::to_string(t) + ": quiver");
    }
    if (!q.mutable_vertices().empty()) {
      int v = q.mutable_vertices()[d.between(0, static_cast<int>(q.mutable_vertices().size()) - 1)];
      Seed back = mutate(mutate(s, v), v);
      if (back.quiver != q || back.x != s.x) rep.fail("sample " + std::to_string(t) + ": seed");
    }
  }
  return rep;
}

CheckReport check_demazure_two_way(int samples, std::uint64_t seed, int kmax, int max_len) {
  CheckReport rep{"demazure", 0, {}, {}};
  Draw d(seed);
  for (int t = 0; t < samples; ++t) {
    BraidWord b = d.word(kmax, max_len, 0);
    Permutation left = demazure_product(b), right = demazure_product_right(b);
    // brute force: longest reduced subword
    Permutation best = Permutation::identity(b.k());
    for (unsigned mask = 0; mask < (1u << b.size()); ++mask) {
      std::vector<int> l;
      for (int j = 0; j < b.size(); ++j)
        if (mask >> j & 1) l.push_back(b[j + 1]);
      BraidWord s(b.k(), l);
      if (s.size() > best.length() && is_reduced(s)) best = word_permutation(s);
    }
    ++rep.instances;
    if (left != right) rep.fail(where(b) + ": left and right folds differ");
    if (left != best) rep.fail(where(b) + ": fold differs from the longest subword");
  }
  return rep;
}

CheckReport check_three_way(int k) {
  CheckReport rep{"three-way", 0, {}, {}};
  Permutation w0 = Permutation::longest(k);
  for (auto& v : Permutation::all(k))
    for (auto& w : Permutation::all(k)) {
      bool a = demazure_star(v, w) == w0;
      bool b = bruhat_leq(w0 * w.inverse(), v);
      bool c = bruhat_leq(v.inverse() * w0, w);
      ++rep.instances;
      if (a != b || b != c) rep.fail("v=" + v.str() + " w=" + w.str());
    }
  return rep;
}

}  // namespace bsp
