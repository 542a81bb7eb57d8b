#include <random>

#include "braidsplice/splice.hpp"
#include "doctest.h"

using namespace bsp;

namespace {

RationalFunction P(const char* s) { return RationalFunction::parse(s); }
LaurentMonomial U(std::vector<int> idx) {
  LaurentMonomial m;
  for (int s : idx) m.exps[make_var('u', s)] = -1;
  return m;
}

const char* kIntro = "3 3 2 2 1 3 2 1 1 3 2 1 2 3 2 1";

BraidWord random_word(std::mt19937_64& rng, int k, int len) {
  std::vector<int> l;
  for (int i = 0; i < len; ++i) l.push_back(1 + static_cast<int>(rng() % (k - 1)));
  return BraidWord(k, l);
}

void require_ok(const CheckReport& r) {
  INFO(r.check);
  for (auto& f : r.failures) INFO(f);
  CHECK(r.ok());
}

}  // namespace

TEST_CASE("symbolic dbs splice of s1 s1") {
  BraidWord b(2, {1, 1});
  SpliceWitness w = dbs_splice_forward(b, 1);
  CHECK(w.U1(0, 0) == P("z1"));
  CHECK(w.U1(0, 1) == P("-1"));
  CHECK(w.U1(1, 1) == P("1/z1"));
  // z'_2 = (z1 z2 - 1) / (1/z1)
  CHECK(w.zprime[0] == P("z1^2*z2 - z1"));
  SymMatrix lhs = w.U1 * braid_word_matrix(BraidWord(2, {1}), {make_var('z', 2)});
  CHECK(lhs == braid_word_matrix<RationalFunction>(BraidWord(2, {1}), w.zprime) * w.U1_out);
}

TEST_CASE("diagonal U slides by scaling") {
  // z' = d_i z / d_{i+1}, then the diagonal entries swap
  QMatrix D = QMatrix::diagonal({Rational(2), Rational(3), Rational(5)});
  BraidWord b(3, {1, 2, 1});
  Point z = {1, 2, 3};
  auto r = slide_upper_through(D, b, z);
  CHECK(r.z == Point{Rational(2, 3), Rational(4, 5), Rational(9, 5)});
  CHECK(r.U.is_diagonal());
}

TEST_CASE("dbs splice at points") {
  BraidWord b(2, {1, 1});
  // zL = 1, z'_2 = 1: U1 = [[1,-1],[0,1]], so z2 solves z2 - 1... = 1
  Point z = dbs_splice_inverse(b, 1, {1}, {1});
  CHECK(z == Point{1, 2});
  CHECK(in_dbs(z, b));
  CHECK(dbs_splice_forward(b, 1, z).second == Point{1});
  CHECK_THROWS_AS(dbs_splice_inverse(b, 1, {0}, {1}), NotInDBS);

  BraidWord intro = BraidWord::parse(kIntro, 4);
  require_ok(verify_dbs_round_trips(intro, 9, 100, 3));
  require_ok(verify_dbs_round_trips(BraidWord(3, {1, 2, 2, 1, 1}), 2, 30, 4));
}

TEST_CASE("splice monomials") {
  BraidWord fig = BraidWord::parse("4 3 2 1 1 2 4 1 2 3", 5);
  CHECK(splice_monomial(fig, 4, 10) == U({1, 3, 5}));
  CHECK(splice_monomial_by_strands(fig, 4, 10) == U({1, 3, 5}));

  BraidWord intro = BraidWord::parse(kIntro, 4);
  std::map<int, std::vector<int>> expect = {{10, {1, 2, 4}}, {11, {1, 4}}, {12, {4}},   {13, {2, 4}},
                                            {14, {2, 3, 4}}, {15, {3, 4}}, {16, {3}}};
  for (auto& [l, u] : expect) {
    CHECK(splice_monomial(intro, 9, l) == U(u));
    CHECK(splice_monomial_by_strands(intro, 9, l) == U(u));
  }
  // i_l = 1: one factor, read after the crossing itself
  CHECK(splice_monomial(BraidWord(3, {2, 1}), 1, 2) == U({2}));

  std::mt19937_64 rng(21);
  for (int t = 0; t < 200; ++t) {
    int k = 2 + static_cast<int>(rng() % 4);
    BraidWord b = random_word(rng, k, 2 + static_cast<int>(rng() % 10));
    int r1 = 1 + static_cast<int>(rng() % (b.size() - 1));
    for (int l = r1 + 1; l <= b.size(); ++l) CHECK(splice_monomial(b, r1, l) == splice_monomial_by_strands(b, r1, l));
  }
}

TEST_CASE("variable transport") {
  require_ok(verify_variable_transport(BraidWord(2, {1, 1}), 1));
  require_ok(verify_variable_transport(BraidWord(2, {1, 1, 1}), 2));
  require_ok(verify_variable_transport(BraidWord(3, {1, 2, 1, 2, 2, 1}), 3));
  require_ok(verify_variable_transport(BraidWord::parse(kIntro, 4), 9));
  std::mt19937_64 rng(22);
  for (int t = 0; t < 6; ++t) {
    BraidWord b = random_word(rng, 3, 3 + static_cast<int>(rng() % 5));
    for (int r1 = 1; r1 < b.size(); ++r1) require_ok(verify_variable_transport(b, r1));
  }
}

TEST_CASE("exchange ratios agree") {
  BraidWord intro = BraidWord::parse(kIntro, 4);
  CheckReport r = verify_exchange_ratios(intro, 9, {10, 11, 12, 13});
  require_ok(r);
  CHECK(r.instances == 4);
  require_ok(verify_exchange_ratios(intro, 9));
  require_ok(verify_exchange_ratios(BraidWord(2, {1, 1, 1}), 1));
  CHECK_FALSE(verify_exchange_ratios(intro, 9, {6}).ok());

  CheckReport f = frozen_bookkeeping(intro, 9);
  require_ok(f);
  CHECK(f.data[0].second == "3");
  CHECK(f.data[3].second == "6");
}

TEST_CASE("phi1 and phi2") {
  CHECK(phi1(BraidWord(2, {1}), {1}) == Point{1, 1});
  CHECK(phi2(BraidWord(2, {1, 1}), {1, 2}) == Point{2, 1, 2});
  // upper-triangular B_beta gives p = 0
  CHECK(phi2(BraidWord(3, {}), {}) == Point{0, 0, 0});
  CHECK(phi1(BraidWord(3, {}), {}) == Point{0, 0, 0});
  CHECK_THROWS_AS(phi2(BraidWord(2, {1}), {0}), NotInDBS);

  Sampler s(5);
  for (int t = 0; t < 100; ++t) {
    int k = 2 + t % 3;
    BraidWord b(k, {});
    std::mt19937_64 rng(t);
    b = random_word(rng, k, 1 + t % 6);
    Point z = s.dbs_point(b);
    Point a = phi1(b, z), c = phi2(b, z);
    CHECK(in_braid_variety(a, b * delta_word(k)));
    CHECK(in_braid_variety(c, delta_word(k) * b));
    CHECK(Point(a.begin(), a.begin() + b.size()) == z);
    CHECK(Point(c.end() - b.size(), c.end()) == z);
  }
}

TEST_CASE("braid splicing") {
  // w = w0: the chart is cut out by the principal minors of B_beta1
  BraidWord b = BraidWord::parse("2 1 3 2 2 3 1 2 2 1 3 2", 4);
  Sampler s(6);
  Permutation w0 = Permutation::longest(4);
  for (int t = 0; t < 5; ++t) {
    Point z = s.chart_point(b, 9, w0);
    auto [p1, p2] = braid_splice_forward(b, 9, w0, z);
    auto [t1, t2] = braid_splice_targets(b, 9, w0);
    CHECK(t1 == b.prefix(9));
    CHECK(in_braid_variety(p1, t1));
    CHECK(in_braid_variety(p2, t2));
    CHECK(braid_splice_inverse(b, 9, w0, p1, p2) == z);
  }
  BraidWord b8 = BraidWord::parse("1 2 1 1 2 1 2 1", 3);
  for (int r1 = 2; r1 <= 6; r1 += 2) {
    CheckReport r = verify_braid_round_trips(b8, r1, 10, 7 + r1);
    require_ok(r);
    CHECK(r.instances > 0);
  }
}

TEST_CASE("charts are nonempty exactly under the demazure condition") {
  Sampler s(8);
  int empty = 0, full = 0;
  for (auto word : {"1 2 1 1 2 1 2 1", "1 1 2 2 1 1 2 2", "2 1 2 2 1 2"}) {
    BraidWord b = BraidWord::parse(word, 3);
    for (int r1 = 1; r1 < b.size(); ++r1)
      for (const auto& w : Permutation::all(3)) {
        auto [t1, t2] = braid_splice_targets(b, r1, w);
        bool expect = demazure_product(t1) == Permutation::longest(3) && demazure_product(t2) == Permutation::longest(3);
        bool found = true;
        try {
          s.chart_point(b, r1, w);
        } catch (const NotInChart&) {
          found = false;
        }
        CHECK(found == expect);
        (found ? full : empty)++;
      }
  }
  CHECK(empty > 5);
  CHECK(full > 5);
}

TEST_CASE("compatibility diagrams") {
  require_ok(verify_compat_diagrams(BraidWord(2, {1, 1}), 1, 50, 9));
  require_ok(verify_compat_diagrams(BraidWord(3, {1, 2, 2, 1, 2}), 2, 20, 10));
  require_ok(verify_compat_diagrams(BraidWord::parse(kIntro, 4), 9, 10, 11));
}
