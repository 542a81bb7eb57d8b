#include <map>
#include <queue>
#include <random>

#include "braidsplice/combinat.hpp"
#include "doctest.h"

using namespace bsp;

namespace {

Permutation S(int k, std::initializer_list<int> gens) {
  Permutation w = Permutation::identity(k);
  for (int g : gens) w = w.times_simple(g);
  return w;
}

// word length by breadth-first search in the Cayley graph
std::map<Permutation, int> bfs_lengths(int k) {
  std::map<Permutation, int> d;
  std::queue<Permutation> q;
  d[Permutation::identity(k)] = 0;
  q.push(Permutation::identity(k));
  while (!q.empty()) {
    Permutation w = q.front();
    q.pop();
    for (int i = 1; i < k; ++i) {
      Permutation x = w.times_simple(i);
      if (!d.count(x)) {
        d[x] = d[w] + 1;
        q.push(x);
      }
    }
  }
  return d;
}

// subword criterion on one reduced word
bool bruhat_subword(const Permutation& u, const Permutation& w) {
  BraidWord r = positive_lift(w);
  int n = r.size();
  for (int mask = 0; mask < (1 << n); ++mask) {
    std::vector<int> l;
    for (int j = 0; j < n; ++j)
      if (mask >> j & 1) l.push_back(r.letters()[j]);
    BraidWord s(w.k(), l);
    if (is_reduced(s) && word_permutation(s) == u) return true;
  }
  return false;
}

// longest product of a reduced subword
Permutation demazure_oracle(const BraidWord& b) {
  Permutation best = Permutation::identity(b.k());
  int n = b.size();
  for (int mask = 0; mask < (1 << n); ++mask) {
    std::vector<int> l;
    for (int j = 0; j < n; ++j)
      if (mask >> j & 1) l.push_back(b.letters()[j]);
    BraidWord s(b.k(), l);
    if (is_reduced(s) && s.size() > best.length()) best = word_permutation(s);
  }
  return best;
}

BraidWord random_word(std::mt19937_64& rng, int k, int len) {
  std::uniform_int_distribution<int> g(1, k - 1);
  std::vector<int> l;
  for (int i = 0; i < len; ++i) l.push_back(g(rng));
  return BraidWord(k, l);
}

}  // namespace

TEST_CASE("coxeter_length") {
  CHECK(coxeter_length(Permutation::identity(4)) == 0);
  CHECK(coxeter_length(Permutation::longest(4)) == 6);
  CHECK(coxeter_length(Permutation({2, 1, 4, 3})) == 2);
  for (int k = 1; k <= 4; ++k)
    for (auto& [w, d] : bfs_lengths(k)) CHECK(coxeter_length(w) == d);
}

TEST_CASE("parsing") {
  CHECK(Permutation::parse("[2,1,4,3]", 4) == Permutation({2, 1, 4, 3}));
  CHECK(Permutation::parse("s2", 4) == S(4, {2}));
  CHECK(Permutation::parse("s3s2s1s2s3", 4) == Permutation({4, 2, 3, 1}));
  CHECK(Permutation::parse("e", 3) == Permutation::identity(3));
  CHECK(Permutation::parse("3 2 1 2 3", 4) == Permutation({4, 2, 3, 1}));
  CHECK(Permutation::parse("2 1 4 3", 4) == Permutation({2, 1, 4, 3}));
  CHECK_THROWS(Permutation::parse("3 4", 4));
  CHECK(BraidWord::parse("2 1 3 2", 4).letters() == std::vector<int>{2, 1, 3, 2});
  CHECK_THROWS(BraidWord::parse("2 4", 4));
  CHECK_THROWS(Permutation::parse("[1,1,2]", 3));
}

TEST_CASE("bruhat_leq examples") {
  for (auto& w : Permutation::all(4)) CHECK(bruhat_leq(Permutation::identity(4), w));
  CHECK(bruhat_leq(S(3, {1}), S(3, {1, 2, 1})));
  CHECK_FALSE(bruhat_leq(S(4, {2}), S(4, {1, 3})));
}

TEST_CASE("bruhat rank criterion agrees with subword criterion, k <= 4") {
  for (int k = 2; k <= 4; ++k)
    for (auto& u : Permutation::all(k))
      for (auto& w : Permutation::all(k)) CHECK(bruhat_leq(u, w) == bruhat_subword(u, w));
}

TEST_CASE("demazure_step and demazure_product") {
  CHECK(demazure_step(Permutation::identity(3), 1) == S(3, {1}));
  CHECK(demazure_step(S(3, {1}), 1) == S(3, {1}));
  CHECK(demazure_step(S(3, {1, 2}), 1) == Permutation::longest(3));
  CHECK(demazure_product(BraidWord(2, {1, 1})) == S(2, {1}));
  CHECK(demazure_product(BraidWord(3, {1, 2, 1})) == Permutation::longest(3));
  CHECK(demazure_product(BraidWord::parse("2 1 3 2 2 3 1 2 2", 4)) == Permutation({4, 3, 2, 1}));
}

TEST_CASE("demazure product: both folds and the subword oracle agree") {
  std::mt19937_64 rng(2);
  for (int i = 0; i < 200; ++i) {
    int k = 2 + static_cast<int>(rng() % 3);
    BraidWord b = random_word(rng, k, static_cast<int>(rng() % 9));
    Permutation d = demazure_product(b);
    CHECK(d == demazure_product_right(b));
    CHECK(d == demazure_oracle(b));
    // appending never shortens
    BraidWord b2 = b * random_word(rng, k, 1);
    CHECK(demazure_product(b2).length() >= d.length());
  }
}

TEST_CASE("demazure_star") {
  for (auto& w : Permutation::all(3)) CHECK(demazure_star(Permutation::identity(3), w) == w);
  CHECK(demazure_star(Permutation::longest(3), Permutation::longest(3)) == Permutation::longest(3));
  CHECK(demazure_star(S(3, {1}), S(3, {1})) == S(3, {1}));
}

TEST_CASE("three-way equivalence over S4") {
  Permutation w0 = Permutation::longest(4);
  int pairs = 0;
  for (auto& v : Permutation::all(4))
    for (auto& w : Permutation::all(4)) {
      bool a = demazure_star(v, w) == w0;
      bool b = bruhat_leq(w0 * w.inverse(), v);
      bool c = bruhat_leq(v.inverse() * w0, w);
      CHECK(a == b);
      CHECK(b == c);
      ++pairs;
    }
  CHECK(pairs == 576);
}

TEST_CASE("positive_lift") {
  CHECK(positive_lift(Permutation::identity(3)).empty());
  CHECK(positive_lift(Permutation::longest(3)).letters() == std::vector<int>{2, 1, 2});
  for (int k = 2; k <= 6; ++k) CHECK(positive_lift(Permutation::longest(k)) == delta_word(k));
  for (int k = 1; k <= 5; ++k)
    for (auto& w : Permutation::all(k)) {
      BraidWord b = positive_lift(w);
      CHECK(word_permutation(b) == w);
      CHECK(b.size() == w.length());
      CHECK(demazure_product(b) == w);
    }
  CHECK(positive_lift(Permutation({4, 2, 3, 1})).letters() == std::vector<int>{3, 2, 1, 2, 3});
}

TEST_CASE("delta_word") {
  CHECK(delta_word(2).letters() == std::vector<int>{1});
  CHECK(delta_word(3).letters() == std::vector<int>{2, 1, 2});
  CHECK(delta_word(4).letters() == std::vector<int>{3, 2, 1, 3, 2, 3});
  for (int k = 2; k <= 7; ++k) {
    CHECK(delta_word(k).size() == k * (k - 1) / 2);
    CHECK(word_permutation(delta_word(k)) == Permutation::longest(k));
  }
}

TEST_CASE("lift_with_prefix") {
  CHECK(lift_with_prefix(Permutation::identity(3)) == delta_word(3));
  CHECK(lift_with_prefix(Permutation::longest(3)) == positive_lift(Permutation::longest(3)));
  CHECK(lift_with_prefix(S(3, {2})).letters() == std::vector<int>{2, 1, 2});
  for (int k = 2; k <= 5; ++k)
    for (auto& w : Permutation::all(k)) {
      BraidWord b = lift_with_prefix(w);
      CHECK(is_reduced(b));
      CHECK(word_permutation(b) == Permutation::longest(k));
      CHECK(word_permutation(b.prefix(w.length())) == w);
    }
}

TEST_CASE("reduced_words enumerates words of the right count") {
  CHECK(reduced_words(Permutation::longest(3)).size() == 2);
  CHECK(reduced_words(Permutation::longest(4)).size() == 16);
}
