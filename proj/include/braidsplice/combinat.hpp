#pragma once

#include <string>
#include <string_view>
#include <vector>

namespace bsp {

// One-line notation, 1-based: w(j) = images[j-1].
// Products compose right to left: (u*v)(j) = u(v(j)).
class Permutation {
 public:
  Permutation() = default;
  explicit Permutation(std::vector<int> images);
  static Permutation identity(int k);
  static Permutation longest(int k);
  static Permutation simple(int k, int i);
  // "[2,1,4,3]", "2 1 4 3", "e", a product of simple reflections "s2s1s3" /
  // "s2 s1", or a plain word "3 2 1 2 3" when the entries are not one-line
  static Permutation parse(std::string_view s, int k);
  static std::vector<Permutation> all(int k);

  int k() const { return static_cast<int>(img_.size()); }
  int operator()(int j) const { return img_[j - 1]; }
  const std::vector<int>& images() const { return img_; }
  Permutation inverse() const;
  int length() const;
  bool is_identity() const;
  // right multiplication by s_i swaps positions i, i+1
  Permutation times_simple(int i) const;

  friend Permutation operator*(const Permutation& u, const Permutation& v);
  friend bool operator==(const Permutation& a, const Permutation& b) { return a.img_ == b.img_; }
  friend bool operator!=(const Permutation& a, const Permutation& b) { return a.img_ != b.img_; }
  friend bool operator<(const Permutation& a, const Permutation& b) { return a.img_ < b.img_; }

  std::string str() const;

 private:
  std::vector<int> img_;
};

int coxeter_length(const Permutation& w);
bool bruhat_leq(const Permutation& u, const Permutation& w);

class BraidWord {
 public:
  BraidWord() = default;
  BraidWord(int k, std::vector<int> letters);
  static BraidWord parse(std::string_view s, int k);

  int k() const { return k_; }
  int size() const { return static_cast<int>(l_.size()); }
  bool empty() const { return l_.empty(); }
  const std::vector<int>& letters() const { return l_; }
  // 1-based letter access, as in i_j
  int operator[](int j) const { return l_[j - 1]; }
  BraidWord prefix(int m) const;
  BraidWord suffix_from(int m) const;  // letters m+1..end
  BraidWord slice(int from, int to) const;  // letters from..to, 1-based inclusive

  friend BraidWord operator*(const BraidWord& a, const BraidWord& b);
  friend bool operator==(const BraidWord& a, const BraidWord& b) { return a.k_ == b.k_ && a.l_ == b.l_; }

  std::string str() const;

 private:
  int k_ = 2;
  std::vector<int> l_;
};

// product s_{i1} s_{i2} ... ignoring braid/nil relations
Permutation word_permutation(const BraidWord& b);
bool is_reduced(const BraidWord& b);

Permutation demazure_step(const Permutation& w, int i);
Permutation demazure_product(const BraidWord& b);
// greedy fold from the right end: w <- s_i * w when it is longer
Permutation demazure_product_right(const BraidWord& b);
Permutation demazure_star(const Permutation& v, const Permutation& w);

// Reduced word built by repeatedly splitting off the largest right descent.
BraidWord positive_lift(const Permutation& w);
BraidWord delta_word(int k);
// reduced word of w0 whose first l(w) letters spell positive_lift(w)
BraidWord lift_with_prefix(const Permutation& w);

// reduced words of w, all of them (small k only)
std::vector<BraidWord> reduced_words(const Permutation& w);

}  // namespace bsp
