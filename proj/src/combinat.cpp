#include "braidsplice/combinat.hpp"

#include <algorithm>
#include <cctype>
#include <numeric>
#include <sstream>

#include "braidsplice/errors.hpp"

namespace bsp {

Permutation::Permutation(std::vector<int> images) : img_(std::move(images)) {
  std::vector<bool> seen(img_.size() + 1, false);
  for (int x : img_) {
    if (x < 1 || x > static_cast<int>(img_.size()) || seen[x]) throw ParseError("not a permutation");
    seen[x] = true;
  }
}

Permutation Permutation::identity(int k) {
  std::vector<int> v(k);
  std::iota(v.begin(), v.end(), 1);
  return Permutation(v);
}

Permutation Permutation::longest(int k) {
  std::vector<int> v(k);
  for (int j = 0; j < k; ++j) v[j] = k - j;
  return Permutation(v);
}

Permutation Permutation::simple(int k, int i) { return identity(k).times_simple(i); }

Permutation Permutation::parse(std::string_view s, int k) {
  std::string t;
  for (char c : s)
    if (!std::isspace(static_cast<unsigned char>(c))) t.push_back(c);
  if (t.empty() || t == "e") return identity(k);
  if (t.front() == '[') {
    if (t.back() != ']') throw ParseError("bad permutation '" + std::string(s) + "'");
    std::vector<int> v;
    std::stringstream ss(t.substr(1, t.size() - 2));
    std::string part;
    while (std::getline(ss, part, ','))
      try {
        v.push_back(std::stoi(part));
      } catch (...) {
        throw ParseError("bad permutation '" + std::string(s) + "'");
      }
    if (static_cast<int>(v.size()) != k) throw ParseError("permutation size differs from k");
    return Permutation(v);
  }
  if (t.front() == 's') {
    Permutation w = identity(k);
    std::size_t i = 0;
    while (i < t.size()) {
      if (t[i] != 's') throw ParseError("bad reflection product '" + std::string(s) + "'");
      std::size_t j = ++i;
      while (j < t.size() && std::isdigit(static_cast<unsigned char>(t[j]))) ++j;
      if (j == i) throw ParseError("bad reflection product '" + std::string(s) + "'");
      int a = std::stoi(t.substr(i, j - i));
      if (a < 1 || a >= k) throw ParseError("generator out of range");
      w = w.times_simple(a);
      i = j;
    }
    return w;
  }
  std::vector<int> v;
  std::stringstream ss{std::string(s)};
  int x;
  while (ss >> x) v.push_back(x);
  if (!ss.eof()) throw ParseError("bad permutation '" + std::string(s) + "'");
  std::vector<int> sorted = v;
  std::sort(sorted.begin(), sorted.end());
  bool one_line = static_cast<int>(v.size()) == k;
  for (int i = 0; one_line && i < k; ++i) one_line = sorted[i] == i + 1;
  if (one_line) return Permutation(v);
  // otherwise a word in the simple reflections, "3 2 1 2 3" = s3 s2 s1 s2 s3
  Permutation w = identity(k);
  for (int a : v) {
    if (a < 1 || a >= k) throw ParseError("bad permutation '" + std::string(s) + "'");
    w = w.times_simple(a);
  }
  return w;
}

std::vector<Permutation> Permutation::all(int k) {
  std::vector<Permutation> out;
  std::vector<int> v(k);
  std::iota(v.begin(), v.end(), 1);
  do out.emplace_back(v);
  while (std::next_permutation(v.begin(), v.end()));
  return out;
}

Permutation Permutation::inverse() const {
  std::vector<int> v(img_.size());
  for (int j = 1; j <= k(); ++j) v[(*this)(j) - 1] = j;
  return Permutation(v);
}

int Permutation::length() const {
  int n = 0;
  for (int a = 0; a < k(); ++a)
    for (int b = a + 1; b < k(); ++b)
      if (img_[a] > img_[b]) ++n;
  return n;
}

bool Permutation::is_identity() const {
  for (int j = 1; j <= k(); ++j)
    if ((*this)(j) != j) return false;
  return true;
}

Permutation Permutation::times_simple(int i) const {
  if (i < 1 || i >= k()) throw ParseError("generator out of range");
  Permutation r = *this;
  std::swap(r.img_[i - 1], r.img_[i]);
  return r;
}

Permutation operator*(const Permutation& u, const Permutation& v) {
  if (u.k() != v.k()) throw DimensionMismatch("permutations of different size");
  std::vector<int> r(u.k());
  for (int j = 1; j <= u.k(); ++j) r[j - 1] = u(v(j));
  return Permutation(r);
}

std::string Permutation::str() const {
  std::string s = "[";
  for (std::size_t j = 0; j < img_.size(); ++j) {
    if (j) s += ',';
    s += std::to_string(img_[j]);
  }
  return s + "]";
}

int coxeter_length(const Permutation& w) { return w.length(); }

// Rank criterion: u <= w iff u[i,j] <= w[i,j] for all i, j,
// where x[i,j] = #{a <= i : x(a) >= j}.
bool bruhat_leq(const Permutation& u, const Permutation& w) {
  int k = u.k();
  if (w.k() != k) throw DimensionMismatch("permutations of different size");
  for (int j = 1; j <= k; ++j) {
    int cu = 0, cw = 0;
    for (int i = 1; i <= k; ++i) {
      if (u(i) >= j) ++cu;
      if (w(i) >= j) ++cw;
      if (cu > cw) return false;
    }
  }
  return true;
}

BraidWord::BraidWord(int k, std::vector<int> letters) : k_(k), l_(std::move(letters)) {
  if (k < 1) throw ParseError("strand count must be positive");
  for (int a : l_)
    if (a < 1 || a >= k) throw ParseError("letter " + std::to_string(a) + " out of range for k=" + std::to_string(k));
}

BraidWord BraidWord::parse(std::string_view s, int k) {
  std::vector<int> v;
  std::string t(s);
  for (char& c : t)
    if (c == ',') c = ' ';
  std::stringstream ss(t);
  std::string tok;
  while (ss >> tok) {
    std::size_t pos = 0;
    int a;
    try {
      a = std::stoi(tok, &pos);
    } catch (...) {
      throw ParseError("bad braid letter '" + tok + "'");
    }
    if (pos != tok.size()) throw ParseError("bad braid letter '" + tok + "'");
    v.push_back(a);
  }
  return BraidWord(k, v);
}

BraidWord BraidWord::prefix(int m) const { return BraidWord(k_, {l_.begin(), l_.begin() + m}); }
BraidWord BraidWord::suffix_from(int m) const { return BraidWord(k_, {l_.begin() + m, l_.end()}); }
BraidWord BraidWord::slice(int from, int to) const {
  if (to < from) return BraidWord(k_, {});
  return BraidWord(k_, {l_.begin() + (from - 1), l_.begin() + to});
}

BraidWord operator*(const BraidWord& a, const BraidWord& b) {
  if (a.k_ != b.k_) throw DimensionMismatch("braid words with different strand counts");
  std::vector<int> l = a.l_;
  l.insert(l.end(), b.l_.begin(), b.l_.end());
  return BraidWord(a.k_, l);
}

std::string BraidWord::str() const {
  std::string s;
  for (int a : l_) {
    if (!s.empty()) s += ' ';
    s += std::to_string(a);
  }
  return s;
}

Permutation word_permutation(const BraidWord& b) {
  Permutation w = Permutation::identity(b.k());
  for (int a : b.letters()) w = w.times_simple(a);
  return w;
}

bool is_reduced(const BraidWord& b) { return word_permutation(b).length() == b.size(); }

Permutation demazure_step(const Permutation& w, int i) {
  return w(i) < w(i + 1) ? w.times_simple(i) : w;
}

Permutation demazure_product(const BraidWord& b) {
  Permutation w = Permutation::identity(b.k());
  for (int a : b.letters()) w = demazure_step(w, a);
  return w;
}

Permutation demazure_product_right(const BraidWord& b) {
  Permutation w = Permutation::identity(b.k());
  for (auto it = b.letters().rbegin(); it != b.letters().rend(); ++it) {
    // s_i * w is longer iff i precedes i+1 in the one-line notation of w
    Permutation s = Permutation::simple(b.k(), *it);
    Permutation sw = s * w;
    if (sw.length() > w.length()) w = sw;
  }
  return w;
}

Permutation demazure_star(const Permutation& v, const Permutation& w) {
  return demazure_product(positive_lift(v) * positive_lift(w));
}

BraidWord positive_lift(const Permutation& w) {
  std::vector<int> word;
  Permutation x = w;
  for (;;) {
    int d = 0;
    for (int i = x.k() - 1; i >= 1; --i)
      if (x(i) > x(i + 1)) {
        d = i;
        break;
      }
    if (!d) break;
    word.push_back(d);
    x = x.times_simple(d);
  }
  std::reverse(word.begin(), word.end());
  return BraidWord(w.k(), word);
}

BraidWord delta_word(int k) {
  std::vector<int> l;
  for (int lo = 1; lo <= k - 1; ++lo)
    for (int a = k - 1; a >= lo; --a) l.push_back(a);
  return BraidWord(k, l);
}

BraidWord lift_with_prefix(const Permutation& w) {
  Permutation rest = w.inverse() * Permutation::longest(w.k());
  return positive_lift(w) * positive_lift(rest);
}

namespace {
void collect_words(const Permutation& w, std::vector<int>& suffix, std::vector<BraidWord>& out) {
  if (w.is_identity()) {
    out.emplace_back(w.k(), std::vector<int>(suffix.rbegin(), suffix.rend()));
    return;
  }
  for (int i = 1; i < w.k(); ++i)
    if (w(i) > w(i + 1)) {
      suffix.push_back(i);
      collect_words(w.times_simple(i), suffix, out);
      suffix.pop_back();
    }
}
}  // namespace

std::vector<BraidWord> reduced_words(const Permutation& w) {
  std::vector<BraidWord> out;
  std::vector<int> suffix;
  collect_words(w, suffix, out);
  return out;
}

}  // namespace bsp
