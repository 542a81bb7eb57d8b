#pragma once

#include <cstdint>
#include <random>
#include <vector>

#include "braidsplice/symmat.hpp"

namespace bsp {

using Point = std::vector<Rational>;

// F(M): the flag of leading column spans of an invertible matrix
struct FlagPoint {
  QMatrix M;
  explicit FlagPoint(QMatrix m);
  static FlagPoint of(const Permutation& w) { return FlagPoint(perm_matrix<Rational>(w)); }
};

// unique w with dim(F_i ∩ F'_j) = #([i] ∩ w[j])
Permutation relative_position(const FlagPoint& a, const FlagPoint& b);
bool is_transverse(const FlagPoint& a, const FlagPoint& b);

// w0 B_beta(z) upper-triangular
bool in_braid_variety(const Point& z, const BraidWord& b);
// all principal minors of B_beta(z) nonzero
bool in_dbs(const Point& z, const BraidWord& b);
// F(B_{beta<=r1}(z)) transverse to F(w0 w); throws NotOnVariety off X(beta)
bool chart_membership(const Point& z, const BraidWord& b, int r1, const Permutation& w);
// Delta_{v w0 [i],[i]}(M) != 0 for all i, i.e. F(M) transverse to F(v)
bool transverse_minors_nonzero(const QMatrix& m, const Permutation& v);

// Random exact points. Values are p/q with |p| <= 9 and 1 <= q <= 9.
class Sampler {
 public:
  explicit Sampler(std::uint64_t seed) : rng_(seed) {}

  Rational rational();
  Rational nonzero();
  Point free_point(int n);
  // point of BS(beta); throws NotInDBS after 64 failed draws
  Point dbs_point(const BraidWord& b);
  // Point of X(beta), built letter by letter while tracking the position
  // of F(B_{beta<=j}) relative to F(w0). Where the position may either stay
  // or drop, it stays with probability stay_bias (if that remains feasible).
  Point braid_point(const BraidWord& b, double stay_bias = 0.75);
  // point of X(beta) for beta ending in a reduced word of w0: the prefix
  // is drawn from BS and the tail coordinates are solved for
  Point braid_point_from_bs(const BraidWord& b);
  // point of X(beta) in the chart U_{r1,w}; throws NotInChart after 64 draws
  Point chart_point(const BraidWord& b, int r1, const Permutation& w);
  std::mt19937_64& rng() { return rng_; }

 private:
  std::mt19937_64 rng_;
};

// length of the shortest suffix that is a reduced word for w0, or -1
int w0_suffix_start(const BraidWord& b);

// y with w0 B_beta(z) B_tail(y) upper-triangular, for z in BS(beta) and
// tail a reduced word of w0
Point complete_to_w0(const Point& z, const BraidWord& b, const BraidWord& tail);

}  // namespace bsp
