#pragma once

#include <string>
#include <vector>

#include "braidsplice/flags.hpp"
#include "braidsplice/splice.hpp"

namespace bsp {

// lift(w) * lift(u^{-1} w0); throws BruhatViolation unless u <= w
BraidWord richardson_braid(const Permutation& u, const Permutation& w);

// number of distinct letters in a reduced word of w
int frozen_count_base(const Permutation& w);

enum class FactorKind { Principal, New, Uncertified };

struct MinorFactor {
  Polynomial factor;  // monic
  unsigned exponent = 1;
  FactorKind kind = FactorKind::New;
};

struct MinorEntry {
  int i = 0;
  std::vector<int> rows;  // v[i], sorted
  Polynomial minor;
  std::vector<MinorFactor> factors;
};

struct SCount {
  int s = 0;
  bool complete = true;
  std::vector<Polynomial> pool;  // principal minors first, then hints
  std::vector<MinorEntry> minors;
  std::vector<Polynomial> new_factors;
};

// Whether p is irreducible over C, decided only in the certified cases:
// p linear in some variable with coprime coefficients, or total degree 2
// with homogenized quadric of rank >= 3. Returns false when undecided.
bool certified_irreducible(const Polynomial& p);

// Distinct irreducible factors of the minors Delta_{v[i],[i]}(B_{lift w}(z))
// that are not principal minors of B_{lift w}(z).
SCount s_count(const Permutation& v, const Permutation& w, const std::vector<Polynomial>& pool_hints = {});

// f_{e,w} - f_{e,v} + s_{v,w}; throws IncompleteFactorization
int frozen_count(const Permutation& v, const Permutation& w, const std::vector<Polynomial>& pool_hints = {});

// f_{u,v} + f_{v,w} >= f_{u,w}
bool frozen_inequality_check(const Permutation& u, const Permutation& v, const Permutation& w);

// The Richardson splice at r1 = l(w) with chart parameter w0 v w0. The
// first factor models R(v,w), the second R(u,v):
//   braid_vw = lift(w0 v^{-1}) lift(w) = richardson_braid(w0 w^{-1}, w0 v^{-1})
//   braid_uv = lift(u^{-1} w0) lift(w0 v w0) = richardson_braid(v^{-1} w0, u^{-1} w0)
struct RichardsonSplit {
  BraidWord braid_vw, braid_uv;
  Point pt_vw, pt_uv;
};

RichardsonSplit richardson_splice(const Permutation& u, const Permutation& v, const Permutation& w, const Point& pt);
Point richardson_unsplice(const Permutation& u, const Permutation& v, const Permutation& w, const Point& pt_vw,
                          const Point& pt_uv);
// pt in X(richardson_braid(u, w)) lies in the image chart U_{u,v,w}
bool richardson_chart_membership(const Permutation& u, const Permutation& v, const Permutation& w, const Point& pt);

struct ChainFactor {
  Permutation u, w;  // the factor models R(u, w)
  BraidWord braid;
  Point pt;
};

// Split along a Bruhat chain c0 < c1 < ... < cn by repeated Richardson
// splices, always cutting the R(c0, c1) factor off the bottom.
std::vector<ChainFactor> chain_splice(const std::vector<Permutation>& chain, const Point& pt);

// r - rank of the Jacobian of the equations of X(beta) at z
int braid_variety_dimension_at(const BraidWord& b, const Point& z);

}  // namespace bsp
