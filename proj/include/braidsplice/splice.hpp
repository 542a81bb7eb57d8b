#pragma once

#include <map>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "braidsplice/cluster.hpp"
#include "braidsplice/flags.hpp"
#include "braidsplice/symmat.hpp"

namespace bsp {

// Outcome of a verification harness run. `data` holds named values worth
// reporting (counts, monomials), in insertion order.
struct CheckReport {
  std::string check;
  int instances = 0;
  std::vector<std::string> failures;
  std::vector<std::pair<std::string, std::string>> data;
  bool ok() const { return failures.empty(); }
  void fail(std::string what) { failures.push_back(std::move(what)); }
};

// Symbolic DBS splice at r1, over z1..zr. B_{beta1}(z_L) = L1 U1 and
// U1 B_{beta2}(z_R) = B_{beta2}(zprime) U1_out.
struct SpliceWitness {
  BraidWord beta;
  int r1 = 0;
  std::optional<Permutation> w;
  SymMatrix L1, U1, U1_out;
  std::vector<RationalFunction> zprime;  // z'_{r1+1}, ..., z'_r
  BraidWord beta1() const { return beta.prefix(r1); }
  BraidWord beta2() const { return beta.suffix_from(r1); }
};

SpliceWitness dbs_splice_forward(const BraidWord& b, int r1);
// point version; throws NotInDBS off U_{r1}(beta)
std::pair<Point, Point> dbs_splice_forward(const BraidWord& b, int r1, const Point& z);
Point dbs_splice_inverse(const BraidWord& b, int r1, const Point& zL, const Point& zRprime);

// m_l as a Laurent monomial in u1..uk (variables make_var('u', s))
LaurentMonomial splice_monomial(const BraidWord& b, int r1, int l);
// same monomial, following strands of beta2 leftwards from the crossing
LaurentMonomial splice_monomial_by_strands(const BraidWord& b, int r1, int l);
// m_l with u_s replaced by the frozen monomials of beta1, as a monomial in
// x_j = make_var('x', j)
LaurentMonomial splice_monomial_in_x(const BraidWord& b, int r1, int l);

CheckReport verify_variable_transport(const BraidWord& b, int r1);
// exchange ratios at the given mutable vertices of the open seed (all of
// them when empty), in formal cluster variables x_j
CheckReport verify_exchange_ratios(const BraidWord& b, int r1, const std::vector<int>& vertices = {});
// frozen counts f1 + f2 >= f, with f1 + f2 matched against the open seed
CheckReport frozen_bookkeeping(const BraidWord& b, int r1);

// BS(beta) -> X(beta Delta) and BS(beta) -> X(Delta beta), Delta = delta_word(k)
Point phi1(const BraidWord& b, const Point& z);
Point phi2(const BraidWord& b, const Point& z);

// U_{r1,w}(beta) -> X(lift(w^-1 w0) beta1) x X(beta2 lift(w))
std::pair<Point, Point> braid_splice_forward(const BraidWord& b, int r1, const Permutation& w, const Point& z);
Point braid_splice_inverse(const BraidWord& b, int r1, const Permutation& w, const Point& pt1, const Point& pt2);
// the two braids the forward map lands in
std::pair<BraidWord, BraidWord> braid_splice_targets(const BraidWord& b, int r1, const Permutation& w);

CheckReport verify_compat_diagrams(const BraidWord& b, int r1, int samples, std::uint64_t seed = 1);
// braid_splice round trips at chart points, for every w whose chart is hit
CheckReport verify_braid_round_trips(const BraidWord& b, int r1, int samples, std::uint64_t seed = 1);
CheckReport verify_dbs_round_trips(const BraidWord& b, int r1, int samples, std::uint64_t seed = 1);

}  // namespace bsp
