#pragma once

#include <map>
#include <optional>
#include <string>
#include <vector>

#include <gmpxx.h>

#include "braidsplice/cluster.hpp"
#include "braidsplice/splice.hpp"

namespace bsp {

using IntMatrix = std::vector<std::vector<long>>;
using ZMatrix = std::vector<std::vector<mpz_class>>;

ZMatrix to_z(const IntMatrix& a);
mpz_class det(const ZMatrix& a);  // Bareiss
int rank(const ZMatrix& a);

// Row-style Hermite normal form: U a = H with U unimodular, H in row echelon
// form, positive pivots, entries above a pivot reduced into [0, pivot).
struct HermiteForm {
  ZMatrix H, U;
  std::vector<int> pivots;  // pivot column of each nonzero row of H
};
HermiteForm hermite_form(const ZMatrix& a);

// nonzero invariant factors d1 | d2 | ... of the Smith form
std::vector<mpz_class> smith_invariants(const ZMatrix& a);

// rows of b span Z^{cols}
bool really_full_rank(const IntMatrix& b);

// an integer x with x b = t, if one exists
std::optional<std::vector<long>> solve_integer_row(const IntMatrix& b, const std::vector<long>& t);

// R = [[1_n, 0], [P, Q]] acting on extended exchange matrices by R B = B'.
struct WitnessMatrix {
  int n = 0, m = 0;
  IntMatrix R;
  IntMatrix P() const;
  IntMatrix Q() const;
  mpz_class det_Q() const;
};

WitnessMatrix identity_witness(int n, int m);

bool verify_witness(const WitnessMatrix& r, const ExtendedExchangeMatrix& src, const ExtendedExchangeMatrix& tgt);

// R2 R1: maps the source of R1 to the target of R2
WitnessMatrix compose(const WitnessMatrix& r2, const WitnessMatrix& r1);

// Search result. The frozen rows of R are chosen one at a time from the
// integer solutions of x Bsrc = (target row) with all |x_j| <= bound, ranked
// by distance to the identity row (l1, then max norm, then lexicographic);
// the first row-by-row choice in that order with det Q = +-1 is returned.
struct WitnessSearch {
  std::optional<WitnessMatrix> witness;
  int bound = 3;
  std::vector<int> mutations;  // applied to the target before matching
  long nodes = 0;              // search tree nodes visited
  std::string reason;          // why nothing was found
};

// throws DimensionMismatch, PrincipalMismatch
WitnessSearch find_witness(const ExtendedExchangeMatrix& src, const ExtendedExchangeMatrix& tgt, int bound = 3);

// Breadth-first over mutation sequences of the target (columns, 1-based)
// up to the given depth; the first target admitting a witness wins.
WitnessSearch find_witness_up_to_mutation(const ExtendedExchangeMatrix& src, const ExtendedExchangeMatrix& tgt,
                                          int bound = 3, int depth = 3);

// matrix mutation at column c (1-based)
ExtendedExchangeMatrix mutate(const ExtendedExchangeMatrix& b, int c);

// block sum: mutable rows of a, mutable rows of b, frozen rows of a, frozen
// rows of b; labels of b are shifted by the row count of a
ExtendedExchangeMatrix direct_sum(const ExtendedExchangeMatrix& a, const ExtendedExchangeMatrix& b);

// Phi(x_j) = prod_i z_i^{r_ij}. Keys and variables use the row labels of
// the source and target matrices, taken as make_var(prefix, label).
std::map<int, LaurentMonomial> variable_map_from_witness(const WitnessMatrix& r, const ExtendedExchangeMatrix& src,
                                                         const ExtendedExchangeMatrix& tgt, char prefix = 'x');

// Exchange matrices of the product seed Q_{beta1} x Q_{beta2} (vertices
// relabelled 1..r as in beta) and of the open seed of the DBS splice, with
// the witness read off from the transported variables x_j -> m_j x_j.
struct ProductWitness {
  ExtendedExchangeMatrix product, open;
  WitnessMatrix R;
};
ProductWitness dbs_product_witness(const BraidWord& b, int r1);

// The transported witness verifies, find_witness finds one too, and the
// frozen counts satisfy f1 + f2 = f_open >= f.
CheckReport verify_product_witness(const BraidWord& b, int r1, int bound = 3);

}  // namespace bsp
