#pragma once

#include <cstdint>

#include "braidsplice/splice.hpp"

namespace bsp {

// Randomized symbolic identities on braid words with k <= kmax and at most
// max_len letters. Each returns one report with `samples` instances.

// U B_beta(z) = B_beta(z') U' with diag(U') the diagonal of U permuted by
// the word permutation
CheckReport check_slide_identity(int samples, std::uint64_t seed, int kmax = 4, int max_len = 10);
// left-justified minors of B_beta are unchanged by appending B_j, on rows of
// size i != j
CheckReport check_cauchy_binet(int samples, std::uint64_t seed, int kmax = 4, int max_len = 10);
// L U = B_beta(z), L unit lower, U upper, or a principal minor vanishes
CheckReport check_lu_reconstruction(int samples, std::uint64_t seed, int kmax = 4, int max_len = 10);
// closed form of B_Delta against the product, 2 <= k <= kmax
CheckReport check_delta_closed_form(int kmax = 5);
// mu_v mu_v = id on random quivers and on formal seeds; both mutation rules
CheckReport check_mutation_involution(int samples, std::uint64_t seed);
// left fold, right fold and the longest reduced subword agree
CheckReport check_demazure_two_way(int samples, std::uint64_t seed, int kmax = 4, int max_len = 10);
// v * w = w0  <=>  w0 w^{-1} <= v  <=>  v^{-1} w0 <= w, for all pairs of S_k
CheckReport check_three_way(int k = 4);

}  // namespace bsp
