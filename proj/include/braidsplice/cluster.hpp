#pragma once

#include <array>
#include <vector>

#include "braidsplice/combinat.hpp"
#include "braidsplice/exactalg.hpp"

namespace bsp {

// Ice quiver on vertices 1..n, stored as its signed adjacency matrix
// b(i,j) = #(i -> j) - #(j -> i).
class Quiver {
 public:
  Quiver() = default;
  explicit Quiver(int n) : n_(n), b_(static_cast<std::size_t>(n) * n, 0), frozen_(n, false) {}

  int n() const { return n_; }
  int b(int i, int j) const { return b_[idx(i, j)]; }
  void add_arrows(int i, int j, int mult = 1);
  bool is_frozen(int v) const { return frozen_[v - 1]; }
  void set_frozen(int v, bool f = true) { frozen_[v - 1] = f; }
  std::vector<int> frozen() const;
  std::vector<int> mutable_vertices() const;
  // (source, target, multiplicity), sorted
  std::vector<std::array<int, 3>> arrows() const;

  friend bool operator==(const Quiver& a, const Quiver& b) {
    return a.n_ == b.n_ && a.b_ == b.b_ && a.frozen_ == b.frozen_;
  }
  friend bool operator!=(const Quiver& a, const Quiver& b) { return !(a == b); }

 private:
  std::size_t idx(int i, int j) const;
  int n_ = 0;
  std::vector<int> b_;
  std::vector<bool> frozen_;
};

struct Seed {
  Quiver quiver;
  std::vector<RationalFunction> x;  // x[v-1] sits at vertex v
  const RationalFunction& var(int v) const { return x[v - 1]; }
};

// Rows: mutable vertices then frozen ones (increasing labels); columns:
// mutable vertices.
struct ExtendedExchangeMatrix {
  std::vector<int> row_labels, col_labels;
  std::vector<std::vector<long>> b;
  int n_mutable() const { return static_cast<int>(col_labels.size()); }
  int n_frozen() const { return static_cast<int>(row_labels.size()) - n_mutable(); }
  friend bool operator==(const ExtendedExchangeMatrix& a, const ExtendedExchangeMatrix& b) { return a.b == b.b; }
};

// last[s] = position of the last letter s in beta, 0 if absent (s = 1..k-1)
std::vector<int> last_positions(const BraidWord& b);

// quiver of the braid diagram, from the consecutive-appearance rules
Quiver quiver_from_braid(const BraidWord& b);
// same quiver, built by one left-to-right sweep that emits the mixed
// arrows of a region when the region closes
Quiver quiver_from_braid_sweep(const BraidWord& b);

// x_j = Delta_{[i_j],[i_j]}(B_{beta<=j}(z_1..z_j)) over the given variables
Seed dbs_seed(const BraidWord& b, const std::vector<Var>& vars);
Seed dbs_seed(const BraidWord& b);  // variables z1..zr

// matrix mutation rule
Quiver mutate(const Quiver& q, int v);
// add paths through v, reverse arrows at v, cancel 2-cycles
Quiver mutate_by_arrows(const Quiver& q, int v);
Seed mutate(const Seed& s, int v);

RationalFunction exchange_ratio(const Seed& s, int v);

Quiver freeze(Quiver q, const std::vector<int>& vertices);
Seed freeze(Seed s, const std::vector<int>& vertices);

ExtendedExchangeMatrix extended_exchange_matrix(const Quiver& q);

// u_1..u_k as Laurent monomials in x_j = make_var('x', j)
std::vector<LaurentMonomial> frozen_diag_units(const BraidWord& b);

// b restricted to the mutable vertices of both quivers agrees, and every
// arrow between mutable vertices of a runs inside one of the given blocks
bool mutable_part_is_union(const Quiver& q, const std::vector<std::pair<Quiver, int>>& blocks);

}  // namespace bsp
