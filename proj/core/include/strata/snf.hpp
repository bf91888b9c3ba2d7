#pragma once

#include <optional>
#include <vector>

#include "strata/sparse_matrix.hpp"

namespace strata {

// Smith normal form U*M*V = D with U, V unimodular and D = diag(d_1,...,d_r),
// d_i > 0, d_1 | d_2 | ... | d_r.
struct snf_result {
  sparse_matrix U, D, V;
};

snf_result smith_normal_form(const sparse_matrix& m);

// Rank and nontrivial invariant factors (> 1), without transforms. This is the
// memory-lean path used on large boundary matrices.
struct snf_invariants {
  long long rank = 0;
  std::vector<zint> divisors;  // invariant factors > 1, divisibility chain
};
snf_invariants smith_invariants(sparse_matrix m);

long long rank_z(sparse_matrix m);

// Basis of {x : Mx = 0}, as matrix columns. The basis spans the full solution
// lattice (saturated).
sparse_matrix integer_kernel(const sparse_matrix& m);

// Generators of {x : Mx in colspan_Z(S)}, as matrix columns.
sparse_matrix relative_kernel(const sparse_matrix& m, const sparse_matrix& s);

// Expresses vectors in the integer column span of a fixed matrix B.
// solve(y) returns x with B x = y, or nullopt when y is not in the lattice.
class lattice_solver {
 public:
  explicit lattice_solver(const sparse_matrix& basis);
  std::optional<std::vector<zint>> solve(const std::vector<zint>& y) const;
  // Columns of Y solved in one pass; throws if any column fails.
  sparse_matrix solve_matrix(const sparse_matrix& y) const;

  int dim() const { return n_basis_; }

 private:
  int n_basis_ = 0, n_amb_ = 0;
  sparse_matrix ech_;    // echelonized basis vectors, as rows
  sparse_matrix trans_;  // ech_ = trans_ * original-basis-as-rows
  std::vector<int> pivot_col_;
};

// Image of a lattice under a coordinate projection. Given basis columns B of a
// lattice in Z^n and a subset of coordinates to keep, computes a basis of the
// projected lattice plus a lift of each basis vector back into the source.
struct projected_lattice {
  sparse_matrix basis;  // columns, coordinates = kept coords (size = #keep)
  sparse_matrix lifts;  // columns in the source lattice, same count as basis
};
projected_lattice project_lattice(const sparse_matrix& basis_cols,
                                  const std::vector<char>& keep);

// Canonical divisor chain of a finite direct sum of cyclic groups Z/d_i
// (d_i >= 2 arbitrary): returns t_1 | t_2 | ... | t_k, all >= 2.
std::vector<zint> invariant_factor_chain(std::vector<zint> ds);

}  // namespace strata
