#pragma once

#include <vector>

#include "gz/types.hpp"

namespace gz {

// Basis of the algebra generated by the level-m cutoff: embedded powers
// (x_m)^j, j = 0..m-1. powers[0] is the embedded identity.
struct CentralizerBasis {
  int m = 0;
  std::vector<CMatrix> powers;
};

CentralizerBasis centralizer_basis(const CMatrix& x, int m);

// The cutoff x_m is regular: its m centralizer generators are independent.
bool is_regular_cutoff(const CMatrix& x, int m, double rank_tol);

// All d(n) centralizer generators across the levels are independent.
bool is_strongly_regular(const CMatrix& x, double rank_tol);

// Equivalent form: every cutoff regular and adjacent centralizer algebras
// intersect trivially (stacked rank 2m+1 at each adjacent pair).
bool is_strongly_regular_pairwise(const CMatrix& x, double rank_tol);

// Brackets [(x_m)^{m-k}, x] for m = 1..n-1, k = 1..m, in that order. Level n
// is dropped: those brackets vanish identically.
std::vector<CMatrix> tangent_space_basis(const CMatrix& x);

// Rank of tangent_space_basis; equals d(n-1) exactly when x is strongly
// regular.
int orbit_dim(const CMatrix& x, double rank_tol);

// tr(x [za, zb]); vanishes when za, zb are centralizer generators of cutoffs
// of x (the pairing is isotropic on that span).
Complex symplectic_pairing(const CMatrix& x, const CMatrix& za, const CMatrix& zb);

}  // namespace gz
