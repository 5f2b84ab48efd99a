#pragma once

#include <cstdint>
#include <vector>

#include "gz/coordinates.hpp"
#include "gz/flows.hpp"

namespace gz {

struct NormalFormResult {
  CMatrix canonical;  // unit superdiagonal, zeros above it
  GroupWord word;     // act(base, word) == canonical
};

// Krylov criterion: {v, x_m v, ..., x_m^{m-1} v} has rank m.
bool is_cyclic(const CMatrix& x, int m, const CVector& v, double rank_tol);

// Conjugates x (with pairwise-disjoint cutoff spectra) into the lower
// Hessenberg form with unit superdiagonal, one centralizer element per level,
// the whole conjugation recorded as a word based at x.
NormalFormResult normal_form(const CMatrix& x, const ToleranceConfig& tol);

// Same fiber over the disjoint locus and matching canonical forms.
bool a_conjugate_test(const CMatrix& x, const CMatrix& y, const ToleranceConfig& tol);

// Strict upper triangle: the chart coordinate on a fiber over the disjoint
// locus.
CMatrix beta(const CMatrix& x);

// Reconstructs the unique fiber point of c with the prescribed strict upper
// triangle u, level by level through the residues of the level polynomials.
CMatrix beta_inverse(const GZCoord& c, const CMatrix& u, const ToleranceConfig& tol);

struct SymmetricFiberMember {
  CMatrix x;
  std::uint64_t sign_index;  // little-endian over sign choices, level-1 bits lowest
};

// All 2^{d(n-1)} symmetric matrices with coordinates c (pairwise-disjoint c
// required), sorted by sign_index. Bit d(m-1)+i-1 set means the i-th branch
// sign at level m is -1.
std::vector<SymmetricFiberMember> symmetric_fiber(const GZCoord& c,
                                                  const ToleranceConfig& tol);

// Tridiagonal with nonzero entries adjacent to the diagonal.
bool is_jacobi(const CMatrix& x, double tol);

std::vector<SymmetricFiberMember> jacobi_members(
    const std::vector<SymmetricFiberMember>& fiber, double tol);

// The 2^{n-1} conjugates diag(eps, 1) x diag(eps, 1), little-endian in eps
// (bit i-1 set means eps_i = -1).
std::vector<CMatrix> diag_sign_orbit(const CMatrix& x);

// sqrt with nonnegative real part; ties resolved to nonnegative imaginary
// part.
Complex principal_sqrt(Complex z);

}  // namespace gz
