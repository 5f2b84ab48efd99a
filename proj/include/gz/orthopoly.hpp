#pragma once

#include <vector>

#include "gz/coordinates.hpp"
#include "gz/types.hpp"

namespace gz {

// Finitely supported positive measure sum_i w_i delta_{t_i} on the real line.
// Nodes distinct, weights strictly positive.
struct DiscreteMeasure {
  std::vector<double> nodes;
  std::vector<double> weights;
};

void validate(const DiscreteMeasure& mu);

// Monic recurrence p_{m+1} = (lambda - c_m) p_m - b_m p_{m-1}, b_m > 0.
struct ThreeTermRecurrence {
  std::vector<double> diag;     // c_0 .. c_{n-1}
  std::vector<double> offdiag;  // b_1 .. b_{n-1}
};

// Coefficient rows (low degree first, row k of length k+1) of the orthonormal
// polynomials phi_0..phi_{count-1} with positive leading coefficients.
// Gram-Schmidt on the moment Gram matrix with one reorthogonalization pass.
std::vector<std::vector<double>> orthonormal_polys(const DiscreteMeasure& mu,
                                                   int count);

// Symmetric tridiagonal matrix of multiplication by t in the orthonormal
// basis phi_0..phi_{n-1}; off-diagonal entries positive.
CMatrix jacobi_matrix(const DiscreteMeasure& mu, int n);

// Monic orthogonal polynomials match the cutoff characteristic polynomials of
// the Jacobi matrix, coefficientwise within tol, for every level up to n.
bool verify_monic_match(const DiscreteMeasure& mu, int n, double tol);

// Recovers the monic three-term recurrence from the level polynomials of an
// interlacing tower; every b_m must come out positive.
ThreeTermRecurrence recurrence_from_tower(const SpectrumTower& t,
                                          const ToleranceConfig& tol);

// Symmetric tridiagonal with diagonal c_m and off-diagonal sqrt(b_m).
CMatrix jacobi_from_recurrence(const ThreeTermRecurrence& r);

}  // namespace gz
