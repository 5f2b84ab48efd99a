#pragma once

#include <complex>
#include <stdexcept>

#include <Eigen/Dense>

namespace gz {

using Complex = std::complex<double>;
using CMatrix = Eigen::MatrixXcd;
using CVector = Eigen::VectorXcd;

// Number of coordinate functions through level m.
constexpr int d(int m) { return m * (m + 1) / 2; }

// Input lies outside the mathematical domain of an operation: wrong level
// range, degenerate spectrum, non-interlacing data, and the like.
class DomainError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

// A computation failed for numerical reasons: non-convergence, overflow,
// near-singular normalization.
class NumericalError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

struct ToleranceConfig {
  double rank_tol = 1e-9;      // relative singular value threshold
  double eq_tol = 1e-8;        // entrywise equality threshold
  double disjoint_tol = 1e-7;  // minimum eigenvalue separation
};

// Throws std::invalid_argument unless every tolerance is strictly positive.
void validate(const ToleranceConfig& tol);

}  // namespace gz
