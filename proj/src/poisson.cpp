#include "gz/poisson.hpp"

#include <cmath>

#include "gz/coordinates.hpp"
#include "gz/linalg.hpp"

namespace gz {

Complex num_bracket(const CMatrix& grad_f, const CMatrix& grad_g, const CMatrix& x) {
  if (grad_f.rows() != x.rows() || grad_g.rows() != x.rows() ||
      grad_f.cols() != x.cols() || grad_g.cols() != x.cols()) {
    throw std::invalid_argument("num_bracket: shape mismatch");
  }
  return (x * (grad_g * grad_f - grad_f * grad_g)).trace();
}

CMatrix entry_gradient(int n, int i, int j) {
  if (i < 1 || i > n || j < 1 || j > n) {
    throw std::invalid_argument("entry_gradient: index out of range");
  }
  CMatrix e = CMatrix::Zero(n, n);
  e(j - 1, i - 1) = Complex(1.0);  // tr(e_ji v) = v_ij
  return e;
}

CMatrix invariant_gradient(const CMatrix& x, FlowKey key) {
  detail::require_square(x, "invariant_gradient");
  const int n = static_cast<int>(x.rows());
  if (key.m < 1 || key.m > n || key.k < 1 || key.k > key.m) {
    throw std::invalid_argument("invariant_gradient: key out of range");
  }
  CMatrix xm = cutoff(x, key.m);
  CMatrix p = CMatrix::Identity(key.m, key.m);
  for (int i = 0; i < key.m - key.k; ++i) p = p * xm;
  return embed(p, n);
}

double gradient_fd_error(const CMatrix& x, FlowKey key, double h) {
  if (!(h > 0)) throw std::invalid_argument("gradient_fd_error: step must be positive");
  const int n = static_cast<int>(x.rows());
  CMatrix exact = invariant_gradient(x, key);
  double worst = 0.0;
  for (int i = 0; i < n; ++i) {
    for (int j = 0; j < n; ++j) {
      CMatrix xp = x, xm_ = x;
      xp(i, j) += h;
      xm_(i, j) -= h;
      Complex fd = (trace_invariant(xp, key.k, key.m) -
                    trace_invariant(xm_, key.k, key.m)) /
                   (2 * h);
      // tr(grad e_ij) picks out entry (j, i) of the gradient.
      worst = std::max(worst, std::abs(fd - exact(j, i)));

      xp = x;
      xm_ = x;
      xp(i, j) += Complex(0.0, h);
      xm_(i, j) -= Complex(0.0, h);
      fd = (trace_invariant(xp, key.k, key.m) -
            trace_invariant(xm_, key.k, key.m)) /
           Complex(0.0, 2 * h);
      worst = std::max(worst, std::abs(fd - exact(j, i)));
    }
  }
  return worst;
}

}  // namespace gz
