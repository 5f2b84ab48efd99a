#include "gz/cross_section.hpp"

#include <cmath>

namespace gz {

// Expanding det(lambda I_m - x_m) down the last column of the unit-subdiagonal
// form gives
//   P_m = (lambda - a_mm) g_{m-1} - sum_{i<m} a_im g_{i-1},
// with g_j the charpoly of the level-j cutoff. Hence lambda g_{m-1} - P_m =
// sum_{i=1..m} a_im g_{i-1}, and since the g_j are monic of degree j the
// column falls out by peeling leading coefficients (synthetic division).
// Signs here are calibrated by the roundtrip phi(invert_phi(c)) == c.
CMatrix invert_phi(const GZCoord& c) {
  if (c.n < 1 || static_cast<int>(c.values.size()) != d(c.n)) {
    throw std::invalid_argument("invert_phi: inconsistent coordinate vector");
  }
  const int n = c.n;
  CMatrix x = CMatrix::Zero(n, n);
  for (int i = 1; i < n; ++i) x(i, i - 1) = Complex(1.0);

  std::vector<detail::Poly> g(n + 1);
  g[0] = {Complex(1.0)};
  for (int m = 1; m <= n; ++m) {
    // The construction forces charpoly(x_m) == P_m, so the target polynomial
    // doubles as g_m.
    g[m] = detail::to_dense(level_poly(c, m));

    detail::Poly r(m + 1, Complex(0.0));
    for (std::size_t j = 0; j < g[m - 1].size(); ++j) r[j + 1] = g[m - 1][j];
    for (int j = 0; j <= m; ++j) r[j] -= g[m][j];
    // r has degree <= m-1; its expansion over {g_{m-1}, ..., g_0} is read off
    // top down.
    for (int j = m - 1; j >= 0; --j) {
      Complex coeff = r[j];
      for (std::size_t i = 0; i < g[j].size(); ++i) r[i] -= coeff * g[j][i];
      x(j, m - 1) = coeff;  // a_{j+1, m}
    }
  }
  return x;
}

CMatrix invert_phi_with_subdiag(const GZCoord& c, const std::vector<Complex>& z) {
  if (static_cast<int>(z.size()) != c.n - 1) {
    throw std::invalid_argument("invert_phi_with_subdiag: need n-1 subdiagonal values");
  }
  for (Complex zi : z) {
    if (zi == Complex(0.0)) {
      throw DomainError("invert_phi_with_subdiag: zero subdiagonal entry");
    }
  }
  CMatrix x = invert_phi(c);
  const int n = c.n;
  // Conjugation by diag(d) with d_1 = 1, d_{i+1} = d_i z_i scales the
  // subdiagonal to z and leaves every coordinate fixed.
  CVector dd(n);
  dd(0) = Complex(1.0);
  for (int i = 1; i < n; ++i) dd(i) = dd(i - 1) * z[i - 1];
  for (int i = 0; i < n; ++i) {
    for (int j = 0; j < n; ++j) {
      x(i, j) *= dd(i) / dd(j);
    }
  }
  return x;
}

}  // namespace gz
