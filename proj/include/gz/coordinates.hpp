#pragma once

#include <vector>

#include "gz/linalg.hpp"
#include "gz/types.hpp"

namespace gz {

// The d(n) values f_{k,m}(x), 1 <= k <= m <= n, stored level by level:
// values[d(m-1) + k - 1] = f_{k,m}. Level m holds the coefficient data of the
// characteristic polynomial of the m x m cutoff; f_{m,m} is its trace and
// f_{1,m} its determinant.
struct GZCoord {
  int n = 0;
  std::vector<Complex> values;
};

// Eigenvalues of every cutoff; level m holds m values in lexicographic order.
struct SpectrumTower {
  int n = 0;
  std::vector<std::vector<Complex>> levels;
};

GZCoord phi(const CMatrix& x);

// f_{k,m} read out of c.
Complex coord_value(const GZCoord& c, int k, int m);

// Monic level polynomial: lambda^m + sum_k (-1)^{m-k+1} f_{k,m} lambda^{k-1}.
MonicPoly level_poly(const GZCoord& c, int m);

SpectrumTower tower_from_coord(const GZCoord& c, double tie_tol);
GZCoord coord_from_tower(const SpectrumTower& t);
SpectrumTower tower_from_matrix(const CMatrix& x, double tie_tol);

// f_(k,m)(x) = tr((x_m)^{m+1-k}) / (m+1-k).
Complex trace_invariant(const CMatrix& x, int k, int m);

bool same_fiber(const CMatrix& x, const CMatrix& y, double eq_tol);

// Every pair of eigenvalues within one level and across adjacent levels is
// separated by more than disjoint_tol.
bool is_disjoint(const SpectrumTower& t, double disjoint_tol);
bool is_disjoint(const GZCoord& c, const ToleranceConfig& tol);

// Real tower (|Im| <= eq_tol throughout) satisfying the strict interlacing
// chain at every adjacent pair, each inequality with margin disjoint_tol.
bool is_interlacing(const SpectrumTower& t, const ToleranceConfig& tol);

}  // namespace gz
