#include "gz/coordinates.hpp"

#include <cmath>

namespace gz {

namespace {

void require_coord(const GZCoord& c, const char* who) {
  if (c.n < 1 || static_cast<int>(c.values.size()) != d(c.n)) {
    throw std::invalid_argument(std::string(who) + ": inconsistent coordinate vector");
  }
}

void require_tower(const SpectrumTower& t, const char* who) {
  if (t.n < 1 || static_cast<int>(t.levels.size()) != t.n) {
    throw std::invalid_argument(std::string(who) + ": inconsistent tower");
  }
  for (int m = 1; m <= t.n; ++m) {
    if (static_cast<int>(t.levels[m - 1].size()) != m) {
      throw std::invalid_argument(std::string(who) + ": inconsistent tower");
    }
  }
}

// Sign carrying a charpoly coefficient to f_{k,m}: the level polynomial reads
// lambda^m + sum_k (-1)^{m-k+1} f_{k,m} lambda^{k-1}, so f_{m,m} is the trace
// and f_{1,m} the determinant of the cutoff.
double coeff_sign(int k, int m) { return ((m - k + 1) % 2 == 0) ? 1.0 : -1.0; }

}  // namespace

GZCoord phi(const CMatrix& x) {
  detail::require_square(x, "phi");
  const int n = static_cast<int>(x.rows());
  GZCoord c;
  c.n = n;
  c.values.resize(d(n));
  for (int m = 1; m <= n; ++m) {
    MonicPoly p = charpoly(cutoff(x, m));
    for (int k = 1; k <= m; ++k) {
      c.values[d(m - 1) + k - 1] = coeff_sign(k, m) * p.coeffs[k - 1];
    }
  }
  return c;
}

Complex coord_value(const GZCoord& c, int k, int m) {
  require_coord(c, "coord_value");
  if (m < 1 || m > c.n || k < 1 || k > m) {
    throw std::invalid_argument("coord_value: index out of range");
  }
  return c.values[d(m - 1) + k - 1];
}

MonicPoly level_poly(const GZCoord& c, int m) {
  require_coord(c, "level_poly");
  if (m < 1 || m > c.n) throw std::invalid_argument("level_poly: level out of range");
  MonicPoly p;
  p.degree = m;
  p.coeffs.resize(m);
  for (int k = 1; k <= m; ++k) {
    p.coeffs[k - 1] = coeff_sign(k, m) * c.values[d(m - 1) + k - 1];
  }
  return p;
}

SpectrumTower tower_from_coord(const GZCoord& c, double tie_tol) {
  require_coord(c, "tower_from_coord");
  SpectrumTower t;
  t.n = c.n;
  t.levels.resize(c.n);
  for (int m = 1; m <= c.n; ++m) {
    t.levels[m - 1] = eigenvalues_ordered(level_poly(c, m), tie_tol);
  }
  return t;
}

GZCoord coord_from_tower(const SpectrumTower& t) {
  require_tower(t, "coord_from_tower");
  GZCoord c;
  c.n = t.n;
  c.values.resize(d(t.n));
  for (int m = 1; m <= t.n; ++m) {
    MonicPoly p = monic_from_roots(t.levels[m - 1]);
    for (int k = 1; k <= m; ++k) {
      c.values[d(m - 1) + k - 1] = coeff_sign(k, m) * p.coeffs[k - 1];
    }
  }
  return c;
}

SpectrumTower tower_from_matrix(const CMatrix& x, double tie_tol) {
  return tower_from_coord(phi(x), tie_tol);
}

Complex trace_invariant(const CMatrix& x, int k, int m) {
  detail::require_square(x, "trace_invariant");
  if (m < 1 || m > x.rows() || k < 1 || k > m) {
    throw std::invalid_argument("trace_invariant: index out of range");
  }
  const int p = m + 1 - k;
  CMatrix xm = cutoff(x, m);
  CMatrix acc = CMatrix::Identity(m, m);
  for (int i = 0; i < p; ++i) acc = acc * xm;
  return acc.trace() / static_cast<double>(p);
}

bool same_fiber(const CMatrix& x, const CMatrix& y, double eq_tol) {
  if (x.rows() != y.rows()) return false;
  GZCoord cx = phi(x);
  GZCoord cy = phi(y);
  for (std::size_t i = 0; i < cx.values.size(); ++i) {
    if (std::abs(cx.values[i] - cy.values[i]) > eq_tol) return false;
  }
  return true;
}

bool is_disjoint(const SpectrumTower& t, double disjoint_tol) {
  require_tower(t, "is_disjoint");
  auto level_pair_ok = [&](const std::vector<Complex>& a,
                           const std::vector<Complex>& b) {
    for (Complex za : a) {
      for (Complex zb : b) {
        if (std::abs(za - zb) <= disjoint_tol) return false;
      }
    }
    return true;
  };
  for (int m = 0; m < t.n; ++m) {
    const auto& lv = t.levels[m];
    for (std::size_t i = 0; i < lv.size(); ++i) {
      for (std::size_t j = i + 1; j < lv.size(); ++j) {
        if (std::abs(lv[i] - lv[j]) <= disjoint_tol) return false;
      }
    }
    if (m + 1 < t.n && !level_pair_ok(lv, t.levels[m + 1])) return false;
  }
  return true;
}

bool is_disjoint(const GZCoord& c, const ToleranceConfig& tol) {
  validate(tol);
  return is_disjoint(tower_from_coord(c, tol.eq_tol), tol.disjoint_tol);
}

bool is_interlacing(const SpectrumTower& t, const ToleranceConfig& tol) {
  validate(tol);
  require_tower(t, "is_interlacing");
  for (const auto& lv : t.levels) {
    for (Complex z : lv) {
      if (std::abs(z.imag()) > tol.eq_tol) return false;
    }
  }
  // Chain mu_{1,m+1} < mu_{1,m} < mu_{2,m+1} < ... < mu_{m,m} < mu_{m+1,m+1},
  // every inequality with margin disjoint_tol.
  for (int m = 1; m < t.n; ++m) {
    const auto& up = t.levels[m];     // level m+1
    const auto& lo = t.levels[m - 1]; // level m
    for (int i = 0; i < m; ++i) {
      if (!(lo[i].real() - up[i].real() > tol.disjoint_tol)) return false;
      if (!(up[i + 1].real() - lo[i].real() > tol.disjoint_tol)) return false;
    }
  }
  return true;
}

}  // namespace gz
