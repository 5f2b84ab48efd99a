#include "gz/random.hpp"

#include <cmath>

namespace gz {

double Rng::uniform() {
  // 53-bit mantissa from the raw stream; deterministic across platforms.
  return (gen_() >> 11) * 0x1.0p-53;
}

double Rng::uniform(double lo, double hi) { return lo + (hi - lo) * uniform(); }

double Rng::normal() {
  if (have_spare_) {
    have_spare_ = false;
    return spare_;
  }
  double u1 = 0.0;
  do {
    u1 = uniform();
  } while (u1 <= 0.0);
  const double u2 = uniform();
  const double r = std::sqrt(-2.0 * std::log(u1));
  const double a = 2.0 * M_PI * u2;
  spare_ = r * std::sin(a);
  have_spare_ = true;
  return r * std::cos(a);
}

Complex Rng::cnormal() {
  const double re = normal();
  const double im = normal();
  return Complex(re, im) * M_SQRT1_2;
}

CMatrix random_matrix(Rng& rng, int n, double scale) {
  if (n < 1) throw std::invalid_argument("random_matrix: n must be positive");
  CMatrix x(n, n);
  for (int i = 0; i < n; ++i) {
    for (int j = 0; j < n; ++j) x(i, j) = scale * rng.cnormal();
  }
  return x;
}

CMatrix random_disjoint_matrix(Rng& rng, int n, const ToleranceConfig& tol,
                               double scale, double min_sep) {
  ToleranceConfig strict = tol;
  strict.disjoint_tol = std::max(tol.disjoint_tol, min_sep * scale);
  for (int attempt = 0; attempt < 1000; ++attempt) {
    CMatrix x = random_matrix(rng, n, scale);
    if (is_disjoint(tower_from_matrix(x, tol.eq_tol), strict.disjoint_tol)) {
      return x;
    }
  }
  throw NumericalError("random_disjoint_matrix: rejection sampling failed");
}

GZCoord random_coord(Rng& rng, int n) {
  if (n < 1) throw std::invalid_argument("random_coord: n must be positive");
  GZCoord c;
  c.n = n;
  c.values.resize(d(n));
  for (auto& v : c.values) v = rng.cnormal();
  return c;
}

SpectrumTower random_interlacing_tower(Rng& rng, int n) {
  if (n < 1) throw std::invalid_argument("random_interlacing_tower: n must be positive");
  SpectrumTower t;
  t.n = n;
  t.levels.resize(n);
  // Top level: increasing with gaps >= 0.5, then each level down sits
  // strictly inside consecutive gaps with a 10% margin.
  std::vector<double> top(n);
  double acc = rng.uniform(-1.0, 0.0) - 0.25 * n;
  for (int i = 0; i < n; ++i) {
    acc += 0.5 + rng.uniform(0.0, 1.0);
    top[i] = acc;
  }
  std::vector<std::vector<double>> levels(n);
  levels[n - 1] = top;
  for (int m = n - 1; m >= 1; --m) {
    const auto& up = levels[m];
    std::vector<double> lo(m);
    for (int i = 0; i < m; ++i) {
      const double a = up[i], b = up[i + 1];
      const double margin = 0.1 * (b - a);
      lo[i] = rng.uniform(a + margin, b - margin);
    }
    levels[m - 1] = lo;
  }
  for (int m = 1; m <= n; ++m) {
    t.levels[m - 1].assign(levels[m - 1].begin(), levels[m - 1].end());
  }
  return t;
}

SpectrumTower random_noninterlacing_tower(Rng& rng, int n, double min_sep) {
  if (n < 2) throw std::invalid_argument("random_noninterlacing_tower: need n >= 2");
  ToleranceConfig tol;
  tol.disjoint_tol = min_sep;
  for (int attempt = 0; attempt < 10000; ++attempt) {
    SpectrumTower t;
    t.n = n;
    t.levels.resize(n);
    for (int m = 1; m <= n; ++m) {
      std::vector<Complex> lv(m);
      for (auto& z : lv) z = Complex(rng.uniform(-2.0, 2.0), 0.0);
      lex_sort(lv, tol.eq_tol);
      t.levels[m - 1] = lv;
    }
    if (is_disjoint(t, min_sep) && !is_interlacing(t, tol)) return t;
  }
  throw NumericalError("random_noninterlacing_tower: rejection sampling failed");
}

GroupWord random_word(Rng& rng, int n, double scale, bool real_only) {
  GroupWord w = zero_word(n);
  for (auto& lv : w.levels) {
    for (auto& t : lv) {
      t = real_only ? Complex(scale * rng.normal(), 0.0) : scale * rng.cnormal();
    }
  }
  return w;
}

}  // namespace gz
