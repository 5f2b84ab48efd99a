#include "gz/orthopoly.hpp"

#include <cmath>

namespace gz {

void validate(const DiscreteMeasure& mu) {
  if (mu.nodes.empty() || mu.nodes.size() != mu.weights.size()) {
    throw std::invalid_argument("measure: nodes and weights must match and be nonempty");
  }
  for (double w : mu.weights) {
    if (!(w > 0.0)) throw std::invalid_argument("measure: weights must be positive");
  }
  for (std::size_t i = 0; i < mu.nodes.size(); ++i) {
    for (std::size_t j = i + 1; j < mu.nodes.size(); ++j) {
      if (mu.nodes[i] == mu.nodes[j]) {
        throw std::invalid_argument("measure: nodes must be distinct");
      }
    }
  }
}

namespace {

// Raw moments M_0 .. M_{2*deg}.
std::vector<double> moments(const DiscreteMeasure& mu, int deg) {
  std::vector<double> m(2 * deg + 1, 0.0);
  for (std::size_t i = 0; i < mu.nodes.size(); ++i) {
    double p = mu.weights[i];
    for (int j = 0; j <= 2 * deg; ++j) {
      m[j] += p;
      p *= mu.nodes[i];
    }
  }
  return m;
}

double inner(const std::vector<double>& a, const std::vector<double>& b,
             const std::vector<double>& mom) {
  double acc = 0.0;
  for (std::size_t i = 0; i < a.size(); ++i) {
    for (std::size_t j = 0; j < b.size(); ++j) acc += a[i] * b[j] * mom[i + j];
  }
  return acc;
}

void axpy(std::vector<double>& y, double c, const std::vector<double>& x) {
  if (y.size() < x.size()) y.resize(x.size(), 0.0);
  for (std::size_t i = 0; i < x.size(); ++i) y[i] += c * x[i];
}

}  // namespace

std::vector<std::vector<double>> orthonormal_polys(const DiscreteMeasure& mu,
                                                   int count) {
  validate(mu);
  if (count < 1) throw std::invalid_argument("orthonormal_polys: count must be positive");
  const auto mom = moments(mu, count - 1);
  std::vector<std::vector<double>> basis;
  for (int k = 0; k < count; ++k) {
    std::vector<double> v(k + 1, 0.0);
    v[k] = 1.0;  // monomial t^k
    const double norm0 = std::sqrt(inner(v, v, mom));
    // Two projection passes guard against cancellation in the moment sums.
    for (int pass = 0; pass < 2; ++pass) {
      for (const auto& q : basis) axpy(v, -inner(v, q, mom), q);
    }
    double norm2 = inner(v, v, mom);
    if (!(norm2 > 0.0) || std::sqrt(norm2) < 1e-12 * norm0) {
      throw DomainError("orthonormal_polys: insufficient support in the measure");
    }
    const double inv = 1.0 / std::sqrt(norm2);
    for (double& c : v) c *= inv;
    if (v[k] < 0.0) {
      for (double& c : v) c = -c;  // positive leading coefficient
    }
    basis.push_back(std::move(v));
  }
  return basis;
}

CMatrix jacobi_matrix(const DiscreteMeasure& mu, int n) {
  validate(mu);
  if (n < 1) throw std::invalid_argument("jacobi_matrix: n must be positive");
  if (static_cast<int>(mu.nodes.size()) < n) {
    throw DomainError("jacobi_matrix: need at least n support points");
  }
  const auto basis = orthonormal_polys(mu, n);
  const auto mom = moments(mu, n);  // degrees up to 2n
  CMatrix j = CMatrix::Zero(n, n);
  auto shifted = [](const std::vector<double>& p) {
    std::vector<double> out(p.size() + 1, 0.0);
    for (std::size_t i = 0; i < p.size(); ++i) out[i + 1] = p[i];
    return out;  // t * p
  };
  for (int k = 0; k < n; ++k) {
    j(k, k) = inner(shifted(basis[k]), basis[k], mom);
    if (k + 1 < n) {
      double off = inner(shifted(basis[k]), basis[k + 1], mom);
      j(k, k + 1) = off;
      j(k + 1, k) = off;
    }
  }
  return j;
}

bool verify_monic_match(const DiscreteMeasure& mu, int n, double tol) {
  validate(mu);
  if (n < 1) throw std::invalid_argument("verify_monic_match: n must be positive");
  if (static_cast<int>(mu.nodes.size()) < n + 1) {
    throw DomainError("verify_monic_match: need at least n+1 support points");
  }
  const auto basis = orthonormal_polys(mu, n + 1);
  CMatrix j = jacobi_matrix(mu, n);
  for (int m = 1; m <= n; ++m) {
    MonicPoly p = charpoly(cutoff(j, m));
    const auto& phi_m = basis[m];
    const double lead = phi_m[m];
    for (int i = 0; i < m; ++i) {
      if (std::abs(p.coeffs[i] - Complex(phi_m[i] / lead)) > tol) return false;
    }
  }
  return true;
}

ThreeTermRecurrence recurrence_from_tower(const SpectrumTower& t,
                                          const ToleranceConfig& tol) {
  validate(tol);
  if (!is_interlacing(t, tol)) {
    throw DomainError("recurrence_from_tower: tower is not strictly interlacing");
  }
  const int n = t.n;
  // Real monic level polynomials from the (real) tower roots.
  std::vector<std::vector<double>> p(n + 1);
  p[0] = {1.0};
  for (int m = 1; m <= n; ++m) {
    std::vector<double> acc{1.0};
    for (Complex r : t.levels[m - 1]) {
      std::vector<double> next(acc.size() + 1, 0.0);
      for (std::size_t i = 0; i < acc.size(); ++i) {
        next[i + 1] += acc[i];
        next[i] -= r.real() * acc[i];
      }
      acc = std::move(next);
    }
    p[m] = std::move(acc);
  }

  ThreeTermRecurrence rec;
  rec.diag.resize(n);
  rec.offdiag.resize(n - 1);
  rec.diag[0] = t.levels[0][0].real();  // p_1 = lambda - c_0
  for (int m = 1; m < n; ++m) {
    // p_{m+1} - lambda p_m = -c_m p_m - b_m p_{m-1}; read c_m at degree m,
    // then b_m at degree m-1 of the remainder.
    std::vector<double> r(m + 2, 0.0);
    for (std::size_t i = 0; i < p[m + 1].size(); ++i) r[i] = p[m + 1][i];
    for (std::size_t i = 0; i < p[m].size(); ++i) r[i + 1] -= p[m][i];
    const double cm = -r[m];
    for (std::size_t i = 0; i < p[m].size(); ++i) r[i] += cm * p[m][i];
    const double bm = -r[m - 1];
    for (std::size_t i = 0; i < p[m - 1].size(); ++i) r[i] += bm * p[m - 1][i];
    double resid = 0.0;
    for (double v : r) resid = std::max(resid, std::abs(v));
    double scale = 0.0;
    for (double v : p[m + 1]) scale = std::max(scale, std::abs(v));
    if (resid > 1e-7 * std::max(1.0, scale)) {
      throw NumericalError("recurrence_from_tower: division residual too large");
    }
    if (!(bm > 0.0)) {
      throw DomainError("recurrence_from_tower: nonpositive recurrence weight");
    }
    rec.diag[m] = cm;
    rec.offdiag[m - 1] = bm;
  }
  return rec;
}

CMatrix jacobi_from_recurrence(const ThreeTermRecurrence& r) {
  const int n = static_cast<int>(r.diag.size());
  if (n < 1 || static_cast<int>(r.offdiag.size()) != n - 1) {
    throw std::invalid_argument("jacobi_from_recurrence: inconsistent recurrence");
  }
  CMatrix j = CMatrix::Zero(n, n);
  for (int i = 0; i < n; ++i) j(i, i) = r.diag[i];
  for (int i = 0; i + 1 < n; ++i) {
    if (!(r.offdiag[i] > 0.0)) {
      throw DomainError("jacobi_from_recurrence: weights must be positive");
    }
    const double s = std::sqrt(r.offdiag[i]);
    j(i, i + 1) = s;
    j(i + 1, i) = s;
  }
  return j;
}

}  // namespace gz
