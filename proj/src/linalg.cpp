#include "gz/linalg.hpp"

#include <algorithm>
#include <cmath>

#include <Eigen/Eigenvalues>
#include <Eigen/SVD>
#include <unsupported/Eigen/MatrixFunctions>

namespace gz {

void validate(const ToleranceConfig& tol) {
  if (!(tol.rank_tol > 0) || !(tol.eq_tol > 0) || !(tol.disjoint_tol > 0)) {
    throw std::invalid_argument("tolerances must be strictly positive");
  }
}

namespace detail {

void require_square(const CMatrix& x, const char* who) {
  if (x.rows() != x.cols() || x.rows() < 1) {
    throw std::invalid_argument(std::string(who) + ": square matrix required");
  }
}

Poly poly_mul(const Poly& a, const Poly& b) {
  Poly out(a.size() + b.size() - 1, Complex(0.0));
  for (std::size_t i = 0; i < a.size(); ++i) {
    for (std::size_t j = 0; j < b.size(); ++j) {
      out[i + j] += a[i] * b[j];
    }
  }
  return out;
}

std::pair<Poly, Poly> poly_divmod_monic(const Poly& num, const Poly& den) {
  if (den.empty() || std::abs(den.back() - Complex(1.0)) > 1e-12) {
    throw std::invalid_argument("poly_divmod_monic: monic divisor required");
  }
  const int dn = static_cast<int>(num.size()) - 1;
  const int dd = static_cast<int>(den.size()) - 1;
  if (dn < dd) return {Poly{Complex(0.0)}, num};
  Poly rem = num;
  Poly quo(dn - dd + 1, Complex(0.0));
  for (int k = dn - dd; k >= 0; --k) {
    Complex c = rem[k + dd];
    quo[k] = c;
    for (int j = 0; j <= dd; ++j) rem[k + j] -= c * den[j];
  }
  rem.resize(dd > 0 ? dd : 1);
  return {quo, rem};
}

Poly to_dense(const MonicPoly& p) {
  Poly out = p.coeffs;
  out.push_back(Complex(1.0));
  return out;
}

MonicPoly to_monic(const Poly& p) {
  if (p.empty() || std::abs(p.back() - Complex(1.0)) > 1e-9) {
    throw std::invalid_argument("to_monic: leading coefficient is not 1");
  }
  MonicPoly out;
  out.degree = static_cast<int>(p.size()) - 1;
  out.coeffs.assign(p.begin(), p.end() - 1);
  return out;
}

}  // namespace detail

Complex eval(const MonicPoly& p, Complex lambda) {
  Complex acc(1.0);  // implicit leading coefficient
  for (int j = p.degree - 1; j >= 0; --j) acc = acc * lambda + p.coeffs[j];
  return acc;
}

MonicPoly monic_from_roots(const std::vector<Complex>& roots) {
  detail::Poly acc{Complex(1.0)};
  for (Complex r : roots) acc = detail::poly_mul(acc, {-r, Complex(1.0)});
  MonicPoly out;
  out.degree = static_cast<int>(roots.size());
  out.coeffs.assign(acc.begin(), acc.end() - 1);
  return out;
}

CMatrix cutoff(const CMatrix& x, int m) {
  detail::require_square(x, "cutoff");
  if (m < 1 || m > x.rows()) throw std::invalid_argument("cutoff: level out of range");
  return x.topLeftCorner(m, m);
}

CMatrix embed(const CMatrix& y, int n) {
  detail::require_square(y, "embed");
  if (y.rows() > n) throw std::invalid_argument("embed: block larger than target");
  CMatrix out = CMatrix::Zero(n, n);
  out.topLeftCorner(y.rows(), y.cols()) = y;
  return out;
}

// Leading-minor recurrence for an upper Hessenberg h:
//   p_m = (lambda - h_mm) p_{m-1} - sum_{i<m} h_im (prod_{j=i..m-1} h_{j+1,j}) p_{i-1}.
MonicPoly charpoly(const CMatrix& x) {
  detail::require_square(x, "charpoly");
  const int n = static_cast<int>(x.rows());

  CMatrix h;
  // Hessenberg reduction is a unitary similarity, so the polynomial is
  // unchanged; skip it when x already has the shape.
  bool hess = true;
  for (int j = 0; j < n - 2 && hess; ++j) {
    for (int i = j + 2; i < n; ++i) {
      if (x(i, j) != Complex(0.0)) {
        hess = false;
        break;
      }
    }
  }
  if (hess) {
    h = x;
  } else {
    Eigen::HessenbergDecomposition<CMatrix> dec(x);
    h = dec.matrixH();
  }

  std::vector<detail::Poly> p(n + 1);
  p[0] = {Complex(1.0)};
  for (int m = 1; m <= n; ++m) {
    detail::Poly acc = detail::poly_mul(p[m - 1], {-h(m - 1, m - 1), Complex(1.0)});
    Complex subprod(1.0);
    for (int i = m - 1; i >= 1; --i) {
      subprod *= h(i, i - 1);
      Complex w = h(i - 1, m - 1) * subprod;
      for (std::size_t j = 0; j < p[i - 1].size(); ++j) acc[j] -= w * p[i - 1][j];
    }
    p[m] = std::move(acc);
  }

  MonicPoly out;
  out.degree = n;
  out.coeffs.assign(p[n].begin(), p[n].end() - 1);
  for (Complex& c : out.coeffs) {
    if (!std::isfinite(c.real()) || !std::isfinite(c.imag())) {
      throw NumericalError("charpoly: non-finite coefficient");
    }
  }
  return out;
}

bool lex_less(Complex a, Complex b, double tie_tol) {
  if (a.real() < b.real() - tie_tol) return true;
  if (b.real() < a.real() - tie_tol) return false;
  return a.imag() < b.imag();
}

void lex_sort(std::vector<Complex>& zs, double tie_tol) {
  // Exact sort by real part first, then group near-ties and reorder each
  // group by imaginary part; a tolerance comparator alone is not an order.
  std::sort(zs.begin(), zs.end(), [](Complex a, Complex b) {
    if (a.real() != b.real()) return a.real() < b.real();
    return a.imag() < b.imag();
  });
  std::size_t i = 0;
  while (i < zs.size()) {
    std::size_t j = i + 1;
    while (j < zs.size() && zs[j].real() - zs[j - 1].real() <= tie_tol) ++j;
    std::sort(zs.begin() + i, zs.begin() + j,
              [](Complex a, Complex b) { return a.imag() < b.imag(); });
    i = j;
  }
}

std::vector<Complex> eigenvalues_ordered(const MonicPoly& p, double tie_tol) {
  if (p.degree == 0) return {};
  const int n = p.degree;
  CMatrix comp = CMatrix::Zero(n, n);
  for (int i = 1; i < n; ++i) comp(i, i - 1) = Complex(1.0);
  for (int i = 0; i < n; ++i) comp(i, n - 1) = -p.coeffs[i];
  Eigen::ComplexEigenSolver<CMatrix> es(comp, false);
  if (es.info() != Eigen::Success) {
    throw NumericalError("eigenvalues_ordered: eigensolver failed");
  }
  std::vector<Complex> roots(es.eigenvalues().data(), es.eigenvalues().data() + n);
  lex_sort(roots, tie_tol);
  return roots;
}

int numeric_rank(const std::vector<CMatrix>& mats, double rank_tol) {
  if (mats.empty()) throw std::invalid_argument("numeric_rank: empty list");
  const auto rows = mats[0].rows();
  const auto cols = mats[0].cols();
  CMatrix a(static_cast<int>(mats.size()), rows * cols);
  for (std::size_t i = 0; i < mats.size(); ++i) {
    if (mats[i].rows() != rows || mats[i].cols() != cols) {
      throw std::invalid_argument("numeric_rank: shape mismatch");
    }
    a.row(static_cast<int>(i)) =
        Eigen::Map<const CVector>(mats[i].data(), rows * cols).transpose();
  }
  Eigen::JacobiSVD<CMatrix> svd(a);
  const auto& sv = svd.singularValues();
  if (sv.size() == 0 || sv(0) <= 0.0) return 0;
  int r = 0;
  for (int i = 0; i < sv.size(); ++i) {
    if (sv(i) > rank_tol * sv(0)) ++r;
  }
  return r;
}

CMatrix mat_exp(const CMatrix& x) {
  detail::require_square(x, "mat_exp");
  const int n = static_cast<int>(x.rows());
  Eigen::ComplexEigenSolver<CMatrix> es(x, true);
  if (es.info() == Eigen::Success) {
    const CMatrix& v = es.eigenvectors();
    Eigen::JacobiSVD<CMatrix> svd(v);
    const auto& sv = svd.singularValues();
    if (sv(sv.size() - 1) > 0 && sv(0) / sv(sv.size() - 1) < 1e8) {
      CVector ev(n);
      for (int i = 0; i < n; ++i) ev(i) = std::exp(es.eigenvalues()(i));
      CMatrix out = v * ev.asDiagonal() * v.inverse();
      if (!out.allFinite()) throw NumericalError("mat_exp: overflow");
      return out;
    }
  }
  CMatrix out = x.exp();  // scaling and squaring
  if (!out.allFinite()) throw NumericalError("mat_exp: overflow");
  return out;
}

Complex trace_form(const CMatrix& x, const CMatrix& y) {
  if (x.rows() != y.rows() || x.cols() != y.cols()) {
    throw std::invalid_argument("trace_form: shape mismatch");
  }
  return (x * y).trace();
}

CMatrix strict_upper(const CMatrix& x) {
  detail::require_square(x, "strict_upper");
  CMatrix out = CMatrix::Zero(x.rows(), x.cols());
  for (int i = 0; i < x.rows(); ++i) {
    for (int j = i + 1; j < x.cols(); ++j) out(i, j) = x(i, j);
  }
  return out;
}

CVector component_in_Y(const CMatrix& x, int m) {
  detail::require_square(x, "component_in_Y");
  if (m < 1 || m >= x.rows()) {
    throw std::invalid_argument("component_in_Y: level out of range");
  }
  return x.block(0, m, m, 1);
}

}  // namespace gz
