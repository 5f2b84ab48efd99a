#include "gz/fiber.hpp"

#include <algorithm>
#include <cmath>

#include <Eigen/Eigenvalues>

namespace gz {

namespace {

struct EigPairs {
  CMatrix v;   // columns are eigenvectors
  CVector mu;  // matching eigenvalues, lexicographically ordered
};

// General eigendecomposition with lexicographically ordered pairs; requires a
// simple spectrum (callers guarantee it through disjointness).
EigPairs ordered_eig(const CMatrix& a, double tie_tol) {
  Eigen::ComplexEigenSolver<CMatrix> es(a, true);
  if (es.info() != Eigen::Success) {
    throw NumericalError("eigendecomposition failed");
  }
  const int m = static_cast<int>(a.rows());
  std::vector<int> idx(m);
  for (int i = 0; i < m; ++i) idx[i] = i;
  std::sort(idx.begin(), idx.end(), [&](int i, int j) {
    Complex zi = es.eigenvalues()(i), zj = es.eigenvalues()(j);
    if (zi.real() != zj.real()) {
      if (std::abs(zi.real() - zj.real()) > tie_tol) return zi.real() < zj.real();
    }
    return zi.imag() < zj.imag();
  });
  EigPairs out;
  out.v.resize(m, m);
  out.mu.resize(m);
  for (int i = 0; i < m; ++i) {
    out.v.col(i) = es.eigenvectors().col(idx[i]);
    out.mu(i) = es.eigenvalues()(idx[i]);
  }
  return out;
}

void require_disjoint_coord(const GZCoord& c, const ToleranceConfig& tol,
                            const char* who) {
  if (!is_disjoint(c, tol)) {
    throw DomainError(std::string(who) + ": cutoff spectra are not pairwise disjoint");
  }
}

}  // namespace

Complex principal_sqrt(Complex z) {
  Complex w = std::sqrt(z);
  if (w.real() < 0.0) w = -w;
  if (w.real() == 0.0 && w.imag() < 0.0) w = -w;
  return w;
}

bool is_cyclic(const CMatrix& x, int m, const CVector& v, double rank_tol) {
  detail::require_square(x, "is_cyclic");
  if (m < 1 || m > x.rows()) throw std::invalid_argument("is_cyclic: level out of range");
  if (v.size() != m) throw std::invalid_argument("is_cyclic: vector size mismatch");
  CMatrix xm = cutoff(x, m);
  std::vector<CMatrix> krylov;
  CVector w = v;
  for (int j = 0; j < m; ++j) {
    krylov.push_back(w);
    w = xm * w;
  }
  return numeric_rank(krylov, rank_tol) == m;
}

NormalFormResult normal_form(const CMatrix& x, const ToleranceConfig& tol) {
  validate(tol);
  detail::require_square(x, "normal_form");
  const int n = static_cast<int>(x.rows());
  GZCoord c = phi(x);
  require_disjoint_coord(c, tol, "normal_form");

  NormalFormResult res;
  res.word = zero_word(n);
  CMatrix y = x;
  // Downward sweep: the level-m centralizer element sends the current level-m
  // slice of the upper triangle to the m-th unit vector and leaves every
  // deeper cutoff alone, so earlier work never gets undone.
  for (int m = n - 1; m >= 1; --m) {
    EigPairs eig = ordered_eig(cutoff(x, m), tol.eq_tol);
    auto lu = eig.v.partialPivLu();
    CVector a = lu.solve(component_in_Y(y, m));
    CVector em = CVector::Zero(m);
    em(m - 1) = Complex(1.0);
    CVector u = lu.solve(em);
    double scale = std::max(1.0, std::max(a.cwiseAbs().maxCoeff(),
                                          u.cwiseAbs().maxCoeff()));
    CVector dd(m), logd(m);
    for (int i = 0; i < m; ++i) {
      if (std::abs(a(i)) < 1e-13 * scale || std::abs(u(i)) < 1e-13 * scale) {
        throw NumericalError("normal_form: vanishing cyclicity coordinate");
      }
      dd(i) = u(i) / a(i);
      logd(i) = std::log(dd(i));
    }
    CMatrix g = CMatrix::Identity(n, n);
    g.topLeftCorner(m, m) = eig.v * dd.asDiagonal() * eig.v.inverse();
    CMatrix ginv = CMatrix::Identity(n, n);
    ginv.topLeftCorner(m, m) =
        eig.v * dd.cwiseInverse().asDiagonal() * eig.v.inverse();
    y = g * y * ginv;

    // Express log g in the power basis of the cutoff: a Vandermonde solve on
    // the eigenvalues recovers the word times.
    CMatrix vand(m, m);
    for (int i = 0; i < m; ++i) {
      Complex p(1.0);
      for (int k = m; k >= 1; --k) {  // column for (x_m)^{m-k}
        vand(i, k - 1) = p;
        p *= eig.mu(i);
      }
    }
    CVector times = vand.partialPivLu().solve(logd);
    for (int k = 1; k <= m; ++k) res.word.levels[m - 1][k - 1] = times(k - 1);
  }
  res.canonical = y;
  return res;
}

bool a_conjugate_test(const CMatrix& x, const CMatrix& y, const ToleranceConfig& tol) {
  validate(tol);
  if (x.rows() != y.rows()) return false;
  if (!same_fiber(x, y, tol.eq_tol)) return false;
  CMatrix cx = normal_form(x, tol).canonical;
  CMatrix cy = normal_form(y, tol).canonical;
  return (cx - cy).cwiseAbs().maxCoeff() <= 10 * tol.eq_tol;
}

CMatrix beta(const CMatrix& x) { return strict_upper(x); }

CMatrix beta_inverse(const GZCoord& c, const CMatrix& u, const ToleranceConfig& tol) {
  validate(tol);
  if (c.n < 1 || static_cast<int>(c.values.size()) != d(c.n)) {
    throw std::invalid_argument("beta_inverse: inconsistent coordinate vector");
  }
  const int n = c.n;
  if (u.rows() != n || u.cols() != n) {
    throw std::invalid_argument("beta_inverse: upper triangle size mismatch");
  }
  require_disjoint_coord(c, tol, "beta_inverse");

  CMatrix x(1, 1);
  x(0, 0) = coord_value(c, 1, 1);
  for (int m = 1; m < n; ++m) {
    EigPairs eig = ordered_eig(x, tol.eq_tol);
    CVector col = u.block(0, m, m, 1);
    CVector a = eig.v.partialPivLu().solve(col);
    double scale = std::max(1.0, a.cwiseAbs().maxCoeff());
    MonicPoly target = level_poly(c, m + 1);
    CVector b(m);
    for (int i = 0; i < m; ++i) {
      if (std::abs(a(i)) < 1e-12 * scale) {
        throw DomainError("beta_inverse: upper data is not cyclic at this level");
      }
      Complex denom(1.0);
      for (int j = 0; j < m; ++j) {
        if (j != i) denom *= eig.mu(i) - eig.mu(j);
      }
      // Residue of the level polynomial at mu_i equals -a_i b_i.
      b(i) = -eval(target, eig.mu(i)) / (denom * a(i));
    }
    CMatrix next(m + 1, m + 1);
    next.topLeftCorner(m, m) = x;
    next.block(0, m, m, 1) = col;
    next.block(m, 0, 1, m) =
        eig.v.transpose().partialPivLu().solve(b).transpose();
    next(m, m) = coord_value(c, m + 1, m + 1) - x.trace();
    x = next;
  }
  return x;
}

std::vector<SymmetricFiberMember> symmetric_fiber(const GZCoord& c,
                                                  const ToleranceConfig& tol) {
  validate(tol);
  if (c.n < 1 || static_cast<int>(c.values.size()) != d(c.n)) {
    throw std::invalid_argument("symmetric_fiber: inconsistent coordinate vector");
  }
  if (c.n > 6) {
    throw std::invalid_argument(
        "symmetric_fiber: n > 6 unsupported, member count grows as 2^(n(n-1)/2)");
  }
  require_disjoint_coord(c, tol, "symmetric_fiber");
  const int n = c.n;

  std::vector<SymmetricFiberMember> out;
  out.reserve(std::size_t{1} << d(n - 1));

  // Depth-first extension one level at a time; each level-m step picks one of
  // 2^m sign branches recorded at bit offset d(m-1).
  struct Builder {
    const GZCoord& c;
    const ToleranceConfig& tol;
    std::vector<SymmetricFiberMember>& out;

    void extend(const CMatrix& x, std::uint64_t index) {
      const int m = static_cast<int>(x.rows());
      if (m == c.n) {
        out.push_back({x, index});
        return;
      }
      EigPairs eig = ordered_eig(x, tol.eq_tol);
      // Bilinear normalization: the eigenbasis of a complex symmetric matrix
      // with simple spectrum can be made complex orthogonal.
      for (int i = 0; i < m; ++i) {
        Complex s = (eig.v.col(i).transpose() * eig.v.col(i))(0);
        if (std::abs(s) < 1e-10) {
          throw NumericalError("symmetric_fiber: isotropic eigenvector");
        }
        eig.v.col(i) /= principal_sqrt(s);
      }
      MonicPoly target = level_poly(c, m + 1);
      CVector branch(m);
      for (int i = 0; i < m; ++i) {
        Complex denom(1.0);
        for (int j = 0; j < m; ++j) {
          if (j != i) denom *= eig.mu(i) - eig.mu(j);
        }
        branch(i) = principal_sqrt(-eval(target, eig.mu(i)) / denom);
      }
      Complex corner = coord_value(c, m + 1, m + 1) - x.trace();
      for (std::uint64_t pattern = 0; pattern < (std::uint64_t{1} << m); ++pattern) {
        CVector a(m);
        for (int i = 0; i < m; ++i) {
          a(i) = ((pattern >> i) & 1u) ? -branch(i) : branch(i);
        }
        CVector col = eig.v * a;
        CMatrix next(m + 1, m + 1);
        next.topLeftCorner(m, m) = x;
        next.block(0, m, m, 1) = col;
        next.block(m, 0, 1, m) = col.transpose();
        next(m, m) = corner;
        extend(next, index | (pattern << d(m - 1)));
      }
    }
  } builder{c, tol, out};

  CMatrix x1(1, 1);
  x1(0, 0) = coord_value(c, 1, 1);
  builder.extend(x1, 0);

  std::sort(out.begin(), out.end(),
            [](const SymmetricFiberMember& a, const SymmetricFiberMember& b) {
              return a.sign_index < b.sign_index;
            });

  double cscale = 1.0;
  for (Complex v : c.values) cscale = std::max(cscale, std::abs(v));
  for (const auto& member : out) {
    GZCoord cm = phi(member.x);
    for (std::size_t i = 0; i < cm.values.size(); ++i) {
      if (std::abs(cm.values[i] - c.values[i]) > 1e-6 * cscale) {
        throw NumericalError("symmetric_fiber: member failed coordinate verification");
      }
    }
  }
  return out;
}

bool is_jacobi(const CMatrix& x, double tol) {
  detail::require_square(x, "is_jacobi");
  const int n = static_cast<int>(x.rows());
  for (int i = 0; i < n; ++i) {
    for (int j = 0; j < n; ++j) {
      const int gap = std::abs(i - j);
      if (gap > 1 && std::abs(x(i, j)) > tol) return false;
      if (gap == 1 && std::abs(x(i, j)) <= tol) return false;
    }
  }
  return true;
}

std::vector<SymmetricFiberMember> jacobi_members(
    const std::vector<SymmetricFiberMember>& fiber, double tol) {
  std::vector<SymmetricFiberMember> out;
  for (const auto& member : fiber) {
    if (is_jacobi(member.x, tol)) out.push_back(member);
  }
  return out;
}

std::vector<CMatrix> diag_sign_orbit(const CMatrix& x) {
  detail::require_square(x, "diag_sign_orbit");
  const int n = static_cast<int>(x.rows());
  std::vector<CMatrix> out;
  out.reserve(std::size_t{1} << (n - 1));
  for (std::uint64_t s = 0; s < (std::uint64_t{1} << (n - 1)); ++s) {
    std::vector<int> eps(n - 1);
    for (int i = 0; i < n - 1; ++i) eps[i] = ((s >> i) & 1u) ? -1 : 1;
    out.push_back(diag_action(x, eps));
  }
  return out;
}

}  // namespace gz
