#include "gz/regularity.hpp"

#include "gz/linalg.hpp"

namespace gz {

CentralizerBasis centralizer_basis(const CMatrix& x, int m) {
  detail::require_square(x, "centralizer_basis");
  if (m < 1 || m > x.rows()) {
    throw std::invalid_argument("centralizer_basis: level out of range");
  }
  const int n = static_cast<int>(x.rows());
  CMatrix xm = cutoff(x, m);
  CentralizerBasis out;
  out.m = m;
  CMatrix p = CMatrix::Identity(m, m);
  for (int j = 0; j < m; ++j) {
    out.powers.push_back(embed(p, n));
    p = p * xm;
  }
  return out;
}

bool is_regular_cutoff(const CMatrix& x, int m, double rank_tol) {
  return numeric_rank(centralizer_basis(x, m).powers, rank_tol) == m;
}

bool is_strongly_regular(const CMatrix& x, double rank_tol) {
  detail::require_square(x, "is_strongly_regular");
  const int n = static_cast<int>(x.rows());
  std::vector<CMatrix> all;
  all.reserve(d(n));
  for (int m = 1; m <= n; ++m) {
    auto b = centralizer_basis(x, m);
    all.insert(all.end(), b.powers.begin(), b.powers.end());
  }
  return numeric_rank(all, rank_tol) == d(n);
}

bool is_strongly_regular_pairwise(const CMatrix& x, double rank_tol) {
  detail::require_square(x, "is_strongly_regular_pairwise");
  const int n = static_cast<int>(x.rows());
  for (int m = 1; m <= n; ++m) {
    if (!is_regular_cutoff(x, m, rank_tol)) return false;
  }
  for (int m = 1; m < n; ++m) {
    auto a = centralizer_basis(x, m);
    auto b = centralizer_basis(x, m + 1);
    std::vector<CMatrix> stacked = a.powers;
    stacked.insert(stacked.end(), b.powers.begin(), b.powers.end());
    // Trivial intersection of the two centralizer algebras.
    if (numeric_rank(stacked, rank_tol) != 2 * m + 1) return false;
  }
  return true;
}

std::vector<CMatrix> tangent_space_basis(const CMatrix& x) {
  detail::require_square(x, "tangent_space_basis");
  const int n = static_cast<int>(x.rows());
  if (n < 2) return {};
  std::vector<CMatrix> out;
  out.reserve(d(n - 1));
  for (int m = 1; m < n; ++m) {
    CMatrix xm = cutoff(x, m);
    CMatrix p = CMatrix::Identity(m, m);
    std::vector<CMatrix> powers(m);
    for (int j = 0; j < m; ++j) {
      powers[j] = p;
      p = p * xm;
    }
    for (int k = 1; k <= m; ++k) {
      CMatrix z = embed(powers[m - k], n);
      out.push_back(z * x - x * z);
    }
  }
  return out;
}

int orbit_dim(const CMatrix& x, double rank_tol) {
  auto basis = tangent_space_basis(x);
  if (basis.empty()) return 0;
  return numeric_rank(basis, rank_tol);
}

Complex symplectic_pairing(const CMatrix& x, const CMatrix& za, const CMatrix& zb) {
  if (x.rows() != za.rows() || x.rows() != zb.rows()) {
    throw std::invalid_argument("symplectic_pairing: shape mismatch");
  }
  return (x * (za * zb - zb * za)).trace();
}

}  // namespace gz
