#pragma once

#include <vector>

#include "gz/types.hpp"

namespace gz {

// Monic polynomial; coeffs[j] multiplies lambda^j for j = 0..degree-1 and the
// leading coefficient 1 is implicit.
struct MonicPoly {
  int degree = 0;
  std::vector<Complex> coeffs;
};

Complex eval(const MonicPoly& p, Complex lambda);
MonicPoly monic_from_roots(const std::vector<Complex>& roots);

// Leading principal m x m block, 1 <= m <= n.
CMatrix cutoff(const CMatrix& x, int m);

// Pads an m x m block to n x n with zeros.
CMatrix embed(const CMatrix& y, int n);

// det(lambda I - x) by Hessenberg reduction and the leading-minor recurrence.
MonicPoly charpoly(const CMatrix& x);

// Lexicographic order on C: by real part, ties within tie_tol broken by
// imaginary part.
bool lex_less(Complex a, Complex b, double tie_tol);
void lex_sort(std::vector<Complex>& zs, double tie_tol);

// Roots of p in lexicographic order, from the companion matrix.
std::vector<Complex> eigenvalues_ordered(const MonicPoly& p, double tie_tol);

// Rank of the span of the flattened matrices (all of one shape), by SVD.
int numeric_rank(const std::vector<CMatrix>& mats, double rank_tol);

// exp(x). Diagonalizes when the eigenvector basis is well conditioned and
// falls back to scaling-and-squaring otherwise.
CMatrix mat_exp(const CMatrix& x);

// tr(x y), the invariant pairing.
Complex trace_form(const CMatrix& x, const CMatrix& y);

// Strictly upper triangular part of x.
CMatrix strict_upper(const CMatrix& x);

// Column vector (x_{1,m+1}, ..., x_{m,m+1}), the level-m slice of the strict
// upper triangle; 1 <= m <= n-1.
CVector component_in_Y(const CMatrix& x, int m);

namespace detail {

// Dense coefficient vectors, low degree first, explicit leading coefficient.
using Poly = std::vector<Complex>;

Poly poly_mul(const Poly& a, const Poly& b);
// Division by a monic divisor; returns {quotient, remainder}.
std::pair<Poly, Poly> poly_divmod_monic(const Poly& num, const Poly& den);
Poly to_dense(const MonicPoly& p);
MonicPoly to_monic(const Poly& p);  // requires leading coefficient ~ 1

void require_square(const CMatrix& x, const char* who);

}  // namespace detail

}  // namespace gz
