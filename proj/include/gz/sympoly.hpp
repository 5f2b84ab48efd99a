#pragma once

#include <map>
#include <string>
#include <vector>

#include <boost/multiprecision/cpp_int.hpp>

#include "gz/types.hpp"

namespace gz {

using Rational = boost::multiprecision::cpp_rational;

// Multivariate polynomial over Q in the entry variables a_{ij} of an n x n
// matrix. Variable index (i-1)*n + (j-1), row major; exact coefficients.
class SymPoly {
 public:
  SymPoly() = default;
  explicit SymPoly(int n);
  static SymPoly constant(int n, const Rational& c);
  static SymPoly variable(int n, int i, int j);  // 1-based indices

  SymPoly& operator+=(const SymPoly& o);
  SymPoly& operator-=(const SymPoly& o);
  SymPoly operator+(const SymPoly& o) const;
  SymPoly operator-(const SymPoly& o) const;
  SymPoly operator*(const SymPoly& o) const;
  SymPoly operator-() const;
  bool operator==(const SymPoly& o) const;

  bool is_zero() const;
  int n() const { return n_; }
  const std::map<std::vector<int>, Rational>& terms() const { return terms_; }

  SymPoly partial(int var) const;
  // Numeric evaluation at a complex matrix (entry (i,j) substituted for
  // a_{ij}); rationals converted to double.
  Complex evaluate(const CMatrix& x) const;

  // Canonical printing: graded lexicographic order on exponent vectors.
  std::string to_string() const;

 private:
  void prune();
  int n_ = 0;
  std::map<std::vector<int>, Rational> terms_;
};

// Poisson bracket on entry variables, {a_ij, a_st} = d_js a_it - d_ti a_sj,
// extended by bilinearity and the Leibniz rule through the partials.
SymPoly sym_bracket(const SymPoly& f, const SymPoly& g);

// The d(n) coordinate functions f_{k,m} as exact polynomials, level by level
// (same flat layout as GZCoord). n <= 4.
std::vector<SymPoly> gz_generators_symbolic(int n);

// Exact pairwise commutativity of all d(n) generators. n <= 4.
bool verify_gz_commutativity(int n);

// Number of generator pairs tested by verify_gz_commutativity.
int commutativity_pair_count(int n);

}  // namespace gz
