#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include "doctest.h"

#include "gz/linalg.hpp"
#include "gz/random.hpp"
#include "oracles.hpp"

using namespace gz;

TEST_CASE("charpoly matches the Laplace-expansion oracle") {
  Rng rng(11);
  for (int n = 1; n <= 5; ++n) {
    for (int rep = 0; rep < 5; ++rep) {
      CMatrix x = random_matrix(rng, n, 1.0);
      MonicPoly got = charpoly(x);
      MonicPoly want = test::charpoly_oracle(x);
      REQUIRE(got.degree == n);
      for (int i = 0; i < n; ++i) {
        CHECK(std::abs(got.coeffs[i] - want.coeffs[i]) < 1e-9);
      }
    }
  }
}

TEST_CASE("charpoly of [[1,2],[3,4]] is lambda^2 - 5 lambda - 2") {
  CMatrix x(2, 2);
  x << Complex(1), Complex(2), Complex(3), Complex(4);
  MonicPoly p = charpoly(x);
  CHECK(std::abs(p.coeffs[0] - Complex(-2.0)) < 1e-14);
  CHECK(std::abs(p.coeffs[1] - Complex(-5.0)) < 1e-14);
}

TEST_CASE("charpoly is exact on integer Hessenberg input") {
  // Already Hessenberg: the reduction is skipped and the recurrence is exact
  // integer arithmetic.
  CMatrix x = CMatrix::Zero(3, 3);
  x << Complex(1), Complex(6), Complex(-37), Complex(1), Complex(4),
      Complex(-27), Complex(0), Complex(1), Complex(-5);
  MonicPoly p = charpoly(x);
  MonicPoly want = test::charpoly_oracle(x);
  for (int i = 0; i < 3; ++i) CHECK(p.coeffs[i] == want.coeffs[i]);
}

TEST_CASE("monic_from_roots evaluates to zero at each root") {
  Rng rng(13);
  std::vector<Complex> roots;
  for (int i = 0; i < 6; ++i) roots.push_back(rng.cnormal());
  MonicPoly p = monic_from_roots(roots);
  for (const Complex& r : roots) CHECK(std::abs(eval(p, r)) < 1e-10);
}

TEST_CASE("eigenvalues_ordered returns lex-sorted roots") {
  MonicPoly p = monic_from_roots({Complex(3), Complex(1), Complex(2)});
  auto roots = eigenvalues_ordered(p, 1e-9);
  CHECK(std::abs(roots[0] - Complex(1.0)) < 1e-9);
  CHECK(std::abs(roots[1] - Complex(2.0)) < 1e-9);
  CHECK(std::abs(roots[2] - Complex(3.0)) < 1e-9);

  // Equal real parts break ties by imaginary part.
  MonicPoly q = monic_from_roots({Complex(0, 1), Complex(0, -1)});
  auto qr = eigenvalues_ordered(q, 1e-9);
  CHECK(qr[0].imag() < qr[1].imag());
}

TEST_CASE("lex_sort groups near-ties by imaginary part") {
  std::vector<Complex> v{Complex(1.0, 2.0), Complex(1.0 + 1e-12, -3.0),
                         Complex(0.0, 5.0)};
  lex_sort(v, 1e-9);
  CHECK(std::abs(v[0] - Complex(0.0, 5.0)) < 1e-15);
  CHECK(v[1].imag() == -3.0);
  CHECK(v[2].imag() == 2.0);
}

TEST_CASE("numeric_rank agrees with Gaussian elimination") {
  Rng rng(17);
  for (int rep = 0; rep < 10; ++rep) {
    const int n = 3;
    std::vector<CMatrix> mats;
    const int k = 1 + static_cast<int>(rng.uniform() * 5);
    for (int i = 0; i < k; ++i) mats.push_back(random_matrix(rng, n, 1.0));
    // Append a dependent combination to exercise deficiency.
    if (mats.size() >= 2) mats.push_back(mats[0] + 2.0 * mats[1]);
    CHECK(numeric_rank(mats, 1e-9) == test::rank_oracle(mats, 1e-9));
  }
  CHECK(numeric_rank({CMatrix::Zero(2, 2)}, 1e-9) == 0);
  CHECK(numeric_rank({CMatrix::Identity(3, 3), CMatrix::Identity(3, 3) * 2.0},
                     1e-9) == 1);
}

TEST_CASE("mat_exp on diagonal and nilpotent input") {
  CMatrix d = CMatrix::Zero(2, 2);
  d(0, 0) = Complex(1.0);
  d(1, 1) = Complex(-2.0);
  CMatrix e = mat_exp(d);
  CHECK(std::abs(e(0, 0) - std::exp(Complex(1.0))) < 1e-12);
  CHECK(std::abs(e(1, 1) - std::exp(Complex(-2.0))) < 1e-12);
  CHECK(std::abs(e(0, 1)) < 1e-14);

  CMatrix nil = CMatrix::Zero(2, 2);
  nil(0, 1) = Complex(3.0);
  CMatrix en = mat_exp(nil);  // I + N exactly, series truncates
  CHECK(std::abs(en(0, 0) - Complex(1.0)) < 1e-12);
  CHECK(std::abs(en(0, 1) - Complex(3.0)) < 1e-12);
}

TEST_CASE("mat_exp inverse property exp(a) exp(-a) = I") {
  Rng rng(19);
  for (int rep = 0; rep < 10; ++rep) {
    CMatrix a = random_matrix(rng, 4, 0.7);
    CMatrix prod = mat_exp(a) * mat_exp(CMatrix(-a));
    CHECK(test::max_abs_diff(prod, CMatrix::Identity(4, 4)) < 1e-10);
  }
}

TEST_CASE("cutoff and embed round-trip") {
  Rng rng(23);
  CMatrix x = random_matrix(rng, 5, 1.0);
  for (int m = 1; m <= 5; ++m) {
    CMatrix xm = cutoff(x, m);
    REQUIRE(xm.rows() == m);
    CHECK(test::max_abs_diff(cutoff(embed(xm, 5), m), xm) == 0.0);
  }
  CHECK_THROWS_AS(cutoff(x, 0), std::invalid_argument);
  CHECK_THROWS_AS(cutoff(x, 6), std::invalid_argument);
  CHECK_THROWS_AS(embed(x, 4), std::invalid_argument);
}

TEST_CASE("trace_form symmetry") {
  Rng rng(29);
  CMatrix a = random_matrix(rng, 4, 1.0);
  CMatrix b = random_matrix(rng, 4, 1.0);
  CHECK(std::abs(trace_form(a, b) - trace_form(b, a)) < 1e-12);
}

TEST_CASE("eval uses the implicit leading one") {
  MonicPoly p{2, {Complex(-2.0), Complex(-5.0)}};  // lambda^2 - 5 lambda - 2
  CHECK(std::abs(eval(p, Complex(1.0)) - Complex(-6.0)) < 1e-14);
  CHECK(std::abs(eval(p, Complex(0.0)) - Complex(-2.0)) < 1e-14);
}
