#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include "doctest.h"

#include "gz/coordinates.hpp"
#include "gz/cross_section.hpp"
#include "gz/random.hpp"
#include "gz/regularity.hpp"
#include "oracles.hpp"

using namespace gz;

namespace {

CMatrix diag123(int n) {
  CMatrix x = CMatrix::Zero(n, n);
  for (int i = 0; i < n; ++i) x(i, i) = Complex(i + 1.0);
  return x;
}

}  // namespace

TEST_CASE("centralizer basis holds embedded powers that commute with the cutoff") {
  Rng rng(79);
  CMatrix x = random_matrix(rng, 4, 1.0);
  for (int m = 1; m <= 4; ++m) {
    CentralizerBasis basis = centralizer_basis(x, m);
    REQUIRE(static_cast<int>(basis.powers.size()) == m);
    CMatrix xm = embed(cutoff(x, m), 4);
    for (const CMatrix& z : basis.powers) {
      CHECK(test::max_abs_diff(z * xm, xm * z) < 1e-10);
    }
    CHECK(test::max_abs_diff(basis.powers[0], embed(CMatrix::Identity(m, m), 4)) == 0.0);
  }
}

TEST_CASE("regular cutoffs: distinct diagonal passes, zero matrix fails") {
  CHECK(is_regular_cutoff(diag123(3), 1, 1e-9));
  CHECK(is_regular_cutoff(diag123(3), 2, 1e-9));
  CHECK(is_regular_cutoff(diag123(3), 3, 1e-9));
  CHECK(!is_regular_cutoff(CMatrix::Zero(2, 2), 2, 1e-9));
  // Repeated eigenvalue with a full eigenspace is not regular.
  CMatrix rep = CMatrix::Identity(3, 3);
  CHECK(!is_regular_cutoff(rep, 2, 1e-9));
}

TEST_CASE("diag(1..n) is regular at every level but never strongly regular") {
  for (int n = 3; n <= 5; ++n) {
    CMatrix x = diag123(n);
    for (int m = 1; m <= n; ++m) CHECK(is_regular_cutoff(x, m, 1e-9));
    CHECK(!is_strongly_regular(x, 1e-9));
    CHECK(!is_strongly_regular_pairwise(x, 1e-9));
    CHECK(orbit_dim(x, 1e-9) == 0);  // diagonal matrices freeze every flow
  }
}

TEST_CASE("section points are strongly regular with full orbit dimension") {
  Rng rng(83);
  for (int n = 2; n <= 5; ++n) {
    CMatrix x = invert_phi(random_coord(rng, n));
    CHECK(is_strongly_regular(x, 1e-9));
    CHECK(is_strongly_regular_pairwise(x, 1e-9));
    CHECK(orbit_dim(x, 1e-9) == d(n - 1));
  }
}

TEST_CASE("the two strong-regularity characterizations agree on mixed samples") {
  Rng rng(89);
  int sreg = 0, total = 0;
  for (int rep = 0; rep < 40; ++rep) {
    const int n = 2 + static_cast<int>(rng.uniform() * 4);
    CMatrix x = random_matrix(rng, std::min(n, 5), 1.0);
    if (rep % 4 == 0) x = diag123(std::min(n, 5));       // known negative
    if (rep % 4 == 1) x = invert_phi(random_coord(rng, std::min(n, 5)));
    const bool a = is_strongly_regular(x, 1e-9);
    const bool b = is_strongly_regular_pairwise(x, 1e-9);
    CHECK(a == b);
    if (a) {
      CHECK(orbit_dim(x, 1e-9) == d(static_cast<int>(x.rows()) - 1));
      ++sreg;
    }
    ++total;
  }
  CHECK(sreg > 0);
  CHECK(sreg < total);
}

TEST_CASE("tangent space basis enumerates level-ordered brackets") {
  Rng rng(97);
  CMatrix x = random_matrix(rng, 4, 1.0);
  auto basis = tangent_space_basis(x);
  REQUIRE(static_cast<int>(basis.size()) == d(3));
  std::size_t idx = 0;
  for (int m = 1; m <= 3; ++m) {
    CMatrix xm = cutoff(x, m);
    for (int k = 1; k <= m; ++k) {
      // Entry (m,k) is [embed((x_m)^{m-k}), x]; powers descend as k rises.
      CMatrix p = CMatrix::Identity(m, m);
      for (int i = 0; i < m - k; ++i) p = p * xm;
      CMatrix z = embed(p, 4);
      CHECK(test::max_abs_diff(basis[idx], z * x - x * z) < 1e-9);
      ++idx;
    }
  }
}

TEST_CASE("symplectic pairing is antisymmetric and isotropic on generators") {
  Rng rng(101);
  CMatrix x = random_matrix(rng, 4, 1.0);
  CMatrix a = random_matrix(rng, 4, 1.0);
  CMatrix b = random_matrix(rng, 4, 1.0);
  CHECK(std::abs(symplectic_pairing(x, a, b) + symplectic_pairing(x, b, a)) <
        1e-10);

  std::vector<CMatrix> gens;
  for (int m = 1; m <= 4; ++m) {
    auto basis = centralizer_basis(x, m);
    gens.insert(gens.end(), basis.powers.begin(), basis.powers.end());
  }
  for (std::size_t i = 0; i < gens.size(); ++i) {
    for (std::size_t j = i + 1; j < gens.size(); ++j) {
      const double scale =
          std::max(1.0, x.norm() * gens[i].norm() * gens[j].norm());
      CHECK(std::abs(symplectic_pairing(x, gens[i], gens[j])) < 1e-9 * scale);
    }
  }
}

TEST_CASE("a non-diagonalizable matrix can still be strongly regular") {
  // Jordan block J_2(1): both cutoffs regular and the adjacent centralizers
  // span{e11} and span{I, J} meet only in zero.
  CMatrix x = CMatrix::Zero(2, 2);
  x(0, 0) = Complex(1.0);
  x(1, 1) = Complex(1.0);
  x(0, 1) = Complex(1.0);
  CHECK(is_regular_cutoff(x, 1, 1e-9));
  CHECK(is_regular_cutoff(x, 2, 1e-9));
  CHECK(is_strongly_regular(x, 1e-9));
  CHECK(is_strongly_regular_pairwise(x, 1e-9));
  CHECK(orbit_dim(x, 1e-9) == d(1));
}

TEST_CASE("levelwise regularity does not imply strong regularity") {
  // diag(1,2): regular at both levels, yet e11 = 2I - diag(1,2) lies in both
  // adjacent centralizers.
  CMatrix x = CMatrix::Zero(2, 2);
  x(0, 0) = Complex(1.0);
  x(1, 1) = Complex(2.0);
  CHECK(is_regular_cutoff(x, 1, 1e-9));
  CHECK(is_regular_cutoff(x, 2, 1e-9));
  CHECK(!is_strongly_regular(x, 1e-9));
  CHECK(!is_strongly_regular_pairwise(x, 1e-9));
}
