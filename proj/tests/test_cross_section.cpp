#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include "doctest.h"

#include "gz/coordinates.hpp"
#include "gz/cross_section.hpp"
#include "gz/random.hpp"
#include "gz/regularity.hpp"
#include "oracles.hpp"

using namespace gz;

TEST_CASE("invert_phi reproduces the frozen 2x2 section point") {
  GZCoord c{2, {Complex(1), Complex(-2), Complex(5)}};
  CMatrix x = invert_phi(c);
  CHECK(x(0, 0) == Complex(1.0));
  CHECK(x(0, 1) == Complex(6.0));
  CHECK(x(1, 0) == Complex(1.0));
  CHECK(x(1, 1) == Complex(4.0));
}

TEST_CASE("invert_phi reproduces the frozen 3x3 section point") {
  // c extends (1,-2,5) by the zero polynomial at level 3; the entries below
  // follow from expanding lambda g_{m-1} - P_m in the g basis.
  GZCoord c{3, {Complex(1), Complex(-2), Complex(5), Complex(0), Complex(0),
                Complex(0)}};
  CMatrix x = invert_phi(c);
  CMatrix want(3, 3);
  want << Complex(1), Complex(6), Complex(-37), Complex(1), Complex(4),
      Complex(-27), Complex(0), Complex(1), Complex(-5);
  CHECK(test::max_abs_diff(x, want) == 0.0);
}

TEST_CASE("invert_phi of the zero coordinate is the shift matrix") {
  GZCoord c{4, std::vector<Complex>(d(4), Complex(0.0))};
  CMatrix x = invert_phi(c);
  for (int i = 0; i < 4; ++i) {
    for (int j = 0; j < 4; ++j) {
      CHECK(x(i, j) == (j == i - 1 ? Complex(1.0) : Complex(0.0)));
    }
  }
}

TEST_CASE("section points have unit subdiagonal and zero lower triangle") {
  Rng rng(61);
  for (int n = 2; n <= 6; ++n) {
    CMatrix x = invert_phi(random_coord(rng, n));
    for (int i = 0; i < n; ++i) {
      for (int j = 0; j + 1 < i; ++j) CHECK(x(i, j) == Complex(0.0));
      if (i > 0) CHECK(x(i, i - 1) == Complex(1.0));
    }
  }
}

TEST_CASE("phi inverts invert_phi tightly across sizes") {
  Rng rng(67);
  for (int n = 2; n <= 6; ++n) {
    for (int rep = 0; rep < 20; ++rep) {
      GZCoord c = random_coord(rng, n);
      GZCoord back = phi(invert_phi(c));
      for (std::size_t i = 0; i < c.values.size(); ++i) {
        CHECK(std::abs(back.values[i] - c.values[i]) < 1e-9);
      }
    }
  }
}

TEST_CASE("section points are strongly regular") {
  Rng rng(71);
  for (int n = 2; n <= 5; ++n) {
    CMatrix x = invert_phi(random_coord(rng, n));
    CHECK(is_strongly_regular(x, 1e-9));
  }
}

TEST_CASE("integer coordinates produce integer section entries") {
  // Polynomial bookkeeping only: no root finding, so integer data stays exact.
  GZCoord c{3, {Complex(2), Complex(-1), Complex(3), Complex(4), Complex(0),
                Complex(-2)}};
  CMatrix x = invert_phi(c);
  for (int i = 0; i < 3; ++i) {
    for (int j = 0; j < 3; ++j) {
      CHECK(x(i, j).real() == std::round(x(i, j).real()));
      CHECK(x(i, j).imag() == 0.0);
    }
  }
  GZCoord back = phi(x);
  for (int i = 0; i < 6; ++i) CHECK(back.values[i] == c.values[i]);
}

TEST_CASE("invert_phi_with_subdiag keeps the fiber and plants the subdiagonal") {
  Rng rng(73);
  GZCoord c = random_coord(rng, 4);
  std::vector<Complex> z{Complex(2.0), Complex(0.0, 1.0), Complex(-0.5, 0.5)};
  CMatrix x = invert_phi_with_subdiag(c, z);
  for (int i = 0; i + 1 < 4; ++i) CHECK(std::abs(x(i + 1, i) - z[i]) < 1e-12);
  GZCoord back = phi(x);
  for (std::size_t i = 0; i < c.values.size(); ++i) {
    CHECK(std::abs(back.values[i] - c.values[i]) < 1e-8);
  }

  CHECK(test::max_abs_diff(
            invert_phi_with_subdiag(c, {Complex(1), Complex(1), Complex(1)}),
            invert_phi(c)) == 0.0);
}

TEST_CASE("invert_phi_with_subdiag rejects vanishing subdiagonal entries") {
  GZCoord c{2, {Complex(1), Complex(-2), Complex(5)}};
  CHECK_THROWS_AS(invert_phi_with_subdiag(c, {Complex(0.0)}), DomainError);
  CHECK_THROWS_AS(invert_phi_with_subdiag(c, {Complex(1), Complex(1)}),
                  std::invalid_argument);
}

TEST_CASE("invert_phi validates the coordinate shape") {
  GZCoord bad{3, {Complex(1)}};
  CHECK_THROWS_AS(invert_phi(bad), std::invalid_argument);
}
