#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include "doctest.h"

#include "gz/coordinates.hpp"
#include "gz/poisson.hpp"
#include "gz/random.hpp"
#include "gz/sympoly.hpp"
#include "oracles.hpp"

using namespace gz;

TEST_CASE("symbolic generators evaluate to the moment-map coordinates") {
  Rng rng(229);
  for (int n = 1; n <= 4; ++n) {
    auto gens = gz_generators_symbolic(n);
    REQUIRE(static_cast<int>(gens.size()) == d(n));
    CMatrix x = random_matrix(rng, n, 1.0);
    GZCoord c = phi(x);
    for (int i = 0; i < d(n); ++i) {
      CHECK(std::abs(gens[i].evaluate(x) - c.values[i]) < 1e-9);
    }
  }
}

TEST_CASE("calibration bracket {a_12, a_21} = a_11 - a_22") {
  const int n = 2;
  SymPoly lhs = sym_bracket(SymPoly::variable(n, 1, 2), SymPoly::variable(n, 2, 1));
  SymPoly want = SymPoly::variable(n, 1, 1) - SymPoly::variable(n, 2, 2);
  CHECK(lhs == want);

  Rng rng(233);
  CMatrix x = random_matrix(rng, n, 1.0);
  Complex num = num_bracket(entry_gradient(n, 1, 2), entry_gradient(n, 2, 1), x);
  CHECK(std::abs(num - (x(0, 0) - x(1, 1))) < 1e-12);
}

TEST_CASE("entry brackets agree across both engines") {
  Rng rng(239);
  const int n = 3;
  CMatrix x = random_matrix(rng, n, 1.0);
  for (int i = 1; i <= n; ++i) {
    for (int j = 1; j <= n; ++j) {
      for (int s = 1; s <= n; ++s) {
        for (int t = 1; t <= n; ++t) {
          SymPoly sym = sym_bracket(SymPoly::variable(n, i, j),
                                    SymPoly::variable(n, s, t));
          Complex num = num_bracket(entry_gradient(n, i, j),
                                    entry_gradient(n, s, t), x);
          CHECK(std::abs(sym.evaluate(x) - num) < 1e-12);
        }
      }
    }
  }
}

TEST_CASE("frozen bracket values") {
  // {a_11, a_12} = a_12 and {a_11, a_13} = a_13; diagonal entries commute.
  const int n = 3;
  CHECK(sym_bracket(SymPoly::variable(n, 1, 1), SymPoly::variable(n, 1, 2)) ==
        SymPoly::variable(n, 1, 2));
  CHECK(sym_bracket(SymPoly::variable(n, 1, 1), SymPoly::variable(n, 1, 3)) ==
        SymPoly::variable(n, 1, 3));
  CHECK(sym_bracket(SymPoly::variable(n, 1, 1), SymPoly::variable(n, 2, 2))
            .is_zero());
  CHECK(sym_bracket(SymPoly::variable(n, 1, 1), SymPoly::variable(n, 1, 1))
            .is_zero());
}

TEST_CASE("bracket is antisymmetric, bilinear, Leibniz, Jacobi") {
  const int n = 2;
  SymPoly f = SymPoly::variable(n, 1, 1);
  SymPoly g = SymPoly::variable(n, 1, 2) * SymPoly::variable(n, 2, 1);
  SymPoly h = SymPoly::variable(n, 2, 2) + SymPoly::variable(n, 1, 2);

  CHECK((sym_bracket(f, g) + sym_bracket(g, f)).is_zero());
  CHECK((sym_bracket(f + g, h) - sym_bracket(f, h) - sym_bracket(g, h))
            .is_zero());
  CHECK((sym_bracket(f * g, h) - f * sym_bracket(g, h) - sym_bracket(f, h) * g)
            .is_zero());
  SymPoly jacobi = sym_bracket(f, sym_bracket(g, h)) +
                   sym_bracket(g, sym_bracket(h, f)) +
                   sym_bracket(h, sym_bracket(f, g));
  CHECK(jacobi.is_zero());
}

TEST_CASE("generator pairs bracket to exact zero for n = 2 and 3") {
  CHECK(verify_gz_commutativity(1));
  CHECK(verify_gz_commutativity(2));
  CHECK(verify_gz_commutativity(3));
  CHECK(commutativity_pair_count(2) == 3);
  CHECK(commutativity_pair_count(3) == 15);
}

TEST_CASE("generator pairs bracket to exact zero for n = 4") {
  CHECK(verify_gz_commutativity(4));
  CHECK(commutativity_pair_count(4) == 45);
}

TEST_CASE("symbolic engine caps at n = 4") {
  CHECK_THROWS_AS(gz_generators_symbolic(5), DomainError);
  CHECK_THROWS_AS(verify_gz_commutativity(5), DomainError);
}

TEST_CASE("numeric brackets of invariants vanish at seeded points") {
  Rng rng(241);
  for (int rep = 0; rep < 5; ++rep) {
    const int n = 4;
    CMatrix x = random_matrix(rng, n, 1.0);
    for (int m1 = 1; m1 <= n; ++m1) {
      for (int k1 = 1; k1 <= m1; ++k1) {
        for (int m2 = m1; m2 <= n; ++m2) {
          for (int k2 = 1; k2 <= m2; ++k2) {
            Complex v = num_bracket(invariant_gradient(x, FlowKey{k1, m1}),
                                    invariant_gradient(x, FlowKey{k2, m2}), x);
            CHECK(std::abs(v) < 1e-9);
          }
        }
      }
    }
  }
}

TEST_CASE("invariant gradients match finite differences") {
  Rng rng(251);
  CMatrix x = random_matrix(rng, 4, 1.0);
  for (int m = 1; m <= 4; ++m) {
    for (int k = 1; k <= m; ++k) {
      CHECK(gradient_fd_error(x, FlowKey{k, m}, 1e-4) < 1e-6);
    }
  }
}

TEST_CASE("finite-difference error shrinks at second order") {
  Rng rng(257);
  CMatrix x = random_matrix(rng, 3, 1.0);
  const double big = gradient_fd_error(x, FlowKey{1, 3}, 1e-3);
  const double small = gradient_fd_error(x, FlowKey{1, 3}, 1e-4);
  // Central differences: error ratio about 100 between h and h/10.
  CHECK(small * 20.0 < big);
}

TEST_CASE("gradient of the top invariant is the embedded identity") {
  Rng rng(263);
  CMatrix x = random_matrix(rng, 3, 1.0);
  for (int m = 1; m <= 3; ++m) {
    CMatrix g = invariant_gradient(x, FlowKey{m, m});
    CHECK(test::max_abs_diff(g, embed(CMatrix::Identity(m, m), 3)) == 0.0);
  }
}

TEST_CASE("to_string gives a canonical graded-lex form") {
  const int n = 2;
  SymPoly det = SymPoly::variable(n, 1, 1) * SymPoly::variable(n, 2, 2) -
                SymPoly::variable(n, 1, 2) * SymPoly::variable(n, 2, 1);
  SymPoly det2 = -(SymPoly::variable(n, 1, 2) * SymPoly::variable(n, 2, 1)) +
                 SymPoly::variable(n, 2, 2) * SymPoly::variable(n, 1, 1);
  CHECK(det.to_string() == det2.to_string());
  CHECK(det.to_string().find("a_11") != std::string::npos);
}
