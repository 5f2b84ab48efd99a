#include <pybind11/complex.h>
#include <pybind11/eigen.h>
#include <pybind11/pybind11.h>
#include <pybind11/stl.h>

#include "gz/coordinates.hpp"
#include "gz/cross_section.hpp"
#include "gz/fiber.hpp"
#include "gz/flows.hpp"
#include "gz/orthopoly.hpp"
#include "gz/regularity.hpp"
#include "gz/selftest.hpp"
#include "gz/sympoly.hpp"

namespace py = pybind11;

namespace {

int size_from_coord_length(std::size_t len) {
  for (int n = 1; n <= 64; ++n) {
    if (static_cast<std::size_t>(gz::d(n)) == len) return n;
  }
  throw std::invalid_argument("coordinate vector length must be n(n+1)/2");
}

gz::GZCoord coord_from_values(const std::vector<gz::Complex>& values) {
  gz::GZCoord c;
  c.n = size_from_coord_length(values.size());
  c.values = values;
  return c;
}

gz::GroupWord word_from_levels(const std::vector<std::vector<gz::Complex>>& levels) {
  gz::GroupWord w;
  w.n = static_cast<int>(levels.size()) + 1;
  w.levels = levels;
  for (std::size_t m = 0; m < levels.size(); ++m) {
    if (levels[m].size() != m + 1) {
      throw std::invalid_argument("word level " + std::to_string(m + 1) +
                                  " must have " + std::to_string(m + 1) +
                                  " entries");
    }
  }
  return w;
}

}  // namespace

PYBIND11_MODULE(_core, mod) {
  mod.doc() = "Gelfand-Zeitlin integrable-system core";

  py::register_exception<gz::DomainError>(mod, "DomainError");
  py::register_exception<gz::NumericalError>(mod, "NumericalError");

  mod.def("d", &gz::d, py::arg("m"), "Triangular dimension m(m+1)/2");

  mod.def(
      "phi",
      [](const gz::CMatrix& x) { return gz::phi(x).values; }, py::arg("x"),
      "Moment-map coordinates, level by level");

  mod.def(
      "invert_phi",
      [](const std::vector<gz::Complex>& values) {
        return gz::invert_phi(coord_from_values(values));
      },
      py::arg("values"), "Upper Hessenberg section point of a coordinate vector");

  mod.def(
      "invert_phi_with_subdiag",
      [](const std::vector<gz::Complex>& values,
         const std::vector<gz::Complex>& subdiag) {
        return gz::invert_phi_with_subdiag(coord_from_values(values), subdiag);
      },
      py::arg("values"), py::arg("subdiag"));

  mod.def(
      "tower",
      [](const gz::CMatrix& x, double tie_tol) {
        return gz::tower_from_matrix(x, tie_tol).levels;
      },
      py::arg("x"), py::arg("tie_tol") = 1e-9,
      "Cutoff spectra, lexicographically ordered per level");

  mod.def(
      "is_strongly_regular",
      [](const gz::CMatrix& x, double rank_tol) {
        return gz::is_strongly_regular(x, rank_tol);
      },
      py::arg("x"), py::arg("rank_tol") = 1e-9);

  mod.def(
      "orbit_dim",
      [](const gz::CMatrix& x, double rank_tol) {
        return gz::orbit_dim(x, rank_tol);
      },
      py::arg("x"), py::arg("rank_tol") = 1e-9);

  mod.def(
      "flow",
      [](const gz::CMatrix& x, int k, int m, gz::Complex t) {
        return gz::flow(x, gz::FlowKey{k, m}, t);
      },
      py::arg("x"), py::arg("k"), py::arg("m"), py::arg("t"),
      "Hamiltonian flow of the invariant (k, m) for complex time t");

  mod.def(
      "act",
      [](const gz::CMatrix& x, const std::vector<std::vector<gz::Complex>>& levels) {
        return gz::act(x, word_from_levels(levels));
      },
      py::arg("x"), py::arg("levels"),
      "Abelian group action; levels[m-1][k-1] flows the invariant (k, m)");

  mod.def(
      "normal_form",
      [](const gz::CMatrix& x, double rank_tol, double eq_tol,
         double disjoint_tol) {
        gz::ToleranceConfig tol{rank_tol, eq_tol, disjoint_tol};
        gz::NormalFormResult nf = gz::normal_form(x, tol);
        return py::make_tuple(nf.canonical, nf.word.levels);
      },
      py::arg("x"), py::arg("rank_tol") = 1e-9, py::arg("eq_tol") = 1e-8,
      py::arg("disjoint_tol") = 1e-7,
      "Canonical fiber representative and the word reaching it");

  mod.def(
      "beta", [](const gz::CMatrix& x) { return gz::beta(x); }, py::arg("x"));

  mod.def(
      "beta_inverse",
      [](const std::vector<gz::Complex>& values, const gz::CMatrix& u,
         double rank_tol, double eq_tol, double disjoint_tol) {
        gz::ToleranceConfig tol{rank_tol, eq_tol, disjoint_tol};
        return gz::beta_inverse(coord_from_values(values), u, tol);
      },
      py::arg("values"), py::arg("u"), py::arg("rank_tol") = 1e-9,
      py::arg("eq_tol") = 1e-8, py::arg("disjoint_tol") = 1e-7);

  mod.def(
      "symmetric_fiber",
      [](const std::vector<gz::Complex>& values, double rank_tol, double eq_tol,
         double disjoint_tol) {
        gz::ToleranceConfig tol{rank_tol, eq_tol, disjoint_tol};
        auto members = gz::symmetric_fiber(coord_from_values(values), tol);
        py::list out;
        for (const auto& member : members) {
          py::dict entry;
          entry["sign_index"] = member.sign_index;
          entry["matrix"] = member.x;
          entry["jacobi"] = gz::is_jacobi(member.x, 1e-8);
          out.append(entry);
        }
        return out;
      },
      py::arg("values"), py::arg("rank_tol") = 1e-9, py::arg("eq_tol") = 1e-8,
      py::arg("disjoint_tol") = 1e-7,
      "All symmetric matrices over a pairwise-disjoint coordinate vector");

  mod.def(
      "jacobi_matrix",
      [](const std::vector<double>& nodes, const std::vector<double>& weights,
         int n) {
        return gz::jacobi_matrix(gz::DiscreteMeasure{nodes, weights}, n);
      },
      py::arg("nodes"), py::arg("weights"), py::arg("n"));

  mod.def(
      "verify_monic_match",
      [](const std::vector<double>& nodes, const std::vector<double>& weights,
         int n, double tol) {
        return gz::verify_monic_match(gz::DiscreteMeasure{nodes, weights}, n, tol);
      },
      py::arg("nodes"), py::arg("weights"), py::arg("n"), py::arg("tol") = 1e-8);

  mod.def("verify_gz_commutativity", &gz::verify_gz_commutativity, py::arg("n"),
          "Exact pairwise commutativity of the coordinate generators, n <= 4");

  mod.def(
      "selftest",
      [](std::uint64_t seed, int n_max) {
        gz::ToleranceConfig tol;
        auto results = gz::run_selftest(seed, n_max, tol);
        py::list out;
        for (const auto& r : results) {
          py::dict entry;
          entry["name"] = r.name;
          entry["pass"] = r.pass;
          entry["residual"] = r.residual;
          entry["detail"] = r.detail;
          out.append(entry);
        }
        return out;
      },
      py::arg("seed") = 20260822ull, py::arg("n_max") = 5,
      "Run the acceptance property suite");
}
