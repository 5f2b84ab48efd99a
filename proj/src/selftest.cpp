#include "gz/selftest.hpp"

#include <algorithm>
#include <chrono>
#include <cmath>
#include <sstream>

#include "gz/cross_section.hpp"
#include "gz/fiber.hpp"
#include "gz/flows.hpp"
#include "gz/orthopoly.hpp"
#include "gz/poisson.hpp"
#include "gz/random.hpp"
#include "gz/regularity.hpp"
#include "gz/sympoly.hpp"

namespace gz {

namespace {

double max_abs_diff(const CMatrix& a, const CMatrix& b) {
  return (a - b).cwiseAbs().maxCoeff();
}

double coord_gap(const GZCoord& a, const GZCoord& b) {
  double worst = 0.0;
  for (std::size_t i = 0; i < a.values.size(); ++i) {
    worst = std::max(worst, std::abs(a.values[i] - b.values[i]));
  }
  return worst;
}

CMatrix reference_x3() {
  CMatrix x = CMatrix::Zero(3, 3);
  x(0, 1) = x(1, 0) = x(1, 2) = x(2, 1) = Complex(1.0);
  return x;
}

CMatrix reference_y3() {
  CMatrix y = CMatrix::Zero(3, 3);
  y(0, 1) = y(1, 0) = y(0, 2) = y(2, 0) = Complex(1.0);
  return y;
}

SpectrumTower reference_tower3() {
  const double r = std::sqrt(2.0);
  SpectrumTower t;
  t.n = 3;
  t.levels = {{Complex(0.0)},
              {Complex(-1.0), Complex(1.0)},
              {Complex(-r), Complex(0.0), Complex(r)}};
  return t;
}

struct Timer {
  std::chrono::steady_clock::time_point start = std::chrono::steady_clock::now();
  double seconds() const {
    return std::chrono::duration<double>(std::chrono::steady_clock::now() - start)
        .count();
  }
};

CriterionResult exact_commutativity(std::uint64_t, int, const ToleranceConfig&) {
  CriterionResult r;
  r.name = "poisson-exact-commutativity";
  Timer timer;
  bool ok = true;
  int pairs = 0;
  for (int n = 2; n <= 3; ++n) {
    ok = ok && verify_gz_commutativity(n);
    pairs += commutativity_pair_count(n);
  }
  const double secs = timer.seconds();
  r.pass = ok && secs < 60.0;
  r.residual = 0.0;
  std::ostringstream os;
  os << pairs << " generator pairs bracket to the exact zero polynomial (n=2,3)";
  if (secs >= 60.0) os << "; over the 60s budget";
  r.detail = os.str();
  return r;
}

CriterionResult cross_section_roundtrip(std::uint64_t seed, int n_max,
                                        const ToleranceConfig& tol) {
  CriterionResult r;
  r.name = "cross-section-roundtrip";
  Timer timer;
  Rng rng(seed ^ 0x1001);
  double worst = 0.0;
  bool sreg_ok = true;
  const int hi = std::min(6, n_max);
  int count = 0;
  for (int n = 2; n <= hi; ++n) {
    for (int rep = 0; rep < 100; ++rep) {
      GZCoord c = random_coord(rng, n);
      CMatrix x = invert_phi(c);
      worst = std::max(worst, coord_gap(phi(x), c));
      sreg_ok = sreg_ok && is_strongly_regular(x, tol.rank_tol);
      ++count;
    }
  }
  const double secs = timer.seconds();
  r.pass = worst < 1e-8 && sreg_ok && secs < 30.0;
  r.residual = worst;
  std::ostringstream os;
  os << count << " random coordinate vectors, n=2.." << hi
     << "; every section point strongly regular: " << (sreg_ok ? "yes" : "NO");
  if (secs >= 30.0) os << "; over the 30s budget";
  r.detail = os.str();
  return r;
}

CriterionResult flow_invariance(std::uint64_t seed, int n_max,
                                const ToleranceConfig& tol) {
  CriterionResult r;
  r.name = "flow-invariance-commutativity";
  Rng rng(seed ^ 0x1002);
  double worst = 0.0;
  const int hi = std::min(5, n_max);
  const int per = 200 / (hi - 1);
  for (int n = 2; n <= hi; ++n) {
    for (int rep = 0; rep < per; ++rep) {
      CMatrix x = random_matrix(rng, n, 0.4);
      auto key = [&](void) -> FlowKey {
        int m = 1 + static_cast<int>(rng.uniform() * (n - 1));
        m = std::min(m, n - 1);
        int k = 1 + static_cast<int>(rng.uniform() * m);
        return {std::min(k, m), m};
      };
      auto time = [&](void) {
        const double mod = rng.uniform(0.0, 2.0);
        const double arg = rng.uniform(0.0, 2.0 * M_PI);
        return Complex(mod * std::cos(arg), mod * std::sin(arg));
      };
      FlowKey ka = key(), kb = key();
      Complex ta = time(), tb = time();
      CMatrix ya = flow(x, ka, ta);
      worst = std::max(worst, coord_gap(phi(ya), phi(x)));
      CMatrix ab = flow(ya, kb, tb);
      CMatrix ba = flow(flow(x, kb, tb), ka, ta);
      worst = std::max(worst, max_abs_diff(ab, ba));
    }
  }
  (void)tol;
  r.pass = worst < 1e-8;
  r.residual = worst;
  std::ostringstream os;
  os << per * (hi - 1) << " samples, n=2.." << hi
     << ", |t|<=2: coordinates invariant along flows and flow order immaterial";
  r.detail = os.str();
  return r;
}

CriterionResult small_fiber_reference(std::uint64_t, int, const ToleranceConfig& tol) {
  CriterionResult r;
  r.name = "three-level-symmetric-fiber";
  GZCoord c = coord_from_tower(reference_tower3());
  auto fiber = symmetric_fiber(c, tol);
  const CMatrix xr = reference_x3();
  const CMatrix yr = reference_y3();
  double best_x = 1e9, best_y = 1e9;
  for (const auto& member : fiber) {
    best_x = std::min(best_x, max_abs_diff(member.x, xr));
    best_y = std::min(best_y, max_abs_diff(member.x, yr));
  }
  auto jac = jacobi_members(fiber, 1e-8);
  // Every member past the two references must be a +-1 diagonal conjugate of
  // one of them.
  auto orbit_x = diag_sign_orbit(xr);
  auto orbit_y = diag_sign_orbit(yr);
  int matched = 0;
  for (const auto& member : fiber) {
    double best = 1e9;
    for (const auto& o : orbit_x) best = std::min(best, max_abs_diff(member.x, o));
    for (const auto& o : orbit_y) best = std::min(best, max_abs_diff(member.x, o));
    if (best < 1e-10) ++matched;
  }
  r.residual = std::max(best_x, best_y);
  r.pass = fiber.size() == 8 && best_x < 1e-10 && best_y < 1e-10 &&
           jac.size() == 4 && matched == 8;
  std::ostringstream os;
  os << fiber.size() << " members, " << jac.size()
     << " tridiagonal, all in the two reference sign orbits (" << matched << "/8)";
  r.detail = os.str();
  return r;
}

CriterionResult symmetric_fiber_count(std::uint64_t seed, int n_max,
                                      const ToleranceConfig& tol) {
  CriterionResult r;
  r.name = "symmetric-fiber-count";
  Timer timer;
  Rng rng(seed ^ 0x1005);
  const int hi = std::min(5, n_max);
  bool counts_ok = true;
  double worst_imag = 0.0, worst_phi = 0.0;
  std::ostringstream counts;
  double secs5 = 0.0;
  for (int n = 2; n <= hi; ++n) {
    Timer level_timer;
    SpectrumTower t = random_interlacing_tower(rng, n);
    GZCoord c = coord_from_tower(t);
    auto fiber = symmetric_fiber(c, tol);
    counts_ok = counts_ok &&
                fiber.size() == (std::size_t{1} << d(n - 1));
    for (const auto& member : fiber) {
      worst_imag = std::max(worst_imag, member.x.imag().cwiseAbs().maxCoeff());
      worst_phi = std::max(worst_phi, coord_gap(phi(member.x), c));
    }
    if (n == 5) secs5 = level_timer.seconds();
    counts << (n > 2 ? " " : "") << "n=" << n << ":" << fiber.size();
  }
  (void)timer;
  r.pass = counts_ok && worst_imag < 1e-8 && worst_phi < 1e-7 &&
           (secs5 == 0.0 || secs5 < 60.0);
  r.residual = std::max(worst_imag, worst_phi);
  std::ostringstream os;
  os << "interlacing towers give full real fibers (" << counts.str() << ")";
  if (secs5 >= 60.0) os << "; n=5 over the 60s budget";
  r.detail = os.str();
  return r;
}

CriterionResult noninterlacing_imaginary(std::uint64_t seed, int n_max,
                                         const ToleranceConfig& tol) {
  CriterionResult r;
  r.name = "non-interlacing-forces-imaginary";
  Rng rng(seed ^ 0x1006);
  const int hi = std::min(4, n_max);
  bool ok = true;
  double least_peak = 1e9;
  int towers = 0;
  for (int n = 3; n <= hi; ++n) {
    for (int rep = 0; rep < 5; ++rep) {
      SpectrumTower t = random_noninterlacing_tower(rng, n);
      GZCoord c = coord_from_tower(t);
      auto fiber = symmetric_fiber(c, tol);
      double peak = 0.0;
      for (const auto& member : fiber) {
        peak = std::max(peak, member.x.imag().cwiseAbs().maxCoeff());
      }
      least_peak = std::min(least_peak, peak);
      ok = ok && peak > 1e-4;
      ++towers;
    }
  }
  r.pass = ok;
  r.residual = least_peak;
  std::ostringstream os;
  os << towers << " disjoint non-interlacing real towers, n=3.." << hi
     << "; every fiber leaves the real locus (least peak |Im| " << least_peak
     << ")";
  r.detail = os.str();
  return r;
}

CriterionResult transpose_anti_equivariance(std::uint64_t seed, int n_max,
                                            const ToleranceConfig&) {
  CriterionResult r;
  r.name = "transpose-anti-equivariance";
  Rng rng(seed ^ 0x1007);
  const int hi = std::min(5, n_max);
  const int per = 100 / (hi - 1);
  bool ok = true;
  double worst = 0.0;
  for (int n = 2; n <= hi; ++n) {
    for (int rep = 0; rep < per; ++rep) {
      CMatrix x = random_matrix(rng, n, 0.5);
      GroupWord w = random_word(rng, n, 0.3, false);
      CMatrix lhs = act(x, w).transpose();
      CMatrix rhs = act(x.transpose(), negated(w));
      const double gap = max_abs_diff(lhs, rhs);
      worst = std::max(worst, gap);
      ok = ok && transpose_equivariance_check(x, w, 1e-8);
    }
  }
  r.pass = ok && worst < 1e-8;
  r.residual = worst;
  std::ostringstream os;
  os << per * (hi - 1) << " samples, n=2.." << hi
     << ": transposition inverts the action";
  r.detail = os.str();
  return r;
}

CriterionResult normal_form_coherence(std::uint64_t seed, int n_max,
                                      const ToleranceConfig& tol) {
  CriterionResult r;
  r.name = "normal-form-coherence";
  Rng rng(seed ^ 0x1008);
  const int hi = std::min(5, n_max);
  double worst = 0.0;
  for (int n = 2; n <= hi; ++n) {
    for (int rep = 0; rep < 10; ++rep) {
      CMatrix x = random_disjoint_matrix(rng, n, tol, 1.0, 0.05);
      NormalFormResult nf = normal_form(x, tol);
      CMatrix section = invert_phi(phi(x)).transpose();
      worst = std::max(worst, max_abs_diff(nf.canonical, section));
      worst = std::max(worst, max_abs_diff(act(x, nf.word), nf.canonical));
      CMatrix y = act(x, random_word(rng, n, 0.3, false));
      worst = std::max(worst, max_abs_diff(normal_form(y, tol).canonical,
                                           nf.canonical));
    }
  }
  GZCoord c3 = coord_from_tower(reference_tower3());
  (void)c3;
  CMatrix cx = normal_form(reference_x3(), tol).canonical;
  CMatrix cy = normal_form(reference_y3(), tol).canonical;
  worst = std::max(worst, max_abs_diff(cx, cy));
  r.pass = worst < 1e-7;
  r.residual = worst;
  std::ostringstream os;
  os << "canonical form equals the transposed section, is orbit invariant, and "
        "agrees on the two reference fiber points";
  r.detail = os.str();
  return r;
}

CriterionResult chart_roundtrip(std::uint64_t seed, int n_max,
                                const ToleranceConfig& tol) {
  CriterionResult r;
  r.name = "chart-roundtrip";
  Rng rng(seed ^ 0x1009);
  const int hi = std::min(5, n_max);
  const int per = 100 / (hi - 1);
  double worst = 0.0;
  for (int n = 2; n <= hi; ++n) {
    for (int rep = 0; rep < per; ++rep) {
      CMatrix x = random_disjoint_matrix(rng, n, tol, 1.0, 0.05);
      CMatrix back = beta_inverse(phi(x), beta(x), tol);
      worst = std::max(worst, max_abs_diff(back, x));
    }
  }
  r.pass = worst < 1e-7;
  r.residual = worst;
  std::ostringstream os;
  os << per * (hi - 1)
     << " samples: the strict upper triangle determines the fiber point";
  r.detail = os.str();
  return r;
}

CriterionResult regularity_equivalences(std::uint64_t seed, int n_max,
                                        const ToleranceConfig& tol) {
  CriterionResult r;
  r.name = "regularity-equivalences";
  Rng rng(seed ^ 0x100a);
  const int hi = std::min(5, n_max);
  const int per = 200 / (hi - 1);
  bool ok = true;
  int sreg_count = 0, total = 0;
  for (int n = 2; n <= hi; ++n) {
    for (int rep = 0; rep < per; ++rep) {
      CMatrix x = random_matrix(rng, n, 1.0);
      const bool a = is_strongly_regular(x, tol.rank_tol);
      const bool b = is_strongly_regular_pairwise(x, tol.rank_tol);
      ok = ok && (a == b);
      if (a) {
        ok = ok && orbit_dim(x, tol.rank_tol) == d(n - 1);
        ++sreg_count;
      }
      ++total;
    }
  }
  // diag(1..n) is regular at every level yet never strongly regular.
  {
    const int n = std::min(4, std::max(3, n_max));
    CMatrix diag = CMatrix::Zero(n, n);
    for (int i = 0; i < n; ++i) diag(i, i) = Complex(i + 1.0);
    ok = ok && !is_strongly_regular(diag, tol.rank_tol);
    ok = ok && !is_strongly_regular_pairwise(diag, tol.rank_tol);
    ok = ok && orbit_dim(diag, tol.rank_tol) < d(n - 1);
    for (int m = 1; m <= n; ++m) ok = ok && is_regular_cutoff(diag, m, tol.rank_tol);
  }
  r.pass = ok;
  r.residual = 0.0;
  std::ostringstream os;
  os << total << " samples (" << sreg_count
     << " strongly regular, full orbit dimension); the diagonal counterexample "
        "separates levelwise regularity from strong regularity";
  r.detail = os.str();
  return r;
}

CriterionResult orthopoly_bridge(std::uint64_t seed, int, const ToleranceConfig& tol) {
  CriterionResult r;
  r.name = "orthopoly-bridge";
  Rng rng(seed ^ 0x100b);
  const int n = 4;
  bool ok = true;
  double worst = 0.0;
  for (int rep = 0; rep < 10; ++rep) {
    DiscreteMeasure mu;
    double t = rng.uniform(-2.5, -1.5);
    for (int i = 0; i < 7; ++i) {
      mu.nodes.push_back(t);
      mu.weights.push_back(rng.uniform(0.2, 1.2));
      t += rng.uniform(0.1, 0.8);
    }
    ok = ok && verify_monic_match(mu, n, 1e-8);
    CMatrix j = jacobi_matrix(mu, n);
    SpectrumTower tower = tower_from_matrix(j, tol.eq_tol);
    ok = ok && is_interlacing(tower, tol);
    ThreeTermRecurrence rec = recurrence_from_tower(tower, tol);
    worst = std::max(worst, max_abs_diff(jacobi_from_recurrence(rec), j));
  }
  r.pass = ok && worst < 1e-8;
  r.residual = worst;
  std::ostringstream os;
  os << "10 random 7-point measures, n=4: orthonormal recurrence, cutoff "
        "charpolys, interlacing, and tower inversion all agree";
  r.detail = os.str();
  return r;
}

CriterionResult isotropy_pairing(std::uint64_t seed, int n_max,
                                 const ToleranceConfig&) {
  CriterionResult r;
  r.name = "isotropy-pairing";
  Rng rng(seed ^ 0x100c);
  const int hi = std::min(5, n_max);
  double worst_ratio = 0.0;
  for (int n = 2; n <= hi; ++n) {
    for (int rep = 0; rep < 10; ++rep) {
      CMatrix x = random_matrix(rng, n, 1.0);
      std::vector<CMatrix> gens;
      for (int m = 1; m <= n; ++m) {
        auto basis = centralizer_basis(x, m);
        gens.insert(gens.end(), basis.powers.begin(), basis.powers.end());
      }
      const double nx = x.norm();
      for (std::size_t a = 0; a < gens.size(); ++a) {
        for (std::size_t b = a + 1; b < gens.size(); ++b) {
          const double scale =
              std::max(1.0, nx * gens[a].norm() * gens[b].norm());
          const double val = std::abs(symplectic_pairing(x, gens[a], gens[b]));
          worst_ratio = std::max(worst_ratio, val / scale);
        }
      }
    }
  }
  r.pass = worst_ratio < 1e-9;
  r.residual = worst_ratio;
  std::ostringstream os;
  os << "tr(x [za, zb]) vanishes to scale across all centralizer generator "
        "pairs, n=2.." << hi;
  r.detail = os.str();
  return r;
}

}  // namespace

std::vector<CriterionResult> run_selftest(std::uint64_t seed, int n_max,
                                          const ToleranceConfig& tol) {
  validate(tol);
  n_max = std::max(2, std::min(6, n_max));
  using Fn = CriterionResult (*)(std::uint64_t, int, const ToleranceConfig&);
  const Fn criteria[] = {
      exact_commutativity,    cross_section_roundtrip, flow_invariance,
      small_fiber_reference,  symmetric_fiber_count,   noninterlacing_imaginary,
      transpose_anti_equivariance, normal_form_coherence, chart_roundtrip,
      regularity_equivalences, orthopoly_bridge,       isotropy_pairing,
  };
  std::vector<CriterionResult> out;
  for (Fn fn : criteria) {
    try {
      out.push_back(fn(seed, n_max, tol));
    } catch (const std::exception& e) {
      CriterionResult r;
      r.name = "criterion";
      r.pass = false;
      r.detail = std::string("exception: ") + e.what();
      out.push_back(r);
    }
  }
  return out;
}

bool all_pass(const std::vector<CriterionResult>& results) {
  for (const auto& r : results) {
    if (!r.pass) return false;
  }
  return true;
}

}  // namespace gz
