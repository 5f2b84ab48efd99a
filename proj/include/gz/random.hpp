#pragma once

#include <cstdint>
#include <random>

#include "gz/coordinates.hpp"
#include "gz/flows.hpp"
#include "gz/types.hpp"

namespace gz {

// Deterministic source for every randomized operation. Normals come from
// Box-Muller on the raw stream so that a seed fixes the byte-exact output
// everywhere.
class Rng {
 public:
  explicit Rng(std::uint64_t seed) : gen_(seed) {}

  double uniform();                      // [0, 1)
  double uniform(double lo, double hi);  // [lo, hi)
  double normal();                       // standard real normal
  Complex cnormal();                     // E|z|^2 = 1, independent re/im

 private:
  std::mt19937_64 gen_;
  bool have_spare_ = false;
  double spare_ = 0.0;
};

// Entries iid standard complex normal, scaled by scale.
CMatrix random_matrix(Rng& rng, int n, double scale = 1.0);

// Rejection onto pairwise-disjoint cutoff spectra.
CMatrix random_disjoint_matrix(Rng& rng, int n, const ToleranceConfig& tol,
                               double scale = 1.0, double min_sep = 1e-3);

GZCoord random_coord(Rng& rng, int n);

// Real tower satisfying the strict interlacing chain with comfortable
// margins.
SpectrumTower random_interlacing_tower(Rng& rng, int n);

// Real tower, disjoint with margin min_sep but not interlacing.
SpectrumTower random_noninterlacing_tower(Rng& rng, int n, double min_sep = 5e-2);

// Word with iid entries; real_only restricts times to the real axis.
GroupWord random_word(Rng& rng, int n, double scale, bool real_only);

}  // namespace gz
