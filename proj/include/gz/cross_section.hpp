#pragma once

#include <vector>

#include "gz/coordinates.hpp"

namespace gz {

// The unique matrix with unit subdiagonal and zeros below it whose
// coordinates are c. Built column by column with no root finding.
CMatrix invert_phi(const GZCoord& c);

// Same section carried to an arbitrary nonzero subdiagonal z (size n-1) by a
// diagonal conjugation, which leaves every coordinate fixed.
CMatrix invert_phi_with_subdiag(const GZCoord& c, const std::vector<Complex>& z);

}  // namespace gz
