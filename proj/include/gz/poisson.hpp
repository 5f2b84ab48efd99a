#pragma once

#include "gz/flows.hpp"
#include "gz/types.hpp"

namespace gz {

// {f,g}(x) = tr(x [grad_g, grad_f]) for functions with trace gradients,
// calibrated so that entry variables reproduce {a_12, a_21} = a_11 - a_22.
Complex num_bracket(const CMatrix& grad_f, const CMatrix& grad_g, const CMatrix& x);

// Trace gradient of the entry function a_{ij}: the matrix unit e_{ji}.
CMatrix entry_gradient(int n, int i, int j);

// Trace gradient of f_(k,m) at x: embed((x_m)^{m-k}); 1 <= k <= m <= n.
CMatrix invariant_gradient(const CMatrix& x, FlowKey key);

// Max deviation between invariant_gradient and a central finite difference of
// f_(k,m) over all entry directions, step h.
double gradient_fd_error(const CMatrix& x, FlowKey key, double h);

}  // namespace gz
