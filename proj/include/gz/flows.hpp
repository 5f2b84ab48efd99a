#pragma once

#include <map>
#include <vector>

#include "gz/types.hpp"

namespace gz {

// Names the Hamiltonian f_(k,m); 1 <= k <= m <= n-1 for flows.
struct FlowKey {
  int k = 0;
  int m = 0;
};

// One complex time per flow key, grouped by level: levels[m-1] has m entries
// and levels[m-1][k-1] multiplies the generator (x_m)^{m-k}.
struct GroupWord {
  int n = 0;
  std::vector<std::vector<Complex>> levels;
};

GroupWord zero_word(int n);
GroupWord negated(const GroupWord& w);
GroupWord word_sum(const GroupWord& a, const GroupWord& b);

// [ embed((x_m)^{m-k}), x ], the Hamiltonian vector field of f_(k,m).
CMatrix vector_field(const CMatrix& x, FlowKey key);

// Conjugation by exp(t (x_m)^{m-k}) padded with the identity; integrates
// vector_field and fixes every coordinate.
CMatrix flow(const CMatrix& x, FlowKey key, Complex t);

// Composite action of a word: g(m) = exp(sum_k levels[m-1][k-1] (x_m)^{m-k}),
// every generator taken from the base point x, applied with g(n-1) innermost.
CMatrix act(const CMatrix& x, const GroupWord& w);

// Polynomial in the trace invariants f_(k,m), m <= n-1, with complex
// coefficients.
class TracePoly {
 public:
  TracePoly() = default;
  explicit TracePoly(int n);
  static TracePoly constant(int n, Complex c);
  static TracePoly variable(int n, FlowKey key);

  TracePoly& operator+=(const TracePoly& o);
  TracePoly& operator-=(const TracePoly& o);
  TracePoly operator+(const TracePoly& o) const;
  TracePoly operator-(const TracePoly& o) const;
  TracePoly operator*(const TracePoly& o) const;
  friend TracePoly operator*(Complex c, const TracePoly& p);

  TracePoly partial(FlowKey key) const;
  // vals[key_index(n, key)] is the value of f_(k,m).
  Complex evaluate(const std::vector<Complex>& vals) const;

  int n() const { return n_; }
  static int key_index(int n, FlowKey key);

 private:
  int n_ = 0;
  std::map<std::vector<int>, Complex> terms_;  // exponent vector -> coefficient
};

// Flow of the Hamiltonian p for time t: by the chain rule this is act() with
// level times t * dp/df_(k,m), the partials evaluated at the invariants of x,
// which are constant along the flow.
CMatrix flow_general(const CMatrix& x, const TracePoly& p, Complex t);

// Conjugation by diag(eps_1, ..., eps_{n-1}, 1), eps_i in {-1, +1}.
CMatrix diag_action(const CMatrix& x, const std::vector<int>& eps);

// || act(x, w)^T - act(x^T, -w) ||_inf <= tol.
bool transpose_equivariance_check(const CMatrix& x, const GroupWord& w, double tol);

// For strongly regular x: words equal within eq_tol must land on the same
// point, distinct small real words on distinct points.
bool orbit_injectivity_check(const CMatrix& x, const GroupWord& w1,
                             const GroupWord& w2, const ToleranceConfig& tol);

}  // namespace gz
