#include "gz/flows.hpp"

#include <cmath>

#include "gz/coordinates.hpp"
#include "gz/linalg.hpp"

namespace gz {

namespace {

void require_key(int n, FlowKey key, const char* who) {
  if (key.m < 1 || key.m > n - 1 || key.k < 1 || key.k > key.m) {
    throw std::invalid_argument(std::string(who) + ": key out of range");
  }
}

void require_word(const CMatrix& x, const GroupWord& w, const char* who) {
  const int n = static_cast<int>(x.rows());
  if (w.n != n || static_cast<int>(w.levels.size()) != n - 1) {
    throw std::invalid_argument(std::string(who) + ": word does not match matrix size");
  }
  for (int m = 1; m < n; ++m) {
    if (static_cast<int>(w.levels[m - 1].size()) != m) {
      throw std::invalid_argument(std::string(who) + ": malformed word level");
    }
  }
}

}  // namespace

GroupWord zero_word(int n) {
  if (n < 1) throw std::invalid_argument("zero_word: n must be positive");
  GroupWord w;
  w.n = n;
  w.levels.resize(n - 1);
  for (int m = 1; m < n; ++m) w.levels[m - 1].assign(m, Complex(0.0));
  return w;
}

GroupWord negated(const GroupWord& w) {
  GroupWord out = w;
  for (auto& lv : out.levels) {
    for (auto& t : lv) t = -t;
  }
  return out;
}

GroupWord word_sum(const GroupWord& a, const GroupWord& b) {
  if (a.n != b.n) throw std::invalid_argument("word_sum: size mismatch");
  GroupWord out = a;
  for (std::size_t m = 0; m < out.levels.size(); ++m) {
    for (std::size_t k = 0; k < out.levels[m].size(); ++k) {
      out.levels[m][k] += b.levels[m][k];
    }
  }
  return out;
}

CMatrix vector_field(const CMatrix& x, FlowKey key) {
  detail::require_square(x, "vector_field");
  require_key(static_cast<int>(x.rows()), key, "vector_field");
  const int n = static_cast<int>(x.rows());
  CMatrix xm = cutoff(x, key.m);
  CMatrix p = CMatrix::Identity(key.m, key.m);
  for (int i = 0; i < key.m - key.k; ++i) p = p * xm;
  CMatrix z = embed(p, n);
  return z * x - x * z;
}

CMatrix flow(const CMatrix& x, FlowKey key, Complex t) {
  GroupWord w = zero_word(static_cast<int>(x.rows()));
  require_key(static_cast<int>(x.rows()), key, "flow");
  w.levels[key.m - 1][key.k - 1] = t;
  return act(x, w);
}

CMatrix act(const CMatrix& x, const GroupWord& w) {
  detail::require_square(x, "act");
  require_word(x, w, "act");
  const int n = static_cast<int>(x.rows());
  CMatrix y = x;
  // Every generator is a function of a cutoff of the base point x; the levels
  // at and below m are untouched by the level-m element, so reading them from
  // y after deeper conjugations is the same thing.
  for (int m = n - 1; m >= 1; --m) {
    bool active = false;
    for (Complex t : w.levels[m - 1]) {
      if (t != Complex(0.0)) active = true;
    }
    if (!active) continue;
    CMatrix xm = cutoff(x, m);
    CMatrix z = CMatrix::Zero(m, m);
    CMatrix p = CMatrix::Identity(m, m);
    for (int k = m; k >= 1; --k) {  // p runs through (x_m)^{m-k}
      z += w.levels[m - 1][k - 1] * p;
      p = p * xm;
    }
    CMatrix g = CMatrix::Identity(n, n);
    g.topLeftCorner(m, m) = mat_exp(z);
    CMatrix ginv = CMatrix::Identity(n, n);
    ginv.topLeftCorner(m, m) = mat_exp(-z);
    y = g * y * ginv;
    if (!y.allFinite()) throw NumericalError("act: overflow along the flow");
  }
  return y;
}

TracePoly::TracePoly(int n) : n_(n) {
  if (n < 1) throw std::invalid_argument("TracePoly: n must be positive");
}

int TracePoly::key_index(int n, FlowKey key) {
  if (key.m < 1 || key.m > n - 1 || key.k < 1 || key.k > key.m) {
    throw std::invalid_argument("TracePoly: key out of range");
  }
  return d(key.m - 1) + key.k - 1;
}

TracePoly TracePoly::constant(int n, Complex c) {
  TracePoly p(n);
  if (c != Complex(0.0)) p.terms_[std::vector<int>(d(n - 1), 0)] = c;
  return p;
}

TracePoly TracePoly::variable(int n, FlowKey key) {
  TracePoly p(n);
  std::vector<int> e(d(n - 1), 0);
  e[key_index(n, key)] = 1;
  p.terms_[e] = Complex(1.0);
  return p;
}

TracePoly& TracePoly::operator+=(const TracePoly& o) {
  if (n_ != o.n_) throw std::invalid_argument("TracePoly: size mismatch");
  for (const auto& [e, c] : o.terms_) {
    auto it = terms_.find(e);
    if (it == terms_.end()) {
      terms_[e] = c;
    } else {
      it->second += c;
      if (it->second == Complex(0.0)) terms_.erase(it);
    }
  }
  return *this;
}

TracePoly& TracePoly::operator-=(const TracePoly& o) {
  return *this += Complex(-1.0) * o;
}

TracePoly TracePoly::operator+(const TracePoly& o) const {
  TracePoly out = *this;
  out += o;
  return out;
}

TracePoly TracePoly::operator-(const TracePoly& o) const {
  TracePoly out = *this;
  out -= o;
  return out;
}

TracePoly TracePoly::operator*(const TracePoly& o) const {
  if (n_ != o.n_) throw std::invalid_argument("TracePoly: size mismatch");
  TracePoly out(n_);
  for (const auto& [ea, ca] : terms_) {
    for (const auto& [eb, cb] : o.terms_) {
      std::vector<int> e(ea.size());
      for (std::size_t i = 0; i < e.size(); ++i) e[i] = ea[i] + eb[i];
      auto it = out.terms_.find(e);
      if (it == out.terms_.end()) {
        out.terms_[e] = ca * cb;
      } else {
        it->second += ca * cb;
        if (it->second == Complex(0.0)) out.terms_.erase(it);
      }
    }
  }
  return out;
}

TracePoly operator*(Complex c, const TracePoly& p) {
  TracePoly out(p.n_);
  if (c == Complex(0.0)) return out;
  for (const auto& [e, coeff] : p.terms_) out.terms_[e] = c * coeff;
  return out;
}

TracePoly TracePoly::partial(FlowKey key) const {
  const int idx = key_index(n_, key);
  TracePoly out(n_);
  for (const auto& [e, c] : terms_) {
    if (e[idx] == 0) continue;
    std::vector<int> de = e;
    de[idx] -= 1;
    out.terms_[de] = c * static_cast<double>(e[idx]);
  }
  return out;
}

Complex TracePoly::evaluate(const std::vector<Complex>& vals) const {
  if (static_cast<int>(vals.size()) != d(n_ - 1)) {
    throw std::invalid_argument("TracePoly::evaluate: wrong value count");
  }
  Complex acc(0.0);
  for (const auto& [e, c] : terms_) {
    Complex term = c;
    for (std::size_t i = 0; i < e.size(); ++i) {
      for (int p = 0; p < e[i]; ++p) term *= vals[i];
    }
    acc += term;
  }
  return acc;
}

CMatrix flow_general(const CMatrix& x, const TracePoly& p, Complex t) {
  detail::require_square(x, "flow_general");
  const int n = static_cast<int>(x.rows());
  if (p.n() != n) throw std::invalid_argument("flow_general: polynomial size mismatch");
  std::vector<Complex> vals(d(n - 1));
  for (int m = 1; m < n; ++m) {
    for (int k = 1; k <= m; ++k) {
      vals[TracePoly::key_index(n, {k, m})] = trace_invariant(x, k, m);
    }
  }
  GroupWord w = zero_word(n);
  for (int m = 1; m < n; ++m) {
    for (int k = 1; k <= m; ++k) {
      w.levels[m - 1][k - 1] = t * p.partial({k, m}).evaluate(vals);
    }
  }
  return act(x, w);
}

CMatrix diag_action(const CMatrix& x, const std::vector<int>& eps) {
  detail::require_square(x, "diag_action");
  const int n = static_cast<int>(x.rows());
  if (static_cast<int>(eps.size()) != n - 1) {
    throw std::invalid_argument("diag_action: need n-1 signs");
  }
  for (int e : eps) {
    if (e != 1 && e != -1) throw std::invalid_argument("diag_action: signs must be +-1");
  }
  CVector dd(n);
  for (int i = 0; i < n - 1; ++i) dd(i) = static_cast<double>(eps[i]);
  dd(n - 1) = Complex(1.0);
  // The element is an involution, so conjugation is two-sided multiplication.
  return dd.asDiagonal() * x * dd.asDiagonal();
}

bool transpose_equivariance_check(const CMatrix& x, const GroupWord& w, double tol) {
  CMatrix lhs = act(x, w).transpose();
  CMatrix rhs = act(x.transpose(), negated(w));
  return (lhs - rhs).cwiseAbs().maxCoeff() <= tol;
}

bool orbit_injectivity_check(const CMatrix& x, const GroupWord& w1,
                             const GroupWord& w2, const ToleranceConfig& tol) {
  validate(tol);
  if (w1.n != w2.n) throw std::invalid_argument("orbit_injectivity_check: size mismatch");
  double word_gap = 0.0;
  for (std::size_t m = 0; m < w1.levels.size(); ++m) {
    for (std::size_t k = 0; k < w1.levels[m].size(); ++k) {
      word_gap = std::max(word_gap, std::abs(w1.levels[m][k] - w2.levels[m][k]));
    }
  }
  double point_gap = (act(x, w1) - act(x, w2)).cwiseAbs().maxCoeff();
  if (word_gap <= tol.eq_tol) return point_gap <= tol.eq_tol * 100;
  return point_gap > tol.eq_tol;
}

}  // namespace gz
