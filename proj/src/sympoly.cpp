#include "gz/sympoly.hpp"

#include <algorithm>
#include <functional>
#include <numeric>
#include <sstream>

namespace gz {

namespace {

int var_index(int n, int i, int j) {
  if (i < 1 || i > n || j < 1 || j > n) {
    throw std::invalid_argument("SymPoly: entry index out of range");
  }
  return (i - 1) * n + (j - 1);
}

}  // namespace

SymPoly::SymPoly(int n) : n_(n) {
  if (n < 1) throw std::invalid_argument("SymPoly: n must be positive");
}

SymPoly SymPoly::constant(int n, const Rational& c) {
  SymPoly p(n);
  if (c != 0) p.terms_[std::vector<int>(n * n, 0)] = c;
  return p;
}

SymPoly SymPoly::variable(int n, int i, int j) {
  SymPoly p(n);
  std::vector<int> e(n * n, 0);
  e[var_index(n, i, j)] = 1;
  p.terms_[e] = 1;
  return p;
}

void SymPoly::prune() {
  for (auto it = terms_.begin(); it != terms_.end();) {
    if (it->second == 0) {
      it = terms_.erase(it);
    } else {
      ++it;
    }
  }
}

SymPoly& SymPoly::operator+=(const SymPoly& o) {
  if (n_ != o.n_) throw std::invalid_argument("SymPoly: size mismatch");
  for (const auto& [e, c] : o.terms_) terms_[e] += c;
  prune();
  return *this;
}

SymPoly& SymPoly::operator-=(const SymPoly& o) {
  if (n_ != o.n_) throw std::invalid_argument("SymPoly: size mismatch");
  for (const auto& [e, c] : o.terms_) terms_[e] -= c;
  prune();
  return *this;
}

SymPoly SymPoly::operator+(const SymPoly& o) const {
  SymPoly out = *this;
  out += o;
  return out;
}

SymPoly SymPoly::operator-(const SymPoly& o) const {
  SymPoly out = *this;
  out -= o;
  return out;
}

SymPoly SymPoly::operator-() const {
  SymPoly out = *this;
  for (auto& [e, c] : out.terms_) c = -c;
  return out;
}

SymPoly SymPoly::operator*(const SymPoly& o) const {
  if (n_ != o.n_) throw std::invalid_argument("SymPoly: size mismatch");
  SymPoly out(n_);
  for (const auto& [ea, ca] : terms_) {
    for (const auto& [eb, cb] : o.terms_) {
      std::vector<int> e(ea.size());
      for (std::size_t i = 0; i < e.size(); ++i) e[i] = ea[i] + eb[i];
      out.terms_[e] += ca * cb;
    }
  }
  out.prune();
  return out;
}

bool SymPoly::operator==(const SymPoly& o) const {
  return n_ == o.n_ && terms_ == o.terms_;
}

bool SymPoly::is_zero() const { return terms_.empty(); }

SymPoly SymPoly::partial(int var) const {
  if (var < 0 || var >= n_ * n_) {
    throw std::invalid_argument("SymPoly::partial: variable out of range");
  }
  SymPoly out(n_);
  for (const auto& [e, c] : terms_) {
    if (e[var] == 0) continue;
    std::vector<int> de = e;
    de[var] -= 1;
    out.terms_[de] += c * e[var];
  }
  out.prune();
  return out;
}

Complex SymPoly::evaluate(const CMatrix& x) const {
  if (x.rows() != n_ || x.cols() != n_) {
    throw std::invalid_argument("SymPoly::evaluate: matrix size mismatch");
  }
  Complex acc(0.0);
  for (const auto& [e, c] : terms_) {
    Complex term(static_cast<double>(c));
    for (int v = 0; v < n_ * n_; ++v) {
      for (int p = 0; p < e[v]; ++p) term *= x(v / n_, v % n_);
    }
    acc += term;
  }
  return acc;
}

std::string SymPoly::to_string() const {
  if (terms_.empty()) return "0";
  std::vector<const std::pair<const std::vector<int>, Rational>*> order;
  for (const auto& t : terms_) order.push_back(&t);
  std::sort(order.begin(), order.end(), [](const auto* a, const auto* b) {
    int da = std::accumulate(a->first.begin(), a->first.end(), 0);
    int db = std::accumulate(b->first.begin(), b->first.end(), 0);
    if (da != db) return da > db;
    return a->first > b->first;  // graded lex, higher degree first
  });
  std::ostringstream os;
  bool first = true;
  for (const auto* t : order) {
    const Rational& c = t->second;
    if (!first) os << (c < 0 ? " - " : " + ");
    if (first && c < 0) os << "-";
    first = false;
    Rational ac = abs(c);
    bool has_vars = std::any_of(t->first.begin(), t->first.end(),
                                [](int e) { return e > 0; });
    if (ac != 1 || !has_vars) os << ac.str();
    bool star = (ac != 1 || !has_vars);
    for (int v = 0; v < n_ * n_; ++v) {
      for (int rep = 0; rep < t->first[v]; ++rep) {
        if (star) os << "*";
        os << "a_" << (v / n_ + 1) << (v % n_ + 1);
        star = true;
      }
    }
  }
  return os.str();
}

SymPoly sym_bracket(const SymPoly& f, const SymPoly& g) {
  if (f.n() != g.n()) throw std::invalid_argument("sym_bracket: size mismatch");
  const int n = f.n();
  SymPoly acc(n);
  // {f,g} = sum over entry pairs of df/da_ij dg/da_st {a_ij, a_st} with
  // {a_ij, a_st} = d_js a_it - d_ti a_sj.
  for (int i = 1; i <= n; ++i) {
    for (int j = 1; j <= n; ++j) {
      SymPoly fi = f.partial((i - 1) * n + (j - 1));
      if (fi.is_zero()) continue;
      for (int s = 1; s <= n; ++s) {
        for (int t = 1; t <= n; ++t) {
          if (j != s && t != i) continue;  // bracket of the pair vanishes
          SymPoly gs = g.partial((s - 1) * n + (t - 1));
          if (gs.is_zero()) continue;
          SymPoly elem(n);
          if (j == s) elem += SymPoly::variable(n, i, t);
          if (t == i) elem -= SymPoly::variable(n, s, j);
          if (elem.is_zero()) continue;
          acc += fi * gs * elem;
        }
      }
    }
  }
  return acc;
}

std::vector<SymPoly> gz_generators_symbolic(int n) {
  if (n < 1) throw std::invalid_argument("gz_generators_symbolic: n must be positive");
  if (n > 4) {
    throw DomainError("gz_generators_symbolic: n > 4 exceeds the symbolic size limit");
  }
  std::vector<SymPoly> out(d(n));
  for (int m = 1; m <= n; ++m) {
    // det(lambda I_m - x_m) as a polynomial in lambda with SymPoly
    // coefficients, by Laplace expansion down the first column.
    using LPoly = std::vector<SymPoly>;  // coefficient of lambda^q at index q
    std::vector<std::vector<LPoly>> mat(m, std::vector<LPoly>(m));
    for (int i = 0; i < m; ++i) {
      for (int j = 0; j < m; ++j) {
        LPoly e;
        e.push_back(-SymPoly::variable(n, i + 1, j + 1));
        if (i == j) e.push_back(SymPoly::constant(n, 1));
        mat[i][j] = e;
      }
    }
    auto mul = [n](const LPoly& a, const LPoly& b) {
      LPoly out(a.size() + b.size() - 1, SymPoly(n));
      for (std::size_t i = 0; i < a.size(); ++i) {
        for (std::size_t j = 0; j < b.size(); ++j) out[i + j] += a[i] * b[j];
      }
      return out;
    };
    auto add_into = [](LPoly& a, const LPoly& b, bool negate) {
      if (a.size() < b.size()) a.resize(b.size(), SymPoly(b[0].n()));
      for (std::size_t i = 0; i < b.size(); ++i) {
        if (negate) {
          a[i] -= b[i];
        } else {
          a[i] += b[i];
        }
      }
    };
    std::function<LPoly(const std::vector<int>&, const std::vector<int>&)> det =
        [&](const std::vector<int>& rows, const std::vector<int>& cols) -> LPoly {
      if (rows.size() == 1) return mat[rows[0]][cols[0]];
      LPoly acc(1, SymPoly(n));
      for (std::size_t r = 0; r < rows.size(); ++r) {
        std::vector<int> sub_rows;
        for (std::size_t q = 0; q < rows.size(); ++q) {
          if (q != r) sub_rows.push_back(rows[q]);
        }
        std::vector<int> sub_cols(cols.begin() + 1, cols.end());
        LPoly minor = det(sub_rows, sub_cols);
        add_into(acc, mul(mat[rows[r]][cols[0]], minor), r % 2 == 1);
      }
      return acc;
    };
    std::vector<int> idx(m);
    for (int i = 0; i < m; ++i) idx[i] = i;
    LPoly charp = det(idx, idx);
    // f_{k,m} = (-1)^{m-k+1} [lambda^{k-1}] det(lambda I - x_m).
    for (int k = 1; k <= m; ++k) {
      SymPoly f = charp[k - 1];
      if ((m - k + 1) % 2 == 1) f = -f;
      out[d(m - 1) + k - 1] = f;
    }
  }
  return out;
}

int commutativity_pair_count(int n) { return d(n) * (d(n) - 1) / 2; }

bool verify_gz_commutativity(int n) {
  auto gens = gz_generators_symbolic(n);
  for (std::size_t a = 0; a < gens.size(); ++a) {
    for (std::size_t b = a + 1; b < gens.size(); ++b) {
      if (!sym_bracket(gens[a], gens[b]).is_zero()) return false;
    }
  }
  return true;
}

}  // namespace gz
