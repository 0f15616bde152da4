#pragma once
// Slow, direct implementations used as independent references in tests.

#include <functional>
#include <vector>

#include "filiform/cochain.hpp"
#include "filiform/rational.hpp"

namespace oracle {

using filiform::Q;

// full structure tensor, 0-based
struct Tensor {
  int n = 0;
  std::vector<Q> c;
  Q& at(int i, int j, int k) { return c[(static_cast<std::size_t>(i) * n + j) * n + k]; }
  const Q& at(int i, int j, int k) const { return c[(static_cast<std::size_t>(i) * n + j) * n + k]; }
};

inline Tensor tensor(const filiform::LieAlgebra<Q>& g) {
  Tensor t;
  t.n = g.dim();
  t.c.assign(static_cast<std::size_t>(t.n) * t.n * t.n, Q(0));
  for (int i = 1; i <= t.n; ++i)
    for (int j = 1; j <= t.n; ++j)
      for (int k = 1; k <= t.n; ++k) t.at(i - 1, j - 1, k - 1) = g.c(i, j, k);
  return t;
}

inline std::vector<Q> bracket(const Tensor& t, const std::vector<Q>& x, const std::vector<Q>& y) {
  std::vector<Q> r(t.n);
  for (int i = 0; i < t.n; ++i)
    for (int j = 0; j < t.n; ++j) {
      if (x[i].is_zero() || y[j].is_zero()) continue;
      for (int k = 0; k < t.n; ++k) r[k] += x[i] * y[j] * t.at(i, j, k);
    }
  return r;
}

inline std::vector<Q> e(int n, int i) {
  std::vector<Q> v(n);
  v[i] = Q(1);
  return v;
}

inline bool jacobi_holds(const Tensor& t) {
  for (int a = 0; a < t.n; ++a)
    for (int b = 0; b < t.n; ++b)
      for (int c = 0; c < t.n; ++c) {
        auto x = e(t.n, a), y = e(t.n, b), z = e(t.n, c);
        auto s1 = bracket(t, x, bracket(t, y, z));
        auto s2 = bracket(t, y, bracket(t, z, x));
        auto s3 = bracket(t, z, bracket(t, x, y));
        for (int k = 0; k < t.n; ++k)
          if (!(s1[k] + s2[k] + s3[k]).is_zero()) return false;
      }
  return true;
}

// phi evaluated on vectors, multilinear and alternating
inline Q eval(const filiform::Form<Q>& phi, const std::vector<std::vector<Q>>& vs) {
  Q total;
  const int p = phi.degree();
  for (const auto& [m, c] : phi.terms()) {
    auto idx = m.indices();
    // determinant of the p x p matrix vs[r][idx[s]-1]
    std::vector<int> perm(p);
    for (int i = 0; i < p; ++i) perm[i] = i;
    Q det;
    do {
      Q prod(1);
      for (int r = 0; r < p && !prod.is_zero(); ++r) prod *= vs[r][idx[perm[r]] - 1];
      if (prod.is_zero()) continue;
      det += filiform::sort_sign(perm) * prod;
    } while (std::next_permutation(perm.begin(), perm.end()));
    total += c * det;
  }
  return total;
}

// d phi through the invariant formula, with the sign fixed by de^k = sum c_ij^k e^i ∧ e^j
inline filiform::Form<Q> d(const filiform::LieAlgebra<Q>& g, const filiform::Form<Q>& phi) {
  Tensor t = tensor(g);
  const int n = g.dim(), p = phi.degree();
  filiform::Form<Q> out(p + 1);
  for (const auto& m : filiform::monomials(n, p + 1)) {
    auto idx = m.indices();
    std::vector<std::vector<Q>> xs;
    for (int i : idx) xs.push_back(e(n, i - 1));
    Q val;
    for (int i = 0; i <= p; ++i)
      for (int j = i + 1; j <= p; ++j) {
        std::vector<std::vector<Q>> args{bracket(t, xs[i], xs[j])};
        for (int r = 0; r <= p; ++r)
          if (r != i && r != j) args.push_back(xs[r]);
        Q v = eval(phi, args);
        val += ((i + j) % 2 == 0 ? -v : v);
      }
    out.add(m, val);
  }
  return out;
}

inline Q det(std::vector<std::vector<Q>> a) {
  const int n = static_cast<int>(a.size());
  std::vector<int> perm(n);
  for (int i = 0; i < n; ++i) perm[i] = i;
  Q s;
  do {
    Q prod(1);
    for (int r = 0; r < n && !prod.is_zero(); ++r) prod *= a[r][perm[r]];
    if (!prod.is_zero()) s += filiform::sort_sign(perm) * prod;
  } while (std::next_permutation(perm.begin(), perm.end()));
  return s;
}

// largest nonvanishing minor; only for small matrices
inline int rank_by_minors(const std::vector<std::vector<Q>>& a) {
  const int R = static_cast<int>(a.size());
  const int C = R ? static_cast<int>(a[0].size()) : 0;
  int best = 0;
  for (std::uint32_t rs = 1; rs < (1u << R); ++rs)
    for (std::uint32_t cs = 1; cs < (1u << C); ++cs) {
      int k = std::popcount(rs);
      if (k != std::popcount(cs) || k <= best) continue;
      std::vector<std::vector<Q>> sub;
      for (int i = 0; i < R; ++i) {
        if (!((rs >> i) & 1)) continue;
        std::vector<Q> row;
        for (int j = 0; j < C; ++j)
          if ((cs >> j) & 1) row.push_back(a[i][j]);
        sub.push_back(row);
      }
      if (!det(sub).is_zero()) best = k;
    }
  return best;
}

// plain Gaussian elimination on dense rows, for sizes beyond the minor search
inline int rank_plain(std::vector<std::vector<Q>> a) {
  int r = 0;
  const int R = static_cast<int>(a.size());
  const int C = R ? static_cast<int>(a[0].size()) : 0;
  for (int c = 0; c < C && r < R; ++c) {
    int p = -1;
    for (int i = r; i < R; ++i)
      if (!a[i][c].is_zero()) {
        p = i;
        break;
      }
    if (p < 0) continue;
    std::swap(a[p], a[r]);
    for (int i = r + 1; i < R; ++i) {
      if (a[i][c].is_zero()) continue;
      Q f = a[i][c] / a[r][c];
      for (int j = c; j < C; ++j) a[i][j] -= f * a[r][j];
    }
    ++r;
  }
  return r;
}

// dimension of H^p through ranks of the oracle differential
inline int betti(const filiform::LieAlgebra<Q>& g, int p) {
  const int n = g.dim();
  auto rank_d = [&](int q) {
    if (q < 0 || q >= n) return 0;
    auto src = filiform::monomials(n, q), dst = filiform::monomials(n, q + 1);
    std::vector<std::vector<Q>> m(dst.size(), std::vector<Q>(src.size()));
    for (std::size_t j = 0; j < src.size(); ++j) {
      auto img = d(g, filiform::Form<Q>(q, {{src[j], Q(1)}}));
      for (std::size_t i = 0; i < dst.size(); ++i) m[i][j] = img.coeff(dst[i]);
    }
    return rank_plain(m);
  };
  return static_cast<int>(filiform::monomials(n, p).size()) - rank_d(p) - rank_d(p - 1);
}

// phi (columns = images of e_1..e_n) is an isomorphism g -> h
inline bool is_iso(const filiform::LieAlgebra<Q>& g, const filiform::LieAlgebra<Q>& h, const std::vector<std::vector<Q>>& cols) {
  const int n = g.dim();
  if (h.dim() != n || rank_plain(cols) != n) return false;
  Tensor tg = tensor(g), th = tensor(h);
  auto apply = [&](const std::vector<Q>& x) {
    std::vector<Q> y(n);
    for (int i = 0; i < n; ++i)
      for (int k = 0; k < n; ++k) y[k] += x[i] * cols[i][k];
    return y;
  };
  for (int i = 0; i < n; ++i)
    for (int j = i + 1; j < n; ++j)
      if (apply(bracket(tg, e(n, i), e(n, j))) != bracket(th, cols[i], cols[j])) return false;
  return true;
}

// diagonal isomorphism between N-graded filiform algebras, found by solving the
// chain and the first non-chain bracket, then checked on the whole tensor
inline bool diagonal_iso(const filiform::LieAlgebra<Q>& g, const filiform::LieAlgebra<Q>& h) {
  const int n = g.dim();
  if (h.dim() != n) return false;
  std::vector<Q> mu(n + 1, Q(1));
  for (int i = 2; i < n; ++i) {
    if (g.c(1, i, i + 1).is_zero() || h.c(1, i, i + 1).is_zero()) return false;
    mu[i + 1] = mu[i] * h.c(1, i, i + 1) / g.c(1, i, i + 1);
  }
  Q s(1);
  for (int i = 2; i <= n; ++i)
    for (int j = i + 1; i + j <= n; ++j)
      if (!h.c(i, j, i + j).is_zero() && !g.c(i, j, i + j).is_zero()) {
        s = g.c(i, j, i + j) * mu[i + j] / (mu[i] * mu[j] * h.c(i, j, i + j));
        goto found;
      }
found:
  std::vector<std::vector<Q>> cols;
  for (int i = 1; i <= n; ++i) {
    std::vector<Q> c(n);
    c[i - 1] = i == 1 ? Q(1) : s * mu[i];
    cols.push_back(c);
  }
  return is_iso(g, h, cols);
}

}  // namespace oracle
