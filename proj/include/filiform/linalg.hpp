#pragma once

#include <algorithm>
#include <map>
#include <optional>
#include <utility>
#include <vector>

#include <Eigen/Core>

#include "filiform/polynomial.hpp"
#include "filiform/rational.hpp"

namespace filiform {

template <class S>
using Matrix = Eigen::Matrix<S, Eigen::Dynamic, Eigen::Dynamic>;
template <class S>
using Vector = Eigen::Matrix<S, Eigen::Dynamic, 1>;

// Sparse vector: (index, value) sorted by index, no stored zeros.
template <class S>
using SparseVec = std::vector<std::pair<int, S>>;

template <class S>
S sparse_get(const SparseVec<S>& v, int i) {
  auto it = std::lower_bound(v.begin(), v.end(), i, [](const auto& e, int k) { return e.first < k; });
  if (it != v.end() && it->first == i) return it->second;
  return S(0);
}

// a + f*b
template <class S>
SparseVec<S> sparse_axpy(const SparseVec<S>& a, const S& f, const SparseVec<S>& b) {
  SparseVec<S> r;
  r.reserve(a.size() + b.size());
  auto ia = a.begin(), ib = b.begin();
  while (ia != a.end() || ib != b.end()) {
    if (ib == b.end() || (ia != a.end() && ia->first < ib->first)) {
      r.push_back(*ia++);
    } else if (ia == a.end() || ib->first < ia->first) {
      S v = f * ib->second;
      if (!is_zero(v)) r.emplace_back(ib->first, std::move(v));
      ++ib;
    } else {
      S v = ia->second + f * ib->second;
      if (!is_zero(v)) r.emplace_back(ia->first, std::move(v));
      ++ia;
      ++ib;
    }
  }
  return r;
}

template <class S>
SparseVec<S> sparse_scale(const SparseVec<S>& a, const S& f) {
  SparseVec<S> r;
  if (is_zero(f)) return r;
  r.reserve(a.size());
  for (const auto& [i, v] : a) r.emplace_back(i, v * f);
  return r;
}

template <class S>
SparseVec<S> to_sparse(const Vector<S>& v) {
  SparseVec<S> r;
  for (int i = 0; i < v.size(); ++i)
    if (!is_zero(v(i))) r.emplace_back(i, v(i));
  return r;
}

template <class S>
Vector<S> to_dense(const SparseVec<S>& v, int n) {
  Vector<S> r = Vector<S>::Zero(n);
  for (const auto& [i, x] : v) r(i) = x;
  return r;
}

template <class S>
class SparseMatrix {
 public:
  SparseMatrix() = default;
  SparseMatrix(int rows, int cols) : rows_(rows), cols_(cols) {}

  int rows() const { return rows_; }
  int cols() const { return cols_; }
  const std::map<std::pair<int, int>, S>& entries() const { return e_; }
  std::size_t nonzeros() const { return e_.size(); }

  void set(int r, int c, const S& v) {
    if (is_zero(v))
      e_.erase({r, c});
    else
      e_[{r, c}] = v;
  }
  void add(int r, int c, const S& v) {
    if (is_zero(v)) return;
    auto it = e_.find({r, c});
    if (it == e_.end()) {
      e_.emplace(std::make_pair(r, c), v);
      return;
    }
    it->second += v;
    if (is_zero(it->second)) e_.erase(it);
  }
  S get(int r, int c) const {
    auto it = e_.find({r, c});
    return it == e_.end() ? S(0) : it->second;
  }

  static SparseMatrix from_dense(const Matrix<S>& m) {
    SparseMatrix s(static_cast<int>(m.rows()), static_cast<int>(m.cols()));
    for (int i = 0; i < m.rows(); ++i)
      for (int j = 0; j < m.cols(); ++j) s.set(i, j, m(i, j));
    return s;
  }
  Matrix<S> to_dense() const {
    Matrix<S> m = Matrix<S>::Zero(rows_, cols_);
    for (const auto& [rc, v] : e_) m(rc.first, rc.second) = v;
    return m;
  }
  std::vector<SparseVec<S>> row_list() const {
    std::vector<SparseVec<S>> r(rows_);
    for (const auto& [rc, v] : e_) r[rc.first].emplace_back(rc.second, v);
    return r;
  }
  std::vector<SparseVec<S>> column_list() const {
    std::vector<SparseVec<S>> c(cols_);
    for (const auto& [rc, v] : e_) c[rc.second].emplace_back(rc.first, v);
    for (auto& col : c) std::sort(col.begin(), col.end(), [](const auto& a, const auto& b) { return a.first < b.first; });
    return c;
  }
  SparseVec<S> apply(const SparseVec<S>& x) const {
    std::map<int, S> acc;
    for (const auto& [rc, v] : e_) {
      S xi = sparse_get(x, rc.second);
      if (!is_zero(xi)) acc[rc.first] += v * xi;
    }
    SparseVec<S> r;
    for (auto& [i, v] : acc)
      if (!is_zero(v)) r.emplace_back(i, std::move(v));
    return r;
  }
  Vector<S> operator*(const Vector<S>& x) const {
    Vector<S> r = Vector<S>::Zero(rows_);
    for (const auto& [rc, v] : e_) r(rc.first) += v * x(rc.second);
    return r;
  }

 private:
  int rows_ = 0, cols_ = 0;
  std::map<std::pair<int, int>, S> e_;
};

// Reduced row echelon form. pivot_values lists every raw pivot divided by during
// elimination; specializing a parametric matrix is safe where none of them vanish.
template <class S>
struct Echelon {
  int cols = 0;
  std::vector<SparseVec<S>> rows;
  std::vector<int> pivots;
  std::vector<S> pivot_values;
  bool went_dense = false;
  int rank() const { return static_cast<int>(pivots.size()); }
};

namespace detail {

template <class S>
bool better_pivot(const S& a, std::size_t na, const S& b, std::size_t nb) {
  auto ca = cost(a), cb = cost(b);
  if (ca != cb) return ca < cb;
  return na < nb;
}

template <class S>
Echelon<S> rref_dense(Matrix<S> m, std::vector<S> pivot_values) {
  Echelon<S> e;
  e.cols = static_cast<int>(m.cols());
  e.pivot_values = std::move(pivot_values);
  e.went_dense = true;
  const int R = static_cast<int>(m.rows()), C = static_cast<int>(m.cols());
  int r = 0;
  for (int c = 0; c < C && r < R; ++c) {
    int best = -1;
    std::size_t best_nnz = 0;
    for (int i = r; i < R; ++i) {
      if (is_zero(m(i, c))) continue;
      std::size_t nnz = 0;
      for (int j = c; j < C; ++j) nnz += !is_zero(m(i, j));
      if (best < 0 || better_pivot(m(i, c), nnz, m(best, c), best_nnz)) {
        best = i;
        best_nnz = nnz;
      }
    }
    if (best < 0) continue;
    if (best != r) m.row(best).swap(m.row(r));
    S p = m(r, c);
    e.pivot_values.push_back(p);
    S inv = S(1) / p;
    for (int j = c; j < C; ++j)
      if (!is_zero(m(r, j))) m(r, j) = m(r, j) * inv;
    for (int i = 0; i < R; ++i) {
      if (i == r || is_zero(m(i, c))) continue;
      S f = m(i, c);
      for (int j = c; j < C; ++j)
        if (!is_zero(m(r, j))) m(i, j) = m(i, j) - f * m(r, j);
    }
    e.pivots.push_back(c);
    ++r;
  }
  for (int i = 0; i < r; ++i) {
    SparseVec<S> row;
    for (int j = 0; j < C; ++j)
      if (!is_zero(m(i, j))) row.emplace_back(j, m(i, j));
    e.rows.push_back(std::move(row));
  }
  return e;
}

template <class S>
bool better_pivot_row(const SparseVec<S>& a, const SparseVec<S>& b) {
  return better_pivot(a.front().second, a.size(), b.front().second, b.size());
}

}  // namespace detail

// Sparse Gauss-Jordan elimination with cost-based pivoting; switches to dense
// storage once the working rows exceed half fill.
template <class S>
Echelon<S> row_echelon(std::vector<SparseVec<S>> input, int cols) {
  std::vector<SparseVec<S>> rows;
  for (auto& r : input)
    if (!r.empty()) rows.push_back(std::move(r));
  Echelon<S> e;
  e.cols = cols;
  if (rows.empty()) return e;
  const std::size_t limit = rows.size() * static_cast<std::size_t>(cols) / 2;
  const bool can_densify = rows.size() * static_cast<std::size_t>(cols) >= 256;
  std::vector<std::vector<int>> bucket(cols);
  std::size_t nnz = 0;
  for (int i = 0; i < static_cast<int>(rows.size()); ++i) {
    bucket[rows[i].front().first].push_back(i);
    nnz += rows[i].size();
  }
  std::vector<int> done;
  for (int c = 0; c < cols; ++c) {
    auto& cand = bucket[c];
    if (cand.empty()) continue;
    int best = cand[0];
    for (int i : cand)
      if (detail::better_pivot_row(rows[i], rows[best])) best = i;
    S p = rows[best].front().second;
    e.pivot_values.push_back(p);
    if (!(p == S(1))) {
      S inv = S(1) / p;
      for (auto& [j, v] : rows[best]) v = v * inv;
    }
    for (int i : cand) {
      if (i == best) continue;
      S f = -rows[i].front().second;
      nnz -= rows[i].size();
      rows[i] = sparse_axpy(rows[i], f, rows[best]);
      nnz += rows[i].size();
      if (!rows[i].empty()) bucket[rows[i].front().first].push_back(i);
    }
    cand.clear();
    e.pivots.push_back(c);
    done.push_back(best);
    if (can_densify && nnz > limit) {
      Matrix<S> m = Matrix<S>::Zero(static_cast<long>(rows.size()), cols);
      int k = 0;
      for (int i : done) {
        for (const auto& [j, v] : rows[i]) m(k, j) = v;
        ++k;
      }
      for (int cc = c + 1; cc < cols; ++cc)
        for (int i : bucket[cc]) {
          for (const auto& [j, v] : rows[i]) m(k, j) = v;
          ++k;
        }
      Matrix<S> mm = m.topRows(k);
      return detail::rref_dense<S>(std::move(mm), std::move(e.pivot_values));
    }
  }
  // back substitution
  for (int a = static_cast<int>(done.size()) - 1; a >= 0; --a) {
    const int pc = e.pivots[a];
    const SparseVec<S>& pr = rows[done[a]];
    for (int b = 0; b < a; ++b) {
      SparseVec<S>& r = rows[done[b]];
      S f = sparse_get(r, pc);
      if (!is_zero(f)) r = sparse_axpy(r, -f, pr);
    }
  }
  for (int i : done) e.rows.push_back(std::move(rows[i]));
  return e;
}

template <class S>
Echelon<S> row_echelon(const SparseMatrix<S>& m) {
  return row_echelon(m.row_list(), m.cols());
}

template <class S>
Echelon<S> row_echelon(const Matrix<S>& m) {
  std::vector<SparseVec<S>> rows(m.rows());
  for (int i = 0; i < m.rows(); ++i)
    for (int j = 0; j < m.cols(); ++j)
      if (!is_zero(m(i, j))) rows[i].emplace_back(j, m(i, j));
  return row_echelon(std::move(rows), static_cast<int>(m.cols()));
}

template <class S>
int rank(const SparseMatrix<S>& m) {
  return row_echelon(m).rank();
}
template <class S>
int rank(const Matrix<S>& m) {
  return row_echelon(m).rank();
}

// One vector per free column, in increasing column order: v[f] = 1 and v vanishes
// on the other free columns.
template <class S>
std::vector<SparseVec<S>> kernel_sparse(const Echelon<S>& e) {
  std::vector<char> is_pivot(e.cols, 0);
  for (int p : e.pivots) is_pivot[p] = 1;
  std::vector<std::vector<std::pair<int, S>>> per_free(e.cols);
  for (std::size_t r = 0; r < e.rows.size(); ++r)
    for (const auto& [j, v] : e.rows[r])
      if (!is_pivot[j]) per_free[j].emplace_back(e.pivots[r], -v);
  std::vector<SparseVec<S>> ker;
  for (int f = 0; f < e.cols; ++f) {
    if (is_pivot[f]) continue;
    SparseVec<S> v = std::move(per_free[f]);
    v.emplace_back(f, S(1));
    std::sort(v.begin(), v.end(), [](const auto& x, const auto& y) { return x.first < y.first; });
    ker.push_back(std::move(v));
  }
  return ker;
}

template <class S>
std::vector<Vector<S>> kernel_basis(const SparseMatrix<S>& m) {
  std::vector<Vector<S>> out;
  for (auto& v : kernel_sparse(row_echelon(m))) out.push_back(to_dense(v, m.cols()));
  return out;
}

template <class S>
std::vector<Vector<S>> kernel_basis(const Matrix<S>& m) {
  std::vector<Vector<S>> out;
  for (auto& v : kernel_sparse(row_echelon(m))) out.push_back(to_dense(v, static_cast<int>(m.cols())));
  return out;
}

// Coefficients x with sum x_j gens_j = target (free coefficients set to zero).
template <class S>
std::optional<SparseVec<S>> solve_in_span_sparse(const SparseVec<S>& target, const std::vector<SparseVec<S>>& gens) {
  const int m = static_cast<int>(gens.size());
  std::map<int, SparseVec<S>> eq;
  for (int j = 0; j < m; ++j)
    for (const auto& [i, v] : gens[j]) eq[i].emplace_back(j, v);
  for (const auto& [i, v] : target) eq[i].emplace_back(m, v);
  std::vector<SparseVec<S>> rows;
  for (auto& [i, r] : eq) rows.push_back(std::move(r));
  Echelon<S> e = row_echelon(std::move(rows), m + 1);
  SparseVec<S> x;
  for (std::size_t r = 0; r < e.pivots.size(); ++r) {
    if (e.pivots[r] == m) return std::nullopt;
    S v = sparse_get(e.rows[r], m);
    if (!is_zero(v)) x.emplace_back(e.pivots[r], v);
  }
  return x;
}

template <class S>
std::optional<Vector<S>> solve_in_span(const Vector<S>& target, const std::vector<Vector<S>>& gens) {
  std::vector<SparseVec<S>> g;
  for (const auto& v : gens) g.push_back(to_sparse(v));
  auto x = solve_in_span_sparse(to_sparse(target), g);
  if (!x) return std::nullopt;
  return to_dense(*x, static_cast<int>(gens.size()));
}

// Subspace kept as its reduced echelon basis, so equal subspaces compare equal.
template <class S>
class Subspace {
 public:
  Subspace() = default;
  explicit Subspace(int ambient) : n_(ambient) {}
  Subspace(int ambient, std::vector<SparseVec<S>> spanning) : n_(ambient) {
    auto e = row_echelon(std::move(spanning), n_);
    rows_ = std::move(e.rows);
    pivots_ = std::move(e.pivots);
  }
  static Subspace whole(int n) {
    std::vector<SparseVec<S>> v;
    for (int i = 0; i < n; ++i) v.push_back({{i, S(1)}});
    return Subspace(n, std::move(v));
  }

  int ambient() const { return n_; }
  int dim() const { return static_cast<int>(rows_.size()); }
  const std::vector<SparseVec<S>>& basis() const { return rows_; }
  const std::vector<int>& pivots() const { return pivots_; }

  // normal form modulo the subspace: zero exactly on members
  SparseVec<S> reduce(SparseVec<S> v) const {
    for (std::size_t r = 0; r < rows_.size(); ++r) {
      S f = sparse_get(v, pivots_[r]);
      if (!is_zero(f)) v = sparse_axpy(v, -f, rows_[r]);
    }
    return v;
  }
  bool contains(const SparseVec<S>& v) const { return reduce(v).empty(); }
  bool contains(const Subspace& o) const {
    for (const auto& v : o.rows_)
      if (!contains(v)) return false;
    return true;
  }
  Subspace sum(const Subspace& o) const {
    std::vector<SparseVec<S>> v = rows_;
    v.insert(v.end(), o.rows_.begin(), o.rows_.end());
    return Subspace(n_, std::move(v));
  }
  friend bool operator==(const Subspace& a, const Subspace& b) { return a.n_ == b.n_ && a.rows_ == b.rows_; }

 private:
  int n_ = 0;
  std::vector<SparseVec<S>> rows_;
  std::vector<int> pivots_;
};

}  // namespace filiform

namespace filiform {

// Inverse through the echelon form of [m | I]; nullopt when singular.
template <class S>
std::optional<Matrix<S>> inverse(const Matrix<S>& m) {
  const int n = static_cast<int>(m.rows());
  if (m.cols() != n) return std::nullopt;
  std::vector<SparseVec<S>> rows(n);
  for (int i = 0; i < n; ++i) {
    for (int j = 0; j < n; ++j)
      if (!is_zero(m(i, j))) rows[i].emplace_back(j, m(i, j));
    rows[i].emplace_back(n + i, S(1));
  }
  Echelon<S> e = row_echelon(std::move(rows), 2 * n);
  if (e.rank() < n || e.pivots[n - 1] != n - 1) return std::nullopt;
  Matrix<S> inv = Matrix<S>::Zero(n, n);
  for (int r = 0; r < n; ++r)
    for (const auto& [j, v] : e.rows[r])
      if (j >= n) inv(r, j - n) = v;
  return inv;
}

}  // namespace filiform
