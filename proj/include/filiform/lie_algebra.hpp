#pragma once

#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "filiform/errors.hpp"
#include "filiform/linalg.hpp"

namespace filiform {

// Structure constants of a finite-dimensional Lie algebra. The paper-facing calls
// (add, c) use 1-based basis indices; coordinate vectors are 0-based, so e_i sits
// at position i-1.
template <class S>
class LieAlgebra {
 public:
  LieAlgebra() = default;
  explicit LieAlgebra(int n) : n_(n), tab_(static_cast<std::size_t>(n) * n) {}

  int dim() const { return n_; }

  void add(int i, int j, int k, const S& c) {
    check_index(i);
    check_index(j);
    check_index(k);
    if (i == j) {
      if (!is_zero(c)) throw Error(ErrorCode::InvalidInput, "bracket [e_i,e_i] must vanish");
      return;
    }
    S v = c;
    if (i > j) {
      std::swap(i, j);
      v = -v;
    }
    auto& slot = tab_[idx(i - 1, j - 1)];
    slot = sparse_axpy(slot, v, SparseVec<S>{{k - 1, S(1)}});
  }
  // [e_i, e_j] coefficient along e_k
  S c(int i, int j, int k) const {
    if (i == j) return S(0);
    if (i < j) return sparse_get(tab_[idx(i - 1, j - 1)], k - 1);
    return -sparse_get(tab_[idx(j - 1, i - 1)], k - 1);
  }
  // 0-based unsigned slot for a < b
  const SparseVec<S>& slot(int a, int b) const { return tab_[idx(a, b)]; }
  void set_slot(int a, int b, SparseVec<S> v) { tab_[idx(a, b)] = std::move(v); }
  SparseVec<S> bracket_basis(int a, int b) const {
    if (a == b) return {};
    if (a < b) return tab_[idx(a, b)];
    return sparse_scale(tab_[idx(b, a)], S(-1));
  }
  SparseVec<S> bracket(const SparseVec<S>& x, const SparseVec<S>& y) const {
    std::vector<S> acc(n_);
    std::vector<char> used(n_, 0);
    for (const auto& [a, xa] : x)
      for (const auto& [b, yb] : y) {
        if (a == b) continue;
        const SparseVec<S>& s = a < b ? tab_[idx(a, b)] : tab_[idx(b, a)];
        if (s.empty()) continue;
        S f = a < b ? xa * yb : -(xa * yb);
        for (const auto& [k, v] : s) {
          acc[k] += f * v;
          used[k] = 1;
        }
      }
    SparseVec<S> r;
    for (int k = 0; k < n_; ++k)
      if (used[k] && !is_zero(acc[k])) r.emplace_back(k, acc[k]);
    return r;
  }
  Vector<S> bracket(const Vector<S>& x, const Vector<S>& y) const {
    return to_dense(bracket(to_sparse(x), to_sparse(y)), n_);
  }

  // nonzero brackets (a < b, 0-based) in lexicographic order
  std::vector<std::pair<std::pair<int, int>, SparseVec<S>>> table() const {
    std::vector<std::pair<std::pair<int, int>, SparseVec<S>>> t;
    for (int a = 0; a < n_; ++a)
      for (int b = a + 1; b < n_; ++b)
        if (!tab_[idx(a, b)].empty()) t.push_back({{a, b}, tab_[idx(a, b)]});
    return t;
  }

  const std::optional<std::vector<int>>& weights() const { return weights_; }
  void set_weights(std::optional<std::vector<int>> w) {
    if (w && static_cast<int>(w->size()) != n_) throw Error(ErrorCode::InvalidInput, "weight list length differs from dimension");
    weights_ = std::move(w);
  }
  const std::optional<std::vector<std::string>>& labels() const { return labels_; }
  void set_labels(std::optional<std::vector<std::string>> l) { labels_ = std::move(l); }

  template <class T, class F>
  LieAlgebra<T> map_scalars(F f) const {
    LieAlgebra<T> out(n_);
    for (int a = 0; a < n_; ++a)
      for (int b = a + 1; b < n_; ++b) {
        SparseVec<T> s;
        for (const auto& [k, v] : tab_[idx(a, b)]) {
          T w = f(v);
          if (!is_zero(w)) s.emplace_back(k, w);
        }
        out.set_slot(a, b, std::move(s));
      }
    out.set_weights(weights_);
    out.set_labels(labels_);
    return out;
  }

  friend bool operator==(const LieAlgebra& x, const LieAlgebra& y) { return x.n_ == y.n_ && x.tab_ == y.tab_; }
  friend bool operator!=(const LieAlgebra& x, const LieAlgebra& y) { return !(x == y); }

 private:
  std::size_t idx(int a, int b) const { return static_cast<std::size_t>(a) * n_ + b; }
  void check_index(int i) const {
    if (i < 1 || i > n_) throw Error(ErrorCode::InvalidInput, "basis index " + std::to_string(i) + " out of range");
  }
  int n_ = 0;
  std::vector<SparseVec<S>> tab_;
  std::optional<std::vector<int>> weights_;
  std::optional<std::vector<std::string>> labels_;
};

template <class S>
SparseVec<S> unit(int a) {
  return {{a, S(1)}};
}

template <class S>
struct JacobiViolation {
  int i, j, k;  // 1-based
  SparseVec<S> defect;
};

template <class S>
std::vector<JacobiViolation<S>> jacobi_check(const LieAlgebra<S>& g) {
  std::vector<JacobiViolation<S>> bad;
  const int n = g.dim();
  for (int a = 0; a < n; ++a)
    for (int b = a + 1; b < n; ++b)
      for (int c = b + 1; c < n; ++c) {
        auto t1 = g.bracket(unit<S>(a), g.bracket_basis(b, c));
        auto t2 = g.bracket(unit<S>(b), g.bracket_basis(c, a));
        auto t3 = g.bracket(unit<S>(c), g.bracket_basis(a, b));
        auto s = sparse_axpy(sparse_axpy(t1, S(1), t2), S(1), t3);
        if (!s.empty()) bad.push_back({a + 1, b + 1, c + 1, std::move(s)});
      }
  return bad;
}

template <class S>
bool weights_compatible(const LieAlgebra<S>& g, const std::vector<int>& w) {
  if (static_cast<int>(w.size()) != g.dim()) return false;
  for (const auto& [ab, v] : g.table())
    for (const auto& [k, c] : v)
      if (w[k] != w[ab.first] + w[ab.second]) return false;
  return true;
}

// [g, V] for a subspace V
template <class S>
Subspace<S> bracket_with_all(const LieAlgebra<S>& g, const Subspace<S>& v) {
  std::vector<SparseVec<S>> span;
  for (int a = 0; a < g.dim(); ++a)
    for (const auto& x : v.basis()) {
      auto y = g.bracket(unit<S>(a), x);
      if (!y.empty()) span.push_back(std::move(y));
    }
  return Subspace<S>(g.dim(), std::move(span));
}

// C^1 = g, C^k = [g, C^{k-1}], ending with the first repeated (stationary) term.
template <class S>
std::vector<Subspace<S>> central_series(const LieAlgebra<S>& g) {
  std::vector<Subspace<S>> cs{Subspace<S>::whole(g.dim())};
  while (true) {
    Subspace<S> next = bracket_with_all(g, cs.back());
    bool stationary = next.dim() == cs.back().dim();
    cs.push_back(std::move(next));
    if (stationary || cs.back().dim() == 0) break;
  }
  return cs;
}

template <class S>
std::vector<int> central_series_dims(const LieAlgebra<S>& g) {
  std::vector<int> d;
  for (const auto& c : central_series(g)) d.push_back(c.dim());
  return d;
}

// Last k with C^k != 0; nullopt when the series stalls above zero.
template <class S>
std::optional<int> nil_index(const LieAlgebra<S>& g) {
  auto cs = central_series(g);
  if (cs.back().dim() != 0) return std::nullopt;
  int s = 0;
  for (std::size_t k = 0; k < cs.size(); ++k)
    if (cs[k].dim() > 0) s = static_cast<int>(k) + 1;
  return s;
}

template <class S>
bool is_nilpotent(const LieAlgebra<S>& g) {
  return nil_index(g).has_value();
}

template <class S>
bool is_filiform(const LieAlgebra<S>& g) {
  if (g.dim() < 3) return false;
  auto s = nil_index(g);
  return s && *s == g.dim() - 1;
}

template <class S>
Subspace<S> center(const LieAlgebra<S>& g) {
  const int n = g.dim();
  // x central iff sum_a x_a [e_a, e_b] = 0 for all b
  std::vector<SparseVec<S>> rows;
  for (int b = 0; b < n; ++b) {
    std::map<int, SparseVec<S>> eq;
    for (int a = 0; a < n; ++a)
      for (const auto& [k, v] : g.bracket_basis(a, b)) eq[k].emplace_back(a, v);
    for (auto& [k, r] : eq) rows.push_back(std::move(r));
  }
  auto e = row_echelon(std::move(rows), n);
  return Subspace<S>(n, kernel_sparse(e));
}

template <class S>
LieAlgebra<S> direct_sum(const LieAlgebra<S>& x, const LieAlgebra<S>& y) {
  const int n = x.dim(), m = y.dim();
  LieAlgebra<S> s(n + m);
  for (const auto& [ab, v] : x.table()) s.set_slot(ab.first, ab.second, v);
  for (const auto& [ab, v] : y.table()) {
    SparseVec<S> w;
    for (const auto& [k, c] : v) w.emplace_back(k + n, c);
    s.set_slot(ab.first + n, ab.second + n, std::move(w));
  }
  if (x.weights() && y.weights()) {
    std::vector<int> w = *x.weights();
    w.insert(w.end(), y.weights()->begin(), y.weights()->end());
    s.set_weights(w);
  }
  return s;
}

// Structure constants in the basis given by the columns of p (old coordinates).
template <class S>
LieAlgebra<S> change_basis(const LieAlgebra<S>& g, const Matrix<S>& p) {
  auto inv = inverse(p);
  if (!inv) throw Error(ErrorCode::InvalidInput, "base change is singular");
  const int n = g.dim();
  std::vector<SparseVec<S>> cols(n);
  for (int j = 0; j < n; ++j) cols[j] = to_sparse<S>(p.col(j));
  LieAlgebra<S> out(n);
  for (int a = 0; a < n; ++a)
    for (int b = a + 1; b < n; ++b) {
      auto v = g.bracket(cols[a], cols[b]);
      if (v.empty()) continue;
      out.set_slot(a, b, to_sparse<S>(*inv * to_dense(v, n)));
    }
  return out;
}

template <class S>
class GradedLieAlgebra {
 public:
  GradedLieAlgebra() = default;
  GradedLieAlgebra(LieAlgebra<S> a, std::vector<int> w) : a_(std::move(a)) {
    if (!weights_compatible(a_, w)) throw Error(ErrorCode::InvalidInput, "weights are not compatible with the bracket");
    for (int x : w)
      if (x <= 0) throw Error(ErrorCode::InvalidInput, "weights must be positive");
    a_.set_weights(std::move(w));
  }
  explicit GradedLieAlgebra(LieAlgebra<S> a) : GradedLieAlgebra(a, require(a)) {}

  const LieAlgebra<S>& algebra() const { return a_; }
  operator const LieAlgebra<S>&() const { return a_; }
  int dim() const { return a_.dim(); }
  const std::vector<int>& weights() const { return *a_.weights(); }
  int weight(int i) const { return weights()[i - 1]; }  // 1-based
  // weights are exactly 1..n in basis order
  bool standard_weights() const {
    for (int i = 0; i < dim(); ++i)
      if (weights()[i] != i + 1) return false;
    return true;
  }

 private:
  static std::vector<int> require(const LieAlgebra<S>& a) {
    if (!a.weights()) throw Error(ErrorCode::WeightsMissing, "algebra carries no weights");
    return *a.weights();
  }
  LieAlgebra<S> a_;
};

template <class S>
struct Filtration {
  LieAlgebra<S> algebra;
  std::vector<Subspace<S>> levels;  // F^1 ⊇ F^2 ⊇ ...

  bool compatible() const {
    for (std::size_t k = 0; k < levels.size(); ++k)
      for (std::size_t l = 0; l < levels.size(); ++l) {
        std::size_t t = k + l + 1;  // F^{k+1} x F^{l+1} into F^{k+l+2}
        for (const auto& x : levels[k].basis())
          for (const auto& y : levels[l].basis()) {
            auto z = algebra.bracket(x, y);
            if (z.empty()) continue;
            if (t >= levels.size()) return false;
            if (!levels[t].contains(z)) return false;
          }
      }
    return true;
  }
};

}  // namespace filiform
