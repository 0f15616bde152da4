#pragma once

#include <iostream>
#include <optional>
#include <vector>

#include "filiform/lie_algebra.hpp"

namespace filiform {

// Canonical filtration F^k = C^k.
template <class S>
Filtration<S> filtration_C(const LieAlgebra<S>& g) {
  auto cs = central_series(g);
  if (cs.back().dim() != 0) throw Error(ErrorCode::NotNilpotent, "central series does not reach zero");
  cs.pop_back();
  return {g, std::move(cs)};
}

// Adapted-shape test for structure constants already written in the candidate
// basis: [e1,e_i] = e_{i+1}, [e_i,e_j] in span(e_{i+j},...,e_n) for i+j <= n and
// [e_i,e_{n+1-i}] = (-1)^i alpha e_n. Returns alpha.
template <class S>
std::optional<S> adapted_alpha(const LieAlgebra<S>& h) {
  const int n = h.dim();
  if (n < 3) return std::nullopt;
  for (int i = 2; i < n; ++i)
    if (h.slot(0, i - 1) != SparseVec<S>{{i, S(1)}}) return std::nullopt;
  if (!h.slot(0, n - 1).empty()) return std::nullopt;
  S alpha(0);
  if (n >= 4) alpha = h.c(2, n - 1, n);
  for (int i = 2; i <= n; ++i)
    for (int j = i + 1; j <= n; ++j) {
      const auto& s = h.slot(i - 1, j - 1);
      if (i + j <= n) {
        for (const auto& [k, c] : s)
          if (k + 1 < i + j) return std::nullopt;
      } else if (i + j == n + 1) {
        SparseVec<S> want;
        S v = (i % 2 == 0) ? alpha : S(-alpha);
        if (!is_zero(v)) want.emplace_back(n - 1, v);
        if (s != want) return std::nullopt;
      } else if (!s.empty()) {
        return std::nullopt;
      }
    }
  return alpha;
}

template <class S>
struct AdaptedBasis {
  Matrix<S> change;       // columns: e_1..e_n of the adapted basis in input coordinates
  LieAlgebra<S> algebra;  // structure constants in the adapted basis
  S alpha;
  int height = 1;  // coefficient height reached by the e_1 search
};

namespace detail {

// candidates for e_1: basis vectors, then e_a + c e_b with 0 < |c| <= height
template <class S, class F>
bool for_each_candidate(int n, int height, F&& f) {
  if (height == 1)
    for (int a = 0; a < n; ++a)
      if (f(unit<S>(a))) return true;
  for (int a = 0; a < n; ++a)
    for (int b = a + 1; b < n; ++b)
      for (int c = 1; c <= height; ++c)
        for (int s : {1, -1}) {
          if (height > 1 && c < height) continue;
          if (f(SparseVec<S>{{a, S(1)}, {b, S(s * c)}})) return true;
        }
  return false;
}

template <class S>
int ad_rank(const LieAlgebra<S>& g, const SparseVec<S>& v) {
  std::vector<SparseVec<S>> cols;
  for (int a = 0; a < g.dim(); ++a) cols.push_back(g.bracket(v, unit<S>(a)));
  return Subspace<S>(g.dim(), std::move(cols)).dim();
}

}  // namespace detail

template <class S>
AdaptedBasis<S> adapted_basis(const LieAlgebra<S>& g, int max_height = 8) {
  if (!is_filiform(g)) throw Error(ErrorCode::NotFiliform, "adapted basis needs a filiform algebra");
  const int n = g.dim();
  auto cs = central_series(g);
  const Subspace<S>& c2 = cs[1];
  // Y = {x : [x, C^2] in C^4}, a hyperplane over C^2; for n = 3 any line works
  Subspace<S> y;
  if (n >= 4) {
    const Subspace<S>& c4 = cs[3];
    std::vector<SparseVec<S>> rows;
    for (const auto& c : c2.basis()) {
      std::map<int, SparseVec<S>> eq;
      for (int a = 0; a < n; ++a)
        for (const auto& [k, v] : c4.reduce(g.bracket(unit<S>(a), c))) eq[k].emplace_back(a, v);
      for (auto& [k, r] : eq) rows.push_back(std::move(r));
    }
    y = Subspace<S>(n, kernel_sparse(row_echelon(std::move(rows), n)));
  } else {
    for (int a = 0; a < n; ++a)
      if (!c2.contains(unit<S>(a))) {
        y = c2.sum(Subspace<S>(n, {unit<S>(a)}));
        break;
      }
  }
  if (y.dim() != n - 1) throw Error(ErrorCode::InvariantViolation, "centralizer line of C^2 is not a hyperplane");
  SparseVec<S> e2;
  for (const auto& b : y.basis())
    if (!c2.contains(b)) {
      e2 = b;
      break;
    }
  for (int h = 1; h <= max_height; ++h) {
    if (h > 1) std::clog << "adapted_basis: escalating coefficient height to " << h << "\n";
    std::optional<AdaptedBasis<S>> out;
    detail::for_each_candidate<S>(n, h, [&](const SparseVec<S>& v) {
      if (y.contains(v)) return false;
      if (detail::ad_rank(g, v) != n - 2) return false;
      Matrix<S> p(n, n);
      p.col(0) = to_dense(v, n);
      SparseVec<S> cur = e2;
      for (int i = 1; i < n; ++i) {
        p.col(i) = to_dense(cur, n);
        cur = g.bracket(v, cur);
      }
      if (!inverse(p)) return false;
      auto hh = change_basis(g, p);
      auto alpha = adapted_alpha(hh);
      if (!alpha) return false;
      out = AdaptedBasis<S>{std::move(p), std::move(hh), *alpha, h};
      return true;
    });
    if (out) return *out;
  }
  throw Error(ErrorCode::InvariantViolation, "no adapted basis found within the coefficient height bound");
}

// L^p = span(e_p, ..., e_n) in input coordinates.
template <class S>
Filtration<S> filtration_L(const LieAlgebra<S>& g, const Matrix<S>& change) {
  const int n = g.dim();
  Filtration<S> f{g, {}};
  for (int p = 0; p < n; ++p) {
    std::vector<SparseVec<S>> v;
    for (int i = p; i < n; ++i) v.push_back(to_sparse<S>(change.col(i)));
    f.levels.emplace_back(n, std::move(v));
  }
  return f;
}

// Associated graded algebra of the central series, on chosen complements of
// C^{k+1} in C^k, with weight k.
template <class S>
GradedLieAlgebra<S> gr_C(const LieAlgebra<S>& g) {
  auto cs = central_series(g);
  if (cs.back().dim() != 0) throw Error(ErrorCode::NotNilpotent, "gr_C needs a nilpotent algebra");
  const int n = g.dim();
  if (n == 0) return GradedLieAlgebra<S>(LieAlgebra<S>(0), {});
  std::vector<SparseVec<S>> cols;
  std::vector<int> w;
  for (std::size_t k = 0; k + 1 < cs.size(); ++k) {
    Subspace<S> acc = cs[k + 1];
    for (const auto& b : cs[k].basis()) {
      auto r = acc.reduce(b);
      if (r.empty()) continue;
      acc = acc.sum(Subspace<S>(n, {r}));
      cols.push_back(r);
      w.push_back(static_cast<int>(k) + 1);
    }
  }
  Matrix<S> p(n, n);
  for (int i = 0; i < n; ++i) p.col(i) = to_dense(cols[i], n);
  auto h = change_basis(g, p);
  LieAlgebra<S> out(n);
  for (const auto& [ab, v] : h.table()) {
    SparseVec<S> lead;
    for (const auto& [k, c] : v)
      if (w[k] == w[ab.first] + w[ab.second]) lead.emplace_back(k, c);
    out.set_slot(ab.first, ab.second, std::move(lead));
  }
  return GradedLieAlgebra<S>(std::move(out), std::move(w));
}

// Leading terms c_{ij}^0 of the adapted table; weight(e_i) = i.
template <class S>
GradedLieAlgebra<S> gr_L(const LieAlgebra<S>& g, const Matrix<S>& change) {
  auto h = change_basis(g, change);
  auto alpha = adapted_alpha(h);
  if (!alpha) throw Error(ErrorCode::InvalidInput, "base change is not adapted");
  if (!is_zero(*alpha)) throw Error(ErrorCode::AlphaNonzero, "filtration L is undefined when the anti-diagonal constant is nonzero");
  const int n = g.dim();
  LieAlgebra<S> out(n);
  for (const auto& [ab, v] : h.table()) {
    SparseVec<S> lead;
    for (const auto& [k, c] : v)
      if (k + 1 == ab.first + ab.second + 2) lead.emplace_back(k, c);
    out.set_slot(ab.first, ab.second, std::move(lead));
  }
  std::vector<int> w(n);
  for (int i = 0; i < n; ++i) w[i] = i + 1;
  return GradedLieAlgebra<S>(std::move(out), std::move(w));
}

template <class S>
GradedLieAlgebra<S> gr_L(const LieAlgebra<S>& g) {
  return gr_L(g, adapted_basis(g).change);
}

// m0(n) is the filiform algebra whose adapted table has no brackets among e_2..e_n
template <class S>
bool isomorphic_to_m0(const LieAlgebra<S>& g) {
  if (!is_filiform(g)) return false;
  auto a = adapted_basis(g);
  for (const auto& [ab, v] : a.algebra.table())
    if (ab.first != 0) return false;
  return true;
}

}  // namespace filiform
