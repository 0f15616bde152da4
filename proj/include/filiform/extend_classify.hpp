#pragma once

#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "filiform/cochain.hpp"
#include "filiform/polynomial.hpp"

namespace filiform {

template <class S>
struct ExtensionCocycle {
  LieAlgebra<S> base;
  Form<S> cocycle;
};

// [e_i, e_j] gains c(e_i, e_j) e_{n+1}; e_{n+1} is central.
template <class S>
LieAlgebra<S> central_extension(const LieAlgebra<S>& g, const Form<S>& c) {
  if (!c.is_zero() && c.degree() != 2) throw Error(ErrorCode::InvalidInput, "extension cocycle must be a 2-form");
  if (!is_cocycle(g, c)) throw Error(ErrorCode::NotCocycle, "extension needs a closed 2-form");
  const int n = g.dim();
  LieAlgebra<S> h(n + 1);
  for (const auto& [ab, v] : g.table()) h.set_slot(ab.first, ab.second, v);
  for (const auto& [m, v] : c.terms()) {
    auto ij = m.indices();
    h.add(ij[0], ij[1], n + 1, v);
  }
  if (g.weights()) {
    auto w = *g.weights();
    auto lam = c.homogeneous_weight(g.weights());
    if (c.is_zero() || lam) {
      w.push_back(c.is_zero() ? 1 : *lam);
      if (w.back() > 0) h.set_weights(w);
    }
  }
  return h;
}

template <class S>
LieAlgebra<S> central_extension(const ExtensionCocycle<S>& x) {
  return central_extension(x.base, x.cocycle);
}

// Inverse of central_extension for a central last basis vector.
template <class S>
ExtensionCocycle<S> quotient_by_top(const LieAlgebra<S>& g) {
  const int n = g.dim();
  for (int a = 0; a + 1 < n; ++a)
    if (!g.slot(a, n - 1).empty()) throw Error(ErrorCode::InvalidInput, "last basis vector is not central");
  ExtensionCocycle<S> x{LieAlgebra<S>(n - 1), Form<S>(2)};
  for (const auto& [ab, v] : g.table()) {
    SparseVec<S> low;
    for (const auto& [k, c] : v) {
      if (k == n - 1)
        x.cocycle.add(MultiIndex{ab.first + 1, ab.second + 1}, c);
      else
        low.emplace_back(k, c);
    }
    x.base.set_slot(ab.first, ab.second, std::move(low));
  }
  if (g.weights()) x.base.set_weights(std::vector<int>(g.weights()->begin(), g.weights()->end() - 1));
  return x;
}

// f = c(., xi) as a coordinate vector, xi the center generator
template <class S>
SparseVec<S> contract_center(const LieAlgebra<S>& g, const Form<S>& c) {
  auto z = center(g);
  if (z.dim() != 1) throw Error(ErrorCode::CenterNotOneDimensional, "center has dimension " + std::to_string(z.dim()));
  const auto& xi = z.basis()[0];
  std::map<int, S> f;
  for (const auto& [m, v] : c.terms()) {
    auto ij = m.indices();
    int i = ij[0] - 1, j = ij[1] - 1;
    // c(e_i, xi) picks xi_j, c(e_j, xi) picks -xi_i
    f[i] += v * sparse_get(xi, j);
    f[j] -= v * sparse_get(xi, i);
  }
  SparseVec<S> out;
  for (auto& [i, v] : f)
    if (!is_zero(v)) out.emplace_back(i, v);
  return out;
}

template <class S>
bool is_filiform_extension(const LieAlgebra<S>& g, const Form<S>& c) {
  return !contract_center(g, c).empty();
}

template <class S>
bool is_filiform_extension(const ExtensionCocycle<S>& x) {
  return is_filiform_extension(x.base, x.cocycle);
}

// Rank of c -> c(., xi) on the cocycles of a block: the number of independent
// directions in H^2 that give filiform extensions (0 or 1 on a weight block of an
// N-graded filiform algebra).
template <class S>
int filiform_extension_rank(const LieAlgebra<S>& g, const CohomologyBlock<S>& blk) {
  std::vector<SparseVec<S>> img;
  for (const auto& z : blk.cocycles) img.push_back(contract_center(g, blk.basis.form(z, blk.degree)));
  return Subspace<S>(g.dim(), std::move(img)).dim();
}

// N-graded filiform in the basis order: weights 1..n (given or implied) and
// [e_1, e_i] a nonzero multiple of e_{i+1}.
template <class S>
bool is_graded_filiform(const LieAlgebra<S>& g) {
  const int n = g.dim();
  if (n < 1) return false;
  std::vector<int> w(n);
  for (int i = 0; i < n; ++i) w[i] = i + 1;
  if (g.weights() && *g.weights() != w) return false;
  if (!weights_compatible(g, w)) return false;
  for (int i = 1; i + 1 < n; ++i) {
    const auto& s = g.slot(0, i);
    if (s.size() != 1 || s[0].first != i + 1) return false;
  }
  return true;
}

// Bracket constants [e_i, e_j] = c e_{i+j} with 2 <= i < j, after rescaling the
// chain to [e_1, e_i] = e_{i+1} and dividing by the first nonzero one. Two N-graded
// filiform algebras are graded isomorphic iff these agree.
template <class S>
struct GradedNormalForm {
  int dim = 0;
  std::vector<std::pair<std::pair<int, int>, S>> constants;  // 1-based (i, j), value
  friend bool operator==(const GradedNormalForm& a, const GradedNormalForm& b) {
    return a.dim == b.dim && a.constants == b.constants;
  }
};

// raw chain-normalized constants, before the scaling step
template <class S>
std::vector<std::pair<std::pair<int, int>, S>> chain_normalized_constants(const LieAlgebra<S>& g) {
  if (!is_graded_filiform(g)) throw Error(ErrorCode::NotGradedFiliform, "expected an N-graded filiform algebra with weights 1..n");
  const int n = g.dim();
  std::vector<S> mu(n + 1, S(1));  // f_i = mu_i e_i
  for (int i = 2; i < n; ++i) mu[i + 1] = mu[i] * g.c(1, i, i + 1);
  std::vector<std::pair<std::pair<int, int>, S>> out;
  for (int i = 2; i <= n; ++i)
    for (int j = i + 1; i + j <= n; ++j) {
      S c = g.c(i, j, i + j);
      if (is_zero(c)) continue;
      out.push_back({{i, j}, mu[i] * mu[j] / mu[i + j] * c});
    }
  return out;
}

template <class S>
GradedNormalForm<S> graded_normal_form(const LieAlgebra<S>& g) {
  GradedNormalForm<S> nf{g.dim(), chain_normalized_constants(g)};
  if (!nf.constants.empty()) {
    S f = S(1) / nf.constants.front().second;
    for (auto& [ij, v] : nf.constants) v = v * f;
  }
  return nf;
}

template <class S>
bool graded_isomorphic(const LieAlgebra<S>& a, const LieAlgebra<S>& b) {
  return graded_normal_form(a) == graded_normal_form(b);
}

// Specialize a family over Q(b) at b = t; nullopt at a pole of some constant.
inline std::optional<LieAlgebra<Q>> specialize(const LieAlgebra<QX>& f, const Q& t) {
  LieAlgebra<Q> out(f.dim());
  for (const auto& [ab, v] : f.table()) {
    SparseVec<Q> s;
    for (const auto& [k, c] : v) {
      auto x = c.eval(t);
      if (!x) return std::nullopt;
      if (!x->is_zero()) s.emplace_back(k, *x);
    }
    out.set_slot(ab.first, ab.second, std::move(s));
  }
  out.set_weights(f.weights());
  out.set_labels(f.labels());
  return out;
}

inline LieAlgebra<QX> constant_family(const LieAlgebra<Q>& g) {
  return g.map_scalars<QX>([](const Q& c) { return QX(c); });
}

// One class of N-graded filiform algebras of a fixed dimension.
struct GradedIsoClass {
  std::string tag;   // m0, m2, V, m01, m02, m03, g or unnamed
  std::string name;  // e.g. "m0(9)", "g9(alpha)", "g10(-2)"
  bool family = false;
  std::optional<Q> parameter;           // alpha for a point named inside a g family
  LieAlgebra<Q> representative;         // points
  std::optional<LieAlgebra<QX>> rep_b;  // raw family over Q(b) from the induction
  std::optional<QX> alpha_of_b;         // link to the printed family parameter
  std::vector<Q> excluded_alpha;        // family members not in this class
  std::vector<std::string> excluded_reason;
  std::string origin;                   // induction path
};

// Named candidates of dimension n (without families): tag, name, algebra.
std::vector<std::tuple<std::string, std::string, LieAlgebra<Q>>> named_graded_candidates(int n);

// alpha with g ≅ g_{n,alpha} (guards respected), if any.
std::optional<Q> find_family_parameter(const LieAlgebra<Q>& g);

// Duplicate-free list of N-graded filiform algebras of dimension n.
std::vector<GradedIsoClass> enumerate_graded_filiform(int n);

// Classes for every dimension 3..n_max from one run of the induction.
std::vector<std::vector<GradedIsoClass>> enumerate_graded_filiform_upto(int n_max);

}  // namespace filiform
