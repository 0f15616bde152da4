#pragma once

#include <bit>
#include <cstdint>
#include <functional>
#include <initializer_list>
#include <map>
#include <optional>
#include <unordered_map>
#include <vector>

#include "filiform/lie_algebra.hpp"

namespace filiform {

// Strictly increasing index tuple, stored as a bit set (bit i-1 for index i).
class MultiIndex {
 public:
  MultiIndex() = default;
  explicit MultiIndex(std::uint32_t mask) : m_(mask) {}
  MultiIndex(std::initializer_list<int> idx) : MultiIndex(from(std::vector<int>(idx))) {}
  static MultiIndex from(const std::vector<int>& idx) {
    std::uint32_t m = 0;
    int last = 0;
    for (int i : idx) {
      if (i <= last || i > 32) throw Error(ErrorCode::InvalidInput, "multi-index must be strictly increasing in 1..32");
      m |= 1u << (i - 1);
      last = i;
    }
    return MultiIndex(m);
  }

  std::uint32_t mask() const { return m_; }
  int degree() const { return std::popcount(m_); }
  bool contains(int i) const { return (m_ >> (i - 1)) & 1u; }
  std::vector<int> indices() const {
    std::vector<int> v;
    for (std::uint32_t m = m_; m; m &= m - 1) v.push_back(std::countr_zero(m) + 1);
    return v;
  }
  int weight(const std::optional<std::vector<int>>& w) const {
    int s = 0;
    for (std::uint32_t m = m_; m; m &= m - 1) {
      int a = std::countr_zero(m);
      s += w ? (*w)[a] : a + 1;
    }
    return s;
  }
  // lexicographic order of the index tuples
  friend bool operator<(const MultiIndex& a, const MultiIndex& b) {
    std::uint32_t x = a.m_ ^ b.m_;
    if (!x) return false;
    std::uint32_t low = x & (~x + 1);
    if (a.degree() == b.degree()) return (a.m_ & low) != 0;
    // different lengths: compare as sequences, a prefix sorts first
    auto ia = a.indices(), ib = b.indices();
    return ia < ib;
  }
  friend bool operator==(const MultiIndex& a, const MultiIndex& b) { return a.m_ == b.m_; }
  friend bool operator!=(const MultiIndex& a, const MultiIndex& b) { return a.m_ != b.m_; }

 private:
  std::uint32_t m_ = 0;
};

// sign of e^A ∧ e^B relative to e^{A∪B}; 0 when they overlap
inline int wedge_sign(std::uint32_t a, std::uint32_t b) {
  if (a & b) return 0;
  int inv = 0;
  for (std::uint32_t m = b; m; m &= m - 1) {
    int y = std::countr_zero(m);
    inv += std::popcount(a >> (y + 1));
  }
  return (inv & 1) ? -1 : 1;
}

// Sorting parity of an arbitrary index list; 0 on repeats.
inline int sort_sign(std::vector<int> idx) {
  int s = 1;
  for (std::size_t i = 0; i < idx.size(); ++i)
    for (std::size_t j = i + 1; j < idx.size(); ++j) {
      if (idx[i] == idx[j]) return 0;
      if (idx[i] > idx[j]) s = -s;
    }
  return s;
}

template <class S>
class Form {
 public:
  using Terms = std::map<MultiIndex, S>;
  explicit Form(int degree = 0) : p_(degree) {}
  Form(int degree, std::initializer_list<std::pair<MultiIndex, S>> terms) : p_(degree) {
    for (const auto& [m, c] : terms) add(m, c);
  }
  // c * e^{i1} ∧ ... ∧ e^{ip} for any index order
  static Form monomial(const std::vector<int>& idx, const S& c = S(1)) {
    Form f(static_cast<int>(idx.size()));
    int s = sort_sign(idx);
    if (s == 0) return f;
    std::vector<int> sorted = idx;
    std::sort(sorted.begin(), sorted.end());
    f.add(MultiIndex::from(sorted), s > 0 ? c : -c);
    return f;
  }

  int degree() const { return p_; }
  const Terms& terms() const { return t_; }
  bool is_zero() const { return t_.empty(); }
  std::size_t size() const { return t_.size(); }

  void add(const MultiIndex& m, const S& c) {
    if (m.degree() != p_) throw Error(ErrorCode::InvalidInput, "monomial degree differs from form degree");
    if (filiform::is_zero(c)) return;
    auto it = t_.find(m);
    if (it == t_.end()) {
      t_.emplace(m, c);
      return;
    }
    it->second += c;
    if (filiform::is_zero(it->second)) t_.erase(it);
  }
  S coeff(const MultiIndex& m) const {
    auto it = t_.find(m);
    return it == t_.end() ? S(0) : it->second;
  }

  Form& operator+=(const Form& o) {
    check(o);
    for (const auto& [m, c] : o.t_) add(m, c);
    return *this;
  }
  Form& operator-=(const Form& o) {
    check(o);
    for (const auto& [m, c] : o.t_) add(m, -c);
    return *this;
  }
  friend Form operator+(Form a, const Form& b) { return a += b; }
  friend Form operator-(Form a, const Form& b) { return a -= b; }
  friend Form operator*(const S& s, const Form& a) {
    Form r(a.p_);
    if (filiform::is_zero(s)) return r;
    for (const auto& [m, c] : a.t_) r.t_.emplace(m, s * c);
    return r;
  }
  Form operator-() const { return S(-1) * *this; }
  friend bool operator==(const Form& a, const Form& b) { return a.p_ == b.p_ && a.t_ == b.t_; }
  friend bool operator!=(const Form& a, const Form& b) { return !(a == b); }

  // homogeneous in the given weights (default weight(e^i) = i)
  std::optional<int> homogeneous_weight(const std::optional<std::vector<int>>& w) const {
    std::optional<int> r;
    for (const auto& [m, c] : t_) {
      int x = m.weight(w);
      if (r && *r != x) return std::nullopt;
      r = x;
    }
    return r;
  }

 private:
  void check(const Form& o) const {
    if (o.p_ != p_ && !o.t_.empty() && !t_.empty()) throw Error(ErrorCode::InvalidInput, "adding forms of different degree");
  }
  int p_;
  Terms t_;
};

template <class S>
Form<S> wedge(const Form<S>& a, const Form<S>& b) {
  Form<S> r(a.degree() + b.degree());
  for (const auto& [ma, ca] : a.terms())
    for (const auto& [mb, cb] : b.terms()) {
      int s = wedge_sign(ma.mask(), mb.mask());
      if (s == 0) continue;
      S v = ca * cb;
      r.add(MultiIndex(ma.mask() | mb.mask()), s > 0 ? v : -v);
    }
  return r;
}

// Monomials of degree p on n generators, optionally restricted to one weight; sorted lexicographically.
inline std::vector<MultiIndex> monomials(int n, int p, const std::optional<std::vector<int>>& w = std::nullopt,
                                         std::optional<int> weight = std::nullopt) {
  std::vector<MultiIndex> out;
  if (p < 0 || p > n) return out;
  std::function<void(int, int, std::uint32_t, int)> rec = [&](int start, int left, std::uint32_t m, int acc) {
    if (left == 0) {
      if (!weight || acc == *weight) out.emplace_back(m);
      return;
    }
    for (int a = start; a <= n - left; ++a) {
      int wa = w ? (*w)[a] : a + 1;
      if (weight && w == std::nullopt && acc + wa > *weight) break;
      rec(a + 1, left - 1, m | (1u << a), acc + wa);
    }
  };
  rec(0, p, 0u, 0);
  return out;
}

// Precomputed de^k (de^k = sum_{i<j} c_{ij}^k e^i ∧ e^j) and the derivation extending it.
template <class S>
class CochainComplex {
 public:
  explicit CochainComplex(const LieAlgebra<S>& g) : g_(g), de_(g.dim()) {
    if (g.dim() > 32) throw Error(ErrorCode::InvalidInput, "dimension above 32 not supported by the cochain complex");
    for (const auto& [ab, v] : g.table())
      for (const auto& [k, c] : v) de_[k].emplace_back((1u << ab.first) | (1u << ab.second), c);
  }
  const LieAlgebra<S>& algebra() const { return g_; }
  int dim() const { return g_.dim(); }

  // d of a single monomial, as (mask, coefficient) pairs (not merged)
  template <class F>
  void d_monomial(std::uint32_t m, F&& emit) const {
    int r = 0;
    for (std::uint32_t it = m; it; it &= it - 1, ++r) {
      int a = std::countr_zero(it);
      std::uint32_t rest = m & ~(1u << a);
      for (const auto& [pair, c] : de_[a]) {
        if (pair & rest) continue;
        int s = wedge_sign(pair, rest);
        if (r & 1) s = -s;
        emit(pair | rest, s > 0 ? c : -c);
      }
    }
  }

  Form<S> d(const Form<S>& phi) const {
    Form<S> out(phi.degree() + 1);
    for (const auto& [m, c] : phi.terms())
      d_monomial(m.mask(), [&](std::uint32_t t, const S& v) { out.add(MultiIndex(t), c * v); });
    return out;
  }

  // de^k as a form (k 1-based)
  Form<S> de(int k) const {
    Form<S> f(2);
    for (const auto& [pair, c] : de_[k - 1]) f.add(MultiIndex(pair), c);
    return f;
  }

 private:
  const LieAlgebra<S>& g_;
  std::vector<std::vector<std::pair<std::uint32_t, S>>> de_;
};

template <class S>
Form<S> differential(const LieAlgebra<S>& g, const Form<S>& phi) {
  return CochainComplex<S>(g).d(phi);
}

template <class S>
bool d_squared_zero(const LieAlgebra<S>& g) {
  CochainComplex<S> cx(g);
  for (int k = 1; k <= g.dim(); ++k)
    if (!cx.d(cx.de(k)).is_zero()) return false;
  return true;
}

// Coordinates of forms in a fixed list of monomials.
class MonomialBasis {
 public:
  MonomialBasis() = default;
  explicit MonomialBasis(std::vector<MultiIndex> mons) : mons_(std::move(mons)) {
    for (int i = 0; i < static_cast<int>(mons_.size()); ++i) pos_[mons_[i].mask()] = i;
  }
  int size() const { return static_cast<int>(mons_.size()); }
  const std::vector<MultiIndex>& monomials() const { return mons_; }
  const MultiIndex& operator[](int i) const { return mons_[i]; }
  int find(std::uint32_t m) const {
    auto it = pos_.find(m);
    return it == pos_.end() ? -1 : it->second;
  }
  template <class S>
  SparseVec<S> coords(const Form<S>& f) const {
    SparseVec<S> v;
    for (const auto& [m, c] : f.terms()) {
      int i = find(m.mask());
      if (i < 0) throw Error(ErrorCode::InvalidInput, "form has a monomial outside the basis");
      v.emplace_back(i, c);
    }
    std::sort(v.begin(), v.end(), [](const auto& a, const auto& b) { return a.first < b.first; });
    return v;
  }
  template <class S>
  Form<S> form(const SparseVec<S>& v, int degree) const {
    Form<S> f(degree);
    for (const auto& [i, c] : v) f.add(mons_[i], c);
    return f;
  }

 private:
  std::vector<MultiIndex> mons_;
  std::unordered_map<std::uint32_t, int> pos_;
};

// Images of the source monomials under d, in target coordinates.
template <class S>
std::vector<SparseVec<S>> d_columns(const CochainComplex<S>& cx, const MonomialBasis& src, const MonomialBasis& dst) {
  std::vector<SparseVec<S>> cols(src.size());
  for (int j = 0; j < src.size(); ++j) {
    std::map<int, S> acc;
    cx.d_monomial(src[j].mask(), [&](std::uint32_t t, const S& v) {
      int i = dst.find(t);
      if (i < 0) throw Error(ErrorCode::InvalidInput, "differential leaves the weight block: weights are not compatible");
      acc[i] += v;
    });
    for (auto& [i, v] : acc)
      if (!is_zero(v)) cols[j].emplace_back(i, std::move(v));
  }
  return cols;
}

template <class S>
std::vector<SparseVec<S>> transpose(const std::vector<SparseVec<S>>& cols, int nrows) {
  std::vector<SparseVec<S>> rows(nrows);
  for (int j = 0; j < static_cast<int>(cols.size()); ++j)
    for (const auto& [i, v] : cols[j]) rows[i].emplace_back(j, v);
  return rows;
}

template <class S>
SparseMatrix<S> to_matrix(const std::vector<SparseVec<S>>& cols, int nrows) {
  SparseMatrix<S> m(nrows, static_cast<int>(cols.size()));
  for (int j = 0; j < static_cast<int>(cols.size()); ++j)
    for (const auto& [i, v] : cols[j]) m.set(i, j, v);
  return m;
}

template <class S>
struct CohomologyBlock {
  int degree = 0;
  std::optional<int> weight;
  std::vector<Form<S>> representatives;
  int dim = 0;
  int cocycle_dim = 0;
  int coboundary_dim = 0;
  MonomialBasis basis;
  std::vector<SparseVec<S>> cocycles;  // kernel basis of d_p in basis coordinates
  Subspace<S> coboundaries;
  std::vector<S> pivot_values;  // pivots met while computing ker d_p

  // coordinates of a form modulo coboundaries, in the representative basis
  std::optional<SparseVec<S>> class_of(const Form<S>& f) const {
    SparseVec<S> v = coboundaries.reduce(basis.coords(f));
    std::vector<SparseVec<S>> reps;
    for (const auto& r : representatives) reps.push_back(basis.coords(r));
    return solve_in_span_sparse(v, reps);
  }
};

template <class S>
CohomologyBlock<S> cohomology(const LieAlgebra<S>& g, int p, std::optional<int> weight = std::nullopt) {
  const int n = g.dim();
  if (p < 0 || p > n) throw Error(ErrorCode::InvalidInput, "degree out of range");
  if (weight && !g.weights()) throw Error(ErrorCode::WeightsMissing, "weight requested on an unweighted algebra");
  const auto& w = g.weights();
  CochainComplex<S> cx(g);
  CohomologyBlock<S> blk;
  blk.degree = p;
  blk.weight = weight;
  blk.basis = MonomialBasis(monomials(n, p, w, weight));
  MonomialBasis up(monomials(n, p + 1, w, weight));
  MonomialBasis down(monomials(n, p - 1, w, weight));
  auto dp = d_columns(cx, blk.basis, up);
  auto e = row_echelon(transpose(dp, up.size()), blk.basis.size());
  blk.pivot_values = e.pivot_values;
  blk.cocycles = kernel_sparse(e);
  blk.cocycle_dim = static_cast<int>(blk.cocycles.size());
  blk.coboundaries = Subspace<S>(blk.basis.size(), d_columns(cx, down, blk.basis));
  blk.coboundary_dim = blk.coboundaries.dim();
  std::vector<SparseVec<S>> reduced;
  for (const auto& z : blk.cocycles) {
    auto r = blk.coboundaries.reduce(z);
    if (!r.empty()) reduced.push_back(std::move(r));
  }
  Subspace<S> h(blk.basis.size(), std::move(reduced));
  for (const auto& r : h.basis()) blk.representatives.push_back(blk.basis.form(r, p));
  blk.dim = h.dim();
  return blk;
}

// Dimension only; on weighted algebras the weight blocks are summed.
template <class S>
int cohomology_dim(const LieAlgebra<S>& g, int p, std::optional<int> weight = std::nullopt) {
  const int n = g.dim();
  if (weight && !g.weights()) throw Error(ErrorCode::WeightsMissing, "weight requested on an unweighted algebra");
  if (p < 0 || p > n) return 0;
  const auto& w = g.weights();
  CochainComplex<S> cx(g);
  auto rank_of = [&](int q, std::optional<int> lam) {
    if (q < 0 || q >= n) return 0;
    MonomialBasis src(monomials(n, q, w, lam)), dst(monomials(n, q + 1, w, lam));
    if (src.size() == 0 || dst.size() == 0) return 0;
    return row_echelon(d_columns(cx, src, dst), dst.size()).rank();
  };
  auto block = [&](std::optional<int> lam) {
    int np = static_cast<int>(monomials(n, p, w, lam).size());
    return np - rank_of(p, lam) - rank_of(p - 1, lam);
  };
  if (weight || !w) return block(weight);
  std::map<int, int> seen;
  for (const auto& m : monomials(n, p, w)) seen[m.weight(w)] = 1;
  int total = 0;
  for (const auto& [lam, one] : seen) total += block(lam);
  return total;
}

template <class S>
bool is_cocycle(const LieAlgebra<S>& g, const Form<S>& f) {
  return differential(g, f).is_zero();
}

template <class S>
bool is_cohomologous(const LieAlgebra<S>& g, const Form<S>& f, const Form<S>& h) {
  if (!is_cocycle(g, f) || !is_cocycle(g, h)) throw Error(ErrorCode::NotCocycle, "is_cohomologous needs cocycles");
  Form<S> diff = f - h;
  if (diff.is_zero()) return true;
  const int p = f.is_zero() ? h.degree() : f.degree();
  CochainComplex<S> cx(g);
  MonomialBasis tgt(monomials(g.dim(), p));
  MonomialBasis src(monomials(g.dim(), p - 1));
  Subspace<S> b(tgt.size(), d_columns(cx, src, tgt));
  return b.contains(tgt.coords(diff));
}

// Splits phi by weight (weights of the algebra, or e^i of weight i when absent).
template <class S>
std::map<int, Form<S>> weight_components(const Form<S>& phi, const std::optional<std::vector<int>>& w) {
  std::map<int, Form<S>> out;
  for (const auto& [m, c] : phi.terms()) {
    int lam = m.weight(w);
    auto it = out.find(lam);
    if (it == out.end()) it = out.emplace(lam, Form<S>(phi.degree())).first;
    it->second.add(m, c);
  }
  return out;
}

}  // namespace filiform
