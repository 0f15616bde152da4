#include "filiform/spectral.hpp"

#include <algorithm>
#include <set>

#include "filiform/filtration.hpp"

namespace filiform {

SpectralSequence::SpectralSequence(LieAlgebra<Q> adapted) : g_(std::move(adapted)) {
  const int n = g_.dim();
  for (const auto& [ab, v] : g_.table())
    for (const auto& [k, c] : v)
      if (k < ab.first + ab.second + 1)
        throw Error(ErrorCode::FiltrationUndefined, "bracket [e" + std::to_string(ab.first + 1) + ", e" + std::to_string(ab.second + 1) +
                                                        "] leaves the weight filtration");
  CochainComplex<Q> cx(g_);
  for (int m = 0; m <= n; ++m) {
    bases_.emplace_back(monomials(n, m));
    std::vector<int> w;
    for (const auto& mi : bases_.back().monomials()) w.push_back(mi.weight(std::nullopt));
    minw_.push_back(w.empty() ? 0 : *std::min_element(w.begin(), w.end()));
    maxw_.push_back(w.empty() ? 0 : *std::max_element(w.begin(), w.end()));
    wt_.push_back(std::move(w));
  }
  for (int m = 0; m < n; ++m) dcols_.push_back(d_columns(cx, bases_[m], bases_[m + 1]));
  dcols_.emplace_back(bases_[n].size());
}

SpectralSequence::SpectralSequence(const LieAlgebra<Q>& g, const Matrix<Q>& change) : SpectralSequence([&] {
    auto h = change_basis(g, change);
    auto a = adapted_alpha(h);
    if (!a || !a->is_zero()) throw Error(ErrorCode::FiltrationUndefined, "filtration L needs an adapted basis with alpha = 0");
    return h;
  }()) {}

std::vector<int> SpectralSequence::weights(int m) const {
  std::set<int> s(wt_[m].begin(), wt_[m].end());
  return {s.begin(), s.end()};
}

bool SpectralSequence::weights_has(int m, int w) const {
  if (m < 0 || m > dim()) return false;
  return std::find(wt_[m].begin(), wt_[m].end(), w) != wt_[m].end();
}

int SpectralSequence::max_span() const {
  int s = 0;
  for (int m = 0; m < dim(); ++m) s = std::max(s, maxw_[m] - minw_[m + 1]);
  return s;
}

int SpectralSequence::clamp_w(int m, int w) const {
  if (w < minw_[m]) return minw_[m] - 1;
  return std::min(w, maxw_[m]);
}

SparseVec<Q> SpectralSequence::d(int m, const SparseVec<Q>& x) const {
  std::map<int, Q> acc;
  for (const auto& [j, c] : x)
    for (const auto& [i, v] : dcols_[m][j]) acc[i] += c * v;
  SparseVec<Q> out;
  for (auto& [i, v] : acc)
    if (!v.is_zero()) out.emplace_back(i, v);
  return out;
}

const Subspace<Q>& SpectralSequence::Z(int r, int w, int m) {
  const int n = dim();
  const int wc = clamp_w(m, w);
  const int tc = m < n ? clamp_w(m + 1, w - r) : 0;
  auto key = std::make_tuple(m, wc, tc);
  auto it = z_.find(key);
  if (it != z_.end()) return it->second;
  const int N = bases_[m].size();
  std::vector<int> cols;
  for (int j = 0; j < N; ++j)
    if (wt_[m][j] <= wc) cols.push_back(j);
  std::vector<SparseVec<Q>> gens;
  if (m == n) {
    for (int j : cols) gens.push_back({{j, Q(1)}});
  } else {
    std::map<int, SparseVec<Q>> eq;
    for (int l = 0; l < static_cast<int>(cols.size()); ++l)
      for (const auto& [i, v] : dcols_[m][cols[l]])
        if (wt_[m + 1][i] > tc) eq[i].emplace_back(l, v);
    std::vector<SparseVec<Q>> rows;
    for (auto& [i, r] : eq) rows.push_back(std::move(r));
    for (auto& k : kernel_sparse(row_echelon(std::move(rows), static_cast<int>(cols.size())))) {
      SparseVec<Q> v;
      for (const auto& [l, c] : k) v.emplace_back(cols[l], c);
      gens.push_back(std::move(v));
    }
  }
  return z_.emplace(key, Subspace<Q>(N, std::move(gens))).first->second;
}

const SpectralSequence::Block& SpectralSequence::block(int r, int w, int m) {
  if (r < 1) throw Error(ErrorCode::InvalidInput, "pages start at r = 1");
  auto key = std::make_tuple(r, w, m);
  auto it = blocks_.find(key);
  if (it != blocks_.end()) return it->second;
  const int N = bases_[m].size();
  Block b;
  b.numerator = Z(r, w, m);
  std::vector<SparseVec<Q>> den = Z(r - 1, w - 1, m).basis();
  if (m > 0)
    for (const auto& x : Z(r - 1, w + r - 1, m - 1).basis()) {
      auto y = d(m - 1, x);
      if (!y.empty()) den.push_back(std::move(y));
    }
  b.denominator = Subspace<Q>(N, std::move(den));
  if (!b.numerator.contains(b.denominator)) throw Error(ErrorCode::InvariantViolation, "spectral denominator is not inside Z_r");
  std::vector<SparseVec<Q>> red;
  for (const auto& x : b.numerator.basis()) {
    auto y = b.denominator.reduce(x);
    if (!y.empty()) red.push_back(std::move(y));
  }
  b.complement = Subspace<Q>(N, std::move(red));
  for (const auto& v : b.complement.basis()) b.reps.push_back(bases_[m].form(v, m));
  return blocks_.emplace(key, std::move(b)).first->second;
}

std::optional<SparseVec<Q>> SpectralSequence::coords(int r, int w, int m, const Form<Q>& x) {
  const Block& b = block(r, w, m);
  auto v = bases_[m].coords(x);
  if (!b.numerator.contains(v)) return std::nullopt;
  auto rr = b.denominator.reduce(v);
  SparseVec<Q> a;
  const auto& piv = b.complement.pivots();
  for (std::size_t i = 0; i < piv.size(); ++i) {
    Q c = sparse_get(rr, piv[i]);
    if (!c.is_zero()) {
      a.emplace_back(static_cast<int>(i), c);
      rr = sparse_axpy(rr, -c, b.complement.basis()[i]);
    }
  }
  if (!rr.empty()) throw Error(ErrorCode::InvariantViolation, "class coordinates do not reproduce the representative");
  return a;
}

Form<Q> SpectralSequence::canonical(int r, int w, int m, const Form<Q>& x) {
  return bases_[m].form(block(r, w, m).denominator.reduce(bases_[m].coords(x)), m);
}

Matrix<Q> SpectralSequence::differential(int r, int w, int m) {
  const Block& src = block(r, w, m);
  const int cols = src.dim();
  if (m == dim() || !weights_has(m + 1, w - r)) {
    for (const auto& v : src.complement.basis())
      if (!d(m, v).empty() && weights_has(m + 1, w - r)) throw Error(ErrorCode::InvariantViolation, "d_r leaves the page");
    return Matrix<Q>::Zero(0, cols);
  }
  const int rows = block(r, w - r, m + 1).dim();
  Matrix<Q> mat = Matrix<Q>::Zero(rows, cols);
  for (int j = 0; j < cols; ++j) {
    auto y = bases_[m + 1].form(d(m, block(r, w, m).complement.basis()[j]), m + 1);
    auto c = coords(r, w - r, m + 1, y);
    if (!c) throw Error(ErrorCode::InvariantViolation, "d_r image is not in Z_r");
    for (const auto& [i, v] : *c) mat(i, j) = v;
  }
  return mat;
}

int SpectralPage::total(int m) const {
  int s = 0;
  for (const auto& [pq, d] : dims)
    if (pq.first + pq.second == m) s += d;
  return s;
}

std::vector<SpectralPage> build_pages(SpectralSequence& ss, int r_max) {
  const int n = ss.dim();
  if (r_max < 0) r_max = 2 * n + 1;
  const int last = std::min(r_max, ss.max_span() + 1);
  std::vector<SpectralPage> pages;
  for (int r = 1; r <= last; ++r) {
    SpectralPage pg;
    pg.r = r;
    for (int m = 0; m <= n; ++m)
      for (int w : ss.weights(m)) {
        std::pair<int, int> pq{-w, m + w};
        const auto& b = ss.block(r, w, m);
        pg.dims[pq] = b.dim();
        if (b.dim() == 0) continue;
        pg.reps[pq] = b.reps;
        auto dm = ss.differential(r, w, m);
        if (dm.rows() > 0) pg.differentials[pq] = dm;
      }
    pages.push_back(std::move(pg));
  }
  return pages;
}

std::vector<SpectralPage> build_pages(const LieAlgebra<Q>& g, const Matrix<Q>& change, int r_max) {
  SpectralSequence ss(g, change);
  return build_pages(ss, r_max);
}

SurvivalResult symplectic_survival(const LieAlgebra<Q>& g, const Matrix<Q>& change) {
  const int n = g.dim();
  if (n % 2) throw Error(ErrorCode::OddDimension, "symplectic survival needs even dimension");
  SpectralSequence ss(g, change);
  auto gl = gr_L(g, change);
  const int top = n + 1;
  if (!find_nondegenerate(cohomology(gl.algebra(), 2, top).representatives, n))
    throw Error(ErrorCode::GrLNotSymplectic, "gr_L carries no symplectic class of weight " + std::to_string(top));
  SurvivalResult res;
  const int last = ss.max_span() + 1;
  for (int r = 1; r <= last; ++r) {
    const auto& b = ss.block(r, top, 2);
    SearchCertificate cert;
    auto cand = find_nondegenerate(b.reps, n, cert);
    if (!cand) {
      if (r == 1) throw Error(ErrorCode::InvariantViolation, "E_1 top block disagrees with H^2 of gr_L");
      const int s = r - 1;
      res.page = s;
      res.classes = ss.block(s, top, 2).reps;
      for (const auto& c : res.classes) {
        Form<Q> dc = CochainComplex<Q>(ss.algebra()).d(c);
        res.images.push_back(ss.canonical(s, top - s, 3, dc));
      }
      res.search = cert;
      return res;
    }
    if (r == last) {
      res.survives = true;
      res.page = r;
      res.classes = b.reps;
      res.search = cert;
      if (!CochainComplex<Q>(ss.algebra()).d(*cand).is_zero()) throw Error(ErrorCode::InvariantViolation, "E_infinity representative is not closed");
      res.lift_adapted = *cand;
      auto inv = inverse(change);
      res.lift = substitute_basis(*cand, *inv);
      if (!is_cocycle(g, *res.lift) || !nondegenerate(*res.lift, n)) throw Error(ErrorCode::InvariantViolation, "lifted form is not symplectic");
    }
  }
  return res;
}

std::vector<int> weight_profile(const GradedLieAlgebra<Q>& a, int p) {
  std::vector<int> out;
  std::set<int> lams;
  for (const auto& m : monomials(a.dim(), p, a.algebra().weights())) lams.insert(m.weight(a.algebra().weights()));
  for (int lam : lams) {
    int d = cohomology_dim(a.algebra(), p, lam);
    for (int i = 0; i < d; ++i) out.push_back(lam);
  }
  return out;
}

std::vector<int> h3_weight_profile(const GradedLieAlgebra<Q>& a) { return weight_profile(a, 3); }

}  // namespace filiform
