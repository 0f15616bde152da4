#pragma once

#include <map>
#include <optional>
#include <utility>
#include <vector>

#include "filiform/cochain.hpp"
#include "filiform/forms.hpp"

namespace filiform {

// Spectral sequence of the weight filtration on the cochains of an algebra written
// in an adapted basis (weight(e^i) = i). F_w Λ^m is spanned by the m-monomials of
// weight <= w; the paper's filtration index is p = -w and q = m - p. Everything
// below is indexed by (r, w, m); reports convert to (p, q).
class SpectralSequence {
 public:
  explicit SpectralSequence(LieAlgebra<Q> adapted);
  SpectralSequence(const LieAlgebra<Q>& g, const Matrix<Q>& change);

  struct Block {
    Subspace<Q> numerator;    // Z_r^w
    Subspace<Q> denominator;  // Z_{r-1}^{w-1} + d Z_{r-1}^{w+r-1}
    Subspace<Q> complement;   // reduced representatives, one per class
    std::vector<Form<Q>> reps;
    int dim() const { return complement.dim(); }
  };

  const LieAlgebra<Q>& algebra() const { return g_; }
  int dim() const { return g_.dim(); }
  const MonomialBasis& basis(int m) const { return bases_[m]; }
  int min_weight(int m) const { return minw_[m]; }
  int max_weight(int m) const { return maxw_[m]; }
  std::vector<int> weights(int m) const;  // weights carried by some m-monomial
  // d_r vanishes identically for r > max_span()
  int max_span() const;

  SparseVec<Q> d(int m, const SparseVec<Q>& x) const;
  const Subspace<Q>& Z(int r, int w, int m);
  const Block& block(int r, int w, int m);
  int dim_E(int r, int w, int m) { return weights_has(m, w) ? block(r, w, m).dim() : 0; }

  // class coordinates of x in E_r^{w,m}; nullopt when x is not in Z_r^w
  std::optional<SparseVec<Q>> coords(int r, int w, int m, const Form<Q>& x);
  // normal form of x modulo the denominator of E_r^{w,m}
  Form<Q> canonical(int r, int w, int m, const Form<Q>& x);
  // d_r: E_r^{w,m} -> E_r^{w-r,m+1}, rows indexed by the target classes
  Matrix<Q> differential(int r, int w, int m);

 private:
  bool weights_has(int m, int w) const;
  int clamp_w(int m, int w) const;
  LieAlgebra<Q> g_;
  std::vector<MonomialBasis> bases_;
  std::vector<std::vector<int>> wt_;
  std::vector<std::vector<SparseVec<Q>>> dcols_;  // d on degree m, columns in degree m+1 coordinates
  std::vector<int> minw_, maxw_;
  std::map<std::tuple<int, int, int>, Subspace<Q>> z_;
  std::map<std::tuple<int, int, int>, Block> blocks_;
};

struct SpectralPage {
  int r = 0;
  std::map<std::pair<int, int>, int> dims;                  // (p, q) -> dim E_r^{p,q}
  std::map<std::pair<int, int>, std::vector<Form<Q>>> reps;  // class representatives
  std::map<std::pair<int, int>, Matrix<Q>> differentials;    // d_r out of (p, q)
  int total(int m) const;                                    // sum over p of dim E_r^{p, m-p}
};

// Pages E_1..E_R with R = min(r_max, max_span + 1); the last one is E_infinity.
// r_max < 0 selects 2 dim + 1.
std::vector<SpectralPage> build_pages(const LieAlgebra<Q>& g, const Matrix<Q>& change, int r_max = -1);
std::vector<SpectralPage> build_pages(SpectralSequence& ss, int r_max = -1);

struct SurvivalResult {
  bool survives = false;
  int page = 0;                     // Survives: page where E_r = E_infinity; Obstructed: r of the killing d_r
  std::vector<Form<Q>> classes;     // basis of the top block on that page (adapted coordinates)
  std::vector<Form<Q>> images;      // Obstructed: d_r of each class, canonical representatives
  std::optional<Form<Q>> lift;      // Survives: closed symplectic form, input coordinates
  std::optional<Form<Q>> lift_adapted;
  SearchCertificate search;         // nondegeneracy search on the last page examined
};

// The top-weight symplectic classes [omega_{2k+1}] in E_1^{-2k-1, 2k+3} and whether one
// survives. Throws FiltrationUndefined when the base change is not adapted with
// alpha = 0 and GrLNotSymplectic when gr_L carries no symplectic class.
SurvivalResult symplectic_survival(const LieAlgebra<Q>& g, const Matrix<Q>& change);

// Weights of H^3 with multiplicity, ascending.
std::vector<int> h3_weight_profile(const GradedLieAlgebra<Q>& a);
std::vector<int> weight_profile(const GradedLieAlgebra<Q>& a, int p);

}  // namespace filiform
