#pragma once

#include <optional>
#include <string>
#include <vector>

#include "filiform/cochain.hpp"
#include "filiform/lie_algebra.hpp"

namespace filiform {

struct CatalogParams {
  std::optional<int> n;
  std::optional<int> k;
  std::optional<int> t;
  std::optional<Rational> alpha;
  std::optional<Rational> beta;
  std::vector<Rational> alphas;
};

namespace catalog {

LieAlgebra<Q> chain(int n);  // [e1, e_i] = e_{i+1}
GradedLieAlgebra<Q> abelian(int n);
GradedLieAlgebra<Q> heisenberg();  // dim 3
GradedLieAlgebra<Q> m0(int n);
GradedLieAlgebra<Q> m1(int k);  // dim 2k, weights 1,1,2,...,2k-1
GradedLieAlgebra<Q> m2(int n);
GradedLieAlgebra<Q> V(int n);
GradedLieAlgebra<Q> m01(int k);      // dim 2k+1
GradedLieAlgebra<Q> m02(int k);      // dim 2k+2, table version
GradedLieAlgebra<Q> m02_alt(int k);  // dim 2k+2, as printed after its cocycle proposition
GradedLieAlgebra<Q> m03(int k);      // dim 2k+3, table version
// dim 2k+3 with the index ranges printed after the m02 cocycle proposition; not
// necessarily a Lie algebra, the caller checks
LieAlgebra<Q> m03_alt(int k);
GradedLieAlgebra<Q> g(int n, const Rational& alpha);  // n = 7..11 with the table guards

LieAlgebra<Q> abelian_commutant(int n, int t, const std::vector<Rational>& alphas);
LieAlgebra<Q> symplectic_abelian_commutant(int k, const Rational& a1, const Rational& a2);
LieAlgebra<Q> deformation_23(const Rational& a1, const Rational& a2, const Rational& a3);

// g_{n,alpha} structure constants over any field containing alpha, no guard checks
template <class S>
LieAlgebra<S> g_family(int n, const S& a) {
  LieAlgebra<S> b(n);
  for (int i = 2; i < n; ++i) b.add(1, i, i + 1, S(1));
  struct Rel {
    int i, j, k;
    S c;
  };
  std::vector<Rel> rel{{2, 3, 5, S(2) + a}, {2, 4, 6, S(2) + a}, {2, 5, 7, S(1) + a}, {3, 4, 7, S(1)}};
  if (n >= 8) {
    rel.push_back({2, 6, 8, a});
    rel.push_back({3, 5, 8, S(1)});
  }
  const S d5 = S(2) * a + S(5);
  if (n >= 9) {
    rel.push_back({2, 7, 9, (S(2) * a * a + S(3) * a - S(2)) / d5});
    rel.push_back({3, 6, 9, (S(2) * a + S(2)) / d5});
    rel.push_back({4, 5, 9, S(3) / d5});
  }
  if (n >= 10) {
    rel.push_back({2, 8, 10, (S(2) * a * a + a - S(1)) / d5});
    rel.push_back({3, 7, 10, (S(2) * a - S(1)) / d5});
    rel.push_back({4, 6, 10, S(3) / d5});
  }
  if (n >= 11) {
    const S q = S(2) * (a * a + S(4) * a + S(3));
    rel.push_back({2, 9, 11, (S(2) * a * a * a + S(2) * a * a + S(3)) / q});
    rel.push_back({3, 8, 11, (S(4) * a * a * a + S(8) * a * a - S(8) * a - S(21)) / (q * d5)});
    rel.push_back({4, 7, 11, S(3) * (S(2) * a * a + S(4) * a + S(5)) / (q * d5)});
    rel.push_back({5, 6, 11, S(3) * (S(4) * a + S(1)) / (q * d5)});
  }
  for (const auto& r : rel)
    if (r.k <= n) b.add(r.i, r.j, r.k, r.c);
  std::vector<int> w(n);
  for (int i = 0; i < n; ++i) w[i] = i + 1;
  b.set_weights(w);
  return b;
}

// exclusions of the g_{n,alpha} table rows
std::vector<Rational> g_guards(int n);

}  // namespace catalog

LieAlgebra<Q> build(const std::string& name, const CatalogParams& p);
std::vector<std::string> catalog_names();

// Printed symplectic forms. Names: m0_symplectic (k, beta), V (k), g8 (alpha, the
// theorem's display), g8_cocycle (alpha, the H^2_(9) proposition), g10 (alpha),
// symplectic_abelian_commutant (k, beta).
Form<Q> printed_form(const std::string& name, const CatalogParams& p);

// Closed 2-forms from the general symplectic families: gamma*omega plus the listed
// lower-weight cocycles with coefficients gammas[0], gammas[1], ...
Form<Q> general_symplectic_form(const std::string& name, const CatalogParams& p, const Rational& gamma,
                                const std::vector<Rational>& gammas);

}  // namespace filiform
