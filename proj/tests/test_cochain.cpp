#include <random>

#include "doctest.h"
#include "filiform/catalog.hpp"
#include "filiform/cochain.hpp"
#include "oracle.hpp"

using namespace filiform;

TEST_CASE("multi-index order and wedge signs") {
  MultiIndex a{1, 4}, b{2, 3}, c{1, 2, 5};
  CHECK(a < b);
  CHECK_FALSE(b < a);
  CHECK(MultiIndex{1, 2} < MultiIndex{1, 3});
  CHECK(MultiIndex{1, 5} < MultiIndex{2, 3});
  CHECK(c.indices() == std::vector<int>{1, 2, 5});
  CHECK(c.weight(std::nullopt) == 8);
  CHECK_THROWS_AS(MultiIndex::from({3, 2}), Error);
  // e3 ∧ e1 ∧ e2 = e1 ∧ e2 ∧ e3
  CHECK(Form<Q>::monomial({3, 1, 2}) == Form<Q>::monomial({1, 2, 3}));
  CHECK(Form<Q>::monomial({2, 1}) == -Form<Q>::monomial({1, 2}));
  CHECK(Form<Q>::monomial({2, 2}).is_zero());
  auto w = wedge(Form<Q>::monomial({3}), Form<Q>::monomial({1, 2}));
  CHECK(w == Form<Q>::monomial({1, 2, 3}));
  CHECK(wedge(Form<Q>::monomial({2}), Form<Q>::monomial({1, 3})) == -Form<Q>::monomial({1, 2, 3}));
}

TEST_CASE("differential examples") {
  for (int n = 3; n <= 8; ++n) CHECK(differential(catalog::m0(n).algebra(), Form<Q>::monomial({1})).is_zero());
  auto m2 = catalog::m2(5).algebra();
  CHECK(differential(m2, Form<Q>::monomial({5})) == Form<Q>::monomial({1, 4}) + Form<Q>::monomial({2, 3}));
  // the deformation with zero parameters
  auto g = catalog::deformation_23(Q(0), Q(0), Q(0));
  Form<Q> x = Form<Q>::monomial({2, 9}) - Form<Q>::monomial({3, 8}) + Form<Q>::monomial({4, 7}) - Form<Q>::monomial({5, 6});
  CHECK(differential(g, x) == oracle::d(g, x));
  CHECK(differential(g, x) == Q(-2) * Form<Q>::monomial({2, 3, 4}));
}

TEST_CASE("differential agrees with the invariant formula") {
  std::vector<LieAlgebra<Q>> algs{catalog::m2(7).algebra(), catalog::V(6).algebra(), catalog::g(8, Q(3)).algebra(),
                                  catalog::abelian_commutant(7, 1, {Q(2), Q(-1)})};
  std::mt19937 rng(3);
  std::uniform_int_distribution<int> val(-3, 3);
  for (const auto& g : algs)
    for (int p = 1; p <= 3; ++p) {
      Form<Q> f(p);
      for (const auto& m : monomials(g.dim(), p)) f.add(m, Q(val(rng)));
      CHECK(differential(g, f) == oracle::d(g, f));
    }
}

TEST_CASE("d squared and jacobi") {
  CHECK(d_squared_zero(catalog::m03(3).algebra()));
  CHECK(d_squared_zero(catalog::V(9).algebra()));
  auto broken = catalog::m0(5).algebra();
  broken.add(2, 3, 4, Q(1));
  CHECK_FALSE(d_squared_zero(broken));
}

TEST_CASE("H2 of m0(n)") {
  for (int n = 3; n <= 10; ++n) {
    auto g = catalog::m0(n).algebra();
    auto h = cohomology(g, 2);
    CHECK(h.dim == (n + 1) / 2);
    CHECK(cohomology_dim(g, 2) == (n + 1) / 2);
    CHECK(oracle::betti(g, 2) == (n + 1) / 2);
    for (const auto& r : h.representatives) CHECK(is_cocycle(g, r));
    // e^1 ∧ e^n and the half sums, with each unordered pair once
    std::vector<Form<Q>> paper{Form<Q>::monomial({1, n})};
    for (int k = 2; k <= (n + 1) / 2; ++k) {
      Form<Q> f(2);
      for (int i = 2; i <= k; ++i) f += Form<Q>::monomial({i, 2 * k + 1 - i}, Q(i % 2 ? -1 : 1));
      paper.push_back(f);
    }
    for (const auto& f : paper) {
      CHECK(is_cocycle(g, f));
      auto cls = h.class_of(f);
      REQUIRE(cls);
      CHECK_FALSE(cls->empty());
    }
  }
}

TEST_CASE("weighted blocks") {
  auto g = catalog::g(8, Q(-5, 2)).algebra();
  // one class survives at -5/2, but it has no e1^e8 term, so no filiform extension
  auto h9 = cohomology(g, 2, 9);
  REQUIRE(h9.dim == 1);
  CHECK(h9.representatives[0].coeff({1, 8}) == Q(0));
  CHECK(h9.representatives[0] == Form<Q>(2, {{{2, 7}, Q(1)}, {{3, 6}, Q(-1)}, {{4, 5}, Q(1)}}));
  CHECK(cohomology(catalog::g(8, Q(3)).algebra(), 2, 9).dim == 1);
  CHECK_THROWS_AS(cohomology(catalog::deformation_23(Q(0), Q(0), Q(0)), 2, 11), Error);
  auto v = catalog::V(9).algebra();
  for (int p = 0; p <= 9; ++p) {
    int total = 0;
    for (int lam = 0; lam <= 45; ++lam) total += cohomology(v, p, lam).dim;
    CHECK(total == cohomology_dim(v, p));
  }
}

TEST_CASE("top degree and duality") {
  for (auto g : {catalog::m0(6).algebra(), catalog::m2(7).algebra(), catalog::g(9, Q(1)).algebra()}) {
    const int n = g.dim();
    CHECK(cohomology(g, n).dim == 1);
    for (int p = 0; p <= n; ++p) CHECK(cohomology_dim(g, p) == cohomology_dim(g, n - p));
  }
  auto nong = catalog::deformation_23(Q(1), Q(2), Q(3));
  CHECK(cohomology_dim(nong, 10) == 1);
  CHECK(cohomology_dim(nong, 3) == cohomology_dim(nong, 7));
}

TEST_CASE("cohomologous cocycles") {
  auto g = catalog::m0(5).algebra();
  auto f = Form<Q>::monomial({1, 4});
  CHECK(is_cohomologous(g, f, f));
  CHECK(is_cohomologous(g, f, Form<Q>(2)));
  CHECK_FALSE(is_cohomologous(g, Form<Q>::monomial({1, 5}), Form<Q>(2)));
  CHECK_THROWS_AS(is_cohomologous(g, Form<Q>::monomial({1, 2}) + Form<Q>::monomial({3, 4}), Form<Q>(2)), Error);
}

TEST_CASE("weight preservation on graded catalog") {
  for (auto g : {catalog::m0(7), catalog::V(8), catalog::m01(3), catalog::m1(4), catalog::g(10, Q(0))}) {
    const auto& w = g.algebra().weights();
    CochainComplex<Q> cx(g.algebra());
    for (int p = 1; p <= 3; ++p)
      for (const auto& m : monomials(g.dim(), p)) {
        auto img = cx.d(Form<Q>(p, {{m, Q(1)}}));
        for (const auto& [t, c] : img.terms()) CHECK(t.weight(w) == m.weight(w));
      }
  }
}
