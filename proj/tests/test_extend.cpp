#include <random>

#include "doctest.h"
#include "filiform/catalog.hpp"
#include "filiform/extend_classify.hpp"
#include "oracle.hpp"

using namespace filiform;

namespace {

Form<Q> e2(int i, int j, const Q& c = Q(1)) { return Form<Q>::monomial({i, j}, c); }

int count_points(const std::vector<GradedIsoClass>& cs) {
  int k = 0;
  for (const auto& c : cs) k += c.family ? 0 : 1;
  return k;
}
int count_families(const std::vector<GradedIsoClass>& cs) {
  int k = 0;
  for (const auto& c : cs) k += c.family ? 1 : 0;
  return k;
}
std::vector<std::string> names(const std::vector<GradedIsoClass>& cs) {
  std::vector<std::string> v;
  for (const auto& c : cs) v.push_back(c.name);
  return v;
}

}  // namespace

TEST_CASE("central extensions") {
  auto ab = central_extension(catalog::abelian(4).algebra(), Form<Q>(2));
  CHECK(ab.dim() == 5);
  CHECK(ab.table().empty());
  auto m4 = central_extension(catalog::m0(3).algebra(), e2(1, 3));
  CHECK(m4 == catalog::m0(4).algebra());
  for (Q beta : {Q(1), Q(-2), Q(3, 7)})
    for (Q gamma : {Q(1), Q(5)}) {
      auto x = central_extension(catalog::m0(4).algebra(), e2(1, 4, gamma) + e2(2, 3, beta));
      CHECK(graded_isomorphic(x, catalog::m2(5).algebra()));
      CHECK(oracle::diagonal_iso(x, catalog::m2(5).algebra()));
    }
  CHECK_THROWS_AS(central_extension(catalog::m0(4).algebra(), e2(2, 4)), Error);
  // weights follow the cocycle
  auto w = central_extension(catalog::V(6).algebra(), e2(1, 6, Q(5)) + e2(2, 5, Q(3)) + e2(3, 4));
  REQUIRE(w.weights());
  CHECK(w.weights()->back() == 7);
}

TEST_CASE("extension round trip and cohomologous cocycles") {
  std::mt19937 rng(5);
  std::uniform_int_distribution<int> d(-3, 3);
  for (const auto& g : {catalog::m0(6).algebra(), catalog::g(8, Q(1)).algebra(), catalog::m2(7).algebra()}) {
    auto h = cohomology(g, 2);
    for (const auto& c : h.representatives) {
      auto x = central_extension(g, c);
      auto q = quotient_by_top(x);
      CHECK(q.base == g);
      CHECK(q.cocycle == c);
      // c + d(xi) gives an isomorphic extension through x -> x + xi(x) e_{n+1}
      const int n = g.dim();
      Form<Q> xi(1);
      std::vector<Q> coef(n);
      for (int i = 0; i < n; ++i) {
        coef[i] = Q(d(rng));
        xi.add(MultiIndex{i + 1}, coef[i]);
      }
      auto c2 = c + differential(g, xi);
      CHECK(is_cohomologous(g, c, c2));
      auto y = central_extension(g, c2);
      std::vector<std::vector<Q>> cols;
      for (int i = 0; i <= n; ++i) {
        auto v = oracle::e(n + 1, i);
        if (i < n) v[n] = coef[i];
        cols.push_back(v);
      }
      CHECK(oracle::is_iso(x, y, cols));
      CHECK(central_series_dims(x) == central_series_dims(y));
    }
  }
}

TEST_CASE("filiform extension criterion") {
  for (int n = 4; n <= 9; ++n) {
    CHECK(is_filiform_extension(catalog::m0(n).algebra(), e2(1, n)));
    CHECK_FALSE(is_filiform_extension(catalog::m0(n).algebra(), e2(2, 3)));
  }
  for (int n = 5; n <= 10; ++n) {
    Form<Q> omega(2);
    for (int i = 1; 2 * i < n + 1; ++i) omega += e2(i, n + 1 - i, Q(n + 1 - 2 * i));
    auto v = catalog::V(n).algebra();
    REQUIRE(is_cocycle(v, omega));
    CHECK(omega.coeff({1, n}) == Q(n - 1));
    CHECK(is_filiform_extension(v, omega));
    CHECK(is_filiform(central_extension(v, omega)));
  }
  try {
    is_filiform_extension(catalog::abelian(3).algebra(), e2(1, 2));
    CHECK(false);
  } catch (const Error& e) {
    CHECK(e.code() == ErrorCode::CenterNotOneDimensional);
  }
  // filiform part of the exceptional blocks
  CHECK(filiform_extension_rank(catalog::g(8, Q(-5, 2)).algebra(), cohomology(catalog::g(8, Q(-5, 2)).algebra(), 2, 9)) == 0);
  CHECK(filiform_extension_rank(catalog::g(8, Q(3)).algebra(), cohomology(catalog::g(8, Q(3)).algebra(), 2, 9)) == 1);
  for (Q a : {Q(-1), Q(-3)}) {
    auto g = catalog::g(10, a).algebra();
    CHECK(filiform_extension_rank(g, cohomology(g, 2, 11)) == 0);
  }
}

TEST_CASE("graded isomorphism") {
  CHECK(graded_isomorphic(catalog::V(9).algebra(), catalog::V(9).algebra()));
  for (int n = 7; n <= 11; ++n) {
    CHECK(graded_isomorphic(catalog::V(n).algebra(), catalog::g(n, Q(8)).algebra()));
    CHECK(oracle::diagonal_iso(catalog::V(n).algebra(), catalog::g(n, Q(8)).algebra()));
  }
  CHECK(graded_isomorphic(catalog::m2(5).algebra(), catalog::V(5).algebra()));
  CHECK(graded_isomorphic(catalog::m2(6).algebra(), catalog::V(6).algebra()));
  for (int n : {3, 4}) {
    CHECK(graded_isomorphic(catalog::m0(n).algebra(), catalog::m2(n).algebra()));
    CHECK(graded_isomorphic(catalog::m0(n).algebra(), catalog::V(n).algebra()));
  }
  std::vector<Q> alphas{Q(0), Q(1), Q(-1), Q(3, 2), Q(8), Q(-2)};
  for (const auto& a : alphas)
    for (const auto& b : alphas) {
      bool iso = graded_isomorphic(catalog::g(7, a).algebra(), catalog::g(7, b).algebra());
      CHECK(iso == (a == b));
      CHECK(oracle::diagonal_iso(catalog::g(7, a).algebra(), catalog::g(7, b).algebra()) == (a == b));
    }
  CHECK_THROWS_AS(graded_normal_form(catalog::m1(3).algebra()), Error);
  // both printed m02 variants, the alpha = -2 coincidences
  for (int k = 3; k <= 6; ++k) CHECK(graded_isomorphic(catalog::m02(k).algebra(), catalog::m02_alt(k).algebra()));
  CHECK(catalog::g_family<Q>(7, Q(-2)) == [] {
    auto a = catalog::m01(3).algebra();
    a.set_weights(std::nullopt);
    return a;
  }());
  CHECK(graded_isomorphic(catalog::g(8, Q(-2)).algebra(), catalog::m02(3).algebra()));
  CHECK(graded_isomorphic(catalog::g(9, Q(-2)).algebra(), catalog::m03(3).algebra()));
  // the shifted m03 ranges do not give a Lie algebra
  for (int k = 3; k <= 5; ++k) CHECK_FALSE(jacobi_check(catalog::m03_alt(k)).empty());
  CHECK(find_family_parameter(catalog::m03(3).algebra()) == Q(-2));
  CHECK(find_family_parameter(catalog::V(10).algebra()) == Q(8));
  CHECK_FALSE(find_family_parameter(catalog::m2(9).algebra()));
}

TEST_CASE("enumeration of N-graded filiform algebras") {
  auto all = enumerate_graded_filiform_upto(17);
  auto at = [&](int n) -> const std::vector<GradedIsoClass>& { return all[n - 3]; };
  CHECK(names(at(5)) == std::vector<std::string>{"m0(5)", "m2(5)"});
  CHECK(names(at(7)) == std::vector<std::string>{"m0(7)", "m01(7)", "m2(7)", "g7(alpha)"});
  CHECK(names(at(12)) == std::vector<std::string>{"m0(12)", "m02(12)", "V(12)", "m2(12)"});
  CHECK(names(at(13)) == std::vector<std::string>{"m0(13)", "m01(13)", "m03(13)", "V(13)", "m2(13)"});
  // points and families, n = 3..11; at n = 10 the extension of m03(9) is g_{10,-2}
  std::vector<int> pts{1, 1, 2, 2, 3, 3, 4, 3, 4};
  for (int n = 3; n <= 11; ++n) {
    CHECK(count_points(at(n)) == pts[n - 3]);
    CHECK(count_families(at(n)) == (n >= 7 ? 1 : 0));
  }
  for (int n = 12; n <= 17; ++n) {
    CHECK(count_points(at(n)) == (n % 2 == 0 ? 4 : 5));
    CHECK(count_families(at(n)) == 0);
  }
  for (int n = 3; n <= 17; ++n)
    for (const auto& c : at(n)) {
      CHECK(c.tag != "unnamed");
      if (c.family) {
        REQUIRE(c.rep_b);
        REQUIRE(c.alpha_of_b);
        for (Q b : {Q(0), Q(2), Q(-1, 3), Q(7)}) {
          auto p = specialize(*c.rep_b, b);
          if (!p) continue;
          CHECK(jacobi_check(*p).empty());
          CHECK(is_filiform(*p));
          auto alpha = c.alpha_of_b->eval(b);
          if (!alpha) continue;
          if (std::find(c.excluded_alpha.begin(), c.excluded_alpha.end(), *alpha) != c.excluded_alpha.end()) continue;
          CHECK(graded_isomorphic(*p, catalog::g_family<Q>(n, *alpha)));
        }
        continue;
      }
      const auto& r = c.representative;
      CHECK(jacobi_check(r).empty());
      CHECK(is_filiform(r));
      CHECK(weights_compatible(r, *catalog::m0(n).algebra().weights()));
    }
  // exclusions carried by the families
  auto excl = [&](int n) { return at(n).back().excluded_alpha; };
  CHECK(excl(7) == std::vector<Q>{Q(-2)});
  CHECK(excl(9) == std::vector<Q>{Q(-5, 2), Q(-2)});
  CHECK(excl(10) == std::vector<Q>{Q(-5, 2)});
  CHECK(excl(11) == std::vector<Q>{Q(-3), Q(-5, 2), Q(-1)});
}
