#include <random>

#include "doctest.h"
#include "filiform/catalog.hpp"
#include "filiform/extend_classify.hpp"
#include "filiform/filtration.hpp"
#include "filiform/structures.hpp"
#include "oracle.hpp"

using namespace filiform;

namespace {

Form<Q> e2(int i, int j, const Q& c = Q(1)) { return Form<Q>::monomial({i, j}, c); }

// nondegeneracy from the Gram determinant, evaluated on basis vectors
bool gram_nondegenerate(const Form<Q>& w, int n) {
  std::vector<std::vector<Q>> m(n, std::vector<Q>(n));
  for (int i = 0; i < n; ++i)
    for (int j = 0; j < n; ++j) m[i][j] = oracle::eval(w, {oracle::e(n, i), oracle::e(n, j)});
  return oracle::rank_plain(m) == n;
}

bool oracle_symplectic(const LieAlgebra<Q>& g, const Form<Q>& w) { return oracle::d(g, w).is_zero() && gram_nondegenerate(w, g.dim()); }

Q factorial(int k) { return k <= 1 ? Q(1) : Q(k) * factorial(k - 1); }

}  // namespace

TEST_CASE("wedge powers") {
  CHECK(wedge_power(e2(1, 2), 2).is_zero());
  for (int k = 1; k <= 5; ++k) {
    Form<Q> w(2);
    for (int i = 1; i <= k; ++i) w += e2(2 * i - 1, 2 * i);
    std::vector<int> all;
    for (int i = 1; i <= 2 * k; ++i) all.push_back(i);
    CHECK(wedge_power(w, k) == Form<Q>::monomial(all, factorial(k)));
  }
  // (3 e^{14} + e^{23})^2 = 6 e^{1234}
  auto w5 = e2(1, 4, Q(3)) + e2(2, 3);
  CHECK(wedge_power(w5, 2) == Form<Q>::monomial({1, 2, 3, 4}, Q(6)));
  CHECK(wedge_power(w5, 0) == [] {
    Form<Q> one(0);
    one.add(MultiIndex(0u), Q(1));
    return one;
  }());
}

TEST_CASE("symplectic forms") {
  CatalogParams p;
  for (int k = 3; k <= 8; ++k) {
    p = {};
    p.n = 2 * k;
    auto v = catalog::V(2 * k).algebra();
    auto w = printed_form("V", p);
    CHECK(is_symplectic_form(v, w));
    CHECK(oracle_symplectic(v, w));
  }
  CHECK_FALSE(is_symplectic_form(catalog::abelian(4).algebra(), e2(1, 2)));
  for (int k = 2; k <= 7; ++k)
    for (Q beta : {Q(1), Q(-5), Q(2, 7)}) {
      p = {};
      p.n = 2 * k;
      p.beta = beta;
      auto w = printed_form("m0_symplectic", p);
      CHECK(is_symplectic_form(catalog::m0(2 * k).algebra(), w));
      CHECK(oracle_symplectic(catalog::m0(2 * k).algebra(), w));
    }
  try {
    is_symplectic_form(catalog::m0(5).algebra(), e2(1, 5));
    CHECK(false);
  } catch (const Error& e) {
    CHECK(e.code() == ErrorCode::OddDimension);
  }
  // random forms against the oracle
  std::mt19937 rng(3);
  std::uniform_int_distribution<int> d(-2, 2);
  for (int trial = 0; trial < 30; ++trial) {
    const int n = 6;
    Form<Q> w(2);
    for (int i = 1; i <= n; ++i)
      for (int j = i + 1; j <= n; ++j)
        if (d(rng) > 0) w += e2(i, j, Q(d(rng)));
    auto ab = catalog::abelian(n).algebra();
    CHECK(is_symplectic_form(ab, w) == gram_nondegenerate(w, n));
    CHECK(nondegenerate(w, n) == gram_nondegenerate(w, n));
    CHECK(is_symplectic_form(catalog::m0(6).algebra(), w) == oracle_symplectic(catalog::m0(6).algebra(), w));
  }
}

TEST_CASE("homogeneous decomposition") {
  auto v = catalog::V(12);
  CatalogParams p;
  p.n = 12;
  auto w = general_symplectic_form("V", p, Q(1), {Q(1), Q(1)});
  REQUIRE(is_symplectic_form(v.algebra(), w));
  auto parts = homogeneous_decomposition(v, w);
  CHECK(parts.size() == 3);
  CHECK(parts.at(13) == printed_form("V", p));
  CHECK(parts.at(5) == e2(2, 3));
  CHECK(parts.at(7) == e2(2, 5) - e2(3, 4, Q(3)));
  CHECK(wedge_power(w, 6) == wedge_power(parts.at(13), 6));
  CHECK(homogeneous_decomposition(v, parts.at(13)).size() == 1);
  // m0 general family: weights 2k+1 and 2l+1
  CatalogParams q;
  q.n = 10;
  q.beta = Q(1);
  auto m = general_symplectic_form("m0_symplectic", q, Q(2), {Q(1), Q(-1), Q(3)});
  auto mp = homogeneous_decomposition(catalog::m0(10), m);
  CHECK(mp.size() == 4);
  CHECK(mp.count(11));
  CHECK(mp.count(5));
  CHECK(mp.count(7));
  CHECK(mp.count(9));
  CHECK(is_symplectic_form(catalog::m0(10).algebra(), m));
  CHECK(wedge_power(m, 5) == wedge_power(mp.at(11), 5));
}

TEST_CASE("symplectic existence") {
  for (int k = 3; k <= 6; ++k) {
    auto c = symplectic_exists(catalog::m1(k).algebra());
    CHECK_FALSE(c.exists);
    CHECK(c.reason == SymplecticReason::GrCNotM0);
    REQUIRE(c.generic_agrees);
    CHECK(*c.generic_agrees);
  }
  for (int n = 8; n <= 12; n += 2) {
    auto c = symplectic_exists(catalog::abelian_commutant(n, 0, {Q(1), Q(-1)}));
    CHECK_FALSE(c.exists);
    CHECK(c.reason == SymplecticReason::GrLNotSymplectic);
  }
  for (int k = 4; k <= 6; ++k) {
    auto g = catalog::symplectic_abelian_commutant(k, Q(2), Q(-1, 3));
    auto c = symplectic_exists(g);
    REQUIRE(c.exists);
    CHECK(oracle_symplectic(g, c.form));
    CHECK_FALSE(c.top_power.is_zero());
    // the printed deformed form with the e^2∧e^5, e^2∧e^4 corrections
    CatalogParams p;
    p.n = 2 * k;
    auto w = printed_form("symplectic_abelian_commutant", p) + e2(2, 5, Q(2)) + e2(2, 4, Q(-1, 3));
    CHECK(is_symplectic_form(g, w));
    CHECK_FALSE(is_cocycle(g, printed_form("symplectic_abelian_commutant", p)));
    CHECK(is_symplectic_form(catalog::symplectic_abelian_commutant(k, Q(0), Q(0)), printed_form("symplectic_abelian_commutant", p)));
  }
  CHECK(symplectic_exists(catalog::g(8, Q(3)).algebra()).exists);
  auto half = symplectic_exists(catalog::g(8, Q(1, 2)).algebra());
  CHECK_FALSE(half.exists);
  CHECK(half.reason == SymplecticReason::GrLNotSymplectic);
  // generic path on non-filiform input
  auto h = catalog::abelian(4).algebra();
  auto c = symplectic_exists(h);
  CHECK(c.path == "generic");
  CHECK(c.exists);
  LieAlgebra<Q> h3(4);  // heisenberg + line
  h3.add(1, 2, 3, Q(1));
  auto c3 = symplectic_exists(h3);
  CHECK(c3.exists);
  CHECK(oracle_symplectic(h3, c3.form));
  LieAlgebra<Q> h5(6);  // h5 + line has no symplectic form
  h5.add(1, 2, 5, Q(1));
  h5.add(3, 4, 5, Q(1));
  auto c5 = symplectic_exists(h5);
  CHECK_FALSE(c5.exists);
  CHECK(c5.reason == SymplecticReason::GenericSearchExhausted);
  CHECK(c5.search.complete);
  CHECK_THROWS_AS(symplectic_exists(catalog::m0(7).algebra()), Error);
  for (const auto& g : {catalog::m0(8).algebra(), catalog::V(12).algebra(), catalog::g(10, Q(0)).algebra()}) {
    auto s = symplectic_exists(g);
    REQUIRE(s.exists);
    CHECK(oracle_symplectic(g, s.form));
    // the top power has weight k(2k+1)
    CHECK(s.top_power.terms().begin()->first.weight(std::nullopt) == g.dim() * (g.dim() + 1) / 2);
  }
}

TEST_CASE("grid bound") {
  // a bound of zero skips the grid and decides through the expanded polynomial
  setenv("FILIFORM_MAX_GRID", "0", 1);
  LieAlgebra<Q> h5(6);
  h5.add(1, 2, 5, Q(1));
  h5.add(3, 4, 5, Q(1));
  auto c = symplectic_exists_generic(h5);
  CHECK(c.search.method == "symbolic");
  CHECK(c.search.polynomial == "0");
  CHECK(c.search.complete);
  auto m = contact_search(catalog::m0(7).algebra());
  CHECK_FALSE(m.exists);
  CHECK(m.search.complete);
  unsetenv("FILIFORM_MAX_GRID");
  CHECK(max_grid() == 200000);
}

TEST_CASE("contact forms") {
  auto heis = catalog::heisenberg().algebra();
  Form<Q> b3(1);
  b3.add(MultiIndex{3}, Q(1));
  CHECK(contact_check(heis, b3).valid);
  CHECK(contact_check(catalog::m0(3).algebra(), b3).valid);
  Form<Q> b1(1);
  b1.add(MultiIndex{1}, Q(1));
  CHECK_FALSE(contact_check(catalog::m0(5).algebra(), b1).valid);
  CHECK_THROWS_AS(contact_check(catalog::m0(4).algebra(), b1), Error);
  auto hz = contactize(catalog::abelian(2).algebra(), e2(1, 2));
  CHECK(hz.algebra == heis);
  CHECK(hz.certificate.valid);
  try {
    contactize(catalog::m0(4).algebra(), e2(1, 2));
    CHECK(false);
  } catch (const Error& e) {
    CHECK(e.code() == ErrorCode::NotSymplectic);
  }
  // m0(2k+1) carries no contact form, m01(2k+1) does
  for (int k = 2; k <= 4; ++k) {
    auto s = contact_search(catalog::m0(2 * k + 1).algebra());
    CHECK_FALSE(s.exists);
    CHECK(s.search.complete);
    auto t = contact_search(catalog::m01(k).algebra());
    CHECK(t.exists);
  }
  // contactization of V_{2k}
  for (int k : {6, 7}) {
    CatalogParams p;
    p.n = 2 * k;
    auto c = contactize(catalog::V(2 * k).algebra(), printed_form("V", p));
    CHECK(graded_isomorphic(c.algebra, catalog::V(2 * k + 1).algebra()));
    CHECK(oracle::diagonal_iso(c.algebra, catalog::V(2 * k + 1).algebra()));
  }
  // g_{7,-1}: no contact form at all
  auto g7 = contact_search(catalog::g(7, Q(-1)).algebra());
  CHECK_FALSE(g7.exists);
  CHECK(g7.search.complete);
  CHECK(contact_search(catalog::g(7, Q(0)).algebra()).exists);
}

TEST_CASE("symplectic catalog check") {
  auto r = symplectic_catalog_check();
  for (const auto& e : r.entries) {
    INFO(e.name << " " << e.params << " " << e.note);
    CHECK(e.ok());
    CHECK(e.note.find("omega + d xi") == std::string::npos);
  }
  REQUIRE(r.notes.size() == 2);
  CHECK(r.notes[0].find("display closed at 0/6") != std::string::npos);
  CHECK(r.notes[0].find("formula closed at 6/6") != std::string::npos);
  // the irrational exceptional values are out of reach at rational alpha
  Polynomial x = Polynomial::x();
  CHECK(rational_roots(Polynomial(2) * x * x * x + Polynomial(2) * x + Polynomial(3)).empty());
  CHECK(rational_roots(Polynomial(4) * x * x * x + Polynomial(8) * x * x - Polynomial(8) * x - Polynomial(21)).empty());
  CHECK(rational_roots(Polynomial(2) * x * x * x + Polynomial(2) * x * x + Polynomial(3)).empty());
}
