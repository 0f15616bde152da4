#include <random>
#include <set>

#include "doctest.h"
#include "filiform/catalog.hpp"
#include "filiform/filtration.hpp"
#include "filiform/spectral.hpp"
#include "filiform/structures.hpp"

using namespace filiform;

namespace {

struct Fixture {
  std::string name;
  LieAlgebra<Q> g;
};

std::vector<Fixture> deformations() {
  return {{"deformation_23", catalog::deformation_23(Q(1), Q(-2), Q(1, 3))},
          {"symplectic_abelian_commutant", catalog::symplectic_abelian_commutant(4, Q(1), Q(-2))},
          {"abelian_commutant t=1 n=9", catalog::abelian_commutant(9, 1, {Q(1, 2), Q(-3)})},
          {"abelian_commutant t=0 n=8", catalog::abelian_commutant(8, 0, {Q(1), Q(2)})},
          {"abelian_commutant t=2 n=10", catalog::abelian_commutant(10, 2, {Q(1), Q(-1), Q(2)})}};
}

Form<Q> weight_part(const Form<Q>& f, int w) {
  Form<Q> out(f.degree());
  for (const auto& [m, c] : f.terms())
    if (m.weight(std::nullopt) == w) out.add(m, c);
  return out;
}

bool zero(const Matrix<Q>& m) {
  for (int i = 0; i < m.rows(); ++i)
    for (int j = 0; j < m.cols(); ++j)
      if (!m(i, j).is_zero()) return false;
  return true;
}

}  // namespace

TEST_CASE("E_1 is the cohomology of gr_L") {
  for (const auto& f : deformations()) {
    INFO(f.name);
    auto ab = adapted_basis(f.g);
    SpectralSequence ss(f.g, ab.change);
    auto gl = gr_L(f.g, ab.change);
    for (int m = 0; m <= f.g.dim(); ++m)
      for (int w : ss.weights(m)) CHECK(ss.dim_E(1, w, m) == cohomology_dim(gl.algebra(), m, w));
  }
}

TEST_CASE("spectral pages") {
  for (const auto& f : deformations()) {
    if (f.g.dim() > 9) continue;
    INFO(f.name);
    auto ab = adapted_basis(f.g);
    SpectralSequence ss(f.g, ab.change);
    auto pages = build_pages(ss);
    const auto& last = pages.back();
    CHECK(static_cast<int>(pages.size()) == ss.max_span() + 1);
    for (int m = 0; m <= f.g.dim(); ++m) CHECK(last.total(m) == cohomology_dim(f.g, m));
    for (std::size_t i = 0; i < pages.size(); ++i) {
      const auto& pg = pages[i];
      const int r = pg.r;
      for (const auto& [pq, dm] : pg.differentials) {
        // d_r d_r = 0
        std::pair<int, int> tgt{pq.first + r, pq.second - r + 1};
        auto it = pg.differentials.find(tgt);
        if (it != pg.differentials.end()) CHECK(zero(Matrix<Q>(it->second * dm)));
      }
      if (i + 1 == pages.size()) continue;
      // E_{r+1} = ker d_r / im d_r
      for (const auto& [pq, dim] : pg.dims) {
        int out = 0, in = 0;
        auto o = pg.differentials.find(pq);
        if (o != pg.differentials.end()) out = rank(o->second);
        auto s = pg.differentials.find({pq.first - r, pq.second + r - 1});
        if (s != pg.differentials.end()) in = rank(s->second);
        CHECK(pages[i + 1].dims.at(pq) == dim - out - in);
      }
    }
    // E_infinity: all later differentials vanish
    for (const auto& [pq, dm] : last.differentials) CHECK(zero(dm));
  }
}

TEST_CASE("graded input degenerates at E_1") {
  for (const auto& g : {catalog::V(9).algebra(), catalog::m0(8).algebra(), catalog::g(8, Q(3)).algebra()}) {
    SpectralSequence ss(g);
    auto pages = build_pages(ss);
    for (const auto& pg : pages) {
      for (const auto& [pq, dm] : pg.differentials) CHECK(zero(dm));
      CHECK(pg.dims == pages.front().dims);
    }
  }
}

TEST_CASE("filtration checks") {
  LieAlgebra<Q> bad = catalog::chain(6);
  bad.add(2, 3, 4, Q(1));
  CHECK_THROWS_AS(SpectralSequence{bad}, Error);
  try {
    SpectralSequence s(bad);
  } catch (const Error& e) {
    CHECK(e.code() == ErrorCode::FiltrationUndefined);
  }
  auto m2 = catalog::m2(8).algebra();
  auto ab = adapted_basis(m2);
  CHECK_NOTHROW(SpectralSequence(m2, ab.change));
}

TEST_CASE("d_2 kills the top symplectic classes of (23)") {
  std::mt19937 rng(17);
  std::uniform_int_distribution<int> d(-6, 6);
  for (int trial = 0; trial < 5; ++trial) {
    Q a1(d(rng)), a2(d(rng), 1 + (trial % 3)), a3(d(rng));
    INFO(a1.pretty() << " " << a2.pretty() << " " << a3.pretty());
    auto g = catalog::deformation_23(a1, a2, a3);
    auto ab = adapted_basis(g);
    auto res = symplectic_survival(g, ab.change);
    CHECK_FALSE(res.survives);
    CHECK(res.page == 2);
    REQUIRE(res.classes.size() == 2);
    SpectralSequence ss(g, ab.change);
    Form<Q> e234 = Form<Q>::monomial({2, 3, 4});
    bool hit = false;
    for (std::size_t i = 0; i < res.classes.size(); ++i) {
      auto top = weight_part(res.classes[i], 11);
      Q b = top.coeff(MultiIndex::from({2, 9}));
      CHECK(top.coeff(MultiIndex::from({3, 8})) == -b);
      CHECK(top.coeff(MultiIndex::from({4, 7})) == b);
      CHECK(top.coeff(MultiIndex::from({5, 6})) == -b);
      CHECK(res.images[i] == ss.canonical(2, 9, 3, Q(-2) * b * e234));
      if (!b.is_zero()) hit = true;
      if (b.is_zero()) CHECK(res.images[i].is_zero());
    }
    CHECK(hit);
    CHECK_FALSE(ss.canonical(2, 9, 3, e234).is_zero());
    auto c = symplectic_exists(g);
    CHECK(c.reason == SymplecticReason::SpectralObstruction);
  }
}

TEST_CASE("survival of the top class") {
  for (int k = 4; k <= 6; ++k) {
    auto g = catalog::symplectic_abelian_commutant(k, Q(1), Q(-2));
    auto ab = adapted_basis(g);
    auto res = symplectic_survival(g, ab.change);
    REQUIRE(res.survives);
    REQUIRE(res.lift);
    CHECK(is_symplectic_form(g, *res.lift));
    // the leading part is a symplectic class of gr_L
    auto top = weight_part(*res.lift_adapted, 2 * k + 1);
    CHECK(is_symplectic_form(gr_L(g, ab.change).algebra(), top));
  }
  // t = 1 abelian commutant: symplectic at n = 8, obstructed by d_2 from n = 10
  CHECK(symplectic_exists(catalog::abelian_commutant(8, 1, {Q(1), Q(2)})).exists);
  for (int n : {10, 12}) {
    auto g = catalog::abelian_commutant(n, 1, {Q(1), Q(2)});
    auto res = symplectic_survival(g, adapted_basis(g).change);
    CHECK_FALSE(res.survives);
    CHECK(res.page == 2);
  }
  CHECK_THROWS_AS(symplectic_survival(catalog::m0(7).algebra(), Matrix<Q>::Identity(7, 7)), Error);
  try {
    auto g = catalog::abelian_commutant(10, 0, {Q(1), Q(2)});
    symplectic_survival(g, adapted_basis(g).change);
    CHECK(false);
  } catch (const Error& e) {
    CHECK(e.code() == ErrorCode::GrLNotSymplectic);
  }
}

TEST_CASE("H^3 weight profiles") {
  auto distinct = [](const std::vector<int>& v) { return std::set<int>(v.begin(), v.end()); };
  for (Q a : {Q(3), Q(0), Q(1), Q(-1, 2)}) {
    CHECK(distinct(h3_weight_profile(catalog::g(8, a))) == std::set<int>{11, 12, 13, 15});
    CHECK(h3_weight_profile(catalog::g(8, a)).size() == 5);
  }
  for (Q a : {Q(0), Q(1), Q(2)}) CHECK(distinct(h3_weight_profile(catalog::g(10, a))) == std::set<int>{12, 13, 14, 15});
  for (int k = 6; k <= 8; ++k) CHECK(distinct(h3_weight_profile(catalog::V(2 * k))) == std::set<int>{12, 15, 2 * k + 3, 2 * k + 4, 2 * k + 5});
  CHECK(h3_weight_profile(catalog::V(14)) == std::vector<int>{12, 15, 17, 18, 19});
  CHECK(weight_profile(catalog::m0(6), 1) == std::vector<int>{1, 2});
  // V_{2k}: the only pages where the top class can meet H^3 of lower weight
  for (int k : {6, 7, 8}) {
    std::vector<int> pages;
    for (int lam : h3_weight_profile(catalog::V(2 * k)))
      if (2 * k + 1 - lam >= 1) pages.push_back(2 * k + 1 - lam);
    std::vector<int> expect;
    for (int lam : {12, 15})
      if (2 * k + 1 - lam >= 1) expect.push_back(2 * k + 1 - lam);
    std::sort(pages.begin(), pages.end());
    std::sort(expect.begin(), expect.end());
    CHECK(pages == expect);
  }
}
