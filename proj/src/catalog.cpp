#include "filiform/catalog.hpp"

#include <algorithm>

namespace filiform {
namespace catalog {

namespace {

void guard(bool ok, const std::string& what) {
  if (!ok) throw Error(ErrorCode::GuardViolated, what);
}

std::vector<int> standard_weights(int n) {
  std::vector<int> w(n);
  for (int i = 0; i < n; ++i) w[i] = i + 1;
  return w;
}

GradedLieAlgebra<Q> graded(LieAlgebra<Q> a) {
  auto w = standard_weights(a.dim());
  return GradedLieAlgebra<Q>(std::move(a), std::move(w));
}

long sgn(int e) { return (e % 2 == 0) ? 1 : -1; }

}  // namespace

LieAlgebra<Q> chain(int n) {
  LieAlgebra<Q> a(n);
  for (int i = 2; i < n; ++i) a.add(1, i, i + 1, Q(1));
  return a;
}

GradedLieAlgebra<Q> abelian(int n) {
  guard(n >= 0, "abelian needs n >= 0");
  return GradedLieAlgebra<Q>(LieAlgebra<Q>(n), std::vector<int>(n, 1));
}

GradedLieAlgebra<Q> heisenberg() {
  LieAlgebra<Q> a(3);
  a.add(1, 2, 3, Q(1));
  return GradedLieAlgebra<Q>(std::move(a), {1, 1, 2});
}

GradedLieAlgebra<Q> m0(int n) {
  guard(n >= 3, "m0(n) needs n >= 3");
  return graded(chain(n));
}

GradedLieAlgebra<Q> m1(int k) {
  guard(k >= 2, "m1(2k) needs k >= 2");
  const int n = 2 * k;
  LieAlgebra<Q> a = chain(n);
  for (int j = 2; j <= k; ++j) a.add(j, n + 1 - j, n, Q(sgn(j + 1)));
  std::vector<int> w(n);
  w[0] = 1;
  for (int i = 2; i <= n; ++i) w[i - 1] = i - 1;
  return GradedLieAlgebra<Q>(std::move(a), std::move(w));
}

GradedLieAlgebra<Q> m2(int n) {
  guard(n >= 3, "m2(n) needs n >= 3");
  LieAlgebra<Q> a = chain(n);
  for (int i = 3; i <= n - 2; ++i) a.add(2, i, i + 2, Q(1));
  return graded(std::move(a));
}

GradedLieAlgebra<Q> V(int n) {
  guard(n >= 2, "V_n needs n >= 2");
  LieAlgebra<Q> a(n);
  for (int i = 1; i <= n; ++i)
    for (int j = i + 1; i + j <= n; ++j) a.add(i, j, i + j, Q(j - i));
  return graded(std::move(a));
}

GradedLieAlgebra<Q> m01(int k) {
  guard(k >= 2, "m01(2k+1) needs k >= 2");
  const int n = 2 * k + 1;
  LieAlgebra<Q> a = chain(n);
  for (int l = 2; l <= k; ++l) a.add(l, 2 * k - l + 1, 2 * k + 1, Q(sgn(l + 1)));
  return graded(std::move(a));
}

GradedLieAlgebra<Q> m02(int k) {
  guard(k >= 3, "m02(2k+2) needs k >= 3");
  const int n = 2 * k + 2;
  LieAlgebra<Q> a = chain(n);
  for (int l = 2; l <= k; ++l) a.add(l, 2 * k - l + 1, 2 * k + 1, Q(sgn(l + 1)));
  for (int j = 2; j <= k; ++j) a.add(j, 2 * k - j + 2, 2 * k + 2, Q(sgn(j + 1) * (k - j + 1)));
  return graded(std::move(a));
}

GradedLieAlgebra<Q> m02_alt(int k) {
  guard(k >= 3, "m02(2k+2) needs 2k+2 >= 8");
  const int n = 2 * k + 2;
  LieAlgebra<Q> a = chain(n);
  for (int l = 2; l <= k; ++l) a.add(l, 2 * k - l + 1, 2 * k + 1, Q(sgn(l + 1)));
  for (int j = 2; j <= k; ++j) a.add(j, 2 * k - j + 2, 2 * k + 2, Q(sgn(j + 1) * (k - j + 1)));
  return graded(std::move(a));
}

GradedLieAlgebra<Q> m03(int k) {
  guard(k >= 3, "m03(2k+3) needs k >= 3");
  const int n = 2 * k + 3;
  LieAlgebra<Q> a = chain(n);
  for (int l = 2; l <= k; ++l) a.add(l, 2 * k - l + 1, 2 * k + 1, Q(sgn(l + 1)));
  for (int j = 2; j <= k; ++j) a.add(j, 2 * k - j + 2, 2 * k + 2, Q(sgn(j + 1) * (k - j + 1)));
  for (int m = 3; m <= k + 1; ++m) {
    Q c = Q((m - 2) * k) - Q((m - 2) * (m - 1), 2);
    a.add(m, 2 * k - m + 3, 2 * k + 3, sgn(m) * c);
  }
  return graded(std::move(a));
}

LieAlgebra<Q> m03_alt(int k) {
  guard(k >= 3, "m03(2k+3) needs 2k+3 >= 9");
  const int n = 2 * k + 3;
  LieAlgebra<Q> a = chain(n);
  for (int l = 2; l <= k - 1; ++l) a.add(l, 2 * k - l - 1, 2 * k - 1, Q(sgn(l + 1)));
  for (int j = 2; j <= k - 1; ++j) a.add(j, 2 * k - j, 2 * k, Q(sgn(j + 1) * (k - j - 1)));
  for (int m = 3; m <= k - 1; ++m) {
    Q c = Q((m - 2) * (k - 1)) - Q((m - 2) * (m - 1), 2);
    a.add(m, 2 * k - m + 1, 2 * k + 1, sgn(m) * c);
  }
  return a;
}

std::vector<Rational> g_guards(int n) {
  if (n == 9 || n == 10) return {Q(-5, 2)};
  if (n == 11) return {Q(-5, 2), Q(-1), Q(-3)};
  return {};
}

GradedLieAlgebra<Q> g(int n, const Rational& alpha) {
  guard(n >= 7 && n <= 11, "g_{n,alpha} exists for n = 7..11");
  for (const auto& x : g_guards(n))
    guard(alpha != x, "g_" + std::to_string(n) + " excludes alpha = " + x.pretty());
  return GradedLieAlgebra<Q>(g_family<Q>(n, alpha));
}

LieAlgebra<Q> abelian_commutant(int n, int t, const std::vector<Rational>& alphas) {
  guard(n >= 5 && t >= 0, "abelian_commutant needs n >= 5, t >= 0");
  LieAlgebra<Q> a = chain(n);
  for (int j = 3; j <= n; ++j) {
    int k = j + 2 + t;
    if (k <= n) a.add(2, j, k, Q(1));
    for (std::size_t r = 1; r <= alphas.size(); ++r)
      if (k + static_cast<int>(r) <= n) a.add(2, j, k + static_cast<int>(r), alphas[r - 1]);
  }
  return a;
}

LieAlgebra<Q> symplectic_abelian_commutant(int k, const Rational& a1, const Rational& a2) {
  guard(k >= 4, "symplectic abelian-commutant fixture needs 2k >= 8");
  const int n = 2 * k;
  LieAlgebra<Q> a = chain(n);
  a.add(2, 5, n, Q(1));
  a.add(2, 4, n - 1, Q(1));
  a.add(2, 4, n, a1);
  a.add(2, 3, n - 2, Q(1));
  a.add(2, 3, n - 1, a1);
  a.add(2, 3, n, a2);
  return a;
}

LieAlgebra<Q> deformation_23(const Rational& a1, const Rational& a2, const Rational& a3) {
  LieAlgebra<Q> a = chain(10);
  a.add(2, 6, 10, Q(1));
  a.add(2, 5, 9, Q(1));
  a.add(2, 5, 10, a1);
  a.add(2, 4, 8, Q(1));
  a.add(2, 4, 9, a1);
  a.add(2, 4, 10, a2);
  a.add(2, 3, 7, Q(1));
  a.add(2, 3, 8, a1);
  a.add(2, 3, 9, a2);
  a.add(2, 3, 10, a3);
  return a;
}

}  // namespace catalog

namespace {

int need(const std::optional<int>& v, const char* what) {
  if (!v) throw Error(ErrorCode::InvalidInput, std::string("missing parameter ") + what);
  return *v;
}

Rational need(const std::optional<Rational>& v, const char* what) {
  if (!v) throw Error(ErrorCode::InvalidInput, std::string("missing parameter ") + what);
  return *v;
}

// n, or 2k for even families
int even_dim(const CatalogParams& p) {
  if (p.k) return 2 * *p.k;
  return need(p.n, "n");
}

Form<Q> e2(int i, int j, const Q& c) { return Form<Q>::monomial({i, j}, c); }

}  // namespace

std::vector<std::string> catalog_names() {
  return {"abelian", "heisenberg", "m0", "m1", "m2", "V", "m01", "m02", "m02_alt", "m03", "m03_alt",
          "g", "g7", "g8", "g9", "g10", "g11", "abelian_commutant", "symplectic_abelian_commutant",
          "deformation_23"};
}

LieAlgebra<Q> build(const std::string& name, const CatalogParams& p) {
  using namespace catalog;
  auto odd_k = [&](int off) {
    if (p.k) return *p.k;
    int n = need(p.n, "n or k");
    if ((n - off) % 2 != 0) throw Error(ErrorCode::GuardViolated, name + " has dimension 2k+" + std::to_string(off));
    return (n - off) / 2;
  };
  if (name == "abelian") return abelian(need(p.n, "n"));
  if (name == "heisenberg") return heisenberg();
  if (name == "m0") return m0(need(p.n, "n"));
  if (name == "m1") return m1(even_dim(p) / 2);
  if (name == "m2") return m2(need(p.n, "n"));
  if (name == "V") return V(need(p.n, "n"));
  if (name == "m01") return m01(odd_k(1));
  if (name == "m02") return m02(odd_k(2));
  if (name == "m02_alt") return m02_alt(odd_k(2));
  if (name == "m03") return m03(odd_k(3));
  if (name == "m03_alt") return m03_alt(odd_k(3));
  if (name == "g") return g(need(p.n, "n"), need(p.alpha, "alpha"));
  if (name.size() >= 2 && name[0] == 'g' && std::all_of(name.begin() + 1, name.end(), ::isdigit)) {
    int n = std::stoi(name.substr(1));
    if (p.n && *p.n != n) throw Error(ErrorCode::InvalidInput, name + " has dimension " + std::to_string(n));
    return g(n, need(p.alpha, "alpha"));
  }
  if (name == "abelian_commutant") return abelian_commutant(need(p.n, "n"), p.t.value_or(0), p.alphas);
  if (name == "symplectic_abelian_commutant" || name == "deformation_21") {
    Q a1 = p.alphas.size() > 0 ? p.alphas[0] : Q(0);
    Q a2 = p.alphas.size() > 1 ? p.alphas[1] : Q(0);
    return symplectic_abelian_commutant(even_dim(p) / 2, a1, a2);
  }
  if (name == "deformation_23") {
    Q a[3];
    for (std::size_t i = 0; i < 3 && i < p.alphas.size(); ++i) a[i] = p.alphas[i];
    return deformation_23(a[0], a[1], a[2]);
  }
  throw Error(ErrorCode::InvalidInput, "unknown catalog name '" + name + "'");
}

Form<Q> printed_form(const std::string& name, const CatalogParams& p) {
  Form<Q> w(2);
  if (name == "m0_symplectic" || name == "symplectic_abelian_commutant") {
    int n = even_dim(p), k = n / 2;
    if (n < 4 || n % 2) throw Error(ErrorCode::GuardViolated, "m0(2k) symplectic form needs k >= 2");
    Q beta = p.beta.value_or(Q(1));
    if (beta.is_zero()) throw Error(ErrorCode::GuardViolated, "beta must be nonzero");
    w += e2(1, n, Q(1));
    for (int i = 2; i <= k; ++i) w += e2(i, n - i + 1, (i % 2 == 0 ? beta : -beta));
    if (name == "symplectic_abelian_commutant") w += e2(2, 6, Q(1));
    return w;
  }
  if (name == "V") {
    int n = even_dim(p), k = n / 2;
    if (n % 2) throw Error(ErrorCode::GuardViolated, "V_{2k} form needs even dimension");
    for (int i = 1; i <= k; ++i) w += e2(i, n + 1 - i, Q(n + 1 - 2 * i));
    return w;
  }
  if (name == "g8" || name == "g8_cocycle") {
    Q a = need(p.alpha, "alpha");
    Q d = Q(2) * a + Q(5);
    if (d.is_zero()) throw Error(ErrorCode::GuardViolated, "omega_9 has a pole at alpha = -5/2");
    w += e2(1, 8, Q(1));
    if (name == "g8") {
      w += e2(2, 7, (Q(2) * a * a + a - Q(1)) / d);
      w += e2(3, 6, (Q(2) * a - Q(1)) / d);
    } else {
      w += e2(2, 7, (Q(2) * a * a + Q(3) * a - Q(2)) / d);
      w += e2(3, 6, (Q(2) * a + Q(2)) / d);
    }
    w += e2(4, 5, Q(3) / d);
    return w;
  }
  if (name == "g10") {
    Q a = need(p.alpha, "alpha");
    Q q = Q(2) * (a * a + Q(4) * a + Q(3));
    Q d = Q(2) * a + Q(5);
    if (q.is_zero() || d.is_zero()) throw Error(ErrorCode::GuardViolated, "omega_11 has a pole at alpha = " + a.pretty());
    w += e2(1, 10, Q(1));
    w += e2(2, 9, (Q(2) * a * a * a + Q(2) * a * a + Q(3)) / q);
    w += e2(3, 8, (Q(4) * a * a * a + Q(8) * a * a - Q(8) * a - Q(21)) / (q * d));
    w += e2(4, 7, Q(3) * (Q(2) * a * a + Q(4) * a + Q(5)) / (q * d));
    w += e2(5, 6, Q(3) * (Q(4) * a + Q(1)) / (q * d));
    return w;
  }
  throw Error(ErrorCode::NoPrintedForm, "no printed form for '" + name + "'");
}

Form<Q> general_symplectic_form(const std::string& name, const CatalogParams& p, const Rational& gamma,
                                const std::vector<Rational>& gammas) {
  auto gm = [&](std::size_t i) { return i < gammas.size() ? gammas[i] : Q(0); };
  if (name == "m0_symplectic") {
    int n = even_dim(p), k = n / 2;
    Form<Q> w = gamma * printed_form(name, p);
    for (int l = 2; l <= k - 1; ++l)
      for (int i = 2; i <= l; ++i) w += e2(i, 2 * l - i + 1, (i % 2 == 0 ? gm(l - 2) : -gm(l - 2)));
    return w;
  }
  if (name == "V" || name == "g8_cocycle" || name == "g10") {
    Form<Q> w = gamma * printed_form(name, p);
    w += e2(2, 3, gm(0));
    w += e2(2, 5, gm(1));
    w += e2(3, 4, name == "V" ? Q(-3) * gm(1) : -gm(1));
    return w;
  }
  throw Error(ErrorCode::NoPrintedForm, "no general symplectic family for '" + name + "'");
}

}  // namespace filiform
