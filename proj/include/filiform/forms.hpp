#pragma once

#include <functional>
#include <map>
#include <optional>
#include <string>
#include <vector>

#include "filiform/cochain.hpp"

namespace filiform {

template <class S>
Form<S> wedge_power(const Form<S>& phi, int k) {
  Form<S> r(0);
  r.add(MultiIndex(0u), S(1));
  for (int i = 0; i < k; ++i) r = wedge(r, phi);
  return r;
}

template <class S>
Form<S> wedge_power(const LieAlgebra<S>&, const Form<S>& phi, int k) {
  return wedge_power(phi, k);
}

// Replace e^j by sum_a m(j, a) e^a. With h = change_basis(g, P), a form written in
// the dual basis of h goes to g coordinates with m = P^{-1}, and back with m = P.
template <class S>
Form<S> substitute_basis(const Form<S>& phi, const Matrix<S>& m) {
  const int n = static_cast<int>(m.rows());
  std::vector<Form<S>> dual(n, Form<S>(1));
  for (int j = 0; j < n; ++j)
    for (int a = 0; a < n; ++a)
      if (!is_zero(m(j, a))) dual[j].add(MultiIndex{a + 1}, m(j, a));
  Form<S> out(phi.degree());
  for (const auto& [mi, c] : phi.terms()) {
    Form<S> t(0);
    t.add(MultiIndex(0u), c);
    for (int i : mi.indices()) t = wedge(t, dual[i - 1]);
    out += t;
  }
  return out;
}

// Antisymmetric matrix of a 2-form, rows and columns 0-based.
Matrix<Q> form_matrix(const Form<Q>& omega, int n);
int form_rank(const Form<Q>& omega, int n);
bool nondegenerate(const Form<Q>& omega, int n);

// Multivariate polynomial over Q with exponent vectors as keys.
class MPoly {
 public:
  using Exps = std::vector<int>;
  MPoly() = default;
  MPoly(int vars, const Q& c);
  static MPoly var(int vars, int i);
  int vars() const { return vars_; }
  bool is_zero() const { return t_.empty(); }
  const std::map<Exps, Q>& terms() const { return t_; }
  int total_degree() const;
  Q eval(const std::vector<Q>& x) const;
  MPoly& operator+=(const MPoly& o);
  friend MPoly operator+(MPoly a, const MPoly& b) { return a += b; }
  friend MPoly operator*(const MPoly& a, const MPoly& b);
  friend MPoly operator*(const Q& s, const MPoly& a);
  MPoly operator-() const { return Q(-1) * *this; }
  friend MPoly operator-(MPoly a, const MPoly& b) { return a += -b; }
  friend bool operator==(const MPoly& a, const MPoly& b) { return a.t_ == b.t_; }
  std::string str() const;

 private:
  void add(const Exps& e, const Q& c);
  int vars_ = 0;
  std::map<Exps, Q> t_;
};

inline bool is_zero(const MPoly& p) { return p.is_zero(); }

// Coefficient of e^1∧...∧e^n in (sum t_i phi_i)^k, as a polynomial in t.
MPoly top_power_polynomial(const std::vector<Form<Q>>& phis, int n, int k);
// Coefficient of the volume form in beta∧(d beta)^k, beta = sum t_i e^i.
MPoly contact_polynomial(const LieAlgebra<Q>& g);

// How a nonvanishing search ended.
struct SearchCertificate {
  std::string method;  // none, point, grid, symbolic
  long points_tried = 0;
  long grid_size = 0;     // (degree+1)^vars, or -1 when too large to count
  long grid_limit = 0;    // FILIFORM_MAX_GRID in effect
  bool complete = false;  // a NotFound verdict is a proof
  std::optional<std::vector<Q>> point;
  std::string polynomial;  // printed when the symbolic route decided
};

long max_grid();  // FILIFORM_MAX_GRID, default 200000

// Search for t in Q^vars with eval(t) != 0 where eval is a polynomial of degree at
// most `degree` in each variable: the all-ones point, distinct primes, the grid
// {0..degree}^vars when it fits under max_grid(), else exact expansion through
// `symbolic`.
std::optional<std::vector<Q>> find_nonvanishing(int vars, int degree, const std::function<bool(const std::vector<Q>&)>& nonzero_at,
                                                const std::function<MPoly()>& symbolic, SearchCertificate& cert);

// Combination of the given 2-forms that is nondegenerate on an n-dimensional space.
std::optional<Form<Q>> find_nondegenerate(const std::vector<Form<Q>>& phis, int n, SearchCertificate& cert);
std::optional<Form<Q>> find_nondegenerate(const std::vector<Form<Q>>& phis, int n);

}  // namespace filiform
