#include <algorithm>
#include <set>
#include <tuple>

#include "filiform/catalog.hpp"
#include "filiform/extend_classify.hpp"

namespace filiform {

namespace {

std::vector<int> standard(int n) {
  std::vector<int> w(n);
  for (int i = 0; i < n; ++i) w[i] = i + 1;
  return w;
}

template <class S>
struct ExtOptions {
  MonomialBasis basis;
  std::optional<SparseVec<S>> c0;  // normalized e^1 ∧ e^m coefficient 1
  std::vector<SparseVec<S>> free;  // filiform directions without an e^1 ∧ e^m term
  std::vector<S> pivots;
};

// Weight m+1 cocycles of an N-graded filiform algebra of dimension m. There are no
// 1-forms of that weight, so cocycles are classes.
template <class S>
ExtOptions<S> ext_options(LieAlgebra<S> a) {
  const int m = a.dim();
  a.set_weights(standard(m));
  auto blk = cohomology(a, 2, m + 1);
  ExtOptions<S> o;
  o.basis = blk.basis;
  o.pivots = blk.pivot_values;
  if (blk.cocycles.empty()) return o;
  auto e = row_echelon(blk.cocycles, blk.basis.size());
  o.pivots.insert(o.pivots.end(), e.pivot_values.begin(), e.pivot_values.end());
  if (o.basis[0] != MultiIndex{1, m} || e.pivots[0] != 0) {
    o.free = e.rows;
    return o;
  }
  o.c0 = e.rows[0];
  o.free.assign(e.rows.begin() + 1, e.rows.end());
  return o;
}

template <class S>
LieAlgebra<S> extend_by(const LieAlgebra<S>& a, const MonomialBasis& basis, const SparseVec<S>& c) {
  auto x = central_extension(a, basis.form(c, 2));
  x.set_weights(standard(x.dim()));
  return x;
}

bool nonchain_zero(const LieAlgebra<Q>& a) {
  for (const auto& [ab, v] : a.table())
    if (ab.first != 0) return false;
  return true;
}

void add_roots(std::set<Q>& out, const QX& f) {
  for (const auto& r : rational_roots(f.num())) out.insert(r);
  for (const auto& r : rational_roots(f.den())) out.insert(r);
}

struct Node {
  std::string origin;
  std::optional<LieAlgebra<Q>> point;
  std::optional<LieAlgebra<QX>> family;
  std::set<Q> excluded;  // values of b outside the family
};

std::vector<Node> point_children(const Node& nd) {
  const LieAlgebra<Q>& a = *nd.point;
  auto o = ext_options(a);
  std::vector<Node> out;
  if (!o.c0) return out;
  if (o.free.size() > 1) throw Error(ErrorCode::InvariantViolation, "more than one free extension direction at " + nd.origin);
  if (o.free.empty()) {
    out.push_back({nd.origin + ">", extend_by(a, o.basis, *o.c0), std::nullopt, {}});
    return out;
  }
  if (nonchain_zero(a)) {
    // the scaling b/a^2 moves any nonzero multiple of the free direction to 1
    out.push_back({nd.origin + ">0", extend_by(a, o.basis, *o.c0), std::nullopt, {}});
    out.push_back({nd.origin + ">1", extend_by(a, o.basis, sparse_axpy(*o.c0, Q(1), o.free[0])), std::nullopt, {}});
    return out;
  }
  LieAlgebra<QX> af = constant_family(a);
  SparseVec<QX> c;
  for (const auto& [i, v] : *o.c0) c.emplace_back(i, QX(v));
  SparseVec<QX> z;
  for (const auto& [i, v] : o.free[0]) z.emplace_back(i, QX(v));
  c = sparse_axpy(c, QX::x(), z);
  out.push_back({nd.origin + ">b", std::nullopt, extend_by(af, o.basis, c), {}});
  return out;
}

std::vector<Node> family_children(const Node& nd) {
  const LieAlgebra<QX>& a = *nd.family;
  auto o = ext_options(a);
  std::vector<Node> out;
  if (o.c0 && !o.free.empty()) throw Error(ErrorCode::InvariantViolation, "two-parameter family at " + nd.origin);
  std::set<Q> roots;
  for (const auto& p : o.pivots) add_roots(roots, p);
  std::optional<LieAlgebra<QX>> child;
  if (o.c0) {
    child = extend_by(a, o.basis, *o.c0);
    for (const auto& [ab, v] : child->table())
      for (const auto& [k, c] : v) add_roots(roots, c);
  }
  std::set<Q> excluded = nd.excluded;
  for (const auto& t : roots) {
    if (nd.excluded.count(t)) continue;
    auto at = specialize(a, t);
    if (!at) continue;
    Node pt{nd.origin + "@" + t.pretty(), *at, std::nullopt, {}};
    auto kids = point_children(pt);
    if (child) {
      auto gen = specialize(*child, t);
      if (gen && kids.size() == 1 && kids[0].point && graded_isomorphic(*gen, *kids[0].point)) continue;
      excluded.insert(t);
    }
    for (auto& k : kids) out.push_back(std::move(k));
  }
  if (child) out.push_back({nd.origin + ">", std::nullopt, std::move(*child), std::move(excluded)});
  return out;
}

std::vector<Node> children(const Node& nd) { return nd.point ? point_children(nd) : family_children(nd); }

// alpha(b) with family ≅ g_{n, alpha(b)}, through one Möbius coordinate of the normal form
std::optional<QX> family_link(const LieAlgebra<QX>& fam) {
  const int n = fam.dim();
  if (n < 7 || n > 11) return std::nullopt;
  auto gf = catalog::g_family<QX>(n, QX::x());
  auto ng = graded_normal_form(gf);
  auto nf = graded_normal_form(fam);
  for (const auto& [ij, G] : ng.constants) {
    if (G.num().degree() > 1 || G.den().degree() > 1 || G.is_constant()) continue;
    QX F(0);
    for (const auto& [kl, v] : nf.constants)
      if (kl == ij) F = v;
    // G = (p x + q) / (r x + s)
    Q p = G.num().coeff(1), q = G.num().coeff(0), r = G.den().coeff(1), s = G.den().coeff(0);
    QX den = QX(p) - F * QX(r);
    if (den.is_zero()) continue;
    QX alpha = (F * QX(s) - QX(q)) / den;
    if (graded_normal_form(catalog::g_family<QX>(n, alpha)) == nf) return alpha;
  }
  return std::nullopt;
}

std::string param_name(const std::string& base, int n, const Q& a) {
  return base + std::to_string(n) + "(" + a.pretty() + ")";
}

}  // namespace

std::vector<std::tuple<std::string, std::string, LieAlgebra<Q>>> named_graded_candidates(int n) {
  std::vector<std::tuple<std::string, std::string, LieAlgebra<Q>>> c;
  auto nm = [&](const std::string& s) { return s + "(" + std::to_string(n) + ")"; };
  if (n >= 3) c.emplace_back("m0", nm("m0"), catalog::m0(n).algebra());
  if (n >= 5) c.emplace_back("m2", nm("m2"), catalog::m2(n).algebra());
  if (n >= 12) c.emplace_back("V", nm("V"), catalog::V(n).algebra());
  if (n >= 7 && n % 2 == 1) c.emplace_back("m01", nm("m01"), catalog::m01((n - 1) / 2).algebra());
  if (n >= 8 && n % 2 == 0) c.emplace_back("m02", nm("m02"), catalog::m02((n - 2) / 2).algebra());
  if (n >= 9 && n % 2 == 1) c.emplace_back("m03", nm("m03"), catalog::m03((n - 3) / 2).algebra());
  return c;
}

std::optional<Q> find_family_parameter(const LieAlgebra<Q>& g) {
  const int n = g.dim();
  if (n < 7 || n > 11 || !is_graded_filiform(g)) return std::nullopt;
  auto gen = chain_normalized_constants(catalog::g_family<QX>(n, QX::x()));
  auto val = chain_normalized_constants(g);
  std::map<std::pair<int, int>, QX> C;
  std::map<std::pair<int, int>, Q> v;
  for (const auto& [ij, c] : gen) C[ij] = c;
  for (const auto& [ij, c] : val) v[ij] = c;
  for (const auto& [ij, c] : val)
    if (!C.count(ij)) return std::nullopt;
  // v = s C(alpha): v_k C_l - v_l C_k = 0 for every pair of keys
  std::vector<std::pair<int, int>> keys;
  for (const auto& [ij, c] : C) keys.push_back(ij);
  std::optional<std::vector<Q>> cand;
  for (std::size_t a = 0; a < keys.size() && !cand; ++a)
    for (std::size_t b = a + 1; b < keys.size() && !cand; ++b) {
      const QX& ck = C[keys[a]];
      const QX& cl = C[keys[b]];
      Q vk = v.count(keys[a]) ? v[keys[a]] : Q(0);
      Q vl = v.count(keys[b]) ? v[keys[b]] : Q(0);
      Polynomial p = Polynomial(vk) * cl.num() * ck.den() - Polynomial(vl) * ck.num() * cl.den();
      if (!p.is_zero()) cand = rational_roots(p);
    }
  if (!cand) return std::nullopt;
  for (const auto& a0 : *cand) {
    try {
      if (graded_isomorphic(catalog::g(n, a0).algebra(), g)) return a0;
    } catch (const Error&) {
    }
  }
  return std::nullopt;
}

std::vector<std::vector<GradedIsoClass>> enumerate_graded_filiform_upto(int n_max) {
  if (n_max < 3) throw Error(ErrorCode::InvalidInput, "enumeration starts at dimension 3");
  std::vector<std::vector<GradedIsoClass>> result;
  std::vector<Node> level{{"m0(3)", catalog::m0(3).algebra(), std::nullopt, {}}};
  for (int n = 3; n <= n_max; ++n) {
    if (n > 3) {
      std::vector<Node> next;
      for (const auto& nd : level)
        for (auto& k : children(nd)) next.push_back(std::move(k));
      level = std::move(next);
    }
    // naming: named sequences first, then the g families
    auto named = named_graded_candidates(n);
    std::vector<GradedIsoClass> points, fams;
    auto name_point = [&](const LieAlgebra<Q>& p, const std::string& origin) {
      GradedIsoClass c;
      c.representative = p;
      c.origin = origin;
      for (const auto& [tag, nm, alg] : named)
        if (graded_isomorphic(alg, p)) {
          c.tag = tag;
          c.name = nm;
          c.parameter = find_family_parameter(p);
          return c;
        }
      if (auto a = find_family_parameter(p)) {
        c.tag = "g";
        c.name = param_name("g", n, *a);
        c.parameter = a;
        return c;
      }
      c.tag = "unnamed";
      c.name = "unnamed(" + origin + ")";
      return c;
    };
    for (const auto& nd : level) {
      if (nd.point) {
        points.push_back(name_point(*nd.point, nd.origin));
        continue;
      }
      GradedIsoClass f;
      f.family = true;
      f.origin = nd.origin;
      f.rep_b = *nd.family;
      f.alpha_of_b = family_link(*nd.family);
      f.tag = f.alpha_of_b ? "g" : "unnamed";
      f.name = f.alpha_of_b ? "g" + std::to_string(n) + "(alpha)" : "unnamed-family(" + nd.origin + ")";
      if (f.alpha_of_b) {
        const QX& al = *f.alpha_of_b;
        auto add_ex = [&](const Q& a, const std::string& why) {
          if (std::find(f.excluded_alpha.begin(), f.excluded_alpha.end(), a) != f.excluded_alpha.end()) return;
          f.excluded_alpha.push_back(a);
          f.excluded_reason.push_back(why);
        };
        for (const auto& b : nd.excluded)
          if (auto a = al.eval(b)) add_ex(*a, "no member at b = " + b.pretty());
        // members at poles of alpha(b) are not in g_{n,alpha}; they are named separately
        for (const auto& b : rational_roots(al.den())) {
          if (nd.excluded.count(b)) continue;
          if (auto p = specialize(*nd.family, b)) points.push_back(name_point(*p, nd.origin + "@" + b.pretty()));
        }
        // the value alpha(b) misses as b runs over Q
        if (al.num().degree() <= 1 && al.den().degree() <= 1 && al.den().degree() == 1) {
          Q inf = al.num().coeff(1) / al.den().coeff(1);
          add_ex(inf, "not reached by the b parameter");
        }
      }
      fams.push_back(std::move(f));
    }
    // duplicate elimination among points
    std::vector<GradedIsoClass> uniq;
    for (auto& c : points) {
      bool dup = false;
      for (const auto& u : uniq)
        if (graded_isomorphic(u.representative, c.representative)) dup = true;
      if (!dup) uniq.push_back(std::move(c));
    }
    // points inside a family: named ones are cut out, the others fill the family
    std::vector<GradedIsoClass> out;
    for (auto& c : uniq) {
      bool absorbed = false;
      if (c.parameter)
        for (auto& f : fams) {
          if (f.tag != "g") continue;
          auto it = std::find(f.excluded_alpha.begin(), f.excluded_alpha.end(), *c.parameter);
          if (c.tag == "g") {
            if (it != f.excluded_alpha.end()) {
              f.excluded_reason.erase(f.excluded_reason.begin() + (it - f.excluded_alpha.begin()));
              f.excluded_alpha.erase(it);
            }
            absorbed = true;
          } else if (it == f.excluded_alpha.end()) {
            f.excluded_alpha.push_back(*c.parameter);
            f.excluded_reason.push_back("isomorphic to " + c.name);
          } else {
            f.excluded_reason[it - f.excluded_alpha.begin()] = "isomorphic to " + c.name;
          }
        }
      if (!absorbed) out.push_back(std::move(c));
    }
    for (auto& f : fams) {
      std::vector<std::size_t> ord(f.excluded_alpha.size());
      for (std::size_t i = 0; i < ord.size(); ++i) ord[i] = i;
      std::sort(ord.begin(), ord.end(), [&](std::size_t x, std::size_t y) { return f.excluded_alpha[x] < f.excluded_alpha[y]; });
      std::vector<Q> ea;
      std::vector<std::string> er;
      for (auto i : ord) {
        ea.push_back(f.excluded_alpha[i]);
        er.push_back(f.excluded_reason[i]);
      }
      f.excluded_alpha = std::move(ea);
      f.excluded_reason = std::move(er);
      out.push_back(std::move(f));
    }
    result.push_back(std::move(out));
  }
  return result;
}

std::vector<GradedIsoClass> enumerate_graded_filiform(int n) {
  return enumerate_graded_filiform_upto(n).back();
}

}  // namespace filiform
