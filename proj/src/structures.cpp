#include "filiform/structures.hpp"

#include <cmath>
#include <sstream>

#include "filiform/catalog.hpp"
#include "filiform/extend_classify.hpp"
#include "filiform/filtration.hpp"

namespace filiform {

const char* reason_name(SymplecticReason r) {
  switch (r) {
    case SymplecticReason::None: return "None";
    case SymplecticReason::GrCNotM0: return "GrCNotM0";
    case SymplecticReason::GrLNotSymplectic: return "GrLNotSymplectic";
    case SymplecticReason::SpectralObstruction: return "SpectralObstruction";
    case SymplecticReason::GenericSearchExhausted: return "GenericSearchExhausted";
  }
  return "?";
}

bool is_symplectic_form(const LieAlgebra<Q>& g, const Form<Q>& phi) {
  const int n = g.dim();
  if (n % 2) throw Error(ErrorCode::OddDimension, "symplectic forms live on even-dimensional algebras");
  if (!phi.is_zero() && phi.degree() != 2) throw Error(ErrorCode::InvalidInput, "symplectic form must be a 2-form");
  if (n == 0) return true;
  if (phi.is_zero() || !is_cocycle(g, phi)) return false;
  return !wedge_power(phi, n / 2).is_zero();
}

namespace {

Form<Q> primitive(const Form<Q>& f) {
  std::vector<Q> cs;
  for (const auto& [m, c] : f.terms()) cs.push_back(c);
  Q g = content(cs);
  return g.is_zero() ? f : g.inverse() * f;
}

void finish(SymplecticCertificate& c, int n) {
  if (!c.exists) return;
  c.form = primitive(c.form);
  c.top_power = wedge_power(c.form, n / 2);
}

}  // namespace

SymplecticCertificate symplectic_exists_generic(const LieAlgebra<Q>& g) {
  const int n = g.dim();
  if (n % 2) throw Error(ErrorCode::OddDimension, "symplectic_exists needs even dimension");
  SymplecticCertificate c;
  c.path = "generic";
  auto blk = cohomology(g, 2);
  std::vector<Form<Q>> phis;
  if (is_nilpotent(g)) {
    // the top power of a closed 2-form depends only on its class here
    phis = blk.representatives;
  } else {
    for (const auto& z : blk.cocycles) phis.push_back(blk.basis.form(z, 2));
  }
  auto w = find_nondegenerate(phis, n, c.search);
  if (w) {
    c.exists = true;
    c.form = *w;
    c.detail = "nondegenerate combination of " + std::to_string(phis.size()) + " closed 2-forms";
  } else {
    c.reason = SymplecticReason::GenericSearchExhausted;
    c.detail = c.search.complete ? "every closed 2-form is degenerate" : "search bound reached";
  }
  finish(c, n);
  return c;
}

SymplecticCertificate symplectic_exists(const LieAlgebra<Q>& g, bool cross_check) {
  const int n = g.dim();
  if (n % 2) throw Error(ErrorCode::OddDimension, "symplectic_exists needs even dimension");
  if (n < 4 || !is_filiform(g)) return symplectic_exists_generic(g);
  SymplecticCertificate c;
  c.path = "structured";
  auto gc = gr_C(g);
  if (!isomorphic_to_m0(gc.algebra())) {
    c.reason = SymplecticReason::GrCNotM0;
    c.detail = "gr_C is not m0(" + std::to_string(n) + "): no closed 2-form pairs the center with the rest";
  } else {
    auto ad = adapted_basis(g);
    if (!ad.alpha.is_zero()) {
      auto gen = symplectic_exists_generic(g);
      gen.detail += " (filtration L undefined, alpha = " + ad.alpha.pretty() + ")";
      return gen;
    }
    try {
      auto s = symplectic_survival(g, ad.change);
      if (s.survives) {
        c.exists = true;
        c.form = *s.lift;
        c.detail = "top-weight class survives to E_infinity (page " + std::to_string(s.page) + ")";
      } else {
        c.reason = SymplecticReason::SpectralObstruction;
        c.detail = "d_" + std::to_string(s.page) + " leaves no symplectic class in E^{" + std::to_string(-(n + 1)) + "," +
                   std::to_string(n + 3) + "}";
      }
      c.survival = std::move(s);
    } catch (const Error& e) {
      if (e.code() != ErrorCode::GrLNotSymplectic) throw;
      c.reason = SymplecticReason::GrLNotSymplectic;
      c.detail = "gr_L has no symplectic class of weight " + std::to_string(n + 1);
    }
  }
  finish(c, n);
  if (cross_check) {
    auto gen = symplectic_exists_generic(g);
    if (gen.search.complete || gen.exists) {
      c.generic_agrees = gen.exists == c.exists;
      if (!*c.generic_agrees) throw Error(ErrorCode::InvariantViolation, "structured and generic symplectic verdicts differ");
    }
    c.search = gen.search;
  }
  return c;
}

std::map<int, Form<Q>> homogeneous_decomposition(const GradedLieAlgebra<Q>& a, const Form<Q>& phi) {
  return weight_components(phi, a.algebra().weights());
}

ContactCertificate contact_check(const LieAlgebra<Q>& g, const Form<Q>& beta) {
  const int n = g.dim();
  if (n % 2 == 0) throw Error(ErrorCode::EvenDimension, "contact forms live on odd-dimensional algebras");
  if (!beta.is_zero() && beta.degree() != 1) throw Error(ErrorCode::InvalidInput, "contact form must be a 1-form");
  ContactCertificate c;
  c.form = beta;
  if (beta.is_zero()) return c;
  c.volume = wedge(beta, wedge_power(differential(g, beta), n / 2));
  c.valid = !c.volume.is_zero();
  return c;
}

Contactization contactize(const LieAlgebra<Q>& g, const Form<Q>& omega) {
  if (g.dim() % 2 || !is_symplectic_form(g, omega)) throw Error(ErrorCode::NotSymplectic, "contactize needs a symplectic form");
  Contactization r;
  r.algebra = central_extension(g, omega);
  r.beta = Form<Q>(1);
  r.beta.add(MultiIndex{g.dim() + 1}, Q(1));
  r.certificate = contact_check(r.algebra, r.beta);
  if (!r.certificate.valid) throw Error(ErrorCode::InvariantViolation, "contactization produced a degenerate form");
  return r;
}

ContactSearch contact_search(const LieAlgebra<Q>& g) {
  const int n = g.dim();
  if (n % 2 == 0) throw Error(ErrorCode::EvenDimension, "contact forms live on odd-dimensional algebras");
  ContactSearch s;
  auto beta_at = [&](const std::vector<Q>& t) {
    Form<Q> b(1);
    for (int i = 0; i < n; ++i) b.add(MultiIndex{i + 1}, t[i]);
    return b;
  };
  auto pt = find_nonvanishing(
      n, n / 2 + 1, [&](const std::vector<Q>& t) { return contact_check(g, beta_at(t)).valid; },
      [&] { return contact_polynomial(g); }, s.search);
  if (pt) {
    s.exists = true;
    s.certificate = contact_check(g, beta_at(*pt));
  }
  return s;
}

bool CatalogCheckReport::ok() const {
  for (const auto& e : entries)
    if (!e.ok()) return false;
  return true;
}

namespace {

std::string alpha_str(const Q& a) { return "alpha=" + a.pretty(); }

double real_root(const std::vector<double>& c, double lo, double hi) {
  auto f = [&](double x) {
    double s = 0;
    for (auto it = c.rbegin(); it != c.rend(); ++it) s = s * x + *it;
    return s;
  };
  for (int i = 0; i < 200; ++i) {
    double mid = 0.5 * (lo + hi);
    if ((f(lo) < 0) == (f(mid) < 0))
      lo = mid;
    else
      hi = mid;
  }
  return 0.5 * (lo + hi);
}

}  // namespace

CatalogCheckReport symplectic_catalog_check() {
  CatalogCheckReport rep;
  auto record = [&](const std::string& name, const std::string& params, bool expected, const LieAlgebra<Q>& g,
                    const std::function<Form<Q>()>& form) {
    CatalogCheckEntry e{name, params, expected, false, ""};
    try {
      Form<Q> w = form();
      e.got = is_symplectic_form(g, w);
      if (e.got) {
        const int k = g.dim() / 2;
        auto top = wedge_power(w, k);
        int lam = top.terms().begin()->first.weight(g.weights());
        if (g.weights() && lam != k * (2 * k + 1)) e.note = "top power weight " + std::to_string(lam);
        // the class, not the representative, decides
        Form<Q> xi(1);
        xi.add(MultiIndex{3}, Q(1));
        xi.add(MultiIndex{g.dim() - 1}, Q(-2));
        if (!is_symplectic_form(g, w + differential(g, xi))) e.note += " omega + d xi degenerate";
      } else {
        e.note = is_cocycle(g, w) ? "degenerate" : "not closed";
      }
    } catch (const Error& x) {
      if (x.code() != ErrorCode::GuardViolated) throw;
      e.got = false;
      e.note = x.what();
    }
    rep.entries.push_back(std::move(e));
  };
  CatalogParams p;
  for (int k = 2; k <= 8; ++k) {
    auto g = catalog::m0(2 * k).algebra();
    for (Q beta : {Q(1), Q(2), Q(-1, 3)}) {
      p = {};
      p.n = 2 * k;
      p.beta = beta;
      record("m0_symplectic", "n=" + std::to_string(2 * k) + " beta=" + beta.pretty(), true, g, [&] { return printed_form("m0_symplectic", p); });
    }
    record("m0_symplectic", "n=" + std::to_string(2 * k) + " beta=0", false, g, [&] { return Form<Q>::monomial({1, 2 * k}); });
  }
  for (int k : {3, 6, 7, 8}) {
    p = {};
    p.n = 2 * k;
    record("V", "n=" + std::to_string(2 * k), true, catalog::V(2 * k).algebra(), [&] { return printed_form("V", p); });
  }
  auto g_entry = [&](int n, const std::string& form_name, const Q& a, bool expected) {
    p = {};
    p.alpha = a;
    LieAlgebra<Q> g;
    try {
      g = catalog::g(n, a).algebra();
    } catch (const Error& x) {
      rep.entries.push_back({form_name, alpha_str(a), expected, false, x.what()});
      return;
    }
    record(form_name, alpha_str(a), expected, g, [&] { return printed_form(form_name, p); });
  };
  for (Q a : {Q(3), Q(0), Q(8), Q(1), Q(-3), Q(2, 3)}) g_entry(8, "g8_cocycle", a, true);
  for (Q a : {Q(-5, 2), Q(-2), Q(-1), Q(1, 2)}) g_entry(8, "g8_cocycle", a, false);
  for (Q a : {Q(0), Q(8), Q(1), Q(2), Q(-1, 2)}) g_entry(10, "g10", a, true);
  for (Q a : {Q(-5, 2), Q(-1, 4), Q(-1), Q(-3)}) g_entry(10, "g10", a, false);

  // which printed omega_9 is closed on g_{8,alpha}
  int display_closed = 0, cocycle_closed = 0, samples = 0;
  for (Q a : {Q(3), Q(0), Q(8), Q(1), Q(-3), Q(2, 3)}) {
    p = {};
    p.alpha = a;
    auto g = catalog::g(8, a).algebra();
    ++samples;
    display_closed += is_cocycle(g, printed_form("g8", p)) ? 1 : 0;
    cocycle_closed += is_cocycle(g, printed_form("g8_cocycle", p)) ? 1 : 0;
  }
  std::ostringstream os;
  os << "omega_9: theorem display closed at " << display_closed << "/" << samples << " samples, H^2_(9) basis formula closed at "
     << cocycle_closed << "/" << samples;
  rep.notes.push_back(os.str());
  // exceptional set of omega_11 read off its coefficients
  Polynomial x = Polynomial::x();
  Polynomial c_shown = Polynomial(2) * x * x * x + Polynomial(2) * x * x + Polynomial(3);
  Polynomial c_text = Polynomial(2) * x * x * x + Polynomial(2) * x + Polynomial(3);
  Polynomial c_38 = Polynomial(4) * x * x * x + Polynomial(8) * x * x - Polynomial(8) * x - Polynomial(21);
  os.str("");
  os << "omega_11 numerators: 2a^3+2a^2+3 has " << rational_roots(c_shown).size() << " rational roots, real root "
     << real_root({3, 0, 2, 2}, -3, 0) << "; 2a^3+2a+3 (as named in the text) has " << rational_roots(c_text).size()
     << " rational roots, real root " << real_root({3, 2, 0, 2}, -3, 0) << "; 4a^3+8a^2-8a-21 has " << rational_roots(c_38).size()
     << " rational roots, real root " << real_root({-21, -8, 8, 4}, 0, 3);
  rep.notes.push_back(os.str());
  return rep;
}

}  // namespace filiform
