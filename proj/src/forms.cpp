#include "filiform/forms.hpp"

#include <cstdlib>
#include <random>
#include <sstream>

namespace filiform {

Matrix<Q> form_matrix(const Form<Q>& omega, int n) {
  Matrix<Q> m = Matrix<Q>::Zero(n, n);
  for (const auto& [mi, c] : omega.terms()) {
    auto ij = mi.indices();
    m(ij[0] - 1, ij[1] - 1) = c;
    m(ij[1] - 1, ij[0] - 1) = -c;
  }
  return m;
}

int form_rank(const Form<Q>& omega, int n) {
  if (omega.is_zero()) return 0;
  if (omega.degree() != 2) throw Error(ErrorCode::InvalidInput, "rank is defined for 2-forms");
  return rank(form_matrix(omega, n));
}

bool nondegenerate(const Form<Q>& omega, int n) { return n % 2 == 0 && form_rank(omega, n) == n; }

MPoly::MPoly(int vars, const Q& c) : vars_(vars) {
  if (!c.is_zero()) t_.emplace(Exps(vars, 0), c);
}

MPoly MPoly::var(int vars, int i) {
  MPoly p(vars, Q(0));
  Exps e(vars, 0);
  e[i] = 1;
  p.t_.emplace(e, Q(1));
  return p;
}

void MPoly::add(const Exps& e, const Q& c) {
  if (c.is_zero()) return;
  auto it = t_.find(e);
  if (it == t_.end()) {
    t_.emplace(e, c);
    return;
  }
  it->second += c;
  if (it->second.is_zero()) t_.erase(it);
}

int MPoly::total_degree() const {
  int d = -1;
  for (const auto& [e, c] : t_) {
    int s = 0;
    for (int x : e) s += x;
    d = std::max(d, s);
  }
  return d;
}

Q MPoly::eval(const std::vector<Q>& x) const {
  Q s(0);
  for (const auto& [e, c] : t_) {
    Q m = c;
    for (int i = 0; i < vars_; ++i)
      for (int p = 0; p < e[i]; ++p) m = m * x[i];
    s += m;
  }
  return s;
}

MPoly& MPoly::operator+=(const MPoly& o) {
  if (vars_ == 0) vars_ = o.vars_;
  for (const auto& [e, c] : o.t_) add(e, c);
  return *this;
}

MPoly operator*(const MPoly& a, const MPoly& b) {
  MPoly r(std::max(a.vars_, b.vars_), Q(0));
  for (const auto& [ea, ca] : a.t_)
    for (const auto& [eb, cb] : b.t_) {
      MPoly::Exps e(r.vars_, 0);
      for (int i = 0; i < r.vars_; ++i) e[i] = ea[i] + eb[i];
      r.add(e, ca * cb);
    }
  return r;
}

MPoly operator*(const Q& s, const MPoly& a) {
  MPoly r(a.vars_, Q(0));
  if (s.is_zero()) return r;
  for (const auto& [e, c] : a.t_) r.t_.emplace(e, s * c);
  return r;
}

std::string MPoly::str() const {
  if (t_.empty()) return "0";
  std::ostringstream os;
  bool first = true;
  for (auto it = t_.rbegin(); it != t_.rend(); ++it) {
    const auto& [e, c] = *it;
    if (!first) os << " + ";
    first = false;
    os << c.pretty();
    for (int i = 0; i < vars_; ++i)
      if (e[i]) os << "*t" << i + 1 << (e[i] > 1 ? "^" + std::to_string(e[i]) : "");
  }
  return os.str();
}

namespace {

using PForm = std::map<std::uint32_t, MPoly>;

PForm pwedge(const PForm& a, const PForm& b) {
  PForm r;
  for (const auto& [ma, ca] : a)
    for (const auto& [mb, cb] : b) {
      int s = wedge_sign(ma, mb);
      if (!s) continue;
      MPoly t = ca * cb;
      if (s < 0) t = -t;
      auto it = r.find(ma | mb);
      if (it == r.end())
        r.emplace(ma | mb, std::move(t));
      else
        it->second += t;
    }
  for (auto it = r.begin(); it != r.end();)
    it = it->second.is_zero() ? r.erase(it) : std::next(it);
  return r;
}

MPoly volume_coefficient(const PForm& f, int n) {
  auto it = f.find(n == 32 ? ~0u : (1u << n) - 1);
  return it == f.end() ? MPoly() : it->second;
}

}  // namespace

MPoly top_power_polynomial(const std::vector<Form<Q>>& phis, int n, int k) {
  const int m = static_cast<int>(phis.size());
  PForm omega;
  for (int i = 0; i < m; ++i)
    for (const auto& [mi, c] : phis[i].terms()) omega[mi.mask()] += c * MPoly::var(m, i);
  PForm acc{{0u, MPoly(m, Q(1))}};
  for (int j = 0; j < k; ++j) acc = pwedge(acc, omega);
  return volume_coefficient(acc, n);
}

MPoly contact_polynomial(const LieAlgebra<Q>& g) {
  const int n = g.dim(), k = (n - 1) / 2;
  CochainComplex<Q> cx(g);
  PForm beta, dbeta;
  for (int i = 0; i < n; ++i) {
    auto t = MPoly::var(n, i);
    beta[1u << i] = t;
    const Form<Q> de = cx.de(i + 1);
    for (const auto& [mi, c] : de.terms()) dbeta[mi.mask()] += c * t;
  }
  for (auto it = dbeta.begin(); it != dbeta.end();)
    it = it->second.is_zero() ? dbeta.erase(it) : std::next(it);
  PForm acc = beta;
  for (int j = 0; j < k; ++j) acc = pwedge(acc, dbeta);
  return volume_coefficient(acc, n);
}

long max_grid() {
  if (const char* s = std::getenv("FILIFORM_MAX_GRID")) {
    char* end = nullptr;
    long v = std::strtol(s, &end, 10);
    if (end != s && v >= 0) return v;
  }
  return 200000;
}

std::optional<std::vector<Q>> find_nonvanishing(int vars, int degree, const std::function<bool(const std::vector<Q>&)>& nonzero_at,
                                                const std::function<MPoly()>& symbolic, SearchCertificate& cert) {
  cert = SearchCertificate{};
  cert.grid_limit = max_grid();
  auto attempt = [&](const std::vector<Q>& t) {
    ++cert.points_tried;
    if (!nonzero_at(t)) return false;
    cert.point = t;
    return true;
  };
  cert.method = "point";
  if (attempt(std::vector<Q>(vars, Q(1)))) return cert.point;
  {
    static const int primes[] = {2, 3, 5, 7, 11, 13, 17, 19, 23, 29, 31, 37, 41, 43, 47, 53, 59, 61, 67, 71, 73, 79, 83, 89, 97};
    std::vector<Q> t;
    for (int i = 0; i < vars; ++i) t.push_back(Q(primes[i % 25] + 100 * (i / 25)));
    if (attempt(t)) return cert.point;
  }
  long size = 1;
  for (int i = 0; i < vars && size >= 0; ++i) size = (size > cert.grid_limit / (degree + 1) + 1) ? -1 : size * (degree + 1);
  cert.grid_size = size;
  if (size >= 0 && size <= cert.grid_limit) {
    cert.method = "grid";
    std::vector<int> c(vars, 0);
    std::vector<Q> t(vars, Q(0));
    while (true) {
      if (attempt(t)) return cert.point;
      int i = 0;
      while (i < vars && c[i] == degree) {
        c[i] = 0;
        t[i] = Q(0);
        ++i;
      }
      if (i == vars) break;
      ++c[i];
      t[i] = Q(c[i]);
    }
    cert.complete = true;
    return std::nullopt;
  }
  cert.method = "symbolic";
  MPoly p = symbolic();
  cert.polynomial = p.str();
  if (p.is_zero()) {
    cert.complete = true;
    return std::nullopt;
  }
  std::mt19937 rng(12345);
  std::uniform_int_distribution<int> d(1, 1000);
  for (int tries = 0; tries < 10000; ++tries) {
    std::vector<Q> t;
    for (int i = 0; i < vars; ++i) t.push_back(Q(d(rng)));
    if (p.eval(t).is_zero()) continue;
    if (attempt(t)) return cert.point;
    throw Error(ErrorCode::InvariantViolation, "symbolic and direct evaluation disagree");
  }
  throw Error(ErrorCode::InvariantViolation, "no nonvanishing point found for a nonzero polynomial");
}

std::optional<Form<Q>> find_nondegenerate(const std::vector<Form<Q>>& phis, int n, SearchCertificate& cert) {
  cert = SearchCertificate{};
  if (n % 2 != 0 || phis.empty()) {
    cert.method = "none";
    cert.complete = true;
    return std::nullopt;
  }
  const int m = static_cast<int>(phis.size());
  auto combine = [&](const std::vector<Q>& t) {
    Form<Q> w(2);
    for (int i = 0; i < m; ++i) w += t[i] * phis[i];
    return w;
  };
  auto pt = find_nonvanishing(
      m, n / 2, [&](const std::vector<Q>& t) { return nondegenerate(combine(t), n); },
      [&] { return top_power_polynomial(phis, n, n / 2); }, cert);
  if (!pt) return std::nullopt;
  return combine(*pt);
}

std::optional<Form<Q>> find_nondegenerate(const std::vector<Form<Q>>& phis, int n) {
  SearchCertificate c;
  return find_nondegenerate(phis, n, c);
}

}  // namespace filiform
