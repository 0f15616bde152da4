#include "filiform/polynomial.hpp"

#include <algorithm>
#include <map>
#include <sstream>

#include "filiform/errors.hpp"

namespace filiform {

Polynomial::Polynomial(const Rational& c) {
  if (!c.is_zero()) c_.push_back(c);
}

Polynomial::Polynomial(std::vector<Rational> coeffs) : c_(std::move(coeffs)) { trim(); }

Polynomial Polynomial::x() { return Polynomial(std::vector<Rational>{Rational(0), Rational(1)}); }

void Polynomial::trim() {
  while (!c_.empty() && c_.back().is_zero()) c_.pop_back();
}

Rational Polynomial::eval(const Rational& t) const {
  Rational r;
  for (auto it = c_.rbegin(); it != c_.rend(); ++it) r = r * t + *it;
  return r;
}

Polynomial Polynomial::monic() const {
  if (is_zero()) return *this;
  Polynomial p = *this;
  Rational l = lead();
  for (auto& c : p.c_) c /= l;
  return p;
}

std::size_t Polynomial::cost() const {
  std::size_t s = 0;
  for (const auto& c : c_) s += c.bit_length();
  return s + c_.size();
}

std::string Polynomial::to_string(const std::string& var) const {
  if (is_zero()) return "0";
  std::ostringstream os;
  bool first = true;
  for (int i = degree(); i >= 0; --i) {
    const Rational& c = c_[i];
    if (c.is_zero()) continue;
    Rational a = c.abs();
    if (first) {
      if (c.sign() < 0) os << "-";
    } else {
      os << (c.sign() < 0 ? " - " : " + ");
    }
    first = false;
    bool unit = a.is_one();
    if (!unit || i == 0) os << a.pretty();
    if (i > 0) {
      if (!unit) os << "*";
      os << var;
      if (i > 1) os << "^" << i;
    }
  }
  return os.str();
}

Polynomial operator+(const Polynomial& a, const Polynomial& b) {
  std::vector<Rational> c(std::max(a.c_.size(), b.c_.size()));
  for (std::size_t i = 0; i < c.size(); ++i) c[i] = a.coeff(static_cast<int>(i)) + b.coeff(static_cast<int>(i));
  return Polynomial(std::move(c));
}

Polynomial operator-(const Polynomial& a, const Polynomial& b) { return a + (-b); }

Polynomial Polynomial::operator-() const {
  Polynomial p = *this;
  for (auto& c : p.c_) c = -c;
  return p;
}

Polynomial operator*(const Polynomial& a, const Polynomial& b) {
  if (a.is_zero() || b.is_zero()) return Polynomial();
  std::vector<Rational> c(a.c_.size() + b.c_.size() - 1);
  for (std::size_t i = 0; i < a.c_.size(); ++i) {
    if (a.c_[i].is_zero()) continue;
    for (std::size_t j = 0; j < b.c_.size(); ++j) c[i + j] += a.c_[i] * b.c_[j];
  }
  return Polynomial(std::move(c));
}

void Polynomial::divmod(const Polynomial& a, const Polynomial& b, Polynomial& q, Polynomial& r) {
  if (b.is_zero()) throw Error(ErrorCode::InvalidInput, "polynomial division by zero");
  r = a;
  int db = b.degree();
  std::vector<Rational> qc(std::max(0, a.degree() - db + 1));
  while (!r.is_zero() && r.degree() >= db) {
    int s = r.degree() - db;
    Rational f = r.lead() / b.lead();
    qc[s] = f;
    for (int i = 0; i <= db; ++i) r.c_[i + s] -= f * b.c_[i];
    r.trim();
  }
  q = Polynomial(std::move(qc));
}

Polynomial Polynomial::gcd(Polynomial a, Polynomial b) {
  while (!b.is_zero()) {
    Polynomial q, r;
    divmod(a, b, q, r);
    a = std::move(b);
    b = std::move(r);
  }
  return a.monic();
}

std::ostream& operator<<(std::ostream& os, const Polynomial& p) { return os << p.to_string(); }

namespace {

struct Z {
  mpz_t v;
  Z() { mpz_init(v); }
  explicit Z(unsigned long x) { mpz_init_set_ui(v, x); }
  Z(const Z& o) { mpz_init_set(v, o.v); }
  Z& operator=(const Z& o) {
    mpz_set(v, o.v);
    return *this;
  }
  ~Z() { mpz_clear(v); }
  bool operator<(const Z& o) const { return mpz_cmp(v, o.v) < 0; }
};

void pollard(const Z& n, std::map<Z, int>& out);

void factor_rec(const Z& n, std::map<Z, int>& out) {
  if (mpz_cmp_ui(n.v, 1) == 0) return;
  if (mpz_probab_prime_p(n.v, 30) > 0) {
    out[n]++;
    return;
  }
  pollard(n, out);
}

void pollard(const Z& n, std::map<Z, int>& out) {
  for (unsigned long c = 1;; ++c) {
    Z x(2), y(2), d(1), t;
    auto f = [&](Z& z) {
      mpz_mul(z.v, z.v, z.v);
      mpz_add_ui(z.v, z.v, c);
      mpz_mod(z.v, z.v, n.v);
    };
    while (mpz_cmp_ui(d.v, 1) == 0) {
      f(x);
      f(y);
      f(y);
      mpz_sub(t.v, x.v, y.v);
      mpz_abs(t.v, t.v);
      mpz_gcd(d.v, t.v, n.v);
    }
    if (mpz_cmp(d.v, n.v) != 0) {
      Z e;
      mpz_divexact(e.v, n.v, d.v);
      factor_rec(d, out);
      factor_rec(e, out);
      return;
    }
  }
}

std::map<Z, int> factorize(const mpz_t n0) {
  std::map<Z, int> out;
  Z n;
  mpz_abs(n.v, n0);
  for (unsigned long p = 2; p < 2000; ++p) {
    if (mpz_cmp_ui(n.v, 1) == 0) break;
    while (mpz_divisible_ui_p(n.v, p)) {
      out[Z(p)]++;
      mpz_divexact_ui(n.v, n.v, p);
    }
  }
  factor_rec(n, out);
  return out;
}

std::vector<Rational> divisors(const mpz_t n) {
  std::vector<Rational> ds{Rational(1)};
  for (const auto& [p, e] : factorize(n)) {
    Rational rp;
    mpq_set_z(rp.raw(), p.v);
    std::size_t m = ds.size();
    Rational pk(1);
    for (int k = 1; k <= e; ++k) {
      pk *= rp;
      for (std::size_t i = 0; i < m; ++i) ds.push_back(ds[i] * pk);
    }
  }
  return ds;
}

}  // namespace

std::vector<Rational> rational_roots(const Polynomial& p0) {
  std::vector<Rational> roots;
  if (p0.degree() <= 0) return roots;
  // integer coefficients
  Z l(1);
  for (const auto& c : p0.coeffs()) mpz_lcm(l.v, l.v, mpq_denref(c.raw()));
  Rational lq;
  mpq_set_z(lq.raw(), l.v);
  std::vector<Rational> c = p0.coeffs();
  for (auto& x : c) x *= lq;
  std::size_t shift = 0;
  while (shift < c.size() && c[shift].is_zero()) ++shift;
  if (shift > 0) roots.push_back(Rational(0));
  c.erase(c.begin(), c.begin() + static_cast<long>(shift));
  Polynomial p(c);
  if (p.degree() >= 1) {
    auto num = divisors(mpq_numref(p.coeffs().front().raw()));
    auto den = divisors(mpq_numref(p.lead().raw()));
    std::vector<Rational> cand;
    for (const auto& a : num)
      for (const auto& b : den) {
        cand.push_back(a / b);
        cand.push_back(-(a / b));
      }
    std::sort(cand.begin(), cand.end());
    cand.erase(std::unique(cand.begin(), cand.end()), cand.end());
    for (const auto& r : cand)
      if (p.eval(r).is_zero()) roots.push_back(r);
  }
  std::sort(roots.begin(), roots.end());
  return roots;
}

RationalFunction::RationalFunction(const Polynomial& num, const Polynomial& den) {
  if (den.is_zero()) throw Error(ErrorCode::InvalidInput, "rational function with zero denominator");
  if (num.is_zero()) {
    den_ = Polynomial(1);
    return;
  }
  Polynomial g = Polynomial::gcd(num, den);
  Polynomial q, r;
  Polynomial::divmod(num, g, num_, r);
  Polynomial::divmod(den, g, den_, r);
  Rational l = den_.lead();
  if (!l.is_one()) {
    num_ = num_ * Polynomial(l.inverse());
    den_ = den_.monic();
  }
}

std::optional<Rational> RationalFunction::eval(const Rational& t) const {
  Rational d = den_.eval(t);
  if (d.is_zero()) return std::nullopt;
  return num_.eval(t) / d;
}

std::string RationalFunction::to_string(const std::string& var) const {
  if (den_.degree() == 0) return num_.to_string(var);
  return "(" + num_.to_string(var) + ")/(" + den_.to_string(var) + ")";
}

RationalFunction operator+(const RationalFunction& a, const RationalFunction& b) {
  if (a.den_ == b.den_) return RationalFunction(a.num_ + b.num_, a.den_);
  return RationalFunction(a.num_ * b.den_ + b.num_ * a.den_, a.den_ * b.den_);
}
RationalFunction operator-(const RationalFunction& a, const RationalFunction& b) { return a + (-b); }
RationalFunction operator*(const RationalFunction& a, const RationalFunction& b) {
  if (a.is_zero() || b.is_zero()) return RationalFunction();
  if (a.den_.degree() == 0 && b.den_.degree() == 0) return RationalFunction(a.num_ * b.num_, Polynomial(1), true);
  return RationalFunction(a.num_ * b.num_, a.den_ * b.den_);
}
RationalFunction operator/(const RationalFunction& a, const RationalFunction& b) {
  if (b.is_zero()) throw Error(ErrorCode::InvalidInput, "division by zero rational function");
  return RationalFunction(a.num_ * b.den_, a.den_ * b.num_);
}

std::ostream& operator<<(std::ostream& os, const RationalFunction& f) { return os << f.to_string(); }

}  // namespace filiform
