#include "filiform/rational.hpp"

#include <stdexcept>

#include "filiform/errors.hpp"

namespace filiform {

Rational::Rational(long num, long den) {
  if (den == 0) throw Error(ErrorCode::InvalidInput, "zero denominator");
  mpq_init(q_);
  if (den < 0) {
    num = -num;
    den = -den;
  }
  mpq_set_si(q_, num, static_cast<unsigned long>(den));
  mpq_canonicalize(q_);
}

Rational Rational::parse(const std::string& s) {
  std::string t;
  for (char c : s)
    if (c != ' ') t += c;
  if (t.empty()) throw Error(ErrorCode::ParseError, "empty rational");
  auto slash = t.find('/');
  auto digits_ok = [](const std::string& x, bool sign_ok) {
    if (x.empty()) return false;
    std::size_t i = 0;
    if (sign_ok && (x[0] == '-' || x[0] == '+')) i = 1;
    if (i == x.size()) return false;
    for (; i < x.size(); ++i)
      if (x[i] < '0' || x[i] > '9') return false;
    return true;
  };
  std::string num = slash == std::string::npos ? t : t.substr(0, slash);
  std::string den = slash == std::string::npos ? "1" : t.substr(slash + 1);
  if (!digits_ok(num, true) || !digits_ok(den, false))
    throw Error(ErrorCode::ParseError, "malformed rational '" + s + "'");
  if (num[0] == '+') num = num.substr(1);
  Rational r;
  mpz_set_str(mpq_numref(r.q_), num.c_str(), 10);
  mpz_set_str(mpq_denref(r.q_), den.c_str(), 10);
  if (mpz_sgn(mpq_denref(r.q_)) == 0) throw Error(ErrorCode::ParseError, "zero denominator in '" + s + "'");
  mpq_canonicalize(r.q_);
  return r;
}

std::size_t Rational::bit_length() const {
  if (is_zero()) return 0;
  return mpz_sizeinbase(mpq_numref(q_), 2) + mpz_sizeinbase(mpq_denref(q_), 2);
}

std::string Rational::to_string() const {
  char* n = mpz_get_str(nullptr, 10, mpq_numref(q_));
  char* d = mpz_get_str(nullptr, 10, mpq_denref(q_));
  std::string s = std::string(n) + "/" + d;
  void (*freefunc)(void*, size_t);
  mp_get_memory_functions(nullptr, nullptr, &freefunc);
  freefunc(n, std::char_traits<char>::length(n) + 1);
  freefunc(d, std::char_traits<char>::length(d) + 1);
  return s;
}

std::string Rational::pretty() const {
  std::string s = to_string();
  if (is_integer()) return s.substr(0, s.find('/'));
  return s;
}

bool Rational::fits_long() const {
  return is_integer() && mpz_fits_slong_p(mpq_numref(q_));
}

Rational Rational::numerator() const {
  Rational r;
  mpq_set_z(r.q_, mpq_numref(q_));
  return r;
}

Rational Rational::denominator() const {
  Rational r;
  mpq_set_z(r.q_, mpq_denref(q_));
  return r;
}

Rational Rational::abs() const {
  Rational r;
  mpq_abs(r.q_, q_);
  return r;
}

Rational Rational::inverse() const {
  if (is_zero()) throw Error(ErrorCode::InvalidInput, "division by zero");
  Rational r;
  mpq_inv(r.q_, q_);
  return r;
}

std::size_t Rational::hash() const {
  std::size_t h = 1469598103934665603ull;
  auto mix = [&h](const mpz_t z) {
    std::size_t n = mpz_size(z);
    for (std::size_t i = 0; i < n; ++i) h = (h ^ mpz_getlimbn(z, i)) * 1099511628211ull;
    h ^= static_cast<std::size_t>(mpz_sgn(z) + 7);
  };
  mix(mpq_numref(q_));
  mix(mpq_denref(q_));
  return h;
}

Rational operator+(const Rational& a, const Rational& b) {
  Rational r;
  mpq_add(r.q_, a.q_, b.q_);
  return r;
}
Rational operator-(const Rational& a, const Rational& b) {
  Rational r;
  mpq_sub(r.q_, a.q_, b.q_);
  return r;
}
Rational operator*(const Rational& a, const Rational& b) {
  Rational r;
  mpq_mul(r.q_, a.q_, b.q_);
  return r;
}
Rational operator/(const Rational& a, const Rational& b) {
  if (b.is_zero()) throw Error(ErrorCode::InvalidInput, "division by zero");
  Rational r;
  mpq_div(r.q_, a.q_, b.q_);
  return r;
}
Rational Rational::operator-() const {
  Rational r;
  mpq_neg(r.q_, q_);
  return r;
}
Rational& Rational::operator/=(const Rational& b) {
  if (b.is_zero()) throw Error(ErrorCode::InvalidInput, "division by zero");
  mpq_div(q_, q_, b.q_);
  return *this;
}

std::ostream& operator<<(std::ostream& os, const Rational& r) { return os << r.pretty(); }

Rational pow(const Rational& base, int e) {
  if (e < 0) return pow(base.inverse(), -e);
  Rational r(1), b = base;
  while (e) {
    if (e & 1) r *= b;
    b *= b;
    e >>= 1;
  }
  return r;
}

Rational content(const std::vector<Rational>& v) {
  mpz_t g, l;
  mpz_init_set_ui(g, 0);
  mpz_init_set_ui(l, 1);
  for (const auto& x : v) {
    mpz_gcd(g, g, mpq_numref(x.raw()));
    mpz_lcm(l, l, mpq_denref(x.raw()));
  }
  Rational r;
  if (mpz_sgn(g) != 0) {
    mpq_set_num(r.raw(), g);
    mpq_set_den(r.raw(), l);
    mpq_canonicalize(r.raw());
  }
  mpz_clear(g);
  mpz_clear(l);
  return r;
}

}  // namespace filiform
