#pragma once

#include <gmp.h>

#include <cstdint>
#include <functional>
#include <ostream>
#include <string>
#include <vector>

#include <Eigen/Core>

namespace filiform {

// Exact rational number, always in lowest terms with positive denominator.
class Rational {
 public:
  Rational() { mpq_init(q_); }
  Rational(long v) { mpq_init(q_); mpq_set_si(q_, v, 1); }
  Rational(int v) : Rational(static_cast<long>(v)) {}
  Rational(long num, long den);
  Rational(const Rational& o) { mpq_init(q_); mpq_set(q_, o.q_); }
  Rational(Rational&& o) noexcept { mpq_init(q_); mpq_swap(q_, o.q_); }
  ~Rational() { mpq_clear(q_); }

  Rational& operator=(const Rational& o) {
    if (this != &o) mpq_set(q_, o.q_);
    return *this;
  }
  Rational& operator=(Rational&& o) noexcept {
    mpq_swap(q_, o.q_);
    return *this;
  }

  static Rational parse(const std::string& s);

  bool is_zero() const { return mpq_sgn(q_) == 0; }
  bool is_one() const { return mpq_cmp_si(q_, 1, 1) == 0; }
  bool is_integer() const { return mpz_cmp_ui(mpq_denref(q_), 1) == 0; }
  int sign() const { return mpq_sgn(q_); }
  // bits(num) + bits(den), the pivot-selection cost
  std::size_t bit_length() const;
  std::string to_string() const;  // "num/den", always with the slash
  std::string pretty() const;     // "num" when integral
  double to_double() const { return mpq_get_d(q_); }
  long num_si() const { return mpz_get_si(mpq_numref(q_)); }
  long den_si() const { return mpz_get_si(mpq_denref(q_)); }
  bool fits_long() const;
  Rational numerator() const;
  Rational denominator() const;
  Rational abs() const;
  Rational inverse() const;
  std::size_t hash() const;

  friend Rational operator+(const Rational& a, const Rational& b);
  friend Rational operator-(const Rational& a, const Rational& b);
  friend Rational operator*(const Rational& a, const Rational& b);
  friend Rational operator/(const Rational& a, const Rational& b);
  Rational operator-() const;
  Rational& operator+=(const Rational& b) { mpq_add(q_, q_, b.q_); return *this; }
  Rational& operator-=(const Rational& b) { mpq_sub(q_, q_, b.q_); return *this; }
  Rational& operator*=(const Rational& b) { mpq_mul(q_, q_, b.q_); return *this; }
  Rational& operator/=(const Rational& b);

  friend bool operator==(const Rational& a, const Rational& b) { return mpq_equal(a.q_, b.q_) != 0; }
  friend bool operator!=(const Rational& a, const Rational& b) { return !(a == b); }
  friend bool operator<(const Rational& a, const Rational& b) { return mpq_cmp(a.q_, b.q_) < 0; }
  friend bool operator>(const Rational& a, const Rational& b) { return b < a; }
  friend bool operator<=(const Rational& a, const Rational& b) { return !(b < a); }
  friend bool operator>=(const Rational& a, const Rational& b) { return !(a < b); }

  const mpq_t& raw() const { return q_; }
  mpq_t& raw() { return q_; }

 private:
  mpq_t q_;
};

std::ostream& operator<<(std::ostream& os, const Rational& r);

Rational pow(const Rational& base, int e);

// gcd of the numerators over lcm of the denominators; v / content(v) is primitive integral
Rational content(const std::vector<Rational>& v);

inline bool is_zero(const Rational& r) { return r.is_zero(); }
inline Rational abs(const Rational& r) { return r.abs(); }
inline Rational abs2(const Rational& r) { return r * r; }
inline std::size_t cost(const Rational& r) { return r.bit_length(); }
inline std::string to_string(const Rational& r) { return r.to_string(); }

using Q = Rational;

}  // namespace filiform

template <>
struct std::hash<filiform::Rational> {
  std::size_t operator()(const filiform::Rational& r) const { return r.hash(); }
};

namespace Eigen {
template <>
struct NumTraits<filiform::Rational> : GenericNumTraits<filiform::Rational> {
  typedef filiform::Rational Real;
  typedef filiform::Rational NonInteger;
  typedef filiform::Rational Nested;
  typedef filiform::Rational Literal;
  enum {
    IsComplex = 0,
    IsInteger = 0,
    IsSigned = 1,
    RequireInitialization = 1,
    ReadCost = 1,
    AddCost = 20,
    MulCost = 40
  };
  static inline Real epsilon() { return Real(0); }
  static inline Real dummy_precision() { return Real(0); }
  static inline Real highest() { return Real(1L << 30); }
  static inline Real lowest() { return Real(-(1L << 30)); }
  static inline int digits10() { return 0; }
};
}  // namespace Eigen
