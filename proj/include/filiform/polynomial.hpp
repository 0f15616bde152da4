#pragma once

#include <optional>
#include <ostream>
#include <string>
#include <vector>

#include "filiform/rational.hpp"

namespace filiform {

// Univariate polynomial over Q, coefficients stored from degree 0 upwards.
class Polynomial {
 public:
  Polynomial() = default;
  Polynomial(const Rational& c);
  Polynomial(long c) : Polynomial(Rational(c)) {}
  Polynomial(int c) : Polynomial(Rational(c)) {}
  explicit Polynomial(std::vector<Rational> coeffs);
  static Polynomial x();

  int degree() const { return static_cast<int>(c_.size()) - 1; }  // -1 for zero
  bool is_zero() const { return c_.empty(); }
  const std::vector<Rational>& coeffs() const { return c_; }
  Rational coeff(int i) const { return i >= 0 && i < static_cast<int>(c_.size()) ? c_[i] : Rational(0); }
  const Rational& lead() const { return c_.back(); }
  Rational eval(const Rational& t) const;
  Polynomial monic() const;
  std::size_t cost() const;
  std::string to_string(const std::string& var = "x") const;

  friend Polynomial operator+(const Polynomial& a, const Polynomial& b);
  friend Polynomial operator-(const Polynomial& a, const Polynomial& b);
  friend Polynomial operator*(const Polynomial& a, const Polynomial& b);
  Polynomial operator-() const;
  friend bool operator==(const Polynomial& a, const Polynomial& b) { return a.c_ == b.c_; }
  friend bool operator!=(const Polynomial& a, const Polynomial& b) { return !(a == b); }

  // a = q*b + r with deg r < deg b
  static void divmod(const Polynomial& a, const Polynomial& b, Polynomial& q, Polynomial& r);
  static Polynomial gcd(Polynomial a, Polynomial b);  // monic, gcd(0,0) = 0

 private:
  void trim();
  std::vector<Rational> c_;
};

// All distinct rational roots, ascending. The zero polynomial has none by convention.
std::vector<Rational> rational_roots(const Polynomial& p);

// Element of Q(x): num/den with den monic and gcd(num, den) = 1.
class RationalFunction {
 public:
  RationalFunction() : den_(Polynomial(1)) {}
  RationalFunction(const Rational& c) : num_(c), den_(Polynomial(1)) {}
  RationalFunction(long c) : RationalFunction(Rational(c)) {}
  RationalFunction(int c) : RationalFunction(Rational(c)) {}
  RationalFunction(const Polynomial& p) : num_(p), den_(Polynomial(1)) {}
  RationalFunction(const Polynomial& num, const Polynomial& den);
  static RationalFunction x() { return RationalFunction(Polynomial::x()); }

  const Polynomial& num() const { return num_; }
  const Polynomial& den() const { return den_; }
  bool is_zero() const { return num_.is_zero(); }
  bool is_constant() const { return num_.degree() <= 0 && den_.degree() == 0; }
  Rational constant() const { return num_.coeff(0); }
  // value at t, nullopt at a pole
  std::optional<Rational> eval(const Rational& t) const;
  std::size_t cost() const { return num_.cost() + den_.cost(); }
  std::string to_string(const std::string& var = "x") const;

  friend RationalFunction operator+(const RationalFunction& a, const RationalFunction& b);
  friend RationalFunction operator-(const RationalFunction& a, const RationalFunction& b);
  friend RationalFunction operator*(const RationalFunction& a, const RationalFunction& b);
  friend RationalFunction operator/(const RationalFunction& a, const RationalFunction& b);
  RationalFunction operator-() const { return RationalFunction(-num_, den_, true); }
  RationalFunction& operator+=(const RationalFunction& b) { return *this = *this + b; }
  RationalFunction& operator-=(const RationalFunction& b) { return *this = *this - b; }
  RationalFunction& operator*=(const RationalFunction& b) { return *this = *this * b; }
  RationalFunction& operator/=(const RationalFunction& b) { return *this = *this / b; }
  friend bool operator==(const RationalFunction& a, const RationalFunction& b) {
    return a.num_ == b.num_ && a.den_ == b.den_;
  }
  friend bool operator!=(const RationalFunction& a, const RationalFunction& b) { return !(a == b); }

 private:
  RationalFunction(Polynomial num, Polynomial den, bool) : num_(std::move(num)), den_(std::move(den)) {}
  Polynomial num_, den_;
};

std::ostream& operator<<(std::ostream& os, const Polynomial& p);
std::ostream& operator<<(std::ostream& os, const RationalFunction& f);

inline bool is_zero(const RationalFunction& f) { return f.is_zero(); }
inline std::size_t cost(const RationalFunction& f) { return f.cost(); }
inline std::string to_string(const RationalFunction& f) { return f.to_string("b"); }

using QX = RationalFunction;

}  // namespace filiform

namespace Eigen {
template <>
struct NumTraits<filiform::RationalFunction> : GenericNumTraits<filiform::RationalFunction> {
  typedef filiform::RationalFunction Real;
  typedef filiform::RationalFunction NonInteger;
  typedef filiform::RationalFunction Nested;
  typedef filiform::RationalFunction Literal;
  enum {
    IsComplex = 0,
    IsInteger = 0,
    IsSigned = 1,
    RequireInitialization = 1,
    ReadCost = 1,
    AddCost = 200,
    MulCost = 400
  };
  static inline Real epsilon() { return Real(0); }
  static inline Real dummy_precision() { return Real(0); }
  static inline Real highest() { return Real(1L << 30); }
  static inline Real lowest() { return Real(-(1L << 30)); }
  static inline int digits10() { return 0; }
};
}  // namespace Eigen
