#pragma once

#include <gmpxx.h>

#include <stdexcept>
#include <string>
#include <string_view>
#include <vector>

namespace resonaut {

/// Raised when operands live in incompatible structures (different cyclotomic
/// orders, rings, vector lengths) or an argument violates a structural precondition.
class StructuralError : public std::invalid_argument {
public:
  using std::invalid_argument::invalid_argument;
};

class DivisionByZero : public std::domain_error {
public:
  using std::domain_error::domain_error;
};

/// Arbitrary-precision rational, always kept canonical (gcd 1, positive denominator).
using Rational = mpq_class;

std::string to_string(const Rational& q);
Rational parse_rational(std::string_view text);
Rational inverse(const Rational& q);
inline bool is_zero(const Rational& q) { return sgn(q) == 0; }

bool is_prime(long n);

/// Exact element of Q(zeta_n), n prime, in the basis 1, zeta, ..., zeta^(n-2).
///
/// The representation is unique because 1 + zeta + ... + zeta^(n-1) = 0 is the
/// minimal polynomial relation. For n = 2 the field is Q and zeta = -1.
class Cyclotomic {
public:
  /// Zero of Q(zeta_order).
  explicit Cyclotomic(int order);
  Cyclotomic(int order, const Rational& value);
  /// Takes coefficients of 1, zeta, zeta^2, ...; any length, reduced on entry.
  Cyclotomic(int order, std::vector<Rational> coeffs);

  static Cyclotomic zeta(int order);
  /// zeta^k for any integer k (negative allowed).
  static Cyclotomic zeta_power(int order, long k);

  int order() const { return order_; }
  const std::vector<Rational>& coefficients() const { return coeffs_; }

  bool is_zero() const;
  bool is_rational() const;
  /// Number of nonzero basis coefficients.
  int support_size() const;

  Cyclotomic& operator+=(const Cyclotomic& rhs);
  Cyclotomic& operator-=(const Cyclotomic& rhs);
  Cyclotomic& operator*=(const Cyclotomic& rhs);
  Cyclotomic& operator/=(const Cyclotomic& rhs);
  Cyclotomic& operator*=(const Rational& rhs);

  friend Cyclotomic operator+(Cyclotomic a, const Cyclotomic& b) { return a += b; }
  friend Cyclotomic operator-(Cyclotomic a, const Cyclotomic& b) { return a -= b; }
  friend Cyclotomic operator*(Cyclotomic a, const Cyclotomic& b) { return a *= b; }
  friend Cyclotomic operator/(Cyclotomic a, const Cyclotomic& b) { return a /= b; }
  friend Cyclotomic operator*(Cyclotomic a, const Rational& b) { return a *= b; }
  Cyclotomic operator-() const;

  friend bool operator==(const Cyclotomic& a, const Cyclotomic& b);
  friend bool operator!=(const Cyclotomic& a, const Cyclotomic& b) { return !(a == b); }

  Cyclotomic pow(long e) const;

private:
  void check_same_order(const Cyclotomic& other) const;
  void reduce_from(std::vector<Rational> raw);

  int order_;
  std::vector<Rational> coeffs_;
};

/// Inverse via extended Euclid against 1 + x + ... + x^(n-1).
Cyclotomic inverse(const Cyclotomic& a);
inline bool is_zero(const Cyclotomic& a) { return a.is_zero(); }

/// Text form in the variable "zeta", ascending powers, e.g. "-1 - zeta", "2/3 + 1/3*zeta".
std::string to_string(const Cyclotomic& a);
Cyclotomic parse_cyclotomic(int order, std::string_view text);

inline Cyclotomic to_cyclotomic(const Rational& q, int order) { return Cyclotomic(order, q); }
inline const Cyclotomic& to_cyclotomic(const Cyclotomic& c, int order) {
  if (c.order() != order) throw StructuralError("cyclotomic order mismatch");
  return c;
}

}  // namespace resonaut
