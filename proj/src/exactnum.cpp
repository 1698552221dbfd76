#include "resonaut/exactnum.hpp"

#include "resonaut/detail/expression_parser.hpp"

#include <utility>

namespace resonaut {

std::string to_string(const Rational& q) { return q.get_str(); }

Rational parse_rational(std::string_view text) {
  std::string s(text);
  Rational q;
  if (s.empty() || q.set_str(s, 10) != 0) throw StructuralError("malformed rational \"" + s + "\"");
  if (q.get_den() == 0) throw DivisionByZero("zero denominator in \"" + s + "\"");
  q.canonicalize();
  return q;
}

Rational inverse(const Rational& q) {
  if (sgn(q) == 0) throw DivisionByZero("inverse of zero rational");
  return Rational(1) / q;
}

bool is_prime(long n) {
  if (n < 2) return false;
  for (long d = 2; d * d <= n; ++d)
    if (n % d == 0) return false;
  return true;
}

namespace {

using Dense = std::vector<Rational>;

void trim(Dense& p) {
  while (!p.empty() && sgn(p.back()) == 0) p.pop_back();
}

// Quotient and remainder of univariate polynomials over Q (ascending coefficients).
std::pair<Dense, Dense> divide(Dense num, const Dense& den) {
  trim(num);
  Dense quot;
  if (num.size() < den.size()) return {quot, num};
  quot.assign(num.size() - den.size() + 1, Rational(0));
  const Rational& lead = den.back();
  for (std::size_t i = num.size(); i-- >= den.size();) {
    Rational c = num[i] / lead;
    if (sgn(c) == 0) continue;
    std::size_t shift = i - (den.size() - 1);
    quot[shift] = c;
    for (std::size_t j = 0; j < den.size(); ++j) num[shift + j] -= c * den[j];
    if (i == 0) break;
  }
  trim(num);
  trim(quot);
  return {quot, num};
}

Dense mul(const Dense& a, const Dense& b) {
  if (a.empty() || b.empty()) return {};
  Dense out(a.size() + b.size() - 1, Rational(0));
  for (std::size_t i = 0; i < a.size(); ++i)
    for (std::size_t j = 0; j < b.size(); ++j) out[i + j] += a[i] * b[j];
  trim(out);
  return out;
}

Dense sub(Dense a, const Dense& b) {
  if (a.size() < b.size()) a.resize(b.size(), Rational(0));
  for (std::size_t i = 0; i < b.size(); ++i) a[i] -= b[i];
  trim(a);
  return a;
}

}  // namespace

Cyclotomic::Cyclotomic(int order) : order_(order) {
  if (!is_prime(order)) throw StructuralError("cyclotomic order must be prime, got " + std::to_string(order));
  coeffs_.assign(static_cast<std::size_t>(order - 1), Rational(0));
}

Cyclotomic::Cyclotomic(int order, const Rational& value) : Cyclotomic(order) { coeffs_[0] = value; }

Cyclotomic::Cyclotomic(int order, std::vector<Rational> coeffs) : Cyclotomic(order) {
  reduce_from(std::move(coeffs));
}

void Cyclotomic::reduce_from(std::vector<Rational> raw) {
  // Fold modulo x^n - 1, then eliminate x^(n-1) = -(1 + x + ... + x^(n-2)).
  const auto n = static_cast<std::size_t>(order_);
  std::vector<Rational> folded(n, Rational(0));
  for (std::size_t i = 0; i < raw.size(); ++i) {
    raw[i].canonicalize();
    folded[i % n] += raw[i];
  }
  const Rational top = folded[n - 1];
  for (std::size_t i = 0; i + 1 < n; ++i) coeffs_[i] = folded[i] - top;
}

Cyclotomic Cyclotomic::zeta(int order) { return zeta_power(order, 1); }

Cyclotomic Cyclotomic::zeta_power(int order, long k) {
  long r = ((k % order) + order) % order;
  std::vector<Rational> raw(static_cast<std::size_t>(r + 1), Rational(0));
  raw[static_cast<std::size_t>(r)] = 1;
  return Cyclotomic(order, std::move(raw));
}

bool Cyclotomic::is_zero() const {
  for (const auto& c : coeffs_)
    if (sgn(c) != 0) return false;
  return true;
}

bool Cyclotomic::is_rational() const {
  for (std::size_t i = 1; i < coeffs_.size(); ++i)
    if (sgn(coeffs_[i]) != 0) return false;
  return true;
}

int Cyclotomic::support_size() const {
  int k = 0;
  for (const auto& c : coeffs_)
    if (sgn(c) != 0) ++k;
  return k;
}

void Cyclotomic::check_same_order(const Cyclotomic& other) const {
  if (order_ != other.order_)
    throw StructuralError("cyclotomic order mismatch: " + std::to_string(order_) + " vs " +
                          std::to_string(other.order_));
}

Cyclotomic& Cyclotomic::operator+=(const Cyclotomic& rhs) {
  check_same_order(rhs);
  for (std::size_t i = 0; i < coeffs_.size(); ++i) coeffs_[i] += rhs.coeffs_[i];
  return *this;
}

Cyclotomic& Cyclotomic::operator-=(const Cyclotomic& rhs) {
  check_same_order(rhs);
  for (std::size_t i = 0; i < coeffs_.size(); ++i) coeffs_[i] -= rhs.coeffs_[i];
  return *this;
}

Cyclotomic& Cyclotomic::operator*=(const Cyclotomic& rhs) {
  check_same_order(rhs);
  const std::size_t m = coeffs_.size();
  if (m == 1) {
    coeffs_[0] *= rhs.coeffs_[0];
    return *this;
  }
  std::vector<Rational> raw(2 * m - 1, Rational(0));
  for (std::size_t i = 0; i < m; ++i) {
    if (sgn(coeffs_[i]) == 0) continue;
    for (std::size_t j = 0; j < m; ++j) {
      if (sgn(rhs.coeffs_[j]) == 0) continue;
      raw[i + j] += coeffs_[i] * rhs.coeffs_[j];
    }
  }
  reduce_from(std::move(raw));
  return *this;
}

Cyclotomic& Cyclotomic::operator*=(const Rational& rhs) {
  for (auto& c : coeffs_) c *= rhs;
  return *this;
}

Cyclotomic& Cyclotomic::operator/=(const Cyclotomic& rhs) { return *this *= inverse(rhs); }

Cyclotomic Cyclotomic::operator-() const {
  Cyclotomic out(*this);
  for (auto& c : out.coeffs_) c = -c;
  return out;
}

bool operator==(const Cyclotomic& a, const Cyclotomic& b) {
  return a.order_ == b.order_ && a.coeffs_ == b.coeffs_;
}

Cyclotomic Cyclotomic::pow(long e) const {
  if (e < 0) return inverse(*this).pow(-e);
  Cyclotomic result(order_, Rational(1));
  Cyclotomic base(*this);
  while (e > 0) {
    if (e & 1) result *= base;
    base *= base;
    e >>= 1;
  }
  return result;
}

Cyclotomic inverse(const Cyclotomic& a) {
  if (a.is_zero()) throw DivisionByZero("inverse of zero in Q(zeta)");
  const int n = a.order();
  Dense modulus(static_cast<std::size_t>(n), Rational(1));  // 1 + x + ... + x^(n-1)
  Dense value = a.coefficients();
  trim(value);

  // Extended Euclid tracking only the cofactor of `value`.
  Dense r0 = modulus, r1 = value;
  Dense s0, s1{Rational(1)};
  while (!r1.empty() && r1.size() > 1) {
    auto [q, r] = divide(r0, r1);
    Dense s2 = sub(s0, mul(q, s1));
    r0 = std::move(r1);
    r1 = std::move(r);
    s0 = std::move(s1);
    s1 = std::move(s2);
  }
  // r1 is now a nonzero constant since the modulus is irreducible.
  if (r1.empty()) throw DivisionByZero("element shares a factor with the cyclotomic polynomial");
  Rational c = inverse(r1[0]);
  for (auto& x : s1) x *= c;
  return Cyclotomic(n, s1);
}

std::string to_string(const Cyclotomic& a) {
  std::string out;
  const auto& cs = a.coefficients();
  for (std::size_t i = 0; i < cs.size(); ++i) {
    if (sgn(cs[i]) == 0) continue;
    Rational mag = abs(cs[i]);
    bool neg = sgn(cs[i]) < 0;
    if (out.empty()) {
      if (neg) out += "-";
    } else {
      out += neg ? " - " : " + ";
    }
    if (i == 0) {
      out += to_string(mag);
    } else {
      if (mag != 1) out += to_string(mag) + "*";
      out += "zeta";
      if (i > 1) out += "^" + std::to_string(i);
    }
  }
  return out.empty() ? "0" : out;
}

Cyclotomic parse_cyclotomic(int order, std::string_view text) {
  detail::ExpressionParser<Cyclotomic> parser(
      text, [order](const Rational& q) { return Cyclotomic(order, q); },
      [order](const std::string& id) {
        if (id != "zeta") throw StructuralError("unknown symbol \"" + id + "\" in cyclotomic text");
        return Cyclotomic::zeta(order);
      });
  return parser.parse();
}

}  // namespace resonaut
