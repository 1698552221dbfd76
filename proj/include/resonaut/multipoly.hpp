#pragma once

#include "resonaut/exactnum.hpp"

#include <map>
#include <memory>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

namespace resonaut {

using Exponent = std::vector<int>;

enum class OrderKind { Lex, DegLex, DegRevLex };

struct OrderBlock {
  std::vector<int> vars;  // variable indices, most significant first
  OrderKind kind;
};

/// Product (block) order; a single block covering every variable is a plain order.
class MonomialOrder {
public:
  MonomialOrder() = default;
  explicit MonomialOrder(std::vector<OrderBlock> blocks) : blocks_(std::move(blocks)) {}

  static MonomialOrder simple(OrderKind kind, int nvars);

  /// <0, 0, >0 as a is smaller, equal, bigger than b.
  int compare(const Exponent& a, const Exponent& b) const;
  bool less(const Exponent& a, const Exponent& b) const { return compare(a, b) < 0; }

  const std::vector<OrderBlock>& blocks() const { return blocks_; }
  void validate(int nvars) const;

  friend bool operator==(const MonomialOrder& a, const MonomialOrder& b);

private:
  std::vector<OrderBlock> blocks_;
};

bool operator==(const OrderBlock& a, const OrderBlock& b);

struct Ring {
  std::vector<std::string> names;
  int cyclotomic_order = 0;  // 0 means the coefficient field is Q
  MonomialOrder order;

  int nvars() const { return static_cast<int>(names.size()); }
  std::optional<int> find(std::string_view name) const;
  int index_of(std::string_view name) const;

  friend bool operator==(const Ring& a, const Ring& b) {
    return a.names == b.names && a.cyclotomic_order == b.cyclotomic_order && a.order == b.order;
  }
};

using RingPtr = std::shared_ptr<const Ring>;

RingPtr make_ring(std::vector<std::string> names, MonomialOrder order, int cyclotomic_order = 0);
RingPtr make_ring(std::vector<std::string> names, OrderKind kind = OrderKind::DegLex,
                  int cyclotomic_order = 0);
/// Same variables and field, different order.
RingPtr with_order(const RingPtr& ring, MonomialOrder order);

// Exponent-vector helpers.
int total_degree(const Exponent& e);
bool divides(const Exponent& a, const Exponent& b);
Exponent lcm(const Exponent& a, const Exponent& b);
Exponent operator+(const Exponent& a, const Exponent& b);
/// b - a, requires divides(a, b).
Exponent quotient(const Exponent& b, const Exponent& a);
bool coprime(const Exponent& a, const Exponent& b);

template <class K>
struct Field;

template <>
struct Field<Rational> {
  static Rational zero(int) { return Rational(0); }
  static Rational one(int) { return Rational(1); }
  static Rational from_rational(const Rational& q, int) { return q; }
  static bool is_negative(const Rational& q) { return sgn(q) < 0; }
  static bool needs_parens(const Rational&) { return false; }
  static Rational parse(std::string_view text, int) { return parse_rational(text); }
};

template <>
struct Field<Cyclotomic> {
  static Cyclotomic zero(int order) { return Cyclotomic(order); }
  static Cyclotomic one(int order) { return Cyclotomic(order, Rational(1)); }
  static Cyclotomic from_rational(const Rational& q, int order) { return Cyclotomic(order, q); }
  static bool is_negative(const Cyclotomic& c);
  static bool needs_parens(const Cyclotomic& c) { return c.support_size() > 1; }
  static Cyclotomic parse(std::string_view text, int order) { return parse_cyclotomic(order, text); }
};

template <class K>
struct Term {
  Exponent exp;
  K coeff;
};

/// Sparse multivariate polynomial over K in Q or Q(zeta). Terms are kept sorted
/// strictly decreasing in the ring's monomial order with no zero coefficients.
template <class K>
class Polynomial {
public:
  using TermT = Term<K>;

  explicit Polynomial(RingPtr ring);
  Polynomial(RingPtr ring, std::vector<TermT> terms);  // any order, duplicates merged

  static Polynomial constant(RingPtr ring, const K& c);
  static Polynomial constant(RingPtr ring, long c);
  static Polynomial variable(RingPtr ring, int index);
  static Polynomial variable(RingPtr ring, std::string_view name);
  static Polynomial monomial(RingPtr ring, Exponent e, const K& c);
  /// Trusted: terms already strictly decreasing with nonzero coefficients.
  static Polynomial from_sorted(RingPtr ring, std::vector<TermT> terms);

  const RingPtr& ring() const { return ring_; }
  int order_of_field() const { return ring_->cyclotomic_order; }
  const std::vector<TermT>& terms() const { return terms_; }
  std::vector<TermT> release_terms() && { return std::move(terms_); }
  std::size_t size() const { return terms_.size(); }
  bool is_zero() const { return terms_.empty(); }
  bool is_constant() const;

  const TermT& leading_term() const;
  const Exponent& leading_exponent() const { return leading_term().exp; }
  const K& leading_coefficient() const { return leading_term().coeff; }

  int total_degree() const;  // -1 for zero
  int degree_in(int var) const;
  /// Degree restricted to the listed variables.
  int degree_in(const std::vector<int>& vars) const;
  bool uses_only(const std::vector<bool>& allowed) const;
  K coefficient_of(const Exponent& e) const;

  Polynomial& operator+=(const Polynomial& rhs);
  Polynomial& operator-=(const Polynomial& rhs);
  Polynomial& operator*=(const Polynomial& rhs);
  Polynomial& operator*=(const K& c);

  friend Polynomial operator+(Polynomial a, const Polynomial& b) { return a += b; }
  friend Polynomial operator-(Polynomial a, const Polynomial& b) { return a -= b; }
  friend Polynomial operator*(const Polynomial& a, const Polynomial& b) { return a.times(b); }
  friend Polynomial operator*(Polynomial a, const K& c) { return a *= c; }
  friend Polynomial operator*(const K& c, Polynomial a) { return a *= c; }
  Polynomial operator-() const;

  Polynomial times(const Polynomial& rhs) const;
  Polynomial times_term(const Exponent& e, const K& c) const;
  /// this - c * x^e * g, the reduction step.
  void subtract_multiple(const K& c, const Exponent& e, const Polynomial& g);
  Polynomial pow(int e) const;

  Polynomial monic() const;
  Polynomial derivative(int var) const;
  /// Keeps terms whose degree in `vars` is at most d.
  Polynomial truncate(const std::vector<int>& vars, int d) const;
  /// Terms whose degree in `vars` is exactly d.
  Polynomial homogeneous_part(const std::vector<int>& vars, int d) const;

  K evaluate(const std::vector<K>& point) const;
  /// Only variables occurring in the polynomial need an assignment.
  K evaluate(const std::map<std::string, K>& point) const;
  /// Ring homomorphism: variable i goes to images[i] (all in a common target ring).
  Polynomial substitute(const std::vector<Polynomial>& images) const;
  /// Re-expresses in another ring, matching variables by name.
  Polynomial in_ring(const RingPtr& target) const;

  friend bool operator==(const Polynomial& a, const Polynomial& b) { return a.equals(b); }
  friend bool operator!=(const Polynomial& a, const Polynomial& b) { return !a.equals(b); }

  std::string to_string() const;
  static Polynomial parse(RingPtr ring, std::string_view text);

private:
  bool equals(const Polynomial& other) const;
  void normalize();  // sort and merge
  void check_ring(const Polynomial& other) const;
  Polynomial merge(const Polynomial& rhs, bool subtract) const;

  RingPtr ring_;
  std::vector<TermT> terms_;
};

using QPoly = Polynomial<Rational>;
using ZPoly = Polynomial<Cyclotomic>;

/// Coefficientwise embedding Q -> Q(zeta); target variables are matched by name.
ZPoly promote(const QPoly& p, const RingPtr& target);
/// Inverse of promote when every coefficient is rational.
std::optional<QPoly> demote(const ZPoly& p, const RingPtr& target);

std::string monomial_to_string(const Ring& ring, const Exponent& e);

template <class K>
std::string to_string(const Polynomial<K>& p) {
  return p.to_string();
}

extern template class Polynomial<Rational>;
extern template class Polynomial<Cyclotomic>;

}  // namespace resonaut
