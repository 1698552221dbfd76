#include "resonaut/multipoly.hpp"

#include "resonaut/detail/expression_parser.hpp"

#include <algorithm>
#include <numeric>

namespace resonaut {

// ---------------------------------------------------------------- orders

MonomialOrder MonomialOrder::simple(OrderKind kind, int nvars) {
  std::vector<int> vars(static_cast<std::size_t>(nvars));
  std::iota(vars.begin(), vars.end(), 0);
  return MonomialOrder({OrderBlock{std::move(vars), kind}});
}

bool operator==(const OrderBlock& a, const OrderBlock& b) { return a.vars == b.vars && a.kind == b.kind; }
bool operator==(const MonomialOrder& a, const MonomialOrder& b) { return a.blocks_ == b.blocks_; }

void MonomialOrder::validate(int nvars) const {
  std::vector<int> seen(static_cast<std::size_t>(nvars), 0);
  for (const auto& b : blocks_)
    for (int v : b.vars) {
      if (v < 0 || v >= nvars) throw StructuralError("monomial order refers to a missing variable");
      if (seen[static_cast<std::size_t>(v)]++) throw StructuralError("variable listed twice in monomial order");
    }
  for (int s : seen)
    if (!s) throw StructuralError("monomial order does not cover every variable");
}

int MonomialOrder::compare(const Exponent& a, const Exponent& b) const {
  if (a.size() != b.size()) throw StructuralError("exponent vectors of different lengths");
  for (const auto& block : blocks_) {
    if (block.kind != OrderKind::Lex) {
      int da = 0, db = 0;
      for (int v : block.vars) {
        da += a[static_cast<std::size_t>(v)];
        db += b[static_cast<std::size_t>(v)];
      }
      if (da != db) return da < db ? -1 : 1;
    }
    if (block.kind == OrderKind::DegRevLex) {
      for (auto it = block.vars.rbegin(); it != block.vars.rend(); ++it) {
        int x = a[static_cast<std::size_t>(*it)], y = b[static_cast<std::size_t>(*it)];
        if (x != y) return x > y ? -1 : 1;
      }
    } else {
      for (int v : block.vars) {
        int x = a[static_cast<std::size_t>(v)], y = b[static_cast<std::size_t>(v)];
        if (x != y) return x < y ? -1 : 1;
      }
    }
  }
  return 0;
}

// ---------------------------------------------------------------- rings

std::optional<int> Ring::find(std::string_view name) const {
  for (std::size_t i = 0; i < names.size(); ++i)
    if (names[i] == name) return static_cast<int>(i);
  return std::nullopt;
}

int Ring::index_of(std::string_view name) const {
  auto i = find(name);
  if (!i) throw StructuralError("unknown variable \"" + std::string(name) + "\"");
  return *i;
}

RingPtr make_ring(std::vector<std::string> names, MonomialOrder order, int cyclotomic_order) {
  if (cyclotomic_order != 0 && !is_prime(cyclotomic_order))
    throw StructuralError("cyclotomic order must be prime");
  for (std::size_t i = 0; i < names.size(); ++i)
    for (std::size_t j = i + 1; j < names.size(); ++j)
      if (names[i] == names[j]) throw StructuralError("duplicate variable name \"" + names[i] + "\"");
  order.validate(static_cast<int>(names.size()));
  auto r = std::make_shared<Ring>();
  r->names = std::move(names);
  r->cyclotomic_order = cyclotomic_order;
  r->order = std::move(order);
  return r;
}

RingPtr make_ring(std::vector<std::string> names, OrderKind kind, int cyclotomic_order) {
  int n = static_cast<int>(names.size());
  return make_ring(std::move(names), MonomialOrder::simple(kind, n), cyclotomic_order);
}

RingPtr with_order(const RingPtr& ring, MonomialOrder order) {
  return make_ring(ring->names, std::move(order), ring->cyclotomic_order);
}

// ---------------------------------------------------------------- exponents

int total_degree(const Exponent& e) { return std::accumulate(e.begin(), e.end(), 0); }

bool divides(const Exponent& a, const Exponent& b) {
  for (std::size_t i = 0; i < a.size(); ++i)
    if (a[i] > b[i]) return false;
  return true;
}

Exponent lcm(const Exponent& a, const Exponent& b) {
  Exponent out(a.size());
  for (std::size_t i = 0; i < a.size(); ++i) out[i] = std::max(a[i], b[i]);
  return out;
}

Exponent operator+(const Exponent& a, const Exponent& b) {
  Exponent out(a.size());
  for (std::size_t i = 0; i < a.size(); ++i) out[i] = a[i] + b[i];
  return out;
}

Exponent quotient(const Exponent& b, const Exponent& a) {
  Exponent out(a.size());
  for (std::size_t i = 0; i < a.size(); ++i) out[i] = b[i] - a[i];
  return out;
}

bool coprime(const Exponent& a, const Exponent& b) {
  for (std::size_t i = 0; i < a.size(); ++i)
    if (a[i] && b[i]) return false;
  return true;
}

bool Field<Cyclotomic>::is_negative(const Cyclotomic& c) {
  // Negative when every nonzero coordinate is negative, so "-(1 + zeta)" prints as a subtraction.
  bool any = false;
  for (const auto& q : c.coefficients()) {
    if (sgn(q) > 0) return false;
    if (sgn(q) < 0) any = true;
  }
  return any;
}

std::string monomial_to_string(const Ring& ring, const Exponent& e) {
  std::string out;
  for (std::size_t i = 0; i < e.size(); ++i) {
    if (!e[i]) continue;
    if (!out.empty()) out += "*";
    out += ring.names[i];
    if (e[i] > 1) out += "^" + std::to_string(e[i]);
  }
  return out;
}

// ---------------------------------------------------------------- polynomials

template <class K>
Polynomial<K>::Polynomial(RingPtr ring) : ring_(std::move(ring)) {}

template <class K>
Polynomial<K>::Polynomial(RingPtr ring, std::vector<TermT> terms) : ring_(std::move(ring)), terms_(std::move(terms)) {
  for (const auto& t : terms_)
    if (static_cast<int>(t.exp.size()) != ring_->nvars()) throw StructuralError("exponent length mismatch");
  normalize();
}

template <class K>
void Polynomial<K>::normalize() {
  const auto& ord = ring_->order;
  std::sort(terms_.begin(), terms_.end(),
            [&](const TermT& a, const TermT& b) { return ord.compare(a.exp, b.exp) > 0; });
  std::vector<TermT> merged;
  merged.reserve(terms_.size());
  for (auto& t : terms_) {
    if (!merged.empty() && merged.back().exp == t.exp) merged.back().coeff += t.coeff;
    else merged.push_back(std::move(t));
  }
  merged.erase(std::remove_if(merged.begin(), merged.end(), [](const TermT& t) { return resonaut::is_zero(t.coeff); }),
               merged.end());
  terms_ = std::move(merged);
}

template <class K>
Polynomial<K> Polynomial<K>::constant(RingPtr ring, const K& c) {
  Polynomial p(ring);
  if (!resonaut::is_zero(c)) p.terms_.push_back({Exponent(static_cast<std::size_t>(ring->nvars()), 0), c});
  return p;
}

template <class K>
Polynomial<K> Polynomial<K>::constant(RingPtr ring, long c) {
  int ord = ring->cyclotomic_order;
  return constant(ring, Field<K>::from_rational(Rational(c), ord));
}

template <class K>
Polynomial<K> Polynomial<K>::variable(RingPtr ring, int index) {
  if (index < 0 || index >= ring->nvars()) throw StructuralError("variable index out of range");
  Exponent e(static_cast<std::size_t>(ring->nvars()), 0);
  e[static_cast<std::size_t>(index)] = 1;
  int ord = ring->cyclotomic_order;
  return monomial(ring, std::move(e), Field<K>::one(ord));
}

template <class K>
Polynomial<K> Polynomial<K>::variable(RingPtr ring, std::string_view name) {
  int i = ring->index_of(name);
  return variable(std::move(ring), i);
}

template <class K>
Polynomial<K> Polynomial<K>::monomial(RingPtr ring, Exponent e, const K& c) {
  if (static_cast<int>(e.size()) != ring->nvars()) throw StructuralError("exponent length mismatch");
  Polynomial p(std::move(ring));
  if (!resonaut::is_zero(c)) p.terms_.push_back({std::move(e), c});
  return p;
}

template <class K>
Polynomial<K> Polynomial<K>::from_sorted(RingPtr ring, std::vector<TermT> terms) {
  Polynomial p(std::move(ring));
  p.terms_ = std::move(terms);
  return p;
}

template <class K>
bool Polynomial<K>::is_constant() const {
  return terms_.empty() || (terms_.size() == 1 && resonaut::total_degree(terms_[0].exp) == 0);
}

template <class K>
const typename Polynomial<K>::TermT& Polynomial<K>::leading_term() const {
  if (terms_.empty()) throw StructuralError("zero polynomial has no leading term");
  return terms_.front();
}

template <class K>
int Polynomial<K>::total_degree() const {
  int d = -1;
  for (const auto& t : terms_) d = std::max(d, resonaut::total_degree(t.exp));
  return d;
}

template <class K>
int Polynomial<K>::degree_in(int var) const {
  int d = -1;
  for (const auto& t : terms_) d = std::max(d, t.exp[static_cast<std::size_t>(var)]);
  return d;
}

template <class K>
int Polynomial<K>::degree_in(const std::vector<int>& vars) const {
  int d = -1;
  for (const auto& t : terms_) {
    int s = 0;
    for (int v : vars) s += t.exp[static_cast<std::size_t>(v)];
    d = std::max(d, s);
  }
  return d;
}

template <class K>
bool Polynomial<K>::uses_only(const std::vector<bool>& allowed) const {
  for (const auto& t : terms_)
    for (std::size_t i = 0; i < t.exp.size(); ++i)
      if (t.exp[i] && !allowed[i]) return false;
  return true;
}

template <class K>
K Polynomial<K>::coefficient_of(const Exponent& e) const {
  for (const auto& t : terms_)
    if (t.exp == e) return t.coeff;
  return Field<K>::zero(ring_->cyclotomic_order);
}

template <class K>
void Polynomial<K>::check_ring(const Polynomial& other) const {
  if (ring_ != other.ring_ && !(*ring_ == *other.ring_))
    throw StructuralError("polynomials live in different rings");
}

template <class K>
Polynomial<K> Polynomial<K>::merge(const Polynomial& rhs, bool subtract) const {
  check_ring(rhs);
  const auto& ord = ring_->order;
  Polynomial out(ring_);
  out.terms_.reserve(terms_.size() + rhs.terms_.size());
  std::size_t i = 0, j = 0;
  while (i < terms_.size() || j < rhs.terms_.size()) {
    int c;
    if (i == terms_.size()) c = -1;
    else if (j == rhs.terms_.size()) c = 1;
    else c = ord.compare(terms_[i].exp, rhs.terms_[j].exp);
    if (c > 0) {
      out.terms_.push_back(terms_[i++]);
    } else if (c < 0) {
      out.terms_.push_back(rhs.terms_[j++]);
      if (subtract) out.terms_.back().coeff = -out.terms_.back().coeff;
    } else {
      K s = terms_[i].coeff;
      if (subtract) s -= rhs.terms_[j].coeff;
      else s += rhs.terms_[j].coeff;
      if (!resonaut::is_zero(s)) out.terms_.push_back({terms_[i].exp, std::move(s)});
      ++i;
      ++j;
    }
  }
  return out;
}

template <class K>
Polynomial<K>& Polynomial<K>::operator+=(const Polynomial& rhs) {
  *this = merge(rhs, false);
  return *this;
}

template <class K>
Polynomial<K>& Polynomial<K>::operator-=(const Polynomial& rhs) {
  *this = merge(rhs, true);
  return *this;
}

template <class K>
Polynomial<K>& Polynomial<K>::operator*=(const Polynomial& rhs) {
  *this = times(rhs);
  return *this;
}

template <class K>
Polynomial<K>& Polynomial<K>::operator*=(const K& c) {
  if (resonaut::is_zero(c)) {
    terms_.clear();
    return *this;
  }
  for (auto& t : terms_) t.coeff *= c;
  return *this;
}

template <class K>
Polynomial<K> Polynomial<K>::operator-() const {
  Polynomial out(*this);
  for (auto& t : out.terms_) t.coeff = -t.coeff;
  return out;
}

template <class K>
Polynomial<K> Polynomial<K>::times(const Polynomial& rhs) const {
  check_ring(rhs);
  if (is_zero() || rhs.is_zero()) return Polynomial(ring_);
  if (terms_.size() < rhs.terms_.size()) return rhs.times(*this);
  // Accumulate row by row; each row is already sorted since the order is monomial.
  Polynomial acc(ring_);
  for (const auto& t : rhs.terms_) acc += times_term(t.exp, t.coeff);
  return acc;
}

template <class K>
Polynomial<K> Polynomial<K>::times_term(const Exponent& e, const K& c) const {
  Polynomial out(ring_);
  if (resonaut::is_zero(c)) return out;
  out.terms_.reserve(terms_.size());
  for (const auto& t : terms_) out.terms_.push_back({t.exp + e, t.coeff * c});
  return out;
}

template <class K>
void Polynomial<K>::subtract_multiple(const K& c, const Exponent& e, const Polynomial& g) {
  check_ring(g);
  const auto& ord = ring_->order;
  std::vector<TermT> out;
  out.reserve(terms_.size() + g.terms_.size());
  std::size_t i = 0, j = 0;
  Exponent shifted;
  while (i < terms_.size() || j < g.terms_.size()) {
    int cmp;
    if (j < g.terms_.size()) shifted = g.terms_[j].exp + e;
    if (i == terms_.size()) cmp = -1;
    else if (j == g.terms_.size()) cmp = 1;
    else cmp = ord.compare(terms_[i].exp, shifted);
    if (cmp > 0) {
      out.push_back(std::move(terms_[i++]));
    } else if (cmp < 0) {
      out.push_back({std::move(shifted), -(g.terms_[j].coeff * c)});
      ++j;
    } else {
      K s = terms_[i].coeff - g.terms_[j].coeff * c;
      if (!resonaut::is_zero(s)) out.push_back({std::move(terms_[i].exp), std::move(s)});
      ++i;
      ++j;
    }
  }
  terms_ = std::move(out);
}

template <class K>
Polynomial<K> Polynomial<K>::pow(int e) const {
  if (e < 0) throw StructuralError("negative polynomial power");
  Polynomial result = constant(ring_, 1);
  Polynomial base = *this;
  while (e > 0) {
    if (e & 1) result = result * base;
    e >>= 1;
    if (e) base = base * base;
  }
  return result;
}

template <class K>
Polynomial<K> Polynomial<K>::monic() const {
  if (is_zero()) return *this;
  Polynomial out(*this);
  K inv = inverse(leading_coefficient());
  for (auto& t : out.terms_) t.coeff *= inv;
  return out;
}

template <class K>
Polynomial<K> Polynomial<K>::derivative(int var) const {
  Polynomial out(ring_);
  auto v = static_cast<std::size_t>(var);
  for (const auto& t : terms_) {
    if (!t.exp[v]) continue;
    TermT d{t.exp, t.coeff};
    d.coeff *= Field<K>::from_rational(Rational(t.exp[v]), ring_->cyclotomic_order);
    d.exp[v] -= 1;
    out.terms_.push_back(std::move(d));
  }
  out.normalize();
  return out;
}

template <class K>
Polynomial<K> Polynomial<K>::truncate(const std::vector<int>& vars, int d) const {
  Polynomial out(ring_);
  for (const auto& t : terms_) {
    int s = 0;
    for (int v : vars) s += t.exp[static_cast<std::size_t>(v)];
    if (s <= d) out.terms_.push_back(t);
  }
  return out;
}

template <class K>
Polynomial<K> Polynomial<K>::homogeneous_part(const std::vector<int>& vars, int d) const {
  Polynomial out(ring_);
  for (const auto& t : terms_) {
    int s = 0;
    for (int v : vars) s += t.exp[static_cast<std::size_t>(v)];
    if (s == d) out.terms_.push_back(t);
  }
  return out;
}

template <class K>
K Polynomial<K>::evaluate(const std::vector<K>& point) const {
  if (static_cast<int>(point.size()) != ring_->nvars()) throw StructuralError("evaluation point has wrong length");
  int ord = ring_->cyclotomic_order;
  K acc = Field<K>::zero(ord);
  for (const auto& t : terms_) {
    K m = t.coeff;
    for (std::size_t i = 0; i < t.exp.size(); ++i)
      for (int k = 0; k < t.exp[i]; ++k) m *= point[i];
    acc += m;
  }
  return acc;
}

template <class K>
K Polynomial<K>::evaluate(const std::map<std::string, K>& point) const {
  int ord = ring_->cyclotomic_order;
  std::vector<K> values(static_cast<std::size_t>(ring_->nvars()), Field<K>::zero(ord));
  std::vector<bool> used(values.size(), false);
  for (const auto& t : terms_)
    for (std::size_t i = 0; i < t.exp.size(); ++i)
      if (t.exp[i]) used[i] = true;
  for (std::size_t i = 0; i < values.size(); ++i) {
    if (!used[i]) continue;
    auto it = point.find(ring_->names[i]);
    if (it == point.end()) throw StructuralError("no value given for variable \"" + ring_->names[i] + "\"");
    values[i] = it->second;
  }
  return evaluate(values);
}

template <class K>
Polynomial<K> Polynomial<K>::substitute(const std::vector<Polynomial>& images) const {
  if (static_cast<int>(images.size()) != ring_->nvars()) throw StructuralError("substitution has wrong length");
  if (images.empty()) return *this;
  RingPtr target = images[0].ring();
  Polynomial acc(target);
  // Cache powers of each image.
  std::vector<std::vector<Polynomial>> powers(images.size());
  auto power = [&](std::size_t i, int k) -> const Polynomial& {
    auto& ps = powers[i];
    if (ps.empty()) ps.push_back(constant(target, 1));
    while (static_cast<int>(ps.size()) <= k) ps.push_back(ps.back() * images[i]);
    return ps[static_cast<std::size_t>(k)];
  };
  for (const auto& t : terms_) {
    Polynomial m = constant(target, t.coeff);
    for (std::size_t i = 0; i < t.exp.size(); ++i)
      if (t.exp[i]) m = m * power(i, t.exp[i]);
    acc += m;
  }
  return acc;
}

template <class K>
Polynomial<K> Polynomial<K>::in_ring(const RingPtr& target) const {
  if (target->cyclotomic_order != ring_->cyclotomic_order) throw StructuralError("coefficient field mismatch");
  std::vector<int> map(static_cast<std::size_t>(ring_->nvars()), -1);
  std::vector<TermT> out;
  out.reserve(terms_.size());
  for (const auto& t : terms_) {
    Exponent e(static_cast<std::size_t>(target->nvars()), 0);
    for (std::size_t i = 0; i < t.exp.size(); ++i) {
      if (!t.exp[i]) continue;
      if (map[i] < 0) map[i] = target->index_of(ring_->names[i]);
      e[static_cast<std::size_t>(map[i])] = t.exp[i];
    }
    out.push_back({std::move(e), t.coeff});
  }
  return Polynomial(target, std::move(out));
}

template <class K>
bool Polynomial<K>::equals(const Polynomial& other) const {
  if (ring_ == other.ring_ || *ring_ == *other.ring_) {
    if (terms_.size() != other.terms_.size()) return false;
    for (std::size_t i = 0; i < terms_.size(); ++i)
      if (terms_[i].exp != other.terms_[i].exp || terms_[i].coeff != other.terms_[i].coeff) return false;
    return true;
  }
  if (ring_->names != other.ring_->names || ring_->cyclotomic_order != other.ring_->cyclotomic_order) return false;
  return equals(other.in_ring(ring_));
}

template <class K>
std::string Polynomial<K>::to_string() const {
  if (terms_.empty()) return "0";
  std::string out;
  for (const auto& t : terms_) {
    std::string mono = monomial_to_string(*ring_, t.exp);
    bool neg = Field<K>::is_negative(t.coeff);
    K mag = neg ? K(-t.coeff) : t.coeff;
    if (out.empty()) {
      if (neg) out += "-";
    } else {
      out += neg ? " - " : " + ";
    }
    std::string ctext = resonaut::to_string(mag);
    if (mono.empty()) {
      out += Field<K>::needs_parens(mag) && !out.empty() ? "(" + ctext + ")" : ctext;
    } else if (ctext == "1") {
      out += mono;
    } else if (Field<K>::needs_parens(mag)) {
      out += "(" + ctext + ")*" + mono;
    } else {
      out += ctext + "*" + mono;
    }
  }
  return out;
}

template <class K>
Polynomial<K> Polynomial<K>::parse(RingPtr ring, std::string_view text) {
  const int ord = ring->cyclotomic_order;
  detail::ExpressionParser<Polynomial> parser(
      text, [&](const Rational& q) { return constant(ring, Field<K>::from_rational(q, ord)); },
      [&](const std::string& id) -> Polynomial {
        if (auto i = ring->find(id)) return variable(ring, *i);
        if (id == "zeta") {
          if constexpr (std::is_same_v<K, Cyclotomic>) {
            if (ord) return constant(ring, Cyclotomic::zeta(ord));
          }
          throw StructuralError("zeta used over the rationals");
        }
        throw StructuralError("unknown variable \"" + id + "\"");
      });
  return parser.parse();
}

template class Polynomial<Rational>;
template class Polynomial<Cyclotomic>;

ZPoly promote(const QPoly& p, const RingPtr& target) {
  if (target->cyclotomic_order == 0) throw StructuralError("promotion target must be cyclotomic");
  std::vector<Term<Cyclotomic>> out;
  for (const auto& t : p.terms()) {
    Exponent e(static_cast<std::size_t>(target->nvars()), 0);
    for (std::size_t i = 0; i < t.exp.size(); ++i)
      if (t.exp[i]) e[static_cast<std::size_t>(target->index_of(p.ring()->names[i]))] = t.exp[i];
    out.push_back({std::move(e), Cyclotomic(target->cyclotomic_order, t.coeff)});
  }
  return ZPoly(target, std::move(out));
}

std::optional<QPoly> demote(const ZPoly& p, const RingPtr& target) {
  std::vector<Term<Rational>> out;
  for (const auto& t : p.terms()) {
    if (!t.coeff.is_rational()) return std::nullopt;
    Exponent e(static_cast<std::size_t>(target->nvars()), 0);
    for (std::size_t i = 0; i < t.exp.size(); ++i)
      if (t.exp[i]) e[static_cast<std::size_t>(target->index_of(p.ring()->names[i]))] = t.exp[i];
    out.push_back({std::move(e), t.coeff.coefficients()[0]});
  }
  return QPoly(target, std::move(out));
}

}  // namespace resonaut
