#include "resonaut/groebner.hpp"

#include <algorithm>
#include <cstdint>

namespace resonaut {

namespace {

std::uint64_t support_mask(const Exponent& e) {
  std::uint64_t m = 0;
  for (std::size_t i = 0; i < e.size(); ++i)
    if (e[i]) m |= std::uint64_t{1} << (i % 64);
  return m;
}

template <class K>
struct Divisor {
  const Polynomial<K>* poly;
  std::uint64_t mask;
};

template <class K>
std::vector<Divisor<K>> make_divisors(const std::vector<const Polynomial<K>*>& basis) {
  std::vector<Divisor<K>> out;
  for (const auto* g : basis)
    if (!g->is_zero()) out.push_back({g, support_mask(g->leading_exponent())});
  return out;
}

template <class K>
const Polynomial<K>* find_divisor(const std::vector<Divisor<K>>& ds, const Exponent& e, std::uint64_t emask) {
  for (const auto& d : ds)
    if ((d.mask & ~emask) == 0 && divides(d.poly->leading_exponent(), e)) return d.poly;
  return nullptr;
}

// Merges tail (strictly decreasing) with -c * x^q * g[1..] in place.
template <class K>
void subtract_tail(std::vector<Term<K>>& v, std::size_t from, const K& c, const Exponent& q, const Polynomial<K>& g,
                   const MonomialOrder& ord) {
  std::vector<Term<K>> out;
  const auto& gt = g.terms();
  out.reserve(v.size() - from + gt.size());
  std::size_t i = from, j = 1;
  while (i < v.size() || j < gt.size()) {
    Exponent shifted;
    int cmp;
    if (j < gt.size()) shifted = gt[j].exp + q;
    if (i == v.size()) cmp = -1;
    else if (j == gt.size()) cmp = 1;
    else cmp = ord.compare(v[i].exp, shifted);
    if (cmp > 0) {
      out.push_back(std::move(v[i++]));
    } else if (cmp < 0) {
      K t = gt[j].coeff * c;
      out.push_back({std::move(shifted), -t});
      ++j;
    } else {
      K t = gt[j].coeff * c;
      t = v[i].coeff - t;
      if (!is_zero(t)) out.push_back({std::move(v[i].exp), std::move(t)});
      ++i;
      ++j;
    }
  }
  v.erase(v.begin() + static_cast<std::ptrdiff_t>(from - 1), v.end());
  for (auto& t : out) v.push_back(std::move(t));
}

template <class K>
Polynomial<K> reduce_by(const Polynomial<K>& f, const std::vector<Divisor<K>>& ds) {
  const auto& ord = f.ring()->order;
  std::vector<Term<K>> v = f.terms();
  std::size_t pos = 0;
  while (pos < v.size()) {
    const Polynomial<K>* g = find_divisor(ds, v[pos].exp, support_mask(v[pos].exp));
    if (!g) {
      ++pos;
      continue;
    }
    K c = v[pos].coeff / g->leading_coefficient();
    Exponent q = quotient(v[pos].exp, g->leading_exponent());
    subtract_tail(v, pos + 1, c, q, *g, ord);
  }
  return Polynomial<K>::from_sorted(f.ring(), std::move(v));
}

template <class K>
Polynomial<K> s_polynomial(const Polynomial<K>& f, const Polynomial<K>& g) {
  Exponent l = lcm(f.leading_exponent(), g.leading_exponent());
  Polynomial<K> s = f.times_term(quotient(l, f.leading_exponent()), inverse(f.leading_coefficient()));
  s.subtract_multiple(inverse(g.leading_coefficient()), quotient(l, g.leading_exponent()), g);
  return s;
}

// Buchberger with the Gebauer-Moeller installation of pairs and the normal selection strategy.
template <class K>
class Buchberger {
public:
  explicit Buchberger(RingPtr ring) : ring_(std::move(ring)), ord_(ring_->order) {}

  std::vector<Polynomial<K>> run(const std::vector<Polynomial<K>>& gens) {
    for (const auto& f : gens) {
      if (f.is_zero()) continue;
      Polynomial<K> h = reduce_by(f, active_divisors());
      if (!h.is_zero()) install(h.monic());
    }
    while (!pairs_.empty()) {
      auto best = std::min_element(pairs_.begin(), pairs_.end(), [](const Pair& a, const Pair& b) {
        return a.deg != b.deg ? a.deg < b.deg : a.serial < b.serial;
      });
      Pair p = *best;
      *best = pairs_.back();
      pairs_.pop_back();
      Polynomial<K> h = reduce_by(s_polynomial(polys_[p.i], polys_[p.j]), active_divisors());
      if (!h.is_zero()) install(h.monic());
    }
    return interreduce();
  }

private:
  struct Pair {
    int i, j;
    Exponent lcm;
    int deg;
    long serial;
  };

  std::vector<Divisor<K>> active_divisors() const {
    std::vector<Divisor<K>> out;
    for (std::size_t k = 0; k < polys_.size(); ++k)
      if (active_[k]) out.push_back({&polys_[k], masks_[k]});
    return out;
  }

  void install(Polynomial<K> h) {
    const int k = static_cast<int>(polys_.size());
    const Exponent lh = h.leading_exponent();
    polys_.push_back(std::move(h));
    masks_.push_back(support_mask(lh));
    active_.push_back(false);

    struct Cand {
      int g;
      Exponent l;
      bool coprime;
      bool alive = true;
    };
    std::vector<Cand> c;
    for (int g = 0; g < k; ++g)
      if (active_[static_cast<std::size_t>(g)]) {
        const Exponent& lg = polys_[static_cast<std::size_t>(g)].leading_exponent();
        c.push_back({g, lcm(lh, lg), coprime(lh, lg)});
      }
    // Drop (h,g1) when another surviving (h,g2) has lcm dividing lcm(h,g1); equal lcms keep the first.
    for (std::size_t a = 0; a < c.size(); ++a) {
      if (c[a].coprime) continue;
      for (std::size_t b = 0; b < c.size(); ++b) {
        if (a == b || !c[b].alive) continue;
        if (divides(c[b].l, c[a].l) && (c[b].l != c[a].l || b < a || c[b].coprime)) {
          c[a].alive = false;
          break;
        }
      }
    }
    // Chain criterion on old pairs.
    std::vector<Pair> kept;
    kept.reserve(pairs_.size() + c.size());
    for (auto& p : pairs_) {
      if (divides(lh, p.lcm)) {
        Exponent li = lcm(polys_[static_cast<std::size_t>(p.i)].leading_exponent(), lh);
        Exponent lj = lcm(polys_[static_cast<std::size_t>(p.j)].leading_exponent(), lh);
        if (li != p.lcm && lj != p.lcm) continue;
      }
      kept.push_back(std::move(p));
    }
    for (auto& cand : c)
      if (cand.alive && !cand.coprime) {
        int d = total_degree(cand.l);
        kept.push_back({cand.g, k, std::move(cand.l), d, serial_++});
      }
    pairs_ = std::move(kept);

    for (int g = 0; g < k; ++g)
      if (active_[static_cast<std::size_t>(g)] &&
          divides(lh, polys_[static_cast<std::size_t>(g)].leading_exponent()))
        active_[static_cast<std::size_t>(g)] = false;
    active_[static_cast<std::size_t>(k)] = true;
  }

  std::vector<Polynomial<K>> interreduce() {
    std::vector<Polynomial<K>> g;
    for (std::size_t k = 0; k < polys_.size(); ++k)
      if (active_[k]) g.push_back(polys_[k]);
    std::vector<Polynomial<K>> out;
    for (std::size_t a = 0; a < g.size(); ++a) {
      std::vector<const Polynomial<K>*> others;
      for (std::size_t b = 0; b < g.size(); ++b)
        if (b != a) others.push_back(&g[b]);
      // Leading terms are mutually indivisible, so only tails change.
      out.push_back(reduce_by(g[a], make_divisors(others)).monic());
    }
    std::sort(out.begin(), out.end(), [this](const Polynomial<K>& x, const Polynomial<K>& y) {
      return ord_.compare(x.leading_exponent(), y.leading_exponent()) < 0;
    });
    return out;
  }

  RingPtr ring_;
  const MonomialOrder& ord_;
  std::vector<Polynomial<K>> polys_;
  std::vector<std::uint64_t> masks_;
  std::vector<bool> active_;
  std::vector<Pair> pairs_;
  long serial_ = 0;
};

std::string fresh_name(const Ring& ring, const std::string& base) {
  if (!ring.find(base)) return base;
  for (int k = 1;; ++k) {
    std::string s = base + std::to_string(k);
    if (!ring.find(s)) return s;
  }
}

std::vector<int> indices_of(const Ring& ring, const std::vector<std::string>& names) {
  std::vector<int> out;
  for (const auto& n : names) out.push_back(ring.index_of(n));
  return out;
}

}  // namespace

template <class K>
Ideal<K>::Ideal(RingPtr r, std::vector<Polynomial<K>> g) : ring(std::move(r)) {
  for (auto& p : g) {
    if (p.is_zero()) continue;
    if (!(*p.ring() == *ring)) throw StructuralError("generator lives in a different ring");
    gens.push_back(std::move(p));
  }
}

template <class K>
Polynomial<K> reduce(const Polynomial<K>& f, const std::vector<Polynomial<K>>& basis) {
  std::vector<const Polynomial<K>*> ptrs;
  for (const auto& g : basis) {
    if (!(*g.ring() == *f.ring())) throw StructuralError("reduction across different rings");
    ptrs.push_back(&g);
  }
  return reduce_by(f, make_divisors(ptrs));
}

template <class K>
Ideal<K> groebner_basis(const Ideal<K>& I) {
  return Ideal<K>(I.ring, Buchberger<K>(I.ring).run(I.gens));
}

template <class K>
Ideal<K> groebner_basis(const Ideal<K>& I, const RingPtr& ring) {
  std::vector<Polynomial<K>> gens;
  for (const auto& g : I.gens) gens.push_back(g.in_ring(ring));
  return groebner_basis(Ideal<K>(ring, std::move(gens)));
}

template <class K>
Ideal<K> canonical_basis(const Ideal<K>& I) {
  return groebner_basis(I, make_ring(I.ring->names, OrderKind::DegLex, I.ring->cyclotomic_order));
}

template <class K>
bool satisfies_buchberger_criterion(const std::vector<Polynomial<K>>& basis) {
  for (std::size_t i = 0; i < basis.size(); ++i)
    for (std::size_t j = i + 1; j < basis.size(); ++j)
      if (!reduce(s_polynomial(basis[i], basis[j]), basis).is_zero()) return false;
  return true;
}

template <class K>
Ideal<K> eliminate(const Ideal<K>& I, const std::vector<std::string>& drop, RingPtr target) {
  const Ring& r = *I.ring;
  std::vector<int> dropped = indices_of(r, drop);
  std::vector<bool> is_dropped(static_cast<std::size_t>(r.nvars()), false);
  for (int d : dropped) is_dropped[static_cast<std::size_t>(d)] = true;
  std::vector<int> kept;
  std::vector<std::string> kept_names;
  for (int i = 0; i < r.nvars(); ++i)
    if (!is_dropped[static_cast<std::size_t>(i)]) {
      kept.push_back(i);
      kept_names.push_back(r.names[static_cast<std::size_t>(i)]);
    }
  std::sort(dropped.begin(), dropped.end());
  RingPtr elim = with_order(I.ring, MonomialOrder({{dropped, OrderKind::DegLex}, {kept, OrderKind::DegLex}}));
  Ideal<K> gb = groebner_basis(I, elim);
  if (!target) target = make_ring(kept_names, OrderKind::DegLex, r.cyclotomic_order);
  std::vector<bool> allowed(static_cast<std::size_t>(r.nvars()));
  for (std::size_t i = 0; i < allowed.size(); ++i) allowed[i] = !is_dropped[i];
  std::vector<Polynomial<K>> out;
  for (const auto& g : gb.gens)
    if (g.uses_only(allowed)) out.push_back(g.in_ring(target));
  return groebner_basis(Ideal<K>(target, std::move(out)));
}

template <class K>
Ideal<K> saturate(const Ideal<K>& I, const Polynomial<K>& f) {
  if (f.is_zero()) throw StructuralError("saturation by zero");
  const Ring& r = *I.ring;
  std::string u = fresh_name(r, "_u");
  std::vector<std::string> names{u};
  names.insert(names.end(), r.names.begin(), r.names.end());
  RingPtr big = make_ring(names, OrderKind::DegLex, r.cyclotomic_order);
  std::vector<Polynomial<K>> gens;
  for (const auto& g : I.gens) gens.push_back(g.in_ring(big));
  gens.push_back(Polynomial<K>::variable(big, 0) * f.in_ring(big) - Polynomial<K>::constant(big, 1));
  return eliminate(Ideal<K>(big, std::move(gens)), {u}, I.ring);
}

template <class K>
Ideal<K> saturate_by_variables(const Ideal<K>& I, const std::vector<std::string>& vars) {
  Ideal<K> J = groebner_basis(I);
  for (const auto& v : vars) J = saturate(J, Polynomial<K>::variable(I.ring, v));
  return J;
}

template <class K>
bool ideal_contains(const Ideal<K>& I, const Polynomial<K>& f) {
  Ideal<K> gb = groebner_basis(I);
  return reduce(f.in_ring(I.ring), gb.gens).is_zero();
}

template <class K>
bool ideal_equal(const Ideal<K>& I, const Ideal<K>& J) {
  if (I.ring->names != J.ring->names || I.ring->cyclotomic_order != J.ring->cyclotomic_order)
    throw StructuralError("ideals live in different rings");
  Ideal<K> a = canonical_basis(I), b = canonical_basis(J);
  if (a.gens.size() != b.gens.size()) return false;
  for (std::size_t i = 0; i < a.gens.size(); ++i)
    if (a.gens[i] != b.gens[i]) return false;
  return true;
}

template <class K>
SubalgebraMembership<K>::SubalgebraMembership(RingPtr ring, std::vector<Polynomial<K>> gens, std::string tag_prefix)
    : ring_(std::move(ring)), gens_(std::move(gens)) {
  const int n = ring_->nvars();
  const int m = static_cast<int>(gens_.size());
  std::vector<std::string> tags;
  for (int i = 1; i <= m; ++i) tags.push_back(fresh_name(*ring_, tag_prefix + std::to_string(i)));
  std::vector<std::string> names = ring_->names;
  names.insert(names.end(), tags.begin(), tags.end());
  std::vector<int> orig(static_cast<std::size_t>(n)), tagv(static_cast<std::size_t>(m));
  for (int i = 0; i < n; ++i) orig[static_cast<std::size_t>(i)] = i;
  for (int i = 0; i < m; ++i) tagv[static_cast<std::size_t>(i)] = n + i;
  big_ring_ = make_ring(names, MonomialOrder({{orig, OrderKind::DegLex}, {tagv, OrderKind::DegLex}}),
                        ring_->cyclotomic_order);
  tag_ring_ = make_ring(tags, OrderKind::DegLex, ring_->cyclotomic_order);
  std::vector<Polynomial<K>> sys;
  for (int i = 0; i < m; ++i)
    sys.push_back(gens_[static_cast<std::size_t>(i)].in_ring(big_ring_) - Polynomial<K>::variable(big_ring_, n + i));
  basis_ = groebner_basis(Ideal<K>(big_ring_, std::move(sys))).gens;
}

template <class K>
std::optional<Polynomial<K>> SubalgebraMembership<K>::represent(const Polynomial<K>& f) const {
  Polynomial<K> nf = reduce(f.in_ring(big_ring_), basis_);
  const int n = ring_->nvars();
  std::vector<bool> allowed(static_cast<std::size_t>(big_ring_->nvars()), true);
  for (int i = 0; i < n; ++i) allowed[static_cast<std::size_t>(i)] = false;
  if (!nf.uses_only(allowed)) return std::nullopt;
  return nf.in_ring(tag_ring_);
}

template <class K>
Ideal<K> toric_kernel(const RingPtr& source, const std::vector<MonomialImage<K>>& images) {
  if (static_cast<int>(images.size()) != source->nvars()) throw StructuralError("one image per source variable");
  const std::size_t m = images.empty() ? 0 : images[0].laurent.size();
  std::vector<bool> needs_inverse(m, false);
  for (const auto& im : images) {
    if (is_zero(im.unit)) throw StructuralError("monomial image with zero unit");
    if (im.laurent.size() != m) throw StructuralError("Laurent exponents of different lengths");
    for (std::size_t j = 0; j < m; ++j)
      if (im.laurent[j] < 0) needs_inverse[j] = true;
  }
  std::vector<std::string> names, aux;
  std::vector<int> t_index(m), s_index(m, -1);
  for (std::size_t j = 0; j < m; ++j) {
    t_index[j] = static_cast<int>(names.size());
    names.push_back(fresh_name(*source, "_t" + std::to_string(j + 1)));
  }
  for (std::size_t j = 0; j < m; ++j)
    if (needs_inverse[j]) {
      s_index[j] = static_cast<int>(names.size());
      names.push_back(fresh_name(*source, "_s" + std::to_string(j + 1)));
    }
  aux = names;
  const int na = static_cast<int>(names.size());
  names.insert(names.end(), source->names.begin(), source->names.end());
  RingPtr big = make_ring(names, OrderKind::DegLex, source->cyclotomic_order);
  std::vector<Polynomial<K>> gens;
  for (std::size_t i = 0; i < images.size(); ++i) {
    Exponent e(names.size(), 0);
    for (std::size_t j = 0; j < m; ++j) {
      int x = images[i].laurent[j];
      if (x > 0) e[static_cast<std::size_t>(t_index[j])] = x;
      if (x < 0) e[static_cast<std::size_t>(s_index[j])] = -x;
    }
    gens.push_back(Polynomial<K>::variable(big, na + static_cast<int>(i)) -
                   Polynomial<K>::monomial(big, e, images[i].unit));
  }
  for (std::size_t j = 0; j < m; ++j)
    if (needs_inverse[j])
      gens.push_back(Polynomial<K>::variable(big, t_index[j]) * Polynomial<K>::variable(big, s_index[j]) -
                     Polynomial<K>::constant(big, 1));
  return eliminate(Ideal<K>(big, std::move(gens)), aux, source);
}

#define RESONAUT_GROEBNER_INSTANTIATE(K)                                                                    \
  template struct Ideal<K>;                                                                                 \
  template Polynomial<K> reduce(const Polynomial<K>&, const std::vector<Polynomial<K>>&);                   \
  template Ideal<K> groebner_basis(const Ideal<K>&);                                                        \
  template Ideal<K> groebner_basis(const Ideal<K>&, const RingPtr&);                                        \
  template Ideal<K> canonical_basis(const Ideal<K>&);                                                       \
  template bool satisfies_buchberger_criterion(const std::vector<Polynomial<K>>&);                          \
  template Ideal<K> eliminate(const Ideal<K>&, const std::vector<std::string>&, RingPtr);                   \
  template Ideal<K> saturate(const Ideal<K>&, const Polynomial<K>&);                                        \
  template Ideal<K> saturate_by_variables(const Ideal<K>&, const std::vector<std::string>&);                \
  template bool ideal_contains(const Ideal<K>&, const Polynomial<K>&);                                      \
  template bool ideal_equal(const Ideal<K>&, const Ideal<K>&);                                              \
  template class SubalgebraMembership<K>;                                                                   \
  template Ideal<K> toric_kernel(const RingPtr&, const std::vector<MonomialImage<K>>&);

RESONAUT_GROEBNER_INSTANTIATE(Rational)
RESONAUT_GROEBNER_INSTANTIATE(Cyclotomic)

}  // namespace resonaut
