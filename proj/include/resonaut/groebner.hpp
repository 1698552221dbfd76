#pragma once

#include "resonaut/multipoly.hpp"

#include <optional>
#include <string>
#include <vector>

namespace resonaut {

/// Generators sharing one ring. Zero generators are dropped on construction.
template <class K>
struct Ideal {
  RingPtr ring;
  std::vector<Polynomial<K>> gens;

  Ideal(RingPtr r, std::vector<Polynomial<K>> g);
  explicit Ideal(RingPtr r) : ring(std::move(r)) {}
};

using QIdeal = Ideal<Rational>;
using ZIdeal = Ideal<Cyclotomic>;

/// Full remainder of f on division by `basis` (all in f's ring and order).
template <class K>
Polynomial<K> reduce(const Polynomial<K>& f, const std::vector<Polynomial<K>>& basis);

/// Reduced Groebner basis in the ideal ring's order: monic, sorted ascending by leading monomial.
template <class K>
Ideal<K> groebner_basis(const Ideal<K>& I);

/// Same ideal re-expressed in `ring` (same variables, possibly another order) then reduced.
template <class K>
Ideal<K> groebner_basis(const Ideal<K>& I, const RingPtr& ring);

/// Reduced basis under deglex in the ring's own variable order.
template <class K>
Ideal<K> canonical_basis(const Ideal<K>& I);

/// Every S-polynomial of `basis` reduces to zero.
template <class K>
bool satisfies_buchberger_criterion(const std::vector<Polynomial<K>>& basis);

/// I intersected with the subring lacking `drop`; result lives in `target` when given,
/// otherwise in a deglex ring on the kept variables (original relative order).
template <class K>
Ideal<K> eliminate(const Ideal<K>& I, const std::vector<std::string>& drop, RingPtr target = nullptr);

/// I : f^infinity via a fresh variable u with u*f - 1. Returned as canonical basis.
template <class K>
Ideal<K> saturate(const Ideal<K>& I, const Polynomial<K>& f);

/// Saturation by the product of `vars`, one variable at a time.
template <class K>
Ideal<K> saturate_by_variables(const Ideal<K>& I, const std::vector<std::string>& vars);

template <class K>
bool ideal_contains(const Ideal<K>& I, const Polynomial<K>& f);

template <class K>
bool ideal_equal(const Ideal<K>& I, const Ideal<K>& J);

/// Decides f in K[g_1..g_m] with tag variables u_1..u_m. The Groebner basis of
/// {g_i - u_i} is computed once and reused across queries.
template <class K>
class SubalgebraMembership {
public:
  SubalgebraMembership(RingPtr ring, std::vector<Polynomial<K>> gens, std::string tag_prefix = "u");

  /// Representation in the tag ring when f is a member.
  std::optional<Polynomial<K>> represent(const Polynomial<K>& f) const;
  bool contains(const Polynomial<K>& f) const { return represent(f).has_value(); }

  const RingPtr& tag_ring() const { return tag_ring_; }
  const std::vector<Polynomial<K>>& generators() const { return gens_; }

private:
  RingPtr ring_;
  RingPtr big_ring_;
  RingPtr tag_ring_;
  std::vector<Polynomial<K>> gens_;
  std::vector<Polynomial<K>> basis_;
};

template <class K>
std::optional<Polynomial<K>> subalgebra_member(const Polynomial<K>& f, const std::vector<Polynomial<K>>& gens) {
  return SubalgebraMembership<K>(f.ring(), gens).represent(f);
}

/// Image of one source variable under a monomial map: unit * t^laurent.
template <class K>
struct MonomialImage {
  K unit;
  std::vector<int> laurent;  // signed exponents over the auxiliary variables
};

/// Kernel of x_i -> unit_i * t^(laurent_i) in `source`, with Laurent variables
/// handled through partners s_j and t_j*s_j - 1. Returned as canonical basis.
template <class K>
Ideal<K> toric_kernel(const RingPtr& source, const std::vector<MonomialImage<K>>& images);

#define RESONAUT_GROEBNER_EXTERN(K)                                                                        \
  extern template struct Ideal<K>;                                                                         \
  extern template Polynomial<K> reduce(const Polynomial<K>&, const std::vector<Polynomial<K>>&);           \
  extern template Ideal<K> groebner_basis(const Ideal<K>&);                                                \
  extern template Ideal<K> groebner_basis(const Ideal<K>&, const RingPtr&);                                \
  extern template Ideal<K> canonical_basis(const Ideal<K>&);                                               \
  extern template bool satisfies_buchberger_criterion(const std::vector<Polynomial<K>>&);                  \
  extern template Ideal<K> eliminate(const Ideal<K>&, const std::vector<std::string>&, RingPtr);           \
  extern template Ideal<K> saturate(const Ideal<K>&, const Polynomial<K>&);                                \
  extern template Ideal<K> saturate_by_variables(const Ideal<K>&, const std::vector<std::string>&);        \
  extern template bool ideal_contains(const Ideal<K>&, const Polynomial<K>&);                              \
  extern template bool ideal_equal(const Ideal<K>&, const Ideal<K>&);                                      \
  extern template class SubalgebraMembership<K>;                                                          \
  extern template Ideal<K> toric_kernel(const RingPtr&, const std::vector<MonomialImage<K>>&);

RESONAUT_GROEBNER_EXTERN(Rational)
RESONAUT_GROEBNER_EXTERN(Cyclotomic)
#undef RESONAUT_GROEBNER_EXTERN

}  // namespace resonaut
