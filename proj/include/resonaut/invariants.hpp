#pragma once

#include "resonaut/groebner.hpp"
#include "resonaut/resonant.hpp"

#include <string>
#include <vector>

namespace resonaut {

/// [[M, 0], [E, E]] with E the identity on the columns of M.
IntMatrix lawrence_lift(const IntMatrix& M);

/// Minimal generators of {nu >= 0 : M nu = 0}, sorted ascending. Read off the reduced
/// basis of <x_i - z_i t^(M col i)> under a block order t > x > z as the binomials x^nu - z^nu.
std::vector<IntVector> hilbert_basis(const IntMatrix& M);
/// Hilbert basis of the invariant monoid, i.e. of M_matrix(spec).
std::vector<IntVector> invariant_hilbert_basis(const SystemSpec& spec);

/// [nu] - [nu^] for every non-self-conjugate Hilbert element, oriented with the
/// larger monomial first, monic, without duplicates. Over Q.
QIdeal sibirsky_ideal(const SystemSpec& spec);
/// zeta^|nu| [nu] - [nu^] over Q(zeta); self-conjugate elements vanish and are dropped.
ZIdeal reversibility_ideal(const SystemSpec& spec);

/// <x^b+ - x^b-> saturated by the product of all variables.
QIdeal lattice_ideal(const std::vector<IntVector>& basis, const RingPtr& ring);

enum class EquivariantRoute { Elimination, Toric };
enum class ZetaRoute { Elimination, ZetaToric };

EquivariantRoute parse_equivariant_route(const std::string& name);
ZetaRoute parse_zeta_route(const std::string& name);

QIdeal equivariant_ideal(const SystemSpec& spec, EquivariantRoute route);
ZIdeal zeta_reversible_ideal(const SystemSpec& spec, ZetaRoute route);

/// Kernel of a^(j)_{T^(j-1)p_k} -> zeta^(j*zeta_power) y_k t^{T^(j-1)p_k} with t_1...t_n = 1,
/// over Q(zeta). Power 1 gives the zeta-reversible ideal, power 0 the equivariant one.
ZIdeal parametrization_kernel(const SystemSpec& spec, int zeta_power);

struct SaturationReport {
  QIdeal sibirsky_saturated;
  QIdeal equivariant;
  bool equivariant_equal = false;
  ZIdeal reversibility_saturated;
  ZIdeal zeta_reversible;
  bool zeta_equal = false;

  bool ok() const { return equivariant_equal && zeta_equal; }
};

/// I_S : a^oo against the equivariant ideal and I_R : a^oo against the zeta-reversible
/// ideal. The two sides run concurrently when RESONAUT_THREADS allows.
SaturationReport check_saturation_theorems(const SystemSpec& spec);

struct TwoDimReport {
  QIdeal sibirsky;     // reduced basis
  QIdeal reversible;   // kernel of a_pq -> y t^(q-p), b_qp -> y t^(p-q)
  QIdeal lattice;      // lattice ideal of {nu - nu^}
  bool reversible_equal = false;
  bool lattice_equal = false;
  bool disjoint_support = false;

  bool ok() const { return reversible_equal && lattice_equal && disjoint_support; }
};

/// Planar identities; throws StructuralError unless n = 2.
TwoDimReport two_dim_crosschecks(const SystemSpec& spec);

/// Each binomial of `basis` has monomials with no common variable.
bool binomials_have_disjoint_support(const std::vector<QPoly>& basis);

/// Parallelism cap from RESONAUT_THREADS (default: hardware concurrency, at least 1).
int thread_limit();

}  // namespace resonaut
