#pragma once

#include "resonaut/groebner.hpp"
#include "resonaut/resonant.hpp"

#include <optional>
#include <vector>

namespace resonaut {

/// Components of a vector field over one ring; linear part diag(1, zeta, .., zeta^(n-1))
/// in the phase variables.
using VectorField = std::vector<ZPoly>;

/// True iff x^alpha in coordinate k (1-based) is resonant: alpha = (i,..,i) + e_k, i >= 1.
bool is_resonant(int n, int k, const IntVector& alpha);

/// zeta-bar . alpha - zeta^(k-1) for 1-based k, the homological divisor.
Cyclotomic resonance_defect(int n, int k, const IntVector& alpha);

/// Parameters followed by x1..xn, deglex, over Q(zeta_n).
RingPtr normal_form_ring(const SystemSpec& spec);
/// x_k (zeta^(k-1) + sum_p a^(k)_{T^(k-1)p} x^{T^(k-1)p}) in normal_form_ring.
VectorField system_field(const SystemSpec& spec);

/// Near-identity normalization up to total phase degree `order`; non-resonant terms are removed
/// with the resonant part of each transformation set to zero. `phase` lists the n phase variables.
VectorField normalize_field(const VectorField& field, const std::vector<int>& phase, int order);

struct NormalFormResult {
  int n = 0;
  int order = 0;
  RingPtr parameter_ring;          // Q(zeta)
  std::vector<std::vector<ZPoly>> q;  // q[k][i-1]: coefficient of x_k Phi^i
  VectorField field;               // the truncated normal form itself
};

NormalFormResult normal_form(const SystemSpec& spec, int order);

/// Every monomial [nu] of q_{k,i} has L(nu) = (i,..,i).
bool nf_grading_check(const NormalFormResult& nf, const SystemSpec& spec);
/// Every q_{k,i} lies in Q(zeta)[ [nu] : nu in the Hilbert basis ].
bool nf_invariance_check(const NormalFormResult& nf, const SystemSpec& spec);

struct FirstIntegral {
  bool solvable = false;
  int order = 0;
  ZPoly psi;                          // valid through degree `order`, or up to the obstruction
  int obstructed_degree = 0;
  IntVector obstructed_monomial;
  std::optional<Cyclotomic> obstruction;  // residual coefficient that cannot be cancelled
};

/// Psi = x1...xn + h.o.t. with X(Psi) = 0 through degree `order`, at an exact point.
FirstIntegral truncated_first_integral(const SystemSpec& spec, const ParameterPoint& point, int order);
/// Same for an explicit field whose ring is exactly the phase variables.
FirstIntegral truncated_first_integral(const VectorField& field, int order);

/// The field of `spec` with parameters replaced by the point; ring x1..xn over Q(zeta).
VectorField evaluate_field(const SystemSpec& spec, const ParameterPoint& point);

}  // namespace resonaut
