#pragma once

#include "resonaut/integer_matrix.hpp"
#include "resonaut/multipoly.hpp"

#include <map>
#include <stdexcept>
#include <string>
#include <vector>

namespace resonaut {

/// A spec violating its invariants; the CLI maps this to exit code 1.
class ValidationError : public std::invalid_argument {
public:
  using std::invalid_argument::invalid_argument;
};

/// Family x_j' = x_j (zeta^(j-1) + sum_k a^(j)_{T^(j-1) p_k} x^{T^(j-1) p_k}).
struct SystemSpec {
  int n = 0;
  std::vector<IntVector> exponents;

  int ell() const { return static_cast<int>(exponents.size()); }
  int nvars() const { return n * ell(); }
  friend bool operator==(const SystemSpec&, const SystemSpec&) = default;
};

SystemSpec validate_spec(int n, std::vector<IntVector> exponents);
/// {"n": 3, "exponents": [[1,0,0], ...]}
SystemSpec spec_from_json(const std::string& text);
std::string spec_to_json(const SystemSpec& spec);

/// T^m p with T(p_1..p_n) = (p_n, p_1, .., p_(n-1)).
IntVector cyclic_shift(const IntVector& p, int m);

/// Name of a^(j)_q: j-th letter followed by the exponent digits, e.g. "b110";
/// entries outside 0..9 switch to "b_m1,2" style.
std::string parameter_name(int j, const IntVector& q);
/// Block k holds a^(1)_p, a^(2)_{Tp}, ..., a^(n)_{T^(n-1)p} for p = p^(k).
std::vector<std::string> parameter_vars(const SystemSpec& spec);
/// Exponent q = T^(j-1) p^(k) carried by variable (k, j), both zero-based.
IntVector parameter_exponent(const SystemSpec& spec, int k, int j);

/// Deglex ring on parameter_vars; cyclotomic_order 0 gives Q, n gives Q(zeta_n).
RingPtr parameter_ring(const SystemSpec& spec, int cyclotomic_order = 0);

IntMatrix L_matrix(const SystemSpec& spec);
IntMatrix M_matrix(const SystemSpec& spec);
IntMatrix A_matrix(const SystemSpec& spec);
IntMatrix A_hat_matrix(const SystemSpec& spec);

IntVector L_map(const SystemSpec& spec, const IntVector& nu);
/// Cyclic shift inside every block of n entries.
IntVector involution(const SystemSpec& spec, const IntVector& nu);
Cyclotomic sigma(const SystemSpec& spec, const IntVector& nu);
Cyclotomic weight(const SystemSpec& spec, const IntVector& nu);
bool is_self_conjugate(const SystemSpec& spec, const IntVector& nu);

using ParameterPoint = std::map<std::string, Cyclotomic>;

/// Pointwise reversibility equations with zeta replaced by zeta^zeta_power
/// (power 0 tests equivariance). Requires alphas to multiply to 1.
bool check_cond_rev(const SystemSpec& spec, const ParameterPoint& point, const std::vector<Cyclotomic>& alphas,
                    int zeta_power);

/// a^(j)_{T^(j-1) p_k} = zeta^(j * zeta_power) y_k t^{T^(j-1) p_k}; requires t_1...t_n = 1.
ParameterPoint reversible_point(const SystemSpec& spec, const std::vector<Cyclotomic>& y,
                                const std::vector<Cyclotomic>& t, int zeta_power);
/// alpha_j = t_(j+1) / t_j (cyclically), the symmetry matching reversible_point.
std::vector<Cyclotomic> alphas_for(const std::vector<Cyclotomic>& t);

/// Monomial [nu] in the given parameter ring.
template <class K>
Polynomial<K> bracket(const RingPtr& ring, const IntVector& nu, const K& coeff) {
  return Polynomial<K>::monomial(ring, Exponent(nu.begin(), nu.end()), coeff);
}

}  // namespace resonaut
