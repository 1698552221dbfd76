#include "resonaut/invariants.hpp"

#include <algorithm>
#include <cstdlib>
#include <future>
#include <thread>

namespace resonaut {

IntMatrix lawrence_lift(const IntMatrix& M) {
  const Eigen::Index d = M.rows(), c = M.cols();
  IntMatrix L = IntMatrix::Zero(d + c, 2 * c);
  L.topLeftCorner(d, c) = M;
  L.bottomLeftCorner(c, c) = IntMatrix::Identity(c, c);
  L.bottomRightCorner(c, c) = IntMatrix::Identity(c, c);
  return L;
}

std::vector<IntVector> hilbert_basis(const IntMatrix& M) {
  const int d = static_cast<int>(M.rows()), c = static_cast<int>(M.cols());
  std::vector<std::string> names;
  std::vector<int> t_idx(static_cast<std::size_t>(d)), s_idx(static_cast<std::size_t>(d), -1);
  for (int j = 0; j < d; ++j) {
    t_idx[static_cast<std::size_t>(j)] = static_cast<int>(names.size());
    names.push_back("t" + std::to_string(j + 1));
  }
  for (int j = 0; j < d; ++j)
    if ((M.row(j).array() < 0).any()) {
      s_idx[static_cast<std::size_t>(j)] = static_cast<int>(names.size());
      names.push_back("s" + std::to_string(j + 1));
    }
  const int x0 = static_cast<int>(names.size()), z0 = x0 + c;
  for (int i = 0; i < c; ++i) names.push_back("x" + std::to_string(i + 1));
  for (int i = 0; i < c; ++i) names.push_back("z" + std::to_string(i + 1));

  std::vector<int> aux(static_cast<std::size_t>(x0)), xs(static_cast<std::size_t>(c)), zs(static_cast<std::size_t>(c));
  for (int i = 0; i < x0; ++i) aux[static_cast<std::size_t>(i)] = i;
  for (int i = 0; i < c; ++i) {
    xs[static_cast<std::size_t>(i)] = x0 + i;
    zs[static_cast<std::size_t>(i)] = z0 + i;
  }
  std::vector<OrderBlock> blocks;
  if (x0 > 0) blocks.push_back({aux, OrderKind::DegLex});
  blocks.push_back({xs, OrderKind::DegLex});
  blocks.push_back({zs, OrderKind::DegLex});
  RingPtr ring = make_ring(names, MonomialOrder(blocks));

  std::vector<QPoly> gens;
  for (int i = 0; i < c; ++i) {
    Exponent e(names.size(), 0);
    e[static_cast<std::size_t>(z0 + i)] = 1;
    for (int j = 0; j < d; ++j) {
      long long a = M(j, i);
      if (a > 0) e[static_cast<std::size_t>(t_idx[static_cast<std::size_t>(j)])] = static_cast<int>(a);
      if (a < 0) e[static_cast<std::size_t>(s_idx[static_cast<std::size_t>(j)])] = static_cast<int>(-a);
    }
    gens.push_back(QPoly::variable(ring, x0 + i) - QPoly::monomial(ring, e, Rational(1)));
  }
  for (int j = 0; j < d; ++j)
    if (s_idx[static_cast<std::size_t>(j)] >= 0)
      gens.push_back(QPoly::variable(ring, t_idx[static_cast<std::size_t>(j)]) *
                         QPoly::variable(ring, s_idx[static_cast<std::size_t>(j)]) -
                     QPoly::constant(ring, 1));

  QIdeal gb = groebner_basis(QIdeal(ring, std::move(gens)));
  std::vector<IntVector> out;
  for (const auto& g : gb.gens) {
    if (g.size() != 2) continue;
    const auto& hi = g.terms()[0];
    const auto& lo = g.terms()[1];
    if (hi.coeff != 1 || lo.coeff != -1) continue;
    IntVector nu(static_cast<std::size_t>(c));
    bool ok = true;
    for (int i = 0; i < x0 && ok; ++i)
      ok = hi.exp[static_cast<std::size_t>(i)] == 0 && lo.exp[static_cast<std::size_t>(i)] == 0;
    for (int i = 0; i < c && ok; ++i) {
      auto k = static_cast<std::size_t>(i);
      int vx = hi.exp[static_cast<std::size_t>(x0 + i)], vz = lo.exp[static_cast<std::size_t>(z0 + i)];
      ok = vx == vz && hi.exp[static_cast<std::size_t>(z0 + i)] == 0 && lo.exp[static_cast<std::size_t>(x0 + i)] == 0;
      nu[k] = vx;
    }
    if (ok) out.push_back(std::move(nu));
  }
  std::sort(out.begin(), out.end());
  return out;
}

std::vector<IntVector> invariant_hilbert_basis(const SystemSpec& spec) { return hilbert_basis(M_matrix(spec)); }

namespace {

template <class K>
void push_unique(std::vector<Polynomial<K>>& out, Polynomial<K> p) {
  if (p.is_zero()) return;
  p = p.monic();
  if (std::find(out.begin(), out.end(), p) == out.end()) out.push_back(std::move(p));
}

}  // namespace

QIdeal sibirsky_ideal(const SystemSpec& spec) {
  RingPtr ring = parameter_ring(spec);
  std::vector<QPoly> gens;
  for (const auto& nu : invariant_hilbert_basis(spec)) {
    IntVector hat = involution(spec, nu);
    if (hat == nu) continue;
    push_unique(gens, bracket(ring, nu, Rational(1)) - bracket(ring, hat, Rational(1)));
  }
  return QIdeal(ring, std::move(gens));
}

ZIdeal reversibility_ideal(const SystemSpec& spec) {
  RingPtr ring = parameter_ring(spec, spec.n);
  const Cyclotomic one(spec.n, Rational(1));
  std::vector<ZPoly> gens;
  for (const auto& nu : invariant_hilbert_basis(spec)) {
    IntVector hat = involution(spec, nu);
    if (hat == nu) continue;
    long size = 0;
    for (int x : nu) size += x;
    push_unique(gens, bracket(ring, nu, Cyclotomic::zeta_power(spec.n, size)) - bracket(ring, hat, one));
  }
  return ZIdeal(ring, std::move(gens));
}

namespace {

template <class K>
Polynomial<K> lattice_binomial(const RingPtr& ring, const IntVector& beta, const K& plus_coeff, const K& minus_coeff) {
  IntVector plus(beta.size()), minus(beta.size());
  for (std::size_t i = 0; i < beta.size(); ++i) {
    plus[i] = std::max(beta[i], 0);
    minus[i] = std::max(-beta[i], 0);
  }
  return bracket(ring, plus, plus_coeff) - bracket(ring, minus, minus_coeff);
}

IntVector column(const IntMatrix& K, Eigen::Index c) {
  IntVector v(static_cast<std::size_t>(K.rows()));
  for (Eigen::Index r = 0; r < K.rows(); ++r) v[static_cast<std::size_t>(r)] = static_cast<int>(K(r, c));
  return v;
}

}  // namespace

QIdeal lattice_ideal(const std::vector<IntVector>& basis, const RingPtr& ring) {
  std::vector<QPoly> gens;
  for (const auto& b : basis) {
    if (static_cast<int>(b.size()) != ring->nvars()) throw StructuralError("lattice vector has wrong length");
    push_unique(gens, lattice_binomial(ring, b, Rational(1), Rational(1)));
  }
  return saturate_by_variables(QIdeal(ring, std::move(gens)), ring->names);
}

EquivariantRoute parse_equivariant_route(const std::string& name) {
  if (name == "elimination") return EquivariantRoute::Elimination;
  if (name == "toric") return EquivariantRoute::Toric;
  throw ValidationError("unknown route \"" + name + "\" (expected elimination or toric)");
}

ZetaRoute parse_zeta_route(const std::string& name) {
  if (name == "elimination") return ZetaRoute::Elimination;
  if (name == "zeta_toric") return ZetaRoute::ZetaToric;
  throw ValidationError("unknown route \"" + name + "\" (expected elimination or zeta_toric)");
}

namespace {

// <factor * a^(i) alpha^q - a^(i+1), 1 - alpha_1...alpha_n> with inverse partners, alphas eliminated.
template <class K>
Ideal<K> alpha_elimination(const SystemSpec& spec, const RingPtr& target, const K& factor) {
  const int n = spec.n;
  std::vector<bool> needs_inverse(static_cast<std::size_t>(n), false);
  for (int k = 0; k < spec.ell(); ++k)
    for (int j = 0; j < n; ++j) {
      IntVector q = parameter_exponent(spec, k, j);
      for (int i = 0; i < n; ++i)
        if (q[static_cast<std::size_t>(i)] < 0) needs_inverse[static_cast<std::size_t>(i)] = true;
    }
  std::vector<std::string> names, drop;
  std::vector<int> inv_idx(static_cast<std::size_t>(n), -1);
  for (int i = 0; i < n; ++i) names.push_back("_alpha" + std::to_string(i + 1));
  for (int i = 0; i < n; ++i)
    if (needs_inverse[static_cast<std::size_t>(i)]) {
      inv_idx[static_cast<std::size_t>(i)] = static_cast<int>(names.size());
      names.push_back("_beta" + std::to_string(i + 1));
    }
  drop = names;
  const int p0 = static_cast<int>(names.size());
  names.insert(names.end(), target->names.begin(), target->names.end());
  RingPtr big = make_ring(names, OrderKind::DegLex, target->cyclotomic_order);

  using P = Polynomial<K>;
  const K one = Field<K>::one(target->cyclotomic_order);
  std::vector<P> gens;
  Exponent all_alpha(names.size(), 0);
  for (int i = 0; i < n; ++i) all_alpha[static_cast<std::size_t>(i)] = 1;
  gens.push_back(P::constant(big, 1) - P::monomial(big, all_alpha, one));
  for (int i = 0; i < n; ++i)
    if (inv_idx[static_cast<std::size_t>(i)] >= 0)
      gens.push_back(P::variable(big, i) * P::variable(big, inv_idx[static_cast<std::size_t>(i)]) - P::constant(big, 1));
  for (int k = 0; k < spec.ell(); ++k)
    for (int j = 0; j < n; ++j) {
      IntVector q = parameter_exponent(spec, k, j);
      Exponent e(names.size(), 0);
      e[static_cast<std::size_t>(p0 + k * n + j)] = 1;
      for (int i = 0; i < n; ++i) {
        int x = q[static_cast<std::size_t>(i)];
        if (x > 0) e[static_cast<std::size_t>(i)] = x;
        if (x < 0) e[static_cast<std::size_t>(inv_idx[static_cast<std::size_t>(i)])] = -x;
      }
      int next = k * n + (j + 1) % n;
      gens.push_back(P::monomial(big, e, factor) - P::variable(big, p0 + next));
    }
  return eliminate(Ideal<K>(big, std::move(gens)), drop, target);
}

template <class K>
std::vector<MonomialImage<K>> parametrization_images(const SystemSpec& spec, int zeta_power) {
  const int n = spec.n, ell = spec.ell();
  std::vector<MonomialImage<K>> images;
  for (int k = 0; k < ell; ++k)
    for (int j = 0; j < n; ++j) {
      IntVector q = parameter_exponent(spec, k, j);
      MonomialImage<K> im{Field<K>::one(n), std::vector<int>(static_cast<std::size_t>(ell + n - 1), 0)};
      if constexpr (std::is_same_v<K, Cyclotomic>) im.unit = Cyclotomic::zeta_power(n, static_cast<long>(j + 1) * zeta_power);
      im.laurent[static_cast<std::size_t>(k)] = 1;
      for (int i = 0; i + 1 < n; ++i)
        im.laurent[static_cast<std::size_t>(ell + i)] = q[static_cast<std::size_t>(i)] - q[static_cast<std::size_t>(n - 1)];
      images.push_back(std::move(im));
    }
  return images;
}

}  // namespace

QIdeal equivariant_ideal(const SystemSpec& spec, EquivariantRoute route) {
  RingPtr ring = parameter_ring(spec);
  if (route == EquivariantRoute::Elimination) return alpha_elimination<Rational>(spec, ring, Rational(1));
  return toric_kernel(ring, parametrization_images<Rational>(spec, 0));
}

ZIdeal parametrization_kernel(const SystemSpec& spec, int zeta_power) {
  return toric_kernel(parameter_ring(spec, spec.n), parametrization_images<Cyclotomic>(spec, zeta_power));
}

ZIdeal zeta_reversible_ideal(const SystemSpec& spec, ZetaRoute route) {
  RingPtr ring = parameter_ring(spec, spec.n);
  if (route == ZetaRoute::Elimination) return alpha_elimination<Cyclotomic>(spec, ring, Cyclotomic::zeta(spec.n));
  IntMatrix K = integer_kernel(A_matrix(spec));
  std::vector<ZPoly> gens;
  for (Eigen::Index c = 0; c < K.cols(); ++c) {
    IntVector beta = column(K, c), plus(beta.size()), minus(beta.size());
    for (std::size_t i = 0; i < beta.size(); ++i) {
      plus[i] = std::max(beta[i], 0);
      minus[i] = std::max(-beta[i], 0);
    }
    push_unique(gens, lattice_binomial(ring, beta, weight(spec, minus), weight(spec, plus)));
  }
  return saturate_by_variables(ZIdeal(ring, std::move(gens)), ring->names);
}

int thread_limit() {
  if (const char* env = std::getenv("RESONAUT_THREADS")) {
    char* end = nullptr;
    long v = std::strtol(env, &end, 10);
    if (end != env && *end == '\0' && v >= 1) return static_cast<int>(v);
  }
  return std::max(1u, std::thread::hardware_concurrency());
}

SaturationReport check_saturation_theorems(const SystemSpec& spec) {
  const auto params = parameter_vars(spec);
  auto rational_side = [&] {
    QIdeal sat = saturate_by_variables(sibirsky_ideal(spec), params);
    QIdeal eq = equivariant_ideal(spec, EquivariantRoute::Elimination);
    bool equal = ideal_equal(sat, eq);
    return std::tuple{std::move(sat), std::move(eq), equal};
  };
  auto zeta_side = [&] {
    ZIdeal sat = saturate_by_variables(reversibility_ideal(spec), params);
    ZIdeal zr = zeta_reversible_ideal(spec, ZetaRoute::Elimination);
    bool equal = ideal_equal(sat, zr);
    return std::tuple{std::move(sat), std::move(zr), equal};
  };
  auto policy = thread_limit() >= 2 ? std::launch::async : std::launch::deferred;
  auto zeta_future = std::async(policy, zeta_side);
  auto [qs, qe, qeq] = rational_side();
  auto [zs, ze, zeq] = zeta_future.get();
  return SaturationReport{std::move(qs), std::move(qe), qeq, std::move(zs), std::move(ze), zeq};
}

bool binomials_have_disjoint_support(const std::vector<QPoly>& basis) {
  for (const auto& g : basis) {
    if (g.size() != 2) return false;
    const auto& a = g.terms()[0].exp;
    const auto& b = g.terms()[1].exp;
    for (std::size_t i = 0; i < a.size(); ++i)
      if (a[i] > 0 && b[i] > 0) return false;
  }
  return true;
}

TwoDimReport two_dim_crosschecks(const SystemSpec& spec) {
  if (spec.n != 2) throw StructuralError("planar cross-checks need n = 2");
  RingPtr ring = parameter_ring(spec);
  const int ell = spec.ell();

  QIdeal sib = canonical_basis(sibirsky_ideal(spec));

  std::vector<MonomialImage<Rational>> images;
  for (int k = 0; k < ell; ++k) {
    const IntVector& p = spec.exponents[static_cast<std::size_t>(k)];
    for (int sign : {1, -1}) {
      MonomialImage<Rational> im{Rational(1), std::vector<int>(static_cast<std::size_t>(ell + 1), 0)};
      im.laurent[static_cast<std::size_t>(k)] = 1;
      im.laurent[static_cast<std::size_t>(ell)] = sign * (p[1] - p[0]);
      images.push_back(std::move(im));
    }
  }
  QIdeal rev = toric_kernel(ring, images);

  std::vector<IntVector> diffs;
  for (const auto& nu : invariant_hilbert_basis(spec)) {
    IntVector hat = involution(spec, nu), d(nu.size());
    for (std::size_t i = 0; i < nu.size(); ++i) d[i] = nu[i] - hat[i];
    diffs.push_back(std::move(d));
  }
  QIdeal lat = lattice_ideal(diffs, ring);

  TwoDimReport r{sib, rev, lat, false, false, false};
  r.reversible_equal = ideal_equal(sib, rev);
  r.lattice_equal = ideal_equal(sib, lat);
  r.disjoint_support = binomials_have_disjoint_support(sib.gens);
  return r;
}

}  // namespace resonaut
