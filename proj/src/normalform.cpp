#include "resonaut/normalform.hpp"

#include "resonaut/invariants.hpp"

namespace resonaut {

Cyclotomic resonance_defect(int n, int k, const IntVector& alpha) {
  if (static_cast<int>(alpha.size()) != n) throw StructuralError("exponent must have n entries");
  if (k < 1 || k > n) throw StructuralError("coordinate out of range");
  std::vector<Rational> c(static_cast<std::size_t>(n), Rational(0));
  for (int i = 0; i < n; ++i) c[static_cast<std::size_t>(i)] += alpha[static_cast<std::size_t>(i)];
  c[static_cast<std::size_t>(k - 1)] -= 1;
  Cyclotomic d(n);
  for (int i = 0; i < n; ++i) d += Cyclotomic::zeta_power(n, i) * c[static_cast<std::size_t>(i)];
  return d;
}

bool is_resonant(int n, int k, const IntVector& alpha) {
  int deg = 0;
  for (int x : alpha) deg += x;
  return deg >= 2 && resonance_defect(n, k, alpha).is_zero();
}

RingPtr normal_form_ring(const SystemSpec& spec) {
  auto names = parameter_vars(spec);
  for (int i = 0; i < spec.n; ++i) names.push_back("x" + std::to_string(i + 1));
  return make_ring(names, OrderKind::DegLex, spec.n);
}

namespace {

std::vector<int> phase_indices(int first, int n) {
  std::vector<int> v(static_cast<std::size_t>(n));
  for (int i = 0; i < n; ++i) v[static_cast<std::size_t>(i)] = first + i;
  return v;
}

IntVector phase_part(const Exponent& e, const std::vector<int>& phase) {
  IntVector a(phase.size());
  for (std::size_t i = 0; i < phase.size(); ++i) a[i] = e[static_cast<std::size_t>(phase[i])];
  return a;
}

// Coefficient list of x_k (zeta^(k-1) + sum a x^q); the parameter factor is supplied per term.
template <class MakeCoeff>
VectorField build_field(const SystemSpec& spec, const RingPtr& ring, int x0, MakeCoeff coeff) {
  const int n = spec.n;
  VectorField F;
  for (int k = 0; k < n; ++k) {
    Exponent lin(static_cast<std::size_t>(ring->nvars()), 0);
    lin[static_cast<std::size_t>(x0 + k)] = 1;
    ZPoly comp = ZPoly::monomial(ring, lin, Cyclotomic::zeta_power(n, k));
    for (int p = 0; p < spec.ell(); ++p) {
      IntVector q = parameter_exponent(spec, p, k);
      Exponent e = lin;
      for (int i = 0; i < n; ++i) e[static_cast<std::size_t>(x0 + i)] += q[static_cast<std::size_t>(i)];
      comp += coeff(p * n + k) * ZPoly::monomial(ring, e, Cyclotomic(n, Rational(1)));
    }
    F.push_back(std::move(comp));
  }
  return F;
}

// F(y + h(y)) truncated at `order` in the phase variables.
ZPoly compose(const ZPoly& f, const std::vector<int>& phase, const VectorField& h, int order) {
  const RingPtr& ring = f.ring();
  std::vector<std::vector<ZPoly>> powers(phase.size());
  ZPoly out(ring);
  for (const auto& t : f.terms()) {
    Exponent rest = t.exp;
    for (int v : phase) rest[static_cast<std::size_t>(v)] = 0;
    ZPoly acc = ZPoly::monomial(ring, rest, t.coeff);
    for (std::size_t i = 0; i < phase.size() && !acc.is_zero(); ++i) {
      int e = t.exp[static_cast<std::size_t>(phase[i])];
      if (e == 0) continue;
      auto& pw = powers[i];
      if (pw.empty()) {
        pw.push_back(ZPoly::constant(ring, 1));
        pw.push_back(ZPoly::variable(ring, phase[i]) + h[i]);
      }
      while (static_cast<int>(pw.size()) <= e) pw.push_back((pw.back() * pw[1]).truncate(phase, order));
      acc = (acc * pw[static_cast<std::size_t>(e)]).truncate(phase, order);
    }
    out += acc;
  }
  return out;
}

// (Dh v)_k = sum_i dh_k/dy_i v_i
VectorField jacobian_apply(const VectorField& h, const std::vector<int>& phase, const VectorField& v, int order) {
  VectorField out;
  for (const auto& hk : h) {
    ZPoly acc(hk.ring());
    if (!hk.is_zero())
      for (std::size_t i = 0; i < phase.size(); ++i) {
        if (v[i].is_zero()) continue;
        ZPoly d = hk.derivative(phase[i]);
        if (!d.is_zero()) acc += (d * v[i]).truncate(phase, order);
      }
    out.push_back(std::move(acc));
  }
  return out;
}

}  // namespace

VectorField system_field(const SystemSpec& spec) {
  RingPtr ring = normal_form_ring(spec);
  const int P = spec.nvars();
  return build_field(spec, ring, P, [&](int idx) { return ZPoly::variable(ring, idx); });
}

VectorField evaluate_field(const SystemSpec& spec, const ParameterPoint& point) {
  std::vector<std::string> names;
  for (int i = 0; i < spec.n; ++i) names.push_back("x" + std::to_string(i + 1));
  RingPtr ring = make_ring(names, OrderKind::DegLex, spec.n);
  auto vars = parameter_vars(spec);
  return build_field(spec, ring, 0, [&](int idx) {
    auto it = point.find(vars[static_cast<std::size_t>(idx)]);
    if (it == point.end()) throw StructuralError("point lacks parameter \"" + vars[static_cast<std::size_t>(idx)] + "\"");
    if (it->second.order() != spec.n) throw StructuralError("point value lives in the wrong cyclotomic field");
    return ZPoly::constant(ring, it->second);
  });
}

VectorField normalize_field(const VectorField& field, const std::vector<int>& phase, int order) {
  if (order < 2) throw StructuralError("normal form order must be at least 2");
  const int n = static_cast<int>(phase.size());
  if (static_cast<int>(field.size()) != n) throw StructuralError("one component per phase variable");
  VectorField F;
  for (const auto& c : field) F.push_back(c.truncate(phase, order));
  for (int j = 2; j <= order; ++j) {
    VectorField h;
    bool any = false;
    for (int k = 0; k < n; ++k) {
      std::vector<ZPoly::TermT> terms;
      ZPoly part = F[static_cast<std::size_t>(k)].homogeneous_part(phase, j);
      for (const auto& t : part.terms()) {
        Cyclotomic d = resonance_defect(n, k + 1, phase_part(t.exp, phase));
        if (d.is_zero()) continue;
        terms.push_back({t.exp, t.coeff / d});
      }
      any = any || !terms.empty();
      h.emplace_back(F[0].ring(), std::move(terms));
    }
    if (!any) continue;
    // x = y + h(y): solve (I + Dh) G = F(y + h) by fixed-point iteration.
    VectorField rhs;
    for (const auto& c : F) rhs.push_back(compose(c, phase, h, order));
    VectorField G = rhs;
    for (int it = 0; it <= order; ++it) {
      VectorField dg = jacobian_apply(h, phase, G, order);
      VectorField next;
      for (int k = 0; k < n; ++k) next.push_back(rhs[static_cast<std::size_t>(k)] - dg[static_cast<std::size_t>(k)]);
      if (next == G) break;
      G = std::move(next);
    }
    F = std::move(G);
  }
  return F;
}

NormalFormResult normal_form(const SystemSpec& spec, int order) {
  if (order < 2) throw StructuralError("normal form order must be at least 2");
  const int n = spec.n, P = spec.nvars();
  auto phase = phase_indices(P, n);
  NormalFormResult nf;
  nf.n = n;
  nf.order = order;
  nf.parameter_ring = parameter_ring(spec, n);
  nf.field = normalize_field(system_field(spec), phase, order);
  nf.q.resize(static_cast<std::size_t>(n));
  for (int k = 0; k < n; ++k)
    for (int i = 1; n * i + 1 <= order; ++i) {
      std::vector<ZPoly::TermT> terms;
      for (const auto& t : nf.field[static_cast<std::size_t>(k)].terms()) {
        IntVector a = phase_part(t.exp, phase);
        bool match = true;
        for (int m = 0; m < n && match; ++m) match = a[static_cast<std::size_t>(m)] == i + (m == k ? 1 : 0);
        if (!match) continue;
        terms.push_back({Exponent(t.exp.begin(), t.exp.begin() + P), t.coeff});
      }
      nf.q[static_cast<std::size_t>(k)].emplace_back(nf.parameter_ring, std::move(terms));
    }
  return nf;
}

bool nf_grading_check(const NormalFormResult& nf, const SystemSpec& spec) {
  for (const auto& row : nf.q)
    for (std::size_t i = 0; i < row.size(); ++i)
      for (const auto& t : row[i].terms())
        for (int v : L_map(spec, IntVector(t.exp.begin(), t.exp.end())))
          if (v != static_cast<int>(i) + 1) return false;
  return true;
}

bool nf_invariance_check(const NormalFormResult& nf, const SystemSpec& spec) {
  std::vector<ZPoly> gens;
  const Cyclotomic one(spec.n, Rational(1));
  for (const auto& nu : invariant_hilbert_basis(spec)) gens.push_back(bracket(nf.parameter_ring, nu, one));
  SubalgebraMembership<Cyclotomic> member(nf.parameter_ring, gens);
  for (const auto& row : nf.q)
    for (const auto& q : row)
      if (!q.is_zero() && !member.contains(q)) return false;
  return true;
}

FirstIntegral truncated_first_integral(const VectorField& field, int order) {
  if (field.empty()) throw StructuralError("empty vector field");
  const RingPtr& ring = field[0].ring();
  const int n = ring->nvars();
  if (static_cast<int>(field.size()) != n) throw StructuralError("one component per phase variable");
  if (order < n) throw StructuralError("first-integral order must be at least n");
  auto phase = phase_indices(0, n);
  FirstIntegral out{false, order, ZPoly::monomial(ring, Exponent(static_cast<std::size_t>(n), 1), Cyclotomic(n, Rational(1))),
                    0, {}, std::nullopt};
  for (int d = n + 1; d <= order; ++d) {
    ZPoly x_psi(ring);
    for (int k = 0; k < n; ++k) x_psi += (out.psi.derivative(k) * field[static_cast<std::size_t>(k)]).truncate(phase, d);
    std::vector<ZPoly::TermT> add;
    ZPoly part = x_psi.homogeneous_part(phase, d);
    for (const auto& t : part.terms()) {
      Cyclotomic lam(n);
      for (int i = 0; i < n; ++i) lam += Cyclotomic::zeta_power(n, i) * Rational(t.exp[static_cast<std::size_t>(i)]);
      if (lam.is_zero()) {
        out.obstructed_degree = d;
        out.obstructed_monomial = IntVector(t.exp.begin(), t.exp.end());
        out.obstruction = t.coeff;
        return out;
      }
      add.push_back({t.exp, -(t.coeff / lam)});
    }
    out.psi += ZPoly(ring, std::move(add));
  }
  out.solvable = true;
  return out;
}

FirstIntegral truncated_first_integral(const SystemSpec& spec, const ParameterPoint& point, int order) {
  return truncated_first_integral(evaluate_field(spec, point), order);
}

}  // namespace resonaut
