#include "resonaut/resonant.hpp"

#include <json.hpp>

#include <algorithm>
#include <set>

namespace resonaut {

SystemSpec validate_spec(int n, std::vector<IntVector> exponents) {
  if (!is_prime(n)) throw ValidationError("n must be prime");
  if (n > 23) throw ValidationError("n must be at most 23 (one letter per coordinate)");
  if (exponents.empty()) throw ValidationError("exponent list must not be empty");
  std::set<IntVector> seen;
  for (std::size_t k = 0; k < exponents.size(); ++k) {
    const auto& p = exponents[k];
    std::string where = "exponent " + std::to_string(k + 1);
    if (static_cast<int>(p.size()) != n) throw ValidationError(where + " must have length n");
    if (p[0] < -1) throw ValidationError(where + ": first entry must be at least -1");
    for (int j = 1; j < n; ++j)
      if (p[static_cast<std::size_t>(j)] < 0) throw ValidationError(where + ": negative entry beyond position 1");
    long sum = 0;
    for (int x : p) sum += x;
    if (sum < 1) throw ValidationError(where + ": entries must sum to at least 1");
    if (!seen.insert(p).second) throw ValidationError(where + " is a duplicate");
  }
  return SystemSpec{n, std::move(exponents)};
}

SystemSpec spec_from_json(const std::string& text) {
  nlohmann::json j;
  try {
    j = nlohmann::json::parse(text);
  } catch (const nlohmann::json::exception& e) {
    throw ValidationError(std::string("malformed spec: ") + e.what());
  }
  if (!j.is_object() || !j.contains("n") || !j.contains("exponents"))
    throw ValidationError("spec must be an object with \"n\" and \"exponents\"");
  if (!j["n"].is_number_integer()) throw ValidationError("\"n\" must be an integer");
  if (!j["exponents"].is_array()) throw ValidationError("\"exponents\" must be an array");
  std::vector<IntVector> exps;
  for (const auto& row : j["exponents"]) {
    if (!row.is_array()) throw ValidationError("each exponent must be an array of integers");
    IntVector p;
    for (const auto& x : row) {
      if (!x.is_number_integer()) throw ValidationError("each exponent must be an array of integers");
      p.push_back(x.get<int>());
    }
    exps.push_back(std::move(p));
  }
  return validate_spec(j["n"].get<int>(), std::move(exps));
}

std::string spec_to_json(const SystemSpec& spec) {
  nlohmann::json j;
  j["n"] = spec.n;
  j["exponents"] = spec.exponents;
  return j.dump();
}

IntVector cyclic_shift(const IntVector& p, int m) {
  const int n = static_cast<int>(p.size());
  IntVector out(p.size());
  m = ((m % n) + n) % n;
  for (int i = 0; i < n; ++i) out[static_cast<std::size_t>((i + m) % n)] = p[static_cast<std::size_t>(i)];
  return out;
}

std::string parameter_name(int j, const IntVector& q) {
  std::string name(1, static_cast<char>('a' + j));
  bool simple = std::all_of(q.begin(), q.end(), [](int x) { return x >= 0 && x <= 9; });
  if (simple) {
    for (int x : q) name += static_cast<char>('0' + x);
    return name;
  }
  name += "_";
  for (std::size_t i = 0; i < q.size(); ++i) {
    if (i) name += ",";
    name += q[i] < 0 ? "m" + std::to_string(-q[i]) : std::to_string(q[i]);
  }
  return name;
}

IntVector parameter_exponent(const SystemSpec& spec, int k, int j) {
  return cyclic_shift(spec.exponents[static_cast<std::size_t>(k)], j);
}

std::vector<std::string> parameter_vars(const SystemSpec& spec) {
  std::vector<std::string> out;
  for (int k = 0; k < spec.ell(); ++k)
    for (int j = 0; j < spec.n; ++j) out.push_back(parameter_name(j, parameter_exponent(spec, k, j)));
  return out;
}

RingPtr parameter_ring(const SystemSpec& spec, int cyclotomic_order) {
  return make_ring(parameter_vars(spec), OrderKind::DegLex, cyclotomic_order);
}

IntMatrix L_matrix(const SystemSpec& spec) {
  IntMatrix L(spec.n, spec.nvars());
  for (int k = 0; k < spec.ell(); ++k)
    for (int m = 0; m < spec.n; ++m) {
      IntVector q = parameter_exponent(spec, k, m);
      for (int i = 0; i < spec.n; ++i) L(i, k * spec.n + m) = q[static_cast<std::size_t>(i)];
    }
  return L;
}

IntMatrix M_matrix(const SystemSpec& spec) {
  IntMatrix L = L_matrix(spec);
  IntMatrix M(spec.n - 1, spec.nvars());
  for (int i = 0; i + 1 < spec.n; ++i) M.row(i) = L.row(i) - L.row(i + 1);
  return M;
}

namespace {

IntMatrix stack_block_rows(const SystemSpec& spec, const IntMatrix& top) {
  IntMatrix A = IntMatrix::Zero(top.rows() + spec.ell(), spec.nvars());
  A.topRows(top.rows()) = top;
  for (int k = 0; k < spec.ell(); ++k)
    for (int m = 0; m < spec.n; ++m) A(top.rows() + k, k * spec.n + m) = 1;
  return A;
}

}  // namespace

IntMatrix A_matrix(const SystemSpec& spec) { return stack_block_rows(spec, M_matrix(spec)); }

IntMatrix A_hat_matrix(const SystemSpec& spec) {
  IntMatrix L = L_matrix(spec);
  IntMatrix P(spec.n - 1, spec.nvars());
  for (int i = 0; i + 1 < spec.n; ++i) P.row(i) = L.row(i) - L.row(spec.n - 1);
  return stack_block_rows(spec, P);
}

namespace {

void check_length(const SystemSpec& spec, const IntVector& nu) {
  if (static_cast<int>(nu.size()) != spec.nvars()) throw StructuralError("exponent vector has wrong length");
}

}  // namespace

IntVector L_map(const SystemSpec& spec, const IntVector& nu) {
  check_length(spec, nu);
  return mat_apply(L_matrix(spec), nu);
}

IntVector involution(const SystemSpec& spec, const IntVector& nu) {
  check_length(spec, nu);
  IntVector out(nu.size());
  const auto n = static_cast<std::size_t>(spec.n);
  for (std::size_t b = 0; b < nu.size(); b += n)
    for (std::size_t i = 0; i < n; ++i) out[b + (i + 1) % n] = nu[b + i];
  return out;
}

bool is_self_conjugate(const SystemSpec& spec, const IntVector& nu) { return involution(spec, nu) == nu; }

Cyclotomic sigma(const SystemSpec& spec, const IntVector& nu) {
  IntVector l = L_map(spec, nu);
  std::vector<Rational> c;
  for (int x : l) c.emplace_back(x);
  return Cyclotomic(spec.n, std::move(c));
}

Cyclotomic weight(const SystemSpec& spec, const IntVector& nu) {
  check_length(spec, nu);
  long e = 0;
  for (std::size_t i = 0; i < nu.size(); ++i) e += static_cast<long>(i % static_cast<std::size_t>(spec.n)) * nu[i];
  return Cyclotomic::zeta_power(spec.n, e);
}

namespace {

Cyclotomic monomial_value(const std::vector<Cyclotomic>& base, const IntVector& q) {
  Cyclotomic v(base[0].order(), Rational(1));
  for (std::size_t i = 0; i < q.size(); ++i) v *= base[i].pow(q[i]);
  return v;
}

}  // namespace

bool check_cond_rev(const SystemSpec& spec, const ParameterPoint& point, const std::vector<Cyclotomic>& alphas,
                    int zeta_power) {
  if (static_cast<int>(alphas.size()) != spec.n) throw StructuralError("need one alpha per coordinate");
  Cyclotomic prod(spec.n, Rational(1));
  for (const auto& a : alphas) prod *= a;
  if (prod != Cyclotomic(spec.n, Rational(1))) throw StructuralError("alphas must multiply to 1");
  const Cyclotomic z = Cyclotomic::zeta_power(spec.n, zeta_power);
  auto value = [&](const std::string& name) {
    auto it = point.find(name);
    if (it == point.end()) throw StructuralError("point lacks parameter \"" + name + "\"");
    return it->second;
  };
  for (int k = 0; k < spec.ell(); ++k)
    for (int i = 0; i < spec.n; ++i) {
      IntVector q = parameter_exponent(spec, k, i);
      int next = (i + 1) % spec.n;
      Cyclotomic lhs = z * value(parameter_name(i, q)) * monomial_value(alphas, q);
      if (lhs != value(parameter_name(next, parameter_exponent(spec, k, next)))) return false;
    }
  return true;
}

ParameterPoint reversible_point(const SystemSpec& spec, const std::vector<Cyclotomic>& y,
                                const std::vector<Cyclotomic>& t, int zeta_power) {
  if (static_cast<int>(y.size()) != spec.ell() || static_cast<int>(t.size()) != spec.n)
    throw StructuralError("need one y per exponent and one t per coordinate");
  Cyclotomic prod(spec.n, Rational(1));
  for (const auto& x : t) prod *= x;
  if (prod != Cyclotomic(spec.n, Rational(1))) throw StructuralError("t entries must multiply to 1");
  ParameterPoint point;
  for (int k = 0; k < spec.ell(); ++k)
    for (int j = 0; j < spec.n; ++j) {
      IntVector q = parameter_exponent(spec, k, j);
      point.emplace(parameter_name(j, q), Cyclotomic::zeta_power(spec.n, static_cast<long>(j + 1) * zeta_power) *
                                              y[static_cast<std::size_t>(k)] * monomial_value(t, q));
    }
  return point;
}

std::vector<Cyclotomic> alphas_for(const std::vector<Cyclotomic>& t) {
  std::vector<Cyclotomic> out;
  for (std::size_t j = 0; j < t.size(); ++j) out.push_back(t[(j + 1) % t.size()] / t[j]);
  return out;
}

}  // namespace resonaut
