#include "cli.hpp"

#include "resonaut/invariants.hpp"
#include "resonaut/normalform.hpp"

#include <CLI11.hpp>
#include <json.hpp>

#include <algorithm>
#include <fstream>
#include <iostream>
#include <sstream>

namespace resonaut::cli {

namespace {

using nlohmann::json;

std::string read_file(const std::string& path, const char* what) {
  std::ifstream in(path);
  if (!in) throw ValidationError(std::string("cannot read ") + what + " file \"" + path + "\"");
  std::stringstream ss;
  ss << in.rdbuf();
  return ss.str();
}

SystemSpec load_spec(const std::string& path) { return spec_from_json(read_file(path, "spec")); }

ParameterPoint load_point(const SystemSpec& spec, const std::string& path) {
  json j;
  try {
    j = json::parse(read_file(path, "point"));
  } catch (const json::exception& e) {
    throw ValidationError(std::string("malformed point file: ") + e.what());
  }
  if (!j.is_object()) throw ValidationError("point file must map parameter names to values");
  ParameterPoint point;
  for (const auto& name : parameter_vars(spec)) {
    if (!j.contains(name)) throw ValidationError("point file lacks parameter \"" + name + "\"");
    const auto& v = j[name];
    std::string text = v.is_string() ? v.get<std::string>() : v.dump();
    try {
      point.emplace(name, parse_cyclotomic(spec.n, text));
    } catch (const StructuralError& e) {
      throw ValidationError("bad value for \"" + name + "\": " + e.what());
    }
  }
  for (const auto& [key, _] : j.items())
    if (!point.count(key)) throw ValidationError("point file names unknown parameter \"" + key + "\"");
  return point;
}

json matrix_json(const IntMatrix& M) {
  json rows = json::array();
  for (Eigen::Index r = 0; r < M.rows(); ++r) {
    json row = json::array();
    for (Eigen::Index c = 0; c < M.cols(); ++c) row.push_back(M(r, c));
    rows.push_back(row);
  }
  return rows;
}

std::string vector_text(const IntVector& v) {
  std::string s = "[";
  for (std::size_t i = 0; i < v.size(); ++i) s += (i ? ", " : "") + std::to_string(v[i]);
  return s + "]";
}

std::string field_name(const Ring& r) {
  return r.cyclotomic_order ? "Q(zeta_" + std::to_string(r.cyclotomic_order) + ")" : "Q";
}

template <class K>
std::string coeff_text(const K& c) {
  return to_string(c);
}

template <class K>
json poly_json(const Polynomial<K>& p) {
  json terms = json::array();
  for (const auto& t : p.terms()) terms.push_back({{"coefficient", coeff_text(t.coeff)}, {"exponent", t.exp}});
  return {{"text", p.to_string()}, {"terms", terms}};
}

template <class K>
json ideal_json(const Ideal<K>& I) {
  json gens = json::array();
  for (const auto& g : I.gens) gens.push_back(poly_json(g));
  return {{"field", field_name(*I.ring)}, {"variables", I.ring->names}, {"generators", gens}};
}

template <class K>
void print_ideal(std::ostream& out, const Ideal<K>& I) {
  for (const auto& g : I.gens) out << g.to_string() << "\n";
}

struct Options {
  bool as_json = false;
  std::string spec_path;
  std::string equivariant_route = "toric";
  std::string zeta_route = "zeta_toric";
  std::string point_path;
  int order = 0;
  bool verify = false;
  bool raw_generators = false;
};

int cmd_vars(const Options& o, std::ostream& out) {
  auto spec = load_spec(o.spec_path);
  auto vars = parameter_vars(spec);
  if (o.as_json)
    out << json{{"variables", vars}}.dump(2) << "\n";
  else
    for (const auto& v : vars) out << v << "\n";
  return kOk;
}

int cmd_matrices(const Options& o, std::ostream& out) {
  auto spec = load_spec(o.spec_path);
  std::vector<std::pair<std::string, IntMatrix>> ms = {
      {"L", L_matrix(spec)}, {"M", M_matrix(spec)}, {"A", A_matrix(spec)}, {"A_hat", A_hat_matrix(spec)}};
  if (o.as_json) {
    json j;
    for (const auto& [name, m] : ms) j[name] = matrix_json(m);
    j["kernels_coincide"] = kernels_coincide(ms[2].second, ms[3].second);
    out << j.dump(2) << "\n";
  } else {
    for (const auto& [name, m] : ms) out << name << "\n" << format_matrix(m);
  }
  return kOk;
}

int cmd_hilbert(const Options& o, std::ostream& out) {
  auto spec = load_spec(o.spec_path);
  auto basis = invariant_hilbert_basis(spec);
  if (o.as_json)
    out << json{{"hilbert_basis", basis}}.dump(2) << "\n";
  else
    for (const auto& v : basis) out << vector_text(v) << "\n";
  return kOk;
}

int cmd_sibirsky(const Options& o, std::ostream& out) {
  auto spec = load_spec(o.spec_path);
  QIdeal I = sibirsky_ideal(spec);
  if (!o.raw_generators) I = canonical_basis(I);
  if (o.as_json)
    out << ideal_json(I).dump(2) << "\n";
  else
    print_ideal(out, I);
  return kOk;
}

int cmd_equivariant(const Options& o, std::ostream& out) {
  auto spec = load_spec(o.spec_path);
  QIdeal I = equivariant_ideal(spec, parse_equivariant_route(o.equivariant_route));
  if (o.as_json)
    out << ideal_json(I).dump(2) << "\n";
  else
    print_ideal(out, I);
  return kOk;
}

int cmd_zeta(const Options& o, std::ostream& out) {
  auto spec = load_spec(o.spec_path);
  ZIdeal I = zeta_reversible_ideal(spec, parse_zeta_route(o.zeta_route));
  if (o.as_json)
    out << ideal_json(I).dump(2) << "\n";
  else
    print_ideal(out, I);
  return kOk;
}

int cmd_saturation(const Options& o, std::ostream& out) {
  auto spec = load_spec(o.spec_path);
  auto r = check_saturation_theorems(spec);
  if (o.as_json) {
    out << json{{"sibirsky_saturated", ideal_json(r.sibirsky_saturated)},
                {"equivariant", ideal_json(r.equivariant)},
                {"equivariant_equal", r.equivariant_equal},
                {"reversibility_saturated", ideal_json(r.reversibility_saturated)},
                {"zeta_reversible", ideal_json(r.zeta_reversible)},
                {"zeta_equal", r.zeta_equal}}
               .dump(2)
        << "\n";
  } else {
    out << "I_S : a^oo == I_E: " << (r.equivariant_equal ? "true" : "false") << "\n";
    out << "I_R : a^oo == I_zeta: " << (r.zeta_equal ? "true" : "false") << "\n";
    out << "I_S : a^oo\n";
    print_ideal(out, r.sibirsky_saturated);
    out << "I_R : a^oo\n";
    print_ideal(out, r.reversibility_saturated);
  }
  return r.ok() ? kOk : kVerificationFailed;
}

int cmd_crosscheck(const Options& o, std::ostream& out) {
  auto spec = load_spec(o.spec_path);
  if (spec.n != 2) throw ValidationError("crosscheck-2d needs n = 2");
  auto r = two_dim_crosschecks(spec);
  if (o.as_json) {
    out << json{{"sibirsky", ideal_json(r.sibirsky)},
                {"reversible_equal", r.reversible_equal},
                {"lattice_equal", r.lattice_equal},
                {"disjoint_support", r.disjoint_support}}
               .dump(2)
        << "\n";
  } else {
    out << "I_S == reversibility kernel: " << (r.reversible_equal ? "true" : "false") << "\n";
    out << "I_S == lattice ideal: " << (r.lattice_equal ? "true" : "false") << "\n";
    out << "disjoint supports: " << (r.disjoint_support ? "true" : "false") << "\n";
    print_ideal(out, r.sibirsky);
  }
  return r.ok() ? kOk : kVerificationFailed;
}

int cmd_normal_form(const Options& o, std::ostream& out) {
  auto spec = load_spec(o.spec_path);
  if (o.order < 2) throw ValidationError("--order must be at least 2");
  auto nf = normal_form(spec, o.order);
  bool graded = true, invariant = true;
  if (o.verify) {
    graded = nf_grading_check(nf, spec);
    invariant = nf_invariance_check(nf, spec);
  }
  if (o.as_json) {
    json qs = json::array();
    for (std::size_t k = 0; k < nf.q.size(); ++k)
      for (std::size_t i = 0; i < nf.q[k].size(); ++i) {
        json q = poly_json(nf.q[k][i]);
        q["coordinate"] = k + 1;
        q["power"] = i + 1;
        qs.push_back(q);
      }
    json j{{"order", o.order}, {"field", field_name(*nf.parameter_ring)}, {"variables", nf.parameter_ring->names},
           {"coefficients", qs}};
    if (o.verify) j["verification"] = {{"grading", graded}, {"invariant_subalgebra", invariant}};
    out << j.dump(2) << "\n";
  } else {
    for (std::size_t k = 0; k < nf.q.size(); ++k)
      for (std::size_t i = 0; i < nf.q[k].size(); ++i)
        out << "q[" << k + 1 << "," << i + 1 << "] = " << nf.q[k][i].to_string() << "\n";
    if (o.verify) {
      out << "grading: " << (graded ? "pass" : "FAIL") << "\n";
      out << "invariant subalgebra: " << (invariant ? "pass" : "FAIL") << "\n";
    }
  }
  return graded && invariant ? kOk : kVerificationFailed;
}

int cmd_integral(const Options& o, std::ostream& out) {
  auto spec = load_spec(o.spec_path);
  if (o.order < spec.n) throw ValidationError("--order must be at least n");
  auto point = load_point(spec, o.point_path);
  auto fi = truncated_first_integral(spec, point, o.order);
  if (o.as_json) {
    json j{{"order", o.order}, {"solvable", fi.solvable}, {"psi", poly_json(fi.psi)}};
    if (!fi.solvable)
      j["obstruction"] = {{"degree", fi.obstructed_degree},
                          {"monomial", fi.obstructed_monomial},
                          {"residual", to_string(*fi.obstruction)}};
    out << j.dump(2) << "\n";
  } else if (fi.solvable) {
    out << "solvable through degree " << o.order << "\n";
    out << "psi = " << fi.psi.to_string() << "\n";
  } else {
    out << "obstructed at degree " << fi.obstructed_degree << ": monomial "
        << monomial_to_string(*fi.psi.ring(), Exponent(fi.obstructed_monomial.begin(), fi.obstructed_monomial.end()))
        << ", residual " << to_string(*fi.obstruction) << "\n";
    out << "psi (through degree " << fi.obstructed_degree - 1 << ") = " << fi.psi.to_string() << "\n";
  }
  return kOk;
}

}  // namespace

int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
  CLI::App app{"Invariants, reversibility ideals and normal forms of resonant polynomial systems", "resonaut"};
  app.require_subcommand(1);
  Options o;
  app.add_flag("--json", o.as_json, "Structured JSON output");
  app.fallthrough();

  auto with_spec = [&](CLI::App* sub) {
    sub->add_option("spec", o.spec_path, "Spec JSON file")->required();
    return sub;
  };
  auto* vars = with_spec(app.add_subcommand("vars", "List the ordered parameter variables"));
  auto* matrices = with_spec(app.add_subcommand("matrices", "Print L, M, A and A_hat"));
  auto* hilbert = with_spec(app.add_subcommand("hilbert", "Hilbert basis of the invariant monoid"));
  auto* sibirsky = with_spec(app.add_subcommand("sibirsky", "Reduced deglex basis of the Sibirsky ideal"));
  sibirsky->add_flag("--generators", o.raw_generators, "Print the raw binomial generators instead");
  auto* equivariant = with_spec(app.add_subcommand("equivariant", "Equivariant ideal"));
  equivariant->add_option("--route", o.equivariant_route, "elimination or toric")->capture_default_str();
  auto* zeta = with_spec(app.add_subcommand("zeta-reversible", "zeta-reversibility ideal over Q(zeta)"));
  zeta->add_option("--route", o.zeta_route, "elimination or zeta_toric")->capture_default_str();
  auto* saturation = with_spec(app.add_subcommand("check-saturation", "Verify both saturation identities"));
  auto* cross = with_spec(app.add_subcommand("crosscheck-2d", "Planar ideal identities (n = 2)"));
  auto* nform = with_spec(app.add_subcommand("normal-form", "Resonant normal-form coefficients"));
  nform->add_option("--order", o.order, "Truncation order")->required();
  nform->add_flag("--verify", o.verify, "Check grading and invariant-subalgebra membership");
  auto* integral = with_spec(app.add_subcommand("integral", "Truncated first integral at a point"));
  integral->add_option("--point", o.point_path, "Point JSON file")->required();
  integral->add_option("--order", o.order, "Truncation order")->required();

  std::vector<std::string> reversed(args.rbegin(), args.rend());
  try {
    app.parse(reversed);
  } catch (const CLI::CallForHelp&) {
    out << app.help();
    return kOk;
  } catch (const CLI::CallForAllHelp&) {
    out << app.help("", CLI::AppFormatMode::All);
    return kOk;
  } catch (const CLI::ParseError& e) {
    err << "error: " << e.what() << "\n";
    return kInvalid;
  }

  try {
    if (*vars) return cmd_vars(o, out);
    if (*matrices) return cmd_matrices(o, out);
    if (*hilbert) return cmd_hilbert(o, out);
    if (*sibirsky) return cmd_sibirsky(o, out);
    if (*equivariant) return cmd_equivariant(o, out);
    if (*zeta) return cmd_zeta(o, out);
    if (*saturation) return cmd_saturation(o, out);
    if (*cross) return cmd_crosscheck(o, out);
    if (*nform) return cmd_normal_form(o, out);
    if (*integral) return cmd_integral(o, out);
  } catch (const ValidationError& e) {
    err << "error: " << e.what() << "\n";
    return kInvalid;
  } catch (const StructuralError& e) {
    err << "error: " << e.what() << "\n";
    return kInvalid;
  } catch (const std::exception& e) {
    err << "internal error: " << e.what() << "\n";
    return kVerificationFailed;
  }
  return kInvalid;
}

}  // namespace resonaut::cli
