#include "diagmaps/cli.hpp"

#include <CLI11.hpp>
#include <algorithm>
#include <array>
#include <functional>
#include <ostream>
#include <sstream>

#include "diagmaps/gammaseq.hpp"
#include "diagmaps/json_io.hpp"
#include "diagmaps/orbits.hpp"

namespace diagmaps::cli {

namespace {

constexpr const char* kTableDataNote =
    "note: result uses sphere table data (see data/spheres.json)";

std::string canon(const FgAbGroup& g) { return g.canonical_form().to_string(); }

std::string pad(const std::string& s, std::size_t width) {
  return s.size() >= width ? s : s + std::string(width - s.size(), ' ');
}

Json group_with_canonical(const FgAbGroup& g) {
  Json j = group_to_json(g);
  j["canonical"] = canon(g);
  return j;
}

void print_json(std::ostream& out, const Json& j) { out << j.dump(2) << "\n"; }

// ---- fgab --------------------------------------------------------------

void run_fgab_snf(std::ostream& out, const std::string& path, bool as_json) {
  Json j = load_json_file(path);
  IntMatrix m = matrix_from_json(j.contains("matrix") ? j.at("matrix") : j);
  SmithNormalForm f = smith_normal_form(m);
  if (as_json) {
    Json o;
    o["s"] = matrix_to_json(f.s);
    o["u"] = matrix_to_json(f.u);
    o["v"] = matrix_to_json(f.v);
    print_json(out, o);
  } else {
    out << "S =\n" << f.s.to_string() << "\n";
    out << "U =\n" << f.u.to_string() << "\n";
    out << "V =\n" << f.v.to_string() << "\n";
  }
}

void run_fgab_group(std::ostream& out, const std::string& path, bool as_json) {
  FgAbGroup g = group_from_json(load_json_file(path));
  if (as_json) {
    print_json(out, group_with_canonical(g));
  } else {
    out << canon(g) << "\n";
  }
}

// ---- gamma -------------------------------------------------------------

void run_gamma_group(std::ostream& out, const std::string& path, bool as_json) {
  GammaGroup g = gamma_group(group_from_json(load_json_file(path)));
  if (as_json) {
    print_json(out, group_with_canonical(g.group));
  } else {
    out << canon(g.group) << "\n";
  }
}

void run_gamma_torsion(std::ostream& out, const std::string& path, bool as_json) {
  FgAbGroup t = gamma_torsion(group_from_json(load_json_file(path)));
  if (as_json) {
    print_json(out, group_with_canonical(t));
  } else {
    out << canon(t) << "\n";
  }
}

void run_gamma_gamma22(std::ostream& out, const std::string& path, bool as_json) {
  QuadraticMap eta = quadratic_from_json(load_json_file(path));
  Gamma22 g = gamma22(eta);
  if (as_json) {
    Json o = group_with_canonical(g.group);
    o["m_eta"] = group_with_canonical(g.m_eta.group);
    o["exact"] = g.m_eta.exact;
    print_json(out, o);
  } else {
    out << canon(g.group) << "\n";
  }
}

// ---- monoid ------------------------------------------------------------

void run_monoid_table(std::ostream& out) {
  auto table = m_multiplication_table();
  const auto& mats = NMatrix::m_elements();
  auto emit_row = [&](const std::string& label, const std::array<std::string, 4>& cells) {
    std::string line = pad(label, 5) + "|";
    for (std::size_t c = 0; c < 4; ++c) line += " " + pad(cells[c], 4);
    while (!line.empty() && line.back() == ' ') line.pop_back();
    out << line << "\n";
  };
  emit_row("", {mats[0].display_name(), mats[1].display_name(), mats[2].display_name(),
                mats[3].display_name()});
  out << std::string(5, '-') << "+" << std::string(20, '-') << "\n";
  for (std::size_t r = 0; r < 4; ++r) {
    emit_row(mats[r].display_name(),
             {table[r][0].display_name(), table[r][1].display_name(), table[r][2].display_name(),
              table[r][3].display_name()});
  }
}

void run_monoid_check(std::ostream& out, int n, const std::string& scope, std::uint64_t seed,
                      bool as_json) {
  BimoduleScope s = scope == "M" ? BimoduleScope::m_only : BimoduleScope::all_of_n;
  BimoduleReport r = check_bimodule_axioms(n, s, 1000, seed);
  if (as_json) {
    Json o;
    o["n"] = r.n;
    o["scope"] = scope;
    o["checks"] = r.checks;
    o["passed"] = r.passed;
    if (r.counterexample) {
      Json ce;
      ce["axiom"] = r.counterexample->axiom;
      ce["m1"] = Json::parse(r.counterexample->m1.to_string());
      ce["m2"] = Json::parse(r.counterexample->m2.to_string());
      if (r.counterexample->lhs_scalar) {
        ce["lhs_scalar"] = int_to_json(*r.counterexample->lhs_scalar);
        ce["rhs_scalar"] = int_to_json(*r.counterexample->rhs_scalar);
      }
      o["counterexample"] = std::move(ce);
    }
    print_json(out, o);
  } else {
    out << r.to_string() << "\n";
  }
  out << kTableDataNote << "\n";
}

Json ext_to_json(const ExtElement& e) {
  Json o;
  o["m"] = Json::parse(e.m.to_string());
  o["x"] = element_to_json(e.pair.x);
  o["y"] = element_to_json(e.pair.y);
  return o;
}

ExtElement ext_from_json(const Json& j, int n, const FgAbGroup& v) {
  if (!j.contains("m")) throw ParseError("missing field \"m\"");
  IntMatrix m = matrix_from_json(j.at("m"));
  if (m.rows() != 2 || m.cols() != 2) throw ParseError("\"m\" must be a 2x2 matrix");
  NMatrix nm(m(0, 0), m(0, 1), m(1, 0), m(1, 1));
  if (!j.contains("x") || !j.contains("y")) throw ParseError("missing field \"x\" or \"y\"");
  return ExtElement{n, nm,
                    BimodulePair(element_from_json(j.at("x"), v), element_from_json(j.at("y"), v))};
}

void run_monoid_compose(std::ostream& out, int n, const std::string& a_path,
                        const std::string& b_path, bool assume_split, bool as_json) {
  FgAbGroup v = v_group(n);
  ExtElement a = ext_from_json(load_json_file(a_path), n, v);
  ExtElement b = ext_from_json(load_json_file(b_path), n, v);
  ExtElement c = mn_compose(a, b, assume_split);
  const bool watermarked = n % 2 == 1 && assume_split;
  if (as_json) {
    Json o = ext_to_json(c);
    if (watermarked) {
      o["watermark"] = "assume-split candidate: whether N_n splits for odd n is open";
    }
    print_json(out, o);
  } else {
    if (watermarked) {
      out << "WARNING: assume-split candidate composition; whether N_n splits for odd n is open\n";
    }
    out << c.to_string() << "\n";
  }
  out << kTableDataNote << "\n";
}

// ---- orbits ------------------------------------------------------------

TargetData resolve_target(const std::string& spec) {
  if (spec.rfind("builtin:", 0) == 0) {
    std::string rest = spec.substr(8);
    auto colon = rest.find(':');
    if (colon == std::string::npos) throw ParseError("builtin target must be builtin:<kind>:<n>");
    std::string kind = rest.substr(0, colon);
    int n = 0;
    try {
      n = std::stoi(rest.substr(colon + 1));
    } catch (const std::exception&) {
      throw ParseError("invalid dimension in builtin target: " + rest.substr(colon + 1));
    }
    if (kind == "sphere") return target_sphere(n);
    if (kind == "product") return target_sphere_product(n);
    throw ParseError("unknown builtin target kind: " + kind);
  }
  return target_from_json(load_json_file(spec));
}

Element resolve_v(const std::string& spec, const TargetData& t) {
  if (spec == "id") {
    if (t.pi_n.ambient_rank() != 1) throw ParseError("--v id needs a rank-1 pi_n (sphere target)");
    return t.pi_n.element({Int(1)});
  }
  if (spec == "diagonal") {
    if (t.pi_n.ambient_rank() != 2) {
      throw ParseError("--v diagonal needs a rank-2 pi_n (product target)");
    }
    return t.pi_n.element({Int(1), Int(1)});
  }
  return element_from_json(load_json_file(spec), t.pi_n);
}

void run_orbits(std::ostream& out, const std::string& target_spec, const std::string& v_spec,
                bool as_json) {
  TargetData t = resolve_target(target_spec);
  Element v = resolve_v(v_spec, t);
  OrbitReport r = orbit_decomposition(t, v);

  if (as_json) {
    Json o;
    o["target"] = target_spec;
    o["n"] = t.n;
    o["v"] = element_to_json(v);
    if (r.family) o["family"] = r.family->description;
    Json entries = Json::array();
    for (const OrbitEntry& e : r.entries) {
      Json je;
      je["u_first"] = element_to_json(e.u.u_first);
      je["u_second"] = element_to_json(e.u.u_second);
      je["w"] = element_to_json(e.u.w);
      je["i_u"] = canon(e.isotropy_i);
      je["j_u"] = canon(e.isotropy_j);
      je["quotient"] = canon(e.quotient);
      je["action"] = canon(e.action);
      entries.push_back(std::move(je));
    }
    o["entries"] = std::move(entries);
    o["phi_injective"] = r.phi_injective;
    o["table_data"] = r.uses_table_data;
    print_json(out, o);
    if (r.uses_table_data) out << kTableDataNote << "\n";
    return;
  }

  out << "orbits: target=" << target_spec << " n=" << t.n << " v=" << v.to_string() << "\n";
  if (r.family) out << "family: " << r.family->description << "\n";
  const std::array<std::string, 6> header = {"u'", "u''", "w", "I_u", "J_u", "pi_2n/I_u | J_u/I_u"};
  std::vector<std::array<std::string, 6>> rows;
  for (const OrbitEntry& e : r.entries) {
    rows.push_back({e.u.u_first.to_string(), e.u.u_second.to_string(), e.u.w.to_string(),
                    canon(e.isotropy_i), canon(e.isotropy_j),
                    canon(e.quotient) + " | " + canon(e.action)});
  }
  std::array<std::size_t, 6> width{};
  for (std::size_t c = 0; c < 6; ++c) width[c] = header[c].size();
  for (const auto& row : rows)
    for (std::size_t c = 0; c < 6; ++c) width[c] = std::max(width[c], row[c].size());
  auto emit = [&](const std::array<std::string, 6>& row) {
    for (std::size_t c = 0; c + 1 < 6; ++c) out << pad(row[c], width[c]) << "  ";
    out << row[5] << "\n";
  };
  emit(header);
  for (const auto& row : rows) emit(row);
  out << "phi_injective: " << (r.phi_injective ? "true" : "false") << "\n";
  if (r.uses_table_data) out << kTableDataNote << "\n";
}

// ---- selfmaps ------------------------------------------------------------

void run_selfmaps(std::ostream& out, int n, bool as_json) {
  SelfMapMonoid m = selfmap_monoid(n);
  if (as_json) {
    Json o;
    o["n"] = m.n;
    o["base"] = m.even ? "M" : "N";
    o["v"] = group_with_canonical(m.v);
    o["fibre"] = canon(m.v) + " + " + canon(m.v);
    o["fibre_order"] = int_to_json(m.fibre_order);
    o["order"] = m.order ? int_to_json(*m.order) : Json();
    o["note"] = m.note;
    o["table_data"] = true;
    print_json(out, o);
  } else {
    out << "selfmaps n=" << n << "\n";
    if (m.even) {
      out << "monoid: M_n = M x (V_n + V_n), order " << *m.order << "\n";
      out << "base: M (order 4)\n";
    } else {
      out << "monoid: linear extension of N (infinite) by V_n + V_n\n";
      out << "base: N (infinite)\n";
    }
    out << "V_n = " << canon(m.v) << ", fibre order " << m.fibre_order << "\n";
    out << "note: " << m.note << "\n";
  }
  out << kTableDataNote << "\n";
}

// ---- gammaseq ------------------------------------------------------------

GammaSequence sequence_from_json(const Json& j) {
  auto field = [&](const char* key) -> const Json& {
    if (!j.contains(key)) throw ParseError(std::string("sequence: missing field \"") + key + "\"");
    return j.at(key);
  };
  QuadraticMap eta = [&] {
    Json q;
    q["pi2"] = field("pi2");
    q["pi3"] = field("pi3");
    q["eta_square"] = field("eta_square");
    return quadratic_from_json(q);
  }();
  const Json& maps = field("maps");
  auto mat = [&](const char* key) {
    if (!maps.contains(key)) throw ParseError(std::string("sequence: missing map \"") + key + "\"");
    const Json& m = maps.at(key);
    return matrix_from_json(m.contains("matrix") ? m.at("matrix") : m);
  };
  auto shaped = [](IntMatrix m, std::size_t rows, std::size_t cols, const char* key) {
    if (m.rows() == rows && m.cols() == cols) return m;
    if ((rows == 0 || cols == 0) && m.rows() * m.cols() == 0) return IntMatrix(rows, cols);
    throw ParseError(std::string("sequence: map \"") + key + "\" must be " + std::to_string(rows) +
                     "x" + std::to_string(cols));
  };
  FgAbGroup h3 = group_from_json(field("H3"));
  FgAbGroup h4 = group_from_json(field("H4"));
  FgAbGroup h5 = group_from_json(field("H5"));
  FgAbGroup pi4 = group_from_json(field("pi4"));
  FgAbGroup gamma4 = group_from_json(field("gamma4"));
  Gamma22 g22 = gamma22(eta);
  FgAbGroup gamma_t = gamma_torsion(eta.pi2());
  const std::size_t gpi2 = eta.gamma_pi2().group.ambient_rank();
  GammaSequenceData data{
      h3,
      h4,
      h5,
      pi4,
      gamma4,
      eta,
      shaped(mat("b5"), gamma4.ambient_rank(), h5.ambient_rank(), "b5"),
      shaped(mat("i4"), pi4.ambient_rank(), gamma4.ambient_rank(), "i4"),
      shaped(mat("h4"), h4.ambient_rank(), pi4.ambient_rank(), "h4"),
      shaped(mat("b4"), gpi2, h4.ambient_rank(), "b4"),
      shaped(mat("h3"), h3.ambient_rank(), eta.pi3().ambient_rank(), "h3"),
      shaped(mat("j"), gamma4.ambient_rank(), g22.group.ambient_rank(), "j"),
      shaped(mat("q"), gamma_t.ambient_rank(), gamma4.ambient_rank(), "q"),
  };
  return make_gamma_sequence(data);
}

Json sequence_to_json(const GammaSequence& s) {
  Json o;
  o["pi2"] = group_to_json(s.pi2());
  o["pi3"] = group_to_json(s.pi3());
  o["pi4"] = group_to_json(s.pi4);
  o["H3"] = group_to_json(s.h3);
  o["H4"] = group_to_json(s.h4);
  o["H5"] = group_to_json(s.h5);
  o["gamma4"] = group_to_json(s.gamma4);
  o["eta_square"] = hom_to_json(s.eta.linearization());
  Json maps;
  maps["b5"] = hom_to_json(s.b5);
  maps["i4"] = hom_to_json(s.i4);
  maps["h4"] = hom_to_json(s.h4_map);
  maps["b4"] = hom_to_json(s.b4);
  maps["h3"] = hom_to_json(s.h3_map);
  maps["j"] = hom_to_json(s.j);
  maps["q"] = hom_to_json(s.q);
  o["maps"] = std::move(maps);
  return o;
}

void run_gammaseq_validate(std::ostream& out, const std::string& path, bool as_json) {
  GammaSequence s = sequence_from_json(load_json_file(path));
  ValidationReport r = validate_gamma_sequence(s);
  if (as_json) {
    Json o;
    o["ok"] = r.ok;
    o["checks"] = r.checks;
    if (r.failure) o["failure"] = *r.failure;
    print_json(out, o);
  } else {
    out << r.to_string() << "\n";
  }
}

void run_gammaseq_isotropy(std::ostream& out, const std::string& path, const std::string& w_path,
                           const std::string& u_path, bool as_json) {
  GammaSequence s = sequence_from_json(load_json_file(path));
  Element w = element_from_json(load_json_file(w_path), s.pi2());
  Element u = element_from_json(load_json_file(u_path), s.pi2());
  SequenceIsotropy iso = isotropy_from_sequence(s, w, u);
  if (as_json) {
    Json o;
    o["w"] = element_to_json(w);
    o["u_prime"] = element_to_json(u);
    o["i_u"] = canon(iso.i_u);
    o["j_u"] = canon(iso.j_u);
    o["action"] = canon(iso.action);
    o["assumption"] = "[u',u''] = 0 for u'' = w + u' (asserted by the caller)";
    print_json(out, o);
  } else {
    out << "assumes [u',u''] = 0 for u'' = w + u' (not checkable from the sequence alone)\n";
    out << "I_u     = " << canon(iso.i_u) << "\n";
    out << "J_u     = " << canon(iso.j_u) << "\n";
    out << "J_u/I_u = " << canon(iso.action) << "\n";
  }
}

CyclicOrder parse_order(const std::string& s) {
  if (s == "inf" || s == "oo") return CyclicOrder::inf();
  try {
    return CyclicOrder::finite(Int(s));
  } catch (const std::exception&) {
    throw ParseError("invalid cyclic order: " + s + " (use a positive integer or inf)");
  }
}

void run_gammaseq_example(std::ostream& out, const std::string& pi3_path, const std::string& wu,
                          const std::string& pi2prime_path, bool as_json) {
  FgAbGroup pi3 = group_from_json(load_json_file(pi3_path));
  FgAbGroup pi2prime =
      pi2prime_path.empty() ? FgAbGroup() : group_from_json(load_json_file(pi2prime_path));
  auto comma = wu.find(',');
  if (comma == std::string::npos) throw ParseError("--wu must be <w_order>,<u_order>");
  CyclicOrder w_order = parse_order(wu.substr(0, comma));
  CyclicOrder u_order = parse_order(wu.substr(comma + 1));
  NontrivialActionExample e = nontrivial_action_example(pi2prime, w_order, u_order, pi3);
  if (as_json) {
    Json o;
    o["pi2"] = group_with_canonical(e.seq.pi2());
    o["pi3"] = group_with_canonical(pi3);
    o["w"] = element_to_json(e.w);
    o["u_prime"] = element_to_json(e.u_prime);
    o["i_u"] = canon(e.i_u);
    o["j_u"] = canon(e.j_u);
    o["action"] = canon(e.action);
    o["nontrivial"] = e.nontrivial;
    o["notes"] = e.notes;
    o["seq"] = sequence_to_json(e.seq);
    print_json(out, o);
  } else {
    out << "pi2 = " << canon(e.seq.pi2()) << " with w = " << e.w.to_string()
        << ", u' = " << e.u_prime.to_string() << "\n";
    for (const std::string& n : e.notes) out << "note: " << n << "\n";
    out << "I_u = " << canon(e.i_u) << "\n";
    out << "J_u = " << canon(e.j_u) << "\n";
    out << "orbit group J_u/I_u = " << canon(e.action) << "\n";
    out << "fundamental action: " << (e.nontrivial ? "non-trivial" : "trivial") << "\n";
  }
}

}  // namespace

int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
  CLI::App app{"exact algebra of self-maps of S^n x S^n fixing the diagonal"};
  app.require_subcommand(1);
  std::function<void()> action;

  std::string path_a, path_b, target_spec, v_spec, wu, pi3_path, pi2prime_path, w_path, u_path;
  std::string scope = "N";
  bool as_json = false, assume_split = false;
  int n = 2;
  std::uint64_t seed = kDefaultSeed;

  auto* fgab = app.add_subcommand("fgab", "finitely generated abelian group kernel");
  fgab->require_subcommand(1);
  auto* fgab_snf = fgab->add_subcommand("snf", "Smith normal form U*M*V = S");
  fgab_snf->add_option("matrix", path_a, "JSON file: {\"matrix\": [[...],...]}")->required();
  fgab_snf->add_flag("--json", as_json, "machine-readable output");
  fgab_snf->callback([&] { action = [&] { run_fgab_snf(out, path_a, as_json); }; });
  auto* fgab_group = fgab->add_subcommand("group", "canonical form of a presented group");
  fgab_group->add_option("group", path_a, "group JSON file")->required();
  fgab_group->add_flag("--json", as_json, "machine-readable output");
  fgab_group->callback([&] { action = [&] { run_fgab_group(out, path_a, as_json); }; });

  auto* gamma = app.add_subcommand("gamma", "Whitehead's quadratic functor");
  gamma->require_subcommand(1);
  auto* gamma_grp = gamma->add_subcommand("group", "Gamma(A)");
  gamma_grp->add_option("group", path_a, "group JSON file")->required();
  gamma_grp->add_flag("--json", as_json, "machine-readable output");
  gamma_grp->callback([&] { action = [&] { run_gamma_group(out, path_a, as_json); }; });
  auto* gamma_tor = gamma->add_subcommand("torsion", "GammaT(A) = ker(delta1)/im(delta2)");
  gamma_tor->add_option("group", path_a, "group JSON file")->required();
  gamma_tor->add_flag("--json", as_json, "machine-readable output");
  gamma_tor->callback([&] { action = [&] { run_gamma_torsion(out, path_a, as_json); }; });
  auto* gamma_g22 = gamma->add_subcommand("gamma22", "(pi3(x)Z/2 + pi3(x)pi2)/M(eta)");
  gamma_g22->add_option("eta", path_a, "eta JSON file: {\"pi2\",\"pi3\",\"eta_square\"}")->required();
  gamma_g22->add_flag("--json", as_json, "machine-readable output");
  gamma_g22->callback([&] { action = [&] { run_gamma_gamma22(out, path_a, as_json); }; });

  auto* monoid = app.add_subcommand("monoid", "the matrix monoids N and M");
  monoid->require_subcommand(1);
  auto* monoid_table = monoid->add_subcommand("table", "multiplication table of I, T, P', P''");
  monoid_table->callback([&] { action = [&] { run_monoid_table(out); }; });
  auto* monoid_check = monoid->add_subcommand("check", "bimodule axiom checks");
  monoid_check->add_option("--n", n, "dimension n")->required();
  monoid_check->add_option("--scope", scope, "M (exhaustive) or N (seeded random)")
      ->check(CLI::IsMember({"M", "N"}))
      ->required();
  monoid_check->add_option("--seed", seed, "seed for the N scope (default 1729)");
  monoid_check->add_flag("--json", as_json, "machine-readable output");
  monoid_check->callback([&] { action = [&] { run_monoid_check(out, n, scope, seed, as_json); }; });
  auto* monoid_compose = monoid->add_subcommand("compose", "compose two extension elements");
  monoid_compose->add_option("--n", n, "dimension n")->required();
  monoid_compose->add_option("a", path_a, "first element JSON file")->required();
  monoid_compose->add_option("b", path_b, "second element JSON file")->required();
  monoid_compose->add_flag("--assume-split", assume_split,
                           "compute the split-candidate composition for odd n");
  monoid_compose->add_flag("--json", as_json, "machine-readable output");
  monoid_compose->callback(
      [&] { action = [&] { run_monoid_compose(out, n, path_a, path_b, assume_split, as_json); }; });

  auto* orbits_cmd = app.add_subcommand("orbits", "orbit decomposition of [S^n x S^n, U]^v");
  orbits_cmd
      ->add_option("--target", target_spec,
                   "target data JSON file, or builtin:sphere:<n> / builtin:product:<n>")
      ->required();
  orbits_cmd->add_option("--v", v_spec, "element JSON file, or id / diagonal")->required();
  orbits_cmd->add_flag("--json", as_json, "machine-readable output");
  orbits_cmd->callback([&] { action = [&] { run_orbits(out, target_spec, v_spec, as_json); }; });

  auto* selfmaps_cmd = app.add_subcommand("selfmaps", "the self-map monoid fixing the diagonal");
  selfmaps_cmd->add_option("--n", n, "dimension n")->required();
  selfmaps_cmd->add_flag("--json", as_json, "machine-readable output");
  selfmaps_cmd->callback([&] { action = [&] { run_selfmaps(out, n, as_json); }; });

  auto* gseq = app.add_subcommand("gammaseq", "5-dimensional Gamma-sequences");
  gseq->require_subcommand(1);
  auto* gseq_validate = gseq->add_subcommand("validate", "exactness and SES checks");
  gseq_validate->add_option("seq", path_a, "sequence JSON file")->required();
  gseq_validate->add_flag("--json", as_json, "machine-readable output");
  gseq_validate->callback([&] { action = [&] { run_gammaseq_validate(out, path_a, as_json); }; });
  auto* gseq_iso = gseq->add_subcommand("isotropy", "I_u, J_u and J_u/I_u from a sequence");
  gseq_iso->add_option("seq", path_a, "sequence JSON file")->required();
  gseq_iso->add_option("--w", w_path, "element JSON file for w")->required();
  gseq_iso->add_option("--u", u_path, "element JSON file for u'")->required();
  gseq_iso->add_flag("--json", as_json, "machine-readable output");
  gseq_iso->callback(
      [&] { action = [&] { run_gammaseq_isotropy(out, path_a, w_path, u_path, as_json); }; });
  auto* gseq_example = gseq->add_subcommand("example", "build a non-trivial action example");
  gseq_example->add_option("--pi3", pi3_path, "group JSON file for pi3")->required();
  gseq_example->add_option("--wu", wu, "orders of <w>,<u'>: e.g. inf,inf or inf,4")->required();
  gseq_example->add_option("--pi2prime", pi2prime_path, "optional group JSON file for pi2'");
  gseq_example->add_flag("--json", as_json, "machine-readable output");
  gseq_example->callback(
      [&] { action = [&] { run_gammaseq_example(out, pi3_path, wu, pi2prime_path, as_json); }; });

  try {
    std::vector<std::string> reversed(args.rbegin(), args.rend());
    app.parse(reversed);
  } catch (const CLI::ParseError& e) {
    if (e.get_exit_code() == 0) {  // --help / --version
      app.exit(e, out, err);
      return 0;
    }
    err << "input error: " << e.what() << "\n";
    return 2;
  }

  try {
    if (action) action();
  } catch (const ParseError& e) {
    err << "input error: " << e.what() << "\n";
    return 2;
  } catch (const Error& e) {
    err << "error: " << e.what() << "\n";
    return 1;
  } catch (const std::exception& e) {
    err << "internal error: " << e.what() << "\n";
    return 1;
  }
  return 0;
}

}  // namespace diagmaps::cli
