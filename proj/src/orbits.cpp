#include "diagmaps/orbits.hpp"

#include <sstream>

namespace diagmaps {

std::string UPair::to_string() const {
  return "u'=" + u_first.to_string() + " u''=" + u_second.to_string();
}

UPair make_upair(const TargetData& target, const Element& u_first, const Element& u_second) {
  if (!u_first.group().same_presentation(target.pi_n) ||
      !u_second.group().same_presentation(target.pi_n)) {
    throw DomainError("u components must lie in pi_n of the target");
  }
  Element w = u_second + u_first.times(target.tau_sign);
  return UPair{u_first, u_second, std::move(w)};
}

namespace {

void require_realizable(const TargetData& target, const UPair& u) {
  if (!target.whitehead_pnn(u.u_first, u.u_second).is_zero()) {
    throw DomainError("pair is not realizable: [u', u''] != 0");
  }
}

// Per-component structural solution of u'(v-u')·[i,i] = 0 over Z for a
// built-in factor: either a finite list of admissible u' values or a stride.
struct ComponentSolution {
  bool finite;
  std::vector<Int> values;  // finite case
  Int stride;               // family case: u' = stride·k, k in Z
};

ComponentSolution solve_component(WhiteheadSquareOrder order, const Int& v) {
  switch (order) {
    case WhiteheadSquareOrder::infinite: {
      // u'·u'' = 0 exactly.
      ComponentSolution s{true, {Int(0)}, 1};
      if (v != 0) s.values.push_back(v);
      return s;
    }
    case WhiteheadSquareOrder::trivial:
      return ComponentSolution{false, {}, 1};
    case WhiteheadSquareOrder::order_two:
      // u'(v-u') must be even: automatic for odd v, u' even otherwise.
      if (v % 2 != 0) return ComponentSolution{false, {}, 1};
      return ComponentSolution{false, {}, 2};
  }
  throw Error("unreachable");
}

WhiteheadSquareOrder builtin_ii_order(const TargetData& target) {
  const CanonicalForm& cf = target.pi_2n1.canonical_form();
  // Built-in targets carry <[i,i]> per factor: Z, 0 or Z/2.
  if (cf.free_rank > 0) return WhiteheadSquareOrder::infinite;
  if (cf.invariant_factors.empty()) return WhiteheadSquareOrder::trivial;
  return WhiteheadSquareOrder::order_two;
}

}  // namespace

RealizableSet realizable_set(const TargetData& target, const Element& v) {
  if (!v.group().same_presentation(target.pi_n)) {
    throw DomainError("v must lie in pi_n of the target");
  }
  RealizableSet out;

  if (target.pi_n.is_finite()) {
    for (const Element& u1 : target.pi_n.enumerate_elements()) {
      Element u2 = v - u1;
      if (target.whitehead_pnn(u1, u2).is_zero()) {
        out.pairs.push_back(make_upair(target, u1, u2));
      }
    }
    return out;
  }

  if (!target.builtin_name) {
    throw EnumerationError("pi_n is infinite and the target is not a built-in");
  }

  // Built-in targets: pi_n is Z per factor and the condition decomposes
  // componentwise as u'_c u''_c [i,i] = 0.
  const std::size_t comps = target.pi_n.ambient_rank();
  WhiteheadSquareOrder order = builtin_ii_order(target);
  std::vector<ComponentSolution> sols;
  bool any_family = false;
  for (std::size_t c = 0; c < comps; ++c) {
    sols.push_back(solve_component(order, v.coords()[c]));
    if (!sols.back().finite) any_family = true;
  }

  // Representative u' choices per component: the finite list, or residues of
  // stride·k mod 2 (the pairing values in the table all have order <= 2, so
  // I_u and J_u only depend on u' mod 2).
  std::vector<std::vector<Int>> reps(comps);
  for (std::size_t c = 0; c < comps; ++c) {
    if (sols[c].finite) {
      reps[c] = sols[c].values;
    } else if (sols[c].stride == 1) {
      reps[c] = {Int(0), Int(1)};
    } else {
      reps[c] = {Int(0)};
    }
  }

  std::vector<Int> choice(comps, Int(0));
  std::vector<std::size_t> idx(comps, 0);
  for (;;) {
    for (std::size_t c = 0; c < comps; ++c) choice[c] = reps[c][idx[c]];
    Element u1 = target.pi_n.element(choice);
    out.pairs.push_back(make_upair(target, u1, v - u1));
    std::size_t c = comps;
    bool done = true;
    while (c > 0) {
      --c;
      if (++idx[c] < reps[c].size()) {
        done = false;
        break;
      }
      idx[c] = 0;
    }
    if (done || comps == 0) break;
  }

  if (any_family) {
    RealizableFamily fam;
    fam.v = v.coords();
    std::ostringstream desc;
    for (std::size_t c = 0; c < comps; ++c) {
      fam.stride.push_back(sols[c].finite ? Int(0) : sols[c].stride);
      if (c) desc << ", ";
      if (sols[c].finite) {
        desc << "u'_" << c << " in {";
        for (std::size_t i = 0; i < sols[c].values.size(); ++i) {
          if (i) desc << ",";
          desc << sols[c].values[i];
        }
        desc << "}";
      } else if (sols[c].stride == 1) {
        desc << "u'_" << c << " = k_" << c << " for all k_" << c << " in Z";
      } else {
        desc << "u'_" << c << " = 2k_" << c << " for all k_" << c << " in Z";
      }
    }
    desc << "; u'' = v - u'. Entries below are residue representatives (mod 2).";
    fam.description = desc.str();
    out.family = std::move(fam);
  }
  return out;
}

SubgroupResult isotropy_i(const TargetData& target, const UPair& u) {
  require_realizable(target, u);
  std::vector<Element> gens;
  for (std::size_t i = 0; i < target.pi_n1.ambient_rank(); ++i) {
    gens.push_back(target.whitehead_p1n(target.pi_n1.generator(i), u.w));
  }
  return subgroup_generated(target.pi_2n, gens);
}

SubgroupResult isotropy_j(const TargetData& target, const UPair& u) {
  require_realizable(target, u);
  std::vector<Element> gens;
  for (std::size_t i = 0; i < target.pi_n1.ambient_rank(); ++i) {
    gens.push_back(target.whitehead_p1n(target.pi_n1.generator(i), u.w));
  }
  for (std::size_t i = 0; i < target.pi_n1.ambient_rank(); ++i) {
    gens.push_back(target.whitehead_p1n(target.pi_n1.generator(i), u.u_first));
  }
  return subgroup_generated(target.pi_2n, gens);
}

OrbitReport orbit_decomposition(const TargetData& target, const Element& v) {
  RealizableSet set = realizable_set(target, v);
  OrbitReport report;
  report.family = set.family;
  report.uses_table_data = target.uses_table_data();
  report.phi_injective = true;
  for (const UPair& u : set.pairs) {
    SubgroupResult i_u = isotropy_i(target, u);
    SubgroupResult j_u = isotropy_j(target, u);
    // π_{2n}/I_u and the image of J_u inside it (.= J_u/I_u since I ⊆ J).
    std::vector<Element> i_gens;
    for (std::size_t c = 0; c < i_u.inclusion.matrix().cols(); ++c) {
      i_gens.push_back(target.pi_2n.element(i_u.inclusion.matrix().column(c)));
    }
    QuotientResult quot = quotient_by(target.pi_2n, i_gens);
    std::vector<Element> j_in_quot;
    for (std::size_t c = 0; c < j_u.inclusion.matrix().cols(); ++c) {
      j_in_quot.push_back(
          quot.projection.apply(target.pi_2n.element(j_u.inclusion.matrix().column(c))));
    }
    FgAbGroup action = subgroup_generated(quot.group, j_in_quot).group;
    if (!action.is_trivial()) report.phi_injective = false;
    report.entries.push_back(OrbitEntry{u, i_u.group, j_u.group, quot.group, action});
  }
  return report;
}

std::vector<ExtElement> SelfMapMonoid::elements() const {
  if (!even) throw DomainError("element enumeration requires even n (finite monoid)");
  std::vector<ExtElement> out;
  std::vector<Element> fib = v.enumerate_elements();
  for (const NMatrix& m : NMatrix::m_elements()) {
    for (const Element& x : fib) {
      for (const Element& y : fib) {
        out.push_back(ExtElement{n, m, BimodulePair(x, y)});
      }
    }
  }
  return out;
}

SelfMapMonoid selfmap_monoid(int n) {
  SelfMapMonoid out;
  out.n = n;
  out.even = n % 2 == 0;
  out.v = v_group(n);
  Int vo = out.v.order();
  out.fibre_order = vo * vo;
  if (out.even) {
    out.order = Int(4) * out.fibre_order;
    out.note = "split linear extension M x (V_n + V_n)";
  } else {
    out.note =
        "linear extension of N (infinite) by V_n + V_n; whether it splits is an open "
        "question, so no composition on the extension is exposed without assume_split";
  }
  return out;
}

}  // namespace diagmaps
