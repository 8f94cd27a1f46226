#include "diagmaps/gammaseq.hpp"

#include <sstream>

namespace diagmaps {

GammaSequence make_gamma_sequence(const GammaSequenceData& data) {
  const FgAbGroup& pi2 = data.eta.pi2();
  const FgAbGroup& pi3 = data.eta.pi3();
  const FgAbGroup& gpi2 = data.eta.gamma_pi2().group;
  Gamma22 g22 = gamma22(data.eta);
  FgAbGroup gamma_t = gamma_torsion(pi2);
  return GammaSequence{
      data.h3,
      data.h4,
      data.h5,
      data.pi4,
      data.gamma4,
      data.eta,
      Homomorphism(data.h5, data.gamma4, data.b5),
      Homomorphism(data.gamma4, data.pi4, data.i4),
      Homomorphism(data.pi4, data.h4, data.h4_map),
      Homomorphism(data.h4, gpi2, data.b4),
      Homomorphism(pi3, data.h3, data.h3_map),
      Homomorphism(g22.group, data.gamma4, data.j),
      Homomorphism(data.gamma4, gamma_t, data.q),
      g22,
      gamma_t,
  };
}

std::string ValidationReport::to_string() const {
  std::ostringstream os;
  for (const std::string& c : checks) os << "ok: " << c << "\n";
  if (failure) {
    os << "FAIL: " << *failure << "\n";
  }
  os << (ok ? "valid gamma sequence" : "invalid gamma sequence");
  return os.str();
}

namespace {

// Exactness at the middle group of in, out: im(in) = ker(out), decided by
// two-sided membership plus canonical-form comparison of both subgroups.
bool exact_at(const Homomorphism& in, const Homomorphism& out, std::string& why) {
  const FgAbGroup& mid = in.target();
  for (std::size_t c = 0; c < in.source().ambient_rank(); ++c) {
    if (!out.apply(in.apply(in.source().generator(c))).is_zero()) {
      why = "image is not contained in the kernel (composite is nonzero)";
      return false;
    }
  }
  SubgroupResult im = hom_image(in);
  SubgroupResult ker = hom_kernel(out);
  if (!(im.group.canonical_form() == ker.group.canonical_form())) {
    why = "im = " + im.group.canonical_form().to_string() +
          " but ker = " + ker.group.canonical_form().to_string();
    return false;
  }
  std::vector<Element> im_gens;
  for (std::size_t c = 0; c < im.inclusion.matrix().cols(); ++c) {
    im_gens.push_back(mid.element(im.inclusion.matrix().column(c)));
  }
  for (std::size_t c = 0; c < ker.inclusion.matrix().cols(); ++c) {
    Element g = mid.element(ker.inclusion.matrix().column(c));
    if (!subgroup_contains(mid, im_gens, g)) {
      why = "a kernel generator lies outside the image";
      return false;
    }
  }
  return true;
}

bool surjective(const Homomorphism& h) { return hom_cokernel(h).group.is_trivial(); }
bool injective(const Homomorphism& h) { return hom_kernel(h).group.is_trivial(); }

}  // namespace

ValidationReport validate_gamma_sequence(const GammaSequence& s) {
  ValidationReport report;
  auto fail = [&](const std::string& msg) {
    report.failure = msg;
    report.ok = false;
    return report;
  };

  if (!s.h5.canonical_form().invariant_factors.empty()) {
    return fail("H5 is not free abelian");
  }
  report.checks.push_back("H5 free abelian");

  struct Node {
    const Homomorphism& in;
    const Homomorphism& out;
    const char* name;
  };
  const Homomorphism& eta_sq = s.eta.linearization();
  const Node nodes[] = {
      {s.b5, s.i4, "Gamma4"},
      {s.i4, s.h4_map, "pi4"},
      {s.h4_map, s.b4, "H4"},
      {s.b4, eta_sq, "Gamma(pi2)"},
      {eta_sq, s.h3_map, "pi3"},
  };
  for (const Node& node : nodes) {
    std::string why;
    if (!exact_at(node.in, node.out, why)) {
      return fail(std::string("not exact at ") + node.name + ": " + why);
    }
    report.checks.push_back(std::string("exact at ") + node.name);
  }

  if (!surjective(s.h3_map)) return fail("h3 is not surjective onto H3");
  report.checks.push_back("h3 surjective");

  if (!injective(s.j)) return fail("j: Gamma22 -> Gamma4 is not injective");
  report.checks.push_back("j injective");
  if (!surjective(s.q)) return fail("q: Gamma4 -> GammaT is not surjective");
  report.checks.push_back("q surjective");
  {
    std::string why;
    if (!exact_at(s.j, s.q, why)) return fail("im(j) != ker(q): " + why);
    report.checks.push_back("im(j) = ker(q)");
  }

  report.ok = true;
  return report;
}

SubgroupResult bracket_subgroup(const GammaSequence& s, const Element& y) {
  if (!y.group().same_presentation(s.pi2())) {
    throw DomainError("bracket_subgroup: y must lie in pi2");
  }
  const FgAbGroup& pi3 = s.pi3();
  std::vector<Element> gens;
  for (std::size_t a = 0; a < pi3.ambient_rank(); ++a) {
    Element t = s.g22.tensor->pure(pi3.generator(a), y);  // t_a ⊗ y in π3⊗π2
    gens.push_back(s.i4.apply(s.j.apply(s.g22.from_tensor.apply(t))));
  }
  return subgroup_generated(s.pi4, gens);
}

SequenceIsotropy isotropy_from_sequence(const GammaSequence& s, const Element& w,
                                        const Element& u_prime) {
  SubgroupResult i_u = bracket_subgroup(s, w);
  SubgroupResult ju_part = bracket_subgroup(s, u_prime);
  std::vector<Element> j_gens;
  for (std::size_t c = 0; c < i_u.inclusion.matrix().cols(); ++c) {
    j_gens.push_back(s.pi4.element(i_u.inclusion.matrix().column(c)));
  }
  for (std::size_t c = 0; c < ju_part.inclusion.matrix().cols(); ++c) {
    j_gens.push_back(s.pi4.element(ju_part.inclusion.matrix().column(c)));
  }
  SubgroupResult j_u = subgroup_generated(s.pi4, j_gens);

  std::vector<Element> i_gens;
  for (std::size_t c = 0; c < i_u.inclusion.matrix().cols(); ++c) {
    i_gens.push_back(s.pi4.element(i_u.inclusion.matrix().column(c)));
  }
  QuotientResult quot = quotient_by(s.pi4, i_gens);
  std::vector<Element> j_in_quot;
  for (const Element& g : j_gens) j_in_quot.push_back(quot.projection.apply(g));
  FgAbGroup action = subgroup_generated(quot.group, j_in_quot).group;
  return SequenceIsotropy{i_u.group, j_u.group, action};
}

FgAbGroup CyclicOrder::group() const {
  if (infinite) return FgAbGroup::cyclic(0);
  if (order < 1) throw DomainError("cyclic order must be positive or infinite");
  return FgAbGroup::cyclic(order);
}

std::string CyclicOrder::to_string() const {
  return infinite ? std::string("inf") : order.str();
}

NontrivialActionExample nontrivial_action_example(const FgAbGroup& pi2_extra,
                                                  const CyclicOrder& w_order,
                                                  const CyclicOrder& u_order,
                                                  const FgAbGroup& pi3) {
  DirectSumResult step = direct_sum(pi2_extra, w_order.group());
  DirectSumResult full = direct_sum(step.group, u_order.group());
  FgAbGroup pi2 = full.group;
  const std::size_t m_extra = pi2_extra.ambient_rank();
  Element w = pi2.generator(m_extra);
  Element u_prime = pi2.generator(m_extra + 1);

  QuadraticMap eta = QuadraticMap::zero(pi2, pi3);
  Gamma22 g22 = gamma22(eta);
  FgAbGroup gamma_t = gamma_torsion(pi2);
  DirectSumResult g4 = direct_sum(g22.group, gamma_t);

  GammaSequenceData data{
      /*h3=*/pi3,
      /*h4=*/eta.gamma_pi2().group,
      /*h5=*/FgAbGroup(),
      /*pi4=*/g4.group,
      /*gamma4=*/g4.group,
      eta,
      /*b5=*/IntMatrix(g4.group.ambient_rank(), 0),
      /*i4=*/IntMatrix::identity(g4.group.ambient_rank()),
      /*h4_map=*/IntMatrix(eta.gamma_pi2().group.ambient_rank(), g4.group.ambient_rank()),
      /*b4=*/IntMatrix::identity(eta.gamma_pi2().group.ambient_rank()),
      /*h3_map=*/IntMatrix::identity(pi3.ambient_rank()),
      /*j=*/g4.inject_left.matrix(),
      /*q=*/[&] {
        IntMatrix q(gamma_t.ambient_rank(), g4.group.ambient_rank());
        const std::size_t off = g22.group.ambient_rank();
        for (std::size_t i = 0; i < gamma_t.ambient_rank(); ++i) q(i, off + i) = 1;
        return q;
      }(),
  };
  GammaSequence seq = make_gamma_sequence(data);
  SequenceIsotropy iso = isotropy_from_sequence(seq, w, u_prime);
  const bool nontrivial = !iso.action.is_trivial();
  std::vector<std::string> notes = {
      "eta = 0 and H5 = 0, so Gamma4 is realized as the split candidate Gamma22(0) + GammaT(pi2)",
      "minimal fill: pi4 = Gamma4 with i4 = id, H4 = Gamma(pi2) with b4 = id, H3 = pi3 with h3 = id",
      "w and u' are the two distinguished generators appended to pi2'",
  };
  return NontrivialActionExample{std::move(seq), w,           u_prime,    iso.i_u,
                                 iso.j_u,        iso.action, nontrivial, std::move(notes)};
}

}  // namespace diagmaps
