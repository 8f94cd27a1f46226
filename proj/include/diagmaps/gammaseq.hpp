#pragma once

#include <optional>
#include <string>
#include <vector>

#include "diagmaps/gamma.hpp"

namespace diagmaps {

/// The seven groups and six maps of a 5-dimensional Γ-sequence
///   H5 → Γ4(η) → π4 → H4 → Γ(π2) → π3 → H3 → 0
/// together with the sub-structure Γ²₂(η) ↣ Γ4(η) ↠ ΓT(π2). The group Γ4 is
/// user data; j and q are read against the engine's presentations of Γ²₂(η)
/// and ΓT(π2).
struct GammaSequence {
  FgAbGroup h3, h4, h5, pi4, gamma4;
  QuadraticMap eta;  // source π2, target π3; linearization is the map Γ(π2) → π3
  Homomorphism b5;      // H5 → Γ4
  Homomorphism i4;      // Γ4 → π4
  Homomorphism h4_map;  // π4 → H4
  Homomorphism b4;      // H4 → Γ(π2)
  Homomorphism h3_map;  // π3 → H3
  Homomorphism j;       // Γ²₂(η) → Γ4
  Homomorphism q;       // Γ4 → ΓT(π2)

  Gamma22 g22;        // engine-computed Γ²₂(η)
  FgAbGroup gamma_t;  // engine-computed ΓT(π2)

  const FgAbGroup& pi2() const { return eta.pi2(); }
  const FgAbGroup& pi3() const { return eta.pi3(); }
};

struct GammaSequenceData {
  FgAbGroup h3, h4, h5, pi4, gamma4;
  QuadraticMap eta;
  IntMatrix b5, i4, h4_map, b4, h3_map, j, q;
};

// Builds the sequence, checking only that the matrices define homomorphisms
// with the stated endpoints. Exactness is the validator's job.
GammaSequence make_gamma_sequence(const GammaSequenceData& data);

struct ValidationReport {
  bool ok = false;
  std::vector<std::string> checks;       // descriptions of checks that passed
  std::optional<std::string> failure;    // first failure
  std::string to_string() const;
};

ValidationReport validate_gamma_sequence(const GammaSequence& s);

// [π3, y] ⊆ π4: image of π3⊗<y> → π3⊗π2 → Γ²₂(η) → Γ4 → π4.
SubgroupResult bracket_subgroup(const GammaSequence& s, const Element& y);

struct SequenceIsotropy {
  FgAbGroup i_u;     // [π3, w]
  FgAbGroup j_u;     // [π3, w] + [π3, u']
  FgAbGroup action;  // J_u/I_u
};

// The caller asserts [u', u''] = 0 for u'' = w + u'; that hypothesis lives in
// Whitehead data a Γ-sequence does not contain.
SequenceIsotropy isotropy_from_sequence(const GammaSequence& s, const Element& w,
                                        const Element& u_prime);

struct CyclicOrder {
  bool infinite = false;
  Int order = 0;  // used when finite; 0 is rejected

  static CyclicOrder inf() { return CyclicOrder{true, 0}; }
  static CyclicOrder finite(Int k) { return CyclicOrder{false, std::move(k)}; }
  FgAbGroup group() const;
  std::string to_string() const;
};

struct NontrivialActionExample {
  GammaSequence seq;
  Element w, u_prime;   // the distinguished generators of π2
  FgAbGroup i_u, j_u, action;
  bool nontrivial = false;
  std::vector<std::string> notes;  // the minimal-fill choices made
};

// Builds the η = 0, H5 = 0 configuration on π2 = π2' ⊕ <w> ⊕ <u'> with
// Γ4 = Γ²₂(0) ⊕ ΓT(π2), filled minimally to pass validation, and reports the
// resulting orbit group J_u/I_u ≅ π3 ⊗ <u'>.
NontrivialActionExample nontrivial_action_example(const FgAbGroup& pi2_extra,
                                                  const CyclicOrder& w_order,
                                                  const CyclicOrder& u_order,
                                                  const FgAbGroup& pi3);

}  // namespace diagmaps
