#pragma once

#include <memory>
#include <optional>
#include <utility>
#include <vector>

#include "diagmaps/fgab.hpp"

namespace diagmaps {

/// Ordered basis of Γ(Z^r): the quadratic generators γ(e_0)..γ(e_{r-1})
/// first, then the brackets [e_i, e_j] for i < j in lexicographic order.
/// Expansion rule: γ(Σ a_k e_k) = Σ a_k² γ(e_k) + Σ_{k<l} a_k a_l [e_k, e_l].
class GammaFreeBasis {
 public:
  explicit GammaFreeBasis(std::size_t rank) : rank_(rank) {}

  std::size_t rank() const { return rank_; }
  std::size_t size() const { return rank_ * (rank_ + 1) / 2; }

  std::size_t gamma_index(std::size_t i) const;
  std::size_t bracket_index(std::size_t i, std::size_t j) const;  // i < j

  std::vector<Int> gamma_of(const std::vector<Int>& x) const;
  std::vector<Int> bracket_of(const std::vector<Int>& x, const std::vector<Int>& y) const;

 private:
  std::size_t rank_;
};

/// Γ(A) presented on the GammaFreeBasis of the ambient free group of A,
/// together with the universal quadratic map γ and its bracket.
struct GammaGroup {
  FgAbGroup base;
  FgAbGroup group;
  GammaFreeBasis basis;

  Element gamma(const Element& x) const;
  Element bracket(const Element& x, const Element& y) const;
};

GammaGroup gamma_group(const FgAbGroup& a);

// Γ on homomorphisms: γ(e_i) ↦ γ(h e_i), [e_i,e_j] ↦ [h e_i, h e_j].
Homomorphism gamma_on_hom(const Homomorphism& h);

// ΓT(A) = ker(δ1)/im(δ2) for δ1 = (Γ(d), [d,1]) and δ2 = ([1,1], -1⊗d),
// built from a free resolution d of A.
FgAbGroup gamma_torsion(const FgAbGroup& a);

/// Quadratic map η: π2 → π3, represented by its linearization
/// η□: Γ(π2) → π3, so that η(x) = η□(γ(x)).
class QuadraticMap {
 public:
  QuadraticMap(FgAbGroup pi2, FgAbGroup pi3, Homomorphism linearization);
  static QuadraticMap zero(const FgAbGroup& pi2, const FgAbGroup& pi3);

  const FgAbGroup& pi2() const { return pi2_; }
  const FgAbGroup& pi3() const { return pi3_; }
  const Homomorphism& linearization() const { return linearization_; }
  const GammaGroup& gamma_pi2() const { return *gamma_; }

  Element evaluate(const Element& x) const;                          // η(x)
  Element deviation(const Element& x, const Element& y) const;       // η(x+y)-η(x)-η(y)
  Element bracket_shift(const Element& x, const Element& y) const;   // η(x+y)-η(y)
  bool is_zero() const;

 private:
  FgAbGroup pi2_, pi3_;
  std::shared_ptr<const GammaGroup> gamma_;
  Homomorphism linearization_;
};

using SamplePairs = std::vector<std::pair<Element, Element>>;

struct MEtaSubgroup {
  FgAbGroup group;
  Homomorphism inclusion;  // into (π3 ⊗ Z/2) ⊕ (π3 ⊗ π2)
  // True when the generating set was exhaustive (finite π2, or η = 0, or the
  // caller asserted that the supplied sample generates). Otherwise the group
  // is only a lower bound.
  bool exact = true;
};

struct Gamma22 {
  FgAbGroup group;            // the quotient (π3⊗Z/2 ⊕ π3⊗π2)/M(η)
  FgAbGroup ambient;          // π3⊗Z/2 ⊕ π3⊗π2
  FgAbGroup mod2;             // π3 ⊗ Z/2, realized as π3/2π3
  std::shared_ptr<const TensorProduct> tensor;  // π3 ⊗ π2
  Homomorphism from_mod2;     // π3/2π3 → group
  Homomorphism from_tensor;   // π3⊗π2 → group
  MEtaSubgroup m_eta;
};

// Subgroup M(η) of π3⊗Z/2 ⊕ π3⊗π2 generated by (ηx)⊗x and
// [x,y]'_η⊗1 + (ηx)⊗y + [y,x]'_η⊗x. Enumerates π2 when finite; for
// infinite π2 a finite sample of pairs (x, y) must be supplied.
MEtaSubgroup m_eta_subgroup(const QuadraticMap& eta,
                            const std::optional<SamplePairs>& sample = std::nullopt,
                            bool sample_generates = false);

Gamma22 gamma22(const QuadraticMap& eta,
                const std::optional<SamplePairs>& sample = std::nullopt,
                bool sample_generates = false);

}  // namespace diagmaps
