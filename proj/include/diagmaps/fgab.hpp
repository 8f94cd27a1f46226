#pragma once

#include <memory>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "diagmaps/error.hpp"
#include "diagmaps/intmat.hpp"

namespace diagmaps {

/// Isomorphism invariants of a finitely generated abelian group: free rank
/// plus invariant factors d1 | d2 | ... | dk with every di >= 2.
struct CanonicalForm {
  std::size_t free_rank = 0;
  std::vector<Int> invariant_factors;

  bool operator==(const CanonicalForm&) const = default;
  bool is_trivial() const { return free_rank == 0 && invariant_factors.empty(); }
  bool is_finite() const { return free_rank == 0; }
  Int order() const;     // throws DomainError on infinite groups
  Int exponent() const;  // finite groups; 1 for the trivial group
  std::string to_string() const;
};

class Element;

/// Finitely generated abelian group presented by an integer relation matrix
/// whose columns are relation vectors in the ambient free group. Immutable;
/// the Smith form of the relations and the canonical form are cached at
/// construction.
class FgAbGroup {
 public:
  FgAbGroup();  // trivial group (ambient rank 0)

  static FgAbGroup from_presentation(std::size_t ambient_rank, IntMatrix relations);
  static FgAbGroup free_abelian(std::size_t rank);
  static FgAbGroup cyclic(const Int& order);  // 0 gives Z, m >= 1 gives Z/m

  std::size_t ambient_rank() const;
  const IntMatrix& relations() const;
  const CanonicalForm& canonical_form() const;
  const SmithNormalForm& relations_snf() const;

  // Structural identity of presentations (not isomorphism).
  bool same_presentation(const FgAbGroup& other) const;
  bool is_trivial() const { return canonical_form().is_trivial(); }
  bool is_finite() const { return canonical_form().is_finite(); }
  Int order() const { return canonical_form().order(); }

  Element zero() const;
  Element generator(std::size_t i) const;
  Element element(std::vector<Int> coords) const;

  // Membership of a coordinate vector in the relation lattice.
  bool lattice_contains(const std::vector<Int>& coords) const;
  // Normal form of an element: unique per class, so usable as a set key.
  std::vector<Int> reduced_coords(const std::vector<Int>& coords) const;
  // All elements of a finite group, in a fixed deterministic order.
  std::vector<Element> enumerate_elements() const;

 private:
  struct Rep;
  explicit FgAbGroup(std::shared_ptr<const Rep> rep) : rep_(std::move(rep)) {}
  std::shared_ptr<const Rep> rep_;
};

/// Element of an FgAbGroup, stored as ambient coordinates. Equality is
/// equality modulo the relation lattice.
class Element {
 public:
  Element(FgAbGroup group, std::vector<Int> coords);

  const FgAbGroup& group() const { return group_; }
  const std::vector<Int>& coords() const { return coords_; }

  bool is_zero() const;
  Element operator+(const Element& other) const;
  Element operator-(const Element& other) const;
  Element operator-() const;
  Element times(const Int& k) const;
  bool operator==(const Element& other) const;
  bool operator!=(const Element& other) const { return !(*this == other); }

  std::string to_string() const;  // "(c1,c2,...)"

 private:
  FgAbGroup group_;
  std::vector<Int> coords_;
};

inline Element operator*(const Int& k, const Element& e) { return e.times(k); }

/// Homomorphism between presented groups, given by an integer matrix on
/// ambient generators (columns indexed by source generators). Construction
/// checks that every source relation maps into the target relation lattice.
class Homomorphism {
 public:
  Homomorphism(FgAbGroup source, FgAbGroup target, IntMatrix matrix);

  static Homomorphism identity(const FgAbGroup& g);
  static Homomorphism zero_map(const FgAbGroup& source, const FgAbGroup& target);
  static Homomorphism scalar(const FgAbGroup& g, const Int& k);

  const FgAbGroup& source() const { return source_; }
  const FgAbGroup& target() const { return target_; }
  const IntMatrix& matrix() const { return matrix_; }

  Element apply(const Element& x) const;
  bool is_zero_map() const;  // semantically zero, not matrix-zero
  Homomorphism compose(const Homomorphism& inner) const;  // this ∘ inner

 private:
  FgAbGroup source_;
  FgAbGroup target_;
  IntMatrix matrix_;
};

struct SubgroupResult {
  FgAbGroup group;
  Homomorphism inclusion;  // abstract group -> ambient group
};

struct QuotientResult {
  FgAbGroup group;
  Homomorphism projection;  // ambient group -> quotient (identity matrix)
};

struct DirectSumResult {
  FgAbGroup group;
  Homomorphism inject_left;
  Homomorphism inject_right;
};

/// A ⊗ B presented on pair generators a_i ⊗ b_j with bilinear relations.
class TensorProduct {
 public:
  TensorProduct(FgAbGroup a, FgAbGroup b);

  const FgAbGroup& group() const { return group_; }
  const FgAbGroup& left() const { return left_; }
  const FgAbGroup& right() const { return right_; }

  std::size_t pair_index(std::size_t i, std::size_t j) const;
  Element pure(const Element& a, const Element& b) const;  // a ⊗ b

 private:
  FgAbGroup left_, right_;
  FgAbGroup group_;
};

SubgroupResult hom_kernel(const Homomorphism& h);
SubgroupResult hom_image(const Homomorphism& h);
QuotientResult hom_cokernel(const Homomorphism& h);

SubgroupResult subgroup_generated(const FgAbGroup& g, const std::vector<Element>& gens);
QuotientResult quotient_by(const FgAbGroup& g, const std::vector<Element>& gens);
DirectSumResult direct_sum(const FgAbGroup& a, const FgAbGroup& b);
TensorProduct tensor_product(const FgAbGroup& a, const FgAbGroup& b);

bool groups_isomorphic(const FgAbGroup& a, const FgAbGroup& b);
bool element_is_zero(const Element& e);
bool subgroup_contains(const FgAbGroup& g, const std::vector<Element>& gens, const Element& e);

// ker(out) / im(in) at the common middle group; requires out ∘ in = 0.
FgAbGroup homology_at(const Homomorphism& in, const Homomorphism& out);

}  // namespace diagmaps
