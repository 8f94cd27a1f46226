#pragma once

#include <optional>
#include <string>
#include <vector>

#include "diagmaps/monoids.hpp"
#include "diagmaps/spheres.hpp"

namespace diagmaps {

/// Realizable pair u = (u', u'') with u' + u'' = v and [u', u''] = 0,
/// together with the derived element w = u'' + tau·u'.
struct UPair {
  Element u_first;   // u'
  Element u_second;  // u''
  Element w;

  std::string to_string() const;
};

UPair make_upair(const TargetData& target, const Element& u_first, const Element& u_second);

/// Infinite realizable families over built-in targets: componentwise
/// u'_c = stride_c · k_c, u''_c = v_c − u'_c for all integers k_c. Orbit data
/// only depends on u' mod 2 here, so reports list residue representatives.
struct RealizableFamily {
  std::vector<Int> v;
  std::vector<Int> stride;  // 1 = all integers, 2 = even values only
  std::string description;
};

struct RealizableSet {
  std::vector<UPair> pairs;  // all pairs, or residue representatives for a family
  std::optional<RealizableFamily> family;
};

// All realizable pairs over v. Finite π_n is enumerated directly; built-in
// sphere and product targets are solved structurally from the order of
// [i_n, i_n], which may yield an infinite parametrized family.
RealizableSet realizable_set(const TargetData& target, const Element& v);

// I_u = {[α, w]}: image of α ↦ P1n(α, w) over the generators of π_{n+1}.
SubgroupResult isotropy_i(const TargetData& target, const UPair& u);
// J_u = {[α, w] + [γ, u']}: generated by I_u together with P1n(γ, u').
SubgroupResult isotropy_j(const TargetData& target, const UPair& u);

struct OrbitEntry {
  UPair u;
  FgAbGroup isotropy_i;  // I_u
  FgAbGroup isotropy_j;  // J_u
  FgAbGroup quotient;    // π_{2n}/I_u
  FgAbGroup action;      // J_u/I_u
};

struct OrbitReport {
  std::vector<OrbitEntry> entries;
  std::optional<RealizableFamily> family;
  bool phi_injective = false;
  bool uses_table_data = false;
};

OrbitReport orbit_decomposition(const TargetData& target, const Element& v);

/// Structure of the self-map monoid fixing the diagonal. For even n the full
/// finite monoid M × (V_n ⊕ V_n); for odd n only the extension data, since
/// whether the extension splits is open.
struct SelfMapMonoid {
  int n = 0;
  bool even = false;
  FgAbGroup v;               // V_n
  Int fibre_order = 0;       // |V_n ⊕ V_n|
  std::optional<Int> order;  // 4 · fibre_order for even n; unset for odd n
  std::string note;

  std::vector<ExtElement> elements() const;  // even n only
};

SelfMapMonoid selfmap_monoid(int n);

}  // namespace diagmaps
