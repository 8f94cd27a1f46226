#pragma once

#include <map>
#include <optional>
#include <string>
#include <vector>

#include "diagmaps/fgab.hpp"

namespace diagmaps {

enum class WhiteheadSquareOrder { infinite, trivial, order_two };

std::string to_string(WhiteheadSquareOrder o);

/// One row of the shipped sphere data: homotopy groups of S^n near the top
/// dimension, the bracket [η_{n+1}, i_n], and the order of [i_n, i_n].
struct SphereEntry {
  int n = 0;
  FgAbGroup pi_n1;       // π_{n+1}(S^n)
  FgAbGroup pi_2n;       // π_{2n}(S^n)
  Element eta_bracket;   // [η_{n+1}, i_n] ∈ π_{2n}(S^n)
  WhiteheadSquareOrder ii_order = WhiteheadSquareOrder::infinite;
  std::string source;

  SphereEntry() : eta_bracket(FgAbGroup(), {}) {}
};

/// The curated constant table for 2 <= n <= 7, loaded from the versioned
/// data file embedded at build time and self-checked on first use.
class SphereTable {
 public:
  static const SphereTable& builtin();
  static SphereTable parse(const std::string& json_text);

  bool supports(int n) const { return entries_.count(n) != 0; }
  const SphereEntry& entry(int n) const;  // UnsupportedDimensionError outside the table
  int min_n() const;
  int max_n() const;
  void self_check() const;

 private:
  std::map<int, SphereEntry> entries_;
};

// V_n = π_{2n}(S^n) / <[η_{n+1}, i_n]>
FgAbGroup v_group(int n);

/// Homotopy data of a target space U: the four groups the orbit calculus
/// needs, the two Whitehead pairings as value tables on generator pairs, and
/// the interchange sign used to form w = u'' + tau·u'.
struct TargetData {
  int n = 0;
  FgAbGroup pi_n;    // π_n(U)
  FgAbGroup pi_n1;   // π_{n+1}(U)
  FgAbGroup pi_2n;   // π_{2n}(U)
  FgAbGroup pi_2n1;  // π_{2n-1}(U)
  std::vector<std::vector<Element>> p1n;  // [π_{n+1} gen][π_n gen] -> π_{2n}
  std::vector<std::vector<Element>> pnn;  // [π_n gen][π_n gen] -> π_{2n-1}
  int tau_sign = 1;
  // Set on targets assembled from the sphere table; carried into output as a
  // "table data" annotation.
  std::optional<std::string> builtin_name;

  Element whitehead_p1n(const Element& a, const Element& x) const;
  Element whitehead_pnn(const Element& x, const Element& y) const;
  bool uses_table_data() const { return builtin_name.has_value(); }

  // Graded symmetry of pnn, membership of all pairing values, bilinear
  // well-definedness against both presentations, tau_sign in {-1, +1}.
  void validate() const;
};

TargetData target_sphere(int n);
TargetData target_sphere_product(int n);

}  // namespace diagmaps
