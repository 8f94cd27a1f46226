#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "diagmaps/fgab.hpp"
#include "diagmaps/rng.hpp"

namespace diagmaps {

/// 2x2 integer matrix with both row sums equal to 1 (membership in N).
/// The submonoid M consists of the four matrices with entries in {0, 1}.
class NMatrix {
 public:
  NMatrix(Int a1, Int a2, Int b1, Int b2);

  static NMatrix identity();        // I
  static NMatrix interchange();     // T
  static NMatrix project_first();   // P'  = diag ∘ pr_1
  static NMatrix project_second();  // P'' = diag ∘ pr_2
  static const std::vector<NMatrix>& m_elements();  // I, T, P', P''

  const Int& a1() const { return a1_; }  // a'
  const Int& a2() const { return a2_; }  // a''
  const Int& b1() const { return b1_; }  // b'
  const Int& b2() const { return b2_; }  // b''

  bool in_m() const;
  NMatrix operator*(const NMatrix& other) const;
  bool operator==(const NMatrix&) const = default;

  // "I", "T", "P'", "P''" for the four canonical matrices, entries otherwise.
  std::string display_name() const;
  std::string to_string() const;  // [[a',a''],[b',b'']]

 private:
  Int a1_, a2_, b1_, b2_;
};

// Right-action scalar a'b'' + (-1)^n b'a'': the determinant for odd n, the
// permanent for even n.
Int right_action_scalar(const NMatrix& m, int n);

/// (x, y) in V_n ⊕ V_n.
struct BimodulePair {
  Element x, y;

  BimodulePair(Element x_, Element y_);
  BimodulePair operator+(const BimodulePair& other) const;
  bool operator==(const BimodulePair& other) const;
  std::string to_string() const;
};

BimodulePair left_action(const NMatrix& m, const BimodulePair& p);
BimodulePair right_action(const BimodulePair& p, const NMatrix& m, int n);

/// Element of the split extension: a matrix together with a fibre pair.
struct ExtElement {
  int n;
  NMatrix m;
  BimodulePair pair;

  std::string to_string() const;
};

ExtElement mn_identity(int n);

// (m,(x,y)) ∘ (m',(x',y')) = (mm', m(x',y') + (x,y)m'). For even n both
// matrices must lie in M. For odd n the extension class is open, so the
// split-candidate composition is only computed under assume_split.
ExtElement mn_compose(const ExtElement& a, const ExtElement& b, bool assume_split = false);

enum class BimoduleScope { m_only, all_of_n };

struct BimoduleCounterexample {
  std::string axiom;
  NMatrix m1, m2;
  std::optional<Int> lhs_scalar, rhs_scalar;  // set for the symbolic scalar axiom
  std::string detail;
};

struct BimoduleReport {
  int n = 0;
  BimoduleScope scope = BimoduleScope::m_only;
  bool passed = false;
  std::size_t checks = 0;
  std::optional<BimoduleCounterexample> counterexample;
  std::string to_string() const;
};

// Left multiplicativity, right (scalar) multiplicativity, middle
// compatibility and unit laws. Exhaustive over M (matrices and fibre pairs);
// seeded random triples over all of N with entries bounded by 50.
BimoduleReport check_bimodule_axioms(int n, BimoduleScope scope, std::size_t samples = 1000,
                                     std::uint64_t seed = kDefaultSeed);

// The multiplication table of I, T, P', P'' (entry = row ∘ column).
std::vector<std::vector<NMatrix>> m_multiplication_table();

}  // namespace diagmaps
