#include "diagmaps/spheres.hpp"

#include <mutex>

#include "diagmaps/json_io.hpp"
#include "diagmaps/sphere_table_data.hpp"

namespace diagmaps {

std::string to_string(WhiteheadSquareOrder o) {
  switch (o) {
    case WhiteheadSquareOrder::infinite: return "inf";
    case WhiteheadSquareOrder::trivial: return "1";
    case WhiteheadSquareOrder::order_two: return "2";
  }
  return "?";
}

const SphereTable& SphereTable::builtin() {
  static const SphereTable table = [] {
    SphereTable t = SphereTable::parse(std::string(detail::kSphereTableJson));
    t.self_check();
    return t;
  }();
  return table;
}

SphereTable SphereTable::parse(const std::string& json_text) {
  Json j = parse_json_text(json_text);
  if (!j.contains("entries") || !j.at("entries").is_array()) {
    throw ParseError("sphere table: missing entries array");
  }
  SphereTable table;
  for (const Json& e : j.at("entries")) {
    SphereEntry entry;
    entry.n = int_from_json(e.at("n")).convert_to<int>();
    entry.pi_n1 = group_from_json(e.at("pi_n1"));
    entry.pi_2n = group_from_json(e.at("pi_2n"));
    entry.eta_bracket = element_from_json(e.at("eta_bracket"), entry.pi_2n);
    const Json& ord = e.at("ii_order");
    if (ord.is_string() && ord.get<std::string>() == "inf") {
      entry.ii_order = WhiteheadSquareOrder::infinite;
    } else if (ord.is_number_integer() && ord.get<int>() == 1) {
      entry.ii_order = WhiteheadSquareOrder::trivial;
    } else if (ord.is_number_integer() && ord.get<int>() == 2) {
      entry.ii_order = WhiteheadSquareOrder::order_two;
    } else {
      throw ParseError("sphere table: ii_order must be \"inf\", 1 or 2");
    }
    entry.source = e.value("source", std::string{});
    table.entries_[entry.n] = std::move(entry);
  }
  if (table.entries_.empty()) throw ParseError("sphere table: no entries");
  return table;
}

const SphereEntry& SphereTable::entry(int n) const {
  auto it = entries_.find(n);
  if (it == entries_.end()) {
    throw UnsupportedDimensionError("n = " + std::to_string(n) + " is outside the sphere table (" +
                                    std::to_string(min_n()) + " <= n <= " + std::to_string(max_n()) +
                                    ")");
  }
  return it->second;
}

int SphereTable::min_n() const { return entries_.begin()->first; }
int SphereTable::max_n() const { return entries_.rbegin()->first; }

void SphereTable::self_check() const {
  for (const auto& [n, e] : entries_) {
    const CanonicalForm& pn1 = e.pi_n1.canonical_form();
    if (n == 2) {
      if (!(pn1.free_rank == 1 && pn1.invariant_factors.empty())) {
        throw Error("sphere table: pi_3(S^2) must be Z");
      }
    } else {
      if (!(pn1.free_rank == 0 && pn1.invariant_factors == std::vector<Int>{Int(2)})) {
        throw Error("sphere table: pi_{n+1}(S^n) must be Z/2 for n >= 3");
      }
    }
    const bool bracket_zero = e.eta_bracket.is_zero();
    if ((n == 2 || n == 3) && !bracket_zero) {
      throw Error("sphere table: [eta,i] must vanish for n = 2, 3");
    }
    if ((n == 4 || n == 5) && bracket_zero) {
      throw Error("sphere table: [eta,i] must be nonzero for n = 4, 5");
    }
    const bool n_even = n % 2 == 0;
    if (n_even && e.ii_order != WhiteheadSquareOrder::infinite) {
      throw Error("sphere table: [i,i] must have infinite order for even n");
    }
    if (!n_even) {
      const bool hopf = n == 1 || n == 3 || n == 7;
      if (hopf && e.ii_order != WhiteheadSquareOrder::trivial) {
        throw Error("sphere table: [i,i] must vanish for n in {1,3,7}");
      }
      if (!hopf && e.ii_order != WhiteheadSquareOrder::order_two) {
        throw Error("sphere table: [i,i] must have order 2 for odd n outside {1,3,7}");
      }
    }
  }
}

FgAbGroup v_group(int n) {
  const SphereEntry& e = SphereTable::builtin().entry(n);
  return quotient_by(e.pi_2n, {e.eta_bracket}).group;
}

Element TargetData::whitehead_p1n(const Element& a, const Element& x) const {
  if (!a.group().same_presentation(pi_n1) || !x.group().same_presentation(pi_n)) {
    throw DomainError("whitehead_p1n: arguments must lie in pi_{n+1} x pi_n");
  }
  Element out = pi_2n.zero();
  for (std::size_t i = 0; i < pi_n1.ambient_rank(); ++i) {
    for (std::size_t j = 0; j < pi_n.ambient_rank(); ++j) {
      Int c = a.coords()[i] * x.coords()[j];
      if (c != 0) out = out + p1n[i][j].times(c);
    }
  }
  return out;
}

Element TargetData::whitehead_pnn(const Element& x, const Element& y) const {
  if (!x.group().same_presentation(pi_n) || !y.group().same_presentation(pi_n)) {
    throw DomainError("whitehead_pnn: arguments must lie in pi_n x pi_n");
  }
  Element out = pi_2n1.zero();
  for (std::size_t i = 0; i < pi_n.ambient_rank(); ++i) {
    for (std::size_t j = 0; j < pi_n.ambient_rank(); ++j) {
      Int c = x.coords()[i] * y.coords()[j];
      if (c != 0) out = out + pnn[i][j].times(c);
    }
  }
  return out;
}

void TargetData::validate() const {
  if (tau_sign != 1 && tau_sign != -1) throw DomainError("tau_sign must be +1 or -1");
  const std::size_t gn = pi_n.ambient_rank();
  const std::size_t g1 = pi_n1.ambient_rank();
  if (p1n.size() != g1) throw PresentationError("P1n must have one row per pi_{n+1} generator");
  for (const auto& row : p1n) {
    if (row.size() != gn) throw PresentationError("P1n rows must match pi_n generators");
    for (const Element& e : row) {
      if (!e.group().same_presentation(pi_2n)) {
        throw DomainError("P1n values must lie in pi_2n");
      }
    }
  }
  if (pnn.size() != gn) throw PresentationError("Pnn must be square over pi_n generators");
  for (const auto& row : pnn) {
    if (row.size() != gn) throw PresentationError("Pnn must be square over pi_n generators");
    for (const Element& e : row) {
      if (!e.group().same_presentation(pi_2n1)) {
        throw DomainError("Pnn values must lie in pi_{2n-1}");
      }
    }
  }
  // Graded symmetry [g_i, g_j] = (-1)^n [g_j, g_i].
  const Int sign = n % 2 == 0 ? 1 : -1;
  for (std::size_t i = 0; i < gn; ++i) {
    for (std::size_t j = 0; j < gn; ++j) {
      if (!(pnn[i][j] - pnn[j][i].times(sign)).is_zero()) {
        throw DomainError("Pnn violates graded symmetry");
      }
    }
  }
  // Bilinear extensions must kill the relations of the argument groups.
  auto check_left = [&](const std::vector<std::vector<Element>>& table, const FgAbGroup& a,
                        const char* name) {
    for (std::size_t c = 0; c < a.relations().cols(); ++c) {
      std::vector<Int> rho = a.relations().column(c);
      for (std::size_t j = 0; j < table.front().size(); ++j) {
        Element acc = table[0][0].group().zero();
        for (std::size_t i = 0; i < table.size(); ++i) acc = acc + table[i][j].times(rho[i]);
        if (!acc.is_zero()) {
          throw DomainError(std::string(name) + " is not well defined against the first factor");
        }
      }
    }
  };
  auto check_right = [&](const std::vector<std::vector<Element>>& table, const FgAbGroup& b,
                         const char* name) {
    for (std::size_t c = 0; c < b.relations().cols(); ++c) {
      std::vector<Int> rho = b.relations().column(c);
      for (std::size_t i = 0; i < table.size(); ++i) {
        Element acc = table[0][0].group().zero();
        for (std::size_t j = 0; j < table[i].size(); ++j) acc = acc + table[i][j].times(rho[j]);
        if (!acc.is_zero()) {
          throw DomainError(std::string(name) + " is not well defined against the second factor");
        }
      }
    }
  };
  if (g1 > 0 && gn > 0) {
    check_left(p1n, pi_n1, "P1n");
    check_right(p1n, pi_n, "P1n");
  }
  if (gn > 0) {
    check_left(pnn, pi_n, "Pnn");
    check_right(pnn, pi_n, "Pnn");
  }
}

namespace {

// The only part of π_{2n-1}(S^n) the realizability condition sees is the
// subgroup generated by [i_n, i_n]; it is modeled as the cyclic group of the
// recorded order, with [i,i] its generator.
FgAbGroup ii_span_group(WhiteheadSquareOrder o) {
  switch (o) {
    case WhiteheadSquareOrder::infinite: return FgAbGroup::cyclic(0);
    case WhiteheadSquareOrder::trivial: return FgAbGroup::cyclic(1);
    case WhiteheadSquareOrder::order_two: return FgAbGroup::cyclic(2);
  }
  throw Error("unreachable");
}

Element ii_element(const FgAbGroup& span, WhiteheadSquareOrder o) {
  if (o == WhiteheadSquareOrder::trivial) return span.zero();
  return span.generator(0);
}

}  // namespace

TargetData target_sphere(int n) {
  const SphereEntry& e = SphereTable::builtin().entry(n);
  TargetData t;
  t.n = n;
  t.pi_n = FgAbGroup::free_abelian(1);
  t.pi_n1 = e.pi_n1;
  t.pi_2n = e.pi_2n;
  t.pi_2n1 = ii_span_group(e.ii_order);
  t.p1n = {{e.eta_bracket}};
  t.pnn = {{ii_element(t.pi_2n1, e.ii_order)}};
  t.tau_sign = n % 2 == 0 ? -1 : 1;
  t.builtin_name = "sphere:" + std::to_string(n);
  t.validate();
  return t;
}

TargetData target_sphere_product(int n) {
  const SphereEntry& e = SphereTable::builtin().entry(n);
  TargetData s = target_sphere(n);
  TargetData t;
  t.n = n;
  t.pi_n = direct_sum(s.pi_n, s.pi_n).group;
  t.pi_n1 = direct_sum(s.pi_n1, s.pi_n1).group;
  DirectSumResult sum_2n = direct_sum(s.pi_2n, s.pi_2n);
  DirectSumResult sum_2n1 = direct_sum(s.pi_2n1, s.pi_2n1);
  t.pi_2n = sum_2n.group;
  t.pi_2n1 = sum_2n1.group;
  const std::size_t g1 = s.pi_n1.ambient_rank();
  // Componentwise pairings; mixed components vanish by naturality under the
  // two projections.
  for (std::size_t factor = 0; factor < 2; ++factor) {
    for (std::size_t i = 0; i < g1; ++i) {
      std::vector<Element> row;
      for (std::size_t other = 0; other < 2; ++other) {
        Element v = factor == other
                        ? (factor == 0 ? sum_2n.inject_left : sum_2n.inject_right).apply(e.eta_bracket)
                        : t.pi_2n.zero();
        row.push_back(std::move(v));
      }
      t.p1n.push_back(std::move(row));
    }
  }
  Element ii = ii_element(s.pi_2n1, e.ii_order);
  t.pnn = {{sum_2n1.inject_left.apply(ii), t.pi_2n1.zero()},
           {t.pi_2n1.zero(), sum_2n1.inject_right.apply(ii)}};
  t.tau_sign = n % 2 == 0 ? -1 : 1;
  t.builtin_name = "product:" + std::to_string(n);
  t.validate();
  return t;
}

}  // namespace diagmaps
