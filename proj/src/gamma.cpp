#include "diagmaps/gamma.hpp"

namespace diagmaps {

std::size_t GammaFreeBasis::gamma_index(std::size_t i) const {
  if (i >= rank_) throw DomainError("gamma basis index out of range");
  return i;
}

std::size_t GammaFreeBasis::bracket_index(std::size_t i, std::size_t j) const {
  if (!(i < j && j < rank_)) throw DomainError("bracket basis index out of range");
  // Pairs (0,1),(0,2),...,(0,r-1),(1,2),... after the r quadratic generators.
  return rank_ + i * rank_ - i * (i + 1) / 2 + (j - i - 1);
}

std::vector<Int> GammaFreeBasis::gamma_of(const std::vector<Int>& x) const {
  if (x.size() != rank_) throw PresentationError("gamma_of: coordinate length mismatch");
  std::vector<Int> out(size(), Int(0));
  for (std::size_t k = 0; k < rank_; ++k) out[gamma_index(k)] = x[k] * x[k];
  for (std::size_t k = 0; k < rank_; ++k) {
    for (std::size_t l = k + 1; l < rank_; ++l) out[bracket_index(k, l)] = x[k] * x[l];
  }
  return out;
}

std::vector<Int> GammaFreeBasis::bracket_of(const std::vector<Int>& x, const std::vector<Int>& y) const {
  if (x.size() != rank_ || y.size() != rank_) {
    throw PresentationError("bracket_of: coordinate length mismatch");
  }
  // [x,y] = γ(x+y) - γ(x) - γ(y): 2 x_k y_k on γ(e_k), x_k y_l + x_l y_k on [e_k,e_l].
  std::vector<Int> out(size(), Int(0));
  for (std::size_t k = 0; k < rank_; ++k) out[gamma_index(k)] = 2 * x[k] * y[k];
  for (std::size_t k = 0; k < rank_; ++k) {
    for (std::size_t l = k + 1; l < rank_; ++l) {
      out[bracket_index(k, l)] = x[k] * y[l] + x[l] * y[k];
    }
  }
  return out;
}

Element GammaGroup::gamma(const Element& x) const {
  if (!x.group().same_presentation(base)) throw DomainError("gamma: element is not in the base group");
  return group.element(basis.gamma_of(x.coords()));
}

Element GammaGroup::bracket(const Element& x, const Element& y) const {
  if (!x.group().same_presentation(base) || !y.group().same_presentation(base)) {
    throw DomainError("bracket: element is not in the base group");
  }
  return group.element(basis.bracket_of(x.coords(), y.coords()));
}

namespace {

// Relation columns of Γ(A) over the Γ-basis of the ambient free group: for
// every relation ρ the quadratic image γ(ρ) and all brackets [ρ, e_i]. Any
// generating set of the relation lattice yields the same image lattice.
std::vector<std::vector<Int>> gamma_relation_columns(const GammaFreeBasis& basis,
                                                     const IntMatrix& relations) {
  const std::size_t m = basis.rank();
  std::vector<std::vector<Int>> cols;
  cols.reserve(relations.cols() * (1 + m));
  for (std::size_t c = 0; c < relations.cols(); ++c) {
    std::vector<Int> rho = relations.column(c);
    cols.push_back(basis.gamma_of(rho));
    for (std::size_t i = 0; i < m; ++i) {
      std::vector<Int> e(m, Int(0));
      e[i] = 1;
      cols.push_back(basis.bracket_of(rho, e));
    }
  }
  return cols;
}

}  // namespace

GammaGroup gamma_group(const FgAbGroup& a) {
  GammaFreeBasis basis(a.ambient_rank());
  auto cols = gamma_relation_columns(basis, a.relations());
  FgAbGroup g = FgAbGroup::from_presentation(basis.size(), IntMatrix::from_columns(basis.size(), cols));
  return GammaGroup{a, g, basis};
}

Homomorphism gamma_on_hom(const Homomorphism& h) {
  GammaGroup src = gamma_group(h.source());
  GammaGroup dst = gamma_group(h.target());
  const std::size_t r = src.basis.rank();
  IntMatrix m(dst.basis.size(), src.basis.size());
  auto set_col = [&](std::size_t j, const std::vector<Int>& col) {
    for (std::size_t i = 0; i < col.size(); ++i) m(i, j) = col[i];
  };
  std::vector<std::vector<Int>> images(r);
  for (std::size_t i = 0; i < r; ++i) images[i] = h.matrix().column(i);
  for (std::size_t i = 0; i < r; ++i) set_col(src.basis.gamma_index(i), dst.basis.gamma_of(images[i]));
  for (std::size_t i = 0; i < r; ++i) {
    for (std::size_t j = i + 1; j < r; ++j) {
      set_col(src.basis.bracket_index(i, j), dst.basis.bracket_of(images[i], images[j]));
    }
  }
  return Homomorphism(src.group, dst.group, std::move(m));
}

FgAbGroup gamma_torsion(const FgAbGroup& a) {
  // Short free resolution Z^s >-> Z^m ->> A with d injective.
  const IntMatrix d = column_lattice_basis(a.relations());
  const std::size_t m = a.ambient_rank();
  const std::size_t s = d.cols();
  GammaFreeBasis gm(m);
  GammaFreeBasis gs(s);
  const std::size_t tensor_dim = s * m;  // A1 ⊗ A0 on b_j ⊗ e_i at j*m + i

  std::vector<std::vector<Int>> basis_cols(s);
  for (std::size_t j = 0; j < s; ++j) basis_cols[j] = d.column(j);
  std::vector<std::vector<Int>> unit(m);
  for (std::size_t i = 0; i < m; ++i) {
    unit[i].assign(m, Int(0));
    unit[i][i] = 1;
  }

  // δ1 = (Γ(d), [d,1]): Γ(Z^s) ⊕ Z^{s·m} → Γ(Z^m).
  IntMatrix delta1(gm.size(), gs.size() + tensor_dim);
  auto set_col1 = [&](std::size_t j, const std::vector<Int>& col) {
    for (std::size_t i = 0; i < col.size(); ++i) delta1(i, j) = col[i];
  };
  for (std::size_t j = 0; j < s; ++j) set_col1(gs.gamma_index(j), gm.gamma_of(basis_cols[j]));
  for (std::size_t i = 0; i < s; ++i) {
    for (std::size_t j = i + 1; j < s; ++j) {
      set_col1(gs.bracket_index(i, j), gm.bracket_of(basis_cols[i], basis_cols[j]));
    }
  }
  for (std::size_t j = 0; j < s; ++j) {
    for (std::size_t i = 0; i < m; ++i) {
      set_col1(gs.size() + j * m + i, gm.bracket_of(basis_cols[j], unit[i]));
    }
  }

  // δ2 = ([1,1], -1⊗d): Z^{s·s} → Γ(Z^s) ⊕ Z^{s·m}.
  IntMatrix delta2(gs.size() + tensor_dim, s * s);
  for (std::size_t i = 0; i < s; ++i) {
    for (std::size_t j = 0; j < s; ++j) {
      const std::size_t col = i * s + j;
      std::vector<Int> bi(s, Int(0)), bj(s, Int(0));
      bi[i] = 1;
      bj[j] = 1;
      std::vector<Int> top = gs.bracket_of(bi, bj);
      for (std::size_t k = 0; k < gs.size(); ++k) delta2(k, col) = top[k];
      for (std::size_t k = 0; k < m; ++k) delta2(gs.size() + i * m + k, col) = -basis_cols[j][k];
    }
  }

  FgAbGroup dom = FgAbGroup::free_abelian(gs.size() + tensor_dim);
  FgAbGroup cod = FgAbGroup::free_abelian(gm.size());
  FgAbGroup sq = FgAbGroup::free_abelian(s * s);
  Homomorphism h1(dom, cod, std::move(delta1));
  Homomorphism h2(sq, dom, std::move(delta2));
  return homology_at(h2, h1);
}

QuadraticMap::QuadraticMap(FgAbGroup pi2, FgAbGroup pi3, Homomorphism linearization)
    : pi2_(std::move(pi2)),
      pi3_(std::move(pi3)),
      gamma_(std::make_shared<GammaGroup>(gamma_group(pi2_))),
      linearization_(std::move(linearization)) {
  if (!linearization_.source().same_presentation(gamma_->group)) {
    throw DomainError("quadratic map linearization must be defined on Γ(π2)");
  }
  if (!linearization_.target().same_presentation(pi3_)) {
    throw DomainError("quadratic map linearization must land in π3");
  }
}

QuadraticMap QuadraticMap::zero(const FgAbGroup& pi2, const FgAbGroup& pi3) {
  GammaGroup g = gamma_group(pi2);
  return QuadraticMap(pi2, pi3, Homomorphism::zero_map(g.group, pi3));
}

Element QuadraticMap::evaluate(const Element& x) const {
  return linearization_.apply(gamma_->gamma(x));
}

Element QuadraticMap::deviation(const Element& x, const Element& y) const {
  return linearization_.apply(gamma_->bracket(x, y));
}

Element QuadraticMap::bracket_shift(const Element& x, const Element& y) const {
  return evaluate(x + y) - evaluate(y);
}

bool QuadraticMap::is_zero() const { return linearization_.is_zero_map(); }

MEtaSubgroup m_eta_subgroup(const QuadraticMap& eta, const std::optional<SamplePairs>& sample,
                            bool sample_generates) {
  Gamma22 g = gamma22(eta, sample, sample_generates);
  return g.m_eta;
}

Gamma22 gamma22(const QuadraticMap& eta, const std::optional<SamplePairs>& sample,
                bool sample_generates) {
  const FgAbGroup& pi2 = eta.pi2();
  const FgAbGroup& pi3 = eta.pi3();

  // π3 ⊗ Z/2 realized as π3 / 2π3; the "⊗1" part of a generator is the class
  // of the π3 element in this quotient.
  std::vector<Element> doubled;
  for (std::size_t i = 0; i < pi3.ambient_rank(); ++i) doubled.push_back(pi3.generator(i).times(2));
  FgAbGroup mod2 = quotient_by(pi3, doubled).group;

  auto tensor = std::make_shared<TensorProduct>(tensor_product(pi3, pi2));
  DirectSumResult sum = direct_sum(mod2, tensor->group());

  auto inj_mod2 = [&](const Element& t) {
    return sum.inject_left.apply(mod2.element(t.coords()));  // same ambient as π3
  };
  auto inj_tensor = [&](const Element& t) { return sum.inject_right.apply(t); };

  std::vector<Element> gens;
  bool exact = true;
  if (eta.is_zero() || pi3.is_trivial()) {
    // M(0) = 0 for any π2, and everything collapses when π3 vanishes.
  } else {
    std::vector<std::pair<Element, Element>> pairs;
    std::vector<Element> singles;
    if (pi2.is_finite()) {
      std::vector<Element> all = pi2.enumerate_elements();
      singles = all;
      for (const Element& x : all)
        for (const Element& y : all) pairs.emplace_back(x, y);
    } else if (sample) {
      for (const auto& [x, y] : *sample) {
        singles.push_back(x);
        singles.push_back(y);
        pairs.emplace_back(x, y);
      }
      exact = sample_generates;
    } else {
      throw EnumerationError(
          "M(eta): pi2 is infinite and no finite sample of pairs was supplied");
    }
    for (const Element& x : singles) {
      gens.push_back(inj_tensor(tensor->pure(eta.evaluate(x), x)));
    }
    for (const auto& [x, y] : pairs) {
      Element g = inj_mod2(eta.bracket_shift(x, y)) +
                  inj_tensor(tensor->pure(eta.evaluate(x), y)) +
                  inj_tensor(tensor->pure(eta.bracket_shift(y, x), x));
      gens.push_back(std::move(g));
    }
  }

  SubgroupResult m = subgroup_generated(sum.group, gens);
  QuotientResult quot = quotient_by(sum.group, gens);

  Gamma22 out{
      quot.group,
      sum.group,
      mod2,
      tensor,
      Homomorphism(mod2, quot.group, sum.inject_left.matrix()),
      Homomorphism(tensor->group(), quot.group, sum.inject_right.matrix()),
      MEtaSubgroup{m.group, m.inclusion, exact},
  };
  return out;
}

}  // namespace diagmaps
