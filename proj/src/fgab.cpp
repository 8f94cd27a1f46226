#include "diagmaps/fgab.hpp"

#include <algorithm>
#include <sstream>

namespace diagmaps {

Int CanonicalForm::order() const {
  if (!is_finite()) throw DomainError("order of an infinite group");
  Int n = 1;
  for (const Int& d : invariant_factors) n *= d;
  return n;
}

Int CanonicalForm::exponent() const {
  if (!is_finite()) throw DomainError("exponent of an infinite group");
  return invariant_factors.empty() ? Int(1) : invariant_factors.back();
}

std::string CanonicalForm::to_string() const {
  if (is_trivial()) return "0";
  std::ostringstream os;
  bool first = true;
  if (free_rank == 1) {
    os << "Z";
    first = false;
  } else if (free_rank > 1) {
    os << "Z^" << free_rank;
    first = false;
  }
  for (const Int& d : invariant_factors) {
    if (!first) os << " x ";
    os << "Z/" << d;
    first = false;
  }
  return os.str();
}

struct FgAbGroup::Rep {
  std::size_t ambient = 0;
  IntMatrix relations;
  SmithNormalForm snf;
  CanonicalForm canonical;
};

FgAbGroup::FgAbGroup() : FgAbGroup(from_presentation(0, IntMatrix(0, 0)).rep_) {}

FgAbGroup FgAbGroup::from_presentation(std::size_t ambient_rank, IntMatrix relations) {
  if (relations.rows() != ambient_rank) {
    throw PresentationError("relation matrix must have one row per ambient generator");
  }
  auto rep = std::make_shared<Rep>();
  rep->ambient = ambient_rank;
  rep->relations = std::move(relations);
  rep->snf = smith_normal_form(rep->relations);
  CanonicalForm cf;
  cf.free_rank = ambient_rank - rep->snf.rank;
  for (std::size_t i = 0; i < rep->snf.diag_size(); ++i) {
    const Int& d = rep->snf.diag(i);
    if (d > 1) cf.invariant_factors.push_back(d);
  }
  rep->canonical = std::move(cf);
  return FgAbGroup(std::move(rep));
}

FgAbGroup FgAbGroup::free_abelian(std::size_t rank) {
  return from_presentation(rank, IntMatrix(rank, 0));
}

FgAbGroup FgAbGroup::cyclic(const Int& order) {
  if (order < 0) throw PresentationError("cyclic group order must be nonnegative");
  if (order == 0) return free_abelian(1);
  IntMatrix rel(1, 1);
  rel(0, 0) = order;
  return from_presentation(1, std::move(rel));
}

std::size_t FgAbGroup::ambient_rank() const { return rep_->ambient; }
const IntMatrix& FgAbGroup::relations() const { return rep_->relations; }
const CanonicalForm& FgAbGroup::canonical_form() const { return rep_->canonical; }
const SmithNormalForm& FgAbGroup::relations_snf() const { return rep_->snf; }

bool FgAbGroup::same_presentation(const FgAbGroup& other) const {
  if (rep_ == other.rep_) return true;
  return rep_->ambient == other.rep_->ambient && rep_->relations == other.rep_->relations;
}

Element FgAbGroup::zero() const { return Element(*this, std::vector<Int>(rep_->ambient, Int(0))); }

Element FgAbGroup::generator(std::size_t i) const {
  if (i >= rep_->ambient) throw DomainError("generator index out of range");
  std::vector<Int> c(rep_->ambient, Int(0));
  c[i] = 1;
  return Element(*this, std::move(c));
}

Element FgAbGroup::element(std::vector<Int> coords) const { return Element(*this, std::move(coords)); }

bool FgAbGroup::lattice_contains(const std::vector<Int>& coords) const {
  if (coords.size() != rep_->ambient) throw PresentationError("coordinate length mismatch");
  const SmithNormalForm& f = rep_->snf;
  std::vector<Int> c = f.u.apply(coords);
  const std::size_t nmin = f.diag_size();
  for (std::size_t i = 0; i < rep_->ambient; ++i) {
    if (i < nmin && f.diag(i) != 0) {
      if (c[i] % f.diag(i) != 0) return false;
    } else if (c[i] != 0) {
      return false;
    }
  }
  return true;
}

std::vector<Int> FgAbGroup::reduced_coords(const std::vector<Int>& coords) const {
  if (coords.size() != rep_->ambient) throw PresentationError("coordinate length mismatch");
  const SmithNormalForm& f = rep_->snf;
  std::vector<Int> y = f.u.apply(coords);
  const std::size_t nmin = f.diag_size();
  for (std::size_t i = 0; i < rep_->ambient; ++i) {
    if (i < nmin && f.diag(i) != 0) {
      const Int& d = f.diag(i);
      Int r = y[i] % d;
      if (r < 0) r += d;
      y[i] = std::move(r);
    }
  }
  return y;
}

std::vector<Element> FgAbGroup::enumerate_elements() const {
  if (!is_finite()) throw EnumerationError("cannot enumerate an infinite group");
  const SmithNormalForm& f = rep_->snf;
  const std::size_t m = rep_->ambient;
  std::vector<Int> radix(m);
  for (std::size_t i = 0; i < m; ++i) radix[i] = f.diag(i);  // finite => all nonzero
  std::vector<Element> out;
  std::vector<Int> y(m, Int(0));
  for (;;) {
    out.push_back(Element(*this, f.u_inv.apply(y)));
    std::size_t i = m;
    while (i > 0) {
      --i;
      y[i] += 1;
      if (y[i] < radix[i]) break;
      y[i] = 0;
      if (i == 0) return out;
    }
    if (m == 0) return out;
  }
}

Element::Element(FgAbGroup group, std::vector<Int> coords)
    : group_(std::move(group)), coords_(std::move(coords)) {
  if (coords_.size() != group_.ambient_rank()) {
    throw PresentationError("element coordinate length does not match ambient rank");
  }
}

bool Element::is_zero() const { return group_.lattice_contains(coords_); }

namespace {
void require_same_group(const Element& a, const Element& b) {
  if (!a.group().same_presentation(b.group())) {
    throw DomainError("elements belong to different group presentations");
  }
}
}  // namespace

Element Element::operator+(const Element& other) const {
  require_same_group(*this, other);
  std::vector<Int> c(coords_.size());
  for (std::size_t i = 0; i < coords_.size(); ++i) c[i] = coords_[i] + other.coords_[i];
  return Element(group_, std::move(c));
}

Element Element::operator-(const Element& other) const {
  require_same_group(*this, other);
  std::vector<Int> c(coords_.size());
  for (std::size_t i = 0; i < coords_.size(); ++i) c[i] = coords_[i] - other.coords_[i];
  return Element(group_, std::move(c));
}

Element Element::operator-() const {
  std::vector<Int> c(coords_.size());
  for (std::size_t i = 0; i < coords_.size(); ++i) c[i] = -coords_[i];
  return Element(group_, std::move(c));
}

Element Element::times(const Int& k) const {
  std::vector<Int> c(coords_.size());
  for (std::size_t i = 0; i < coords_.size(); ++i) c[i] = k * coords_[i];
  return Element(group_, std::move(c));
}

bool Element::operator==(const Element& other) const { return (*this - other).is_zero(); }

std::string Element::to_string() const {
  std::ostringstream os;
  os << '(';
  for (std::size_t i = 0; i < coords_.size(); ++i) {
    if (i) os << ',';
    os << coords_[i];
  }
  os << ')';
  return os.str();
}

Homomorphism::Homomorphism(FgAbGroup source, FgAbGroup target, IntMatrix matrix)
    : source_(std::move(source)), target_(std::move(target)), matrix_(std::move(matrix)) {
  if (matrix_.rows() != target_.ambient_rank() || matrix_.cols() != source_.ambient_rank()) {
    throw PresentationError("homomorphism matrix dimensions do not match ambient ranks");
  }
  const IntMatrix& rel = source_.relations();
  for (std::size_t j = 0; j < rel.cols(); ++j) {
    if (!target_.lattice_contains(matrix_.apply(rel.column(j)))) {
      throw NotWellDefinedError("relation " + std::to_string(j) +
                                " of the source does not map into the target relation lattice");
    }
  }
}

Homomorphism Homomorphism::identity(const FgAbGroup& g) {
  return Homomorphism(g, g, IntMatrix::identity(g.ambient_rank()));
}

Homomorphism Homomorphism::zero_map(const FgAbGroup& source, const FgAbGroup& target) {
  return Homomorphism(source, target, IntMatrix(target.ambient_rank(), source.ambient_rank()));
}

Homomorphism Homomorphism::scalar(const FgAbGroup& g, const Int& k) {
  IntMatrix m(g.ambient_rank(), g.ambient_rank());
  for (std::size_t i = 0; i < g.ambient_rank(); ++i) m(i, i) = k;
  return Homomorphism(g, g, std::move(m));
}

Element Homomorphism::apply(const Element& x) const {
  if (!x.group().same_presentation(source_)) {
    throw DomainError("element is not in the source of the homomorphism");
  }
  return Element(target_, matrix_.apply(x.coords()));
}

bool Homomorphism::is_zero_map() const {
  for (std::size_t j = 0; j < matrix_.cols(); ++j) {
    if (!target_.lattice_contains(matrix_.column(j))) return false;
  }
  return true;
}

Homomorphism Homomorphism::compose(const Homomorphism& inner) const {
  if (!inner.target().same_presentation(source_)) {
    throw DomainError("composition endpoint mismatch");
  }
  return Homomorphism(inner.source(), target_, matrix_ * inner.matrix());
}

TensorProduct::TensorProduct(FgAbGroup a, FgAbGroup b) : left_(std::move(a)), right_(std::move(b)) {
  const std::size_t ma = left_.ambient_rank();
  const std::size_t mb = right_.ambient_rank();
  const IntMatrix& ra = left_.relations();
  const IntMatrix& rb = right_.relations();
  std::vector<std::vector<Int>> cols;
  cols.reserve(ra.cols() * mb + ma * rb.cols());
  for (std::size_t c = 0; c < ra.cols(); ++c) {
    std::vector<Int> rho = ra.column(c);
    for (std::size_t j = 0; j < mb; ++j) {
      std::vector<Int> col(ma * mb, Int(0));
      for (std::size_t i = 0; i < ma; ++i) col[i * mb + j] = rho[i];
      cols.push_back(std::move(col));
    }
  }
  for (std::size_t i = 0; i < ma; ++i) {
    for (std::size_t c = 0; c < rb.cols(); ++c) {
      std::vector<Int> sigma = rb.column(c);
      std::vector<Int> col(ma * mb, Int(0));
      for (std::size_t j = 0; j < mb; ++j) col[i * mb + j] = sigma[j];
      cols.push_back(std::move(col));
    }
  }
  group_ = FgAbGroup::from_presentation(ma * mb, IntMatrix::from_columns(ma * mb, cols));
}

std::size_t TensorProduct::pair_index(std::size_t i, std::size_t j) const {
  return i * right_.ambient_rank() + j;
}

Element TensorProduct::pure(const Element& a, const Element& b) const {
  if (!a.group().same_presentation(left_) || !b.group().same_presentation(right_)) {
    throw DomainError("pure tensor factors are not in the tensor factors' groups");
  }
  const std::size_t ma = left_.ambient_rank();
  const std::size_t mb = right_.ambient_rank();
  std::vector<Int> c(ma * mb, Int(0));
  for (std::size_t i = 0; i < ma; ++i) {
    for (std::size_t j = 0; j < mb; ++j) c[i * mb + j] = a.coords()[i] * b.coords()[j];
  }
  return group_.element(std::move(c));
}

namespace {

std::vector<Element> matrix_columns_as_elements(const FgAbGroup& g, const IntMatrix& m) {
  std::vector<Element> out;
  out.reserve(m.cols());
  for (std::size_t j = 0; j < m.cols(); ++j) out.push_back(g.element(m.column(j)));
  return out;
}

IntMatrix elements_as_matrix(const FgAbGroup& g, const std::vector<Element>& gens) {
  std::vector<std::vector<Int>> cols;
  cols.reserve(gens.size());
  for (const Element& e : gens) {
    if (!e.group().same_presentation(g)) throw DomainError("element does not belong to the given group");
    cols.push_back(e.coords());
  }
  return IntMatrix::from_columns(g.ambient_rank(), cols);
}

}  // namespace

SubgroupResult subgroup_generated(const FgAbGroup& g, const std::vector<Element>& gens) {
  IntMatrix e = elements_as_matrix(g, gens);
  IntMatrix combined = IntMatrix::hstack(e, g.relations());
  IntMatrix ker = kernel_lattice(combined);
  IntMatrix rel = ker.top_rows(e.cols());
  FgAbGroup sub = FgAbGroup::from_presentation(e.cols(), rel);
  return SubgroupResult{sub, Homomorphism(sub, g, e)};
}

QuotientResult quotient_by(const FgAbGroup& g, const std::vector<Element>& gens) {
  IntMatrix e = elements_as_matrix(g, gens);
  FgAbGroup q = FgAbGroup::from_presentation(g.ambient_rank(), IntMatrix::hstack(g.relations(), e));
  return QuotientResult{q, Homomorphism(g, q, IntMatrix::identity(g.ambient_rank()))};
}

SubgroupResult hom_kernel(const Homomorphism& h) {
  IntMatrix combined = IntMatrix::hstack(h.matrix(), h.target().relations());
  IntMatrix ker = kernel_lattice(combined);
  IntMatrix gens = ker.top_rows(h.source().ambient_rank());
  return subgroup_generated(h.source(), matrix_columns_as_elements(h.source(), gens));
}

SubgroupResult hom_image(const Homomorphism& h) {
  return subgroup_generated(h.target(), matrix_columns_as_elements(h.target(), h.matrix()));
}

QuotientResult hom_cokernel(const Homomorphism& h) {
  return quotient_by(h.target(), matrix_columns_as_elements(h.target(), h.matrix()));
}

DirectSumResult direct_sum(const FgAbGroup& a, const FgAbGroup& b) {
  const std::size_t ma = a.ambient_rank();
  const std::size_t mb = b.ambient_rank();
  FgAbGroup sum =
      FgAbGroup::from_presentation(ma + mb, IntMatrix::block_diag(a.relations(), b.relations()));
  IntMatrix ia(ma + mb, ma);
  for (std::size_t i = 0; i < ma; ++i) ia(i, i) = 1;
  IntMatrix ib(ma + mb, mb);
  for (std::size_t i = 0; i < mb; ++i) ib(ma + i, i) = 1;
  return DirectSumResult{sum, Homomorphism(a, sum, std::move(ia)), Homomorphism(b, sum, std::move(ib))};
}

TensorProduct tensor_product(const FgAbGroup& a, const FgAbGroup& b) { return TensorProduct(a, b); }

bool groups_isomorphic(const FgAbGroup& a, const FgAbGroup& b) {
  return a.canonical_form() == b.canonical_form();
}

bool element_is_zero(const Element& e) { return e.is_zero(); }

bool subgroup_contains(const FgAbGroup& g, const std::vector<Element>& gens, const Element& e) {
  if (!e.group().same_presentation(g)) throw DomainError("element does not belong to the given group");
  IntMatrix em = elements_as_matrix(g, gens);
  return solve_linear(IntMatrix::hstack(em, g.relations()), e.coords()).has_value();
}

FgAbGroup homology_at(const Homomorphism& in, const Homomorphism& out) {
  if (!in.target().same_presentation(out.source())) {
    throw DomainError("homology_at: maps do not share a middle group");
  }
  for (std::size_t j = 0; j < in.source().ambient_rank(); ++j) {
    if (!out.apply(in.apply(in.source().generator(j))).is_zero()) {
      throw DomainError("homology_at: composite is not zero");
    }
  }
  SubgroupResult ker = hom_kernel(out);
  std::vector<Element> image_in_kernel;
  image_in_kernel.reserve(in.matrix().cols());
  for (std::size_t j = 0; j < in.matrix().cols(); ++j) {
    auto z = solve_linear(ker.inclusion.matrix(), in.matrix().column(j));
    if (!z) throw std::logic_error("homology_at: image generator not in kernel lattice");
    image_in_kernel.push_back(ker.group.element(std::move(*z)));
  }
  return quotient_by(ker.group, image_in_kernel).group;
}

}  // namespace diagmaps
