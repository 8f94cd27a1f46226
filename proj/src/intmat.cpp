#include "diagmaps/intmat.hpp"

#include <algorithm>
#include <sstream>

namespace diagmaps {

namespace {

Int abs_int(const Int& v) { return v < 0 ? Int(-v) : v; }

}  // namespace

IntMatrix IntMatrix::identity(std::size_t n) {
  IntMatrix m(n, n);
  for (std::size_t i = 0; i < n; ++i) m(i, i) = 1;
  return m;
}

IntMatrix IntMatrix::from_rows(std::initializer_list<std::initializer_list<long long>> rows) {
  const std::size_t nr = rows.size();
  const std::size_t nc = nr == 0 ? 0 : rows.begin()->size();
  IntMatrix m(nr, nc);
  std::size_t i = 0;
  for (const auto& row : rows) {
    if (row.size() != nc) throw PresentationError("ragged matrix literal");
    std::size_t j = 0;
    for (long long v : row) m(i, j++) = v;
    ++i;
  }
  return m;
}

IntMatrix IntMatrix::from_row_vectors(const std::vector<std::vector<Int>>& rows) {
  const std::size_t nr = rows.size();
  const std::size_t nc = nr == 0 ? 0 : rows.front().size();
  IntMatrix m(nr, nc);
  for (std::size_t i = 0; i < nr; ++i) {
    if (rows[i].size() != nc) throw PresentationError("ragged matrix rows");
    for (std::size_t j = 0; j < nc; ++j) m(i, j) = rows[i][j];
  }
  return m;
}

IntMatrix IntMatrix::from_columns(std::size_t rows, const std::vector<std::vector<Int>>& cols) {
  IntMatrix m(rows, cols.size());
  for (std::size_t j = 0; j < cols.size(); ++j) {
    if (cols[j].size() != rows) throw PresentationError("column length does not match row count");
    for (std::size_t i = 0; i < rows; ++i) m(i, j) = cols[j][i];
  }
  return m;
}

IntMatrix IntMatrix::hstack(const IntMatrix& a, const IntMatrix& b) {
  if (a.rows() != b.rows()) throw PresentationError("hstack: row counts differ");
  IntMatrix m(a.rows(), a.cols() + b.cols());
  for (std::size_t i = 0; i < a.rows(); ++i) {
    for (std::size_t j = 0; j < a.cols(); ++j) m(i, j) = a(i, j);
    for (std::size_t j = 0; j < b.cols(); ++j) m(i, a.cols() + j) = b(i, j);
  }
  return m;
}

IntMatrix IntMatrix::block_diag(const IntMatrix& a, const IntMatrix& b) {
  IntMatrix m(a.rows() + b.rows(), a.cols() + b.cols());
  for (std::size_t i = 0; i < a.rows(); ++i)
    for (std::size_t j = 0; j < a.cols(); ++j) m(i, j) = a(i, j);
  for (std::size_t i = 0; i < b.rows(); ++i)
    for (std::size_t j = 0; j < b.cols(); ++j) m(a.rows() + i, a.cols() + j) = b(i, j);
  return m;
}

std::vector<Int> IntMatrix::column(std::size_t j) const {
  std::vector<Int> out(rows_);
  for (std::size_t i = 0; i < rows_; ++i) out[i] = (*this)(i, j);
  return out;
}

std::vector<Int> IntMatrix::apply(const std::vector<Int>& x) const {
  if (x.size() != cols_) throw PresentationError("matrix-vector size mismatch");
  std::vector<Int> out(rows_);
  for (std::size_t i = 0; i < rows_; ++i) {
    Int acc = 0;
    for (std::size_t j = 0; j < cols_; ++j) acc += (*this)(i, j) * x[j];
    out[i] = std::move(acc);
  }
  return out;
}

IntMatrix IntMatrix::operator*(const IntMatrix& other) const {
  if (cols_ != other.rows()) throw PresentationError("matrix product size mismatch");
  IntMatrix out(rows_, other.cols());
  for (std::size_t i = 0; i < rows_; ++i) {
    for (std::size_t k = 0; k < cols_; ++k) {
      const Int& a = (*this)(i, k);
      if (a == 0) continue;
      for (std::size_t j = 0; j < other.cols(); ++j) {
        if (other(k, j) != 0) out(i, j) += a * other(k, j);
      }
    }
  }
  return out;
}

IntMatrix IntMatrix::top_rows(std::size_t k) const {
  IntMatrix out(k, cols_);
  for (std::size_t i = 0; i < k; ++i)
    for (std::size_t j = 0; j < cols_; ++j) out(i, j) = (*this)(i, j);
  return out;
}

bool IntMatrix::is_zero() const {
  return std::all_of(data_.begin(), data_.end(), [](const Int& v) { return v == 0; });
}

void IntMatrix::swap_rows(std::size_t i, std::size_t j) {
  if (i == j) return;
  for (std::size_t c = 0; c < cols_; ++c) std::swap((*this)(i, c), (*this)(j, c));
}

void IntMatrix::swap_cols(std::size_t i, std::size_t j) {
  if (i == j) return;
  for (std::size_t r = 0; r < rows_; ++r) std::swap((*this)(r, i), (*this)(r, j));
}

void IntMatrix::add_row_multiple(std::size_t dst, std::size_t src, const Int& c) {
  if (c == 0) return;
  for (std::size_t j = 0; j < cols_; ++j) (*this)(dst, j) += c * (*this)(src, j);
}

void IntMatrix::add_col_multiple(std::size_t dst, std::size_t src, const Int& c) {
  if (c == 0) return;
  for (std::size_t i = 0; i < rows_; ++i) (*this)(i, dst) += c * (*this)(i, src);
}

void IntMatrix::negate_row(std::size_t i) {
  for (std::size_t j = 0; j < cols_; ++j) (*this)(i, j) = -(*this)(i, j);
}

void IntMatrix::negate_col(std::size_t j) {
  for (std::size_t i = 0; i < rows_; ++i) (*this)(i, j) = -(*this)(i, j);
}

Int IntMatrix::determinant() const {
  if (rows_ != cols_) throw PresentationError("determinant of a non-square matrix");
  const std::size_t n = rows_;
  if (n == 0) return 1;
  IntMatrix a = *this;
  Int sign = 1;
  Int prev = 1;
  for (std::size_t k = 0; k + 1 < n; ++k) {
    if (a(k, k) == 0) {
      std::size_t piv = k;
      while (piv < n && a(piv, k) == 0) ++piv;
      if (piv == n) return 0;
      a.swap_rows(k, piv);
      sign = -sign;
    }
    for (std::size_t i = k + 1; i < n; ++i) {
      for (std::size_t j = k + 1; j < n; ++j) {
        a(i, j) = (a(i, j) * a(k, k) - a(i, k) * a(k, j)) / prev;
      }
      a(i, k) = 0;
    }
    prev = a(k, k);
  }
  return sign * a(n - 1, n - 1);
}

std::string IntMatrix::to_string() const {
  std::ostringstream os;
  for (std::size_t i = 0; i < rows_; ++i) {
    os << '[';
    for (std::size_t j = 0; j < cols_; ++j) {
      if (j) os << ' ';
      os << (*this)(i, j);
    }
    os << ']';
    if (i + 1 < rows_) os << '\n';
  }
  if (rows_ == 0) os << "[]";
  return os.str();
}

SmithNormalForm smith_normal_form(const IntMatrix& m) {
  const std::size_t nr = m.rows();
  const std::size_t nc = m.cols();
  const std::size_t nmin = std::min(nr, nc);

  SmithNormalForm f;
  f.s = m;
  f.u = IntMatrix::identity(nr);
  f.u_inv = IntMatrix::identity(nr);
  f.v = IntMatrix::identity(nc);
  f.v_inv = IntMatrix::identity(nc);

  auto row_add = [&](std::size_t dst, std::size_t src, const Int& c) {
    f.s.add_row_multiple(dst, src, c);
    f.u.add_row_multiple(dst, src, c);
    f.u_inv.add_col_multiple(src, dst, -c);
  };
  auto row_swap = [&](std::size_t i, std::size_t j) {
    f.s.swap_rows(i, j);
    f.u.swap_rows(i, j);
    f.u_inv.swap_cols(i, j);
  };
  auto row_neg = [&](std::size_t i) {
    f.s.negate_row(i);
    f.u.negate_row(i);
    f.u_inv.negate_col(i);
  };
  auto col_add = [&](std::size_t dst, std::size_t src, const Int& c) {
    f.s.add_col_multiple(dst, src, c);
    f.v.add_col_multiple(dst, src, c);
    f.v_inv.add_row_multiple(src, dst, -c);
  };
  auto col_swap = [&](std::size_t i, std::size_t j) {
    f.s.swap_cols(i, j);
    f.v.swap_cols(i, j);
    f.v_inv.swap_rows(i, j);
  };

  bool exhausted = false;
  for (std::size_t t = 0; t < nmin && !exhausted; ++t) {
    for (;;) {
      // Smallest nonzero |entry| in the trailing submatrix, row-major first.
      bool found = false;
      std::size_t pr = t, pc = t;
      Int best = 0;
      for (std::size_t i = t; i < nr; ++i) {
        for (std::size_t j = t; j < nc; ++j) {
          const Int& v = f.s(i, j);
          if (v == 0) continue;
          Int a = v < 0 ? Int(-v) : v;
          if (!found || a < best) {
            found = true;
            best = std::move(a);
            pr = i;
            pc = j;
          }
        }
      }
      if (!found) {
        exhausted = true;
        break;
      }
      row_swap(t, pr);
      col_swap(t, pc);

      bool clean = true;
      for (std::size_t i = t + 1; i < nr; ++i) {
        if (f.s(i, t) != 0) {
          Int q = f.s(i, t) / f.s(t, t);
          row_add(i, t, -q);
          if (f.s(i, t) != 0) clean = false;
        }
      }
      for (std::size_t j = t + 1; j < nc; ++j) {
        if (f.s(t, j) != 0) {
          Int q = f.s(t, j) / f.s(t, t);
          col_add(j, t, -q);
          if (f.s(t, j) != 0) clean = false;
        }
      }
      if (!clean) continue;

      // Pivot is alone in its row and column. Fold in any entry it does not
      // divide and try again; the pivot strictly shrinks, so this terminates.
      bool divides_all = true;
      for (std::size_t i = t + 1; i < nr && divides_all; ++i) {
        for (std::size_t j = t + 1; j < nc; ++j) {
          if (f.s(i, j) % f.s(t, t) != 0) {
            row_add(t, i, 1);
            divides_all = false;
            break;
          }
        }
      }
      if (divides_all) break;
    }
  }

  for (std::size_t t = 0; t < nmin; ++t) {
    if (f.s(t, t) < 0) row_neg(t);
  }

  f.rank = 0;
  for (std::size_t t = 0; t < nmin; ++t) {
    if (f.s(t, t) != 0) ++f.rank;
  }

  // Internal contract checks; violations indicate a bug, not bad input.
  if (!(f.u * m * f.v == f.s)) throw std::logic_error("smith_normal_form: u*m*v != s");
  for (std::size_t t = 0; t + 1 < nmin; ++t) {
    const Int& a = f.s(t, t);
    const Int& b = f.s(t + 1, t + 1);
    if (a == 0 ? b != 0 : b % a != 0) throw std::logic_error("smith_normal_form: divisibility chain broken");
  }
  for (std::size_t i = 0; i < nr; ++i)
    for (std::size_t j = 0; j < nc; ++j)
      if (i != j && f.s(i, j) != 0) throw std::logic_error("smith_normal_form: s not diagonal");

  return f;
}

std::optional<std::vector<Int>> solve_linear(const IntMatrix& m, const std::vector<Int>& b) {
  if (b.size() != m.rows()) throw PresentationError("solve_linear: rhs size mismatch");
  SmithNormalForm f = smith_normal_form(m);
  std::vector<Int> c = f.u.apply(b);
  std::vector<Int> z(m.cols(), Int(0));
  const std::size_t nmin = f.diag_size();
  for (std::size_t i = 0; i < m.rows(); ++i) {
    if (i < nmin && f.diag(i) != 0) {
      if (c[i] % f.diag(i) != 0) return std::nullopt;
      z[i] = c[i] / f.diag(i);
    } else if (c[i] != 0) {
      return std::nullopt;
    }
  }
  return f.v.apply(z);
}

IntMatrix kernel_lattice(const IntMatrix& m) {
  SmithNormalForm f = smith_normal_form(m);
  const std::size_t q = m.cols() - f.rank;
  IntMatrix out(m.cols(), q);
  for (std::size_t j = 0; j < q; ++j) {
    for (std::size_t i = 0; i < m.cols(); ++i) out(i, j) = f.v(i, f.rank + j);
  }
  return out;
}

IntMatrix column_lattice_basis(const IntMatrix& m) {
  SmithNormalForm f = smith_normal_form(m);
  IntMatrix out(m.rows(), f.rank);
  for (std::size_t j = 0; j < f.rank; ++j) {
    for (std::size_t i = 0; i < m.rows(); ++i) out(i, j) = f.u_inv(i, j) * f.diag(j);
  }
  return out;
}

}  // namespace diagmaps
