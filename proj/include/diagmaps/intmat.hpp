#pragma once

#include <boost/multiprecision/cpp_int.hpp>
#include <cstddef>
#include <initializer_list>
#include <optional>
#include <string>
#include <vector>

#include "diagmaps/error.hpp"

namespace diagmaps {

// Exact arbitrary-precision integer. Smith normal form blows up fixed-width
// intermediates even on tiny inputs, so everything runs on cpp_int.
using Int = boost::multiprecision::cpp_int;

/// Dense row-major matrix of arbitrary-precision integers.
class IntMatrix {
 public:
  IntMatrix() = default;
  IntMatrix(std::size_t rows, std::size_t cols)
      : rows_(rows), cols_(cols), data_(rows * cols) {}

  static IntMatrix identity(std::size_t n);
  static IntMatrix from_rows(std::initializer_list<std::initializer_list<long long>> rows);
  static IntMatrix from_row_vectors(const std::vector<std::vector<Int>>& rows);
  // Build from a list of column vectors; `rows` fixes the height even when
  // the list is empty.
  static IntMatrix from_columns(std::size_t rows, const std::vector<std::vector<Int>>& cols);
  static IntMatrix hstack(const IntMatrix& a, const IntMatrix& b);
  static IntMatrix block_diag(const IntMatrix& a, const IntMatrix& b);

  std::size_t rows() const { return rows_; }
  std::size_t cols() const { return cols_; }

  Int& operator()(std::size_t r, std::size_t c) { return data_[r * cols_ + c]; }
  const Int& operator()(std::size_t r, std::size_t c) const { return data_[r * cols_ + c]; }

  bool operator==(const IntMatrix&) const = default;

  std::vector<Int> column(std::size_t j) const;
  std::vector<Int> apply(const std::vector<Int>& x) const;  // M·x
  IntMatrix operator*(const IntMatrix& other) const;
  IntMatrix top_rows(std::size_t k) const;
  bool is_zero() const;

  void swap_rows(std::size_t i, std::size_t j);
  void swap_cols(std::size_t i, std::size_t j);
  void add_row_multiple(std::size_t dst, std::size_t src, const Int& c);  // row dst += c·row src
  void add_col_multiple(std::size_t dst, std::size_t src, const Int& c);  // col dst += c·col src
  void negate_row(std::size_t i);
  void negate_col(std::size_t j);

  Int determinant() const;  // square matrices, Bareiss elimination
  std::string to_string() const;

 private:
  std::size_t rows_ = 0;
  std::size_t cols_ = 0;
  std::vector<Int> data_;
};

/// u·m·v = s with s diagonal, nonnegative, divisibility chain d1 | d2 | ...,
/// and u, v unimodular. Exact inverses of u and v are tracked alongside.
struct SmithNormalForm {
  IntMatrix s;
  IntMatrix u, v;
  IntMatrix u_inv, v_inv;
  std::size_t rank = 0;  // number of nonzero diagonal entries

  const Int& diag(std::size_t i) const { return s(i, i); }
  std::size_t diag_size() const { return std::min(s.rows(), s.cols()); }
};

// Pivot choice: smallest nonzero absolute value, first in row-major order.
// Deterministic by construction.
SmithNormalForm smith_normal_form(const IntMatrix& m);

// One integer solution of m·x = b, if any.
std::optional<std::vector<Int>> solve_linear(const IntMatrix& m, const std::vector<Int>& b);

// Columns form a Z-basis of {x : m·x = 0}.
IntMatrix kernel_lattice(const IntMatrix& m);

// Full-column-rank matrix whose columns span the same lattice as m's columns.
IntMatrix column_lattice_basis(const IntMatrix& m);

}  // namespace diagmaps
