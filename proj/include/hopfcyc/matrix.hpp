#pragma once

#include "hopfcyc/field.hpp"

#include <cstddef>
#include <span>
#include <vector>

namespace hopfcyc {

/// Sparse matrix over an exact field. Rows are kept sorted by column and never
/// store an explicit zero, so two equal matrices have identical storage.
class Matrix {
 public:
  struct Entry {
    std::size_t col;
    Scalar value;
  };
  using Row = std::vector<Entry>;

  explicit Matrix(Field field = Field::rationals(), std::size_t rows = 0, std::size_t cols = 0);

  static Matrix identity(Field field, std::size_t n);
  /// Column vector with the given entries.
  static Matrix column(Field field, std::span<const Scalar> values);

  Field field() const { return field_; }
  std::size_t rows() const { return rows_.size(); }
  std::size_t cols() const { return cols_; }
  const Row& row(std::size_t i) const& { return rows_[i]; }
  Row row(std::size_t i) && { return std::move(rows_[i]); }

  Scalar at(std::size_t i, std::size_t j) const;
  void set(std::size_t i, std::size_t j, const Scalar& v);
  void add(std::size_t i, std::size_t j, const Scalar& v);
  /// Adds coef * block with its top-left corner at (r0, c0).
  void add_block(std::size_t r0, std::size_t c0, const Matrix& block, const Scalar& coef);

  std::size_t nnz() const;
  bool is_zero() const;
  bool is_identity() const;

  Matrix transpose() const;
  Matrix select_rows(std::span<const std::size_t> idx) const;
  Matrix select_cols(std::span<const std::size_t> idx) const;
  Matrix col_range(std::size_t begin, std::size_t end) const;

  Matrix& operator+=(const Matrix& o);
  Matrix& operator-=(const Matrix& o);
  Matrix& operator*=(const Scalar& s);
  friend Matrix operator+(Matrix a, const Matrix& b) { return a += b; }
  friend Matrix operator-(Matrix a, const Matrix& b) { return a -= b; }
  friend Matrix operator*(Matrix a, const Scalar& s) { return a *= s; }
  friend Matrix operator*(const Scalar& s, Matrix a) { return a *= s; }
  Matrix operator*(const Matrix& o) const;
  Matrix operator-() const;

  bool operator==(const Matrix& o) const;

  static Matrix hstack(std::span<const Matrix> blocks);
  static Matrix vstack(std::span<const Matrix> blocks);

 private:
  friend class MatrixBuilder;
  Field field_;
  std::size_t cols_;
  std::vector<Row> rows_;
};

/// Accumulates (row, col, value) triplets; duplicates are summed and zeros
/// dropped when the matrix is built.
class MatrixBuilder {
 public:
  MatrixBuilder(Field field, std::size_t rows, std::size_t cols);
  void add(std::size_t i, std::size_t j, const Scalar& v);
  void add_block(std::size_t r0, std::size_t c0, const Matrix& block, const Scalar& coef);
  Matrix build() &&;

 private:
  Field field_;
  std::size_t rows_, cols_;
  std::vector<std::vector<Matrix::Entry>> pending_;
};

Matrix kron(const Matrix& a, const Matrix& b);
/// kron of a list, left factor most significant.
Matrix kron_all(std::span<const Matrix> factors);
/// Integer power of a square matrix.
Matrix power(const Matrix& m, std::size_t e);

std::size_t rank(const Matrix& m);

/// Basis of the null space in reduced form: column j of `basis` has a 1 in row
/// free_cols[j] and zeros in every other free row, so the coordinates of a
/// null vector are its entries at the free rows.
struct KernelBasis {
  Matrix basis;
  std::vector<std::size_t> free_cols;

  std::size_t dim() const { return free_cols.size(); }
  /// Coordinates of the columns of `vectors` in this basis; throws
  /// std::domain_error if some column is not in the span.
  Matrix coordinates(const Matrix& vectors) const;
};

KernelBasis kernel_basis(const Matrix& m);
/// Dimension of the solution space of the homogeneous system m x = 0.
std::size_t solve_dim_hom(const Matrix& m);
/// Throws std::domain_error when m is singular.
Matrix inverse(const Matrix& m);

/// Reduced row echelon form of the row space of m (nonzero rows only), plus
/// the pivot column of each row.
struct RowEchelon {
  Matrix rows;
  std::vector<std::size_t> pivots;
};
RowEchelon row_echelon(const Matrix& m);

/// Quotient of k^n by the column space of `image`: `projection` maps k^n onto
/// the quotient with coordinates indexed by `complement`, and `section` is the
/// inclusion of those standard basis vectors.
struct Cokernel {
  Matrix projection;
  Matrix section;
  std::vector<std::size_t> complement;
  std::size_t dim() const { return complement.size(); }
};
Cokernel cokernel(const Matrix& image);

}  // namespace hopfcyc
