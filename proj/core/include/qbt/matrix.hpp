#pragma once

#include <cstddef>
#include <optional>
#include <span>
#include <vector>

#include "qbt/field.hpp"

namespace qbt {

using Vector = std::vector<Scalar>;

/// Dense row-major matrix over a single Field.
class Matrix {
 public:
  Matrix() = default;
  Matrix(Field field, std::size_t rows, std::size_t cols);

  static Matrix identity(Field field, std::size_t n);
  static Matrix from_ints(Field field, std::size_t rows, std::size_t cols, std::span<const long long> row_major);
  static Matrix from_ints(Field field, const std::vector<std::vector<long long>>& rows);
  static Matrix from_columns(Field field, std::size_t rows, const std::vector<Vector>& columns);

  const Field& field() const { return field_; }
  std::size_t rows() const { return rows_; }
  std::size_t cols() const { return cols_; }
  bool empty() const { return rows_ == 0 || cols_ == 0; }

  Scalar& operator()(std::size_t r, std::size_t c) { return a_[r * cols_ + c]; }
  const Scalar& operator()(std::size_t r, std::size_t c) const { return a_[r * cols_ + c]; }
  const std::vector<Scalar>& data() const { return a_; }

  Vector column(std::size_t c) const;
  Vector row(std::size_t r) const;
  bool is_zero() const;

  Matrix transpose() const;
  Matrix scaled(const Scalar& s) const;
  Matrix submatrix(std::size_t r0, std::size_t c0, std::size_t nr, std::size_t nc) const;
  Matrix select_columns(std::span<const std::size_t> cols) const;
  Matrix select_rows(std::span<const std::size_t> rows) const;

  Matrix& operator+=(const Matrix& o);
  Matrix& operator-=(const Matrix& o);
  friend Matrix operator+(Matrix a, const Matrix& b) { return a += b; }
  friend Matrix operator-(Matrix a, const Matrix& b) { return a -= b; }
  friend Matrix operator*(const Matrix& a, const Matrix& b);
  friend Vector operator*(const Matrix& a, const Vector& v);
  friend bool operator==(const Matrix& a, const Matrix& b);

 private:
  Field field_;
  std::size_t rows_ = 0;
  std::size_t cols_ = 0;
  std::vector<Scalar> a_;
};

Matrix hcat(const Matrix& a, const Matrix& b);
Matrix vcat(const Matrix& a, const Matrix& b);
Matrix block_diag(const Matrix& a, const Matrix& b);

struct EchelonForm {
  Matrix reduced;                    ///< reduced row echelon form
  std::vector<std::size_t> pivots;   ///< pivot column of each nonzero row
};

EchelonForm rref(Matrix m);

/// Row rank. Over Q uses fraction-free (Bareiss) elimination on integer rows.
std::size_t rank(const Matrix& m);

/// Basis of {v : Mv = 0}, one vector per free column of the reduced echelon form,
/// with a 1 at that free column.
std::vector<Vector> nullspace_basis(const Matrix& m);

std::optional<Matrix> inverse(const Matrix& m);
Scalar determinant(Matrix m);

/// Solves AX = B; nullopt when inconsistent. Returns the particular solution with free variables zero.
std::optional<Matrix> solve(const Matrix& a, const Matrix& b);

/// Columns of `m` forming a basis of its column space (leftmost pivots).
Matrix column_basis(const Matrix& m);

/// Extends the independent columns of `basis` with standard vectors to a basis of the ambient space;
/// returns only the added columns.
Matrix complement_basis(const Matrix& basis, std::size_t ambient);

}  // namespace qbt
