#pragma once

#include <cstddef>
#include <optional>
#include <vector>

#include "cagekit/field.hpp"

namespace cagekit {

using Vector = std::vector<FieldElement>;

Vector zero_vector(const Field& field, std::size_t length);
/// Embeds rationals into the field.
Vector vector_from(const Field& field, const std::vector<Rational>& values);
bool is_zero_vector(const Vector& v);

/// Dense row-major matrix over a single field.
class Matrix {
 public:
  Matrix(Field field, std::size_t rows, std::size_t cols);

  static Matrix identity(const Field& field, std::size_t n);
  /// Rows must share one length; an empty list gives a 0 x cols matrix.
  static Matrix from_rows(const Field& field, const std::vector<Vector>& rows, std::size_t cols = 0);

  std::size_t rows() const { return rows_; }
  std::size_t cols() const { return cols_; }
  const Field& field() const { return field_; }

  FieldElement& operator()(std::size_t r, std::size_t c) { return entries_[r * cols_ + c]; }
  const FieldElement& operator()(std::size_t r, std::size_t c) const { return entries_[r * cols_ + c]; }

  Vector row(std::size_t r) const;
  Vector column(std::size_t c) const;
  void swap_rows(std::size_t a, std::size_t b);

  Matrix transpose() const;
  Matrix operator*(const Matrix& o) const;
  Vector operator*(const Vector& v) const;

  friend bool operator==(const Matrix& a, const Matrix& b);

 private:
  Field field_;
  std::size_t rows_;
  std::size_t cols_;
  std::vector<FieldElement> entries_;
};

/// Linearly independent vectors spanning a subspace of F^ambient_dim.
struct SubspaceBasis {
  std::size_t ambient_dim = 0;
  std::vector<Vector> vectors;

  std::size_t dim() const { return vectors.size(); }
};

/// Reduced row echelon form with pivot columns, pivots chosen as the first
/// nonzero entry in column order.
struct RowEchelon {
  Matrix reduced;
  std::vector<std::size_t> pivots;
};

RowEchelon row_reduce(Matrix m);

std::size_t rank(const Matrix& m);

/// Basis of {x : m x = 0}, one vector per free column: 1 at the free column,
/// minus the reduced pivot entries at pivot columns. Equal kernels give
/// identical bases.
SubspaceBasis kernel_basis(const Matrix& m);

/// Nonzero rows of the reduced row echelon form: the canonical basis of the row space.
SubspaceBasis row_space(const Matrix& m);

/// Canonical basis of span(vectors) inside F^ambient_dim.
SubspaceBasis span_of(const Field& field, std::size_t ambient_dim, const std::vector<Vector>& vectors);

/// True iff v is a linear combination of the basis vectors. ShapeError on dimension mismatch.
bool in_span(const Vector& v, const SubspaceBasis& basis);

/// Mutual containment.
bool same_span(const SubspaceBasis& a, const SubspaceBasis& b);

/// A solution of a x = b, or nullopt when the system is inconsistent.
std::optional<Vector> solve(const Matrix& a, const Vector& b);

/// Inverse of a square matrix, or nullopt when singular.
std::optional<Matrix> inverse(const Matrix& a);

}  // namespace cagekit
