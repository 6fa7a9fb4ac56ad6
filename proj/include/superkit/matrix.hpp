#pragma once

#include <cstddef>
#include <optional>
#include <span>
#include <string>
#include <vector>

#include "superkit/field.hpp"

namespace superkit {

using Vector = std::vector<Scalar>;

Vector zero_vector(const FieldSpec& field, std::size_t n);
Vector unit_vector(const FieldSpec& field, std::size_t n, std::size_t i);
bool is_zero(std::span<const Scalar> v);

/// Dense row-major matrix over a single field.
class Matrix {
 public:
  Matrix() : field_(FieldSpec::rationals()) {}
  Matrix(const FieldSpec& field, std::size_t rows, std::size_t cols);

  static Matrix identity(const FieldSpec& field, std::size_t n);
  /// Every row must have length `cols`.
  static Matrix from_rows(const FieldSpec& field, std::size_t cols,
                          const std::vector<Vector>& rows);
  static Matrix from_columns(const FieldSpec& field, std::size_t rows,
                             const std::vector<Vector>& columns);
  /// Convenience for tests and catalog tables.
  static Matrix from_ints(const FieldSpec& field,
                          const std::vector<std::vector<long>>& rows);

  const FieldSpec& field() const { return field_; }
  std::size_t rows() const { return rows_; }
  std::size_t cols() const { return cols_; }

  Scalar& at(std::size_t r, std::size_t c) { return data_[r * cols_ + c]; }
  const Scalar& at(std::size_t r, std::size_t c) const { return data_[r * cols_ + c]; }

  std::span<Scalar> row(std::size_t r) { return {data_.data() + r * cols_, cols_}; }
  std::span<const Scalar> row(std::size_t r) const { return {data_.data() + r * cols_, cols_}; }
  Vector column(std::size_t c) const;
  Vector row_vector(std::size_t r) const;

  /// Row-major flattening; used to treat square matrices as vectors.
  const Vector& data() const { return data_; }
  static Matrix from_flat(const FieldSpec& field, std::size_t rows, std::size_t cols,
                          Vector flat);

  bool is_zero() const;
  Matrix transpose() const;

  Matrix& operator+=(const Matrix& rhs);
  Matrix& operator-=(const Matrix& rhs);
  Matrix& operator*=(const Scalar& s);
  friend Matrix operator+(Matrix a, const Matrix& b) { return a += b; }
  friend Matrix operator-(Matrix a, const Matrix& b) { return a -= b; }
  friend Matrix operator*(Matrix a, const Scalar& s) { return a *= s; }
  friend Matrix operator*(const Matrix& a, const Matrix& b);
  friend Vector operator*(const Matrix& a, std::span<const Scalar> v);
  friend bool operator==(const Matrix& a, const Matrix& b);

  std::string to_string() const;

 private:
  void check_shape(const Matrix& rhs) const;

  FieldSpec field_;
  std::size_t rows_ = 0;
  std::size_t cols_ = 0;
  Vector data_;
};

struct RrefResult {
  Matrix reduced;
  std::vector<std::size_t> pivots;
  std::size_t rank = 0;
};

RrefResult rref(const Matrix& m);
std::size_t rank(const Matrix& m);

class Subspace;

Subspace kernel(const Matrix& m);
/// Column space.
Subspace image(const Matrix& m);
/// A particular solution of m x = b with every free variable set to zero.
std::optional<Vector> solve(const Matrix& m, std::span<const Scalar> b);
/// Throws DivisionByZero when m is singular.
Matrix inverse(const Matrix& m);

/// A subspace of F^n held as its reduced row-echelon basis, so equality of
/// subspaces is equality of representations.
class Subspace {
 public:
  Subspace() : basis_() {}
  static Subspace zero(const FieldSpec& field, std::size_t ambient);
  static Subspace full(const FieldSpec& field, std::size_t ambient);
  static Subspace span(const FieldSpec& field, std::size_t ambient,
                       const std::vector<Vector>& vectors);
  /// `echelon` must already be in reduced row-echelon form without zero rows.
  static Subspace from_rref(Matrix echelon, std::vector<std::size_t> pivots);

  const FieldSpec& field() const { return basis_.field(); }
  std::size_t ambient_dim() const { return basis_.cols(); }
  std::size_t dim() const { return basis_.rows(); }
  bool is_zero() const { return dim() == 0; }
  bool is_full() const { return dim() == ambient_dim(); }

  const Matrix& basis() const { return basis_; }
  const std::vector<std::size_t>& pivots() const { return pivots_; }
  std::vector<Vector> vectors() const;
  Vector vector(std::size_t i) const { return basis_.row_vector(i); }

  bool contains(std::span<const Scalar> v) const;
  /// Coefficients of v in the canonical basis, or nothing when v is outside.
  std::optional<Vector> coordinates(std::span<const Scalar> v) const;
  bool contains(const Subspace& other) const;

  Subspace sum(const Subspace& other) const;
  Subspace intersect(const Subspace& other) const;

  friend bool operator==(const Subspace& a, const Subspace& b) {
    return a.basis_ == b.basis_ && a.ambient_dim() == b.ambient_dim();
  }

 private:
  void check_ambient(const Subspace& other) const;

  Matrix basis_;
  std::vector<std::size_t> pivots_;
};

}  // namespace superkit
