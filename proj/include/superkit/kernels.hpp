#pragma once

// Data-parallel linear-algebra kernels. Each kernel has a serial reference
// path and an OpenMP path; both produce identical results.

#include <cstddef>
#include <vector>

#include "superkit/matrix.hpp"

namespace superkit::kernels {

enum class Exec { Serial, Parallel };

/// Gauss-Jordan elimination in place. Pivot choice is the first nonzero
/// entry at or below the current row, so the result is deterministic.
RrefResult rref(Matrix m, Exec exec = Exec::Parallel);

Matrix multiply(const Matrix& a, const Matrix& b, Exec exec = Exec::Parallel);

/// Incremental reduced row-echelon basis of a row space that is fed in
/// blocks. Memory stays bounded by the rank, which lets the derivation
/// solvers stream constraint systems with tens of thousands of rows.
class RowReducer {
 public:
  RowReducer(const FieldSpec& field, std::size_t cols, Exec exec = Exec::Parallel)
      : field_(field), cols_(cols), exec_(exec) {}

  void absorb(std::vector<Vector> rows);
  void absorb(const Matrix& block);

  std::size_t cols() const { return cols_; }
  std::size_t rank() const { return rows_.size(); }
  bool full_rank() const { return rows_.size() == cols_; }

  RrefResult result() const;

 private:
  void reduce_against_basis(Vector& v) const;
  void insert(Vector v);

  FieldSpec field_;
  std::size_t cols_;
  Exec exec_;
  std::vector<Vector> rows_;
  std::vector<std::size_t> pivots_;
};

/// Kernel basis read off a reduced row-echelon form.
std::vector<Vector> nullspace_from_rref(const RrefResult& r, std::size_t cols);

}  // namespace superkit::kernels
