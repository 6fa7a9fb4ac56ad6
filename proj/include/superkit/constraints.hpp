#pragma once

// Linear constraint systems whose unknowns are the entries of a
// parity-homogeneous endomorphism. Assembly is data-parallel over the first
// basis index of each identity; the serial path is the reference.

#include <cstddef>
#include <vector>

#include "superkit/endspace.hpp"
#include "superkit/kernels.hpp"

namespace superkit {

enum class MapIdentity {
  /// D[x,y] = [Dx,y] + (-1)^{|D||x|}[x,Dy]
  Derivation,
  /// D[[x,y],z] = [[Dx,y],z] + (-1)^{|D||x|}[[x,Dy],z] + (-1)^{|D|(|x|+|y|)}[[x,y],Dz]
  TripleDerivation,
  /// φ[x,y] = [φx,y] = [x,φy], even φ only
  Centroid,
};

/// Entry positions of an n×n map that a given parity leaves free.
class MapUnknowns {
 public:
  MapUnknowns(GradedDims dims, Parity parity);

  std::size_t count() const { return positions_.size(); }
  /// Column for entry (row, col) or -1 when the parity forces it to zero.
  long column(std::size_t row, std::size_t col) const { return column_[row * n_ + col]; }
  /// Expands a solution vector into a flattened n×n matrix.
  Vector expand(std::span<const Scalar> solution) const;

 private:
  std::size_t n_;
  std::vector<std::pair<std::size_t, std::size_t>> positions_;
  std::vector<long> column_;
};

/// Rows of the system for every identity instance whose first basis index is
/// `first`. Zero rows are dropped.
std::vector<Vector> constraint_rows(const LieSuperalgebra& L, MapIdentity identity,
                                    Parity parity, std::size_t first,
                                    kernels::Exec exec = kernels::Exec::Parallel);

/// The whole system as one dense matrix (zero rows dropped, rows ordered by
/// first index). Used by tests and benchmarks; solvers stream instead.
Matrix assemble_constraints(const LieSuperalgebra& L, MapIdentity identity, Parity parity,
                            kernels::Exec exec = kernels::Exec::Parallel);

/// Solution space in flattened n×n coordinates.
Subspace solve_map_constraints(const LieSuperalgebra& L, MapIdentity identity, Parity parity,
                               kernels::Exec exec = kernels::Exec::Parallel);

GradedEndSpace solve_map_constraints(const LieSuperalgebra& L, MapIdentity identity,
                                     kernels::Exec exec = kernels::Exec::Parallel);

}  // namespace superkit
