#pragma once

#include <optional>
#include <string>
#include <vector>

#include "superkit/superalgebra.hpp"

namespace superkit {

/// Square matrix acting on a (m|n)-graded space.
class SuperMatrix {
 public:
  SuperMatrix(GradedDims blocks, Matrix entries);
  /// Matrix with a single entry 1 at (row, col).
  static SuperMatrix unit(const FieldSpec& field, GradedDims blocks, std::size_t row,
                          std::size_t col);
  static SuperMatrix from_ints(const FieldSpec& field, GradedDims blocks,
                               const std::vector<std::vector<long>>& rows);

  const GradedDims& blocks() const { return blocks_; }
  const Matrix& entries() const { return entries_; }
  /// Even when supported on the diagonal blocks, odd on the off-diagonal ones.
  ElementParity parity() const;

 private:
  GradedDims blocks_;
  Matrix entries_;
};

/// [A, B] = AB - (-1)^{|A||B|} BA.
SuperMatrix supercommutator(const SuperMatrix& a, const SuperMatrix& b);

/// Closes span(generators) under the supercommutator and reads off the
/// structure constants in that basis (even elements first, otherwise in
/// discovery order). Elements added by the closure are named c0, c1, ...
/// Throws DependentGenerators, MixedParity.
LieSuperalgebra from_supermatrices(std::string name, const std::vector<SuperMatrix>& generators,
                                   const std::vector<std::string>& names);

struct BuiltinParams {
  std::optional<FieldSpec> field;  ///< defaults to Q
  std::size_t even = 0;            ///< abelian(even|odd), heisenberg(even|odd)
  std::size_t odd = 0;
};

/// Names accepted by builtin().
std::vector<std::string> builtin_names();

/// Catalog algebras: abelian, aff2, sl2, gl11, osp12, heisenberg,
/// char2_nonabelian, sl2+sl2, sl2+osp12. Every result is validated.
/// Throws UnknownName, BadParams.
LieSuperalgebra builtin(const std::string& name, const BuiltinParams& params = {});

LieSuperalgebra abelian(const FieldSpec& field, std::size_t even, std::size_t odd);
LieSuperalgebra aff2(const FieldSpec& field);
LieSuperalgebra sl2(const FieldSpec& field);
LieSuperalgebra gl11(const FieldSpec& field);
LieSuperalgebra osp12(const FieldSpec& field);
LieSuperalgebra heisenberg(const FieldSpec& field, std::size_t n, std::size_t m);

}  // namespace superkit
