#pragma once

#include <optional>
#include <vector>

#include "superkit/superalgebra.hpp"

namespace superkit {

/// A graded subspace of End(V), stored per parity as a canonical subspace
/// of the row-major flattened n×n matrices.
class GradedEndSpace {
 public:
  GradedEndSpace() = default;
  GradedEndSpace(GradedDims dims, Subspace even, Subspace odd);

  static GradedEndSpace span(const FieldSpec& field, GradedDims dims,
                             const std::vector<LinearMap>& maps);

  const GradedDims& dims() const { return dims_; }
  const FieldSpec& field() const { return even_.field(); }
  const Subspace& part(Parity p) const { return p == Parity::Even ? even_ : odd_; }
  std::size_t even_dim() const { return even_.dim(); }
  std::size_t odd_dim() const { return odd_.dim(); }
  std::size_t dim() const { return even_dim() + odd_dim(); }

  std::vector<LinearMap> basis(Parity p) const;
  /// Even basis followed by odd basis.
  std::vector<LinearMap> basis() const;
  LinearMap basis_map(std::size_t index) const;

  bool contains(const LinearMap& m) const;
  bool contains(const GradedEndSpace& other) const;
  /// Coordinates in basis(), or nothing when m is outside.
  std::optional<Vector> coordinates(const LinearMap& m) const;

  friend bool operator==(const GradedEndSpace&, const GradedEndSpace&) = default;

 private:
  GradedDims dims_;
  Subspace even_;
  Subspace odd_;
};

}  // namespace superkit
