#pragma once

#include <vector>

#include "superkit/endspace.hpp"

namespace superkit {

/// Even maps φ with φ[x,y] = [φx,y] = [x,φy] on all basis pairs.
GradedEndSpace centroid(const LieSuperalgebra& L);

/// Monic minimal polynomial of a square matrix, coefficients low to high.
Vector minimal_polynomial(const Matrix& m);
/// Distinct roots of a polynomial in its field. Over F_p the search is
/// exhaustive and limited to p <= 100003; over Q it uses the rational root
/// test and gives up (returns what it found) on very large coefficients.
std::vector<Scalar> field_roots(const Vector& poly);

struct Decomposition {
  enum class Status { Decomposed, Undecided };
  Status status = Status::Undecided;
  /// Pairwise complementary ideals summing to L (a partial split when
  /// Undecided).
  std::vector<Subspace> ideals;
  /// p_i: projection of L onto ideals[i] along the others.
  std::vector<LinearMap> projections;

  bool decided() const { return status == Status::Decomposed; }
};

/// Splits a centerless L into indecomposable ideals via centroid elements
/// whose minimal polynomials have a root λ with (x-λ)^m a proper coprime
/// factor. Throws CenterNotZero.
Decomposition decompose_indecomposable(const LieSuperalgebra& L);

}  // namespace superkit
