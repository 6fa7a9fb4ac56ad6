#pragma once

#include <cstddef>
#include <optional>
#include <string>
#include <vector>

#include "superkit/matrix.hpp"

namespace superkit {

enum class Parity { Even = 0, Odd = 1 };

inline int bit(Parity p) { return static_cast<int>(p); }
inline Parity operator+(Parity a, Parity b) { return Parity(bit(a) ^ bit(b)); }
std::string to_string(Parity p);

/// Dimensions of a Z2-graded space whose basis lists the even block first.
struct GradedDims {
  std::size_t even = 0;
  std::size_t odd = 0;

  std::size_t total() const { return even + odd; }
  Parity parity(std::size_t i) const { return i < even ? Parity::Even : Parity::Odd; }
  int bit(std::size_t i) const { return i < even ? 0 : 1; }

  friend bool operator==(const GradedDims&, const GradedDims&) = default;
};

enum class ElementParity { Even, Odd, Mixed };

/// Parity read off the support; the zero vector counts as even.
ElementParity parity_of(const GradedDims& dims, std::span<const Scalar> v);

/// A parity-tagged linear map between graded spaces. Column j is the image
/// of the j-th domain basis vector.
class LinearMap {
 public:
  LinearMap() = default;
  /// Throws ParityError when an entry lies outside the blocks allowed by
  /// the parity.
  LinearMap(GradedDims domain, GradedDims codomain, Parity parity, Matrix matrix);

  static LinearMap zero(const FieldSpec& field, GradedDims domain, GradedDims codomain,
                        Parity parity = Parity::Even);
  static LinearMap identity(const FieldSpec& field, GradedDims dims);
  /// Reads the parity from the block support; a zero matrix is even.
  static LinearMap infer(GradedDims domain, GradedDims codomain, Matrix matrix);

  const GradedDims& domain() const { return domain_; }
  const GradedDims& codomain() const { return codomain_; }
  Parity parity() const { return parity_; }
  const Matrix& matrix() const { return matrix_; }
  const FieldSpec& field() const { return matrix_.field(); }

  Vector apply(std::span<const Scalar> v) const { return matrix_ * v; }
  bool is_zero() const { return matrix_.is_zero(); }

  friend bool operator==(const LinearMap&, const LinearMap&) = default;

 private:
  GradedDims domain_;
  GradedDims codomain_;
  Parity parity_ = Parity::Even;
  Matrix matrix_;
};

/// Whether the (row, col) entry of a map of the given parity may be nonzero.
inline bool entry_allowed(const GradedDims& domain, const GradedDims& codomain, Parity p,
                          std::size_t row, std::size_t col) {
  return (codomain.bit(row) ^ domain.bit(col)) == bit(p);
}

/// Composition a ∘ b (apply b first).
LinearMap compose(const LinearMap& a, const LinearMap& b);
/// [P, Q] = PQ - (-1)^{|P||Q|} QP on endomorphisms.
LinearMap supercommutator(const LinearMap& p, const LinearMap& q);

/// Finite-dimensional Lie superalgebra given by structure constants
/// [e_i, e_j] = sum_k c(i, j, k) e_k, basis ordered even block then odd.
/// Construction only checks shapes; the axioms are checked by
/// validate_structure so that invalid tables can still be diagnosed.
class LieSuperalgebra {
 public:
  LieSuperalgebra() = default;
  /// `constants` is the dense table indexed (i * n + j) * n + k.
  LieSuperalgebra(std::string name, FieldSpec field, std::vector<std::string> even_names,
                  std::vector<std::string> odd_names, Vector constants);

  /// Zero table, to be filled with set_bracket.
  static LieSuperalgebra with_zero_table(std::string name, FieldSpec field,
                                         std::vector<std::string> even_names,
                                         std::vector<std::string> odd_names);

  const std::string& name() const { return name_; }
  void rename(std::string name) { name_ = std::move(name); }
  const FieldSpec& field() const { return field_; }
  const GradedDims& dims() const { return dims_; }
  std::size_t dim() const { return dims_.total(); }
  std::size_t even_dim() const { return dims_.even; }
  std::size_t odd_dim() const { return dims_.odd; }
  const std::vector<std::string>& basis_names() const { return names_; }
  std::optional<std::size_t> index_of(const std::string& basis_name) const;
  int parity_bit(std::size_t i) const { return dims_.bit(i); }

  const Scalar& constant(std::size_t i, std::size_t j, std::size_t k) const {
    return constants_[(i * dim() + j) * dim() + k];
  }
  void set_constant(std::size_t i, std::size_t j, std::size_t k, Scalar value);
  /// Sets [e_i, e_j] = v and fills [e_j, e_i] by graded skew-symmetry.
  void set_bracket(std::size_t i, std::size_t j, std::span<const Scalar> v);
  const Vector& constants() const { return constants_; }

  Vector bracket_basis(std::size_t i, std::size_t j) const;
  /// Bilinear extension of the table. Throws AlgebraMismatch on wrong lengths.
  Vector bracket(std::span<const Scalar> x, std::span<const Scalar> y) const;

  Vector zero() const { return zero_vector(field_, dim()); }
  Vector basis_vector(std::size_t i) const { return unit_vector(field_, dim(), i); }

  friend bool operator==(const LieSuperalgebra&, const LieSuperalgebra&) = default;

 private:
  std::string name_;
  FieldSpec field_ = FieldSpec::rationals();
  GradedDims dims_;
  std::vector<std::string> names_;
  Vector constants_;
};

enum class AxiomKind { Parity, SkewSymmetry, Jacobi };
std::string to_string(AxiomKind kind);

struct AxiomViolation {
  AxiomKind kind;
  std::size_t i, j, k;
};

struct ValidationReport {
  std::vector<AxiomViolation> violations;
  bool valid() const { return violations.empty(); }
};

/// Checks parity compatibility, graded skew-symmetry (pairs i <= j) and the
/// graded Jacobi identity on every basis triple.
ValidationReport validate_structure(const LieSuperalgebra& L);

/// ad x, with parity |x|. Throws MixedParity for inhomogeneous x.
LinearMap ad(const LieSuperalgebra& L, std::span<const Scalar> x);
LinearMap ad_basis(const LieSuperalgebra& L, std::size_t i);

Subspace derived_subalgebra(const LieSuperalgebra& L);
bool is_perfect(const LieSuperalgebra& L);
Subspace center(const LieSuperalgebra& L);
Subspace centralizer(const LieSuperalgebra& L, const Subspace& S);
/// Bracket of two subspaces: span of brackets of basis pairs.
Subspace bracket_of(const LieSuperalgebra& L, const Subspace& U, const Subspace& V);
/// Least bracket-closed subspace containing S.
Subspace enveloping_closure(const LieSuperalgebra& L, const Subspace& S);
bool is_subalgebra(const LieSuperalgebra& L, const Subspace& U);
bool is_ideal(const LieSuperalgebra& L, const Subspace& U);
/// True when the canonical basis of U consists of parity-pure vectors.
bool is_graded(const LieSuperalgebra& L, const Subspace& U);

/// Structure constants of a graded subalgebra U in its canonical basis.
/// Throws NotGraded or NotClosed.
LieSuperalgebra induced_subalgebra(const LieSuperalgebra& L, const Subspace& U,
                                   std::string name = {});

struct DirectSum {
  LieSuperalgebra algebra;
  LinearMap embed_first;
  LinearMap embed_second;
};

/// L1 ⊕ L2 with the even-then-odd basis ordering restored. Colliding basis
/// names get suffixes _1 and _2.
DirectSum direct_sum(const LieSuperalgebra& first, const LieSuperalgebra& second);

/// Subspace of L spanned by the images of a map.
Subspace map_image(const LinearMap& f);

}  // namespace superkit
