// Test-only helpers: independent elimination, identity probes and random
// algebra generators. Nothing here calls the library's solvers.
#pragma once

#include <functional>
#include <random>
#include <vector>

#include "superkit/catalog.hpp"
#include "superkit/superalgebra.hpp"

namespace testing_support {

using namespace superkit;

/// Rank by plain Gaussian elimination on a copy of the rows.
inline std::size_t oracle_rank(std::vector<Vector> rows) {
  std::size_t rank = 0;
  if (rows.empty()) return 0;
  const std::size_t cols = rows.front().size();
  for (std::size_t c = 0; c < cols && rank < rows.size(); ++c) {
    std::size_t pivot = rank;
    while (pivot < rows.size() && rows[pivot][c].is_zero()) ++pivot;
    if (pivot == rows.size()) continue;
    std::swap(rows[rank], rows[pivot]);
    const Scalar inv = rows[rank][c].inverse();
    for (std::size_t r = rank + 1; r < rows.size(); ++r) {
      if (rows[r][c].is_zero()) continue;
      const Scalar factor = rows[r][c] * inv;
      for (std::size_t k = c; k < cols; ++k) rows[r][k] -= factor * rows[rank][k];
    }
    ++rank;
  }
  return rank;
}

/// Maps of the given parity, as flat n*n vectors of elementary matrices.
inline std::vector<std::pair<std::size_t, std::size_t>> allowed_entries(const GradedDims& d,
                                                                        Parity p) {
  std::vector<std::pair<std::size_t, std::size_t>> out;
  for (std::size_t r = 0; r < d.total(); ++r)
    for (std::size_t c = 0; c < d.total(); ++c)
      if (entry_allowed(d, d, p, r, c)) out.emplace_back(r, c);
  return out;
}

inline Vector column_of(const Matrix& m, std::size_t c) {
  Vector v;
  for (std::size_t r = 0; r < m.rows(); ++r) v.push_back(m.at(r, c));
  return v;
}

inline Vector axpy(Vector a, const Scalar& s, const Vector& b) {
  for (std::size_t i = 0; i < a.size(); ++i) a[i] += s * b[i];
  return a;
}

/// D[x,y] - [Dx,y] - (-1)^{|D||x|}[x,Dy] on basis elements, flattened over
/// all pairs.
inline Vector derivation_defect(const LieSuperalgebra& L, const Matrix& D, Parity p) {
  Vector out;
  const std::size_t n = L.dim();
  const Scalar one = Scalar::one(L.field());
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = 0; j < n; ++j) {
      const Vector ei = L.basis_vector(i), ej = L.basis_vector(j);
      Vector v = D * std::span<const Scalar>(L.bracket(ei, ej));
      v = axpy(v, -one, L.bracket(column_of(D, i), ej));
      const int s = sign_of(bit(p), L.parity_bit(i));
      v = axpy(v, Scalar(L.field(), -s), L.bracket(ei, column_of(D, j)));
      out.insert(out.end(), v.begin(), v.end());
    }
  return out;
}

/// D[[x,y],z] - [[Dx,y],z] - s1 [[x,Dy],z] - s2 [[x,y],Dz] on basis triples.
inline Vector triple_defect(const LieSuperalgebra& L, const Matrix& D, Parity p) {
  Vector out;
  const std::size_t n = L.dim();
  const Scalar one = Scalar::one(L.field());
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = 0; j < n; ++j)
      for (std::size_t k = 0; k < n; ++k) {
        const Vector ei = L.basis_vector(i), ej = L.basis_vector(j), ek = L.basis_vector(k);
        const Vector xy = L.bracket(ei, ej);
        Vector v = D * std::span<const Scalar>(L.bracket(xy, ek));
        v = axpy(v, -one, L.bracket(L.bracket(column_of(D, i), ej), ek));
        const int s1 = sign_of(bit(p), L.parity_bit(i));
        const int s2 = sign_of(bit(p), L.parity_bit(i) + L.parity_bit(j));
        v = axpy(v, Scalar(L.field(), -s1), L.bracket(L.bracket(ei, column_of(D, j)), ek));
        v = axpy(v, Scalar(L.field(), -s2), L.bracket(xy, column_of(D, k)));
        out.insert(out.end(), v.begin(), v.end());
      }
  return out;
}

/// Dimension of {D of parity p : defect(D) = 0}, found by probing the
/// linear defect with elementary maps and eliminating independently.
inline std::size_t probe_solution_dim(
    const LieSuperalgebra& L, Parity p,
    const std::function<Vector(const LieSuperalgebra&, const Matrix&, Parity)>& defect) {
  const auto entries = allowed_entries(L.dims(), p);
  std::vector<Vector> columns;
  for (auto [r, c] : entries) {
    Matrix E(L.field(), L.dim(), L.dim());
    E.at(r, c) = Scalar::one(L.field());
    columns.push_back(defect(L, E, p));
  }
  return entries.size() - oracle_rank(columns);
}

/// Random parity-pure supermatrix in gl(m|n) with small entries.
inline SuperMatrix random_supermatrix(std::mt19937& rng, const FieldSpec& field,
                                      GradedDims blocks, Parity p) {
  std::uniform_int_distribution<long> coeff(-2, 2);
  const std::size_t n = blocks.total();
  Matrix m(field, n, n);
  for (std::size_t r = 0; r < n; ++r)
    for (std::size_t c = 0; c < n; ++c)
      if (entry_allowed(blocks, blocks, p, r, c) && rng() % 2 == 0)
        m.at(r, c) = Scalar(field, coeff(rng));
  return SuperMatrix(blocks, std::move(m));
}

/// Random Jacobi-valid algebra of dimension 2..max_dim: the supercommutator
/// closure of two or three sparse random supermatrices.
inline LieSuperalgebra random_matrix_algebra(std::mt19937& rng, const FieldSpec& field,
                                             std::size_t max_dim) {
  const GradedDims shapes[] = {{2, 1}, {1, 2}, {2, 0}, {1, 1}};
  for (int attempt = 0; attempt < 1000; ++attempt) {
    const GradedDims blocks = shapes[rng() % 4];
    const std::size_t count = 2 + rng() % 2;
    std::vector<SuperMatrix> gens;
    std::vector<std::string> names;
    for (std::size_t g = 0; g < count; ++g) {
      const Parity p = blocks.odd == 0 ? Parity::Even : Parity(rng() % 2);
      gens.push_back(random_supermatrix(rng, field, blocks, p));
      names.push_back("g" + std::to_string(g));
    }
    try {
      auto L = from_supermatrices("random", gens, names);
      if (L.dim() >= 2 && L.dim() <= max_dim) return L;
    } catch (const Error&) {
      // dependent or zero generators: draw again
    }
  }
  throw std::runtime_error("random_matrix_algebra: no sample found");
}

/// Same algebra in a random parity-preserving basis. If `change` is given
/// it receives B, whose columns are the new basis in old coordinates, so B
/// is an isomorphism from the result onto L.
inline LieSuperalgebra random_basis_change(std::mt19937& rng, const LieSuperalgebra& L,
                                           Matrix* change = nullptr) {
  const FieldSpec& field = L.field();
  const std::size_t n = L.dim();
  std::uniform_int_distribution<long> coeff(-3, 3);
  Matrix B(field, n, n);
  for (;;) {
    for (std::size_t r = 0; r < n; ++r)
      for (std::size_t c = 0; c < n; ++c)
        B.at(r, c) = L.parity_bit(r) == L.parity_bit(c) ? Scalar(field, coeff(rng))
                                                        : Scalar::zero(field);
    if (oracle_rank([&] {
          std::vector<Vector> rows;
          for (std::size_t r = 0; r < n; ++r) rows.push_back(B.row_vector(r));
          return rows;
        }()) == n)
      break;
  }
  const Matrix Binv = inverse(B);
  if (change) *change = B;
  auto out = LieSuperalgebra::with_zero_table(
      L.name() + "'", field,
      std::vector<std::string>(L.basis_names().begin(), L.basis_names().begin() + L.even_dim()),
      std::vector<std::string>(L.basis_names().begin() + L.even_dim(), L.basis_names().end()));
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = 0; j < n; ++j) {
      const Vector v = L.bracket(column_of(B, i), column_of(B, j));
      out.set_bracket(i, j, Binv * std::span<const Scalar>(v));
    }
  return out;
}

inline LinearMap map_from_ints(const LieSuperalgebra& dom, const LieSuperalgebra& cod,
                               const std::vector<std::vector<long>>& rows) {
  return LinearMap(dom.dims(), cod.dims(), Parity::Even, Matrix::from_ints(dom.field(), rows));
}

}  // namespace testing_support
