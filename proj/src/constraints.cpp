#include "superkit/constraints.hpp"

namespace superkit {

MapUnknowns::MapUnknowns(GradedDims dims, Parity parity)
    : n_(dims.total()), column_(n_ * n_, -1) {
  for (std::size_t r = 0; r < n_; ++r)
    for (std::size_t c = 0; c < n_; ++c)
      if (entry_allowed(dims, dims, parity, r, c)) {
        column_[r * n_ + c] = static_cast<long>(positions_.size());
        positions_.emplace_back(r, c);
      }
}

Vector MapUnknowns::expand(std::span<const Scalar> solution) const {
  const FieldSpec& field = solution.empty() ? FieldSpec::rationals() : solution.front().field();
  Vector flat = zero_vector(field, n_ * n_);
  for (std::size_t u = 0; u < positions_.size(); ++u)
    flat[positions_[u].first * n_ + positions_[u].second] = solution[u];
  return flat;
}

namespace {

// Scratch row with helpers that ignore entries the parity pins to zero.
struct RowBuilder {
  const MapUnknowns& unknowns;
  Vector row;

  RowBuilder(const MapUnknowns& u, const FieldSpec& field)
      : unknowns(u), row(zero_vector(field, u.count())) {}

  void add(std::size_t r, std::size_t c, const Scalar& coeff) {
    const long col = unknowns.column(r, c);
    if (col >= 0 && !coeff.is_zero()) row[static_cast<std::size_t>(col)] += coeff;
  }
  void sub(std::size_t r, std::size_t c, const Scalar& coeff, int sign = 1) {
    const long col = unknowns.column(r, c);
    if (col < 0 || coeff.is_zero()) return;
    if (sign > 0)
      row[static_cast<std::size_t>(col)] -= coeff;
    else
      row[static_cast<std::size_t>(col)] += coeff;
  }
};

// [[e_i, e_j], e_k] for all triples, flattened ((i n + j) n + k) n + t.
Vector double_brackets(const LieSuperalgebra& L) {
  const std::size_t n = L.dim();
  Vector out = zero_vector(L.field(), n * n * n * n);
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = 0; j < n; ++j)
      for (std::size_t m = 0; m < n; ++m) {
        const Scalar& w = L.constant(i, j, m);
        if (w.is_zero()) continue;
        for (std::size_t k = 0; k < n; ++k)
          for (std::size_t t = 0; t < n; ++t)
            out[((i * n + j) * n + k) * n + t].add_product(w, L.constant(m, k, t));
      }
  return out;
}

void append_nonzero(std::vector<Vector>& rows, RowBuilder& b) {
  if (!is_zero(b.row)) rows.push_back(std::move(b.row));
}

std::vector<Vector> rows_for_pair(const LieSuperalgebra& L, MapIdentity identity,
                                  const MapUnknowns& unknowns, Parity parity, std::size_t i,
                                  std::size_t j, const Vector* triples) {
  const std::size_t n = L.dim();
  const FieldSpec& field = L.field();
  const int p = bit(parity);
  std::vector<Vector> rows;
  switch (identity) {
    case MapIdentity::Derivation: {
      const int s = sign_of(p, L.parity_bit(i));
      for (std::size_t t = 0; t < n; ++t) {
        RowBuilder b(unknowns, field);
        for (std::size_t m = 0; m < n; ++m) {
          b.add(t, m, L.constant(i, j, m));
          b.sub(m, i, L.constant(m, j, t));
          b.sub(m, j, L.constant(i, m, t), s);
        }
        append_nonzero(rows, b);
      }
      break;
    }
    case MapIdentity::Centroid: {
      for (std::size_t t = 0; t < n; ++t) {
        RowBuilder left(unknowns, field), right(unknowns, field);
        for (std::size_t m = 0; m < n; ++m) {
          left.add(t, m, L.constant(i, j, m));
          left.sub(m, i, L.constant(m, j, t));
          right.add(t, m, L.constant(i, j, m));
          right.sub(m, j, L.constant(i, m, t));
        }
        append_nonzero(rows, left);
        append_nonzero(rows, right);
      }
      break;
    }
    case MapIdentity::TripleDerivation: {
      auto T = [&](std::size_t a, std::size_t b, std::size_t c, std::size_t t) -> const Scalar& {
        return (*triples)[((a * n + b) * n + c) * n + t];
      };
      const int s1 = sign_of(p, L.parity_bit(i));
      const int s2 = sign_of(p, L.parity_bit(i) ^ L.parity_bit(j));
      for (std::size_t k = 0; k < n; ++k)
        for (std::size_t t = 0; t < n; ++t) {
          RowBuilder b(unknowns, field);
          for (std::size_t m = 0; m < n; ++m) {
            b.add(t, m, T(i, j, k, m));
            b.sub(m, i, T(m, j, k, t));
            b.sub(m, j, T(i, m, k, t), s1);
            b.sub(m, k, T(i, j, m, t), s2);
          }
          append_nonzero(rows, b);
        }
      break;
    }
  }
  return rows;
}

std::vector<Vector> rows_for_first(const LieSuperalgebra& L, MapIdentity identity,
                                   const MapUnknowns& unknowns, Parity parity, std::size_t i,
                                   const Vector* triples, kernels::Exec exec) {
  const std::size_t n = L.dim();
  std::vector<std::vector<Vector>> per_j(n);
  const bool par = exec == kernels::Exec::Parallel && n >= 4;
#pragma omp parallel for schedule(dynamic) if (par)
  for (std::size_t j = 0; j < n; ++j)
    per_j[j] = rows_for_pair(L, identity, unknowns, parity, i, j, triples);
  std::vector<Vector> rows;
  for (auto& block : per_j)
    for (auto& r : block) rows.push_back(std::move(r));
  return rows;
}

void check_parity_supported(MapIdentity identity, Parity parity) {
  if (identity == MapIdentity::Centroid && parity == Parity::Odd)
    throw Error(ErrorKind::BadParams, "centroid is solved for even maps only");
}

}  // namespace

std::vector<Vector> constraint_rows(const LieSuperalgebra& L, MapIdentity identity,
                                    Parity parity, std::size_t first, kernels::Exec exec) {
  check_parity_supported(identity, parity);
  const MapUnknowns unknowns(L.dims(), parity);
  Vector triples;
  if (identity == MapIdentity::TripleDerivation) triples = double_brackets(L);
  return rows_for_first(L, identity, unknowns, parity, first, &triples, exec);
}

Matrix assemble_constraints(const LieSuperalgebra& L, MapIdentity identity, Parity parity,
                            kernels::Exec exec) {
  check_parity_supported(identity, parity);
  const MapUnknowns unknowns(L.dims(), parity);
  Vector triples;
  if (identity == MapIdentity::TripleDerivation) triples = double_brackets(L);
  std::vector<Vector> all;
  for (std::size_t i = 0; i < L.dim(); ++i)
    for (auto& r : rows_for_first(L, identity, unknowns, parity, i, &triples, exec))
      all.push_back(std::move(r));
  return Matrix::from_rows(L.field(), unknowns.count(), all);
}

Subspace solve_map_constraints(const LieSuperalgebra& L, MapIdentity identity, Parity parity,
                               kernels::Exec exec) {
  check_parity_supported(identity, parity);
  const std::size_t n = L.dim();
  const MapUnknowns unknowns(L.dims(), parity);
  Vector triples;
  if (identity == MapIdentity::TripleDerivation) triples = double_brackets(L);
  kernels::RowReducer reducer(L.field(), unknowns.count(), exec);
  for (std::size_t i = 0; i < n && !reducer.full_rank(); ++i)
    reducer.absorb(rows_for_first(L, identity, unknowns, parity, i, &triples, exec));
  std::vector<Vector> flat;
  for (const auto& v : kernels::nullspace_from_rref(reducer.result(), unknowns.count()))
    flat.push_back(unknowns.expand(v));
  return Subspace::span(L.field(), n * n, flat);
}

GradedEndSpace solve_map_constraints(const LieSuperalgebra& L, MapIdentity identity,
                                     kernels::Exec exec) {
  Subspace even = solve_map_constraints(L, identity, Parity::Even, exec);
  Subspace odd = identity == MapIdentity::Centroid
                     ? Subspace::zero(L.field(), L.dim() * L.dim())
                     : solve_map_constraints(L, identity, Parity::Odd, exec);
  return GradedEndSpace(L.dims(), std::move(even), std::move(odd));
}

}  // namespace superkit
