#include "superkit/decompose.hpp"

#include <algorithm>

#include "superkit/constraints.hpp"

namespace superkit {

GradedEndSpace centroid(const LieSuperalgebra& L) {
  return solve_map_constraints(L, MapIdentity::Centroid);
}

Vector minimal_polynomial(const Matrix& m) {
  if (m.rows() != m.cols()) throw Error(ErrorKind::ShapeError, "minimal_polynomial");
  const FieldSpec& field = m.field();
  const std::size_t n = m.rows();
  std::vector<Vector> powers{Matrix::identity(field, n).data()};
  Matrix current = Matrix::identity(field, n);
  for (std::size_t k = 1; k <= n; ++k) {
    current = current * m;
    const Matrix basis = Matrix::from_columns(field, n * n, powers);
    if (auto a = solve(basis, current.data())) {
      Vector poly;
      for (auto& c : *a) poly.push_back(-c);
      poly.push_back(Scalar::one(field));
      return poly;
    }
    powers.push_back(current.data());
  }
  throw Error(ErrorKind::ShapeError, "minimal polynomial degree exceeds matrix size");
}

namespace {

Scalar evaluate(const Vector& poly, const Scalar& x) {
  Scalar acc = Scalar::zero(x.field());
  for (auto it = poly.rbegin(); it != poly.rend(); ++it) {
    acc *= x;
    acc += *it;
  }
  return acc;
}

// poly / (x - root), assuming root is a root.
Vector deflate(const Vector& poly, const Scalar& root) {
  Vector out(poly.size() - 1, Scalar::zero(root.field()));
  Scalar carry = Scalar::zero(root.field());
  for (std::size_t i = poly.size() - 1; i-- > 0;) {
    carry = poly[i + 1] + carry * root;
    out[i] = carry;
  }
  return out;
}

std::size_t multiplicity(Vector poly, const Scalar& root) {
  std::size_t m = 0;
  while (poly.size() > 1 && evaluate(poly, root).is_zero()) {
    poly = deflate(poly, root);
    ++m;
  }
  return m;
}

std::vector<mpz_class> divisors(mpz_class a) {
  std::vector<mpz_class> out;
  if (a < 0) a = -a;
  for (mpz_class d = 1; d * d <= a; ++d)
    if (a % d == 0) {
      out.push_back(d);
      if (d * d != a) out.push_back(a / d);
    }
  return out;
}

}  // namespace

std::vector<Scalar> field_roots(const Vector& poly) {
  std::vector<Scalar> roots;
  if (poly.size() < 2) return roots;
  const FieldSpec& field = poly.front().field();
  if (!field.is_rationals()) {
    if (field.p() > 100003) return roots;
    for (std::uint64_t r = 0; r < field.p(); ++r) {
      Scalar x(field, static_cast<long>(r));
      if (evaluate(poly, x).is_zero()) roots.push_back(x);
    }
    return roots;
  }
  // Clear denominators, then apply the rational root test.
  mpz_class lcm = 1;
  for (const auto& c : poly) mpz_lcm(lcm.get_mpz_t(), lcm.get_mpz_t(), c.rational().get_den_mpz_t());
  std::vector<mpz_class> ints;
  for (const auto& c : poly) ints.push_back(mpz_class(c.rational() * lcm));
  std::size_t low = 0;
  while (low < ints.size() && ints[low] == 0) ++low;
  if (low > 0) roots.push_back(Scalar::zero(field));
  const mpz_class a_low = ints[low], a_high = ints.back();
  const mpz_class limit("1000000000000");
  if (abs(a_low) > limit || abs(a_high) > limit) return roots;
  for (const auto& num : divisors(a_low))
    for (const auto& den : divisors(a_high))
      for (int sign : {1, -1}) {
        Scalar x(field, mpq_class(sign * num, den));
        if (evaluate(poly, x).is_zero() &&
            std::find(roots.begin(), roots.end(), x) == roots.end())
          roots.push_back(x);
      }
  return roots;
}

namespace {

Matrix matrix_power(const Matrix& m, std::size_t e) {
  Matrix out = Matrix::identity(m.field(), m.rows());
  for (std::size_t i = 0; i < e; ++i) out = out * m;
  return out;
}

struct Split {
  Subspace first, second;
};

// A splitting of L into two nontrivial ideals from one centroid element.
std::optional<Split> split_with(const Matrix& theta) {
  const Vector mu = minimal_polynomial(theta);
  const std::size_t degree = mu.size() - 1;
  if (degree < 2) return std::nullopt;
  for (const auto& root : field_roots(mu)) {
    const std::size_t m = multiplicity(mu, root);
    if (m == 0 || m == degree) continue;
    Matrix shifted = theta - Matrix::identity(theta.field(), theta.rows()) * root;
    const Matrix q = matrix_power(shifted, m);
    return Split{kernel(q), image(q)};
  }
  return std::nullopt;
}

std::vector<Matrix> candidate_elements(const GradedEndSpace& gamma) {
  std::vector<Matrix> out;
  const auto basis = gamma.basis(Parity::Even);
  for (const auto& b : basis) out.push_back(b.matrix());
  if (basis.size() > 1) {
    Matrix combo = basis.front().matrix();
    for (std::size_t k = 1; k < basis.size(); ++k)
      combo += basis[k].matrix() * Scalar(gamma.field(), static_cast<long>(k + 1));
    out.push_back(std::move(combo));
  }
  return out;
}

// Expresses subspaces of an induced subalgebra U back in L's coordinates.
Subspace lift(const Subspace& inner, const Subspace& U) {
  std::vector<Vector> vs;
  for (const auto& c : inner.vectors()) {
    Vector v = zero_vector(U.field(), U.ambient_dim());
    for (std::size_t a = 0; a < c.size(); ++a)
      for (std::size_t k = 0; k < v.size(); ++k) v[k].add_product(c[a], U.basis().at(a, k));
    vs.push_back(std::move(v));
  }
  return Subspace::span(U.field(), U.ambient_dim(), vs);
}

bool decompose_into(const LieSuperalgebra& L, std::vector<Subspace>& out) {
  if (L.dim() == 0) return true;
  const GradedEndSpace gamma = centroid(L);
  if (gamma.dim() <= 1) {
    out.push_back(Subspace::full(L.field(), L.dim()));
    return true;
  }
  for (const auto& theta : candidate_elements(gamma)) {
    auto split = split_with(theta);
    if (!split) continue;
    bool decided = true;
    for (const Subspace* part : {&split->first, &split->second}) {
      std::vector<Subspace> inner;
      decided = decompose_into(induced_subalgebra(L, *part), inner) && decided;
      for (const auto& s : inner) out.push_back(lift(s, *part));
    }
    return decided;
  }
  out.push_back(Subspace::full(L.field(), L.dim()));
  return false;
}

}  // namespace

Decomposition decompose_indecomposable(const LieSuperalgebra& L) {
  if (!center(L).is_zero())
    throw Error(ErrorKind::CenterNotZero, "decomposition requires a centerless algebra");
  Decomposition result;
  const bool decided = decompose_into(L, result.ideals);
  result.status = decided ? Decomposition::Status::Decomposed : Decomposition::Status::Undecided;
  std::sort(result.ideals.begin(), result.ideals.end(),
            [](const Subspace& a, const Subspace& b) { return a.pivots() < b.pivots(); });

  const FieldSpec& field = L.field();
  std::vector<Vector> columns;
  std::vector<std::size_t> owner;
  for (std::size_t i = 0; i < result.ideals.size(); ++i)
    for (auto& v : result.ideals[i].vectors()) {
      columns.push_back(std::move(v));
      owner.push_back(i);
    }
  if (columns.size() != L.dim()) return result;
  const Matrix B = Matrix::from_columns(field, L.dim(), columns);
  const Matrix B_inv = inverse(B);
  for (std::size_t i = 0; i < result.ideals.size(); ++i) {
    Matrix mask(field, L.dim(), L.dim());
    for (std::size_t c = 0; c < owner.size(); ++c)
      if (owner[c] == i) mask.at(c, c) = Scalar::one(field);
    result.projections.emplace_back(L.dims(), L.dims(), Parity::Even, B * mask * B_inv);
  }
  return result;
}

}  // namespace superkit
