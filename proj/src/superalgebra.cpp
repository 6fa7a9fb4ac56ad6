#include "superkit/superalgebra.hpp"

#include <algorithm>
#include <set>

namespace superkit {

std::string to_string(Parity p) { return p == Parity::Even ? "even" : "odd"; }

std::string to_string(AxiomKind kind) {
  switch (kind) {
    case AxiomKind::Parity: return "parity";
    case AxiomKind::SkewSymmetry: return "skew-symmetry";
    case AxiomKind::Jacobi: return "jacobi";
  }
  return "unknown";
}

ElementParity parity_of(const GradedDims& dims, std::span<const Scalar> v) {
  bool even = false, odd = false;
  for (std::size_t i = 0; i < v.size(); ++i) {
    if (v[i].is_zero()) continue;
    (i < dims.even ? even : odd) = true;
  }
  if (even && odd) return ElementParity::Mixed;
  return odd ? ElementParity::Odd : ElementParity::Even;
}

// -- LinearMap --------------------------------------------------------------

LinearMap::LinearMap(GradedDims domain, GradedDims codomain, Parity parity, Matrix matrix)
    : domain_(domain), codomain_(codomain), parity_(parity), matrix_(std::move(matrix)) {
  if (matrix_.rows() != codomain_.total() || matrix_.cols() != domain_.total())
    throw Error(ErrorKind::ShapeError, "map matrix is " + std::to_string(matrix_.rows()) + "x" +
                                           std::to_string(matrix_.cols()) + ", expected " +
                                           std::to_string(codomain_.total()) + "x" +
                                           std::to_string(domain_.total()));
  for (std::size_t r = 0; r < matrix_.rows(); ++r)
    for (std::size_t c = 0; c < matrix_.cols(); ++c)
      if (!matrix_.at(r, c).is_zero() && !entry_allowed(domain_, codomain_, parity_, r, c))
        throw Error(ErrorKind::ParityError, "entry (" + std::to_string(r) + "," +
                                                std::to_string(c) + ") violates " +
                                                to_string(parity_) + " block shape");
}

LinearMap LinearMap::zero(const FieldSpec& field, GradedDims domain, GradedDims codomain,
                          Parity parity) {
  return LinearMap(domain, codomain, parity, Matrix(field, codomain.total(), domain.total()));
}

LinearMap LinearMap::identity(const FieldSpec& field, GradedDims dims) {
  return LinearMap(dims, dims, Parity::Even, Matrix::identity(field, dims.total()));
}

LinearMap LinearMap::infer(GradedDims domain, GradedDims codomain, Matrix matrix) {
  bool even = false, odd = false;
  for (std::size_t r = 0; r < matrix.rows(); ++r)
    for (std::size_t c = 0; c < matrix.cols(); ++c)
      if (!matrix.at(r, c).is_zero())
        (entry_allowed(domain, codomain, Parity::Even, r, c) ? even : odd) = true;
  if (even && odd) throw Error(ErrorKind::MixedParity, "map is not parity-homogeneous");
  return LinearMap(domain, codomain, odd ? Parity::Odd : Parity::Even, std::move(matrix));
}

LinearMap compose(const LinearMap& a, const LinearMap& b) {
  if (!(a.domain() == b.codomain()))
    throw Error(ErrorKind::ShapeError, "compose: domain/codomain mismatch");
  return LinearMap(b.domain(), a.codomain(), a.parity() + b.parity(), a.matrix() * b.matrix());
}

LinearMap supercommutator(const LinearMap& p, const LinearMap& q) {
  Matrix pq = p.matrix() * q.matrix();
  Matrix qp = q.matrix() * p.matrix();
  if (bit(p.parity()) & bit(q.parity()))
    pq += qp;
  else
    pq -= qp;
  return LinearMap(q.domain(), p.codomain(), p.parity() + q.parity(), std::move(pq));
}

// -- LieSuperalgebra --------------------------------------------------------

LieSuperalgebra::LieSuperalgebra(std::string name, FieldSpec field,
                                 std::vector<std::string> even_names,
                                 std::vector<std::string> odd_names, Vector constants)
    : name_(std::move(name)), field_(field), dims_{even_names.size(), odd_names.size()} {
  names_ = std::move(even_names);
  names_.insert(names_.end(), odd_names.begin(), odd_names.end());
  std::set<std::string> seen;
  for (const auto& n : names_) {
    if (n.empty() || n.find(',') != std::string::npos)
      throw Error(ErrorKind::ShapeError, "invalid basis name '" + n + "'");
    if (!seen.insert(n).second) throw Error(ErrorKind::ShapeError, "duplicate basis name '" + n + "'");
  }
  const std::size_t n = dim();
  if (constants.size() != n * n * n)
    throw Error(ErrorKind::ShapeError, "structure table has " + std::to_string(constants.size()) +
                                           " entries, expected " + std::to_string(n * n * n));
  for (const auto& s : constants)
    if (!(s.field() == field_)) throw Error(ErrorKind::FieldMismatch, "structure constant field");
  constants_ = std::move(constants);
}

LieSuperalgebra LieSuperalgebra::with_zero_table(std::string name, FieldSpec field,
                                                 std::vector<std::string> even_names,
                                                 std::vector<std::string> odd_names) {
  const std::size_t n = even_names.size() + odd_names.size();
  return LieSuperalgebra(std::move(name), field, std::move(even_names), std::move(odd_names),
                         zero_vector(field, n * n * n));
}

std::optional<std::size_t> LieSuperalgebra::index_of(const std::string& basis_name) const {
  auto it = std::find(names_.begin(), names_.end(), basis_name);
  if (it == names_.end()) return std::nullopt;
  return static_cast<std::size_t>(it - names_.begin());
}

void LieSuperalgebra::set_constant(std::size_t i, std::size_t j, std::size_t k, Scalar value) {
  if (!(value.field() == field_)) throw Error(ErrorKind::FieldMismatch, "set_constant");
  constants_.at((i * dim() + j) * dim() + k) = std::move(value);
}

void LieSuperalgebra::set_bracket(std::size_t i, std::size_t j, std::span<const Scalar> v) {
  if (v.size() != dim()) throw Error(ErrorKind::ShapeError, "set_bracket: wrong length");
  const bool flip = parity_bit(i) & parity_bit(j);
  for (std::size_t k = 0; k < dim(); ++k) {
    set_constant(i, j, k, v[k]);
    set_constant(j, i, k, flip ? v[k] : -v[k]);
  }
}

Vector LieSuperalgebra::bracket_basis(std::size_t i, std::size_t j) const {
  const std::size_t n = dim();
  auto first = constants_.begin() + static_cast<std::ptrdiff_t>((i * n + j) * n);
  return Vector(first, first + static_cast<std::ptrdiff_t>(n));
}

Vector LieSuperalgebra::bracket(std::span<const Scalar> x, std::span<const Scalar> y) const {
  const std::size_t n = dim();
  if (x.size() != n || y.size() != n)
    throw Error(ErrorKind::AlgebraMismatch, "element length does not match " + name_);
  Vector out = zero();
  for (std::size_t i = 0; i < n; ++i) {
    if (x[i].is_zero()) continue;
    for (std::size_t j = 0; j < n; ++j) {
      if (y[j].is_zero()) continue;
      const Scalar xy = x[i] * y[j];
      for (std::size_t k = 0; k < n; ++k) out[k].add_product(xy, constant(i, j, k));
    }
  }
  return out;
}

// -- structure --------------------------------------------------------------

namespace {

// [e_i, v] for a coordinate vector v.
Vector left_bracket(const LieSuperalgebra& L, std::size_t i, std::span<const Scalar> v) {
  const std::size_t n = L.dim();
  Vector out = L.zero();
  for (std::size_t m = 0; m < n; ++m) {
    if (v[m].is_zero()) continue;
    for (std::size_t k = 0; k < n; ++k) out[k].add_product(v[m], L.constant(i, m, k));
  }
  return out;
}

}  // namespace

ValidationReport validate_structure(const LieSuperalgebra& L) {
  const std::size_t n = L.dim();
  ValidationReport report;
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = 0; j < n; ++j)
      for (std::size_t k = 0; k < n; ++k)
        if (!L.constant(i, j, k).is_zero() &&
            L.parity_bit(k) != (L.parity_bit(i) ^ L.parity_bit(j)))
          report.violations.push_back({AxiomKind::Parity, i, j, k});

  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = i; j < n; ++j) {
      const bool flip = L.parity_bit(i) & L.parity_bit(j);
      for (std::size_t k = 0; k < n; ++k) {
        Scalar s = L.constant(i, j, k);
        if (flip)
          s -= L.constant(j, i, k);
        else
          s += L.constant(j, i, k);
        if (!s.is_zero()) report.violations.push_back({AxiomKind::SkewSymmetry, i, j, k});
      }
    }

  std::vector<std::vector<AxiomViolation>> per_i(n);
#pragma omp parallel for schedule(dynamic) if (n >= 6)
  for (std::size_t i = 0; i < n; ++i) {
    for (std::size_t j = 0; j < n; ++j) {
      const Vector eij = L.bracket_basis(i, j);
      const int sign = sign_of(L.parity_bit(i), L.parity_bit(j));
      for (std::size_t k = 0; k < n; ++k) {
        // [e_i,[e_j,e_k]] - [[e_i,e_j],e_k] - (-1)^{|i||j|}[e_j,[e_i,e_k]]
        Vector lhs = left_bracket(L, i, L.bracket_basis(j, k));
        Vector mid = L.zero();
        for (std::size_t m = 0; m < n; ++m) {
          if (eij[m].is_zero()) continue;
          for (std::size_t t = 0; t < n; ++t) mid[t].add_product(eij[m], L.constant(m, k, t));
        }
        Vector last = left_bracket(L, j, L.bracket_basis(i, k));
        bool ok = true;
        for (std::size_t t = 0; t < n; ++t) {
          Scalar r = lhs[t] - mid[t];
          if (sign > 0)
            r -= last[t];
          else
            r += last[t];
          if (!r.is_zero()) {
            ok = false;
            break;
          }
        }
        if (!ok) per_i[i].push_back({AxiomKind::Jacobi, i, j, k});
      }
    }
  }
  for (auto& v : per_i) report.violations.insert(report.violations.end(), v.begin(), v.end());
  return report;
}

LinearMap ad(const LieSuperalgebra& L, std::span<const Scalar> x) {
  if (x.size() != L.dim()) throw Error(ErrorKind::AlgebraMismatch, "ad: element length");
  const auto ep = parity_of(L.dims(), x);
  if (ep == ElementParity::Mixed)
    throw Error(ErrorKind::MixedParity, "ad of an inhomogeneous element");
  std::vector<Vector> cols;
  for (std::size_t j = 0; j < L.dim(); ++j) cols.push_back(L.bracket(x, L.basis_vector(j)));
  return LinearMap(L.dims(), L.dims(), ep == ElementParity::Odd ? Parity::Odd : Parity::Even,
                   Matrix::from_columns(L.field(), L.dim(), cols));
}

LinearMap ad_basis(const LieSuperalgebra& L, std::size_t i) {
  return ad(L, L.basis_vector(i));
}

Subspace derived_subalgebra(const LieSuperalgebra& L) {
  std::vector<Vector> products;
  for (std::size_t i = 0; i < L.dim(); ++i)
    for (std::size_t j = 0; j < L.dim(); ++j) products.push_back(L.bracket_basis(i, j));
  return Subspace::span(L.field(), L.dim(), products);
}

bool is_perfect(const LieSuperalgebra& L) { return derived_subalgebra(L).is_full(); }

Subspace center(const LieSuperalgebra& L) {
  const std::size_t n = L.dim();
  // Row (j, t): sum_i x_i c(i, j, t) = 0.
  Matrix system(L.field(), n * n, n);
  for (std::size_t j = 0; j < n; ++j)
    for (std::size_t t = 0; t < n; ++t)
      for (std::size_t i = 0; i < n; ++i) system.at(j * n + t, i) = L.constant(i, j, t);
  return kernel(system);
}

Subspace centralizer(const LieSuperalgebra& L, const Subspace& S) {
  const std::size_t n = L.dim();
  if (S.ambient_dim() != n) throw Error(ErrorKind::AmbientMismatch, "centralizer");
  Matrix system(L.field(), S.dim() * n, n);
  for (std::size_t s = 0; s < S.dim(); ++s) {
    const Vector v = S.vector(s);
    for (std::size_t i = 0; i < n; ++i) {
      const Vector col = L.bracket(L.basis_vector(i), v);
      for (std::size_t t = 0; t < n; ++t) system.at(s * n + t, i) = col[t];
    }
  }
  return kernel(system);
}

Subspace bracket_of(const LieSuperalgebra& L, const Subspace& U, const Subspace& V) {
  std::vector<Vector> products;
  const auto us = U.vectors(), vs = V.vectors();
  for (const auto& u : us)
    for (const auto& v : vs) products.push_back(L.bracket(u, v));
  return Subspace::span(L.field(), L.dim(), products);
}

Subspace enveloping_closure(const LieSuperalgebra& L, const Subspace& S) {
  if (S.ambient_dim() != L.dim()) throw Error(ErrorKind::AmbientMismatch, "enveloping_closure");
  Subspace current = S;
  for (std::size_t step = 0; step <= L.dim(); ++step) {
    Subspace next = current.sum(bracket_of(L, current, current));
    if (next.dim() == current.dim()) return current;
    current = std::move(next);
  }
  return current;
}

bool is_subalgebra(const LieSuperalgebra& L, const Subspace& U) {
  return U.contains(bracket_of(L, U, U));
}

bool is_ideal(const LieSuperalgebra& L, const Subspace& U) {
  if (U.ambient_dim() != L.dim()) throw Error(ErrorKind::AmbientMismatch, "is_ideal");
  for (std::size_t a = 0; a < U.dim(); ++a) {
    const Vector u = U.vector(a);
    for (std::size_t i = 0; i < L.dim(); ++i)
      if (!U.contains(L.bracket(L.basis_vector(i), u))) return false;
  }
  return true;
}

bool is_graded(const LieSuperalgebra& L, const Subspace& U) {
  for (std::size_t a = 0; a < U.dim(); ++a)
    if (parity_of(L.dims(), U.basis().row(a)) == ElementParity::Mixed) return false;
  return true;
}

LieSuperalgebra induced_subalgebra(const LieSuperalgebra& L, const Subspace& U,
                                   std::string name) {
  if (U.ambient_dim() != L.dim()) throw Error(ErrorKind::AmbientMismatch, "induced_subalgebra");
  if (!is_graded(L, U)) throw Error(ErrorKind::NotGraded, "subspace has no parity-pure basis");
  const std::size_t m = U.dim();
  std::vector<std::string> even, odd;
  std::set<std::string> used;
  for (std::size_t a = 0; a < m; ++a) {
    const auto row = U.basis().row(a);
    std::string label = "u" + std::to_string(a);
    std::size_t support = 0, last = 0;
    for (std::size_t k = 0; k < row.size(); ++k)
      if (!row[k].is_zero()) ++support, last = k;
    if (support == 1 && row[last].is_one()) label = L.basis_names()[last];
    while (!used.insert(label).second) label += "'";
    (parity_of(L.dims(), row) == ElementParity::Odd ? odd : even).push_back(label);
  }
  auto out = LieSuperalgebra::with_zero_table(name.empty() ? L.name() + "/sub" : std::move(name),
                                              L.field(), even, odd);
  for (std::size_t a = 0; a < m; ++a)
    for (std::size_t b = 0; b < m; ++b) {
      auto coords = U.coordinates(L.bracket(U.basis().row(a), U.basis().row(b)));
      if (!coords) throw Error(ErrorKind::NotClosed, "subspace is not bracket-closed");
      for (std::size_t c = 0; c < m; ++c) out.set_constant(a, b, c, (*coords)[c]);
    }
  return out;
}

DirectSum direct_sum(const LieSuperalgebra& first, const LieSuperalgebra& second) {
  if (!(first.field() == second.field()))
    throw Error(ErrorKind::FieldMismatch, "direct_sum of algebras over different fields");
  const auto& n1 = first.dims();
  const auto& n2 = second.dims();
  std::vector<std::size_t> idx1(n1.total()), idx2(n2.total());
  for (std::size_t i = 0; i < n1.even; ++i) idx1[i] = i;
  for (std::size_t i = 0; i < n2.even; ++i) idx2[i] = n1.even + i;
  const std::size_t odd_start = n1.even + n2.even;
  for (std::size_t i = 0; i < n1.odd; ++i) idx1[n1.even + i] = odd_start + i;
  for (std::size_t i = 0; i < n2.odd; ++i) idx2[n2.even + i] = odd_start + n1.odd + i;

  std::set<std::string> names1(first.basis_names().begin(), first.basis_names().end());
  bool collide = false;
  for (const auto& n : second.basis_names()) collide = collide || names1.count(n);
  auto label = [&](const std::string& n, const char* suffix) {
    return collide ? n + suffix : n;
  };
  std::vector<std::string> even, odd;
  for (std::size_t i = 0; i < n1.even; ++i) even.push_back(label(first.basis_names()[i], "_1"));
  for (std::size_t i = 0; i < n2.even; ++i) even.push_back(label(second.basis_names()[i], "_2"));
  for (std::size_t i = n1.even; i < n1.total(); ++i)
    odd.push_back(label(first.basis_names()[i], "_1"));
  for (std::size_t i = n2.even; i < n2.total(); ++i)
    odd.push_back(label(second.basis_names()[i], "_2"));

  auto sum = LieSuperalgebra::with_zero_table(first.name() + "+" + second.name(), first.field(),
                                              even, odd);
  auto copy = [&](const LieSuperalgebra& part, const std::vector<std::size_t>& idx) {
    for (std::size_t i = 0; i < part.dim(); ++i)
      for (std::size_t j = 0; j < part.dim(); ++j)
        for (std::size_t k = 0; k < part.dim(); ++k)
          if (!part.constant(i, j, k).is_zero())
            sum.set_constant(idx[i], idx[j], idx[k], part.constant(i, j, k));
  };
  copy(first, idx1);
  copy(second, idx2);

  auto embed = [&](const LieSuperalgebra& part, const std::vector<std::size_t>& idx) {
    Matrix m(sum.field(), sum.dim(), part.dim());
    for (std::size_t i = 0; i < part.dim(); ++i) m.at(idx[i], i) = Scalar::one(sum.field());
    return LinearMap(part.dims(), sum.dims(), Parity::Even, std::move(m));
  };
  DirectSum out{sum, embed(first, idx1), embed(second, idx2)};
  return out;
}

Subspace map_image(const LinearMap& f) { return image(f.matrix()); }

}  // namespace superkit
