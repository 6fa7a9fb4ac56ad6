#include "superkit/matrix.hpp"

#include <sstream>

#include "superkit/kernels.hpp"

namespace superkit {

Vector zero_vector(const FieldSpec& field, std::size_t n) {
  return Vector(n, Scalar::zero(field));
}

Vector unit_vector(const FieldSpec& field, std::size_t n, std::size_t i) {
  Vector v = zero_vector(field, n);
  v.at(i) = Scalar::one(field);
  return v;
}

bool is_zero(std::span<const Scalar> v) {
  for (const auto& s : v)
    if (!s.is_zero()) return false;
  return true;
}

Matrix::Matrix(const FieldSpec& field, std::size_t rows, std::size_t cols)
    : field_(field), rows_(rows), cols_(cols), data_(rows * cols, Scalar::zero(field)) {}

Matrix Matrix::identity(const FieldSpec& field, std::size_t n) {
  Matrix m(field, n, n);
  for (std::size_t i = 0; i < n; ++i) m.at(i, i) = Scalar::one(field);
  return m;
}

Matrix Matrix::from_rows(const FieldSpec& field, std::size_t cols,
                         const std::vector<Vector>& rows) {
  Matrix m(field, rows.size(), cols);
  for (std::size_t r = 0; r < rows.size(); ++r) {
    if (rows[r].size() != cols)
      throw Error(ErrorKind::ShapeError, "row length " + std::to_string(rows[r].size()) +
                                             " != " + std::to_string(cols));
    for (std::size_t c = 0; c < cols; ++c) m.at(r, c) = rows[r][c];
  }
  return m;
}

Matrix Matrix::from_columns(const FieldSpec& field, std::size_t rows,
                            const std::vector<Vector>& columns) {
  return from_rows(field, rows, columns).transpose();
}

Matrix Matrix::from_ints(const FieldSpec& field, const std::vector<std::vector<long>>& rows) {
  const std::size_t cols = rows.empty() ? 0 : rows.front().size();
  Matrix m(field, rows.size(), cols);
  for (std::size_t r = 0; r < rows.size(); ++r) {
    if (rows[r].size() != cols) throw Error(ErrorKind::ShapeError, "ragged integer table");
    for (std::size_t c = 0; c < cols; ++c) m.at(r, c) = Scalar(field, rows[r][c]);
  }
  return m;
}

Matrix Matrix::from_flat(const FieldSpec& field, std::size_t rows, std::size_t cols,
                         Vector flat) {
  if (flat.size() != rows * cols) throw Error(ErrorKind::ShapeError, "flat size mismatch");
  Matrix m;
  m.field_ = field;
  m.rows_ = rows;
  m.cols_ = cols;
  m.data_ = std::move(flat);
  return m;
}

Vector Matrix::column(std::size_t c) const {
  Vector v;
  v.reserve(rows_);
  for (std::size_t r = 0; r < rows_; ++r) v.push_back(at(r, c));
  return v;
}

Vector Matrix::row_vector(std::size_t r) const {
  auto s = row(r);
  return Vector(s.begin(), s.end());
}

bool Matrix::is_zero() const { return superkit::is_zero(data_); }

Matrix Matrix::transpose() const {
  Matrix t(field_, cols_, rows_);
  for (std::size_t r = 0; r < rows_; ++r)
    for (std::size_t c = 0; c < cols_; ++c) t.at(c, r) = at(r, c);
  return t;
}

void Matrix::check_shape(const Matrix& rhs) const {
  if (!(field_ == rhs.field_))
    throw Error(ErrorKind::FieldMismatch, "matrix fields differ");
  if (rows_ != rhs.rows_ || cols_ != rhs.cols_)
    throw Error(ErrorKind::ShapeError, "matrix shapes differ");
}

Matrix& Matrix::operator+=(const Matrix& rhs) {
  check_shape(rhs);
  for (std::size_t i = 0; i < data_.size(); ++i) data_[i] += rhs.data_[i];
  return *this;
}

Matrix& Matrix::operator-=(const Matrix& rhs) {
  check_shape(rhs);
  for (std::size_t i = 0; i < data_.size(); ++i) data_[i] -= rhs.data_[i];
  return *this;
}

Matrix& Matrix::operator*=(const Scalar& s) {
  for (auto& x : data_) x *= s;
  return *this;
}

Matrix operator*(const Matrix& a, const Matrix& b) { return kernels::multiply(a, b); }

Vector operator*(const Matrix& a, std::span<const Scalar> v) {
  if (v.size() != a.cols()) throw Error(ErrorKind::ShapeError, "matrix-vector size mismatch");
  Vector out = zero_vector(a.field(), a.rows());
  for (std::size_t r = 0; r < a.rows(); ++r)
    for (std::size_t c = 0; c < a.cols(); ++c) out[r].add_product(a.at(r, c), v[c]);
  return out;
}

bool operator==(const Matrix& a, const Matrix& b) {
  return a.field_ == b.field_ && a.rows_ == b.rows_ && a.cols_ == b.cols_ && a.data_ == b.data_;
}

std::string Matrix::to_string() const {
  std::ostringstream os;
  os << "[";
  for (std::size_t r = 0; r < rows_; ++r) {
    os << (r ? ", [" : "[");
    for (std::size_t c = 0; c < cols_; ++c) os << (c ? ", " : "") << at(r, c);
    os << "]";
  }
  os << "]";
  return os.str();
}

RrefResult rref(const Matrix& m) { return kernels::rref(m); }

std::size_t rank(const Matrix& m) { return rref(m).rank; }

Subspace kernel(const Matrix& m) {
  auto r = rref(m);
  return Subspace::span(m.field(), m.cols(), kernels::nullspace_from_rref(r, m.cols()));
}

Subspace image(const Matrix& m) {
  auto r = rref(m.transpose());
  Matrix basis(m.field(), r.rank, m.rows());
  for (std::size_t i = 0; i < r.rank; ++i)
    for (std::size_t c = 0; c < m.rows(); ++c) basis.at(i, c) = r.reduced.at(i, c);
  return Subspace::from_rref(std::move(basis), std::move(r.pivots));
}

std::optional<Vector> solve(const Matrix& m, std::span<const Scalar> b) {
  if (b.size() != m.rows()) throw Error(ErrorKind::ShapeError, "solve: rhs length mismatch");
  Matrix aug(m.field(), m.rows(), m.cols() + 1);
  for (std::size_t r = 0; r < m.rows(); ++r) {
    for (std::size_t c = 0; c < m.cols(); ++c) aug.at(r, c) = m.at(r, c);
    aug.at(r, m.cols()) = b[r];
  }
  auto red = rref(aug);
  Vector x = zero_vector(m.field(), m.cols());
  for (std::size_t i = 0; i < red.rank; ++i) {
    const std::size_t p = red.pivots[i];
    if (p == m.cols()) return std::nullopt;
    x[p] = red.reduced.at(i, m.cols());
  }
  return x;
}

Matrix inverse(const Matrix& m) {
  if (m.rows() != m.cols()) throw Error(ErrorKind::ShapeError, "inverse of non-square matrix");
  const std::size_t n = m.rows();
  Matrix aug(m.field(), n, 2 * n);
  for (std::size_t r = 0; r < n; ++r) {
    for (std::size_t c = 0; c < n; ++c) aug.at(r, c) = m.at(r, c);
    aug.at(r, n + r) = Scalar::one(m.field());
  }
  auto red = rref(aug);
  if (red.rank < n || (n > 0 && red.pivots[n - 1] != n - 1))
    throw Error(ErrorKind::DivisionByZero, "matrix is singular");
  Matrix inv(m.field(), n, n);
  for (std::size_t r = 0; r < n; ++r)
    for (std::size_t c = 0; c < n; ++c) inv.at(r, c) = red.reduced.at(r, n + c);
  return inv;
}

// -- Subspace ---------------------------------------------------------------

Subspace Subspace::zero(const FieldSpec& field, std::size_t ambient) {
  return from_rref(Matrix(field, 0, ambient), {});
}

Subspace Subspace::full(const FieldSpec& field, std::size_t ambient) {
  std::vector<std::size_t> pivots(ambient);
  for (std::size_t i = 0; i < ambient; ++i) pivots[i] = i;
  return from_rref(Matrix::identity(field, ambient), std::move(pivots));
}

Subspace Subspace::span(const FieldSpec& field, std::size_t ambient,
                        const std::vector<Vector>& vectors) {
  kernels::RowReducer reducer(field, ambient);
  reducer.absorb(vectors);
  auto r = reducer.result();
  return from_rref(std::move(r.reduced), std::move(r.pivots));
}

Subspace Subspace::from_rref(Matrix echelon, std::vector<std::size_t> pivots) {
  Subspace s;
  s.basis_ = std::move(echelon);
  s.pivots_ = std::move(pivots);
  return s;
}

std::vector<Vector> Subspace::vectors() const {
  std::vector<Vector> out;
  for (std::size_t i = 0; i < dim(); ++i) out.push_back(vector(i));
  return out;
}

std::optional<Vector> Subspace::coordinates(std::span<const Scalar> v) const {
  if (v.size() != ambient_dim())
    throw Error(ErrorKind::AmbientMismatch, "vector length " + std::to_string(v.size()) +
                                                " in ambient " + std::to_string(ambient_dim()));
  Vector coeffs;
  coeffs.reserve(dim());
  Vector residual(v.begin(), v.end());
  for (std::size_t i = 0; i < dim(); ++i) {
    Scalar c = residual[pivots_[i]];
    if (!c.is_zero()) {
      auto row = basis_.row(i);
      for (std::size_t k = 0; k < residual.size(); ++k) residual[k] -= c * row[k];
    }
    coeffs.push_back(std::move(c));
  }
  if (!superkit::is_zero(residual)) return std::nullopt;
  return coeffs;
}

bool Subspace::contains(std::span<const Scalar> v) const { return coordinates(v).has_value(); }

bool Subspace::contains(const Subspace& other) const {
  check_ambient(other);
  for (std::size_t i = 0; i < other.dim(); ++i)
    if (!contains(other.basis_.row(i))) return false;
  return true;
}

void Subspace::check_ambient(const Subspace& other) const {
  if (ambient_dim() != other.ambient_dim())
    throw Error(ErrorKind::AmbientMismatch, std::to_string(ambient_dim()) + " vs " +
                                                std::to_string(other.ambient_dim()));
  if (!(field() == other.field())) throw Error(ErrorKind::FieldMismatch, "subspace fields differ");
}

Subspace Subspace::sum(const Subspace& other) const {
  check_ambient(other);
  auto all = vectors();
  for (auto& v : other.vectors()) all.push_back(std::move(v));
  return span(field(), ambient_dim(), all);
}

Subspace Subspace::intersect(const Subspace& other) const {
  check_ambient(other);
  // Solve sum a_i u_i - sum b_j v_j = 0; each solution gives a.u in both.
  const std::size_t du = dim(), dv = other.dim(), n = ambient_dim();
  Matrix system(field(), n, du + dv);
  for (std::size_t i = 0; i < du; ++i)
    for (std::size_t k = 0; k < n; ++k) system.at(k, i) = basis_.at(i, k);
  for (std::size_t j = 0; j < dv; ++j)
    for (std::size_t k = 0; k < n; ++k) system.at(k, du + j) = -other.basis_.at(j, k);
  const Subspace coeffs = kernel(system);
  std::vector<Vector> common;
  for (std::size_t s = 0; s < coeffs.dim(); ++s) {
    Vector w = zero_vector(field(), n);
    for (std::size_t i = 0; i < du; ++i) {
      const Scalar& a = coeffs.basis_.at(s, i);
      if (a.is_zero()) continue;
      for (std::size_t k = 0; k < n; ++k) w[k].add_product(a, basis_.at(i, k));
    }
    common.push_back(std::move(w));
  }
  return span(field(), n, common);
}

}  // namespace superkit
