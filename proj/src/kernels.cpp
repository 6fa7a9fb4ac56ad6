#include "superkit/kernels.hpp"

#include <algorithm>

namespace superkit::kernels {

namespace {

// Below this many scalar updates per elimination step the thread fan-out
// costs more than it saves.
constexpr std::size_t kParallelWork = 4096;

bool go_parallel(Exec exec, std::size_t work) {
  return exec == Exec::Parallel && work >= kParallelWork;
}

void axpy_row(std::span<Scalar> target, const Scalar& factor, std::span<const Scalar> source,
              std::size_t from) {
  for (std::size_t c = from; c < target.size(); ++c)
    if (!source[c].is_zero()) target[c] -= factor * source[c];
}

}  // namespace

RrefResult rref(Matrix m, Exec exec) {
  const std::size_t rows = m.rows(), cols = m.cols();
  std::vector<std::size_t> pivots;
  std::size_t lead = 0;
  for (std::size_t col = 0; col < cols && lead < rows; ++col) {
    std::size_t pr = lead;
    while (pr < rows && m.at(pr, col).is_zero()) ++pr;
    if (pr == rows) continue;
    if (pr != lead)
      for (std::size_t c = 0; c < cols; ++c) std::swap(m.at(pr, c), m.at(lead, c));

    const Scalar inv = m.at(lead, col).inverse();
    for (std::size_t c = col; c < cols; ++c) m.at(lead, c) *= inv;

    const auto pivot_row = m.row(lead);
    const bool par = go_parallel(exec, rows * (cols - col));
#pragma omp parallel for schedule(static) if (par)
    for (std::size_t r = 0; r < rows; ++r) {
      if (r == lead || m.at(r, col).is_zero()) continue;
      const Scalar factor = m.at(r, col);
      axpy_row(m.row(r), factor, pivot_row, col);
    }
    pivots.push_back(col);
    ++lead;
  }
  RrefResult out;
  out.rank = pivots.size();
  out.pivots = std::move(pivots);
  out.reduced = std::move(m);
  return out;
}

Matrix multiply(const Matrix& a, const Matrix& b, Exec exec) {
  if (a.cols() != b.rows()) throw Error(ErrorKind::ShapeError, "multiply: inner dims differ");
  if (!(a.field() == b.field())) throw Error(ErrorKind::FieldMismatch, "multiply");
  Matrix out(a.field(), a.rows(), b.cols());
  const bool par = go_parallel(exec, a.rows() * a.cols() * b.cols());
#pragma omp parallel for schedule(static) if (par)
  for (std::size_t r = 0; r < a.rows(); ++r) {
    for (std::size_t k = 0; k < a.cols(); ++k) {
      const Scalar& x = a.at(r, k);
      if (x.is_zero()) continue;
      for (std::size_t c = 0; c < b.cols(); ++c) out.at(r, c).add_product(x, b.at(k, c));
    }
  }
  return out;
}

void RowReducer::reduce_against_basis(Vector& v) const {
  for (std::size_t i = 0; i < rows_.size(); ++i) {
    const Scalar& lead = v[pivots_[i]];
    if (lead.is_zero()) continue;
    const Scalar factor = lead;
    axpy_row(v, factor, rows_[i], pivots_[i]);
  }
}

void RowReducer::insert(Vector v) {
  reduce_against_basis(v);
  std::size_t p = 0;
  while (p < cols_ && v[p].is_zero()) ++p;
  if (p == cols_) return;
  const Scalar inv = v[p].inverse();
  for (std::size_t c = p; c < cols_; ++c) v[c] *= inv;
  for (auto& row : rows_) {
    if (row[p].is_zero()) continue;
    const Scalar factor = row[p];
    axpy_row(row, factor, v, p);
  }
  const auto pos = std::lower_bound(pivots_.begin(), pivots_.end(), p) - pivots_.begin();
  pivots_.insert(pivots_.begin() + pos, p);
  rows_.insert(rows_.begin() + pos, std::move(v));
}

void RowReducer::absorb(std::vector<Vector> rows) {
  if (full_rank() || rows.empty()) return;
  for (const auto& r : rows)
    if (r.size() != cols_) throw Error(ErrorKind::ShapeError, "RowReducer: row length mismatch");
  const bool par = go_parallel(exec_, rows.size() * cols_ * std::max<std::size_t>(1, rank()));
#pragma omp parallel for schedule(dynamic, 16) if (par)
  for (std::size_t i = 0; i < rows.size(); ++i) reduce_against_basis(rows[i]);
  for (auto& r : rows) {
    if (full_rank()) break;
    if (!is_zero(r)) insert(std::move(r));
  }
}

void RowReducer::absorb(const Matrix& block) {
  std::vector<Vector> rows;
  rows.reserve(block.rows());
  for (std::size_t r = 0; r < block.rows(); ++r) rows.push_back(block.row_vector(r));
  absorb(std::move(rows));
}

RrefResult RowReducer::result() const {
  RrefResult out;
  out.reduced = Matrix::from_rows(field_, cols_, rows_);
  out.pivots = pivots_;
  out.rank = rows_.size();
  return out;
}

std::vector<Vector> nullspace_from_rref(const RrefResult& r, std::size_t cols) {
  const FieldSpec& field = r.reduced.field();
  std::vector<bool> is_pivot(cols, false);
  for (auto p : r.pivots) is_pivot[p] = true;
  std::vector<Vector> out;
  for (std::size_t f = 0; f < cols; ++f) {
    if (is_pivot[f]) continue;
    Vector v = zero_vector(field, cols);
    v[f] = Scalar::one(field);
    for (std::size_t i = 0; i < r.rank; ++i) v[r.pivots[i]] = -r.reduced.at(i, f);
    out.push_back(std::move(v));
  }
  return out;
}

}  // namespace superkit::kernels
