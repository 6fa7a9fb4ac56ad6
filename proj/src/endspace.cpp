#include "superkit/endspace.hpp"

namespace superkit {

GradedEndSpace::GradedEndSpace(GradedDims dims, Subspace even, Subspace odd)
    : dims_(dims), even_(std::move(even)), odd_(std::move(odd)) {
  const std::size_t n = dims_.total();
  if (even_.ambient_dim() != n * n || odd_.ambient_dim() != n * n)
    throw Error(ErrorKind::AmbientMismatch, "endomorphism space ambient dimension");
}

GradedEndSpace GradedEndSpace::span(const FieldSpec& field, GradedDims dims,
                                    const std::vector<LinearMap>& maps) {
  std::vector<Vector> even, odd;
  for (const auto& m : maps) {
    if (!(m.domain() == dims) || !(m.codomain() == dims))
      throw Error(ErrorKind::ShapeError, "GradedEndSpace::span expects endomorphisms");
    (m.parity() == Parity::Even ? even : odd).push_back(m.matrix().data());
  }
  const std::size_t n2 = dims.total() * dims.total();
  return GradedEndSpace(dims, Subspace::span(field, n2, even), Subspace::span(field, n2, odd));
}

std::vector<LinearMap> GradedEndSpace::basis(Parity p) const {
  const Subspace& s = part(p);
  const std::size_t n = dims_.total();
  std::vector<LinearMap> out;
  for (std::size_t a = 0; a < s.dim(); ++a)
    out.emplace_back(dims_, dims_, p, Matrix::from_flat(s.field(), n, n, s.vector(a)));
  return out;
}

std::vector<LinearMap> GradedEndSpace::basis() const {
  auto out = basis(Parity::Even);
  for (auto& m : basis(Parity::Odd)) out.push_back(std::move(m));
  return out;
}

LinearMap GradedEndSpace::basis_map(std::size_t index) const {
  const std::size_t n = dims_.total();
  if (index < even_dim())
    return LinearMap(dims_, dims_, Parity::Even,
                     Matrix::from_flat(field(), n, n, even_.vector(index)));
  return LinearMap(dims_, dims_, Parity::Odd,
                   Matrix::from_flat(field(), n, n, odd_.vector(index - even_dim())));
}

std::optional<Vector> GradedEndSpace::coordinates(const LinearMap& m) const {
  if (!(m.domain() == dims_) || !(m.codomain() == dims_)) return std::nullopt;
  auto local = part(m.parity()).coordinates(m.matrix().data());
  if (!local) return std::nullopt;
  Vector out = zero_vector(field(), dim());
  const std::size_t offset = m.parity() == Parity::Even ? 0 : even_dim();
  for (std::size_t a = 0; a < local->size(); ++a) out[offset + a] = (*local)[a];
  return out;
}

bool GradedEndSpace::contains(const LinearMap& m) const { return coordinates(m).has_value(); }

bool GradedEndSpace::contains(const GradedEndSpace& other) const {
  return dims_ == other.dims_ && even_.contains(other.even_) && odd_.contains(other.odd_);
}

}  // namespace superkit
