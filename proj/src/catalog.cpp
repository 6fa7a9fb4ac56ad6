#include "superkit/catalog.hpp"

#include <algorithm>

#include "superkit/kernels.hpp"

namespace superkit {

SuperMatrix::SuperMatrix(GradedDims blocks, Matrix entries)
    : blocks_(blocks), entries_(std::move(entries)) {
  if (entries_.rows() != blocks_.total() || entries_.cols() != blocks_.total())
    throw Error(ErrorKind::ShapeError, "supermatrix entries do not match block sizes");
}

SuperMatrix SuperMatrix::unit(const FieldSpec& field, GradedDims blocks, std::size_t row,
                              std::size_t col) {
  Matrix m(field, blocks.total(), blocks.total());
  m.at(row, col) = Scalar::one(field);
  return SuperMatrix(blocks, std::move(m));
}

SuperMatrix SuperMatrix::from_ints(const FieldSpec& field, GradedDims blocks,
                                   const std::vector<std::vector<long>>& rows) {
  return SuperMatrix(blocks, Matrix::from_ints(field, rows));
}

ElementParity SuperMatrix::parity() const {
  bool even = false, odd = false;
  for (std::size_t r = 0; r < entries_.rows(); ++r)
    for (std::size_t c = 0; c < entries_.cols(); ++c)
      if (!entries_.at(r, c).is_zero())
        (blocks_.bit(r) == blocks_.bit(c) ? even : odd) = true;
  if (even && odd) return ElementParity::Mixed;
  return odd ? ElementParity::Odd : ElementParity::Even;
}

SuperMatrix supercommutator(const SuperMatrix& a, const SuperMatrix& b) {
  Matrix ab = a.entries() * b.entries();
  const Matrix ba = b.entries() * a.entries();
  if (a.parity() == ElementParity::Odd && b.parity() == ElementParity::Odd)
    ab += ba;
  else
    ab -= ba;
  return SuperMatrix(a.blocks(), std::move(ab));
}

LieSuperalgebra from_supermatrices(std::string name, const std::vector<SuperMatrix>& generators,
                                   const std::vector<std::string>& names) {
  if (generators.empty()) throw Error(ErrorKind::BadParams, "no generators");
  const FieldSpec field = generators.front().entries().field();
  const GradedDims blocks = generators.front().blocks();
  const std::size_t flat = blocks.total() * blocks.total();

  std::vector<SuperMatrix> elems;
  std::vector<std::string> labels;
  kernels::RowReducer span(field, flat, kernels::Exec::Serial);
  auto try_add = [&](const SuperMatrix& m, std::string label) {
    if (m.parity() == ElementParity::Mixed)
      throw Error(ErrorKind::MixedParity, "supermatrix '" + label + "' is not homogeneous");
    const std::size_t before = span.rank();
    span.absorb(std::vector<Vector>{m.entries().data()});
    if (span.rank() == before) return false;
    elems.push_back(m);
    labels.push_back(std::move(label));
    return true;
  };
  for (std::size_t g = 0; g < generators.size(); ++g) {
    if (!(generators[g].blocks() == blocks))
      throw Error(ErrorKind::ShapeError, "generators use different block sizes");
    std::string label = g < names.size() ? names[g] : "g" + std::to_string(g);
    if (!try_add(generators[g], label))
      throw Error(ErrorKind::DependentGenerators, "generator '" + label + "' is dependent");
  }
  std::size_t extra = 0;
  for (std::size_t a = 0; a < elems.size(); ++a)
    for (std::size_t b = 0; b <= a; ++b)
      if (try_add(supercommutator(elems[a], elems[b]), "c" + std::to_string(extra)))
        ++extra;

  std::vector<std::size_t> order(elems.size());
  for (std::size_t i = 0; i < order.size(); ++i) order[i] = i;
  std::stable_partition(order.begin(), order.end(), [&](std::size_t i) {
    return elems[i].parity() != ElementParity::Odd;
  });
  std::vector<std::string> even, odd;
  std::vector<Vector> columns;
  for (auto i : order) {
    (elems[i].parity() == ElementParity::Odd ? odd : even).push_back(labels[i]);
    columns.push_back(elems[i].entries().data());
  }
  const Matrix B = Matrix::from_columns(field, flat, columns);
  auto L = LieSuperalgebra::with_zero_table(std::move(name), field, even, odd);
  for (std::size_t a = 0; a < order.size(); ++a)
    for (std::size_t b = 0; b < order.size(); ++b) {
      const auto prod = supercommutator(elems[order[a]], elems[order[b]]);
      const auto coeffs = solve(B, prod.entries().data());
      if (!coeffs) throw Error(ErrorKind::NotClosed, "supercommutator closure failed");
      for (std::size_t c = 0; c < order.size(); ++c) L.set_constant(a, b, c, (*coeffs)[c]);
    }
  return L;
}

namespace {

void require_valid(const LieSuperalgebra& L) {
  if (!validate_structure(L).valid())
    throw Error(ErrorKind::AxiomViolation, "catalog algebra " + L.name() + " fails the axioms");
}

void reject_char2(const FieldSpec& field, const std::string& name) {
  if (field.characteristic() == 2)
    throw Error(ErrorKind::BadParams,
                name + " over F2 degenerates: [h,e] = 2e vanishes, so the algebra is no longer "
                       "the intended simple one");
}

Vector scaled_basis(const LieSuperalgebra& L, std::size_t i, long c) {
  Vector v = L.zero();
  v[i] = Scalar(L.field(), c);
  return v;
}

}  // namespace

LieSuperalgebra abelian(const FieldSpec& field, std::size_t even, std::size_t odd) {
  std::vector<std::string> en, on;
  for (std::size_t i = 0; i < even; ++i) en.push_back("a" + std::to_string(i + 1));
  for (std::size_t i = 0; i < odd; ++i) on.push_back("b" + std::to_string(i + 1));
  return LieSuperalgebra::with_zero_table(
      "abelian(" + std::to_string(even) + "|" + std::to_string(odd) + ")", field, en, on);
}

LieSuperalgebra aff2(const FieldSpec& field) {
  auto L = LieSuperalgebra::with_zero_table("aff2", field, {"e1", "e2"}, {});
  L.set_bracket(0, 1, scaled_basis(L, 1, 1));
  require_valid(L);
  return L;
}

LieSuperalgebra sl2(const FieldSpec& field) {
  reject_char2(field, "sl2");
  auto L = LieSuperalgebra::with_zero_table("sl2", field, {"h", "e", "f"}, {});
  L.set_bracket(0, 1, scaled_basis(L, 1, 2));
  L.set_bracket(0, 2, scaled_basis(L, 2, -2));
  L.set_bracket(1, 2, scaled_basis(L, 0, 1));
  require_valid(L);
  return L;
}

LieSuperalgebra gl11(const FieldSpec& field) {
  const GradedDims blocks{1, 1};
  auto L = from_supermatrices("gl(1|1)",
                              {SuperMatrix::unit(field, blocks, 0, 0),
                               SuperMatrix::unit(field, blocks, 1, 1),
                               SuperMatrix::unit(field, blocks, 0, 1),
                               SuperMatrix::unit(field, blocks, 1, 0)},
                              {"E11", "E22", "E12", "E21"});
  require_valid(L);
  return L;
}

LieSuperalgebra osp12(const FieldSpec& field) {
  reject_char2(field, "osp(1|2)");
  // Row/column 0 is the even coordinate, 1 and 2 the odd ones; sp(2)
  // acts on the odd block.
  const GradedDims blocks{1, 2};
  auto L = from_supermatrices(
      "osp(1|2)",
      {SuperMatrix::from_ints(field, blocks, {{0, 0, 0}, {0, 1, 0}, {0, 0, -1}}),
       SuperMatrix::from_ints(field, blocks, {{0, 0, 0}, {0, 0, 1}, {0, 0, 0}}),
       SuperMatrix::from_ints(field, blocks, {{0, 0, 0}, {0, 0, 0}, {0, 1, 0}}),
       SuperMatrix::from_ints(field, blocks, {{0, 0, 1}, {1, 0, 0}, {0, 0, 0}}),
       SuperMatrix::from_ints(field, blocks, {{0, 1, 0}, {0, 0, 0}, {-1, 0, 0}})},
      {"h", "e", "f", "q1", "q2"});
  require_valid(L);
  return L;
}

LieSuperalgebra heisenberg(const FieldSpec& field, std::size_t n, std::size_t m) {
  std::vector<std::string> even, odd;
  for (std::size_t i = 0; i < n; ++i) even.push_back("x" + std::to_string(i + 1));
  for (std::size_t i = 0; i < n; ++i) even.push_back("y" + std::to_string(i + 1));
  even.push_back("z");
  for (std::size_t j = 0; j < m; ++j) odd.push_back("t" + std::to_string(j + 1));
  auto L = LieSuperalgebra::with_zero_table(
      "heisenberg(" + std::to_string(n) + "|" + std::to_string(m) + ")", field, even, odd);
  const std::size_t z = 2 * n;
  for (std::size_t i = 0; i < n; ++i) L.set_bracket(i, n + i, scaled_basis(L, z, 1));
  for (std::size_t j = 0; j < m; ++j) L.set_bracket(z + 1 + j, z + 1 + j, scaled_basis(L, z, 1));
  require_valid(L);
  return L;
}

std::vector<std::string> builtin_names() {
  return {"abelian", "aff2", "sl2", "gl11", "osp12", "heisenberg", "char2_nonabelian",
          "sl2+sl2", "sl2+osp12"};
}

LieSuperalgebra builtin(const std::string& name, const BuiltinParams& params) {
  const FieldSpec field = params.field.value_or(FieldSpec::rationals());
  if (name == "abelian") return abelian(field, params.even, params.odd);
  if (name == "aff2") return aff2(field);
  if (name == "sl2") return sl2(field);
  if (name == "gl11" || name == "gl(1|1)") return gl11(field);
  if (name == "osp12" || name == "osp(1|2)") return osp12(field);
  if (name == "heisenberg") {
    if (params.even == 0 && params.odd == 0)
      throw Error(ErrorKind::BadParams, "heisenberg needs n or m > 0");
    return heisenberg(field, params.even, params.odd);
  }
  if (name == "char2_nonabelian") {
    if (params.field && params.field->characteristic() != 2)
      throw Error(ErrorKind::BadParams, "char2_nonabelian lives over F2");
    auto L = aff2(FieldSpec::prime(2));
    L.rename("char2_nonabelian");
    return L;
  }
  if (name == "sl2+sl2") return direct_sum(sl2(field), sl2(field)).algebra;
  if (name == "sl2+osp12") return direct_sum(sl2(field), osp12(field)).algebra;
  throw Error(ErrorKind::UnknownName, "no builtin algebra named '" + name + "'");
}

}  // namespace superkit
