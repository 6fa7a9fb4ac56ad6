#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include "doctest.h"

#include "superkit/catalog.hpp"
#include "superkit/io.hpp"

using namespace superkit;
using nlohmann::json;

namespace {

const FieldSpec Q = FieldSpec::rationals();
const FieldSpec F5 = FieldSpec::prime(5);

std::string doc(const std::string& field, const std::string& even, const std::string& odd,
                const std::string& brackets) {
  return R"({"format":"superkit-algebra/1","name":"t","field":)" + field + R"(,"even":)" + even +
         R"(,"odd":)" + odd + R"(,"brackets":)" + brackets + "}";
}

ErrorKind kind_of(const std::function<void()>& fn) {
  try {
    fn();
  } catch (const Error& e) {
    return e.kind();
  }
  FAIL("expected an exception");
  return ErrorKind::ParseError;
}

std::vector<LieSuperalgebra> catalog() {
  std::vector<LieSuperalgebra> out;
  for (const auto& name : builtin_names()) {
    BuiltinParams p;
    p.even = 1;
    p.odd = 2;
    out.push_back(builtin(name, p));
  }
  out.push_back(osp12(F5));
  out.push_back(builtin("abelian", {std::nullopt, 0, 0}));
  return out;
}

/// Plain matrix product, independent of the library's kernels.
std::vector<std::vector<long>> mul(const std::vector<std::vector<long>>& a,
                                   const std::vector<std::vector<long>>& b) {
  const std::size_t n = a.size();
  std::vector<std::vector<long>> c(n, std::vector<long>(n, 0));
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t k = 0; k < n; ++k)
      for (std::size_t j = 0; j < n; ++j) c[i][j] += a[i][k] * b[k][j];
  return c;
}

}  // namespace

TEST_CASE("loader completes skew partners") {
  const auto L = load_algebra(doc(R"({"kind":"Q"})", R"(["h","e","f"])", "[]",
                                  R"({"e,f":{"h":"1"},"h,e":{"e":"2"},"h,f":{"f":"-2"}})"));
  CHECK(L.constants() == sl2(Q).constants());
}

TEST_CASE("loader rejects conflicts, malformed input and axiom violations") {
  CHECK(kind_of([] {
          load_algebra(doc(R"({"kind":"Q"})", R"(["a","b","c"])", "[]",
                           R"({"a,b":{"c":"1"},"b,a":{"c":"1"}})"));
        }) == ErrorKind::SkewConflict);
  CHECK(kind_of([] { load_algebra("{not json"); }) == ErrorKind::ParseError);
  CHECK(kind_of([] {
          load_algebra(doc(R"({"kind":"Q"})", R"(["a"])", "[]", R"({"a,z":{"a":"1"}})"));
        }) == ErrorKind::ParseError);
  CHECK(kind_of([] {
          load_algebra(doc(R"({"kind":"Q"})", R"(["a","a"])", "[]", "{}"));
        }) == ErrorKind::ParseError);
  CHECK(kind_of([] {
          load_algebra(doc(R"({"kind":"Fp","p":6})", R"(["a"])", "[]", "{}"));
        }) == ErrorKind::ParseError);
  CHECK(kind_of([] {
          load_algebra(R"({"format":"other","name":"t","field":{"kind":"Q"},"even":[],"odd":[],"brackets":{}})");
        }) == ErrorKind::ParseError);
  // [x,y] = x, [x,z] = y, [y,z] = 0 breaks Jacobi.
  try {
    load_algebra(doc(R"({"kind":"Q"})", R"(["x","y","z"])", "[]",
                     R"({"x,y":{"x":"1"},"x,z":{"y":"1"}})"));
    FAIL("expected an axiom violation");
  } catch (const AxiomError& e) {
    CHECK(e.kind() == ErrorKind::AxiomViolation);
    CHECK_FALSE(e.report().valid());
    CHECK(e.report().violations.front().kind == AxiomKind::Jacobi);
  }
}

TEST_CASE("empty bracket table is abelian") {
  const auto L = load_algebra(doc(R"({"kind":"Fp","p":5})", R"(["a"])", R"(["b","c"])", "{}"));
  CHECK(L.dim() == 3);
  CHECK(L.field() == F5);
  CHECK(derived_subalgebra(L).is_zero());
}

TEST_CASE("integer coefficients are accepted") {
  const auto L = load_algebra(doc(R"({"kind":"Q"})", R"(["e1","e2"])", "[]", R"({"e1,e2":{"e2":1}})"));
  CHECK(L.constants() == aff2(Q).constants());
}

TEST_CASE("field override") {
  const std::string text = save_algebra(sl2(Q));
  const auto L = load_algebra(text, F5);
  CHECK(L.field() == F5);
  CHECK(L.constants() == sl2(F5).constants());
  const std::string fifth = doc(R"({"kind":"Q"})", R"(["e1","e2"])", "[]", R"({"e1,e2":{"e2":"1/5"}})");
  CHECK(kind_of([&] { load_algebra(fifth, F5); }) == ErrorKind::BadParams);
  const std::string five = doc(R"({"kind":"Q"})", R"(["e1","e2"])", "[]", R"({"e1,e2":{"e2":"5"}})");
  CHECK(kind_of([&] { load_algebra(five, F5); }) == ErrorKind::BadParams);
  CHECK(kind_of([&] { load_algebra(save_algebra(sl2(F5)), Q); }) == ErrorKind::BadParams);
  CHECK(load_algebra(five, Q).field() == Q);
}

TEST_CASE("parse_field") {
  CHECK(parse_field("Q") == Q);
  CHECK(parse_field("Fp:5") == F5);
  CHECK(parse_field("F5") == F5);
  CHECK_THROWS_AS(parse_field("Fp:4"), Error);
  CHECK_THROWS_AS(parse_field("R"), Error);
  CHECK_THROWS_AS(parse_field("Fp:"), Error);
}

TEST_CASE("catalog entries") {
  const auto A = builtin("abelian", {std::nullopt, 2, 1});
  CHECK(A.dim() == 3);
  CHECK(derived_subalgebra(A).is_zero());
  const auto C = builtin("char2_nonabelian");
  CHECK(C.field() == FieldSpec::prime(2));
  CHECK(C.constant(0, 1, 1).is_one());
  CHECK(C.constant(1, 0, 1).is_one());  // -1 = 1 in F2
  const auto O = builtin("osp(1|2)");
  CHECK(O.even_dim() == 3);
  CHECK(O.odd_dim() == 2);
  CHECK(is_perfect(O));
  CHECK(center(O).is_zero());
  CHECK(kind_of([] { builtin("nope"); }) == ErrorKind::UnknownName);
  CHECK(kind_of([] { builtin("sl2", {FieldSpec::prime(2), 0, 0}); }) == ErrorKind::BadParams);
  CHECK(kind_of([] { builtin("heisenberg"); }) == ErrorKind::BadParams);
  CHECK(center(builtin("heisenberg", {std::nullopt, 1, 1})).dim() == 1);
  for (const auto& L : catalog()) {
    CAPTURE(L.name());
    CHECK(validate_structure(L).valid());
  }
}

TEST_CASE("oracle: osp(1|2) table matches supercommutators of its realization") {
  // Supercommutators computed here with integer matrices.
  using M = std::vector<std::vector<long>>;
  const M h{{0, 0, 0}, {0, 1, 0}, {0, 0, -1}}, e{{0, 0, 0}, {0, 0, 1}, {0, 0, 0}},
      f{{0, 0, 0}, {0, 0, 0}, {0, 1, 0}}, q1{{0, 0, 1}, {1, 0, 0}, {0, 0, 0}},
      q2{{0, 1, 0}, {0, 0, 0}, {-1, 0, 0}};
  const std::vector<M> basis{h, e, f, q1, q2};
  const auto O = osp12(Q);
  for (std::size_t i = 0; i < 5; ++i)
    for (std::size_t j = 0; j < 5; ++j) {
      const long s = (i >= 3 && j >= 3) ? -1 : 1;
      const M ab = mul(basis[i], basis[j]), ba = mul(basis[j], basis[i]);
      M br(3, std::vector<long>(3));
      for (int r = 0; r < 3; ++r)
        for (int c = 0; c < 3; ++c) br[r][c] = ab[r][c] - s * ba[r][c];
      M expect(3, std::vector<long>(3, 0));
      for (std::size_t k = 0; k < 5; ++k) {
        const long ck = O.constant(i, j, k).rational().get_num().get_si();
        CHECK(O.constant(i, j, k).rational().get_den() == 1);
        for (int r = 0; r < 3; ++r)
          for (int c = 0; c < 3; ++c) expect[r][c] += ck * basis[k][r][c];
      }
      CHECK(br == expect);
    }
  // The familiar relations.
  CHECK(O.constant(3, 3, 1) == Scalar(Q, 2));
  CHECK(O.constant(4, 4, 2) == Scalar(Q, -2));
  CHECK(O.constant(3, 4, 0) == Scalar(Q, 1));
}

TEST_CASE("supermatrix constructor") {
  const GradedDims b{2, 0};
  const auto one = from_supermatrices("x", {SuperMatrix::from_ints(Q, b, {{1, 2}, {0, 3}})}, {"x"});
  CHECK(one.dim() == 1);
  CHECK(derived_subalgebra(one).is_zero());
  const auto s = from_supermatrices("sl2",
                                    {SuperMatrix::from_ints(Q, b, {{1, 0}, {0, -1}}),
                                     SuperMatrix::from_ints(Q, b, {{0, 1}, {0, 0}}),
                                     SuperMatrix::from_ints(Q, b, {{0, 0}, {1, 0}})},
                                    {"h", "e", "f"});
  CHECK(s.constants() == sl2(Q).constants());
  const auto gen_only = from_supermatrices("g", {SuperMatrix::from_ints(Q, b, {{0, 1}, {0, 0}}),
                                                 SuperMatrix::from_ints(Q, b, {{0, 0}, {1, 0}})},
                                           {"e", "f"});
  CHECK(gen_only.dim() == 3);
  CHECK(gl11(Q).dim() == 4);
  CHECK(center(gl11(Q)).dim() == 1);
  CHECK(kind_of([&] {
          from_supermatrices("d", {SuperMatrix::from_ints(Q, b, {{1, 0}, {0, 1}}),
                                   SuperMatrix::from_ints(Q, b, {{2, 0}, {0, 2}})},
                             {"a", "b"});
        }) == ErrorKind::DependentGenerators);
  CHECK(SuperMatrix::from_ints(Q, {1, 1}, {{1, 1}, {0, 0}}).parity() == ElementParity::Mixed);
}

TEST_CASE("property: round trip of every catalog document") {
  for (const auto& L : catalog()) {
    CAPTURE(L.name());
    const std::string text = save_algebra(L);
    const auto back = load_algebra(text);
    CHECK(back == L);
    CHECK(save_algebra(back) == text);
  }
}

TEST_CASE("save canonicalizes sparse documents") {
  const std::string sparse = doc(R"({"kind":"Q"})", R"(["h","e","f"])", "[]",
                                 R"({"h,f":{"f":"-2"},"e,f":{"h":"1"},"h,e":{"e":"4/2"}})");
  const std::string once = save_algebra(load_algebra(sparse));
  auto reference = sl2(Q);
  reference.rename("t");
  CHECK(once == save_algebra(reference));
  CHECK(save_algebra(load_algebra(once)) == once);
  const json j = json::parse(once);
  CHECK(j["brackets"]["f,e"]["h"] == "-1");
}

TEST_CASE("map documents") {
  const auto L = sl2(Q);
  const auto S = builtin("sl2+sl2");
  const LinearMap f(L.dims(), S.dims(), Parity::Even,
                    Matrix::from_ints(Q, {{1, 0, 0}, {0, 1, 0}, {0, 0, 1}, {-1, 0, 0}, {0, -1, 0}, {0, 0, -1}}));
  const std::string text = save_map(f, L.name(), S.name());
  const auto back = load_map(text, L, S);
  CHECK(back.map == f);
  CHECK(back.domain == "sl2");
  CHECK(save_map(back.map, back.domain, back.codomain) == text);
  CHECK(kind_of([&] { load_map(text, S, L); }) == ErrorKind::AlgebraMismatch);
  CHECK(kind_of([&] { load_map("[]", L, S); }) == ErrorKind::ParseError);
  const auto O = osp12(Q);
  json bad = json::parse(save_map(LinearMap::identity(Q, O.dims()), O.name(), O.name()));
  bad["matrix"][0][3] = "1";
  CHECK(kind_of([&] { load_map(bad.dump(), O, O); }) == ErrorKind::ParseError);
}
