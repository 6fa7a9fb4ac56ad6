#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include "doctest.h"

#include <random>

#include "superkit/catalog.hpp"
#include "superkit/triple_hom.hpp"
#include "support.hpp"

using namespace superkit;
using testing_support::map_from_ints;

namespace {

const FieldSpec Q = FieldSpec::rationals();
const FieldSpec F5 = FieldSpec::prime(5);

LinearMap scaled_identity(const LieSuperalgebra& L, long s) {
  return LinearMap(L.dims(), L.dims(), Parity::Even, Matrix::identity(L.field(), L.dim()) * Scalar(L.field(), s));
}

/// x -> (x, -x) from sl2 into sl2+sl2.
LinearMap diagonal_twist(const LieSuperalgebra& L, const LieSuperalgebra& S) {
  return map_from_ints(L, S,
                       {{1, 0, 0}, {0, 1, 0}, {0, 0, 1}, {-1, 0, 0}, {0, -1, 0}, {0, 0, -1}});
}

/// Matrix of B: coordinates in the changed basis -> original coordinates,
/// recovered from the structure-preserving relation between the two tables.
LinearMap change_of_basis_hom(const LieSuperalgebra& from, const LieSuperalgebra& to,
                              const Matrix& B) {
  return LinearMap(from.dims(), to.dims(), Parity::Even, B);
}

}  // namespace

TEST_CASE("classification of linear maps") {
  const auto L = sl2(Q);
  CHECK(classify_linear_map(scaled_identity(L, 1), L, L) == MapClass::Homomorphism);
  CHECK(classify_linear_map(scaled_identity(L, -1), L, L) == MapClass::AntiHomomorphism);
  CHECK(classify_linear_map(scaled_identity(L, 0), L, L) == MapClass::Both);
  const auto detail = classify_linear_map_detailed(scaled_identity(L, 2), L, L);
  CHECK(detail.kind == MapClass::Neither);
  CHECK(detail.hom_violation);
  CHECK(detail.anti_violation);
  const auto O = osp12(Q);
  LinearMap odd(O.dims(), O.dims(), Parity::Odd, Matrix(Q, 5, 5));
  CHECK_THROWS_AS(classify_linear_map(odd, O, O), Error);
  CHECK_THROWS_AS(is_triple_hom(odd, O, O), Error);
}

TEST_CASE("triple homomorphism identity") {
  const auto L = sl2(Q);
  CHECK(is_triple_hom(scaled_identity(L, 1), L, L));
  CHECK(is_triple_hom(scaled_identity(L, -1), L, L));
  const auto proj = map_from_ints(L, L, {{1, 0, 0}, {0, 0, 0}, {0, 0, 0}});
  CHECK_FALSE(is_triple_hom(proj, L, L));
  const auto v = triple_hom_violation(proj, L, L);
  REQUIRE(v);
  // Check the witness directly.
  const Vector x = L.basis_vector((*v)[0]), y = L.basis_vector((*v)[1]), z = L.basis_vector((*v)[2]);
  CHECK_FALSE(proj.apply(L.bracket(x, L.bracket(y, z))) ==
              L.bracket(proj.apply(x), L.bracket(proj.apply(y), proj.apply(z))));
}

TEST_CASE("enveloping algebra of the image") {
  const auto L = sl2(Q);
  CHECK(enveloping_of_image(scaled_identity(L, 1), L, L).algebra.dim() == 3);
  CHECK(enveloping_of_image(scaled_identity(L, 0), L, L).algebra.dim() == 0);
  const auto S = builtin("sl2+sl2");
  const auto env = enveloping_of_image(diagonal_twist(L, S), L, S);
  CHECK(env.algebra.dim() == 6);
  CHECK(env.subspace.is_full());
}

TEST_CASE("delta_f and the plus/minus split") {
  const auto L = sl2(Q);
  for (long s : {1, -1}) {
    const auto env = enveloping_of_image(scaled_identity(L, s), L, L);
    const auto d = delta_f(env.map_into, L, env.algebra);
    CHECK(d.matrix() == Matrix::identity(Q, 3));
    const auto split = split_m_plus_minus(env.map_into, d, env.algebra);
    CHECK(split.plus.dim() == (s == 1 ? 3u : 0u));
    CHECK(split.minus.dim() == (s == 1 ? 0u : 3u));
  }
  const auto S = builtin("sl2+sl2");
  const auto env = enveloping_of_image(diagonal_twist(L, S), L, S);
  const auto d = delta_f(env.map_into, L, env.algebra);
  const Matrix expected_in_target =
      Matrix::from_ints(Q, {{1, 0, 0}, {0, 1, 0}, {0, 0, 1}, {1, 0, 0}, {0, 1, 0}, {0, 0, 1}});
  CHECK(env.inclusion.matrix() * d.matrix() == expected_in_target);
  CHECK(d == delta_f(env.map_into, L, env.algebra, PairOrder::Reversed));
  const auto split = split_m_plus_minus(env.map_into, d, env.algebra);
  const Subspace first = map_image(map_from_ints(
      L, S, {{1, 0, 0}, {0, 1, 0}, {0, 0, 1}, {0, 0, 0}, {0, 0, 0}, {0, 0, 0}}));
  const Subspace second = map_image(map_from_ints(
      L, S, {{0, 0, 0}, {0, 0, 0}, {0, 0, 0}, {1, 0, 0}, {0, 1, 0}, {0, 0, 1}}));
  CHECK(env.subspace.is_full());
  CHECK(split.plus == first);
  CHECK(split.minus == second);
  CHECK(all_passed(split.checks));
}

TEST_CASE("delta_f rejects unmet hypotheses") {
  const auto A = aff2(Q);
  const auto env = enveloping_of_image(scaled_identity(A, 1), A, A);
  CHECK_THROWS_AS(delta_f(env.map_into, A, env.algebra), Error);
}

TEST_CASE("decompose_triple_hom verdicts") {
  const auto O = osp12(Q);
  CHECK(decompose_triple_hom(scaled_identity(O, 1), O, O).verdict == TripleHomVerdict::Homomorphism);
  CHECK(decompose_triple_hom(scaled_identity(O, -1), O, O).verdict ==
        TripleHomVerdict::AntiHomomorphism);

  const auto L = sl2(Q);
  const auto S = builtin("sl2+sl2");
  const auto r = decompose_triple_hom(diagonal_twist(L, S), L, S);
  REQUIRE(r.verdict == TripleHomVerdict::DirectSum);
  CHECK(all_passed(r.checks));
  REQUIRE(r.f1);
  REQUIRE(r.f2);
  CHECK(r.f1->matrix() ==
        Matrix::from_ints(Q, {{1, 0, 0}, {0, 1, 0}, {0, 0, 1}, {0, 0, 0}, {0, 0, 0}, {0, 0, 0}}));
  CHECK(r.f2->matrix() ==
        Matrix::from_ints(Q, {{0, 0, 0}, {0, 0, 0}, {0, 0, 0}, {-1, 0, 0}, {0, -1, 0}, {0, 0, -1}}));
  CHECK(classify_linear_map(*r.f1, L, S) == MapClass::Homomorphism);
  CHECK(classify_linear_map(*r.f2, L, S) == MapClass::AntiHomomorphism);

  const auto proj = map_from_ints(L, L, {{1, 0, 0}, {0, 0, 0}, {0, 0, 0}});
  const auto bad = decompose_triple_hom(proj, L, L);
  CHECK(bad.verdict == TripleHomVerdict::NotTripleHom);
  CHECK(bad.triple_violation);

  const auto A = aff2(Q);
  CHECK(decompose_triple_hom(scaled_identity(A, 1), A, A).verdict ==
        TripleHomVerdict::HypothesisViolated);
}

TEST_CASE("property: homomorphisms, anti-homomorphisms and their sums are triple homomorphisms") {
  std::mt19937 rng(41);
  const auto L = sl2(Q);
  const auto S = builtin("sl2+sl2");
  std::vector<std::tuple<LinearMap, LieSuperalgebra, LieSuperalgebra>> homs;
  // Embeddings into each summand.
  homs.emplace_back(map_from_ints(L, S, {{1, 0, 0}, {0, 1, 0}, {0, 0, 1}, {0, 0, 0}, {0, 0, 0}, {0, 0, 0}}), L, S);
  homs.emplace_back(map_from_ints(L, S, {{1, 0, 0}, {0, 1, 0}, {0, 0, 1}, {1, 0, 0}, {0, 1, 0}, {0, 0, 1}}), L, S);
  // Projection of the sum onto its first summand.
  homs.emplace_back(map_from_ints(S, L, {{1, 0, 0, 0, 0, 0}, {0, 1, 0, 0, 0, 0}, {0, 0, 1, 0, 0, 0}}), S, L);
  // Random basis changes give isomorphisms onto the original algebra.
  for (const auto& base : {sl2(F5), osp12(F5), osp12(Q)}) {
    for (int trial = 0; trial < 3; ++trial) {
      Matrix B;
      const auto changed = testing_support::random_basis_change(rng, base, &B);
      homs.emplace_back(change_of_basis_hom(changed, base, B), changed, base);
    }
  }
  for (const auto& [f, from, to] : homs) {
    CAPTURE(from.name());
    CHECK(classify_linear_map(f, from, to) == MapClass::Homomorphism);
    CHECK(is_triple_hom(f, from, to));
    const LinearMap anti(f.domain(), f.codomain(), Parity::Even, f.matrix() * Scalar(f.field(), -1));
    CHECK(classify_linear_map(anti, from, to) == MapClass::AntiHomomorphism);
    CHECK(is_triple_hom(anti, from, to));
  }
  // A homomorphism into one ideal plus an anti-homomorphism into a commuting
  // one: x -> (Bx, -Bx) from a rebased osp(1|2) into osp(1|2)+osp(1|2).
  for (const auto& base : {osp12(Q), osp12(F5)}) {
    Matrix B;
    const auto changed = testing_support::random_basis_change(rng, base, &B);
    const auto sum = direct_sum(base, base);
    const Matrix m = sum.embed_first.matrix() * B - sum.embed_second.matrix() * B;
    const LinearMap f(changed.dims(), sum.algebra.dims(), Parity::Even, m);
    CHECK(classify_linear_map(f, changed, sum.algebra) == MapClass::Neither);
    CHECK(is_triple_hom(f, changed, sum.algebra));
    const auto r = decompose_triple_hom(f, changed, sum.algebra);
    CHECK(r.verdict == TripleHomVerdict::DirectSum);
    CHECK(all_passed(r.checks));
  }
}
