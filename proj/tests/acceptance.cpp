// Acceptance run: one line per criterion with its wall time and limit.
// Exit status is nonzero if any criterion fails.

#include <chrono>
#include <cstdio>
#include <functional>
#include <random>
#include <string>

#include "superkit/catalog.hpp"
#include "superkit/io.hpp"
#include "superkit/triple_hom.hpp"
#include "support.hpp"

using namespace superkit;
namespace ts = testing_support;

namespace {

const FieldSpec Q = FieldSpec::rationals();
const FieldSpec F2 = FieldSpec::prime(2);
const FieldSpec F5 = FieldSpec::prime(5);

struct Outcome {
  bool ok = true;
  std::string note;
  void require(bool cond, const std::string& what) {
    if (!cond && ok) {
      ok = false;
      note = what;
    }
  }
};

std::vector<LieSuperalgebra> catalog() {
  std::vector<LieSuperalgebra> out;
  for (const auto& name : builtin_names()) {
    BuiltinParams p;
    p.even = 2;
    p.odd = 1;
    out.push_back(builtin(name, p));
  }
  out.push_back(osp12(F5));
  out.push_back(sl2(FieldSpec::prime(3)));
  return out;
}

Matrix zero_or_ad(const LieSuperalgebra& L, const Vector& v) {
  return is_zero(v) ? Matrix(L.field(), L.dim(), L.dim()) : ad(L, v).matrix();
}

Outcome axiom_validation() {
  Outcome o;
  for (const auto& L : catalog()) o.require(validate_structure(L).valid(), L.name() + " invalid");
  const auto O = osp12(Q);
  const std::size_t n = O.dim();
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = 0; j < n; ++j)
      for (std::size_t k = 0; k < n; ++k) {
        LieSuperalgebra M = O;
        M.set_constant(i, j, k, O.constant(i, j, k) + Scalar::one(Q));
        o.require(!validate_structure(M).violations.empty(),
                  "mutation at (" + std::to_string(i) + "," + std::to_string(j) + "," +
                      std::to_string(k) + ") undetected");
      }
  return o;
}

Outcome derivation_equalities() {
  Outcome o;
  for (const auto& L : {sl2(Q), osp12(Q)}) {
    const auto r = verify_theorem_one(L);
    o.require(r.hypotheses_hold(), L.name() + ": hypotheses");
    o.require(r.claim1 == CheckStatus::Pass, L.name() + ": TDer = Der");
    o.require(r.claim2 == CheckStatus::Pass, L.name() + ": TDer(Der) = ad(Der)");
    o.require(all_passed(r.checks), L.name() + ": intermediate checks");
    const std::size_t n = L.dim();
    o.require(r.der_dims.total() == n && r.tder_dims.total() == n && r.inner_dims.total() == n,
              L.name() + ": dimensions");
    std::size_t der_oracle = 0, tder_oracle = 0;
    for (Parity p : {Parity::Even, Parity::Odd}) {
      der_oracle += ts::probe_solution_dim(L, p, ts::derivation_defect);
      tder_oracle += ts::probe_solution_dim(L, p, ts::triple_defect);
    }
    o.require(der_oracle == n && tder_oracle == n, L.name() + ": oracle dimensions");
  }
  return o;
}

Outcome char2_counterexample() {
  Outcome o;
  const auto L = builtin("char2_nonabelian");
  const auto der = derivation_space(L), tder = triple_derivation_space(L);
  const auto id = LinearMap::identity(F2, L.dims());
  o.require(tder.contains(id), "identity not in TDer");
  o.require(!der.contains(id), "identity in Der");
  std::vector<LinearMap> der_found, tder_found;
  for (unsigned bits = 0; bits < 16; ++bits) {
    Matrix m(F2, 2, 2);
    for (unsigned b = 0; b < 4; ++b) m.at(b / 2, b % 2) = Scalar(F2, (bits >> b) & 1);
    const LinearMap D(L.dims(), L.dims(), Parity::Even, m);
    const bool is_der = is_zero(ts::derivation_defect(L, m, Parity::Even));
    const bool is_tder = is_zero(ts::triple_defect(L, m, Parity::Even));
    o.require(der.contains(D) == is_der, "Der membership differs from enumeration");
    o.require(tder.contains(D) == is_tder, "TDer membership differs from enumeration");
    if (is_der) der_found.push_back(D);
    if (is_tder) tder_found.push_back(D);
  }
  o.require(GradedEndSpace::span(F2, L.dims(), der_found) == der, "Der span differs");
  o.require(GradedEndSpace::span(F2, L.dims(), tder_found) == tder, "TDer span differs");
  o.require(der_found.size() == (1u << der.dim()) && tder_found.size() == (1u << tder.dim()),
            "enumeration counts");
  return o;
}

Outcome structural_properties() {
  Outcome o;
  std::mt19937 rng(2024);
  std::vector<LieSuperalgebra> algebras{sl2(Q), osp12(Q), builtin("sl2+sl2")};
  for (int i = 0; i < 8; ++i) algebras.push_back(ts::random_matrix_algebra(rng, F5, 4));
  for (int i = 0; i < 2; ++i) algebras.push_back(ts::random_basis_change(rng, sl2(F5)));
  for (const auto& L : algebras) {
    const std::string tag = L.name() + "/" + L.field().to_string();
    const auto der = derivation_space(L), tder = triple_derivation_space(L);
    const auto inner = inner_derivation_space(L);
    const auto tb = tder.basis();
    for (const auto& a : tb)
      for (const auto& b : tb) o.require(tder.contains(supercommutator(a, b)), tag + ": TDer closure");
    for (const auto& D : der.basis())
      for (std::size_t x = 0; x < L.dim(); ++x)
        o.require(supercommutator(D, ad_basis(L, x)).matrix() ==
                      zero_or_ad(L, D.apply(L.basis_vector(x))),
                  tag + ": [D, ad x] = ad(Dx)");
    if (!is_perfect(L)) continue;
    for (const auto& D : tb)
      for (std::size_t x = 0; x < L.dim(); ++x)
        o.require(inner.contains(supercommutator(D, ad_basis(L, x))), tag + ": [D, ad x] in ad(L)");
    if (L.field().has_half())
      o.require(tder_centralizer_of_inner(L).is_zero(), tag + ": centralizer of ad(L) in TDer");
    if (!center(L).is_zero()) continue;
    for (const auto& D : tb) {
      const auto delta = delta_of_triple_derivation(L, D);
      o.require(delta == delta_of_triple_derivation(L, D, PairOrder::Reversed),
                tag + ": delta depends on the expression");
      o.require(der.contains(delta), tag + ": delta not a derivation");
      for (std::size_t k = 0; k < L.dim(); ++k)
        o.require(supercommutator(D, ad_basis(L, k)).matrix() ==
                      zero_or_ad(L, delta.apply(L.basis_vector(k))),
                  tag + ": [D, ad e_k] = ad(delta e_k)");
    }
  }
  return o;
}

Outcome triple_hom_pipeline() {
  Outcome o;
  const auto O = osp12(Q);
  const auto id = LinearMap::identity(Q, O.dims());
  const LinearMap neg(O.dims(), O.dims(), Parity::Even, id.matrix() * Scalar(Q, -1));
  o.require(decompose_triple_hom(id, O, O).verdict == TripleHomVerdict::Homomorphism, "id");
  o.require(decompose_triple_hom(neg, O, O).verdict == TripleHomVerdict::AntiHomomorphism, "-id");

  const auto L = sl2(Q);
  const auto S = builtin("sl2+sl2");
  const auto f = ts::map_from_ints(L, S, {{1, 0, 0}, {0, 1, 0}, {0, 0, 1}, {-1, 0, 0}, {0, -1, 0}, {0, 0, -1}});
  const auto r = decompose_triple_hom(f, L, S);
  o.require(r.verdict == TripleHomVerdict::DirectSum, "x -> (x,-x) verdict " + to_string(r.verdict));
  if (!o.ok) return o;
  // Closed forms: delta_f(x) = (x, x), so f1 = (x, 0), f2 = (0, -x).
  const Matrix f1 = Matrix::from_ints(Q, {{1, 0, 0}, {0, 1, 0}, {0, 0, 1}, {0, 0, 0}, {0, 0, 0}, {0, 0, 0}});
  const Matrix f2 = Matrix::from_ints(Q, {{0, 0, 0}, {0, 0, 0}, {0, 0, 0}, {-1, 0, 0}, {0, -1, 0}, {0, 0, -1}});
  o.require(r.f1 && r.f1->matrix() == f1, "f1");
  o.require(r.f2 && r.f2->matrix() == f2, "f2");
  const Matrix delta = r.envelope->inclusion.matrix() * r.delta->matrix();
  o.require(delta == f1 - f2, "delta_f");
  const auto to_target = [&](const Subspace& U) {
    std::vector<Vector> vs;
    for (const auto& v : U.vectors()) vs.push_back(r.envelope->inclusion.apply(v));
    return Subspace::span(Q, S.dim(), vs);
  };
  o.require(to_target(*r.m_plus) == map_image(LinearMap(L.dims(), S.dims(), Parity::Even, f1)), "M+");
  o.require(to_target(*r.m_minus) == map_image(LinearMap(L.dims(), S.dims(), Parity::Even, f2)), "M-");
  bool cross_checked = false;
  for (const auto& c : r.checks) {
    o.require(c.passed(), "check " + c.name);
    if (c.name == "proof_route_projections_agree") cross_checked = true;
  }
  o.require(cross_checked, "projection cross-check missing");
  return o;
}

Outcome decomposition() {
  Outcome o;
  const auto L = builtin("sl2+osp12");
  o.require(centroid(L).dim() == 2, "centroid dimension");
  const auto dec = decompose_indecomposable(L);
  o.require(dec.decided() && dec.ideals.size() == 2, "two ideals");
  if (!o.ok) return o;
  std::vector<std::size_t> dims{dec.ideals[0].dim(), dec.ideals[1].dim()};
  std::sort(dims.begin(), dims.end());
  o.require(dims == std::vector<std::size_t>{3, 5}, "ideal dimensions");
  const Matrix& p0 = dec.projections[0].matrix();
  const Matrix& p1 = dec.projections[1].matrix();
  const Matrix zero(Q, L.dim(), L.dim());
  o.require(p0 * p0 == p0 && p1 * p1 == p1, "idempotent");
  o.require(p0 * p1 == zero && p1 * p0 == zero, "orthogonal");
  o.require(p0 + p1 == Matrix::identity(Q, L.dim()), "sum to identity");
  return o;
}

Outcome round_trip() {
  Outcome o;
  for (const auto& L : catalog()) {
    const std::string text = save_algebra(L);
    const auto back = load_algebra(text);
    o.require(back == L, L.name() + ": load(save) differs");
    o.require(save_algebra(back) == text, L.name() + ": save not idempotent");
  }
  return o;
}

}  // namespace

int main() {
  struct Criterion {
    int id;
    const char* title;
    double limit_s;
    std::function<Outcome()> run;
  };
  const Criterion criteria[] = {
      {1, "axiom validation and mutation detection", 1.0, axiom_validation},
      {2, "TDer = Der and TDer(Der) = ad(Der) on sl2, osp(1|2)", 10.0, derivation_equalities},
      {3, "char 2: identity in TDer but not Der, full F2 enumeration", 1.0, char2_counterexample},
      {4, "derivation property suite", 60.0, structural_properties},
      {5, "triple homomorphism pipeline", 5.0, triple_hom_pipeline},
      {6, "decomposition of sl2+osp(1|2)", 5.0, decomposition},
      {7, "catalog round trip", 1.0, round_trip},
  };
  int failures = 0;
  for (const auto& c : criteria) {
    const auto start = std::chrono::steady_clock::now();
    Outcome o;
    try {
      o = c.run();
    } catch (const std::exception& e) {
      o.ok = false;
      o.note = std::string("exception: ") + e.what();
    }
    const double secs =
        std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
    if (secs > c.limit_s) o.require(false, "time limit exceeded");
    std::printf("criterion %d: %s  %s  (%.3f s, limit %.0f s)%s%s\n", c.id, o.ok ? "PASS" : "FAIL",
                c.title, secs, c.limit_s, o.ok ? "" : "  -- ", o.note.c_str());
    if (!o.ok) ++failures;
  }
  return failures == 0 ? 0 : 1;
}
